#ifndef RAAGCC_FINITE_COSET_HPP
#define RAAGCC_FINITE_COSET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "raagcc/finite_group.hpp"
#include "raagcc/homology.hpp"
#include "raagcc/poset.hpp"

namespace raagcc {

// Proper subgroups, deduplicated and sorted by subset_less.
struct SubgroupFamily {
  std::vector<ElementSet> members;

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
  bool contains(ElementSet const &h) const;
};

// Throws ImproperSubgroup for non-subgroups and for G itself.
SubgroupFamily make_family(FiniteGroup const &g, std::vector<ElementSet> members);

struct Coset {
  int member = 0;  // index into the subgroup list
  ElementSet elements;
};

struct CosetNerve {
  std::vector<Coset> cosets;
  SimplicialComplex complex;
};

// Nerve of the cosets of the listed subgroups. Entries need not be proper
// or distinct; each position contributes its own cosets.
CosetNerve coset_nerve(FiniteGroup const &g, std::vector<ElementSet> const &subgroups);

struct CosetStructures {
  std::vector<Coset> cosets;
  SimplicialComplex complex;  // CC(G, H)
  FinitePoset poset;          // CP(G, H)
};

CosetStructures coset_structures(FiniteGroup const &g, SubgroupFamily const &family);

SubgroupFamily intersection_closure(FiniteGroup const &g, SubgroupFamily const &family);

struct FamilySplit {
  SubgroupFamily lower;  // HN != G
  SubgroupFamily upper;  // KN = G
};
FamilySplit split_family(FiniteGroup const &g, SubgroupFamily const &family, ElementSet const &n);

struct QuotientFamily {
  Quotient q;
  SubgroupFamily family;  // images of the members with HN != G
};
QuotientFamily quotient_family(FiniteGroup const &g, SubgroupFamily const &family, ElementSet const &n);

struct KernelFamily {
  Embedded n;
  SubgroupFamily family;  // K cap N for the members with KN = G, inside n.group
};
KernelFamily intersect_family(FiniteGroup const &g, SubgroupFamily const &family, ElementSet const &n);

struct DividedVerdict {
  bool divided = false;
  bool strongly_divided = false;
};
DividedVerdict divided_predicates(FiniteGroup const &g, SubgroupFamily const &family, ElementSet const &n);

struct SesReport {
  HomologyResult left;   // CC(G, H)
  HomologyResult right;  // CC(G/N, H bar) * CC(N, H cap N)
  std::size_t quotient_members = 0;
  std::size_t kernel_members = 0;
  bool homology_equal = false;
  // CC(G, H^N) -> CC(N, H cap N), nK -> n(K cap N)
  bool kernel_isomorphism = false;
  std::string detail;

  bool ok() const { return homology_equal && kernel_isomorphism; }
};
// Throws NotStronglyDivided when the hypothesis fails.
SesReport verify_ses_join(FiniteGroup const &g, SubgroupFamily const &family, ElementSet const &n,
                          HomologyOptions const &opts = {});

struct GenerationReport {
  bool connected = false;
  bool generates = false;

  bool agree() const { return connected == generates; }
};
GenerationReport generation_check(FiniteGroup const &g, SubgroupFamily const &family);

struct LemmaCount {
  std::size_t checked = 0;
  std::size_t failures = 0;
};
// (HN cap K)N = HN whenever KN = G, over all subgroups and normal N.
LemmaCount check_multiplied_by_n(FiniteGroup const &g);
// K1 != K2 and (K1 cap K2)N = G imply K1 cap N != K2 cap N.
LemmaCount check_distinct_in_quotient(FiniteGroup const &g);

struct ClosureReport {
  HomologyResult family;       // CC(G, H)
  HomologyResult closure;      // CC(G, H~)
  HomologyResult closure_poset; // CP(G, H~)

  bool ok() const { return family == closure && closure == closure_poset; }
};
ClosureReport closure_check(FiniteGroup const &g, SubgroupFamily const &family, HomologyOptions const &opts = {});

struct SesInstance {
  std::string group_name;
  FiniteGroup group;
  ElementSet n;
  SubgroupFamily family;
};
// Strongly divided instance over a catalogue group of order <= max_order.
SesInstance random_strongly_divided(std::uint64_t seed, int max_order = 48);
SubgroupFamily random_family(FiniteGroup const &g, std::uint64_t seed, int max_members = 3);

// Proper nonzero subspaces of F_q^n; vectors coded in base q.
struct SubspaceLattice {
  int n = 0;
  int q = 0;
  std::vector<boost::dynamic_bitset<>> subspaces;  // over all q^n vectors
  std::vector<int> dims;
  FinitePoset poset;
};
SubspaceLattice subspace_poset(int n, int q);

// images[g][v] is the image of vertex v under element g.
struct GroupAction {
  std::vector<std::vector<int>> images;
};

struct ActionInstance {
  std::string name;
  FiniteGroup group;
  SimplicialComplex complex;
  GroupAction action;
  Face facet;
};
// GL_n(F_q) on the flag complex, facet the standard flag.
ActionInstance flag_complex_instance(int n, int q);
// S_n on the order complex of proper nonempty subsets of {0..n-1}.
ActionInstance coxeter_complex_instance(int n);
// Trivial group on a k-vertex simplex.
ActionInstance trivial_simplex_instance(int k);

struct DetectReport {
  bool action_valid = false;
  bool fundamental_domain = false;
  bool isomorphism = false;
  std::vector<int> stabilizer_orders;
  std::string detail;

  bool ok() const { return action_valid && fundamental_domain && isomorphism; }
};
// Throws HypothesisViolated if the action is not simplicial or the facet is not maximal.
DetectReport detect_coset_complex(FiniteGroup const &g, SimplicialComplex const &k, GroupAction const &action,
                                  Face const &facet);

} // namespace raagcc

#endif // RAAGCC_FINITE_COSET_HPP
