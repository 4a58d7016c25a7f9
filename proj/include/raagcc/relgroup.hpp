#ifndef RAAGCC_RELGROUP_HPP
#define RAAGCC_RELGROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "raagcc/graph.hpp"

namespace raagcc {

// Out^0(A_Γ; G, H^t): pure outer automorphisms stabilising every member of
// `stabilized` and acting trivially on every member of `trivial`.
struct RelOutSpec {
  Graph graph;
  std::vector<VertexSet> stabilized;
  std::vector<VertexSet> trivial;
  bool saturated = false;

  RelOutSpec() = default;
  explicit RelOutSpec(Graph g, std::vector<VertexSet> stab = {},
                      std::vector<VertexSet> triv = {});

  // Sorts and deduplicates both families; rejects empty or full members.
  void normalize();
};

enum class GeneratorKind { Inversion, Transvection, PartialConjugation };

struct LaurenceGenerator {
  GeneratorKind kind = GeneratorKind::Inversion;
  int v = 0;
  int w = -1;   // transvection target
  VertexSet K;  // partial conjugation support

  static LaurenceGenerator inversion(int v) { return {GeneratorKind::Inversion, v, -1, {}}; }
  static LaurenceGenerator transvection(int v, int w) { return {GeneratorKind::Transvection, v, w, {}}; }
  static LaurenceGenerator partial_conjugation(int v, VertexSet K) {
    return {GeneratorKind::PartialConjugation, v, -1, K};
  }

  friend bool operator==(LaurenceGenerator const &a, LaurenceGenerator const &b) {
    return a.kind == b.kind && a.v == b.v && a.w == b.w && a.K == b.K;
  }
  friend bool operator<(LaurenceGenerator const &a, LaurenceGenerator const &b);
};

std::string describe(Graph const &g, LaurenceGenerator const &gen);

enum class ClassKind { Abelian, Free, Singleton };
char const *class_kind_name(ClassKind k);

struct EquivClass {
  VertexSet members;
  ClassKind kind;
};

enum class Action { Trivial, Stabilizes, Moves };
char const *action_name(Action a);

bool g_leq(RelOutSpec const &spec, int v, int w);
// Classes ordered by least member.
std::vector<EquivClass> equiv_classes(RelOutSpec const &spec);
EquivClass class_of(RelOutSpec const &spec, int v);

// Components of Γ∖st(v) under the relative adjacency used by the
// containment criterion for partial conjugations.
std::vector<VertexSet> relative_components(RelOutSpec const &spec, int v);

void check_generator(Graph const &g, LaurenceGenerator const &gen);
bool contains_generator(RelOutSpec const &spec, LaurenceGenerator const &gen);
Action generator_action(Graph const &g, LaurenceGenerator const &gen, VertexSet delta);
std::vector<LaurenceGenerator> enumerate_generators(RelOutSpec const &spec);

bool group_stabilizes(RelOutSpec const &spec, VertexSet delta);
// True iff some generator of the group acts non-trivially on delta.
bool acts_nontrivially(RelOutSpec const &spec, VertexSet delta);

struct SaturateOptions {
  int max_vertices = 24;
  long max_candidates = 1L << 20;
};

RelOutSpec saturate(RelOutSpec const &spec, SaturateOptions const &opts = {});

struct Cone {
  VertexSet geq;
  VertexSet gt;
};
Cone conical(RelOutSpec const &spec, int v);

struct Restriction {
  RelOutSpec image;
  RelOutSpec kernel;
};

// Families of the image over the full subgraph on delta: traces of the
// given members, dropping empty and full traces.
std::vector<VertexSet> trace_family(std::vector<VertexSet> const &family, VertexSet delta);
RelOutSpec restrict_to_image(RelOutSpec const &spec, VertexSet delta);
Restriction restrict(RelOutSpec const &spec, VertexSet delta);

struct Projection {
  VertexSet Z;
  int twist_rank = 0;
  VertexSet delta;
  RelOutSpec image;
};

Projection project_center(RelOutSpec const &spec, int v);

} // namespace raagcc

#endif // RAAGCC_RELGROUP_HPP
