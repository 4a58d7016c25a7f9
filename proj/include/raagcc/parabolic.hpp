#ifndef RAAGCC_PARABOLIC_HPP
#define RAAGCC_PARABOLIC_HPP

#include <map>
#include <utility>
#include <vector>

#include "raagcc/relgroup.hpp"

namespace raagcc {

struct ParabolicDescriptor {
  int class_rep = 0;
  int j = 0;
  std::vector<int> class_order;
  VertexSet delta;
  // Stabiliser of delta as a relative group; left unsaturated.
  RelOutSpec spec;
};

struct CoxeterDescriptor {
  std::vector<int> class_sizes;
  int coxeter_rank = 0;
};

int rank(RelOutSpec const &spec);

// Optional per-class vertex orderings, keyed by the least class member.
using ClassOrdering = std::map<int, std::vector<int>>;

std::vector<ParabolicDescriptor> maximal_parabolics(RelOutSpec const &spec, ClassOrdering const &ordering = {});

// A pick names a class by any member together with j in 1..|class|-1.
using Pick = std::pair<int, int>;
RelOutSpec parabolic_from_picks(RelOutSpec const &spec, std::vector<Pick> const &picks,
                                ClassOrdering const &ordering = {});

CoxeterDescriptor aut0(RelOutSpec const &spec);

// ρ_{v_1}^{v_n} for the descriptor's class ordering.
LaurenceGenerator properness_witness(ParabolicDescriptor const &p);

} // namespace raagcc

#endif // RAAGCC_PARABOLIC_HPP
