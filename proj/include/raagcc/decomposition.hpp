#ifndef RAAGCC_DECOMPOSITION_HPP
#define RAAGCC_DECOMPOSITION_HPP

#include <string>
#include <vector>

#include "raagcc/relgroup.hpp"

namespace raagcc {

enum class BaseKind {
  LeftmostKernel,
  TwistGroup,
  GeneralLinear,
  FouxeRabinovitch,
  CyclicOrderTwo,
  PartialConjugationGroup
};

char const *base_kind_name(BaseKind k);

struct BaseCase {
  BaseKind kind = BaseKind::LeftmostKernel;
  // GeneralLinear: n; FouxeRabinovitch: free rank; TwistGroup: rank.
  int n = 0;
  // The equivalence class carried by GeneralLinear, FouxeRabinovitch and
  // CyclicOrderTwo leaves, in the leaf's own graph.
  VertexSet klass;
  std::vector<VertexSet> factors;
  RelOutSpec spec;
  std::string note;

  // Contribution to the rank: n-1 for GeneralLinear and FouxeRabinovitch.
  int contribution() const;
};

enum class NodeKind { Restrict, Project, Base };

struct DecompNode {
  NodeKind kind = NodeKind::Base;
  RelOutSpec spec;
  int current = -1;  // active vertex of a conical node, -1 at the root level
  VertexSet delta;   // Restrict: the restriction target; Project: the image graph
  VertexSet Z;       // Project
  int twist_rank = 0;
  BaseCase base;     // Base
  // Restrict: {image, kernel}; Project: {twist group leaf, image}.
  std::vector<DecompNode> children;
};

struct DecomposeOptions {
  SaturateOptions saturate;
};

DecompNode decompose(RelOutSpec const &spec, DecomposeOptions const &opts = {});

int predicted_sphere_dimension(RelOutSpec const &spec);

std::vector<BaseCase const *> leaves(DecompNode const &root);
// One token per leaf, e.g. "FouxeRabinovitch(2;0)"; sorted.
std::vector<std::string> base_case_signature(DecompNode const &root);

struct AuditReport {
  bool rank_sum = false;        // leaf contributions sum to the rank
  bool class_leaves = false;    // each class ends in a class leaf
  bool dichotomy = false;       // every generator stabilises or moves
  int rank = 0;
  int contribution = 0;
  int restrict_steps = 0;
  std::vector<std::string> failures;

  bool ok() const { return rank_sum && class_leaves && dichotomy; }
};

AuditReport verify_tree(RelOutSpec const &spec, DecompNode const &tree);

std::string render_text(DecompNode const &root);

} // namespace raagcc

#endif // RAAGCC_DECOMPOSITION_HPP
