#ifndef RAAGCC_SUBGRAPH_POSET_HPP
#define RAAGCC_SUBGRAPH_POSET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "raagcc/homology.hpp"
#include "raagcc/poset.hpp"

namespace raagcc {

struct MultiEdge {
  int u = 0;
  int v = 0;
  std::string id;

  bool is_loop() const { return u == v; }
};

// Finite graph with loops and parallel edges. Subgraphs are edge subsets.
class Multigraph {
public:
  Multigraph() = default;
  explicit Multigraph(std::vector<std::string> vertices);

  int add_vertex(std::string label);
  void add_edge(int u, int v, std::string id);
  void add_edge(std::string const &u, std::string const &v, std::string id);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::vector<std::string> const &vertices() const { return vertices_; }
  std::vector<MultiEdge> const &edges() const { return edges_; }
  std::string const &label(int v) const;
  int vertex(std::string const &label) const;
  int edge_index(std::string const &id) const;

  int component_count() const;
  bool connected() const { return component_count() <= 1; }
  // |E| - |V| + c
  int rank() const;
  // Loops count twice.
  std::vector<int> valences() const;

private:
  std::vector<std::string> vertices_;
  std::vector<MultiEdge> edges_;
};

struct LabelledGraph {
  Multigraph graph;
  std::vector<int> labelling;  // labelling[i] is the vertex carrying label i + 1

  bool is_labelled(int v) const;
  void validate() const;
};

enum class EdgeOp { Delete, Collapse };

Multigraph edge_op(EdgeOp op, Multigraph const &g, std::string const &edge);
// Carries the labelling along; a collapsed edge sends both endpoints to v_e.
LabelledGraph edge_op(EdgeOp op, LabelledGraph const &gl, std::string const &edge);

// Unique maximal core subgraph.
LabelledGraph core(LabelledGraph const &gl);
bool is_core_graph(LabelledGraph const &gl);

using EdgeMask = std::uint64_t;

struct SubgraphStats {
  bool connected = false;
  int vertices = 0;
  int rank = 0;
  bool covers_labels = false;
  bool core = false;
};

SubgraphStats subgraph_stats(LabelledGraph const &gl, EdgeMask mask);

enum class SubgraphPosetKind { X, C };

struct SubgraphLimits {
  int max_edges = 18;
};

struct SubgraphPoset {
  FinitePoset poset;
  std::vector<EdgeMask> elements;
};

SubgraphPoset build_poset(LabelledGraph const &gl, SubgraphPosetKind which, SubgraphLimits const &limits = {});

struct SphericityReport {
  int rank = 0;
  std::size_t x_size = 0;
  std::size_t c_size = 0;
  HomologyResult x_homology;
  HomologyResult c_homology;
  bool retraction = false;
  // One entry per valence-one edge that was collapsed.
  std::vector<std::string> collapsed;
  bool collapse_invariance = true;
  Certificate spherical;

  bool ok() const { return retraction && collapse_invariance && spherical.ok; }
};

SphericityReport verify_sphericity(LabelledGraph const &gl, HomologyOptions const &opts = {});

// n loops at one vertex.
Multigraph rose(int n);
// Two vertices joined by k parallel edges.
Multigraph theta_graph(int k);
// Connected multigraph of rank n with the given edge count, plus up to
// max_labels distinct labelled vertices.
LabelledGraph random_multigraph(int n, int edges, int max_labels, std::uint64_t seed);

} // namespace raagcc

#endif // RAAGCC_SUBGRAPH_POSET_HPP
