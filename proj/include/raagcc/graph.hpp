#ifndef RAAGCC_GRAPH_HPP
#define RAAGCC_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace raagcc {

// Hard ceiling imposed by the 64-bit vertex-set representation.
inline constexpr int kMaxGraphVertices = 64;

class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members);

  static VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet range(int n);

  std::uint64_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcountll(bits_); }
  bool contains(int v) const { return (bits_ >> v) & 1u; }
  int least() const { return bits_ ? __builtin_ctzll(bits_) : -1; }
  bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  std::vector<int> members() const;

  template <typename F>
  void for_each(F &&f) const {
    for (std::uint64_t b = bits_; b; b &= b - 1)
      f(__builtin_ctzll(b));
  }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
  friend bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }
  // Canonical order: lexicographic on the sorted member lists.
  friend bool operator<(VertexSet a, VertexSet b);

private:
  std::uint64_t bits_ = 0;
};

class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  explicit Graph(std::vector<std::string> labels);

  int order() const { return static_cast<int>(labels_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  std::string const &label(int v) const;
  int vertex(std::string const &label) const;
  std::vector<std::string> const &labels() const { return labels_; }
  std::vector<std::string> labels_of(VertexSet s) const;
  VertexSet set_of(std::vector<std::string> const &labels) const;

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  VertexSet link(int v) const;
  VertexSet star(int v) const { return link(v) | VertexSet::singleton(v); }
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  void check_vertex(int v) const;

  // Full subgraph on s; vertices keep their labels and relative order.
  Graph induced(VertexSet s) const;
  // Components of the full subgraph on s, ordered by least vertex.
  std::vector<VertexSet> components(VertexSet s) const;
  bool is_complete(VertexSet s) const;
  bool is_discrete(VertexSet s) const;

  friend bool operator==(Graph const &a, Graph const &b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_;
  }

private:
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> adj_;
};

struct Neighborhood {
  VertexSet link;
  VertexSet star;
};

Neighborhood neighborhoods(Graph const &g, int v);
bool standard_leq(Graph const &g, int v, int w);
std::vector<VertexSet> components_outside_star(Graph const &g, int v);

enum class ConstructOp { Complement, Join, DisjointUnion };

struct Construction {
  Graph graph;
  // Index in the result of each vertex of the second argument.
  std::vector<int> second_map;
};

Graph complement(Graph const &g);
Construction graph_join(Graph const &a, Graph const &b);
Construction disjoint_union(Graph const &a, Graph const &b);
Construction construct(ConstructOp op, Graph const &a, Graph const *b = nullptr);

// Vertices adjacent to every other vertex.
VertexSet central_vertices(Graph const &g);
VertexSet isolated_vertices(Graph const &g);

} // namespace raagcc

#endif // RAAGCC_GRAPH_HPP
