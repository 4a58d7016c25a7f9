#ifndef RAAGCC_POSET_HPP
#define RAAGCC_POSET_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace raagcc {

using Face = std::vector<int>;

struct FaceHash {
  std::size_t operator()(Face const &f) const noexcept;
};

class FinitePoset {
public:
  FinitePoset() = default;
  // leq(i, j) must be a partial order on 0..n-1; validated.
  FinitePoset(int n, std::function<bool(int, int)> const &leq, std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(up_.size()); }
  bool leq(int i, int j) const { return up_[i][j]; }
  bool less(int i, int j) const { return i != j && up_[i][j]; }
  // up(i)[j] is set iff i <= j.
  boost::dynamic_bitset<> const &up(int i) const { return up_[i]; }
  std::vector<std::string> const &labels() const { return labels_; }

  FinitePoset opposite() const;
  FinitePoset induced(std::vector<int> const &keep) const;

  friend bool operator==(FinitePoset const &a, FinitePoset const &b) { return a.up_ == b.up_; }

private:
  std::vector<boost::dynamic_bitset<>> up_;
  std::vector<std::string> labels_;
};

FinitePoset antichain(int n);
FinitePoset chain(int n);
// Every element of the first poset lies below every element of the second.
FinitePoset poset_join(FinitePoset const &p, FinitePoset const &q);
FinitePoset poset_product(FinitePoset const &p, FinitePoset const &q);

enum class PosetOp { Join, Product, Opposite };
FinitePoset poset_combine(PosetOp op, FinitePoset const &p, FinitePoset const *q = nullptr);

// Removes beat points until none is left. The result is a strong
// deformation retract, so the order complex keeps its homotopy type.
FinitePoset beat_core(FinitePoset const &p);

class SimplicialComplex {
public:
  SimplicialComplex() : faces_(1, {Face{}}) {}
  // Closes the given faces downward; vertex ids must lie in 0..n-1.
  SimplicialComplex(int n, std::vector<Face> const &generators, std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  int dimension() const { return static_cast<int>(faces_.size()) - 2; }
  // faces(d) lists the d-dimensional faces, d >= -1, sorted.
  std::vector<Face> const &faces(int d) const;
  std::size_t face_count() const;
  std::vector<std::size_t> f_vector() const;
  bool contains(Face const &f) const;
  std::vector<Face> maximal_faces() const;
  std::vector<std::string> const &labels() const { return labels_; }
  long long euler_characteristic() const;

  static SimplicialComplex from_all_faces(int n, std::vector<Face> faces, std::vector<std::string> labels = {});

  friend bool operator==(SimplicialComplex const &a, SimplicialComplex const &b) { return a.faces_ == b.faces_; }

private:
  void index();

  int n_ = 0;
  std::vector<std::vector<Face>> faces_;  // faces_[d + 1]
  std::vector<std::string> labels_;
};

struct ComplexLimits {
  std::size_t max_faces = 4000000;
};

SimplicialComplex order_complex(FinitePoset const &p, ComplexLimits const &limits = {});
SimplicialComplex simplicial_join(SimplicialComplex const &a, SimplicialComplex const &b);
SimplicialComplex link(SimplicialComplex const &k, Face const &sigma);
SimplicialComplex full_simplex(int n);
SimplicialComplex simplex_boundary(int n);

} // namespace raagcc

#endif // RAAGCC_POSET_HPP
