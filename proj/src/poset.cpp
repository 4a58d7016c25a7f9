#include "raagcc/poset.hpp"

#include <algorithm>
#include <set>

#include "raagcc/error.hpp"

namespace raagcc {

std::size_t FaceHash::operator()(Face const &f) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : f) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

FinitePoset::FinitePoset(int n, std::function<bool(int, int)> const &leq, std::vector<std::string> labels)
  : up_(n, boost::dynamic_bitset<>(n)), labels_(std::move(labels)) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq(i, j))
        up_[i].set(j);
  for (int i = 0; i < n; ++i) {
    if (!up_[i][i])
      throw Error(ErrorKind::InvalidInput, "poset relation is not reflexive");
    for (int j = i + 1; j < n; ++j)
      if (up_[i][j] && up_[j][i])
        throw Error(ErrorKind::InvalidInput, "poset relation is not antisymmetric");
    for (int j = 0; j < n; ++j)
      if (up_[i][j] && !up_[j].is_subset_of(up_[i]))
        throw Error(ErrorKind::InvalidInput, "poset relation is not transitive");
  }
}

FinitePoset FinitePoset::opposite() const {
  return FinitePoset(size(), [&](int i, int j) { return leq(j, i); }, labels_);
}

FinitePoset FinitePoset::induced(std::vector<int> const &keep) const {
  std::vector<std::string> labels;
  if (!labels_.empty())
    for (int k : keep)
      labels.push_back(labels_[k]);
  return FinitePoset(static_cast<int>(keep.size()), [&](int i, int j) { return leq(keep[i], keep[j]); },
                     std::move(labels));
}

FinitePoset antichain(int n) {
  return FinitePoset(n, [](int i, int j) { return i == j; });
}

FinitePoset chain(int n) {
  return FinitePoset(n, [](int i, int j) { return i <= j; });
}

FinitePoset poset_join(FinitePoset const &p, FinitePoset const &q) {
  int a = p.size();
  return FinitePoset(a + q.size(), [&](int i, int j) {
    if (i < a && j < a)
      return p.leq(i, j);
    if (i >= a && j >= a)
      return q.leq(i - a, j - a);
    return i < a;
  });
}

FinitePoset poset_product(FinitePoset const &p, FinitePoset const &q) {
  int b = q.size();
  return FinitePoset(p.size() * b, [&](int i, int j) { return p.leq(i / b, j / b) && q.leq(i % b, j % b); });
}

FinitePoset poset_combine(PosetOp op, FinitePoset const &p, FinitePoset const *q) {
  if (op == PosetOp::Opposite)
    return p.opposite();
  if (!q)
    throw Error(ErrorKind::Usage, "binary poset operation needs two posets");
  return op == PosetOp::Join ? poset_join(p, *q) : poset_product(p, *q);
}

FinitePoset beat_core(FinitePoset const &p) {
  int n = p.size();
  boost::dynamic_bitset<> alive(n);
  alive.set();
  std::vector<boost::dynamic_bitset<>> down(n, boost::dynamic_bitset<>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq(j, i))
        down[i].set(j);
  // x is a beat point if the part strictly above it has a least element or
  // the part strictly below it has a greatest element.
  auto has_extreme = [&](boost::dynamic_bitset<> const &strict, bool least) {
    for (auto y = strict.find_first(); y != boost::dynamic_bitset<>::npos; y = strict.find_next(y)) {
      auto const &cover = least ? p.up(static_cast<int>(y)) : down[y];
      if (strict.is_subset_of(cover))
        return true;
    }
    return false;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      if (!alive[x])
        continue;
      auto above = p.up(x) & alive;
      above.reset(x);
      auto below = down[x] & alive;
      below.reset(x);
      if ((above.any() && has_extreme(above, true)) || (below.any() && has_extreme(below, false))) {
        alive.reset(x);
        changed = true;
      }
    }
  }
  std::vector<int> keep;
  for (int x = 0; x < n; ++x)
    if (alive[x])
      keep.push_back(x);
  return p.induced(keep);
}

SimplicialComplex::SimplicialComplex(int n, std::vector<Face> const &generators, std::vector<std::string> labels)
  : n_(n), labels_(std::move(labels)) {
  std::set<Face> all;
  all.insert(Face{});
  for (Face f : generators) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw Error(ErrorKind::InvalidInput, "face with repeated vertex");
    for (int v : f)
      if (v < 0 || v >= n)
        throw Error(ErrorKind::InvalidInput, "face vertex out of range");
    if (f.size() > 24)
      throw Error(ErrorKind::SizeLimit, "face too large to close downward");
    std::size_t k = f.size();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1u)
          sub.push_back(f[i]);
      all.insert(std::move(sub));
    }
  }
  faces_.clear();
  for (auto const &f : all) {
    if (faces_.size() < f.size() + 1)
      faces_.resize(f.size() + 1);
    faces_[f.size()].push_back(f);
  }
  index();
}

SimplicialComplex SimplicialComplex::from_all_faces(int n, std::vector<Face> faces, std::vector<std::string> labels) {
  SimplicialComplex k;
  k.n_ = n;
  k.labels_ = std::move(labels);
  k.faces_.assign(1, {Face{}});
  for (auto &f : faces) {
    if (f.empty())
      continue;
    std::sort(f.begin(), f.end());
    if (k.faces_.size() < f.size() + 1)
      k.faces_.resize(f.size() + 1);
    k.faces_[f.size()].push_back(std::move(f));
  }
  k.index();
  return k;
}

void SimplicialComplex::index() {
  for (auto &level : faces_) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  while (faces_.size() > 1 && faces_.back().empty())
    faces_.pop_back();
}

std::vector<Face> const &SimplicialComplex::faces(int d) const {
  static std::vector<Face> const none;
  if (d + 1 < 0 || d + 1 >= static_cast<int>(faces_.size()))
    return none;
  return faces_[d + 1];
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t c = 0;
  for (auto const &l : faces_)
    c += l.size();
  return c;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < faces_.size(); ++i)
    out.push_back(faces_[i].size());
  return out;
}

bool SimplicialComplex::contains(Face const &f) const {
  Face s = f;
  std::sort(s.begin(), s.end());
  if (s.size() >= faces_.size())
    return false;
  auto const &level = faces_[s.size()];
  return std::binary_search(level.begin(), level.end(), s);
}

std::vector<Face> SimplicialComplex::maximal_faces() const {
  std::vector<Face> out;
  for (std::size_t k = 1; k < faces_.size(); ++k) {
    std::set<Face> covered;
    if (k + 1 < faces_.size())
      for (auto const &f : faces_[k + 1])
        for (std::size_t i = 0; i < f.size(); ++i) {
          Face sub = f;
          sub.erase(sub.begin() + static_cast<long>(i));
          covered.insert(std::move(sub));
        }
    for (auto const &f : faces_[k])
      if (!covered.count(f))
        out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 1; k < faces_.size(); ++k)
    chi += (k % 2 == 1 ? 1 : -1) * static_cast<long long>(faces_[k].size());
  return chi;
}

SimplicialComplex order_complex(FinitePoset const &p, ComplexLimits const &limits) {
  int n = p.size();
  std::vector<Face> faces;
  Face current;
  auto extend = [&](auto &&self, int last) -> void {
    for (int y = 0; y < n; ++y) {
      if (!p.less(last, y))
        continue;
      current.push_back(y);
      faces.push_back(current);
      if (faces.size() > limits.max_faces)
        throw Error(ErrorKind::SizeLimit, "order complex exceeds " + std::to_string(limits.max_faces) + " faces");
      self(self, y);
      current.pop_back();
    }
  };
  for (int x = 0; x < n; ++x) {
    current.assign(1, x);
    faces.push_back(current);
    extend(extend, x);
  }
  return SimplicialComplex::from_all_faces(n, std::move(faces), p.labels());
}

SimplicialComplex simplicial_join(SimplicialComplex const &a, SimplicialComplex const &b) {
  int off = a.vertex_count();
  std::vector<Face> faces;
  for (int da = -1; da <= a.dimension(); ++da)
    for (auto const &fa : a.faces(da))
      for (int db = -1; db <= b.dimension(); ++db)
        for (auto const &fb : b.faces(db)) {
          Face f = fa;
          for (int v : fb)
            f.push_back(v + off);
          faces.push_back(std::move(f));
        }
  std::vector<std::string> labels;
  if (!a.labels().empty() || !b.labels().empty()) {
    for (int i = 0; i < a.vertex_count(); ++i)
      labels.push_back(i < static_cast<int>(a.labels().size()) ? a.labels()[i] : std::to_string(i));
    for (int i = 0; i < b.vertex_count(); ++i)
      labels.push_back(i < static_cast<int>(b.labels().size()) ? b.labels()[i] : std::to_string(off + i));
  }
  return SimplicialComplex::from_all_faces(off + b.vertex_count(), std::move(faces), std::move(labels));
}

SimplicialComplex link(SimplicialComplex const &k, Face const &sigma) {
  Face s = sigma;
  std::sort(s.begin(), s.end());
  if (!k.contains(s))
    throw Error(ErrorKind::FaceNotFound, "link of a face not in the complex");
  std::vector<Face> faces;
  for (int d = static_cast<int>(s.size()) - 1; d <= k.dimension(); ++d)
    for (auto const &f : k.faces(d))
      if (std::includes(f.begin(), f.end(), s.begin(), s.end())) {
        Face rest;
        std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
        faces.push_back(std::move(rest));
      }
  return SimplicialComplex::from_all_faces(k.vertex_count(), std::move(faces), k.labels());
}

SimplicialComplex full_simplex(int n) {
  Face f(n);
  for (int i = 0; i < n; ++i)
    f[i] = i;
  return SimplicialComplex(n, {f});
}

SimplicialComplex simplex_boundary(int n) {
  std::vector<Face> gens;
  for (int skip = 0; skip < n; ++skip) {
    Face f;
    for (int i = 0; i < n; ++i)
      if (i != skip)
        f.push_back(i);
    gens.push_back(f);
  }
  return SimplicialComplex(n, gens);
}

} // namespace raagcc
