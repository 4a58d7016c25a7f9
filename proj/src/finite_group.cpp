#include "raagcc/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "raagcc/error.hpp"

namespace raagcc {

namespace {

struct PermHash {
  std::size_t operator()(Perm const &p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// (a * b)(x) = a(b(x))
Perm compose(Perm const &a, Perm const &b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

bool is_permutation(Perm const &p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

} // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, GroupLimits const &limits) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::InvalidInput, "empty multiplication table");
  if (n > limits.max_order) throw Error(ErrorKind::SizeLimit, "group order " + std::to_string(n) + " above limit");
  for (auto const &row : table) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::InvalidInput, "table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw Error(ErrorKind::InvalidInput, "table entry out of range");
  }
  FiniteGroup g;
  g.table_ = std::move(table);
  g.identity_ = -1;
  for (int e = 0; e < n && g.identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g.table_[e][a] == a && g.table_[a][e] == a;
    if (ok) g.identity_ = e;
  }
  if (g.identity_ < 0) throw Error(ErrorKind::InvalidInput, "no identity element");
  g.finish();
  if (n <= limits.validate_up_to) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw Error(ErrorKind::InvalidInput, "multiplication is not associative");
  }
  return g;
}

void FiniteGroup::finish() {
  int n = order();
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
  for (int a = 0; a < n; ++a)
    if (inverse_[a] < 0) throw Error(ErrorKind::InvalidInput, "element without inverse");
}

FiniteGroup FiniteGroup::from_permutations(std::vector<Perm> const &gens, GroupLimits const &limits) {
  if (gens.empty()) throw Error(ErrorKind::InvalidInput, "need at least one permutation");
  std::size_t deg = gens[0].size();
  for (auto const &p : gens)
    if (p.size() != deg || !is_permutation(p)) throw Error(ErrorKind::InvalidInput, "generators must be permutations of one degree");
  Perm id(deg);
  for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);

  std::vector<Perm> elems{id};
  std::unordered_map<Perm, int, PermHash> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto const &s : gens) {
      Perm p = compose(elems[i], s);
      if (index.emplace(p, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(p));
        if (static_cast<int>(elems.size()) > limits.max_order)
          throw Error(ErrorKind::SizeLimit, "permutation group exceeds order limit");
      }
    }
  }
  int n = static_cast<int>(elems.size());
  FiniteGroup g;
  g.table_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table_[a][b] = index.at(compose(elems[a], elems[b]));
  g.identity_ = 0;
  g.perms_ = std::move(elems);
  g.finish();
  return g;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

ElementSet FiniteGroup::set_of(std::vector<int> const &elements) const {
  ElementSet s(order());
  for (int x : elements) {
    if (x < 0 || x >= order()) throw Error(ErrorKind::InvalidInput, "element index out of range");
    s.set(x);
  }
  return s;
}

std::vector<int> members(ElementSet const &s) {
  std::vector<int> out;
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

bool subset_less(ElementSet const &a, ElementSet const &b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return members(a) < members(b);
}

ElementSet generated_subgroup(FiniteGroup const &g, ElementSet const &gens) {
  auto gs = members(gens);
  ElementSet s(g.order());
  std::vector<int> list{g.identity()};
  s.set(g.identity());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (int x : gs) {
      int y = g.mul(list[i], x);
      if (!s[y]) {
        s.set(y);
        list.push_back(y);
      }
    }
  return s;
}

bool is_subgroup(FiniteGroup const &g, ElementSet const &s) {
  if (static_cast<int>(s.size()) != g.order() || !s[g.identity()]) return false;
  auto m = members(s);
  for (int a : m)
    for (int b : m)
      if (!s[g.mul(a, g.inv(b))]) return false;
  return true;
}

bool is_normal(FiniteGroup const &g, ElementSet const &n) {
  if (!is_subgroup(g, n)) return false;
  auto m = members(n);
  for (int x = 0; x < g.order(); ++x)
    for (int a : m)
      if (!n[g.mul(g.mul(x, a), g.inv(x))]) return false;
  return true;
}

ElementSet product_set(FiniteGroup const &g, ElementSet const &a, ElementSet const &b) {
  ElementSet out(g.order());
  auto mb = members(b);
  for (int x : members(a))
    for (int y : mb) out.set(g.mul(x, y));
  return out;
}

ElementSet left_coset(FiniteGroup const &g, int x, ElementSet const &h) {
  ElementSet out(g.order());
  for (int y : members(h)) out.set(g.mul(x, y));
  return out;
}

std::vector<ElementSet> all_subgroups(FiniteGroup const &g) {
  if (g.order() > 200) throw Error(ErrorKind::SizeLimit, "subgroup enumeration needs order <= 200");
  std::set<ElementSet> found;
  std::vector<ElementSet> cyclic;
  for (int a = 0; a < g.order(); ++a) {
    ElementSet one(g.order());
    one.set(a);
    auto c = generated_subgroup(g, one);
    if (found.insert(c).second) cyclic.push_back(c);
  }
  std::deque<ElementSet> work(cyclic.begin(), cyclic.end());
  while (!work.empty()) {
    auto a = work.front();
    work.pop_front();
    for (auto const &c : cyclic) {
      if (c.is_subset_of(a)) continue;
      auto j = generated_subgroup(g, a | c);
      if (found.insert(j).second) work.push_back(j);
    }
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

std::vector<ElementSet> normal_subgroups(FiniteGroup const &g) {
  std::vector<ElementSet> out;
  for (auto &s : all_subgroups(g))
    if (is_normal(g, s)) out.push_back(std::move(s));
  return out;
}

Quotient quotient(FiniteGroup const &g, ElementSet const &n) {
  if (!is_normal(g, n)) throw Error(ErrorKind::NotNormal, "quotient by a subgroup that is not normal");
  Quotient q;
  q.projection.assign(g.order(), -1);
  std::vector<int> reps;
  auto assign = [&](int x) {
    if (q.projection[x] >= 0) return;
    int idx = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int y : members(left_coset(g, x, n))) q.projection[y] = idx;
  };
  assign(g.identity());
  for (int x = 0; x < g.order(); ++x) assign(x);
  int k = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[i][j] = q.projection[g.mul(reps[i], reps[j])];
  q.group = FiniteGroup::from_table(std::move(table));
  return q;
}

ElementSet image(Quotient const &q, ElementSet const &s) {
  ElementSet out(q.group.order());
  for (int x : members(s)) out.set(q.projection[x]);
  return out;
}

Embedded as_group(FiniteGroup const &g, ElementSet const &h) {
  if (!is_subgroup(g, h)) throw Error(ErrorKind::InvalidInput, "not a subgroup");
  Embedded e;
  e.embedding = members(h);
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < e.embedding.size(); ++i) local[e.embedding[i]] = static_cast<int>(i);
  int k = static_cast<int>(e.embedding.size());
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[i][j] = local[g.mul(e.embedding[i], e.embedding[j])];
  e.group = FiniteGroup::from_table(std::move(table));
  return e;
}

FiniteGroup direct_product(FiniteGroup const &a, FiniteGroup const &b) {
  int na = a.order(), nb = b.order();
  std::vector<std::vector<int>> table(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x)
    for (int y = 0; y < na * nb; ++y)
      table[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  GroupLimits lim;
  lim.validate_up_to = 0;
  return FiniteGroup::from_table(std::move(table), lim);
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "cyclic group needs n >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  GroupLimits lim;
  lim.validate_up_to = 0;
  return FiniteGroup::from_table(std::move(table), lim);
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "dihedral group needs n >= 1");
  // r^k s^i has index 2k + i
  std::vector<std::vector<int>> table(2 * n, std::vector<int>(2 * n));
  for (int x = 0; x < 2 * n; ++x)
    for (int y = 0; y < 2 * n; ++y) {
      int k = x / 2, i = x % 2, l = y / 2, j = y % 2;
      int r = ((i ? k - l : k + l) % n + n) % n;
      table[x][y] = 2 * r + (i ^ j);
    }
  GroupLimits lim;
  lim.validate_up_to = 0;
  return FiniteGroup::from_table(std::move(table), lim);
}

FiniteGroup dicyclic_group(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "dicyclic group needs n >= 2");
  // a^k x^i has index 2k + i, with x a = a^{-1} x and x^2 = a^n
  int m = 2 * n;
  std::vector<std::vector<int>> table(2 * m, std::vector<int>(2 * m));
  for (int p = 0; p < 2 * m; ++p)
    for (int q = 0; q < 2 * m; ++q) {
      int k = p / 2, i = p % 2, l = q / 2, j = q % 2;
      int r = i ? k - l : k + l;
      int e = i + j;
      if (e == 2) {
        r += n;
        e = 0;
      }
      table[p][q] = 2 * (((r % m) + m) % m) + e;
    }
  GroupLimits lim;
  lim.validate_up_to = 0;
  return FiniteGroup::from_table(std::move(table), lim);
}

FiniteGroup symmetric_group(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "symmetric group needs n >= 1");
  Perm swap(n), cycle(n);
  for (int i = 0; i < n; ++i) {
    swap[i] = i;
    cycle[i] = (i + 1) % n;
  }
  if (n >= 2) std::swap(swap[0], swap[1]);
  return FiniteGroup::from_permutations({swap, cycle});
}

FiniteGroup alternating_group(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "alternating group needs n >= 1");
  std::vector<Perm> gens;
  Perm id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  gens.push_back(id);
  for (int k = 2; k < n; ++k) {
    Perm p = id;
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(p);
  }
  return FiniteGroup::from_permutations(gens);
}

namespace {

FiniteGroup linear_group(int n, int q, bool special) {
  if (q != 2 && q != 3 && q != 5 && q != 7) throw Error(ErrorKind::InvalidInput, "field size must be a small prime");
  if (n < 1) throw Error(ErrorKind::InvalidInput, "dimension must be positive");
  int size = 1;
  for (int i = 0; i < n; ++i) size *= q;
  auto decode = [&](int code) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i, code /= q) v[i] = code % q;
    return v;
  };
  auto encode = [&](std::vector<int> const &v) {
    int code = 0;
    for (int i = n - 1; i >= 0; --i) code = code * q + v[i];
    return code;
  };
  // Matrix as a permutation of the nonzero vectors; point p is vector p + 1.
  auto as_perm = [&](std::vector<std::vector<int>> const &m) {
    Perm p(size - 1);
    for (int c = 1; c < size; ++c) {
      auto v = decode(c);
      std::vector<int> w(n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i] = (w[i] + m[i][j] * v[j]) % q;
      p[c - 1] = encode(w) - 1;
    }
    return p;
  };
  auto identity = [&] {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  };
  std::vector<Perm> gens{as_perm(identity())};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        auto m = identity();
        m[i][j] = 1;
        gens.push_back(as_perm(m));
      }
  if (!special && q > 2) {
    int prim = 2;
    for (int a = 2; a < q; ++a) {
      int x = a, ord = 1;
      while (x != 1) {
        x = x * a % q;
        ++ord;
      }
      if (ord == q - 1) {
        prim = a;
        break;
      }
    }
    auto m = identity();
    m[0][0] = prim;
    gens.push_back(as_perm(m));
  }
  return FiniteGroup::from_permutations(gens);
}

} // namespace

FiniteGroup general_linear_group(int n, int q) { return linear_group(n, q, false); }
FiniteGroup special_linear_group(int n, int q) { return linear_group(n, q, true); }

namespace {

FiniteGroup factor_group(std::string const &name) {
  auto num = [&](std::size_t from) {
    auto rest = name.substr(from);
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit))
      throw Error(ErrorKind::InvalidInput, "unknown group " + name);
    return std::stoi(rest);
  };
  if (name == "Q8") return dicyclic_group(2);
  if (name == "V4") return direct_product(cyclic_group(2), cyclic_group(2));
  if (name.rfind("GL(", 0) == 0 || name.rfind("SL(", 0) == 0) {
    int n = 0, q = 0;
    if (std::sscanf(name.c_str() + 3, "%d,%d)", &n, &q) != 2) throw Error(ErrorKind::InvalidInput, "unknown group " + name);
    return name[0] == 'G' ? general_linear_group(n, q) : special_linear_group(n, q);
  }
  if (name.rfind("Dic", 0) == 0) {
    int order = num(3);
    if (order % 4 != 0) throw Error(ErrorKind::InvalidInput, "dicyclic order must be divisible by 4");
    return dicyclic_group(order / 4);
  }
  if (name.empty()) throw Error(ErrorKind::InvalidInput, "empty group name");
  switch (name[0]) {
  case 'C':
    return cyclic_group(num(1));
  case 'D': {
    int order = num(1);
    if (order % 2 != 0) throw Error(ErrorKind::InvalidInput, "dihedral order must be even");
    return dihedral_group(order / 2);
  }
  case 'S':
    return symmetric_group(num(1));
  case 'A':
    return alternating_group(num(1));
  default:
    throw Error(ErrorKind::InvalidInput, "unknown group " + name);
  }
}

} // namespace

FiniteGroup named_group(std::string const &name) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= name.size(); ++i)
    if (i == name.size() || name[i] == 'x') {
      parts.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  FiniteGroup g = factor_group(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, factor_group(parts[i]));
  return g;
}

std::vector<NamedGroup> group_catalogue(int max_order) {
  std::vector<std::string> names;
  for (int n = 1; n <= max_order; ++n) names.push_back("C" + std::to_string(n));
  for (int n = 3; 2 * n <= max_order; ++n) names.push_back("D" + std::to_string(2 * n));
  for (int n = 2; 4 * n <= max_order; ++n) names.push_back(n == 2 ? "Q8" : "Dic" + std::to_string(4 * n));
  std::vector<std::pair<std::string, int>> extra = {
      {"V4", 4},         {"S3", 6},           {"C2xC4", 8},       {"C2xC2xC2", 8},  {"C3xC3", 9},
      {"A4", 12},        {"C2xC6", 12},       {"C2xC8", 16},      {"C4xC4", 16},    {"C2xC2xC4", 16},
      {"C2xC2xC2xC2", 16}, {"C2xD8", 16},     {"C2xQ8", 16},      {"C3xS3", 18},    {"C3xC6", 18},
      {"S4", 24},        {"SL(2,3)", 24},     {"C2xA4", 24},      {"C2xD12", 24},   {"C3xD8", 24},
      {"C3xQ8", 24},     {"C4xS3", 24},       {"C2xC2xC6", 24},   {"S3xS3", 36},    {"C3xA4", 36},
      {"C6xC6", 36},     {"C2xS4", 48},       {"GL(2,3)", 48},    {"C4xA4", 48},    {"C2xC2xA4", 48},
      {"C2xSL(2,3)", 48}, {"C2xC2xC2xS3", 48}};
  for (auto const &[name, order] : extra)
    if (order <= max_order) names.push_back(name);
  std::vector<NamedGroup> out;
  for (auto const &n : names) out.push_back({n, named_group(n)});
  return out;
}

} // namespace raagcc
