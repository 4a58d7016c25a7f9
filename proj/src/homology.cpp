#include "raagcc/homology.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "raagcc/error.hpp"

namespace raagcc {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

std::int64_t checked_sub_mul(std::int64_t a, std::int64_t f, std::int64_t b) {
  std::int64_t prod, out;
  if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &out))
    throw Overflow{};
  return out;
}

BigInt checked_sub_mul(BigInt const &a, BigInt const &f, BigInt const &b) { return a - f * b; }

template <typename T>
bool is_unit(T const &v) {
  return v == 1 || v == -1;
}

std::int64_t to_i64(BigInt const &v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorKind::SizeLimit, "invariant factor does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

// Dense Smith normal form on what is left after unit-pivot elimination.
void dense_smith(std::vector<std::vector<BigInt>> m, SmithResult &out) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<BigInt> diag;
  std::size_t t = 0;
  auto find_min = [&](std::size_t &pi, std::size_t &pj) {
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0) {
          BigInt a = abs(m[i][j]);
          if (!found || a < best) {
            best = a;
            pi = i;
            pj = j;
            found = true;
          }
        }
    return found;
  };
  while (t < rows && t < cols) {
    std::size_t pi = 0, pj = 0;
    if (!find_min(pi, pj))
      break;
    std::swap(m[t], m[pi]);
    for (auto &row : m)
      std::swap(row[t], row[pj]);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (m[i][t] != 0) {
          BigInt q = m[i][t] / m[t][t];
          for (std::size_t j = t; j < cols; ++j)
            m[i][j] -= q * m[t][j];
          if (m[i][t] != 0)
            clean = false;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (m[t][j] != 0) {
          BigInt q = m[t][j] / m[t][t];
          for (std::size_t i = t; i < rows; ++i)
            m[i][j] -= q * m[i][t];
          if (m[t][j] != 0)
            clean = false;
        }
      if (!clean) {
        // Move the smallest remaining entry of row t / column t to the pivot.
        std::size_t bi = t, bj = t;
        BigInt best = abs(m[t][t]);
        for (std::size_t i = t + 1; i < rows; ++i)
          if (m[i][t] != 0 && abs(m[i][t]) < best) {
            best = abs(m[i][t]);
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[t][j] != 0 && abs(m[t][j]) < best) {
            best = abs(m[t][j]);
            bi = t;
            bj = j;
          }
        std::swap(m[t], m[bi]);
        for (auto &row : m)
          std::swap(row[t], row[bj]);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k)
              m[t][k] += m[i][k];
            divisible = false;
            break;
          }
      if (divisible)
        break;
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  for (auto const &d : diag) {
    ++out.rank;
    if (d > 1)
      out.torsion.push_back(to_i64(d));
  }
}

template <typename T>
SmithResult eliminate(int rows, std::vector<SparseColumn> const &input, HomologyOptions const &opts) {
  using Entry = std::pair<int, T>;
  using Column = std::vector<Entry>;
  std::vector<Column> cols(input.size());
  std::vector<std::vector<int>> row_cols(rows);
  std::vector<int> row_count(rows, 0);
  for (std::size_t c = 0; c < input.size(); ++c) {
    for (auto const &[r, v] : input[c])
      if (v != 0)
        cols[c].emplace_back(r, T(v));
    std::sort(cols[c].begin(), cols[c].end(), [](Entry const &a, Entry const &b) { return a.first < b.first; });
    for (auto const &e : cols[c]) {
      row_cols[e.first].push_back(static_cast<int>(c));
      ++row_count[e.first];
    }
  }
  std::vector<char> active(cols.size(), 1);
  SmithResult out;

  auto entry_in = [&](Column const &col, int r) -> T const * {
    auto it = std::lower_bound(col.begin(), col.end(), r, [](Entry const &e, int row) { return e.first < row; });
    if (it != col.end() && it->first == r)
      return &it->second;
    return nullptr;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<int> order;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (active[c] && !cols[c].empty())
        order.push_back(static_cast<int>(c));
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return cols[a].size() < cols[b].size(); });
    for (int c : order) {
      if (!active[c] || cols[c].empty())
        continue;
      int pr = -1;
      for (auto const &[r, v] : cols[c])
        if (is_unit(v) && (pr < 0 || row_count[r] < row_count[pr]))
          pr = r;
      if (pr < 0)
        continue;
      T p = *entry_in(cols[c], pr);
      Column const pivot = cols[c];
      std::vector<int> targets;
      targets.swap(row_cols[pr]);
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      for (int o : targets) {
        if (o == c || !active[o])
          continue;
        T const *hit = entry_in(cols[o], pr);
        if (!hit)
          continue;
        T f = *hit * p;
        Column merged;
        merged.reserve(cols[o].size() + pivot.size());
        auto a = cols[o].begin(), ae = cols[o].end();
        auto b = pivot.begin(), be = pivot.end();
        while (a != ae || b != be) {
          if (b == be || (a != ae && a->first < b->first)) {
            merged.push_back(*a++);
          } else if (a == ae || b->first < a->first) {
            T v = checked_sub_mul(T(0), f, b->second);
            row_cols[b->first].push_back(o);
            ++row_count[b->first];
            merged.emplace_back(b->first, v);
            ++b;
          } else {
            T v = checked_sub_mul(a->second, f, b->second);
            if (v != 0)
              merged.emplace_back(a->first, v);
            else
              --row_count[a->first];
            ++a;
            ++b;
          }
        }
        cols[o].swap(merged);
      }
      for (auto const &e : cols[c])
        --row_count[e.first];
      active[c] = 0;
      cols[c].clear();
      ++out.rank;
      progress = true;
    }
  }

  std::vector<int> rest_cols, rest_rows;
  std::vector<int> row_pos(rows, -1);
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (active[c] && !cols[c].empty()) {
      rest_cols.push_back(static_cast<int>(c));
      for (auto const &e : cols[c])
        if (row_pos[e.first] < 0) {
          row_pos[e.first] = 0;
          rest_rows.push_back(e.first);
        }
    }
  if (rest_cols.empty())
    return out;
  std::sort(rest_rows.begin(), rest_rows.end());
  for (std::size_t i = 0; i < rest_rows.size(); ++i)
    row_pos[rest_rows[i]] = static_cast<int>(i);
  if (rest_rows.size() * rest_cols.size() > opts.max_dense_entries)
    throw Error(ErrorKind::SizeLimit, "dense Smith normal form block too large");
  std::vector<std::vector<BigInt>> dense(rest_rows.size(), std::vector<BigInt>(rest_cols.size()));
  for (std::size_t j = 0; j < rest_cols.size(); ++j)
    for (auto const &e : cols[rest_cols[j]])
      dense[row_pos[e.first]][j] = BigInt(e.second);
  dense_smith(std::move(dense), out);
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

} // namespace

SmithResult smith_invariants(int rows, std::vector<SparseColumn> columns, HomologyOptions const &opts) {
  try {
    return eliminate<std::int64_t>(rows, columns, opts);
  } catch (Overflow const &) {
    return eliminate<BigInt>(rows, columns, opts);
  }
}

long long HomologyResult::betti_at(int d) const {
  if (d + 1 < 0 || d + 1 >= static_cast<int>(betti.size()))
    return 0;
  return betti[d + 1];
}

std::vector<std::int64_t> HomologyResult::torsion_at(int d) const {
  if (d + 1 < 0 || d + 1 >= static_cast<int>(torsion.size()))
    return {};
  return torsion[d + 1];
}

bool HomologyResult::vanishes_at(int d) const { return betti_at(d) == 0 && torsion_at(d).empty(); }

bool HomologyResult::acyclic() const {
  for (int d = -1; d <= top(); ++d)
    if (!vanishes_at(d))
      return false;
  return true;
}

bool operator==(HomologyResult const &a, HomologyResult const &b) {
  int top = std::max(a.top(), b.top());
  for (int d = -1; d <= top; ++d)
    if (a.betti_at(d) != b.betti_at(d) || a.torsion_at(d) != b.torsion_at(d))
      return false;
  return true;
}

std::string HomologyResult::summary() const {
  std::ostringstream os;
  bool any = false;
  for (int d = -1; d <= top(); ++d) {
    if (vanishes_at(d))
      continue;
    os << (any ? ", " : "") << "H" << d << "=";
    bool term = false;
    if (betti_at(d)) {
      os << "Z";
      if (betti_at(d) > 1)
        os << "^" << betti_at(d);
      term = true;
    }
    for (auto t : torsion_at(d)) {
      os << (term ? "+" : "") << "Z/" << t;
      term = true;
    }
    any = true;
  }
  return any ? os.str() : "acyclic";
}

HomologyResult reduced_homology(SimplicialComplex const &k, HomologyOptions const &opts) {
  int dim = k.dimension();
  if (dim > opts.max_dimension)
    throw Error(ErrorKind::SizeLimit, "complex dimension " + std::to_string(dim) + " above bound " +
                                          std::to_string(opts.max_dimension));
  // rank_of[d + 1] = rank of the boundary map out of degree d.
  std::vector<std::size_t> rank_of(dim + 3, 0);
  std::vector<std::vector<std::int64_t>> tors_of(dim + 3);
  std::unordered_map<Face, int, FaceHash> prev_index;
  prev_index.emplace(Face{}, 0);
  for (int d = 0; d <= dim; ++d) {
    auto const &faces = k.faces(d);
    std::vector<SparseColumn> columns;
    columns.reserve(faces.size());
    for (auto const &f : faces) {
      SparseColumn col;
      for (std::size_t i = 0; i < f.size(); ++i) {
        Face sub = f;
        sub.erase(sub.begin() + static_cast<long>(i));
        col.emplace_back(prev_index.at(sub), i % 2 == 0 ? 1 : -1);
      }
      columns.push_back(std::move(col));
    }
    SmithResult s = smith_invariants(static_cast<int>(k.faces(d - 1).size()), std::move(columns), opts);
    rank_of[d + 1] = s.rank;
    tors_of[d + 1] = s.torsion;
    prev_index.clear();
    for (std::size_t i = 0; i < faces.size(); ++i)
      prev_index.emplace(faces[i], static_cast<int>(i));
  }
  HomologyResult h;
  for (int d = -1; d <= dim; ++d) {
    long long n = static_cast<long long>(k.faces(d).size());
    h.betti.push_back(n - static_cast<long long>(rank_of[d + 1]) - static_cast<long long>(rank_of[d + 2]));
    h.torsion.push_back(tors_of[d + 2]);
  }
  return h;
}

HomologyResult poset_homology(FinitePoset const &p, HomologyOptions const &opts) {
  return reduced_homology(order_complex(beat_core(p)), opts);
}

Certificate certify_spherical(SimplicialComplex const &k, int d, HomologyOptions const &opts) {
  HomologyResult h = reduced_homology(k, opts);
  Certificate c;
  c.ok = true;
  for (int i = -1; i <= std::max(h.top(), d); ++i) {
    if (i == d) {
      if (!h.torsion_at(i).empty())
        c.ok = false;
    } else if (!h.vanishes_at(i)) {
      c.ok = false;
    }
  }
  c.report = "homology " + h.summary() + (c.ok ? "; consistent with " : "; not ") + std::to_string(d) +
             "-spherical";
  return c;
}

Certificate certify_cm(SimplicialComplex const &k, HomologyOptions const &opts) {
  int d = k.dimension();
  Certificate top = certify_spherical(k, d, opts);
  if (!top.ok)
    return {false, "complex: " + top.report};
  std::size_t checked = 0;
  for (int s = 0; s <= d; ++s)
    for (auto const &f : k.faces(s)) {
      Certificate l = certify_spherical(link(k, f), d - s - 1, opts);
      ++checked;
      if (!l.ok) {
        std::ostringstream os;
        os << "link of face [";
        for (std::size_t i = 0; i < f.size(); ++i)
          os << (i ? "," : "") << f[i];
        os << "]: " << l.report;
        return {false, os.str()};
      }
    }
  return {true, "complex " + top.report + "; " + std::to_string(checked) + " links spherical of the right dimension"};
}

} // namespace raagcc
