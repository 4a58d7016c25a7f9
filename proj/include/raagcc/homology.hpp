#ifndef RAAGCC_HOMOLOGY_HPP
#define RAAGCC_HOMOLOGY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "raagcc/poset.hpp"

namespace raagcc {

// Integral reduced homology, degrees -1..top().
struct HomologyResult {
  std::vector<long long> betti;                  // betti[d + 1]
  std::vector<std::vector<std::int64_t>> torsion; // torsion[d + 1], invariant factors > 1

  int top() const { return static_cast<int>(betti.size()) - 2; }
  long long betti_at(int d) const;
  std::vector<std::int64_t> torsion_at(int d) const;
  bool vanishes_at(int d) const;
  bool acyclic() const;
  std::string summary() const;

  friend bool operator==(HomologyResult const &a, HomologyResult const &b);
};

struct HomologyOptions {
  int max_dimension = 6;
  // Largest dense block left after unit-pivot elimination.
  std::size_t max_dense_entries = 4000000;
};

HomologyResult reduced_homology(SimplicialComplex const &k, HomologyOptions const &opts = {});
// Order complex of the beat-point core, which has the same homotopy type.
HomologyResult poset_homology(FinitePoset const &p, HomologyOptions const &opts = {});

struct SmithResult {
  std::size_t rank = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1, ascending
};

// Sparse integer matrix given by columns of (row, value) entries.
using SparseColumn = std::vector<std::pair<int, std::int64_t>>;
SmithResult smith_invariants(int rows, std::vector<SparseColumn> columns, HomologyOptions const &opts = {});

struct Certificate {
  bool ok = false;
  std::string report;
};

Certificate certify_spherical(SimplicialComplex const &k, int d, HomologyOptions const &opts = {});
Certificate certify_cm(SimplicialComplex const &k, HomologyOptions const &opts = {});

} // namespace raagcc

#endif // RAAGCC_HOMOLOGY_HPP
