#pragma once

// Independent verification route: for every vertex subset a, the
// cohomology of the Koszul piece in multidegree 2a must match the
// reduced simplicial cohomology of the restricted poset's geometric
// realization, shifted so that H^{-i, 2a} pairs with degree |a|-i-1.
//
// The cellular cochain complex of |S_a| is built directly from the
// faces supported on a: one cell per face, the bottom serving as the
// (-1)-dimensional augmentation cell, and the coboundary of a cell
// summing over cofacets with the sign (-1)^(position of the omitted
// vertex in the cofacet's vertex list).

#include "momac/core.hpp"
#include "momac/exact.hpp"
#include "momac/koszul.hpp"
#include "momac/poset.hpp"

#include <map>
#include <string>
#include <vector>

namespace momac {

// Reduced cellular cochain complex of |S_a|. Level r holds the faces
// of rank r (cells of dimension r - 1); level 0 is the augmentation.
struct CellularComplex {
  VertexSet a = 0;
  std::vector<std::vector<int>> cells;  // cells[r]: face indices of rank r
  std::vector<IntMatrix> delta;         // delta[r]: level r-1 -> level r, r >= 1
};

inline CellularComplex cellular_complex(const SimplicialPoset& p, VertexSet a) {
  if ((a & ~full_set(p.vertex_count())) != 0)
    throw error(errc::dimension_mismatch, "vertex set {" + vertex_list(a) + "} uses vertices beyond m");
  CellularComplex cc;
  cc.a = a;
  int top = 0;
  std::vector<int> chosen = p.faces_supported_on(a);
  for (int s : chosen) top = std::max(top, p.element(s).rank);
  cc.cells.assign(top + 1, {});
  for (int s : chosen) cc.cells[p.element(s).rank].push_back(s);

  std::vector<std::map<int, int>> position(top + 1);
  for (int r = 0; r <= top; ++r)
    for (std::size_t i = 0; i < cc.cells[r].size(); ++i) position[r][cc.cells[r][i]] = static_cast<int>(i);

  cc.delta.assign(top + 1, IntMatrix());
  for (int r = 1; r <= top; ++r) {
    IntMatrix d(static_cast<int>(cc.cells[r].size()), static_cast<int>(cc.cells[r - 1].size()));
    for (std::size_t row = 0; row < cc.cells[r].size(); ++row) {
      const int t = cc.cells[r][row];
      for (int f : p.element(t).facets) {
        const VertexSet omitted = p.element(t).vertices & ~p.element(f).vertices;
        const int pos = popcount(p.element(t).vertices & (omitted - 1));
        d(static_cast<int>(row), position[r - 1].at(f)) += (pos % 2 ? -1 : 1);
      }
    }
    cc.delta[r] = std::move(d);
  }
  return cc;
}

// Reduced cohomology groups of |S_a| by dimension; only nontrivial
// groups appear. The empty realization (a = 0) has one reduced group
// Z in dimension -1.
inline std::map<int, AbelianGroup> reduced_cohomology(const SimplicialPoset& p, VertexSet a) {
  CellularComplex cc = cellular_complex(p, a);
  const int top = static_cast<int>(cc.cells.size()) - 1;
  std::map<int, AbelianGroup> out;
  for (int r = 0; r <= top; ++r) {
    const int dim_r = static_cast<int>(cc.cells[r].size());
    IntMatrix d_out = r == top ? IntMatrix(0, dim_r) : cc.delta[r + 1];
    IntMatrix d_in = r == 0 ? IntMatrix(dim_r, 0) : cc.delta[r];
    AbelianGroup g = cohomology_at(d_in, d_out);
    if (!g.trivial()) out[r - 1] = std::move(g);
  }
  return out;
}

struct HochsterMismatch {
  VertexSet a = 0;
  int i = 0;  // Koszul cohomological degree; cellular dimension is |a| - i - 1
  AbelianGroup koszul;
  AbelianGroup cellular;
};

struct HochsterReport {
  bool pass = true;
  long bidegrees_checked = 0;
  std::vector<HochsterMismatch> mismatches;
};

// Compares both computations over every multidegree. Pass a
// precomputed ring to avoid recomputing it.
inline HochsterReport hochster_check(const SimplicialPoset& p, const CohomologyRing* precomputed = nullptr) {
  CohomologyRing local;
  if (!precomputed) {
    local = CohomologyRing::compute(p);
    precomputed = &local;
  }
  HochsterReport report;
  for (VertexSet a = 0;; ++a) {
    const int k = popcount(a);
    std::map<int, AbelianGroup> cellular = reduced_cohomology(p, a);
    for (int i = 0; i <= k; ++i) {
      ++report.bidegrees_checked;
      AbelianGroup kz = precomputed->group(a, i);
      AbelianGroup cl;
      if (auto it = cellular.find(k - i - 1); it != cellular.end()) cl = it->second;
      if (kz != cl) {
        report.pass = false;
        report.mismatches.push_back({a, i, std::move(kz), std::move(cl)});
      }
    }
    if (a == full_set(p.vertex_count())) break;
  }
  return report;
}

// The zeroth column of the bigraded cohomology, counted two ways:
// the free ranks of H^{0, 2a} summed over a, against the free ranks
// of the top reduced cohomology of each |S_a|.
struct BettiZero {
  long koszul = 0;
  long cellular = 0;
  bool pass = true;
};

inline BettiZero algebraic_betti_zero(const SimplicialPoset& p, const CohomologyRing* precomputed = nullptr) {
  CohomologyRing local;
  if (!precomputed) {
    local = CohomologyRing::compute(p);
    precomputed = &local;
  }
  BettiZero out;
  for (VertexSet a = 0;; ++a) {
    out.koszul += precomputed->group(a, 0).free_rank;
    std::map<int, AbelianGroup> cellular = reduced_cohomology(p, a);
    if (auto it = cellular.find(popcount(a) - 1); it != cellular.end()) out.cellular += it->second.free_rank;
    if (a == full_set(p.vertex_count())) break;
  }
  out.pass = out.koszul == out.cellular;
  return out;
}

}  // namespace momac
