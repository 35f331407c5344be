#pragma once

// Linear systems of parameters in the face ring, and the torus-rank
// audit relating them to the total Betti number of the moment-angle
// complex.
//
// A candidate is an n x m integer matrix whose rows give n linear
// combinations of the degree-two vertex generators. Rationally it is
// an lsop when, for every face s, the columns indexed by V(s) have
// full rank |s|; integrally the stronger condition is that those
// columns are part of a Z-basis, i.e. all invariant factors equal 1.
// Both conditions are inherited by subfaces, so checking maximal
// faces suffices; the _all variants exist to cross-check that.

#include "momac/core.hpp"
#include "momac/exact.hpp"
#include "momac/face_ring.hpp"
#include "momac/koszul.hpp"
#include "momac/poset.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace momac {

struct LsopResult {
  bool ok = true;
  int witness = -1;  // a face violating the condition

  explicit operator bool() const { return ok; }
};

namespace detail {

inline IntMatrix face_columns(const SimplicialPoset& p, const IntMatrix& lambda, int face) {
  IntMatrix sub(lambda.rows(), p.element(face).rank);
  int col = 0;
  for (VertexSet rest = p.element(face).vertices; rest; rest &= rest - 1) {
    const int v = first_vertex(rest);
    for (int r = 0; r < lambda.rows(); ++r) sub(r, col) = lambda(r, v - 1);
    ++col;
  }
  return sub;
}

inline void require_lsop_shape(const SimplicialPoset& p, const IntMatrix& lambda) {
  if (lambda.rows() != p.top_rank() || lambda.cols() != p.vertex_count())
    throw error(errc::dimension_mismatch, "candidate must be " + std::to_string(p.top_rank()) + "x" +
                                              std::to_string(p.vertex_count()) + ", got " + std::to_string(lambda.rows()) +
                                              "x" + std::to_string(lambda.cols()));
}

template <typename Check>
LsopResult check_faces(const std::vector<int>& faces, Check&& check) {
  for (int s : faces)
    if (!check(s)) return {false, s};
  return {};
}

}  // namespace detail

inline LsopResult is_rational_lsop(const SimplicialPoset& p, const IntMatrix& lambda) {
  detail::require_lsop_shape(p, lambda);
  return detail::check_faces(p.maximal_elements(),
                             [&](int s) { return rank(detail::face_columns(p, lambda, s)) == p.element(s).rank; });
}

inline LsopResult is_rational_lsop_all(const SimplicialPoset& p, const IntMatrix& lambda) {
  detail::require_lsop_shape(p, lambda);
  std::vector<int> all;
  for (int s = 0; s < p.size(); ++s) all.push_back(s);
  return detail::check_faces(all, [&](int s) { return rank(detail::face_columns(p, lambda, s)) == p.element(s).rank; });
}

inline LsopResult is_integral_lsop(const SimplicialPoset& p, const IntMatrix& lambda) {
  detail::require_lsop_shape(p, lambda);
  auto unimodular = [&](int s) {
    SmithForm f = smith_normal_form(detail::face_columns(p, lambda, s));
    if (f.rank != p.element(s).rank) return false;
    for (const Int& t : f.invariant_factors())
      if (t != 1) return false;
    return true;
  };
  return detail::check_faces(p.maximal_elements(), unimodular);
}

inline LsopResult is_integral_lsop_all(const SimplicialPoset& p, const IntMatrix& lambda) {
  detail::require_lsop_shape(p, lambda);
  std::vector<int> all;
  for (int s = 0; s < p.size(); ++s) all.push_back(s);
  auto unimodular = [&](int s) {
    SmithForm f = smith_normal_form(detail::face_columns(p, lambda, s));
    if (f.rank != p.element(s).rank) return false;
    for (const Int& t : f.invariant_factors())
      if (t != 1) return false;
    return true;
  };
  return detail::check_faces(all, unimodular);
}

// Same rational criterion routed through the face ring: the candidate
// rows are built as actual ring elements and restricted to each face,
// where their degree-two images must span.
inline LsopResult check_lsop_restriction(const SimplicialPoset& p, const IntMatrix& lambda) {
  detail::require_lsop_shape(p, lambda);
  std::vector<ChainElement> rows;
  for (int r = 0; r < lambda.rows(); ++r) {
    ChainElement theta(p);
    for (int v = 1; v <= p.vertex_count(); ++v)
      if (lambda(r, v - 1) != 0) theta += ChainElement::generator(p, v) * lambda(r, v - 1);
    rows.push_back(std::move(theta));
  }

  for (int s = 0; s < p.size(); ++s) {
    const int k = p.element(s).rank;
    std::vector<int> vertices;
    for (VertexSet rest = p.element(s).vertices; rest; rest &= rest - 1) vertices.push_back(first_vertex(rest));
    IntMatrix images(lambda.rows(), k);
    for (int r = 0; r < lambda.rows(); ++r) {
      Polynomial image = restriction(rows[r], s);
      for (const auto& [exps, c] : image)
        for (int col = 0; col < k; ++col)
          if (exps[vertices[col] - 1] == 1) images(r, col) = c;
    }
    if (rank(images) != k) return {false, s};
  }
  return {};
}

struct LsopSearch {
  bool found = false;
  int attempts_used = 0;
  IntMatrix matrix;
};

// Seeded random search over matrices with entries in [-bound, bound].
inline LsopSearch find_rational_lsop(const SimplicialPoset& p, int attempts, int bound, std::uint64_t seed) {
  if (bound < 0 || attempts < 0) throw error(errc::dimension_mismatch, "attempts and bound must be nonnegative");
  std::mt19937_64 rng(seed);
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  LsopSearch out;
  for (int k = 1; k <= attempts; ++k) {
    IntMatrix candidate(p.top_rank(), p.vertex_count());
    for (int r = 0; r < candidate.rows(); ++r)
      for (int c = 0; c < candidate.cols(); ++c)
        candidate(r, c) = static_cast<long long>(rng() % span) - bound;
    if (is_rational_lsop(p, candidate).ok) {
      out.found = true;
      out.attempts_used = k;
      out.matrix = std::move(candidate);
      return out;
    }
  }
  out.attempts_used = attempts;
  return out;
}

// Audit of the torus-rank lower bounds: with trk = m - n the total
// Betti number must be at least 2^trk, and at least the sharper
// 2^(m - mrk) where mrk is the smallest rank of a maximal face; the
// fold onto the underlying complex cannot raise the total Betti
// number above that of the poset.
struct TrcReport {
  int m = 0;
  int n = 0;
  int mrk = 0;
  int trk = 0;
  long hrk = 0;
  long hrk_underlying = 0;
  Int bound_trk = 0;
  Int bound_mrk = 0;
  bool pure = false;
  bool pass_trk = false;
  bool pass_mrk = false;
  bool pass_fold = false;
  bool pass = false;
};

inline TrcReport trc_audit(const SimplicialPoset& p, const CohomologyRing* precomputed = nullptr) {
  CohomologyRing local;
  if (!precomputed) {
    local = CohomologyRing::compute(p);
    precomputed = &local;
  }
  TrcReport report;
  report.m = p.vertex_count();
  report.n = p.top_rank();
  report.mrk = p.min_max_rank();
  report.trk = report.m - report.n;
  report.hrk = precomputed->total_rank();
  report.pure = p.is_pure();

  FoldResult fold = underlying_complex(p);
  report.hrk_underlying = CohomologyRing::compute(fold.complex).total_rank();

  report.bound_trk = Int(1) << report.trk;
  report.bound_mrk = Int(1) << (report.m - report.mrk);
  report.pass_trk = Int(report.hrk) >= report.bound_trk;
  report.pass_mrk = Int(report.hrk) >= report.bound_mrk;
  report.pass_fold = report.hrk >= report.hrk_underlying;
  report.pass = report.pass_trk && report.pass_mrk && report.pass_fold;
  return report;
}

}  // namespace momac
