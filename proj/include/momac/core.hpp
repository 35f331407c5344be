#pragma once

// Shared scalar types and error machinery for the momac library.
//
// All arithmetic is exact: coefficients and matrix entries are
// arbitrary-precision integers, vertex sets are bitmasks over the
// vertex labels 1..m (hence the library supports m <= 64, far beyond
// what full multigraded computations can reach anyway).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace momac {

using Int = boost::multiprecision::cpp_int;

// Vertex subsets of [m], bit i-1 <-> vertex i.
using VertexSet = std::uint64_t;

enum class errc {
  duplicate_id,
  duplicate_facet,
  missing_bottom_cover,
  rank_mismatch,
  boolean_interval_violation,
  too_many_vertices,
  unknown_element,
  poset_mismatch,
  rank_violation,
  not_a_complex,
  not_a_cocycle,
  inhomogeneous_input,
  dimension_mismatch,
  syntax_error,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::duplicate_id: return "DuplicateId";
    case errc::duplicate_facet: return "DuplicateFacet";
    case errc::missing_bottom_cover: return "MissingBottomCover";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::boolean_interval_violation: return "BooleanIntervalViolation";
    case errc::too_many_vertices: return "TooManyVertices";
    case errc::unknown_element: return "UnknownElement";
    case errc::poset_mismatch: return "PosetMismatch";
    case errc::rank_violation: return "RankViolation";
    case errc::not_a_complex: return "NotAComplex";
    case errc::not_a_cocycle: return "NotACocycle";
    case errc::inhomogeneous_input: return "InhomogeneousInput";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::syntax_error: return "SyntaxError";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

inline int popcount(VertexSet s) { return __builtin_popcountll(s); }

// Lowest set bit as a vertex label (1-based); 0 for the empty set.
inline int first_vertex(VertexSet s) { return s ? __builtin_ctzll(s) + 1 : 0; }

inline VertexSet vertex_bit(int v) { return VertexSet{1} << (v - 1); }

inline VertexSet full_set(int m) {
  return m == 64 ? ~VertexSet{0} : (VertexSet{1} << m) - 1;
}

// Renders {1,3,4} as "1,3,4"; empty set as "".
inline std::string vertex_list(VertexSet s) {
  std::string out;
  for (VertexSet rest = s; rest; rest &= rest - 1) {
    if (!out.empty()) out += ',';
    out += std::to_string(first_vertex(rest));
  }
  return out;
}

}  // namespace momac
