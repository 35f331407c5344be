#pragma once

// Shared fixtures and generators for the test suite.
//
// The random poset generator grows a valid simplicial poset one face
// at a time: it picks a vertex set W, picks one already-present face
// for each facet slot (each (|W|-1)-subset of W), and accepts the
// gluing only when the chosen facets agree on their pairwise common
// lower faces, which is exactly what keeps every lower interval a
// boolean lattice. Multiple faces on the same vertex set arise
// naturally this way.

#include "momac/momac.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace fixtures {

using namespace momac;

inline SimplicialPoset two_segments() {
  RawPoset raw;
  raw.name = "two-segments";
  raw.vertex_count = 2;
  raw.faces = {{"s", {"1", "2"}}, {"t", {"1", "2"}}};
  return validate(raw);
}

inline SimplicialPoset two_triangles() {
  RawPoset raw;
  raw.name = "two-triangles";
  raw.vertex_count = 3;
  raw.faces = {{"e12", {"1", "2"}}, {"e13", {"1", "3"}}, {"e23", {"2", "3"}},
               {"s", {"e12", "e13", "e23"}}, {"t", {"e12", "e13", "e23"}}};
  return validate(raw);
}

// Three parallel edges e, f, g between vertices 1 and 2, with pairs
// of them bridged by triangles through the outer vertices 3, 4, 5.
inline SimplicialPoset parallel_triangles() {
  RawPoset raw;
  raw.name = "exmwc";
  raw.vertex_count = 5;
  raw.faces = {{"e", {"1", "2"}},       {"f", {"1", "2"}},       {"g", {"1", "2"}},
               {"p13", {"1", "3"}},     {"p23", {"2", "3"}},     {"p14", {"1", "4"}},
               {"p24", {"2", "4"}},     {"p15", {"1", "5"}},     {"p25", {"2", "5"}},
               {"A", {"e", "p14", "p24"}}, {"B", {"g", "p14", "p24"}}, {"C", {"g", "p13", "p23"}},
               {"s", {"f", "p13", "p23"}}, {"D", {"f", "p15", "p25"}}, {"E", {"e", "p15", "p25"}}};
  return validate(raw);
}

inline SimplicialPoset two_triangles_plus_point() {
  RawPoset raw;
  raw.name = "two-triangles-plus-point";
  raw.vertex_count = 4;
  raw.faces = {{"e12", {"1", "2"}}, {"e13", {"1", "3"}}, {"e23", {"2", "3"}},
               {"s", {"e12", "e13", "e23"}}, {"t", {"e12", "e13", "e23"}}};
  return validate(raw);
}

inline SimplicialPoset two_points() {
  RawPoset raw;
  raw.name = "two-points";
  raw.vertex_count = 2;
  return validate(raw);
}

inline SimplicialPoset projective_plane() {
  const std::vector<std::vector<int>> facets = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                                {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}};
  std::vector<VertexSet> faces;
  for (const auto& f : facets) {
    VertexSet w = 0;
    for (int v : f) w |= vertex_bit(v);
    faces.push_back(w);
  }
  SimplicialPoset p = complex_from_faces("rp2", 6, faces);
  return p;
}

inline SimplicialPoset simplex(int m) {
  return complex_from_faces("simplex" + std::to_string(m), m, {full_set(m)});
}

inline std::string fixture_path(const std::string& name) {
  return std::string(MOMAC_FIXTURE_DIR) + "/" + name + ".sp";
}

// Faces of the poset with the given vertex set.
inline std::vector<int> faces_with_vertices(const SimplicialPoset& p, VertexSet w) {
  std::vector<int> out;
  for (int s = 0; s < p.size(); ++s)
    if (p.element(s).vertices == w) out.push_back(s);
  return out;
}

struct RandomPosetParams {
  int min_vertices = 2;
  int max_vertices = 5;
  int max_rank = 3;
  int moves = 10;
};

inline SimplicialPoset random_poset(std::mt19937_64& rng, const RandomPosetParams& params = {}) {
  const int m = params.min_vertices + static_cast<int>(rng() % (params.max_vertices - params.min_vertices + 1));
  RawPoset raw;
  raw.name = "random";
  raw.vertex_count = m;
  SimplicialPoset current = validate(raw);
  int counter = 0;

  for (int move = 0; move < params.moves; ++move) {
    const int r = 2 + static_cast<int>(rng() % (params.max_rank - 1));
    if (r > m) continue;

    VertexSet w = 0;
    while (popcount(w) < r) w |= vertex_bit(1 + static_cast<int>(rng() % m));

    // One facet choice per (r-1)-subset of w.
    std::vector<int> chosen;
    bool viable = true;
    for (VertexSet rest = w; rest; rest &= rest - 1) {
      std::vector<int> candidates = faces_with_vertices(current, w & ~(rest & -rest));
      if (candidates.empty()) {
        viable = false;
        break;
      }
      chosen.push_back(candidates[rng() % candidates.size()]);
    }
    if (!viable) continue;

    // The gluing is valid when each pair of chosen facets meets in
    // the same face of their common vertex set.
    for (std::size_t i = 0; i < chosen.size() && viable; ++i)
      for (std::size_t j = i + 1; j < chosen.size() && viable; ++j) {
        const VertexSet common = current.element(chosen[i]).vertices & current.element(chosen[j]).vertices;
        if (current.element_below(chosen[i], common) != current.element_below(chosen[j], common)) viable = false;
      }
    if (!viable) continue;

    RawPoset::Face face;
    face.id = "x" + std::to_string(++counter);
    for (int f : chosen) face.facets.push_back(current.element(f).id);

    // Keep the declaration list sorted by rank.
    std::size_t at = 0;
    {
      std::map<std::string, int> rank_of;
      for (int s = 0; s < current.size(); ++s) rank_of[current.element(s).id] = current.element(s).rank;
      while (at < raw.faces.size() && rank_of.at(raw.faces[at].id) <= r) ++at;
    }
    raw.faces.insert(raw.faces.begin() + static_cast<std::ptrdiff_t>(at), std::move(face));
    current = validate(raw);
  }
  return current;
}

// Random complex on at most max_vertices vertices from random facets.
inline SimplicialPoset random_complex(std::mt19937_64& rng, int max_vertices = 5, int max_facets = 4) {
  const int m = 2 + static_cast<int>(rng() % (max_vertices - 1));
  const int count = 1 + static_cast<int>(rng() % max_facets);
  std::vector<VertexSet> faces;
  for (int k = 0; k < count; ++k) {
    VertexSet w = 0;
    const int size = 1 + static_cast<int>(rng() % std::min(3, m));
    while (popcount(w) < size) w |= vertex_bit(1 + static_cast<int>(rng() % m));
    faces.push_back(w);
  }
  return complex_from_faces("random-complex", m, faces);
}

// Independent reduced cohomology of a simplicial complex given only
// by its vertex sets (no poset machinery): cells are the distinct
// subsets, ordered by size then value, with the usual alternating
// coboundary signs.
inline std::map<int, AbelianGroup> simplicial_reduced_cohomology(int m, const std::vector<VertexSet>& faces) {
  std::vector<VertexSet> cells;
  for (VertexSet f : faces)
    for (VertexSet w = f;; w = (w - 1) & f) {
      cells.push_back(w);
      if (w == 0) break;
    }
  cells.push_back(0);
  std::sort(cells.begin(), cells.end(), [](VertexSet a, VertexSet b) {
    return std::make_pair(popcount(a), a) < std::make_pair(popcount(b), b);
  });
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

  int top = 0;
  for (VertexSet w : cells) top = std::max(top, popcount(w));
  std::vector<std::vector<VertexSet>> by_size(top + 1);
  std::vector<std::map<VertexSet, int>> position(top + 1);
  for (VertexSet w : cells) {
    position[popcount(w)][w] = static_cast<int>(by_size[popcount(w)].size());
    by_size[popcount(w)].push_back(w);
  }

  std::vector<IntMatrix> delta(top + 1);
  for (int r = 1; r <= top; ++r) {
    IntMatrix d(static_cast<int>(by_size[r].size()), static_cast<int>(by_size[r - 1].size()));
    for (std::size_t row = 0; row < by_size[r].size(); ++row) {
      const VertexSet w = by_size[r][row];
      for (VertexSet rest = w; rest; rest &= rest - 1) {
        const VertexSet vbit = rest & -rest;
        d(static_cast<int>(row), position[r - 1].at(w & ~vbit)) += popcount(w & (vbit - 1)) % 2 ? -1 : 1;
      }
    }
    delta[r] = std::move(d);
  }

  std::map<int, AbelianGroup> out;
  for (int r = 0; r <= top; ++r) {
    const int dim_r = static_cast<int>(by_size[r].size());
    IntMatrix d_out = r == top ? IntMatrix(0, dim_r) : delta[r + 1];
    IntMatrix d_in = r == 0 ? IntMatrix(dim_r, 0) : delta[r];
    AbelianGroup g = cohomology_at(d_in, d_out);
    if (!g.trivial()) out[r - 1] = std::move(g);
  }
  return out;
}

}  // namespace fixtures
