#pragma once

// Finite simplicial posets: validation, order queries, joins and
// meets, full subposets, the underlying simplicial complex with its
// folding map, and the join product of two posets.
//
// A simplicial poset has a least element (the bottom, printed "@"),
// and every lower interval [@, s] is a boolean lattice. Rank-1
// elements are the vertices, labeled 1..m; higher faces carry string
// ids. Elements are stored bottom first, then vertices 1..m, then the
// declared faces in non-decreasing rank order, so serialization is a
// faithful round trip.

#include "momac/core.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace momac {

// Unvalidated description: declared faces of rank >= 2 on top of the
// implicit bottom and vertices.
struct RawPoset {
  struct Face {
    std::string id;
    std::vector<std::string> facets;
  };
  std::string name = "unnamed";
  int vertex_count = 0;
  std::vector<Face> faces;
};

class SimplicialPoset {
 public:
  struct Element {
    std::string id;
    int rank = 0;
    VertexSet vertices = 0;
    std::vector<int> facets;  // covered elements; {0} for vertices, empty for the bottom
  };

  const std::string& name() const { return name_; }
  int vertex_count() const { return m_; }
  int size() const { return static_cast<int>(elements_.size()); }
  // Largest rank present (0 for the poset with no vertices).
  int top_rank() const { return top_rank_; }
  const Element& element(int i) const { return elements_[i]; }

  int index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw error(errc::unknown_element, "no element with id '" + id + "'");
    return it->second;
  }

  bool leq(int a, int b) const { return below_[b].test(a); }

  // Minimal common upper bounds of a and b; empty when there are none.
  std::vector<int> join_set(int a, int b) const {
    std::vector<int> uppers;
    for (int s = 0; s < size(); ++s)
      if (leq(a, s) && leq(b, s)) uppers.push_back(s);
    std::vector<int> minimal;
    for (int s : uppers) {
      bool keep = true;
      for (int t : uppers)
        if (t != s && leq(t, s)) {
          keep = false;
          break;
        }
      if (keep) minimal.push_back(s);
    }
    return minimal;
  }

  // Maximal common lower bounds of a and b (never empty: the bottom).
  std::vector<int> meet_set(int a, int b) const {
    std::vector<int> lowers;
    for (int s = 0; s < size(); ++s)
      if (leq(s, a) && leq(s, b)) lowers.push_back(s);
    std::vector<int> maximal;
    for (int s : lowers) {
      bool keep = true;
      for (int t : lowers)
        if (t != s && leq(s, t)) {
          keep = false;
          break;
        }
      if (keep) maximal.push_back(s);
    }
    return maximal;
  }

  // The meet used by straightening: whenever join_set(a, b) is
  // nonempty the greatest lower bound exists and its vertex set is
  // the intersection.
  int meet(int a, int b) const {
    std::vector<int> ms = meet_set(a, b);
    assert(ms.size() == 1);
    return ms.front();
  }

  // The unique face below s with the given vertex set, or -1 when w
  // is not a subset of V(s).
  int element_below(int s, VertexSet w) const {
    const auto& interval = intervals_[s];
    auto it = std::lower_bound(interval.begin(), interval.end(), std::make_pair(w, 0));
    if (it == interval.end() || it->first != w) return -1;
    return it->second;
  }

  // All faces whose vertex set is contained in a, in element order.
  std::vector<int> faces_supported_on(VertexSet a) const {
    std::vector<int> out;
    for (int s = 0; s < size(); ++s)
      if ((elements_[s].vertices & ~a) == 0) out.push_back(s);
    return out;
  }

  std::vector<int> elements_of_rank(int r) const {
    std::vector<int> out;
    for (int s = 0; s < size(); ++s)
      if (elements_[s].rank == r) out.push_back(s);
    return out;
  }

  std::vector<int> maximal_elements() const {
    std::vector<int> out;
    for (int s = 0; s < size(); ++s) {
      bool maximal = true;
      for (int t = 0; t < size() && maximal; ++t)
        if (t != s && leq(s, t)) maximal = false;
      if (maximal) out.push_back(s);
    }
    return out;
  }

  bool is_pure() const {
    for (int s : maximal_elements())
      if (elements_[s].rank != top_rank_) return false;
    return true;
  }

  // Smallest rank among maximal elements.
  int min_max_rank() const {
    int mr = top_rank_;
    for (int s : maximal_elements()) mr = std::min(mr, elements_[s].rank);
    return mr;
  }

  // Structural comparison: same vertex count and identical element
  // list (ids, ranks, facet index sets); the display name is ignored.
  friend bool operator==(const SimplicialPoset& a, const SimplicialPoset& b) {
    if (a.m_ != b.m_ || a.elements_.size() != b.elements_.size()) return false;
    for (std::size_t i = 0; i < a.elements_.size(); ++i) {
      const Element& x = a.elements_[i];
      const Element& y = b.elements_[i];
      std::vector<int> fx = x.facets, fy = y.facets;
      std::sort(fx.begin(), fx.end());
      std::sort(fy.begin(), fy.end());
      if (x.id != y.id || x.rank != y.rank || fx != fy) return false;
    }
    return true;
  }

  friend SimplicialPoset validate(const RawPoset& raw);

 private:
  std::string name_;
  int m_ = 0;
  int top_rank_ = 0;
  std::vector<Element> elements_;
  std::map<std::string, int> index_;
  std::vector<boost::dynamic_bitset<>> below_;  // below_[s] = downset of s, self included
  std::vector<std::vector<std::pair<VertexSet, int>>> intervals_;
};

// Checks the simplicial poset axioms and builds the queryable
// structure. Diagnoses duplicate or reserved ids, unknown facet
// references, facet lists of mixed rank, declarations out of rank
// order, and lower intervals that fail to be boolean lattices.
inline SimplicialPoset validate(const RawPoset& raw) {
  if (raw.vertex_count < 0 || raw.vertex_count > 64)
    throw error(errc::too_many_vertices, "vertex count " + std::to_string(raw.vertex_count) + " outside 0..64");

  SimplicialPoset p;
  p.name_ = raw.name;
  p.m_ = raw.vertex_count;

  p.elements_.push_back({"@", 0, 0, {}});
  for (int v = 1; v <= p.m_; ++v) p.elements_.push_back({std::to_string(v), 1, vertex_bit(v), {0}});
  for (std::size_t i = 0; i < p.elements_.size(); ++i) p.index_[p.elements_[i].id] = static_cast<int>(i);

  int previous_rank = 0;
  for (const RawPoset::Face& face : raw.faces) {
    if (face.id == "@") throw error(errc::duplicate_id, "'@' is reserved for the bottom element");
    if (p.index_.count(face.id)) throw error(errc::duplicate_id, "element id '" + face.id + "' declared twice");
    if (face.facets.empty()) throw error(errc::rank_mismatch, "face '" + face.id + "' declares no facets");

    SimplicialPoset::Element e;
    e.id = face.id;
    std::vector<std::string> seen;
    for (const std::string& fid : face.facets) {
      if (std::find(seen.begin(), seen.end(), fid) != seen.end())
        throw error(errc::duplicate_facet, "face '" + face.id + "' lists facet '" + fid + "' twice");
      seen.push_back(fid);
      auto it = p.index_.find(fid);
      if (it == p.index_.end())
        throw error(errc::unknown_element, "face '" + face.id + "' references undeclared facet '" + fid + "'");
      e.facets.push_back(it->second);
    }

    int facet_rank = p.elements_[e.facets.front()].rank;
    for (int f : e.facets)
      if (p.elements_[f].rank != facet_rank)
        throw error(errc::rank_mismatch, "face '" + face.id + "' has facets of different ranks");
    e.rank = facet_rank + 1;
    if (e.rank < previous_rank)
      throw error(errc::rank_mismatch, "face '" + face.id + "' declared after a face of higher rank");
    previous_rank = e.rank;

    for (int f : e.facets) e.vertices |= p.elements_[f].vertices;
    if (popcount(e.vertices) != e.rank)
      throw error(errc::boolean_interval_violation,
                  "face '" + face.id + "' has rank " + std::to_string(e.rank) + " but vertex set {" +
                      vertex_list(e.vertices) + "}");

    p.index_[e.id] = static_cast<int>(p.elements_.size());
    p.elements_.push_back(std::move(e));
  }

  const int n = p.size();
  p.below_.assign(n, boost::dynamic_bitset<>(n));
  for (int s = 0; s < n; ++s) {
    p.below_[s].set(s);
    if (p.elements_[s].rank > 0) p.below_[s].set(0);
    for (int f : p.elements_[s].facets) p.below_[s] |= p.below_[f];
    p.top_rank_ = std::max(p.top_rank_, p.elements_[s].rank);
  }

  // Each lower interval must hit every subset of the vertex set
  // exactly once.
  p.intervals_.resize(n);
  for (int s = 0; s < n; ++s) {
    auto& interval = p.intervals_[s];
    for (int t = 0; t < n; ++t)
      if (p.below_[s].test(t)) interval.emplace_back(p.elements_[t].vertices, t);
    std::sort(interval.begin(), interval.end());
    const VertexSet vs = p.elements_[s].vertices;
    if (interval.size() != (std::size_t{1} << popcount(vs)))
      throw error(errc::boolean_interval_violation,
                  "interval below '" + p.elements_[s].id + "' has " + std::to_string(interval.size()) +
                      " elements, expected " + std::to_string(std::size_t{1} << popcount(vs)));
    for (std::size_t i = 0; i < interval.size(); ++i) {
      if (i + 1 < interval.size() && interval[i].first == interval[i + 1].first)
        throw error(errc::boolean_interval_violation,
                    "interval below '" + p.elements_[s].id + "' contains two faces with vertex set {" +
                        vertex_list(interval[i].first) + "}");
      if ((interval[i].first & ~vs) != 0)
        throw error(errc::boolean_interval_violation,
                    "face '" + p.elements_[p.intervals_[s][i].second].id + "' below '" + p.elements_[s].id +
                        "' has vertices outside {" + vertex_list(vs) + "}");
    }
  }
  return p;
}

// True when distinct faces always have distinct vertex sets, i.e. the
// poset is the face poset of an honest simplicial complex.
inline bool is_simplicial_complex(const SimplicialPoset& p) {
  std::vector<VertexSet> seen;
  for (int s = 0; s < p.size(); ++s) seen.push_back(p.element(s).vertices);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

// Rank- and order-preserving map between simplicial posets that is
// injective on every lower interval; stored as target indices per
// source index.
struct PosetMap {
  std::vector<int> assignment;
};

inline PosetMap make_poset_map(const SimplicialPoset& src, const SimplicialPoset& tgt, std::vector<int> assignment) {
  if (static_cast<int>(assignment.size()) != src.size())
    throw error(errc::dimension_mismatch,
                "map assigns " + std::to_string(assignment.size()) + " values to a poset of size " +
                    std::to_string(src.size()));
  for (int s = 0; s < src.size(); ++s) {
    int image = assignment[s];
    if (image < 0 || image >= tgt.size())
      throw error(errc::unknown_element, "image index " + std::to_string(image) + " out of range");
    if (tgt.element(image).rank != src.element(s).rank)
      throw error(errc::rank_violation, "map does not preserve rank at '" + src.element(s).id + "'");
    for (int f : src.element(s).facets)
      if (!tgt.leq(assignment[f], image))
        throw error(errc::rank_violation, "map does not preserve order at '" + src.element(s).id + "'");
    std::vector<int> images;
    for (int t = 0; t < src.size(); ++t)
      if (src.leq(t, s)) images.push_back(assignment[t]);
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
      throw error(errc::rank_violation, "map is not injective on the interval below '" + src.element(s).id + "'");
  }
  return PosetMap{std::move(assignment)};
}

namespace detail {

// Canonical id for a face of a simplicial complex: its vertices
// joined by dots, "1.2.4". Rank-1 faces use the bare vertex label.
inline std::string complex_face_id(VertexSet w) {
  std::string id;
  for (VertexSet rest = w; rest; rest &= rest - 1) {
    if (!id.empty()) id += '.';
    id += std::to_string(first_vertex(rest));
  }
  return id;
}

}  // namespace detail

// Face poset of the simplicial complex generated by the given faces
// (all subsets of the given vertex sets are included).
inline SimplicialPoset complex_from_faces(const std::string& name, int m, const std::vector<VertexSet>& faces) {
  std::vector<VertexSet> all;
  for (VertexSet f : faces)
    for (VertexSet w = f;; w = (w - 1) & f) {
      if (popcount(w) >= 2) all.push_back(w);
      if (w == 0) break;
    }
  std::sort(all.begin(), all.end(), [](VertexSet a, VertexSet b) {
    return std::make_pair(popcount(a), a) < std::make_pair(popcount(b), b);
  });
  all.erase(std::unique(all.begin(), all.end()), all.end());

  RawPoset raw;
  raw.name = name;
  raw.vertex_count = m;
  for (VertexSet w : all) {
    RawPoset::Face face;
    face.id = detail::complex_face_id(w);
    for (VertexSet rest = w; rest; rest &= rest - 1)
      face.facets.push_back(detail::complex_face_id(w & ~(rest & -rest)));
    raw.faces.push_back(std::move(face));
  }
  return validate(raw);
}

// Full subposet on the faces supported inside a, with vertices
// relabeled 1..|a| in increasing order of their original labels.
struct Subposet {
  SimplicialPoset poset;
  std::vector<int> elements;  // subposet index -> original index
};

inline Subposet full_subposet(const SimplicialPoset& p, VertexSet a) {
  std::vector<int> relabel(p.vertex_count() + 1, 0);
  int next = 0;
  for (int v = 1; v <= p.vertex_count(); ++v)
    if (a & vertex_bit(v)) relabel[v] = ++next;

  std::vector<int> chosen = p.faces_supported_on(a);
  std::stable_sort(chosen.begin(), chosen.end(),
                   [&p](int x, int y) { return p.element(x).rank < p.element(y).rank; });

  auto local_id = [&](int orig) {
    const auto& e = p.element(orig);
    if (e.rank == 1) return std::to_string(relabel[first_vertex(e.vertices)]);
    return e.id;
  };

  RawPoset raw;
  raw.name = p.name() + "|{" + vertex_list(a) + "}";
  raw.vertex_count = next;
  for (int orig : chosen) {
    const auto& e = p.element(orig);
    if (e.rank < 2) continue;
    RawPoset::Face face;
    face.id = e.id;
    for (int f : e.facets) face.facets.push_back(local_id(f));
    raw.faces.push_back(std::move(face));
  }

  Subposet out{validate(raw), {}};
  out.elements.reserve(chosen.size());
  for (int orig : chosen) out.elements.push_back(orig);
  return out;
}

// Underlying simplicial complex: one face per distinct vertex set,
// together with the fold map sending each face to the face with the
// same vertex set.
struct FoldResult {
  SimplicialPoset complex;
  PosetMap fold;
};

inline FoldResult underlying_complex(const SimplicialPoset& p) {
  std::vector<VertexSet> faces;
  for (int s = 0; s < p.size(); ++s) faces.push_back(p.element(s).vertices);
  SimplicialPoset complex = complex_from_faces("K(" + p.name() + ")", p.vertex_count(), faces);

  std::vector<int> assignment(p.size());
  for (int s = 0; s < p.size(); ++s) {
    VertexSet w = p.element(s).vertices;
    assignment[s] = w == 0 ? 0 : complex.index_of(detail::complex_face_id(w));
  }
  PosetMap fold = make_poset_map(p, complex, std::move(assignment));
  return FoldResult{std::move(complex), std::move(fold)};
}

// Join product: vertices are the disjoint union (second factor
// shifted), faces are pairs with componentwise order.
inline SimplicialPoset join_product(const SimplicialPoset& a, const SimplicialPoset& b) {
  if (a.vertex_count() + b.vertex_count() > 64)
    throw error(errc::too_many_vertices, "join would have " + std::to_string(a.vertex_count() + b.vertex_count()) +
                                             " vertices, limit is 64");

  // id per pair (s, t), built in rank order so facets resolve.
  std::map<std::pair<int, int>, std::string> pair_id;
  std::map<std::string, int> used;
  auto claim = [&used](std::string base) {
    while (used.count(base)) base += '\'';
    used[base] = 1;
    return base;
  };

  auto side_id = [&](const SimplicialPoset& p, int s, bool shift) {
    const auto& e = p.element(s);
    if (e.rank == 1) {
      int v = first_vertex(e.vertices);
      return std::to_string(shift ? v + a.vertex_count() : v);
    }
    return e.id;
  };

  RawPoset raw;
  raw.name = a.name() + "*" + b.name();
  raw.vertex_count = a.vertex_count() + b.vertex_count();
  pair_id[{0, 0}] = "@";
  used["@"] = 1;
  for (int v = 1; v <= a.vertex_count(); ++v) {
    pair_id[{v, 0}] = std::to_string(v);
    used[std::to_string(v)] = 1;
  }
  for (int v = 1; v <= b.vertex_count(); ++v) {
    pair_id[{0, v}] = std::to_string(a.vertex_count() + v);
    used[std::to_string(a.vertex_count() + v)] = 1;
  }

  const int top = a.top_rank() + b.top_rank();
  for (int r = 2; r <= top; ++r)
    for (int s = 0; s < a.size(); ++s) {
      if (a.element(s).rank > r) continue;
      for (int t = 0; t < b.size(); ++t) {
        if (a.element(s).rank + b.element(t).rank != r) continue;
        std::string id;
        if (t == 0)
          id = claim(side_id(a, s, false));
        else if (s == 0)
          id = claim(side_id(b, t, true));
        else
          id = claim(side_id(a, s, false) + "*" + side_id(b, t, true));
        pair_id[{s, t}] = id;

        RawPoset::Face face;
        face.id = id;
        for (int f : a.element(s).facets) face.facets.push_back(pair_id.at({f, t}));
        for (int f : b.element(t).facets) face.facets.push_back(pair_id.at({s, f}));
        raw.faces.push_back(std::move(face));
      }
    }
  return validate(raw);
}

}  // namespace momac
