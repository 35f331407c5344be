#pragma once

// The face ring of a simplicial poset: one generator per face, with
// deg v_s twice the rank of s, subject to
//
//   v_s * v_t = v_(s meet t) * sum of v_e over minimal upper bounds e
//
// (an empty set of upper bounds gives zero). Products along a chain
// are irreducible, and the monomials
//
//   v_t1^a1 * ... * v_tk^ak   with  t1 < t2 < ... < tk
//
// form a Z-basis. straighten_product rewrites arbitrary products into
// this basis by applying the relation to an adjacent incomparable
// pair; each rewrite strictly increases the sum of squared ranks of
// the word, which bounds the recursion.

#include "momac/core.hpp"
#include "momac/poset.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace momac {

// Product of generators along a chain, exponents >= 1, faces listed
// upward. The empty monomial is the ring unit.
struct ChainMonomial {
  std::vector<std::pair<int, int>> powers;  // (face index, exponent)

  friend auto operator<=>(const ChainMonomial&, const ChainMonomial&) = default;

  // Exponent vector over the vertices in the Z^m grading, where v_s
  // contributes 2 to each vertex of s.
  std::vector<int> multidegree(const SimplicialPoset& p) const {
    std::vector<int> deg(p.vertex_count(), 0);
    for (auto [face, exp] : powers)
      for (VertexSet rest = p.element(face).vertices; rest; rest &= rest - 1) deg[first_vertex(rest) - 1] += 2 * exp;
    return deg;
  }

  int total_degree(const SimplicialPoset& p) const {
    int d = 0;
    for (auto [face, exp] : powers) d += 2 * exp * p.element(face).rank;
    return d;
  }

  std::string to_string(const SimplicialPoset& p) const {
    if (powers.empty()) return "1";
    std::string out;
    for (auto [face, exp] : powers) {
      if (!out.empty()) out += ' ';
      out += "v(" + p.element(face).id + ")";
      if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out;
  }
};

class ChainElement {
 public:
  explicit ChainElement(const SimplicialPoset& p) : poset_(&p) {}

  static ChainElement unit(const SimplicialPoset& p) {
    ChainElement x(p);
    x.terms_[ChainMonomial{}] = 1;
    return x;
  }

  // v_face; the bottom gives the unit.
  static ChainElement generator(const SimplicialPoset& p, int face) {
    if (face < 0 || face >= p.size())
      throw error(errc::unknown_element, "face index " + std::to_string(face) + " out of range");
    if (face == 0) return unit(p);
    ChainElement x(p);
    x.terms_[ChainMonomial{{{face, 1}}}] = 1;
    return x;
  }

  static ChainElement generator(const SimplicialPoset& p, const std::string& id) {
    return generator(p, p.index_of(id));
  }

  const SimplicialPoset& poset() const { return *poset_; }
  const std::map<ChainMonomial, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const ChainMonomial& mono, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  ChainElement& operator+=(const ChainElement& other) {
    require_same_poset(other);
    for (const auto& [mono, c] : other.terms_) add_term(mono, c);
    return *this;
  }

  ChainElement& operator-=(const ChainElement& other) {
    require_same_poset(other);
    for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
    return *this;
  }

  ChainElement& operator*=(const Int& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [mono, coeff] : terms_) coeff *= c;
    return *this;
  }

  friend ChainElement operator+(ChainElement a, const ChainElement& b) { return a += b; }
  friend ChainElement operator-(ChainElement a, const ChainElement& b) { return a -= b; }
  friend ChainElement operator*(ChainElement a, const Int& c) { return a *= c; }
  friend ChainElement operator*(const Int& c, ChainElement a) { return a *= c; }
  friend bool operator==(const ChainElement& a, const ChainElement& b) {
    return a.poset_ == b.poset_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, c] : terms_) {
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      Int a = abs(c);
      if (a != 1 || mono.powers.empty()) {
        out += a.str();
        if (!mono.powers.empty()) out += ' ';
      }
      if (!mono.powers.empty()) out += mono.to_string(*poset_);
    }
    return out;
  }

 private:
  void require_same_poset(const ChainElement& other) const {
    if (poset_ != other.poset_) throw error(errc::poset_mismatch, "operands live over different posets");
  }

  const SimplicialPoset* poset_;
  std::map<ChainMonomial, Int> terms_;
};

namespace detail {

// Expands a worklist of plain words (multisets of faces) into the
// chain-monomial basis.
inline void straighten_word(const SimplicialPoset& p, std::vector<int> word, Int coeff, ChainElement& out) {
  std::vector<std::pair<std::vector<int>, Int>> stack;
  stack.emplace_back(std::move(word), std::move(coeff));
  while (!stack.empty()) {
    auto [w, c] = std::move(stack.back());
    stack.pop_back();

    std::sort(w.begin(), w.end(), [&p](int x, int y) {
      return std::make_pair(p.element(x).rank, x) < std::make_pair(p.element(y).rank, y);
    });

    // After rank-sorting, adjacent comparability means the word is a
    // chain: comparability with equal ranks forces equality, and with
    // increasing ranks forces <=, so transitivity orders the word.
    int bad = -1;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] != w[i + 1] && !p.leq(w[i], w[i + 1])) {
        bad = static_cast<int>(i);
        break;
      }

    if (bad < 0) {
      ChainMonomial mono;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (!mono.powers.empty() && mono.powers.back().first == w[i])
          ++mono.powers.back().second;
        else
          mono.powers.push_back({w[i], 1});
      out.add_term(mono, c);
      continue;
    }

    const int s = w[bad], t = w[bad + 1];
    std::vector<int> uppers = p.join_set(s, t);
    if (uppers.empty()) continue;
    const int meet = p.meet(s, t);
    std::vector<int> rest;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (static_cast<int>(i) != bad && static_cast<int>(i) != bad + 1) rest.push_back(w[i]);
    if (meet != 0) rest.push_back(meet);
    for (int e : uppers) {
      std::vector<int> next = rest;
      next.push_back(e);
      stack.emplace_back(std::move(next), c);
    }
  }
}

}  // namespace detail

inline ChainElement straighten_product(const ChainElement& x, const ChainElement& y) {
  if (&x.poset() != &y.poset()) throw error(errc::poset_mismatch, "operands live over different posets");
  const SimplicialPoset& p = x.poset();
  ChainElement out(p);
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      std::vector<int> word;
      for (auto [face, exp] : mx.powers) word.insert(word.end(), exp, face);
      for (auto [face, exp] : my.powers) word.insert(word.end(), exp, face);
      detail::straighten_word(p, std::move(word), cx * cy, out);
    }
  return out;
}

inline ChainElement operator*(const ChainElement& a, const ChainElement& b) { return straighten_product(a, b); }

// Ranks of the graded pieces of the face ring up to a total degree
// bound (inclusive, in the topological grading where generators sit
// in even degrees).
struct HilbertTable {
  int degree_bound = 0;
  std::map<std::vector<int>, long> by_multidegree;
  std::vector<long> by_total_degree;
};

inline HilbertTable hilbert_function(const SimplicialPoset& p, int degree_bound) {
  if (degree_bound < 0) throw error(errc::dimension_mismatch, "degree bound must be nonnegative");
  HilbertTable table;
  table.degree_bound = degree_bound;
  table.by_total_degree.assign(degree_bound + 1, 0);

  const int budget = degree_bound / 2;
  std::vector<int> degree(p.vertex_count(), 0);

  // Walk all chain monomials of weight at most the budget, choosing
  // strictly increasing faces and positive exponents.
  auto record = [&table, &degree](int weight) {
    std::vector<int> key = degree;
    ++table.by_multidegree[key];
    ++table.by_total_degree[2 * weight];
  };

  auto rec = [&](auto&& self, int last, int weight) -> void {
    record(weight);
    for (int face = 1; face < p.size(); ++face) {
      if (last >= 0 && (face == last || !p.leq(last, face))) continue;
      const int r = p.element(face).rank;
      if (weight + r > budget) continue;
      for (int exp = 1; weight + exp * r <= budget; ++exp) {
        for (VertexSet rest = p.element(face).vertices; rest; rest &= rest - 1) degree[first_vertex(rest) - 1] += 2 * exp;
        self(self, face, weight + exp * r);
        for (VertexSet rest = p.element(face).vertices; rest; rest &= rest - 1) degree[first_vertex(rest) - 1] -= 2 * exp;
      }
    }
  };
  rec(rec, -1, 0);
  return table;
}

// Image of x under the restriction map to the polynomial ring on the
// vertices of the given face: v_t maps to the squarefree monomial of
// V(t) when t <= face and to zero otherwise. Keys are exponent
// vectors over all m vertices (entries outside V(face) stay zero).
using Polynomial = std::map<std::vector<int>, Int>;

inline Polynomial restriction(const ChainElement& x, int face) {
  const SimplicialPoset& p = x.poset();
  if (face < 0 || face >= p.size())
    throw error(errc::unknown_element, "face index " + std::to_string(face) + " out of range");
  Polynomial out;
  for (const auto& [mono, c] : x.terms()) {
    bool inside = true;
    for (auto [f, exp] : mono.powers)
      if (!p.leq(f, face)) {
        inside = false;
        break;
      }
    if (!inside) continue;
    std::vector<int> exps(p.vertex_count(), 0);
    for (auto [f, exp] : mono.powers)
      for (VertexSet rest = p.element(f).vertices; rest; rest &= rest - 1) exps[first_vertex(rest) - 1] += exp;
    auto [it, inserted] = out.emplace(std::move(exps), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

// Compares, degree by degree, the rank of the face ring with the rank
// of the inverse limit of the vertex-polynomial rings over all faces.
// In a fixed multidegree a compatible family assigns one coefficient
// to every face whose vertex set supports the monomial, constantly on
// comparable faces, so the limit rank counts comparability
// components.
struct LimitRow {
  std::vector<int> multidegree;  // doubled entries
  long ring_rank = 0;
  long limit_rank = 0;
};

struct LimitReport {
  bool pass = true;
  int degree_bound = 0;
  std::vector<LimitRow> rows;
};

inline LimitReport limit_check(const SimplicialPoset& p, int degree_bound) {
  HilbertTable table = hilbert_function(p, degree_bound);
  LimitReport report;
  report.degree_bound = degree_bound;

  const int m = p.vertex_count();
  const int budget = degree_bound / 2;

  std::vector<int> exps(m, 0);
  auto limit_rank_at = [&p](const std::vector<int>& alpha) {
    VertexSet support = 0;
    for (std::size_t v = 0; v < alpha.size(); ++v)
      if (alpha[v] > 0) support |= vertex_bit(static_cast<int>(v) + 1);
    std::vector<int> admissible;
    for (int s = 0; s < p.size(); ++s)
      if ((support & ~p.element(s).vertices) == 0) admissible.push_back(s);

    std::vector<int> parent(admissible.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&parent](int i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    for (std::size_t i = 0; i < admissible.size(); ++i)
      for (std::size_t j = i + 1; j < admissible.size(); ++j)
        if (p.leq(admissible[i], admissible[j]) || p.leq(admissible[j], admissible[i])) {
          int ri = find(static_cast<int>(i)), rj = find(static_cast<int>(j));
          if (ri != rj) parent[ri] = rj;
        }
    long components = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i)) ++components;
    return components;
  };

  auto rec = [&](auto&& self, int vertex, int remaining) -> void {
    if (vertex == m) {
      LimitRow row;
      row.multidegree.assign(m, 0);
      for (int v = 0; v < m; ++v) row.multidegree[v] = 2 * exps[v];
      auto it = table.by_multidegree.find(row.multidegree);
      row.ring_rank = it == table.by_multidegree.end() ? 0 : it->second;
      row.limit_rank = limit_rank_at(exps);
      if (row.ring_rank != row.limit_rank) report.pass = false;
      report.rows.push_back(std::move(row));
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[vertex] = e;
      self(self, vertex + 1, remaining - e);
    }
    exps[vertex] = 0;
  };
  rec(rec, 0, budget);
  return report;
}

// Pullback along a poset map: each generator of the target pulls back
// to the sum of the generators over its preimage fiber.
inline ChainElement induced_map(const SimplicialPoset& src, const SimplicialPoset& tgt, const PosetMap& map,
                                const ChainElement& y) {
  if (&y.poset() != &tgt) throw error(errc::poset_mismatch, "element does not live over the map target");
  if (static_cast<int>(map.assignment.size()) != src.size())
    throw error(errc::dimension_mismatch, "map size does not match the source poset");

  std::vector<ChainElement> fiber_sum;
  fiber_sum.reserve(tgt.size());
  for (int t = 0; t < tgt.size(); ++t) fiber_sum.push_back(ChainElement(src));
  for (int s = 0; s < src.size(); ++s) {
    if (s == 0) continue;
    fiber_sum[map.assignment[s]] += ChainElement::generator(src, s);
  }

  ChainElement out(src);
  for (const auto& [mono, c] : y.terms()) {
    ChainElement term = ChainElement::unit(src) * c;
    for (auto [face, exp] : mono.powers)
      for (int k = 0; k < exp; ++k) term = term * fiber_sum[face];
    out += term;
  }
  return out;
}

}  // namespace momac
