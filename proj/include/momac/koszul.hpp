#pragma once

// The Koszul cochain ring of a simplicial poset and its cohomology,
// which computes the integral cohomology of the associated
// moment-angle complex.
//
// The ring has Z-basis u_w v_s where w is a vertex set disjoint from
// V(s); u-variables are exterior of bidegree (-1, 2), face generators
// v_s have bidegree (0, 2 V(s)). The differential sends u_j to the
// sum of the vertices above j and v_s to zero, extended as a
// derivation:
//
//   d(u_w v_s) = sum over j in w of
//                (-1)^(number of w-elements below j) u_(w \ j) *
//                sum of v_e over minimal upper bounds e of j and s.
//
// The whole ring splits by squarefree multidegree: the piece of
// multidegree 2a has basis u_(a \ V(s)) v_s over faces s supported on
// a, concentrated in cohomological degrees -|a| .. 0. Cohomology of
// each piece is computed exactly over Z, with stored reductions so
// classes have canonical coordinates and cup products are evaluated
// on explicit cocycle representatives.

#include "momac/core.hpp"
#include "momac/exact.hpp"
#include "momac/poset.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace momac {

struct KoszulMonomial {
  VertexSet omega = 0;
  int face = 0;

  friend auto operator<=>(const KoszulMonomial&, const KoszulMonomial&) = default;

  std::string to_string(const SimplicialPoset& p) const {
    std::string out;
    for (VertexSet rest = omega; rest; rest &= rest - 1) {
      if (!out.empty()) out += ' ';
      out += "u" + std::to_string(first_vertex(rest));
    }
    if (face != 0) {
      if (!out.empty()) out += ' ';
      out += "v(" + p.element(face).id + ")";
    }
    return out.empty() ? "1" : out;
  }
};

// Homogeneous cochain: all terms share the exterior degree |omega|
// and the squarefree multidegree omega | V(face). The zero cochain is
// compatible with every bidegree.
class KoszulCochain {
 public:
  explicit KoszulCochain(const SimplicialPoset& p) : poset_(&p) {}

  // u_omega v_face, which is zero in the ring when omega meets V(face).
  static KoszulCochain monomial(const SimplicialPoset& p, VertexSet omega, int face, Int c = 1) {
    KoszulCochain x(p);
    if (face < 0 || face >= p.size())
      throw error(errc::unknown_element, "face index " + std::to_string(face) + " out of range");
    if ((omega & p.element(face).vertices) == 0) x.add_term({omega, face}, std::move(c));
    return x;
  }

  const SimplicialPoset& poset() const { return *poset_; }
  const std::map<KoszulMonomial, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Exterior degree |omega|; meaningless on the zero cochain.
  int exterior_degree() const { return exterior_degree_; }
  // Vertex support a, so the cochain lives in multidegree 2a.
  VertexSet support() const { return support_; }

  void add_term(const KoszulMonomial& mono, const Int& c) {
    if (c == 0) return;
    if ((mono.omega & poset_->element(mono.face).vertices) != 0)
      throw error(errc::inhomogeneous_input,
                  "u-set {" + vertex_list(mono.omega) + "} meets the vertices of '" + poset_->element(mono.face).id + "'");
    const int deg = popcount(mono.omega);
    const VertexSet sup = mono.omega | poset_->element(mono.face).vertices;
    if (terms_.empty()) {
      exterior_degree_ = deg;
      support_ = sup;
    } else if (deg != exterior_degree_ || sup != support_) {
      throw error(errc::inhomogeneous_input, "terms of different bidegrees in one cochain");
    }
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    if (terms_.empty()) {
      exterior_degree_ = -1;
      support_ = 0;
    }
  }

  KoszulCochain& operator+=(const KoszulCochain& other) {
    require_same_poset(other);
    for (const auto& [mono, c] : other.terms_) add_term(mono, c);
    return *this;
  }

  KoszulCochain& operator-=(const KoszulCochain& other) {
    require_same_poset(other);
    for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
    return *this;
  }

  KoszulCochain& operator*=(const Int& c) {
    if (c == 0) {
      terms_.clear();
      exterior_degree_ = -1;
      support_ = 0;
      return *this;
    }
    for (auto& [mono, coeff] : terms_) coeff *= c;
    return *this;
  }

  friend KoszulCochain operator+(KoszulCochain a, const KoszulCochain& b) { return a += b; }
  friend KoszulCochain operator-(KoszulCochain a, const KoszulCochain& b) { return a -= b; }
  friend KoszulCochain operator*(KoszulCochain a, const Int& c) { return a *= c; }
  friend KoszulCochain operator*(const Int& c, KoszulCochain a) { return a *= c; }
  friend bool operator==(const KoszulCochain& a, const KoszulCochain& b) {
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
      if (a != 1) out += a.str() + " ";
      out += mono.to_string(*poset_);
    }
    return out;
  }

 private:
  void require_same_poset(const KoszulCochain& other) const {
    if (poset_ != other.poset_) throw error(errc::poset_mismatch, "operands live over different posets");
  }

  const SimplicialPoset* poset_;
  int exterior_degree_ = -1;
  VertexSet support_ = 0;
  std::map<KoszulMonomial, Int> terms_;
};

inline KoszulCochain differential(const KoszulCochain& x) {
  const SimplicialPoset& p = x.poset();
  KoszulCochain out(p);
  for (const auto& [mono, c] : x.terms()) {
    for (VertexSet rest = mono.omega; rest; rest &= rest - 1) {
      const int j = first_vertex(rest);
      const int sign = popcount(mono.omega & (vertex_bit(j) - 1)) % 2 ? -1 : 1;
      for (int e : p.join_set(j, mono.face)) out.add_term({mono.omega & ~vertex_bit(j), e}, sign * c);
    }
  }
  return out;
}

inline KoszulCochain operator*(const KoszulCochain& x, const KoszulCochain& y) {
  if (&x.poset() != &y.poset()) throw error(errc::poset_mismatch, "operands live over different posets");
  const SimplicialPoset& p = x.poset();
  KoszulCochain out(p);
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      const VertexSet sx = mx.omega | p.element(mx.face).vertices;
      const VertexSet sy = my.omega | p.element(my.face).vertices;
      if ((sx & sy) != 0) continue;
      // Sign of the shuffle merging the two ascending u-blocks.
      int inversions = 0;
      for (VertexSet rest = mx.omega; rest; rest &= rest - 1)
        inversions += popcount(my.omega & ((rest & -rest) - 1));
      const Int c = (inversions % 2 ? -1 : 1) * cx * cy;
      for (int e : p.join_set(mx.face, my.face)) out.add_term({mx.omega | my.omega, e}, c);
    }
  return out;
}

// The multidegree-2a piece of the Koszul ring as an explicit cochain
// complex. Level i holds the faces of rank |a| - i supported on a;
// d[i] maps level i to level i - 1 (raising cohomological degree),
// with d[0] the zero map out of level 0.
struct MultigradedComplex {
  VertexSet a = 0;
  std::vector<std::vector<int>> basis;  // basis[i]: face indices, ascending
  std::vector<IntMatrix> d;             // d[i]: |basis[i-1]| x |basis[i]|; d[0]: 0 x |basis[0]|

  KoszulCochain cochain(const SimplicialPoset& p, int level, const std::vector<Int>& coords) const {
    KoszulCochain out(p);
    for (std::size_t k = 0; k < basis[level].size(); ++k)
      if (coords[k] != 0) out.add_term({a & ~p.element(basis[level][k]).vertices, basis[level][k]}, coords[k]);
    return out;
  }
};

inline MultigradedComplex multigraded_complex(const SimplicialPoset& p, VertexSet a) {
  if ((a & ~full_set(p.vertex_count())) != 0)
    throw error(errc::dimension_mismatch, "multidegree {" + vertex_list(a) + "} uses vertices beyond m");
  const int k = popcount(a);
  MultigradedComplex mc;
  mc.a = a;
  mc.basis.assign(k + 1, {});
  for (int s : p.faces_supported_on(a)) mc.basis[k - p.element(s).rank].push_back(s);

  std::vector<std::map<int, int>> position(k + 1);
  for (int i = 0; i <= k; ++i)
    for (std::size_t col = 0; col < mc.basis[i].size(); ++col) position[i][mc.basis[i][col]] = static_cast<int>(col);

  mc.d.reserve(k + 1);
  mc.d.push_back(IntMatrix(0, static_cast<int>(mc.basis[0].size())));
  for (int i = 1; i <= k; ++i) {
    IntMatrix d(static_cast<int>(mc.basis[i - 1].size()), static_cast<int>(mc.basis[i].size()));
    for (std::size_t col = 0; col < mc.basis[i].size(); ++col) {
      const int s = mc.basis[i][col];
      KoszulCochain image = differential(KoszulCochain::monomial(p, a & ~p.element(s).vertices, s));
      for (const auto& [mono, c] : image.terms()) d(position[i - 1].at(mono.face), static_cast<int>(col)) = c;
    }
    mc.d.push_back(std::move(d));
  }
  return mc;
}

// Class in H^{-i, 2a}: canonical coordinates against the stored
// reduction of that bidegree (torsion residues first, then free
// coordinates).
struct CohomologyClass {
  VertexSet a = 0;
  int i = 0;
  std::vector<Int> coords;

  bool is_zero() const {
    for (const Int& c : coords)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
};

class CohomologyRing {
 public:
  struct Slot {
    VertexSet a = 0;
    int i = 0;
    std::vector<int> basis;  // cochain basis: face indices
    CochainReduction reduction;
  };

  static CohomologyRing compute(const SimplicialPoset& p) {
    CohomologyRing ring;
    ring.poset_ = &p;
    for (VertexSet a = 0;; ++a) {
      MultigradedComplex mc = multigraded_complex(p, a);
      const int k = popcount(a);
      for (int i = 0; i <= k; ++i) {
        if (mc.basis[i].empty()) continue;
        IntMatrix d_in = i == k ? IntMatrix(static_cast<int>(mc.basis[i].size()), 0) : mc.d[i + 1];
        Slot slot{a, i, mc.basis[i], CochainReduction(d_in, mc.d[i])};
        ring.slots_.emplace(std::make_pair(a, i), std::move(slot));
      }
      if (a == full_set(p.vertex_count())) break;
    }
    return ring;
  }

  const SimplicialPoset& poset() const { return *poset_; }

  const Slot* slot(VertexSet a, int i) const {
    auto it = slots_.find({a, i});
    return it == slots_.end() ? nullptr : &it->second;
  }

  // Trivial group for bidegrees with no cochains at all.
  AbelianGroup group(VertexSet a, int i) const {
    const Slot* s = slot(a, i);
    return s ? s->reduction.group() : AbelianGroup{};
  }

  const std::map<std::pair<VertexSet, int>, Slot>& slots() const { return slots_; }

  CohomologyClass zero_class(VertexSet a, int i) const {
    const Slot* s = slot(a, i);
    return CohomologyClass{a, i, std::vector<Int>(s ? s->reduction.generator_count() : 0)};
  }

  CohomologyClass class_of(const KoszulCochain& z) const {
    if (&z.poset() != poset_) throw error(errc::poset_mismatch, "cochain lives over a different poset");
    if (z.is_zero()) throw error(errc::inhomogeneous_input, "the zero cochain does not determine a bidegree");
    const VertexSet a = z.support();
    const int i = z.exterior_degree();
    const Slot* s = slot(a, i);
    if (!s) throw error(errc::dimension_mismatch, "no cochains in this bidegree");
    std::vector<Int> x(s->basis.size());
    for (const auto& [mono, c] : z.terms()) {
      auto it = std::lower_bound(s->basis.begin(), s->basis.end(), mono.face);
      x[static_cast<std::size_t>(it - s->basis.begin())] = c;
    }
    return CohomologyClass{a, i, s->reduction.reduce(x)};
  }

  KoszulCochain representative(const CohomologyClass& c) const {
    const Slot* s = slot(c.a, c.i);
    if (!s) {
      if (!c.is_zero()) throw error(errc::dimension_mismatch, "no cochains in this bidegree");
      return KoszulCochain(*poset_);
    }
    if (static_cast<long>(c.coords.size()) != s->reduction.generator_count())
      throw error(errc::dimension_mismatch, "coordinate count does not match the group presentation");
    std::vector<Int> x(s->basis.size());
    for (long g = 0; g < s->reduction.generator_count(); ++g) {
      if (c.coords[g] == 0) continue;
      std::vector<Int> gen = s->reduction.generator(g);
      for (std::size_t r = 0; r < x.size(); ++r) x[r] += c.coords[g] * gen[r];
    }
    KoszulCochain out(*poset_);
    for (std::size_t r = 0; r < x.size(); ++r)
      if (x[r] != 0) out.add_term({c.a & ~poset_->element(s->basis[r]).vertices, s->basis[r]}, x[r]);
    return out;
  }

  CohomologyClass cup(const CohomologyClass& x, const CohomologyClass& y) const {
    const VertexSet a = x.a | y.a;
    const int i = x.i + y.i;
    if ((x.a & y.a) != 0 || x.is_zero() || y.is_zero()) return zero_class(a, i);
    KoszulCochain product = representative(x) * representative(y);
    if (product.is_zero()) return zero_class(a, i);
    return class_of(product);
  }

  CohomologyClass negate(const CohomologyClass& c) const {
    const Slot* s = slot(c.a, c.i);
    CohomologyClass out = c;
    if (!s) return out;
    const auto& torsion = s->reduction.group().torsion;
    for (std::size_t k = 0; k < out.coords.size(); ++k) {
      if (k < torsion.size()) {
        if (out.coords[k] != 0) out.coords[k] = torsion[k] - out.coords[k];
      } else {
        out.coords[k] = -out.coords[k];
      }
    }
    return out;
  }

  // Free ranks of the total cohomology, indexed by topological degree
  // p = 2|a| - i.
  std::vector<long> betti() const {
    std::vector<long> b(poset_->vertex_count() + poset_->top_rank() + 1, 0);
    for (const auto& [key, s] : slots_) {
      const int p = 2 * popcount(key.first) - key.second;
      b[p] += s.reduction.group().free_rank;
    }
    while (b.size() > 1 && b.back() == 0) b.pop_back();
    return b;
  }

  long total_rank() const {
    long total = 0;
    for (const auto& [key, s] : slots_) total += s.reduction.group().free_rank;
    return total;
  }

 private:
  const SimplicialPoset* poset_ = nullptr;
  std::map<std::pair<VertexSet, int>, Slot> slots_;
};

inline std::string poincare_polynomial(const std::vector<long>& betti) {
  std::string out;
  for (std::size_t p = 0; p < betti.size(); ++p) {
    if (betti[p] == 0) continue;
    if (!out.empty()) out += " + ";
    if (p == 0)
      out += std::to_string(betti[p]);
    else {
      if (betti[p] != 1) out += std::to_string(betti[p]) + "*";
      out += "t";
      if (p > 1) out += "^" + std::to_string(p);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace momac
