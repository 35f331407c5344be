#pragma once

// Exact integer linear algebra: dense matrices over Z, Smith normal
// form with invertible transform tracking, ranks via fraction-free
// elimination, and the kernel/image reduction used to present
// cohomology groups with explicit cocycle representatives.

#include "momac/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

namespace momac {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Int& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const {
    for (const Int& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  IntMatrix operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
      throw error(errc::dimension_mismatch, "matrix product of " + std::to_string(rows_) + "x" +
                                                std::to_string(cols_) + " by " + std::to_string(other.rows_) + "x" +
                                                std::to_string(other.cols_));
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Int& a = (*this)(i, k);
        if (a == 0) continue;
        for (int j = 0; j < other.cols_; ++j) {
          const Int& b = other(k, j);
          if (b != 0) out(i, j) += a * b;
        }
      }
    return out;
  }

  std::vector<Int> apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_)
      throw error(errc::dimension_mismatch, "matrix-vector product: " + std::to_string(cols_) + " columns vs vector of length " +
                                                std::to_string(x.size()));
    std::vector<Int> out(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && x[j] != 0) out[i] += (*this)(i, j) * x[j];
    return out;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

// Rank over Q by fraction-free Gaussian elimination (Bareiss).
inline int rank(IntMatrix a) {
  int r = 0;
  Int prev = 1;
  for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
    int pivot = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pivot, j));
    for (int i = r + 1; i < a.rows(); ++i) {
      for (int j = col + 1; j < a.cols(); ++j) a(i, j) = (a(r, col) * a(i, j) - a(i, col) * a(r, j)) / prev;
      a(i, col) = 0;
    }
    prev = a(r, col);
    ++r;
  }
  return r;
}

// Smith normal form d = u * m * v with u, v invertible over Z and
// their inverses tracked alongside. Diagonal entries are nonnegative
// and each divides the next.
struct SmithForm {
  IntMatrix d;
  IntMatrix u, uinv;  // row transforms
  IntMatrix v, vinv;  // column transforms
  int rank = 0;

  std::vector<Int> invariant_factors() const {
    std::vector<Int> out;
    for (int i = 0; i < rank; ++i) out.push_back(d(i, i));
    return out;
  }
};

namespace detail {

// Synchronized elementary operations preserving a = u * m * v.
struct SnfWorker {
  IntMatrix a, u, uinv, v, vinv;

  explicit SnfWorker(IntMatrix m)
      : a(std::move(m)),
        u(IntMatrix::identity(a.rows())),
        uinv(IntMatrix::identity(a.rows())),
        v(IntMatrix::identity(a.cols())),
        vinv(IntMatrix::identity(a.cols())) {}

  void row_swap(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (int c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    for (int r = 0; r < uinv.rows(); ++r) std::swap(uinv(r, i), uinv(r, j));
  }

  // row i -= q * row j
  void row_axpy(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < a.cols(); ++c) a(i, c) -= q * a(j, c);
    for (int c = 0; c < u.cols(); ++c) u(i, c) -= q * u(j, c);
    for (int r = 0; r < uinv.rows(); ++r) uinv(r, j) += q * uinv(r, i);
  }

  void row_negate(int i) {
    for (int c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (int c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    for (int r = 0; r < uinv.rows(); ++r) uinv(r, i) = -uinv(r, i);
  }

  void col_swap(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (int r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    for (int c = 0; c < vinv.cols(); ++c) std::swap(vinv(i, c), vinv(j, c));
  }

  // col i -= q * col j
  void col_axpy(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < a.rows(); ++r) a(r, i) -= q * a(r, j);
    for (int r = 0; r < v.rows(); ++r) v(r, i) -= q * v(r, j);
    for (int c = 0; c < vinv.cols(); ++c) vinv(j, c) += q * vinv(i, c);
  }

  void col_negate(int i) {
    for (int r = 0; r < a.rows(); ++r) a(r, i) = -a(r, i);
    for (int r = 0; r < v.rows(); ++r) v(r, i) = -v(r, i);
    for (int c = 0; c < vinv.cols(); ++c) vinv(i, c) = -vinv(i, c);
  }
};

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& m) {
  detail::SnfWorker w(m);
  const int rows = w.a.rows(), cols = w.a.cols();
  int t = 0;
  while (t < rows && t < cols) {
    // Move a nonzero entry of smallest magnitude to the pivot slot.
    int pr = -1, pc = -1;
    Int best;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (w.a(i, j) == 0) continue;
        Int mag = abs(w.a(i, j));
        if (pr < 0 || mag < best) {
          best = mag;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;
    w.row_swap(t, pr);
    w.col_swap(t, pc);

    // Clear the pivot row and column; swaps shrink the pivot, so the
    // loop terminates.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (w.a(i, t) == 0) continue;
        Int q = w.a(i, t) / w.a(t, t);
        w.row_axpy(i, t, q);
        if (w.a(i, t) != 0) {
          w.row_swap(t, i);
          dirty = true;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (w.a(t, j) == 0) continue;
        Int q = w.a(t, j) / w.a(t, t);
        w.col_axpy(j, t, q);
        if (w.a(t, j) != 0) {
          w.col_swap(t, j);
          dirty = true;
        }
      }
    }

    // Force the pivot to divide the rest of the submatrix.
    bool redo = false;
    for (int i = t + 1; i < rows && !redo; ++i)
      for (int j = t + 1; j < cols && !redo; ++j)
        if (w.a(i, j) % w.a(t, t) != 0) {
          w.row_axpy(t, i, Int(-1));
          redo = true;
        }
    if (redo) continue;

    if (w.a(t, t) < 0) w.row_negate(t);
    ++t;
  }

  SmithForm out;
  out.rank = t;
  out.d = std::move(w.a);
  out.u = std::move(w.u);
  out.uinv = std::move(w.uinv);
  out.v = std::move(w.v);
  out.vinv = std::move(w.vinv);
  return out;
}

// Finitely generated abelian group Z^free + Z/t1 + ... + Z/tk with
// 1 < t1 | t2 | ... | tk.
struct AbelianGroup {
  long free_rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

  std::string to_string() const {
    if (trivial()) return "0";
    std::string out;
    auto append = [&out](const std::string& piece) {
      if (!out.empty()) out += " + ";
      out += piece;
    };
    if (free_rank == 1) append("Z");
    if (free_rank > 1) append("Z^" + std::to_string(free_rank));
    for (const Int& t : torsion) append("Z/" + t.str());
    return out;
  }
};

// Presentation of ker(d_out) / im(d_in) with enough data to reduce an
// arbitrary cocycle to canonical coordinates and to lift each group
// generator back to a cochain.
//
// Coordinates list torsion components first (residues in [0, t)),
// then free components, matching AbelianGroup.
class CochainReduction {
 public:
  CochainReduction() = default;

  // d_out * d_in must vanish; both act on the middle term of
  //   C_prev --d_in--> C --d_out--> C_next.
  CochainReduction(const IntMatrix& d_in, const IntMatrix& d_out) {
    if (d_in.rows() != d_out.cols())
      throw error(errc::dimension_mismatch, "chain maps disagree on the middle term: " + std::to_string(d_in.rows()) +
                                                " vs " + std::to_string(d_out.cols()));
    if (!(d_out * d_in).is_zero()) throw error(errc::not_a_complex, "composite of consecutive differentials is nonzero");
    dim_ = d_out.cols();

    SmithForm out_form = smith_normal_form(d_out);
    cocycle_rank_ = out_form.rank;
    kernel_dim_ = dim_ - cocycle_rank_;
    v_ = std::move(out_form.v);
    vinv_ = std::move(out_form.vinv);

    // Coboundaries in kernel coordinates: bottom rows of vinv * d_in.
    IntMatrix b(kernel_dim_, d_in.cols());
    IntMatrix vd = vinv_ * d_in;
    for (int i = 0; i < kernel_dim_; ++i)
      for (int j = 0; j < d_in.cols(); ++j) b(i, j) = vd(cocycle_rank_ + i, j);

    SmithForm in_form = smith_normal_form(b);
    image_rank_ = in_form.rank;
    u2_ = std::move(in_form.u);
    u2inv_ = std::move(in_form.uinv);

    group_.free_rank = kernel_dim_ - image_rank_;
    for (int i = 0; i < image_rank_; ++i) {
      Int t = in_form.d(i, i);
      if (t > 1) {
        torsion_slots_.push_back(i);
        group_.torsion.push_back(t);
      }
    }
  }

  int cochain_dim() const { return dim_; }
  const AbelianGroup& group() const { return group_; }

  long generator_count() const { return static_cast<long>(group_.torsion.size()) + group_.free_rank; }

  bool is_cocycle(const std::vector<Int>& x) const {
    std::vector<Int> z = vinv_.apply(x);
    for (int i = 0; i < cocycle_rank_; ++i)
      if (z[i] != 0) return false;
    return true;
  }

  // Canonical coordinates of the class of the cocycle x.
  std::vector<Int> reduce(const std::vector<Int>& x) const {
    std::vector<Int> z = vinv_.apply(x);
    for (int i = 0; i < cocycle_rank_; ++i)
      if (z[i] != 0) throw error(errc::not_a_cocycle, "vector is not annihilated by the outgoing differential");
    std::vector<Int> w(kernel_dim_);
    for (int i = 0; i < kernel_dim_; ++i) w[i] = z[cocycle_rank_ + i];
    std::vector<Int> w2 = u2_.apply(w);

    std::vector<Int> coords;
    coords.reserve(generator_count());
    for (std::size_t k = 0; k < torsion_slots_.size(); ++k) {
      const Int& t = group_.torsion[k];
      Int r = w2[torsion_slots_[k]] % t;
      if (r < 0) r += t;
      coords.push_back(r);
    }
    for (int i = image_rank_; i < kernel_dim_; ++i) coords.push_back(w2[i]);
    return coords;
  }

  // Cochain representative of the g-th group generator.
  std::vector<Int> generator(long g) const {
    int slot;
    if (g < static_cast<long>(torsion_slots_.size()))
      slot = torsion_slots_[g];
    else
      slot = image_rank_ + static_cast<int>(g - torsion_slots_.size());
    // Kernel coordinates of the generator, then back to the cochain basis.
    std::vector<Int> x(dim_);
    for (int i = 0; i < kernel_dim_; ++i) {
      const Int& w = u2inv_(i, slot);
      if (w == 0) continue;
      for (int r = 0; r < dim_; ++r) x[r] += v_(r, cocycle_rank_ + i) * w;
    }
    return x;
  }

 private:
  int dim_ = 0;
  int cocycle_rank_ = 0;
  int kernel_dim_ = 0;
  int image_rank_ = 0;
  IntMatrix v_, vinv_;    // kernel splitting from the outgoing map
  IntMatrix u2_, u2inv_;  // diagonalization of the incoming map
  std::vector<int> torsion_slots_;
  AbelianGroup group_;
};

inline AbelianGroup cohomology_at(const IntMatrix& d_in, const IntMatrix& d_out) {
  return CochainReduction(d_in, d_out).group();
}

}  // namespace momac
