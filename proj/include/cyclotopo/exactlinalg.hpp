#pragma once

// Exact integer linear algebra over arbitrary-precision integers: dense
// matrices with a sparse triplet view, Smith normal form with optional
// unimodular transforms, fraction-free (Bareiss) rank and determinant,
// primitive rational kernel bases, and integer linear solves.
//
// All pivoting rules are deterministic, so every routine produces identical
// output for identical input on every run and platform.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclotopo {

using Int = boost::multiprecision::cpp_int;
using boost::multiprecision::abs;
using boost::multiprecision::gcd;

struct Triplet {
  int row = 0;
  int col = 0;
  Int value;
  bool operator==(const Triplet&) const = default;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
  }

  // dense construction from nested initializer data, for tests and fixtures
  IntMatrix(std::initializer_list<std::initializer_list<int64_t>> data) {
    rows_ = static_cast<int>(data.size());
    cols_ = rows_ ? static_cast<int>(data.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : data) {
      if (static_cast<int>(row.size()) != cols_)
        throw std::invalid_argument("IntMatrix: ragged initializer");
      for (int64_t v : row) a_.emplace_back(v);
    }
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_triplets(int rows, int cols, const std::vector<Triplet>& ts) {
    IntMatrix m(rows, cols);
    for (const auto& t : ts) {
      if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
        throw std::invalid_argument("from_triplets: index out of range");
      if (m(t.row, t.col) != 0)
        throw std::invalid_argument("from_triplets: duplicate entry");
      m(t.row, t.col) = t.value;
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const IntMatrix&) const = default;

  // nonzero entries in row-major order
  std::vector<Triplet> triplets() const {
    std::vector<Triplet> ts;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0) ts.push_back({i, j, (*this)(i, j)});
    return ts;
  }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& v) { return v == 0; });
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix select_columns(const std::vector<int>& idx) const {
    IntMatrix m(rows_, static_cast<int>(idx.size()));
    for (size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] < 0 || idx[k] >= cols_)
        throw std::invalid_argument("select_columns: index out of range");
      for (int i = 0; i < rows_; ++i) m(i, static_cast<int>(k)) = (*this)(i, idx[k]);
    }
    return m;
  }

  IntMatrix select_rows(const std::vector<int>& idx) const {
    IntMatrix m(static_cast<int>(idx.size()), cols_);
    for (size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] < 0 || idx[k] >= rows_)
        throw std::invalid_argument("select_rows: index out of range");
      for (int j = 0; j < cols_; ++j) m(static_cast<int>(k), j) = (*this)(idx[k], j);
    }
    return m;
  }

  std::vector<Int> column(int j) const {
    std::vector<Int> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matmul: shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (int j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  std::vector<Int> apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply: shape mismatch");
    std::vector<Int> y(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && x[j] != 0) y[i] += (*this)(i, j) * x[j];
    return y;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

struct SNFResult {
  std::vector<Int> diagonal;  // length min(rows, cols), nonnegative, d_i | d_{i+1}
  int rank = 0;               // number of nonzero diagonal entries
  std::optional<IntMatrix> U, V;  // when requested: U * A * V = diag(diagonal)
};

// free part plus invariant factors > 1, the shape of a f.g. abelian group
struct HomologySummary {
  int64_t free_rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const HomologySummary&) const = default;

  std::string str() const {
    std::string s;
    if (free_rank == 1) s = "Z";
    else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
    for (const Int& t : torsion) {
      if (!s.empty()) s += " + ";
      s += "Z/" + t.str();
    }
    return s.empty() ? "0" : s;
  }
};

// Smith normal form. Deterministic pivoting: smallest nonzero magnitude in
// the active submatrix, ties broken by lowest column then lowest row.
inline SNFResult smith_normal_form(const IntMatrix& A, bool want_transforms = false) {
  IntMatrix B = A;
  const int r = B.rows(), c = B.cols();
  const int steps = std::min(r, c);
  SNFResult out;
  out.diagonal.assign(steps, 0);
  IntMatrix U, V;
  if (want_transforms) {
    U = IntMatrix::identity(r);
    V = IntMatrix::identity(c);
  }

  auto swap_rows = [&](int i, int k) {
    if (i == k) return;
    for (int j = 0; j < c; ++j) std::swap(B(i, j), B(k, j));
    if (want_transforms)
      for (int j = 0; j < r; ++j) std::swap(U(i, j), U(k, j));
  };
  auto swap_cols = [&](int i, int k) {
    if (i == k) return;
    for (int j = 0; j < r; ++j) std::swap(B(j, i), B(j, k));
    if (want_transforms)
      for (int j = 0; j < c; ++j) std::swap(V(j, i), V(j, k));
  };
  auto add_row = [&](int dst, int src, const Int& q) {  // row_dst += q * row_src
    if (q == 0) return;
    for (int j = 0; j < c; ++j) B(dst, j) += q * B(src, j);
    if (want_transforms)
      for (int j = 0; j < r; ++j) U(dst, j) += q * U(src, j);
  };
  auto add_col = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < r; ++j) B(j, dst) += q * B(j, src);
    if (want_transforms)
      for (int j = 0; j < c; ++j) V(j, dst) += q * V(j, src);
  };
  auto negate_row = [&](int i) {
    for (int j = 0; j < c; ++j) B(i, j) = -B(i, j);
    if (want_transforms)
      for (int j = 0; j < r; ++j) U(i, j) = -U(i, j);
  };

  for (int t = 0; t < steps; ++t) {
    for (;;) {
      // locate pivot
      int pi = -1, pj = -1;
      for (int j = t; j < c; ++j)
        for (int i = t; i < r; ++i) {
          if (B(i, j) == 0) continue;
          if (pi < 0 || abs(B(i, j)) < abs(B(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) goto done;  // active submatrix is zero
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < r; ++i) {
        if (B(i, t) == 0) continue;
        add_row(i, t, -(B(i, t) / B(t, t)));
        if (B(i, t) != 0) clean = false;  // remainder survives, pivot will shrink
      }
      for (int j = t + 1; j < c; ++j) {
        if (B(t, j) == 0) continue;
        add_col(j, t, -(B(t, j) / B(t, t)));
        if (B(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot divides everything that remains, or absorb an offending row
      bool divides = true;
      for (int i = t + 1; i < r && divides; ++i)
        for (int j = t + 1; j < c; ++j)
          if (B(i, j) % B(t, t) != 0) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (B(t, t) < 0) negate_row(t);
    out.diagonal[t] = B(t, t);
    ++out.rank;
  }
done:
  if (want_transforms) {
    out.U = std::move(U);
    out.V = std::move(V);
  }
  return out;
}

// cokernel of A as a map into Z^rows: Z^rows / (column span of A)
inline HomologySummary cokernel_invariants(const IntMatrix& A) {
  SNFResult s = smith_normal_form(A);
  HomologySummary h;
  h.free_rank = A.rows() - s.rank;
  for (int i = 0; i < s.rank; ++i)
    if (s.diagonal[i] > 1) h.torsion.push_back(s.diagonal[i]);
  return h;
}

struct RankDet {
  int rank = 0;
  Int det;  // meaningful for square input; 0 when rank deficient
};

// Fraction-free Gaussian elimination (Bareiss). Row pivot: smallest nonzero
// magnitude in the current column, ties broken by lowest row index.
inline RankDet rank_and_det(IntMatrix B) {
  const int r = B.rows(), c = B.cols();
  Int prev = 1;
  int rank = 0, sign = 1;
  for (int col = 0; col < c && rank < r; ++col) {
    int piv = -1;
    for (int i = rank; i < r; ++i)
      if (B(i, col) != 0 && (piv < 0 || abs(B(i, col)) < abs(B(piv, col)))) piv = i;
    if (piv < 0) continue;
    if (piv != rank) {
      for (int j = col; j < c; ++j) std::swap(B(rank, j), B(piv, j));
      sign = -sign;
    }
    for (int i = rank + 1; i < r; ++i) {
      for (int j = col + 1; j < c; ++j)
        B(i, j) = (B(rank, col) * B(i, j) - B(i, col) * B(rank, j)) / prev;
      B(i, col) = 0;
    }
    prev = B(rank, col);
    ++rank;
  }
  RankDet out;
  out.rank = rank;
  if (r == c && rank == r && r > 0) out.det = sign * prev;
  if (r == c && r == 0) out.det = 1;  // empty product
  return out;
}

inline int rank_of(const IntMatrix& A) { return rank_and_det(A).rank; }

inline Int determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: matrix not square");
  return rank_and_det(A).det;
}

namespace detail {

inline Int vector_content(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

// divide by content and make the first nonzero entry positive
inline void normalize_primitive(std::vector<Int>& v) {
  Int g = vector_content(v);
  if (g == 0) return;
  for (const Int& x : v)
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  for (Int& x : v) x /= g;
}

}  // namespace detail

// Primitive integer basis of the rational kernel of A, one vector per free
// column in ascending column order. Each vector has content 1 and positive
// leading (first nonzero) entry.
inline std::vector<std::vector<Int>> kernel_primitive_basis(const IntMatrix& A) {
  IntMatrix B = A;
  const int r = B.rows(), c = B.cols();

  // fraction-free echelon form, recording pivot columns
  std::vector<int> pivot_col;
  Int prev = 1;
  int rank = 0;
  for (int col = 0; col < c && rank < r; ++col) {
    int piv = -1;
    for (int i = rank; i < r; ++i)
      if (B(i, col) != 0 && (piv < 0 || abs(B(i, col)) < abs(B(piv, col)))) piv = i;
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = col; j < c; ++j) std::swap(B(rank, j), B(piv, j));
    for (int i = rank + 1; i < r; ++i) {
      for (int j = col + 1; j < c; ++j)
        B(i, j) = (B(rank, col) * B(i, j) - B(i, col) * B(rank, j)) / prev;
      B(i, col) = 0;
    }
    prev = B(rank, col);
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(c, false);
  for (int p : pivot_col) is_pivot[p] = true;

  std::vector<std::vector<Int>> basis;
  for (int f = 0; f < c; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Int> x(c);
    x[f] = 1;
    // integer-preserving back substitution; scaling x keeps the solved
    // equations satisfied because the system is homogeneous
    for (int i = rank - 1; i >= 0; --i) {
      const int pc = pivot_col[i];
      Int s = 0;
      for (int j = pc + 1; j < c; ++j)
        if (B(i, j) != 0 && x[j] != 0) s += B(i, j) * x[j];
      if (s == 0) continue;
      const Int p = B(i, pc);
      Int g = gcd(p, s);
      Int factor = p / g;
      if (factor != 1)
        for (Int& v : x) v *= factor;
      x[pc] = -(s / g);  // equals -(s * factor) / p for any sign of the pivot
    }
    detail::normalize_primitive(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

// One integer solution of A x = b, if any exists.
inline std::optional<std::vector<Int>> solve_integer(const IntMatrix& A,
                                                     const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != A.rows())
    throw std::invalid_argument("solve_integer: rhs length mismatch");
  SNFResult s = smith_normal_form(A, true);
  std::vector<Int> ub = s.U->apply(b);
  std::vector<Int> w(A.cols());
  for (int i = 0; i < A.rows(); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.diagonal[i] != 0) return std::nullopt;
      w[i] = ub[i] / s.diagonal[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V->apply(w);
}

}  // namespace cyclotopo
