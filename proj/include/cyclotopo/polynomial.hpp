#pragma once

// Dense integer polynomials and the cyclotomic pipeline built on them:
//   cyclotomic(n)                 Phi_n via exact division of x^n - 1
//   root_coordinate_matrix(n)     coordinates of all n-th roots of unity in
//                                 the power basis of Z[x]/(Phi_n)
//   lattice_coefficient(f, j)     order of R/ZA for the monomial lattice of a
//                                 monic f with the j-th power removed
//   primitive_basis_determinant   the primitive-root minor, always +-1 for
//                                 squarefree n
//
// Coefficients are stored constant term first.

#include <map>
#include <mutex>
#include <shared_mutex>

#include "cyclotopo/exactlinalg.hpp"
#include "cyclotopo/numtheory.hpp"

namespace cyclotopo {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<int64_t> coeffs) {
    for (int64_t v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly x_pow_minus_one(int64_t n) {
    std::vector<Int> c(static_cast<size_t>(n) + 1);
    c[0] = -1;
    c[static_cast<size_t>(n)] = 1;
    return IntPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Int>& coeffs() const { return c_; }

  Int coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Int(0);
  }

  bool monic() const { return !c_.empty() && c_.back() == 1; }

  bool operator==(const IntPoly&) const = default;

  friend IntPoly operator+(const IntPoly& f, const IntPoly& g) {
    std::vector<Int> c(std::max(f.c_.size(), g.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = f.coeff((int)i) + g.coeff((int)i);
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& f, const IntPoly& g) {
    std::vector<Int> c(std::max(f.c_.size(), g.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = f.coeff((int)i) - g.coeff((int)i);
    return IntPoly(std::move(c));
  }

  friend IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return IntPoly();
    std::vector<Int> c(f.c_.size() + g.c_.size() - 1);
    for (size_t i = 0; i < f.c_.size(); ++i) {
      if (f.c_[i] == 0) continue;
      for (size_t j = 0; j < g.c_.size(); ++j) c[i + j] += f.c_[i] * g.c_[j];
    }
    return IntPoly(std::move(c));
  }

  // x -> x^k
  IntPoly substitute_power(int64_t k) const {
    if (k < 1) throw std::invalid_argument("substitute_power: k must be positive");
    if (is_zero()) return IntPoly();
    std::vector<Int> c(static_cast<size_t>(degree()) * k + 1);
    for (size_t i = 0; i < c_.size(); ++i) c[i * k] = c_[i];
    return IntPoly(std::move(c));
  }

  // x -> -x
  IntPoly substitute_neg() const {
    std::vector<Int> c = c_;
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPoly(std::move(c));
  }

  // coefficients constant term first, space separated
  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ' ';
      s += c_[i].str();
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;  // c_[i] is the coefficient of x^i
};

// Exact division in Z[x]; throws if g does not divide f over the integers.
inline IntPoly exact_div(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
  if (f.is_zero()) return IntPoly();
  if (f.degree() < g.degree()) throw std::domain_error("inexact division");
  std::vector<Int> rem = f.coeffs();
  const std::vector<Int>& d = g.coeffs();
  std::vector<Int> q(static_cast<size_t>(f.degree() - g.degree()) + 1);
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    const Int& lead = rem[i + g.degree()];
    if (lead % d.back() != 0) throw std::domain_error("inexact division");
    Int c = lead / d.back();
    q[i] = c;
    if (c == 0) continue;
    for (size_t k = 0; k < d.size(); ++k) rem[i + k] -= c * d[k];
  }
  for (const Int& r : rem)
    if (r != 0) throw std::domain_error("inexact division");
  return IntPoly(std::move(q));
}

namespace detail {

struct CyclotomicCache {
  std::shared_mutex mutex;
  std::map<int64_t, IntPoly> table;
};

inline CyclotomicCache& cyclotomic_cache() {
  static CyclotomicCache cache;
  return cache;
}

}  // namespace detail

// Phi_n, computed by dividing x^n - 1 by Phi_d for all proper divisors d and
// memoized for the lifetime of the process. The cache tolerates concurrent
// readers and redundant concurrent inserts.
inline IntPoly cyclotomic(int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
  auto& cache = detail::cyclotomic_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(n);
    if (it != cache.table.end()) return it->second;
  }
  IntPoly f = IntPoly::x_pow_minus_one(n);
  for (int64_t d = 1; d <= n / 2; ++d)
    if (n % d == 0) f = exact_div(f, cyclotomic(d));
  {
    std::unique_lock lock(cache.mutex);
    cache.table.emplace(n, f);
  }
  return f;
}

// Phi_n as Phi_rad(n)(x^{n/rad(n)}), the reduction to the squarefree kernel
inline IntPoly radical_substitute(int64_t n) {
  if (n < 1) throw std::invalid_argument("radical_substitute: n must be positive");
  int64_t rad = factorize(n).radical();
  return cyclotomic(rad).substitute_power(n / rad);
}

struct RootCoordinateMatrix {
  int64_t n = 1;
  IntMatrix entries;  // phi(n) x n; column j holds x^j mod Phi_n, constant first
};

inline RootCoordinateMatrix root_coordinate_matrix(int64_t n) {
  if (n < 1) throw std::invalid_argument("root_coordinate_matrix: n must be positive");
  const IntPoly phi_poly = cyclotomic(n);
  const int phi = phi_poly.degree();
  RootCoordinateMatrix m;
  m.n = n;
  m.entries = IntMatrix(phi, static_cast<int>(n));
  std::vector<Int> cur(phi);
  cur[0] = 1;
  for (int64_t j = 0; j < n; ++j) {
    for (int i = 0; i < phi; ++i) m.entries(i, static_cast<int>(j)) = cur[i];
    if (j + 1 == n) break;
    // multiply by x and reduce modulo the monic Phi_n
    Int carry = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (carry != 0)
      for (int i = 0; i < phi; ++i) cur[i] -= carry * phi_poly.coeff(i);
  }
  return m;
}

// Order of Z^r / (columns {x^0..x^r} \ {x^j} of [I | -c]) for monic f of
// degree r. Returns 0 when the quotient is infinite.
inline Int lattice_coefficient(const IntPoly& f, int j) {
  const int r = f.degree();
  if (r < 1 || !f.monic()) throw std::invalid_argument("lattice_coefficient: f must be monic");
  if (j < 0 || j > r) throw std::invalid_argument("lattice_coefficient: j out of range");
  IntMatrix m(r, r + 1);
  for (int i = 0; i < r; ++i) {
    m(i, i) = 1;
    m(i, r) = -f.coeff(i);
  }
  std::vector<int> cols;
  for (int k = 0; k <= r; ++k)
    if (k != j) cols.push_back(k);
  SNFResult s = smith_normal_form(m.select_columns(cols));
  if (s.rank < r) return 0;
  Int order = 1;
  for (const Int& d : s.diagonal) order *= d;
  return order;
}

// Determinant of the root coordinate matrix restricted to the primitive
// residues; the primitive roots form a Z-basis of Z[zeta_n], so this is +-1.
inline Int primitive_basis_determinant(int64_t n) {
  if (!is_squarefree(n))
    throw std::invalid_argument("primitive_basis_determinant: n must be squarefree");
  RootCoordinateMatrix m = root_coordinate_matrix(n);
  std::vector<int> cols;
  for (int64_t j : primitive_residues(n)) cols.push_back(static_cast<int>(j));
  Int det = determinant(m.entries.select_columns(cols));
  if (det != 1 && det != -1)
    throw std::logic_error("primitive_basis_determinant: minor is not unimodular");
  return det;
}

}  // namespace cyclotopo
