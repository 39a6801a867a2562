#pragma once

// Elementary number theory: factorization, Euler phi, unit residues and the
// CRT bijection between Z/nZ and the product of its prime residue rings.
// Everything here is exact integer arithmetic on word-sized inputs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclotopo {

using std::int64_t;

// residues (j mod p_1, ..., j mod p_d), one entry per part
using ResidueVector = std::vector<int64_t>;

struct Factorization {
  int64_t n = 1;
  std::vector<std::pair<int64_t, int>> factors;  // (prime, exponent), primes ascending

  bool squarefree() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const auto& f) { return f.second == 1; });
  }

  int64_t radical() const {
    int64_t r = 1;
    for (const auto& [p, e] : factors) r *= p;
    return r;
  }

  std::vector<int64_t> primes() const {
    std::vector<int64_t> ps;
    ps.reserve(factors.size());
    for (const auto& [p, e] : factors) ps.push_back(p);
    return ps;
  }
};

inline Factorization factorize(int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  f.n = n;
  int64_t m = n;
  for (int64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  }
  if (m > 1) f.factors.emplace_back(m, 1);
  return f;
}

inline bool is_squarefree(int64_t n) { return factorize(n).squarefree(); }

inline int64_t euler_phi(int64_t n) {
  int64_t r = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    r *= p - 1;
    for (int i = 1; i < e; ++i) r *= p;
  }
  return r;
}

// residues in {0..n-1} coprime to n, ascending; primitive_residues(1) = {0}
inline std::vector<int64_t> primitive_residues(int64_t n) {
  if (n < 1) throw std::invalid_argument("primitive_residues: n must be positive");
  std::vector<int64_t> out;
  for (int64_t a = 0; a < n; ++a)
    if (std::gcd(a, n) == 1) out.push_back(a);
  if (n == 1) out.assign({0});
  return out;
}

namespace detail {

inline void check_crt_moduli(const std::vector<int64_t>& primes) {
  if (primes.empty()) throw std::invalid_argument("crt: need at least one modulus");
  for (size_t i = 0; i < primes.size(); ++i) {
    if (primes[i] < 2) throw std::invalid_argument("crt: moduli must be >= 2");
    for (size_t k = i + 1; k < primes.size(); ++k)
      if (primes[i] == primes[k])
        throw std::invalid_argument("crt: repeated prime " + std::to_string(primes[i]));
  }
}

// x^-1 mod m for gcd(x, m) = 1
inline int64_t mod_inverse(int64_t x, int64_t m) {
  int64_t a = x % m, b = m, u = 1, v = 0;
  while (b != 0) {
    int64_t q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  if (a != 1 && a != -1) throw std::invalid_argument("mod_inverse: not coprime");
  if (a == -1) u = -u;
  u %= m;
  return u < 0 ? u + m : u;
}

}  // namespace detail

inline ResidueVector crt_split(int64_t j, const std::vector<int64_t>& primes) {
  detail::check_crt_moduli(primes);
  int64_t n = 1;
  for (int64_t p : primes) n *= p;
  if (j < 0 || j >= n) throw std::invalid_argument("crt_split: j out of range");
  ResidueVector r(primes.size());
  for (size_t i = 0; i < primes.size(); ++i) r[i] = j % primes[i];
  return r;
}

inline int64_t crt_combine(const ResidueVector& residues, const std::vector<int64_t>& primes) {
  detail::check_crt_moduli(primes);
  if (residues.size() != primes.size())
    throw std::invalid_argument("crt_combine: residue/modulus count mismatch");
  // Garner's scheme: extend the solution one modulus at a time.
  int64_t x = 0, m = 1;
  for (size_t i = 0; i < primes.size(); ++i) {
    int64_t p = primes[i], r = residues[i];
    if (r < 0 || r >= p) throw std::invalid_argument("crt_combine: residue out of range");
    int64_t t = ((r - x) % p + p) % p;
    t = (t * detail::mod_inverse(m % p, p)) % p;
    x += m * t;
    m *= p;
  }
  return x;
}

// squarefree integers in [1, max_n], ascending
inline std::vector<int64_t> squarefree_up_to(int64_t max_n) {
  std::vector<int64_t> out;
  for (int64_t n = 1; n <= max_n; ++n)
    if (is_squarefree(n)) out.push_back(n);
  return out;
}

}  // namespace cyclotopo
