#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cyclotopo/exactlinalg.hpp"

using namespace cyclotopo;

namespace {

// Test-local determinant by Laplace expansion, independent of the library's
// elimination code. Only used on tiny matrices.
Int laplace_det(const IntMatrix& m) {
  const int n = m.rows();
  REQUIRE(m.cols() == n);
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int det = 0;
  for (int k = 0; k < n; ++k) {
    if (m(0, k) == 0) continue;
    IntMatrix sub(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int j = 0, jj = 0; j < n; ++j) {
        if (j == k) continue;
        sub(i - 1, jj++) = m(i, j);
      }
    Int term = m(0, k) * laplace_det(sub);
    det += (k % 2 == 0) ? term : -term;
  }
  return det;
}

// gcd of all k x k minors (0 if every minor vanishes)
Int minor_gcd(const IntMatrix& m, int k) {
  std::vector<int> rsel(k), csel(k);
  Int g = 0;
  auto choose = [&](auto&& self, std::vector<int>& sel, int from, int depth, int total,
                    auto&& leaf) -> void {
    if (depth == k) {
      leaf();
      return;
    }
    for (int v = from; v <= total - (k - depth); ++v) {
      sel[depth] = v;
      self(self, sel, v + 1, depth + 1, total, leaf);
    }
  };
  choose(choose, rsel, 0, 0, m.rows(), [&] {
    choose(choose, csel, 0, 0, m.cols(), [&] {
      g = gcd(g, laplace_det(m.select_rows(rsel).select_columns(csel)));
    });
  });
  return g;
}

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int lo, int hi) {
  IntMatrix m(rows, cols);
  const uint64_t span = static_cast<uint64_t>(hi - lo + 1);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = lo + static_cast<int64_t>(rng() % span);
  return m;
}

void check_snf_contract(const IntMatrix& a) {
  SNFResult s = smith_normal_form(a, true);
  REQUIRE((int)s.diagonal.size() == std::min(a.rows(), a.cols()));
  // nonnegative, divisibility chain, zeros trailing
  for (size_t i = 0; i < s.diagonal.size(); ++i) {
    REQUIRE(s.diagonal[i] >= 0);
    if (i + 1 < s.diagonal.size()) {
      if (s.diagonal[i] == 0) REQUIRE(s.diagonal[i + 1] == 0);
      else REQUIRE(s.diagonal[i + 1] % s.diagonal[i] == 0);
    }
  }
  // U A V equals the diagonal, transforms unimodular
  IntMatrix d = (*s.U) * a * (*s.V);
  for (int i = 0; i < d.rows(); ++i)
    for (int j = 0; j < d.cols(); ++j)
      REQUIRE(d(i, j) == ((i == j && i < (int)s.diagonal.size()) ? s.diagonal[i] : Int(0)));
  REQUIRE(abs(determinant(*s.U)) == 1);
  REQUIRE(abs(determinant(*s.V)) == 1);
  // d_1 ... d_k equals the gcd of k x k minors
  Int prod = 1;
  for (int k = 1; k <= (int)s.diagonal.size(); ++k) {
    prod *= s.diagonal[k - 1];
    REQUIRE(prod == minor_gcd(a, k));
  }
}

}  // namespace

TEST_CASE("matrix basics and sparse view", "[exactlinalg]") {
  IntMatrix a{{2, 0}, {0, 3}, {0, 0}};
  REQUIRE(a.rows() == 3);
  REQUIRE(a.cols() == 2);
  auto ts = a.triplets();
  REQUIRE(ts == std::vector<Triplet>{{0, 0, 2}, {1, 1, 3}});
  REQUIRE(IntMatrix::from_triplets(3, 2, ts) == a);
  REQUIRE_THROWS_AS(IntMatrix::from_triplets(1, 1, {{0, 0, 1}, {0, 0, 2}}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(IntMatrix::from_triplets(1, 1, {{1, 0, 1}}), std::invalid_argument);

  IntMatrix i2 = IntMatrix::identity(2);
  REQUIRE(a * i2 == a);
  REQUIRE(a.transpose().rows() == 2);
  REQUIRE(a.select_columns({1})(1, 0) == 3);
  REQUIRE(a.select_rows({2}).is_zero());
}

TEST_CASE("sparse and dense views agree on random matrices", "[exactlinalg]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 1 + (int)(rng() % 6), 1 + (int)(rng() % 6), -3, 3);
    REQUIRE(IntMatrix::from_triplets(m.rows(), m.cols(), m.triplets()) == m);
  }
}

TEST_CASE("smith normal form on known inputs", "[exactlinalg]") {
  SNFResult s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  REQUIRE(s.diagonal == std::vector<Int>{2, 4});
  REQUIRE(s.rank == 2);

  REQUIRE(smith_normal_form(IntMatrix(3, 2)).diagonal == std::vector<Int>{0, 0});
  REQUIRE(smith_normal_form(IntMatrix::identity(3)).diagonal == std::vector<Int>{1, 1, 1});
  REQUIRE(smith_normal_form(IntMatrix{{0}}).rank == 0);
  REQUIRE(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diagonal == std::vector<Int>{1, 6});
}

TEST_CASE("smith normal form matches the minor gcd oracle", "[exactlinalg]") {
  check_snf_contract(IntMatrix{{2, 4}, {6, 8}});
  check_snf_contract(IntMatrix{{2, 0}, {0, 3}});
  check_snf_contract(IntMatrix(2, 3));

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    int rows = 1 + (int)(rng() % 6), cols = 1 + (int)(rng() % 6);
    check_snf_contract(random_matrix(rng, rows, cols, -9, 9));
  }
}

TEST_CASE("smith normal form is deterministic", "[exactlinalg]") {
  std::mt19937_64 rng(11);
  IntMatrix m = random_matrix(rng, 5, 5, -9, 9);
  SNFResult a = smith_normal_form(m, true);
  SNFResult b = smith_normal_form(m, true);
  REQUIRE(a.diagonal == b.diagonal);
  REQUIRE(*a.U == *b.U);
  REQUIRE(*a.V == *b.V);
}

TEST_CASE("cokernel invariants", "[exactlinalg]") {
  REQUIRE(cokernel_invariants(IntMatrix{{5}}) == HomologySummary{0, {5}});
  REQUIRE(cokernel_invariants(IntMatrix{{0}}) == HomologySummary{1, {}});
  REQUIRE(cokernel_invariants(IntMatrix{{2, 0}, {0, 3}}) == HomologySummary{0, {6}});
  REQUIRE(cokernel_invariants(IntMatrix{{1, 0}, {0, 1}}).trivial());
  REQUIRE(cokernel_invariants(IntMatrix(2, 0)) == HomologySummary{2, {}});

  // invariant under row and column permutation and sign flips
  IntMatrix m{{2, 4}, {6, 8}};
  IntMatrix p{{-6, 8}, {2, -4}};  // rows swapped, signs flipped
  REQUIRE(cokernel_invariants(m) == cokernel_invariants(p));
}

TEST_CASE("homology summary formatting", "[exactlinalg]") {
  REQUIRE(HomologySummary{0, {}}.str() == "0");
  REQUIRE(HomologySummary{1, {}}.str() == "Z");
  REQUIRE(HomologySummary{2, {}}.str() == "Z^2");
  REQUIRE(HomologySummary{0, {Int(2)}}.str() == "Z/2");
  REQUIRE(HomologySummary{1, {Int(2), Int(6)}}.str() == "Z + Z/2 + Z/6");
}

TEST_CASE("rank and determinant", "[exactlinalg]") {
  REQUIRE(rank_and_det(IntMatrix{{1, 2}, {3, 4}}).det == -2);
  REQUIRE(rank_and_det(IntMatrix{{1, 2}, {2, 4}}).rank == 1);
  REQUIRE(rank_and_det(IntMatrix{{1, 2}, {2, 4}}).det == 0);
  REQUIRE(rank_and_det(IntMatrix::identity(4)).det == 1);
  REQUIRE(rank_of(IntMatrix(3, 5)) == 0);
  REQUIRE_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + (int)(rng() % 5);
    IntMatrix m = random_matrix(rng, n, n, -9, 9);
    REQUIRE(rank_and_det(m).det == laplace_det(m));
  }
}

TEST_CASE("kernel primitive basis", "[exactlinalg]") {
  auto k = kernel_primitive_basis(IntMatrix{{1, 1}});
  REQUIRE(k == std::vector<std::vector<Int>>{{1, -1}});

  REQUIRE(kernel_primitive_basis(IntMatrix::identity(3)).empty());

  // kernel of [[2, 4]] is spanned by (2, -1), already primitive
  REQUIRE(kernel_primitive_basis(IntMatrix{{2, 4}}) ==
          std::vector<std::vector<Int>>{{2, -1}});

  // zero matrix: standard basis vectors
  auto z = kernel_primitive_basis(IntMatrix(2, 3));
  REQUIRE(z == std::vector<std::vector<Int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + (int)(rng() % 5), cols = 1 + (int)(rng() % 6);
    IntMatrix m = random_matrix(rng, rows, cols, -9, 9);
    auto basis = kernel_primitive_basis(m);
    REQUIRE((int)basis.size() == cols - rank_of(m));
    for (const auto& v : basis) {
      // in the kernel, content one, first nonzero entry positive
      for (const Int& y : m.apply(v)) REQUIRE(y == 0);
      Int g = 0;
      for (const Int& x : v) g = gcd(g, x);
      REQUIRE(g == 1);
      for (const Int& x : v) {
        if (x == 0) continue;
        REQUIRE(x > 0);
        break;
      }
    }
  }
}

TEST_CASE("integer linear solve", "[exactlinalg]") {
  IntMatrix a{{2, 0}, {0, 3}};
  auto x = solve_integer(a, {4, -9});
  REQUIRE(x.has_value());
  REQUIRE(*x == std::vector<Int>{2, -3});
  REQUIRE_FALSE(solve_integer(a, {1, 0}).has_value());  // 2 does not divide 1

  // inconsistent system
  REQUIRE_FALSE(solve_integer(IntMatrix{{1}, {1}}, {0, 1}).has_value());

  // underdetermined but solvable
  auto y = solve_integer(IntMatrix{{1, 1, 1}}, {5});
  REQUIRE(y.has_value());
  REQUIRE((*y)[0] + (*y)[1] + (*y)[2] == 5);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    int rows = 1 + (int)(rng() % 4), cols = 1 + (int)(rng() % 4);
    IntMatrix m = random_matrix(rng, rows, cols, -5, 5);
    std::vector<Int> x0(cols);
    for (auto& v : x0) v = (int64_t)(rng() % 7) - 3;
    auto sol = solve_integer(m, m.apply(x0));  // solvable by construction
    REQUIRE(sol.has_value());
    REQUIRE(m.apply(*sol) == m.apply(x0));
  }
}
