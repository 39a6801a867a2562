// Standalone acceptance harness: ten numbered criteria, one PASS/FAIL line
// each, nonzero exit if any fails. Criteria with a pinned runtime budget
// fail when they exceed it. No test framework on purpose; this is the
// go/no-go gate and reads top to bottom.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "cyclotopo/verify.hpp"

using namespace cyclotopo;

namespace {

std::vector<int64_t> random_window(int64_t n, std::mt19937_64& rng) {
  std::vector<int64_t> all(static_cast<size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<size_t>(n - euler_phi(n)));
  return all;
}

Int cycle_coeff(const CycleVector& z, int64_t label) {
  auto it = std::lower_bound(z.residues.begin(), z.residues.end(), label);
  return z.coeffs[it - z.residues.begin()];
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(static_cast<size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

// invariant factors straight from the definition: d_k = g_k / g_{k-1} where
// g_k is the gcd of all k x k minors
bool snf_matches_minor_gcds(const IntMatrix& A, std::string& why) {
  SNFResult s = smith_normal_form(A);
  const int kmax = std::min(A.rows(), A.cols());
  Int prev = 1;
  int rank = 0;
  for (int k = 1; k <= kmax; ++k) {
    Int g = 0;
    for (const auto& ri : combinations(A.rows(), k))
      for (const auto& ci : combinations(A.cols(), k))
        g = gcd(g, determinant(A.select_rows(ri).select_columns(ci)));
    if (g == 0) break;
    rank = k;
    Int want = g / prev;
    if (s.diagonal[static_cast<size_t>(k - 1)] != want) {
      why = "invariant factor " + std::to_string(k) + " is " +
            s.diagonal[static_cast<size_t>(k - 1)].str() + ", minors give " + want.str();
      return false;
    }
    prev = g;
  }
  if (s.rank != rank) {
    why = "rank " + std::to_string(s.rank) + ", minors give " + std::to_string(rank);
    return false;
  }
  for (int k = rank; k < kmax; ++k)
    if (s.diagonal[static_cast<size_t>(k)] != 0) {
      why = "nonzero diagonal beyond the rank";
      return false;
    }
  return true;
}

bool all_reports_pass(const std::vector<int64_t>& ns,
                      const std::function<VerificationReport(int64_t)>& run, std::string& why) {
  for (int64_t n : ns) {
    VerificationReport r = run(n);
    if (!r.passed()) {
      for (const CheckCase& c : r.cases)
        if (c.status == CheckStatus::fail) {
          why = "n=" + std::to_string(n) + " case " + c.id;
          return false;
        }
    }
  }
  return true;
}

std::vector<int64_t> squarefree_range(int64_t max_n, int min_d = 1) {
  std::vector<int64_t> out;
  for (int64_t n : squarefree_up_to(max_n))
    if (n >= 2 && static_cast<int>(factorize(n).factors.size()) >= min_d) out.push_back(n);
  return out;
}

}  // namespace

int main() {
  int failures = 0;
  auto criterion = [&](int idx, const char* name, double limit_s,
                       const std::function<bool(std::string&)>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = fn(why);
    } catch (const std::exception& e) {
      ok = false;
      why = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && limit_s > 0 && secs > limit_s) {
      ok = false;
      why = "over the time budget";
    }
    std::printf("[%2d/10] %s  %-62s %7.2fs", idx, ok ? "PASS" : "FAIL", name, secs);
    if (limit_s > 0) std::printf(" (limit %.0fs)", limit_s);
    if (!ok && !why.empty()) std::printf("  -- %s", why.c_str());
    std::printf("\n");
    std::fflush(stdout);
    if (!ok) ++failures;
  };

  criterion(1, "golden n=15: coefficients, homology, cycle directions", 1.0,
            [](std::string& why) {
              if (cyclotomic(15) != IntPoly(std::vector<Int>{1, -1, 0, 1, -1, 1, 0, -1, 1})) {
                why = "coefficients";
                return false;
              }
              if (!reduced_homology(subcomplex_KA(15, {5}), 0).trivial() ||
                  !reduced_homology(subcomplex_KA(15, {7}), 0).trivial()) {
                why = "K_{5}/K_{7} middle homology";
                return false;
              }
              HomologySummary z{1, {}};
              if (reduced_homology(subcomplex_KA(15, {6}), 0) != z ||
                  reduced_homology(subcomplex_KA(15, {6}), 1) != z) {
                why = "K_{6} homology";
                return false;
              }
              auto same = top_cycles(15, {7, 8, 9, 10, 11, 12, 13, 14});
              auto opposite = top_cycles(15, {5, 8, 9, 10, 11, 12, 13, 14});
              if (same.size() != 1 || opposite.size() != 1) {
                why = "fundamental cycle count";
                return false;
              }
              if (cycle_coeff(same[0], 7) * cycle_coeff(same[0], 8) <= 0) {
                why = "(7,8) cycle direction";
                return false;
              }
              if (cycle_coeff(opposite[0], 5) * cycle_coeff(opposite[0], 8) >= 0) {
                why = "(5,8) cycle direction";
                return false;
              }
              return true;
            });

  criterion(2, "coefficient homology for every squarefree n <= 105", 300.0,
            [](std::string& why) {
              return all_reports_pass(squarefree_range(105),
                                      [](int64_t n) { return verify_main(n); }, why);
            });

  criterion(3, "sign reconstruction from homology, squarefree n <= 105", 0,
            [](std::string& why) {
              for (int64_t n : squarefree_range(105))
                if (reconstruct_cyclotomic(n) != cyclotomic(n)) {
                  why = "n=" + std::to_string(n);
                  return false;
                }
              return true;
            });

  criterion(4, "n=105: H~_1 of K_{7} has invariant factors [2]", 0, [](std::string& why) {
    HomologySummary h = reduced_homology(subcomplex_KA(105, {7}), 1);
    if (h.free_rank != 0 || h.torsion != std::vector<Int>{2}) {
      why = "got " + h.str();
      return false;
    }
    return true;
  });

  criterion(5, "K[T] homology equals the lattice cokernel, 100 random T", 0,
            [](std::string& why) {
              for (int64_t n : {15, 21, 33, 35}) {
                std::mt19937_64 rng(static_cast<uint64_t>(n));
                for (int k = 0; k < 100; ++k) {
                  VerificationReport r = verify_kT(n, random_window(n, rng));
                  if (!r.passed()) {
                    why = "n=" + std::to_string(n) + " draw " + std::to_string(k);
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(6, "primitive minor unimodular, K[P^c] acyclic, n <= 210", 0,
            [](std::string& why) {
              for (int64_t n : squarefree_range(210)) {
                try {
                  primitive_basis_determinant(n);
                } catch (const std::exception& e) {
                  why = "n=" + std::to_string(n) + ": " + e.what();
                  return false;
                }
                std::vector<int64_t> nonprimitive;
                std::vector<bool> prim(static_cast<size_t>(n), false);
                for (int64_t j : primitive_residues(n)) prim[static_cast<size_t>(j)] = true;
                for (int64_t j = 0; j < n; ++j)
                  if (!prim[static_cast<size_t>(j)]) nonprimitive.push_back(j);
                SimplicialComplex K = subcomplex_KT(n, nonprimitive);
                for (const HomologySummary& h : reduced_homology_all(K))
                  if (!h.trivial()) {
                    why = "n=" + std::to_string(n) + " not acyclic";
                    return false;
                  }
              }
              return true;
            });

  criterion(7, "complementary minors and cokernels; SNF vs minor gcds", 0,
            [](std::string& why) {
              for (int64_t n : squarefree_range(35)) {
                DualPair dp = dual_pair(n);
                std::mt19937_64 rng(static_cast<uint64_t>(100 + n));
                for (int k = 0; k < 50; ++k) {
                  PluckerResult pr = plucker_check(dp, random_window(n, rng));
                  if (!pr.ok()) {
                    why = "n=" + std::to_string(n) + " draw " + std::to_string(k);
                    return false;
                  }
                }
              }
              std::mt19937_64 rng(777);
              std::uniform_int_distribution<int> dim(1, 4), entry(-5, 5);
              for (int t = 0; t < 500; ++t) {
                IntMatrix A(dim(rng), dim(rng));
                for (int i = 0; i < A.rows(); ++i)
                  for (int j = 0; j < A.cols(); ++j) A(i, j) = entry(rng);
                if (!snf_matches_minor_gcds(A, why)) {
                  why = "matrix " + std::to_string(t) + ": " + why;
                  return false;
                }
              }
              return true;
            });

  criterion(8, "facet attaching expansion and coboundary, n <= 105, d >= 2", 0,
            [](std::string& why) {
              return all_reports_pass(squarefree_range(105, 2),
                                      [](int64_t n) { return verify_attaching(n); }, why);
            });

  criterion(9, "two-prime bound <= 255; dihedral <= 210; doubling <= 105", 0,
            [](std::string& why) {
              for (int64_t n : squarefree_range(255, 2)) {
                if (factorize(n).factors.size() != 2) continue;
                VerificationReport r = verify_migotti(n);
                if (!r.passed()) {
                  why = "two-prime n=" + std::to_string(n);
                  return false;
                }
              }
              for (int64_t n : squarefree_range(210)) {
                const int64_t deg = euler_phi(n);
                const IntPoly phi = cyclotomic(n);
                for (int64_t j = 0; 2 * j <= deg; ++j) {
                  bool ok = dihedral_image(n, -1, deg, subcomplex_KA_residues(n, {j})) ==
                                subcomplex_KA_residues(n, {deg - j}) &&
                            phi.coeff(static_cast<int>(j)) == phi.coeff(static_cast<int>(deg - j));
                  if (!ok) {
                    why = "dihedral n=" + std::to_string(n) + " j=" + std::to_string(j);
                    return false;
                  }
                }
              }
              for (int64_t n : squarefree_range(105)) {
                if (n % 2 == 0) continue;
                if (cyclotomic(2 * n) != cyclotomic(n).substitute_neg()) {
                  why = "flip n=" + std::to_string(n);
                  return false;
                }
                const int d = static_cast<int>(factorize(n).factors.size());
                for (int64_t j = 0; j <= euler_phi(n); ++j)
                  if (reduced_homology(subcomplex_KA(n, {j}), d - 2) !=
                      reduced_homology(subcomplex_KA(2 * n, {j}), d - 1)) {
                    why = "suspension n=" + std::to_string(n) + " j=" + std::to_string(j);
                    return false;
                  }
              }
              return true;
            });

  criterion(10, "scale probe n=210 (d=4) at j in {0, 7, 24, 48}", 600.0, [](std::string& why) {
    VerificationReport r = verify_main(210, {0, 7, 24, 48});
    if (!r.passed()) {
      why = "verify_main(210)";
      return false;
    }
    HomologySummary h = reduced_homology(subcomplex_KA(210, {7}), 2);
    if (h.free_rank != 0 || h.torsion != std::vector<Int>{2}) {
      why = "H~_2 of K_{7} is " + h.str();
      return false;
    }
    return true;
  });

  std::printf("acceptance: %d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
