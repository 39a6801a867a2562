#pragma once

// The verification harness. Every structural statement the library rests on
// is re-checked here on concrete n, by computing both sides of the claim
// through independent pipelines and comparing:
//
//   main        homology of K_{{j}} against the coefficients of Phi_n
//   signs       fundamental cycles of K_{{j,j'}} against coefficient ratios,
//               plus a full reconstruction of Phi_n from homology data alone
//   kT          homology of K[T] against the lattice quotient Z^phi / Z T^c
//   attaching   expansion of each facet boundary in the cycle-lattice basis
//   coboundary  the coefficient vector as an integral coboundary
//   symmetry    dihedral relabeling, palindromy, and the 2n suspension shift
//   migotti     two-prime coefficients stay in {-1, 0, +1}
//   tree        spanning-tree conditions and dual-pair invariants
//   basis       unimodularity of the primitive-root and cycle-lattice bases
//
// Reports never throw on a failed claim: each sub-case carries a status and
// a witness. Reports are deterministic for fixed inputs and seed.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>

#include <json.hpp>

#include "cyclotopo/duality.hpp"

namespace cyclotopo {

enum class Check { main, signs, kT, attaching, coboundary, symmetry, migotti, tree, basis };

inline constexpr std::array<std::string_view, 9> kCheckNames{
    "main", "signs", "kT", "attaching", "coboundary", "symmetry", "migotti", "tree", "basis"};

inline std::string_view check_name(Check c) { return kCheckNames[static_cast<size_t>(c)]; }

inline std::optional<Check> check_from_name(std::string_view name) {
  for (size_t i = 0; i < kCheckNames.size(); ++i)
    if (kCheckNames[i] == name) return static_cast<Check>(i);
  return std::nullopt;
}

inline std::vector<Check> all_checks() {
  std::vector<Check> out;
  for (size_t i = 0; i < kCheckNames.size(); ++i) out.push_back(static_cast<Check>(i));
  return out;
}

enum class CheckStatus { pass, fail, skipped };

inline std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skipped";
  }
}

struct CheckCase {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  nlohmann::json witness;
};

struct VerificationReport {
  int64_t n = 0;
  Check check = Check::main;
  std::vector<CheckCase> cases;
  int64_t elapsed_ms = 0;

  bool passed() const {
    return std::none_of(cases.begin(), cases.end(),
                        [](const CheckCase& c) { return c.status == CheckStatus::fail; });
  }

  // elapsed_ms is reported as 0 unless timings are requested, keeping the
  // default output byte-identical across runs
  nlohmann::json to_json(bool timings = false) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckCase& c : cases)
      arr.push_back({{"id", c.id}, {"status", status_name(c.status)}, {"witness", c.witness}});
    return {{"n", n},
            {"check_id", check_name(check)},
            {"cases", std::move(arr)},
            {"elapsed_ms", timings ? elapsed_ms : 0}};
  }
};

inline std::string csv_header() { return "n,check_id,cases,passed,failed,skipped,status,elapsed_ms"; }

inline std::string to_csv_row(const VerificationReport& r, bool timings = false) {
  int64_t pass = 0, fail = 0, skip = 0;
  for (const CheckCase& c : r.cases) {
    if (c.status == CheckStatus::pass) ++pass;
    else if (c.status == CheckStatus::fail) ++fail;
    else ++skip;
  }
  std::string row = std::to_string(r.n);
  row += ',';
  row += check_name(r.check);
  row += ',' + std::to_string(r.cases.size()) + ',' + std::to_string(pass) + ',' +
         std::to_string(fail) + ',' + std::to_string(skip) + ',' +
         (r.passed() ? "pass" : "fail") + ',' + std::to_string(timings ? r.elapsed_ms : 0);
  return row;
}

namespace detail {

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

inline CheckCase case_of(std::string id, bool ok, nlohmann::json witness = nlohmann::json::object()) {
  return {std::move(id), ok ? CheckStatus::pass : CheckStatus::fail, std::move(witness)};
}

inline CheckCase skipped_case(std::string id, std::string reason) {
  return {std::move(id), CheckStatus::skipped, {{"reason", std::move(reason)}}};
}

// the group Z/cZ: Z for c = 0, trivial for |c| = 1
inline HomologySummary cyclic_group(const Int& c) {
  if (c == 0) return {1, {}};
  Int a = abs(c);
  if (a == 1) return {0, {}};
  return {0, {a}};
}

inline HomologySummary cokernel_summary(const IntMatrix& A) {
  SNFResult s = smith_normal_form(A);
  HomologySummary out{A.rows() - s.rank, {}};
  for (int i = 0; i < s.rank; ++i)
    if (s.diagonal[i] > 1) out.torsion.push_back(s.diagonal[i]);
  return out;
}

// true iff the window boundaries {dF_r : r = phi(n)..n-1} are a Z-basis of
// the top cycle lattice: full column rank with all invariant factors one
inline std::pair<bool, int> window_cycle_basis(int64_t n) {
  const int64_t deg = euler_phi(n);
  std::vector<int> window;
  for (int64_t r = deg; r < n; ++r) window.push_back(static_cast<int>(r));
  SNFResult s = smith_normal_form(top_boundary_by_residue(n).select_columns(window));
  bool ok = s.rank == static_cast<int>(n - deg);
  for (int i = 0; i < s.rank; ++i) ok = ok && s.diagonal[i] == 1;
  return {ok, s.rank};
}

}  // namespace detail

// Rebuild Phi_n from simplicial data alone: coefficient magnitudes from the
// torsion of K_{{j}}, signs from fundamental cycles through F_j and F_phi,
// anchored only by the monic convention c_phi = +1. No polynomial arithmetic
// is consulted; disagreement between the magnitude and sign routes throws.
inline IntPoly reconstruct_cyclotomic(int64_t n) {
  const auto primes = detail::squarefree_parts(n, "reconstruct_cyclotomic").primes();
  const int d = static_cast<int>(primes.size());
  const int64_t deg = euler_phi(n);

  std::vector<Int> mag(static_cast<size_t>(deg) + 1);
  for (int64_t j = 0; j <= deg; ++j) {
    HomologySummary h = reduced_homology(subcomplex_KA(n, {j}), d - 2);
    if (h.free_rank > 0) {
      mag[j] = 0;
    } else {
      mag[j] = 1;
      for (const Int& t : h.torsion) mag[j] *= t;
    }
  }
  if (mag[deg] != 1)
    throw std::logic_error("reconstruct_cyclotomic: leading magnitude is not one");

  std::vector<Int> c(static_cast<size_t>(deg) + 1);
  c[deg] = 1;
  for (int64_t j = 0; j < deg; ++j) {
    if (mag[j] == 0) continue;
    std::vector<int64_t> residues{j, deg};
    for (int64_t r = deg + 1; r < n; ++r) residues.push_back(r);
    auto cycles = top_cycles(n, residues);
    if (cycles.size() != 1)
      throw std::logic_error("reconstruct_cyclotomic: fundamental cycle is not unique");
    const CycleVector& z = cycles[0];
    auto at = [&](int64_t label) {
      auto it = std::lower_bound(z.residues.begin(), z.residues.end(), label);
      return z.coeffs[it - z.residues.begin()];
    };
    const Int bj = at(j), banchor = at(deg);
    if (bj == 0 || banchor == 0 || banchor % bj != 0)
      throw std::logic_error("reconstruct_cyclotomic: cycle ratio is not integral");
    c[j] = -(banchor / bj);
    if (abs(c[j]) != mag[j])
      throw std::logic_error("reconstruct_cyclotomic: sign and magnitude routes disagree");
  }
  return IntPoly(std::move(c));
}

// H~_i(K_{{j}}) is Z/c_j in degree d-2, Z in degree d-1 exactly when c_j = 0,
// and zero elsewhere. An empty label list means all of 0..phi(n).
inline VerificationReport verify_main(int64_t n, std::vector<int64_t> labels = {}) {
  detail::Stopwatch clock;
  const auto primes = detail::squarefree_parts(n, "verify_main").primes();
  const int d = static_cast<int>(primes.size());
  const int64_t deg = euler_phi(n);
  const IntPoly phi = cyclotomic(n);

  if (labels.empty()) {
    labels.resize(static_cast<size_t>(deg) + 1);
    std::iota(labels.begin(), labels.end(), 0);
  } else {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    for (int64_t j : labels)
      if (j < 0 || j > deg) throw std::invalid_argument("verify_main: label out of range");
  }

  VerificationReport rep{n, Check::main, {}, 0};
  for (int64_t j : labels) {
    const Int c = phi.coeff(static_cast<int>(j));
    SimplicialComplex K = subcomplex_KA(n, {j});
    auto hs = reduced_homology_all(K);
    bool ok = true;
    for (int i = -1; i <= K.dim(); ++i) {
      HomologySummary expect;
      if (i == d - 2) expect = detail::cyclic_group(c);
      else if (i == d - 1 && c == 0) expect = HomologySummary{1, {}};
      ok = ok && hs[i + 1] == expect;
    }
    rep.cases.push_back(detail::case_of(
        "j=" + std::to_string(j), ok,
        {{"j", j}, {"c", c.str()}, {"middle", hs[d - 1].str()}, {"top", hs[d].str()}}));
  }
  rep.elapsed_ms = clock.ms();
  return rep;
}

// For c_j, c_j' both nonzero, the top homology of K_{{j,j'}} is Z and its
// primitive generator satisfies c_j b_j = -c_j' b_j'. Defaults pair every
// nonzero c_j with the monic anchor c_phi = 1, then re-derives the whole
// polynomial from homology and compares.
inline VerificationReport verify_signs(int64_t n,
                                       std::vector<std::pair<int64_t, int64_t>> pairs = {}) {
  detail::Stopwatch clock;
  detail::squarefree_parts(n, "verify_signs");
  const int64_t deg = euler_phi(n);
  const IntPoly phi = cyclotomic(n);

  if (pairs.empty()) {
    for (int64_t j = 0; j < deg; ++j)
      if (phi.coeff(static_cast<int>(j)) != 0) pairs.emplace_back(j, deg);
  } else {
    for (auto [j, jp] : pairs) {
      if (j < 0 || jp < 0 || j > deg || jp > deg || j == jp)
        throw std::invalid_argument("verify_signs: bad label pair");
      if (phi.coeff(static_cast<int>(j)) == 0 || phi.coeff(static_cast<int>(jp)) == 0)
        throw std::invalid_argument("verify_signs: pair with a zero coefficient");
    }
  }

  VerificationReport rep{n, Check::signs, {}, 0};
  for (auto [j, jp] : pairs) {
    std::vector<int64_t> residues{j, jp};
    for (int64_t r = deg + 1; r < n; ++r) residues.push_back(r);
    auto cycles = top_cycles(n, residues);
    Int bj = 0, bjp = 0;
    bool ok = cycles.size() == 1;
    if (ok) {
      const CycleVector& z = cycles[0];
      auto at = [&](int64_t label) {
        auto it = std::lower_bound(z.residues.begin(), z.residues.end(), label);
        return z.coeffs[it - z.residues.begin()];
      };
      bj = at(j);
      bjp = at(jp);
      ok = bj != 0 && bjp != 0 &&
           phi.coeff(static_cast<int>(j)) * bj == -(phi.coeff(static_cast<int>(jp)) * bjp);
    }
    rep.cases.push_back(detail::case_of(
        "pair(" + std::to_string(j) + "," + std::to_string(jp) + ")", ok,
        {{"j", j},
         {"jprime", jp},
         {"c_j", phi.coeff(static_cast<int>(j)).str()},
         {"c_jprime", phi.coeff(static_cast<int>(jp)).str()},
         {"b_j", bj.str()},
         {"b_jprime", bjp.str()},
         {"cycles", cycles.size()}}));
  }

  try {
    IntPoly rebuilt = reconstruct_cyclotomic(n);
    rep.cases.push_back(detail::case_of(
        "reconstruction", rebuilt == phi,
        {{"rebuilt", rebuilt.str()}, {"expected", phi.str()}}));
  } catch (const std::exception& e) {
    rep.cases.push_back(detail::case_of("reconstruction", false, {{"error", e.what()}}));
  }
  rep.elapsed_ms = clock.ms();
  return rep;
}

namespace detail {

// One K[T] comparison: H~_{d-2}(K[T]) must equal Z^phi / (columns T^c of M)
// as a group, and the top homology is free of rank phi(n) - rank(M|_{T^c}).
// When the rank drop is at most one this is exactly the dichotomy "Z iff the
// restriction is singular"; larger drops exist (T^c inside a union of proper
// subfields) and the corank form covers them.
inline CheckCase kT_case(const IntMatrix& M, int64_t n, int d, std::vector<int64_t> T,
                         std::string id) {
  std::sort(T.begin(), T.end());
  SimplicialComplex K = subcomplex_KT(n, T);
  auto hs = reduced_homology_all(K);

  std::vector<bool> in_T(static_cast<size_t>(n), false);
  for (int64_t j : T) in_T[static_cast<size_t>(j)] = true;
  std::vector<int> comp;
  for (int64_t j = 0; j < n; ++j)
    if (!in_T[static_cast<size_t>(j)]) comp.push_back(static_cast<int>(j));

  IntMatrix restricted = M.select_columns(comp);
  HomologySummary coker = cokernel_summary(restricted);
  const int64_t corank = coker.free_rank;
  const int rank = M.rows() - static_cast<int>(corank);

  bool ok = true;
  for (int i = -1; i <= K.dim(); ++i) {
    HomologySummary expect;
    if (i == d - 2) expect = coker;
    else if (i == d - 1) expect = HomologySummary{corank, {}};
    ok = ok && hs[i + 1] == expect;
  }
  return case_of(std::move(id), ok,
                 {{"T", T},
                  {"rank", rank},
                  {"coker", coker.str()},
                  {"middle", hs[d - 1].str()},
                  {"top", hs[d].str()}});
}

}  // namespace detail

inline VerificationReport verify_kT(int64_t n, const std::vector<int64_t>& T) {
  detail::Stopwatch clock;
  const auto primes = detail::squarefree_parts(n, "verify_kT").primes();
  VerificationReport rep{n, Check::kT, {}, 0};
  rep.cases.push_back(detail::kT_case(root_coordinate_matrix(n).entries, n,
                                      static_cast<int>(primes.size()), T, "given"));
  rep.elapsed_ms = clock.ms();
  return rep;
}

// The standard suite: the monomial window {phi(n)..n-1}, every A_0 u {j},
// and seeded random windows.
inline VerificationReport verify_kT_suite(int64_t n, int random_count = 20, uint64_t seed = 0) {
  detail::Stopwatch clock;
  const auto primes = detail::squarefree_parts(n, "verify_kT_suite").primes();
  const int d = static_cast<int>(primes.size());
  const int64_t deg = euler_phi(n);
  const IntMatrix M = root_coordinate_matrix(n).entries;

  VerificationReport rep{n, Check::kT, {}, 0};
  std::vector<int64_t> window;
  for (int64_t r = deg; r < n; ++r) window.push_back(r);
  rep.cases.push_back(detail::kT_case(M, n, d, window, "window"));

  for (int64_t j = 0; j <= deg; ++j) {
    std::vector<int64_t> T{j};
    for (int64_t r = deg + 1; r < n; ++r) T.push_back(r);
    rep.cases.push_back(detail::kT_case(M, n, d, std::move(T), "attach j=" + std::to_string(j)));
  }

  std::mt19937_64 rng(seed);
  std::vector<int64_t> all(static_cast<size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  for (int k = 0; k < random_count; ++k) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int64_t> T(all.begin(), all.begin() + (n - deg));
    rep.cases.push_back(detail::kT_case(M, n, d, std::move(T), "random " + std::to_string(k)));
  }
  rep.elapsed_ms = clock.ms();
  return rep;
}

// The boundaries of the window facets form a Z-basis of the cycle lattice;
// expanding any facet boundary in it puts c_j on the first basis element;
// the coefficient vector itself is an integral coboundary; K_emptyset keeps
// one free cycle class.
inline VerificationReport verify_attaching(int64_t n) {
  detail::Stopwatch clock;
  const auto primes = detail::squarefree_parts(n, "verify_attaching").primes();
  const int d = static_cast<int>(primes.size());
  VerificationReport rep{n, Check::attaching, {}, 0};
  if (d == 1) {
    rep.cases.push_back(detail::skipped_case("attaching", "not applicable for a single prime"));
    rep.elapsed_ms = clock.ms();
    return rep;
  }

  const int64_t deg = euler_phi(n);
  const IntMatrix top = top_boundary_by_residue(n);
  std::vector<int> window;
  for (int64_t r = deg; r < n; ++r) window.push_back(static_cast<int>(r));
  const IntMatrix B = top.select_columns(window);

  auto [basis_ok, basis_rank] = detail::window_cycle_basis(n);
  rep.cases.push_back(detail::case_of("cycle-basis", basis_ok,
                                      {{"rank", basis_rank}, {"expected_rank", n - deg}}));

  HomologySummary empty_h = reduced_homology(subcomplex_KA(n, {}), d - 2);
  rep.cases.push_back(detail::case_of("empty-window", empty_h == HomologySummary{1, {}},
                                      {{"group", empty_h.str()}}));

  const IntPoly phi = cyclotomic(n);
  for (int64_t j = 0; j <= deg; ++j) {
    auto x = solve_integer(B, top.column(static_cast<int>(j)));
    const Int c = phi.coeff(static_cast<int>(j));
    bool ok = x.has_value() && (*x)[0] == c;
    rep.cases.push_back(detail::case_of(
        "expand j=" + std::to_string(j), ok,
        {{"j", j}, {"x0", x ? (*x)[0].str() : "none"}, {"c", c.str()}}));
  }
  rep.elapsed_ms = clock.ms();
  return rep;
}

// The cochain assigning c_j to F_j for j = 0..phi(n) and 0 elsewhere is an
// integral coboundary: the transposed top boundary system has an exact
// integer solution.
inline VerificationReport verify_coboundary(int64_t n) {
  detail::Stopwatch clock;
  detail::squarefree_parts(n, "verify_coboundary");
  const int64_t deg = euler_phi(n);
  const IntPoly phi = cyclotomic(n);
  std::vector<Int> b(static_cast<size_t>(n));
  for (int64_t j = 0; j <= deg; ++j) b[static_cast<size_t>(j)] = phi.coeff(static_cast<int>(j));
  auto y = solve_integer(top_boundary_by_residue(n).transpose(), b);
  VerificationReport rep{n, Check::coboundary, {}, 0};
  rep.cases.push_back(detail::case_of("coboundary", y.has_value(),
                                      {{"solvable", y.has_value()}}));
  rep.elapsed_ms = clock.ms();
  return rep;
}

// Dihedral relabeling j -> phi(n) - j carries K_{{j}} onto K_{{phi(n)-j}}
// and the coefficients are palindromic; for two primes all coefficients lie
// in {-1,0,1}; for odd n the doubled index set realizes the suspension:
// Phi_2n(x) = Phi_n(-x) and the middle homology shifts up one degree.
inline VerificationReport verify_symmetries(int64_t n) {
  detail::Stopwatch clock;
  const auto primes = detail::squarefree_parts(n, "verify_symmetries").primes();
  const int d = static_cast<int>(primes.size());
  const int64_t deg = euler_phi(n);
  const IntPoly phi = cyclotomic(n);
  VerificationReport rep{n, Check::symmetry, {}, 0};

  if (d == 2) {
    Int worst = 0;
    for (const Int& c : phi.coeffs())
      if (abs(c) > worst) worst = abs(c);
    rep.cases.push_back(detail::case_of("migotti", worst <= 1, {{"max_abs", worst.str()}}));
  }

  for (int64_t j = 0; 2 * j <= deg; ++j) {
    auto image = dihedral_image(n, -1, deg, subcomplex_KA_residues(n, {j}));
    bool ok = image == subcomplex_KA_residues(n, {deg - j}) &&
              phi.coeff(static_cast<int>(j)) == phi.coeff(static_cast<int>(deg - j));
    rep.cases.push_back(detail::case_of(
        "dihedral j=" + std::to_string(j), ok,
        {{"j", j},
         {"c_j", phi.coeff(static_cast<int>(j)).str()},
         {"c_mirror", phi.coeff(static_cast<int>(deg - j)).str()}}));
  }

  if (n % 2 == 1 && n >= 3) {
    IntPoly flipped = phi.substitute_neg();
    rep.cases.push_back(detail::case_of("flip", cyclotomic(2 * n) == flipped,
                                        {{"doubled", cyclotomic(2 * n).str()}}));
    for (int64_t j = 0; j <= deg; ++j) {
      HomologySummary base = reduced_homology(subcomplex_KA(n, {j}), d - 2);
      HomologySummary doubled = reduced_homology(subcomplex_KA(2 * n, {j}), d - 1);
      rep.cases.push_back(detail::case_of(
          "suspension j=" + std::to_string(j), base == doubled,
          {{"j", j}, {"base", base.str()}, {"doubled", doubled.str()}}));
    }
  }
  rep.elapsed_ms = clock.ms();
  return rep;
}

inline VerificationReport verify_migotti(int64_t n) {
  detail::Stopwatch clock;
  const auto primes = detail::squarefree_parts(n, "verify_migotti").primes();
  const int d = static_cast<int>(primes.size());
  VerificationReport rep{n, Check::migotti, {}, 0};
  if (d != 2) {
    rep.cases.push_back(detail::skipped_case("migotti", "requires exactly two prime factors"));
    rep.elapsed_ms = clock.ms();
    return rep;
  }
  const int64_t deg = euler_phi(n);
  const IntPoly phi = cyclotomic(n);
  for (int64_t j = 0; j <= deg; ++j) {
    const Int c = phi.coeff(static_cast<int>(j));
    HomologySummary h = reduced_homology(subcomplex_KA(n, {j}), 0);
    bool ok = abs(c) <= 1 && h.torsion.empty() && (c == 0) == (h.free_rank == 1);
    rep.cases.push_back(detail::case_of("j=" + std::to_string(j), ok,
                                        {{"j", j}, {"c", c.str()}, {"group", h.str()}}));
  }
  rep.elapsed_ms = clock.ms();
  return rep;
}

inline VerificationReport verify_tree(int64_t n) {
  detail::Stopwatch clock;
  detail::squarefree_parts(n, "verify_tree");
  VerificationReport rep{n, Check::tree, {}, 0};
  try {
    DualPair dp = dual_pair(n);
    TreeConditions cond = check_spanning_tree(dp.tree);
    nlohmann::json sizes{{"faces", dp.tree.faces.size()}, {"in_tree", dp.tree.in_tree.size()}};
    rep.cases.push_back(detail::case_of("construction", true, sizes));
    rep.cases.push_back(detail::case_of("count", cond.count, sizes));
    rep.cases.push_back(detail::case_of("skeleton", cond.skeleton, sizes));
    rep.cases.push_back(detail::case_of("top-acyclic", cond.top_acyclic, sizes));
    rep.cases.push_back(detail::case_of("torsion-free", cond.torsion_free, sizes));
    rep.cases.push_back(detail::case_of(
        "orthogonal", (dp.M * dp.Mperp.transpose()).is_zero(), nlohmann::json::object()));
    rep.cases.push_back(detail::case_of("full-rank",
                                        rank_of(dp.Mperp) == dp.Mperp.rows(),
                                        {{"rows", dp.Mperp.rows()}}));
  } catch (const std::exception& e) {
    rep.cases.push_back(detail::case_of("construction", false, {{"error", e.what()}}));
  }
  rep.elapsed_ms = clock.ms();
  return rep;
}

// The primitive-root columns of M form a Z-basis of the coefficient lattice,
// the window boundaries are a Z-basis of the cycle lattice, and K[P_n^c] is
// acyclic in every degree.
inline VerificationReport verify_basis(int64_t n) {
  detail::Stopwatch clock;
  const auto primes = detail::squarefree_parts(n, "verify_basis").primes();
  const int d = static_cast<int>(primes.size());
  VerificationReport rep{n, Check::basis, {}, 0};

  try {
    Int det = primitive_basis_determinant(n);
    rep.cases.push_back(detail::case_of("primitive-minor", abs(det) == 1, {{"det", det.str()}}));
  } catch (const std::exception& e) {
    rep.cases.push_back(detail::case_of("primitive-minor", false, {{"error", e.what()}}));
  }

  auto [basis_ok, basis_rank] = detail::window_cycle_basis(n);
  rep.cases.push_back(detail::case_of("cycle-basis", basis_ok, {{"rank", basis_rank}}));

  std::vector<int64_t> nonprimitive;
  {
    std::vector<bool> prim(static_cast<size_t>(n), false);
    for (int64_t j : primitive_residues(n)) prim[static_cast<size_t>(j)] = true;
    for (int64_t j = 0; j < n; ++j)
      if (!prim[static_cast<size_t>(j)]) nonprimitive.push_back(j);
  }
  SimplicialComplex K = subcomplex_KT(n, nonprimitive);
  auto hs = reduced_homology_all(K);
  bool acyclic = true;
  for (int i = -1; i <= K.dim(); ++i) acyclic = acyclic && hs[i + 1].trivial();
  rep.cases.push_back(detail::case_of(
      "contractible", acyclic,
      {{"middle", hs[d - 1].str()}, {"top", hs[d].str()}}));
  rep.elapsed_ms = clock.ms();
  return rep;
}

struct CheckOptions {
  int kT_random = 20;
  uint64_t seed = 0;
};

inline VerificationReport run_check(int64_t n, Check c, const CheckOptions& opt = {}) {
  switch (c) {
    case Check::main: return verify_main(n);
    case Check::signs: return verify_signs(n);
    case Check::kT: return verify_kT_suite(n, opt.kT_random, opt.seed);
    case Check::attaching: return verify_attaching(n);
    case Check::coboundary: return verify_coboundary(n);
    case Check::symmetry: return verify_symmetries(n);
    case Check::migotti: return verify_migotti(n);
    case Check::tree: return verify_tree(n);
    case Check::basis: return verify_basis(n);
  }
  throw std::logic_error("run_check: unknown check");
}

namespace detail {

// Run (n, check) jobs across a pool, slotting results by job index so the
// output order never depends on the thread count. An exception inside a job
// becomes a failing report rather than aborting the batch.
inline std::vector<VerificationReport> run_jobs(const std::vector<std::pair<int64_t, Check>>& jobs,
                                                const CheckOptions& copt, int threads) {
  std::vector<VerificationReport> results(jobs.size());
  auto run_one = [&](size_t idx) {
    const auto [n, c] = jobs[idx];
    try {
      results[idx] = run_check(n, c, copt);
    } catch (const std::exception& e) {
      results[idx] = VerificationReport{
          n, c, {CheckCase{"exception", CheckStatus::fail, {{"error", e.what()}}}}, 0};
    }
  };

  threads = std::max(1, threads);
  if (threads == 1 || jobs.size() <= 1) {
    for (size_t i = 0; i < jobs.size(); ++i) run_one(i);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) run_one(i);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min<int>(threads, static_cast<int>(jobs.size())); ++t)
      pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

}  // namespace detail

// All selected checks for a single n, in the given order (empty = all).
inline std::vector<VerificationReport> run_checks(int64_t n, std::vector<Check> checks,
                                                  const CheckOptions& opt = {}, int threads = 1) {
  if (checks.empty()) checks = all_checks();
  std::vector<std::pair<int64_t, Check>> jobs;
  for (Check c : checks) jobs.emplace_back(n, c);
  return detail::run_jobs(jobs, opt, threads);
}

struct SweepOptions {
  std::optional<int> d_filter;  // restrict to n with exactly this many primes
  int threads = 1;
  uint64_t seed = 0;
  int kT_random = 20;
};

// Run the selected checks over every squarefree n in [2, max_n]. Failures
// (including exceptions) are recorded per report; the sweep never aborts.
// Reports come back ordered by n, then by the given check order, regardless
// of thread count.
inline std::vector<VerificationReport> sweep(int64_t max_n, std::vector<Check> checks,
                                             const SweepOptions& opt = {}) {
  if (checks.empty()) checks = all_checks();
  std::vector<std::pair<int64_t, Check>> jobs;
  for (int64_t n : squarefree_up_to(max_n)) {
    if (n < 2) continue;
    if (opt.d_filter && static_cast<int>(factorize(n).factors.size()) != *opt.d_filter) continue;
    for (Check c : checks) jobs.emplace_back(n, c);
  }
  return detail::run_jobs(jobs, CheckOptions{opt.kT_random, opt.seed}, opt.threads);
}

}  // namespace cyclotopo
