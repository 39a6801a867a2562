#pragma once

// Simplicial spanning trees of the middle skeleton and the matrix duality
// they induce.
//
// For squarefree n the root coordinate matrix M (phi(n) x n) and the cotree
// rows Mperp of the top boundary ((n - phi(n)) x n) represent dual matroids
// on the facet labels 0..n-1: complementary maximal minors agree up to sign,
// and the cokernel of a restriction of Mperp is the homology of the matching
// K[T] subcomplex. Everything here works uniformly down to d = 1, where the
// middle skeleton is the lone empty face and Mperp is the augmentation row.

#include <numeric>
#include <random>

#include "cyclotopo/complex.hpp"
#include "cyclotopo/polynomial.hpp"

namespace cyclotopo {

// A choice of (d-2)-faces spanning the middle skeleton. `faces` lists every
// (d-2)-face of the complete complex in the sorted order all boundary
// matrices use; `in_tree` and `dual_rows` partition its index range.
struct SpanningTree {
  int64_t n = 0;
  int d = 0;
  std::vector<OrientedSimplex> faces;
  std::vector<int> in_tree;
  std::vector<int> dual_rows;
};

struct TreeConditions {
  bool count = false;         // |in_tree| = #faces - (n - phi(n))
  bool skeleton = false;      // tree subcomplex keeps the whole (d-3)-skeleton
  bool top_acyclic = false;   // H_{d-2} of the tree subcomplex vanishes
  bool torsion_free = false;  // H_{d-3} of the tree subcomplex vanishes

  bool all() const { return count && skeleton && top_acyclic && torsion_free; }
};

// The subcomplex spanned by a tree: the full (d-3)-skeleton plus the chosen
// (d-2)-faces. For d = 1 the tree is empty and so is the complex.
inline SimplicialComplex tree_subcomplex(const SpanningTree& t) {
  const auto primes = detail::squarefree_parts(t.n, "tree_subcomplex").primes();
  const int d = static_cast<int>(primes.size());
  std::vector<OrientedSimplex> facets;
  for (int idx : t.in_tree) facets.push_back(t.faces.at(idx));
  if (d >= 3) {
    SimplicialComplex complete = complete_dpartite(primes);
    const auto& lower = complete.faces_of_dim(d - 3);
    facets.insert(facets.end(), lower.begin(), lower.end());
  }
  return SimplicialComplex(primes, std::move(facets), false);
}

inline TreeConditions check_spanning_tree(const SpanningTree& t) {
  const auto primes = detail::squarefree_parts(t.n, "check_spanning_tree").primes();
  const int d = static_cast<int>(primes.size());
  TreeConditions cond;
  const int64_t target =
      static_cast<int64_t>(t.faces.size()) - (t.n - euler_phi(t.n));
  cond.count = static_cast<int64_t>(t.in_tree.size()) == target;
  if (d == 1) {
    // the tree drops the empty face itself, leaving the void complex, which
    // is acyclic in every degree
    cond.skeleton = cond.top_acyclic = cond.torsion_free = cond.count;
    return cond;
  }
  SimplicialComplex X = tree_subcomplex(t);
  int64_t lower = (d - 3 <= X.dim()) ? static_cast<int64_t>(X.faces_of_dim(d - 3).size())
                                     : (d - 3 == -1 ? 1 : 0);
  cond.skeleton = lower == detail::ambient_face_count(primes, d - 3);
  cond.top_acyclic = X.dim() == d - 2 ? reduced_homology(X, d - 2).trivial() : t.in_tree.empty();
  cond.torsion_free = X.dim() >= d - 3 && reduced_homology(X, d - 3).trivial();
  return cond;
}

// Greedy spanning tree: scan the (d-2)-faces and keep those whose boundary
// columns are rationally independent of the faces kept so far. A maximal
// independent set always has the right count and kills top homology; only
// torsion in degree d-3 can reject it, and that cannot happen below d = 4.
// Rejected scans retry in seeded shuffled orders.
inline SpanningTree find_spanning_tree(int64_t n, int max_attempts = 32) {
  Factorization f = detail::squarefree_parts(n, "find_spanning_tree");
  const auto primes = f.primes();
  const int d = static_cast<int>(primes.size());
  SimplicialComplex complete = complete_dpartite(primes);

  SpanningTree t;
  t.n = n;
  t.d = d;
  t.faces = complete.faces_of_dim(d - 2);
  if (d == 1) {
    t.dual_rows = {0};
    return t;
  }

  const IntMatrix del = boundary_matrix(complete, d - 2);
  const int total = static_cast<int>(t.faces.size());
  const size_t target = static_cast<size_t>(total - (n - euler_phi(n)));

  std::vector<int> order(total);
  std::iota(order.begin(), order.end(), 0);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    if (attempt > 0) {
      std::mt19937_64 rng(static_cast<uint64_t>(attempt));
      std::shuffle(order.begin(), order.end(), rng);
    }

    // fraction-free echelon accumulator over the selected columns
    std::vector<std::vector<Int>> rows;
    std::vector<size_t> pivot;
    std::vector<int> picked;
    for (int idx : order) {
      if (picked.size() == target) break;
      std::vector<Int> v = del.column(idx);
      for (size_t k = 0; k < rows.size(); ++k) {
        const Int lead = v[pivot[k]];
        if (lead == 0) continue;
        const Int p = rows[k][pivot[k]];
        for (size_t i = 0; i < v.size(); ++i) v[i] = p * v[i] - lead * rows[k][i];
      }
      detail::normalize_primitive(v);
      size_t pc = 0;
      while (pc < v.size() && v[pc] == 0) ++pc;
      if (pc == v.size()) continue;  // dependent, stays out of the tree
      pivot.push_back(pc);
      rows.push_back(std::move(v));
      picked.push_back(idx);
    }

    std::sort(picked.begin(), picked.end());
    t.in_tree = picked;
    t.dual_rows.clear();
    std::vector<bool> used(total, false);
    for (int idx : picked) used[idx] = true;
    for (int idx = 0; idx < total; ++idx)
      if (!used[idx]) t.dual_rows.push_back(idx);
    if (check_spanning_tree(t).all()) return t;
  }
  throw std::runtime_error("find_spanning_tree: no valid tree within the attempt budget");
}

// The dual matrices on the facet labels: M from root coordinates, Mperp from
// the cotree rows of the top boundary. Orthogonality and full rank of Mperp
// hold by the theory and are re-verified here.
struct DualPair {
  int64_t n = 0;
  IntMatrix M;
  IntMatrix Mperp;
  SpanningTree tree;
};

inline DualPair dual_pair(int64_t n, int max_attempts = 32) {
  DualPair dp;
  dp.n = n;
  dp.tree = find_spanning_tree(n, max_attempts);
  dp.M = root_coordinate_matrix(n).entries;
  dp.Mperp = top_boundary_by_residue(n).select_rows(dp.tree.dual_rows);
  if (!(dp.M * dp.Mperp.transpose()).is_zero())
    throw std::logic_error("dual_pair: matrices are not orthogonal");
  if (rank_of(dp.Mperp) != static_cast<int>(n - euler_phi(n)))
    throw std::logic_error("dual_pair: dual matrix is rank deficient");
  return dp;
}

// Complementary minors and the cokernel route. T picks n - phi(n) facet
// labels; the complement picks columns of M. Disagreements are reported in
// the flags, not thrown.
struct PluckerResult {
  std::vector<int64_t> T;
  Int det_M = 0;              // det of M on the columns outside T
  Int det_Mperp = 0;          // det of Mperp on the columns of T
  HomologySummary cokernel;   // coker(Mperp restricted to T)
  HomologySummary homology;   // H_{d-2} of K[T]
  bool magnitudes_match = false;
  bool cokernel_matches = false;

  bool ok() const { return magnitudes_match && cokernel_matches; }
};

inline PluckerResult plucker_check(const DualPair& dp, std::vector<int64_t> T) {
  const int64_t n = dp.n;
  std::sort(T.begin(), T.end());
  if (std::adjacent_find(T.begin(), T.end()) != T.end())
    throw std::invalid_argument("plucker_check: repeated label");
  if (static_cast<int64_t>(T.size()) != n - euler_phi(n))
    throw std::invalid_argument("plucker_check: T must have n - phi(n) labels");
  std::vector<bool> in_T(n, false);
  std::vector<int> t_cols;
  for (int64_t j : T) {
    if (j < 0 || j >= n) throw std::invalid_argument("plucker_check: label out of range");
    in_T[j] = true;
    t_cols.push_back(static_cast<int>(j));
  }
  std::vector<int> c_cols;
  for (int64_t j = 0; j < n; ++j)
    if (!in_T[j]) c_cols.push_back(static_cast<int>(j));

  PluckerResult out;
  out.T = std::move(T);
  out.det_M = determinant(dp.M.select_columns(c_cols));
  IntMatrix restricted = dp.Mperp.select_columns(t_cols);
  out.det_Mperp = determinant(restricted);
  SNFResult s = smith_normal_form(restricted);
  out.cokernel.free_rank = restricted.cols() - s.rank;
  for (int i = 0; i < s.rank; ++i)
    if (s.diagonal[i] > 1) out.cokernel.torsion.push_back(s.diagonal[i]);
  out.homology = reduced_homology(subcomplex_KT(n, out.T), dp.tree.d - 2);
  out.magnitudes_match = abs(out.det_M) == abs(out.det_Mperp);
  out.cokernel_matches = out.cokernel == out.homology;
  return out;
}

// One coefficient relation read off the dual matroids. The kernel of M on
// columns 0..phi(n) is spanned by the coefficient vector of the minimal
// polynomial of the label action; the kernel of Mperp on the complementary
// window plus {j, j'} is spanned by the fundamental cycle through F_j and
// F_j'. The two dependencies satisfy c_j b_j = -c_j' b_j'.
struct DualDependence {
  int64_t j = 0, jprime = 0;
  Int c_j, c_jprime;  // coefficient route, from ker M
  Int b_j, b_jprime;  // cycle route, from ker Mperp
  bool consistent = false;
};

inline DualDependence dual_dependence(const DualPair& dp, int64_t j, int64_t jprime) {
  const int64_t n = dp.n;
  const int64_t phi = euler_phi(n);
  if (j == jprime || j < 0 || jprime < 0 || j > phi || jprime > phi)
    throw std::invalid_argument("dual_dependence: labels must be distinct and at most phi(n)");

  std::vector<int> window(static_cast<size_t>(phi) + 1);
  std::iota(window.begin(), window.end(), 0);
  auto cker = kernel_primitive_basis(dp.M.select_columns(window));
  if (cker.size() != 1 || cker[0].back() != 1)
    throw std::logic_error("dual_dependence: coefficient kernel is not generated monically");
  const std::vector<Int>& c = cker[0];

  DualDependence out;
  out.j = j;
  out.jprime = jprime;
  out.c_j = c[j];
  out.c_jprime = c[jprime];
  if (out.c_j == 0 || out.c_jprime == 0)
    throw std::invalid_argument("dual_dependence: vanishing coefficient, no fundamental cycle");

  std::vector<int> cols{static_cast<int>(j), static_cast<int>(jprime)};
  for (int64_t r = phi + 1; r < n; ++r) cols.push_back(static_cast<int>(r));
  std::sort(cols.begin(), cols.end());
  auto bker = kernel_primitive_basis(dp.Mperp.select_columns(cols));
  if (bker.size() != 1)
    throw std::logic_error("dual_dependence: dual kernel is not rank one");
  auto pos = [&](int64_t label) {
    return std::lower_bound(cols.begin(), cols.end(), static_cast<int>(label)) - cols.begin();
  };
  out.b_j = bker[0][pos(j)];
  out.b_jprime = bker[0][pos(jprime)];
  out.consistent = out.c_j * out.b_j == -out.c_jprime * out.b_jprime;
  return out;
}

}  // namespace cyclotopo
