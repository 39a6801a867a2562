// Walkthrough: a simplicial spanning tree of the codimension-one skeleton,
// the orthogonal pair of lattice matrices it induces, and the matching of
// complementary minors with homology on a window of facets.
//
//   ./demo_duality [n]     (default n = 105, must be squarefree)

#include <cstdlib>
#include <iostream>

#include "cyclotopo/cyclotopo.hpp"

int main(int argc, char** argv) {
  using namespace cyclotopo;
  const int64_t n = argc > 1 ? std::atoll(argv[1]) : 105;
  const int64_t deg = euler_phi(n);

  DualPair dp = dual_pair(n);
  TreeConditions cond = check_spanning_tree(dp.tree);
  std::cout << "spanning tree for n=" << n << ": " << dp.tree.in_tree.size() << " of "
            << dp.tree.faces.size() << " faces, conditions "
            << (cond.all() ? "hold" : "FAIL") << "\n"
            << "M is " << dp.M.rows() << "x" << dp.M.cols() << ", M-perp is "
            << dp.Mperp.rows() << "x" << dp.Mperp.cols() << "\n\n";

  // the window T = {phi(n), ..., n-1} attaches the monic tail of Phi_n
  std::vector<int64_t> T;
  for (int64_t r = deg; r < n; ++r) T.push_back(r);
  PluckerResult pr = plucker_check(dp, T);
  std::cout << "window T = {" << deg << "..." << n - 1 << "}:\n"
            << "  det M|_{T^c}    = " << pr.det_M.str() << "\n"
            << "  det M-perp|_T   = " << pr.det_Mperp.str() << "\n"
            << "  lattice quotient " << pr.cokernel.str() << ", homology " << pr.homology.str()
            << (pr.ok() ? "  (agree)" : "  (DISAGREE)") << "\n\n";

  // one coefficient ratio out of the dual dependence
  DualDependence dep = dual_dependence(dp, 0, deg);
  std::cout << "dependence between labels 0 and " << deg << ": c_0=" << dep.c_j.str()
            << " c_" << deg << "=" << dep.c_jprime.str() << " b_0=" << dep.b_j.str() << " b_"
            << deg << "=" << dep.b_jprime.str()
            << (dep.consistent ? "  (signs consistent)" : "  (signs INCONSISTENT)") << "\n";
  return cond.all() && pr.ok() && dep.consistent ? 0 : 1;
}
