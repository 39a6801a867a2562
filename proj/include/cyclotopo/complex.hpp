#pragma once

// Pure d-partite simplicial complexes with CRT facet labels.
//
// A vertex is (part index, residue mod p_i). A face holds at most one vertex
// per part and is written with strictly increasing part indices; that order
// is the orientation. For squarefree n = p_1 ... p_d the facets of the
// complete d-partite complex biject with Z/nZ by the Chinese remainder map:
// facet F_j has the vertex (i, j mod p_i) in every part.
//
// Complexes are immutable after construction. Every face of every dimension
// is enumerated up front in sorted order (these complexes are tiny), so all
// queries are read-only and safe to run concurrently.

#include <set>

#include "cyclotopo/exactlinalg.hpp"
#include "cyclotopo/numtheory.hpp"

namespace cyclotopo {

struct Vertex {
  int part = 0;
  int64_t residue = 0;
  auto operator<=>(const Vertex&) const = default;
};

// vertices with strictly increasing part indices; empty = the empty face
using OrientedSimplex = std::vector<Vertex>;

namespace detail {

// elementary symmetric sum of the part sizes, degree k+1: the number of
// k-faces of the complete d-partite complex
inline int64_t ambient_face_count(const std::vector<int64_t>& parts, int k) {
  if (k < -1) return 0;
  std::vector<int64_t> e(parts.size() + 1);
  e[0] = 1;
  for (int64_t p : parts)
    for (int j = static_cast<int>(parts.size()); j >= 1; --j) e[j] += e[j - 1] * p;
  return (k + 1 <= static_cast<int>(parts.size())) ? e[k + 1] : 0;
}

}  // namespace detail

class SimplicialComplex {
 public:
  SimplicialComplex() { faces_.push_back({OrientedSimplex{}}); }

  SimplicialComplex(std::vector<int64_t> parts, std::vector<OrientedSimplex> facets,
                    bool full_skeleton = false)
      : parts_(std::move(parts)), full_skeleton_(full_skeleton) {
    for (int64_t p : parts_)
      if (p < 1) throw std::invalid_argument("SimplicialComplex: part sizes must be positive");
    facets_normalize(facets);
    facets_ = std::move(facets);

    std::set<OrientedSimplex> closure;
    closure.insert(OrientedSimplex{});
    for (const auto& f : facets_) {
      const size_t m = f.size();
      for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
        OrientedSimplex sub;
        for (size_t b = 0; b < m; ++b)
          if (mask & (size_t(1) << b)) sub.push_back(f[b]);
        closure.insert(std::move(sub));
      }
    }
    if (full_skeleton_) add_skeleton_faces(closure);

    int dim = -1;
    for (const auto& f : closure) dim = std::max(dim, static_cast<int>(f.size()) - 1);
    faces_.assign(dim + 2, {});
    for (const auto& f : closure) faces_[f.size()].push_back(f);
    // std::set iteration already delivers each dimension in lexicographic
    // order on (part, residue) sequences, the order all matrices use
  }

  const std::vector<int64_t>& parts() const { return parts_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  bool full_skeleton() const { return full_skeleton_; }
  const std::vector<OrientedSimplex>& facets() const { return facets_; }

  int dim() const { return static_cast<int>(faces_.size()) - 2; }

  const std::vector<OrientedSimplex>& faces_of_dim(int k) const {
    if (k < -1 || k > dim()) throw std::invalid_argument("faces_of_dim: k out of range");
    return faces_[k + 1];
  }

  bool contains(const OrientedSimplex& f) const {
    int k = static_cast<int>(f.size()) - 1;
    if (k > dim()) return false;
    const auto& fs = faces_[k + 1];
    return std::binary_search(fs.begin(), fs.end(), f);
  }

  // faces not strictly contained in any other face
  std::vector<OrientedSimplex> maximal_faces() const {
    std::vector<OrientedSimplex> out;
    for (int k = -1; k <= dim(); ++k) {
      for (const auto& f : faces_of_dim(k)) {
        bool covered = false;
        if (k + 1 <= dim())
          for (const auto& g : faces_of_dim(k + 1)) {
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
              covered = true;
              break;
            }
          }
        if (!covered) out.push_back(f);
      }
    }
    return out;
  }

 private:
  void facets_normalize(std::vector<OrientedSimplex>& facets) {
    for (const auto& f : facets) {
      for (size_t i = 0; i < f.size(); ++i) {
        if (f[i].part < 0 || f[i].part >= num_parts())
          throw std::invalid_argument("SimplicialComplex: facet part index out of range");
        if (f[i].residue < 0 || f[i].residue >= parts_[f[i].part])
          throw std::invalid_argument("SimplicialComplex: facet residue out of range");
        if (i > 0 && f[i - 1].part >= f[i].part)
          throw std::invalid_argument("SimplicialComplex: facet parts must strictly increase");
      }
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  }

  void add_skeleton_faces(std::set<OrientedSimplex>& closure) const {
    const int d = num_parts();
    // all faces of the ambient complete complex of dimension <= d - 2
    auto rec = [&](auto&& self, int from, OrientedSimplex& cur) -> void {
      if (static_cast<int>(cur.size()) <= d - 1) closure.insert(cur);
      if (static_cast<int>(cur.size()) == d - 1) return;  // dim d - 2 reached
      for (int i = from; i < d; ++i) {
        for (int64_t r = 0; r < parts_[i]; ++r) {
          cur.push_back({i, r});
          self(self, i + 1, cur);
          cur.pop_back();
        }
      }
    };
    OrientedSimplex cur;
    rec(rec, 0, cur);
  }

  std::vector<int64_t> parts_;
  std::vector<OrientedSimplex> facets_;
  bool full_skeleton_ = false;
  std::vector<std::vector<OrientedSimplex>> faces_;  // faces_[k+1] = k-faces, sorted
};

inline SimplicialComplex complete_dpartite(const std::vector<int64_t>& parts) {
  if (parts.empty()) throw std::invalid_argument("complete_dpartite: need at least one part");
  std::vector<OrientedSimplex> facets;
  OrientedSimplex cur(parts.size());
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == parts.size()) {
      facets.push_back(cur);
      return;
    }
    for (int64_t r = 0; r < parts[i]; ++r) {
      cur[i] = {static_cast<int>(i), r};
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return SimplicialComplex(parts, std::move(facets), false);
}

// the facet F_j of the complete complex for squarefree n with the given
// ascending prime parts
inline OrientedSimplex facet_for_residue(const std::vector<int64_t>& primes, int64_t j) {
  ResidueVector rv = crt_split(j, primes);
  OrientedSimplex f(primes.size());
  for (size_t i = 0; i < primes.size(); ++i) f[i] = {static_cast<int>(i), rv[i]};
  return f;
}

inline int64_t residue_for_facet(const std::vector<int64_t>& primes, const OrientedSimplex& f) {
  if (f.size() != primes.size())
    throw std::invalid_argument("residue_for_facet: facet must touch every part");
  ResidueVector rv(f.size());
  for (size_t i = 0; i < f.size(); ++i) rv[i] = f[i].residue;
  return crt_combine(rv, primes);
}

namespace detail {

inline Factorization squarefree_parts(int64_t n, const char* who) {
  Factorization f = factorize(n);
  if (n < 2 || !f.squarefree())
    throw std::invalid_argument(std::string(who) + ": n must be squarefree and at least 2");
  return f;
}

}  // namespace detail

// facet labels of K_A: the chosen A together with A_0 = {phi(n)+1, ..., n-1}
inline std::vector<int64_t> subcomplex_KA_residues(int64_t n, const std::vector<int64_t>& A) {
  detail::squarefree_parts(n, "subcomplex_KA");
  const int64_t phi = euler_phi(n);
  std::set<int64_t> picked;
  for (int64_t j : A) {
    if (j < 0 || j > phi)
      throw std::invalid_argument("subcomplex_KA: labels must lie in {0..phi(n)}");
    if (!picked.insert(j).second)
      throw std::invalid_argument("subcomplex_KA: repeated label");
  }
  for (int64_t j = phi + 1; j < n; ++j) picked.insert(j);
  return {picked.begin(), picked.end()};
}

// K_A: facets F_j for j in A and for every j above phi(n). The result is
// generated by its facets alone; that it still contains the entire
// (d-2)-skeleton of the complete complex is checked, not assumed.
inline SimplicialComplex subcomplex_KA(int64_t n, const std::vector<int64_t>& A) {
  Factorization f = detail::squarefree_parts(n, "subcomplex_KA");
  const auto primes = f.primes();
  std::vector<OrientedSimplex> facets;
  for (int64_t j : subcomplex_KA_residues(n, A)) facets.push_back(facet_for_residue(primes, j));
  SimplicialComplex X(primes, std::move(facets), false);
  const int d = static_cast<int>(primes.size());
  int64_t have = (d - 2 <= X.dim()) ? static_cast<int64_t>(X.faces_of_dim(d - 2).size())
                                    : (d - 2 == -1 ? 1 : 0);
  if (have != detail::ambient_face_count(primes, d - 2))
    throw std::logic_error("subcomplex_KA: (d-2)-skeleton not covered by the facets");
  return X;
}

// K[T]: the full (d-2)-skeleton plus the facets labeled by T, which must
// have exactly n - phi(n) elements.
inline SimplicialComplex subcomplex_KT(int64_t n, const std::vector<int64_t>& T) {
  Factorization f = detail::squarefree_parts(n, "subcomplex_KT");
  const auto primes = f.primes();
  const int64_t expected = n - euler_phi(n);
  std::set<int64_t> seen;
  for (int64_t j : T) {
    if (j < 0 || j >= n) throw std::invalid_argument("subcomplex_KT: label out of range");
    if (!seen.insert(j).second) throw std::invalid_argument("subcomplex_KT: repeated label");
  }
  if (static_cast<int64_t>(T.size()) != expected)
    throw std::invalid_argument("subcomplex_KT: T must have n - phi(n) elements");
  std::vector<OrientedSimplex> facets;
  for (int64_t j : seen) facets.push_back(facet_for_residue(primes, j));
  return SimplicialComplex(primes, std::move(facets), true);
}

// Boundary of the k-chains. Rows are the (k-1)-faces and columns the k-faces,
// both in sorted order; deleting the vertex in position q of a face
// contributes (-1)^q. k = 0 produces the augmentation row onto the empty face.
inline IntMatrix boundary_matrix(const SimplicialComplex& X, int k) {
  if (k < 0 || k > X.dim()) throw std::invalid_argument("boundary_matrix: k out of range");
  const auto& rows = X.faces_of_dim(k - 1);
  const auto& cols = X.faces_of_dim(k);
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t ci = 0; ci < cols.size(); ++ci) {
    const OrientedSimplex& g = cols[ci];
    OrientedSimplex h(g.size() - 1);
    for (size_t q = 0; q < g.size(); ++q) {
      for (size_t t = 0, w = 0; t < g.size(); ++t)
        if (t != q) h[w++] = g[t];
      auto it = std::lower_bound(rows.begin(), rows.end(), h);
      m(static_cast<int>(it - rows.begin()), static_cast<int>(ci)) = (q % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

// Top boundary of the complete complex with columns indexed by the CRT facet
// labels: column j is the boundary of F_j. Rows are the (d-2)-faces of the
// complete complex in the same sorted order boundary_matrix uses.
inline IntMatrix top_boundary_by_residue(int64_t n) {
  Factorization f = detail::squarefree_parts(n, "top_boundary_by_residue");
  const auto primes = f.primes();
  const int d = static_cast<int>(primes.size());
  SimplicialComplex complete = complete_dpartite(primes);
  const auto& rows = complete.faces_of_dim(d - 2);
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(n));
  for (int64_t j = 0; j < n; ++j) {
    OrientedSimplex g = facet_for_residue(primes, j);
    OrientedSimplex h(g.size() - 1);
    for (size_t q = 0; q < g.size(); ++q) {
      for (size_t t = 0, w = 0; t < g.size(); ++t)
        if (t != q) h[w++] = g[t];
      auto it = std::lower_bound(rows.begin(), rows.end(), h);
      m(static_cast<int>(it - rows.begin()), static_cast<int>(j)) = (q % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

// Reduced homology of the augmented chain complex. The empty face is always
// a chain group generator, so a complex with no vertices has H_{-1} = Z and
// any nonempty complex has H_{-1} = 0.
inline HomologySummary reduced_homology(const SimplicialComplex& X, int i) {
  if (i < -1 || i > X.dim()) throw std::invalid_argument("reduced_homology: i out of range");
  const int64_t n_i = static_cast<int64_t>(X.faces_of_dim(i).size());
  const int rank_lower = (i >= 0) ? rank_of(boundary_matrix(X, i)) : 0;
  HomologySummary h;
  if (i < X.dim()) {
    SNFResult s = smith_normal_form(boundary_matrix(X, i + 1));
    h.free_rank = n_i - rank_lower - s.rank;
    for (int t = 0; t < s.rank; ++t)
      if (s.diagonal[t] > 1) h.torsion.push_back(s.diagonal[t]);
  } else {
    h.free_rank = n_i - rank_lower;
  }
  return h;
}

// All reduced homology groups at once, one Smith normal form per level.
// Index i + 1 holds degree i, for i = -1 .. dim.
inline std::vector<HomologySummary> reduced_homology_all(const SimplicialComplex& X) {
  const int dim = X.dim();
  std::vector<SNFResult> snf(dim + 1);
  for (int k = 0; k <= dim; ++k) snf[k] = smith_normal_form(boundary_matrix(X, k));
  std::vector<HomologySummary> hs(dim + 2);
  for (int i = -1; i <= dim; ++i) {
    HomologySummary& h = hs[i + 1];
    h.free_rank = static_cast<int64_t>(X.faces_of_dim(i).size());
    if (i >= 0) h.free_rank -= snf[i].rank;
    if (i < dim) {
      h.free_rank -= snf[i + 1].rank;
      for (int t = 0; t < snf[i + 1].rank; ++t)
        if (snf[i + 1].diagonal[t] > 1) h.torsion.push_back(snf[i + 1].diagonal[t]);
    }
  }
  return hs;
}

// Suspension: a new first part of size 2; every maximal face F becomes the
// two facets {0 mod 2} u F and {1 mod 2} u F.
inline SimplicialComplex suspension(const SimplicialComplex& X) {
  std::vector<int64_t> parts;
  parts.push_back(2);
  for (int64_t p : X.parts()) parts.push_back(p);
  std::vector<OrientedSimplex> facets;
  for (const auto& f : X.maximal_faces()) {
    for (int64_t pole = 0; pole < 2; ++pole) {
      OrientedSimplex g;
      g.push_back({0, pole});
      for (const Vertex& v : f) g.push_back({v.part + 1, v.residue});
      facets.push_back(std::move(g));
    }
  }
  return SimplicialComplex(parts, std::move(facets), false);
}

// The dihedral action on facet labels: j -> eps * j + shift mod n.
inline std::vector<int64_t> dihedral_image(int64_t n, int eps, int64_t shift,
                                           const std::vector<int64_t>& facet_residues) {
  if (n < 1) throw std::invalid_argument("dihedral_image: n must be positive");
  if (eps != 1 && eps != -1) throw std::invalid_argument("dihedral_image: eps must be +-1");
  std::vector<int64_t> out;
  out.reserve(facet_residues.size());
  for (int64_t j : facet_residues) {
    if (j < 0 || j >= n) throw std::invalid_argument("dihedral_image: residue out of range");
    out.push_back(((eps * j + shift) % n + n) % n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// a top-dimensional cycle written in the facet labels of a K_A subcomplex
struct CycleVector {
  std::vector<int64_t> residues;
  std::vector<Int> coeffs;  // parallel to residues, content 1, leading entry positive
};

// Primitive basis of the top-degree cycle space of the subcomplex spanned by
// the given facets (which must contain the full (d-2)-skeleton, as every K_A
// does). One CycleVector per basis element.
inline std::vector<CycleVector> top_cycles(int64_t n, std::vector<int64_t> residues) {
  detail::squarefree_parts(n, "top_cycles");
  std::sort(residues.begin(), residues.end());
  if (std::adjacent_find(residues.begin(), residues.end()) != residues.end())
    throw std::invalid_argument("top_cycles: repeated residue");
  std::vector<int> cols;
  for (int64_t j : residues) {
    if (j < 0 || j >= n) throw std::invalid_argument("top_cycles: residue out of range");
    cols.push_back(static_cast<int>(j));
  }
  IntMatrix d = top_boundary_by_residue(n).select_columns(cols);
  std::vector<CycleVector> out;
  for (auto& v : kernel_primitive_basis(d)) out.push_back({residues, std::move(v)});
  return out;
}

}  // namespace cyclotopo
