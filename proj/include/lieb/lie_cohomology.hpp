#ifndef LIEB_LIE_COHOMOLOGY_HPP
#define LIEB_LIE_COHOMOLOGY_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "lieb/algebra.hpp"
#include "lieb/matrix.hpp"

namespace lieb {

// Basis bookkeeping for C^q = Hom(Lambda^q L, L): coordinates are pairs
// (S, k) with S a strictly increasing q-subset of {0..d-1} and k a basis
// index, ordered lexicographically by S then k.
struct CochainSpec {
  std::size_t degree = 0;
  std::size_t algebra_dim = 0;
  std::vector<std::vector<std::size_t>> subsets;  // lex-ordered

  static CochainSpec make(std::size_t q, std::size_t d);

  std::size_t dimension() const { return subsets.size() * algebra_dim; }
  std::size_t index(std::size_t subset_rank, std::size_t k) const {
    return subset_rank * algebra_dim + k;
  }
  std::size_t subset_rank(const std::vector<std::size_t>& s) const;

private:
  std::map<std::vector<std::size_t>, std::size_t> rank_of_;
};

template <typename SpecT>
struct CoboundaryMatrixT {
  SpecT domain;
  SpecT codomain;
  RatMatrix matrix;
};

using CeCoboundary = CoboundaryMatrixT<CochainSpec>;

// Matrix of the Chevalley-Eilenberg differential d^q with adjoint
// coefficients, q <= 3.  Signs follow the convention whose degree-1 and
// degree-2 specializations are
//   (df)(x,y)   = [x,f(y)] - [y,f(x)] - f([x,y])
//   (df)(x,y,z) = [x,f(y,z)] - [y,f(x,z)] + [z,f(x,y)]
//                 - f([x,y],z) + f([x,z],y) - f([y,z],x)
// and which satisfies d(q+1) . d(q) = 0 identically.
CeCoboundary ce_coboundary_matrix(const StructureConstants& a, std::size_t q);

// dim ker d^q - rank d^{q-1}, q <= 2 (rank d^{-1} = 0)
std::size_t lie_cohomology_dim(const StructureConstants& a, std::size_t q);

// Kernel of d^1 in normal form: the derivation algebra as coordinate
// vectors over the (S={j}, k) enumeration, i.e. column-major D_kj.
std::vector<std::vector<Rat>> derivations(const StructureConstants& a);

// dim^2 - der_dim; defined for Leibniz algebras too (the degree-1 kernels
// of the two theories coincide).
std::size_t orbit_dimension(const StructureConstants& a);

}  // namespace lieb

#endif
