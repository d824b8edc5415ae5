#ifndef LIEB_LEIBNIZ_COHOMOLOGY_HPP
#define LIEB_LEIBNIZ_COHOMOLOGY_HPP

#include <cstddef>
#include <vector>

#include "lieb/algebra.hpp"
#include "lieb/lie_cohomology.hpp"
#include "lieb/matrix.hpp"

namespace lieb {

// Coefficient module for the Loday complex: the algebra acting on itself
// on both sides (adjoint), or the 1-dimensional module with both actions
// zero (trivial).
enum class Coefficients { adjoint, trivial };

std::size_t coefficient_dim(const StructureConstants& a, Coefficients m);

// Dense-materialization protection: loday_coboundary_matrix refuses to
// build a matrix whose codomain dimension (dim M) * d^{q+1} exceeds the
// guard.  Configurable; the sparse d_squared_report path is exempt.
inline constexpr std::size_t kDefaultSizeGuard = 200000;
std::size_t size_guard();
void set_size_guard(std::size_t bound);

// Basis bookkeeping for E^q = Hom(L^{tensor q}, M): coordinates are pairs
// (w, k) with w a length-q word over {0..d-1} in lexicographic order and
// k a module coordinate.
struct TensorCochainSpec {
  std::size_t degree = 0;
  std::size_t algebra_dim = 0;
  std::size_t module_dim = 0;

  static TensorCochainSpec make(std::size_t q, std::size_t d,
                                std::size_t module_dim);

  std::size_t word_count() const;  // d^q
  std::size_t dimension() const { return module_dim * word_count(); }
  std::size_t word_rank(const std::vector<std::size_t>& w) const;
  std::vector<std::size_t> word_at(std::size_t rank) const;
  std::size_t index(std::size_t word_rank, std::size_t k) const {
    return word_rank * module_dim + k;
  }
};

using LodayCoboundary = CoboundaryMatrixT<TensorCochainSpec>;

// Column-sparse matrix of the Loday differential d^q, q <= 3.  Performs
// no identity or size validation; this is the internal assembly shared by
// the dense builder and the d.d = 0 diagnostic.
SparseRatMatrix loday_coboundary_sparse(const StructureConstants& a,
                                        std::size_t q, Coefficients m);

// Dense matrix of d^q with basis bookkeeping; requires is_leibniz and the
// size guard.
LodayCoboundary loday_coboundary_matrix(const StructureConstants& a,
                                        std::size_t q, Coefficients m);

// dim ker d^q - rank d^{q-1}, q <= 3
std::size_t leibniz_cohomology_dim(const StructureConstants& a, std::size_t q,
                                   Coefficients m);

// Antisymmetric extension of a CE 2-cochain (coordinates over (S={i<j},k))
// to a tensor 2-cochain with adjoint coefficients: word (i,j) carries +,
// word (j,i) carries -.  Sends Z2 into ZL2 and B2 into BL2.
std::vector<Rat> skew_embed(const StructureConstants& a,
                            const std::vector<Rat>& f);

// True iff d^{q+1} . d^q = 0 for all q < qmax (computed sparse, no size
// guard); qmax <= 3.
bool d_squared_report(const StructureConstants& a, Coefficients m,
                      std::size_t qmax);

}  // namespace lieb

#endif
