#ifndef LIEB_ALGEBRA_HPP
#define LIEB_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieb/matrix.hpp"
#include "lieb/rational.hpp"

namespace lieb {

// A finite-dimensional algebra over Q presented by structure constants:
// lambda(e_i, e_j) = sum_k gamma^k_ij e_k.  The table stores only the
// nonzero products; all indices are 0-based internally and reported
// 1-based.  No identity is assumed; Lie and Leibniz are checked, not
// presupposed.
struct StructureConstants {
  std::size_t dim = 0;
  std::string name;                      // optional display label
  std::vector<std::string> basis_names;  // size dim, pairwise distinct
  // (i, j) -> the d coefficients of lambda(e_i, e_j); absent means zero,
  // stored vectors are never all-zero
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Rat>> table;

  Rat structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  const std::vector<Rat>* product(std::size_t i, std::size_t j) const;
  void set_product(std::size_t i, std::size_t j, std::vector<Rat> coeffs);

  // lambda extended bilinearly to coordinate vectors
  std::vector<Rat> bracket(const std::vector<Rat>& x,
                           const std::vector<Rat>& y) const;

  bool is_abelian() const { return table.empty(); }
};

StructureConstants make_algebra(std::size_t dim, std::string name = {});

// A concrete failure of one of the axioms: the offending basis tuple
// (0-based) together with the nonzero residual vector.
struct IdentityWitness {
  enum class Kind { antisymmetry, jacobi, leibniz };
  Kind kind = Kind::antisymmetry;
  std::vector<std::size_t> indices;
  std::vector<Rat> residual;
};

struct LieCheck {
  bool ok = false;
  bool antisymmetric = false;
  bool jacobi = false;
  // first failure in lexicographic order: the antisymmetry witness when
  // antisymmetry fails, otherwise the first Jacobi witness
  std::optional<IdentityWitness> witness;
};

struct LeibnizCheck {
  bool ok = false;
  // every failing triple, lexicographically ordered; residual is
  // lambda(x,lambda(y,z)) - lambda(lambda(x,y),z) + lambda(lambda(x,z),y)
  std::vector<IdentityWitness> witnesses;
};

LieCheck is_lie(const StructureConstants& a);
LeibnizCheck is_leibniz(const StructureConstants& a);

// Degeneration invariants.  Series are dimension sequences starting at
// dim and recorded until they hit 0 or repeat (the terminal value is
// included).
struct InvariantVector {
  std::size_t dim = 0;
  std::vector<std::size_t> lower_central;
  std::vector<std::size_t> derived;
  std::size_t center_dim = 0;
  std::size_t derivation_dim = 0;
  bool lie = false;
  bool leibniz = false;

  friend bool operator==(const InvariantVector&,
                         const InvariantVector&) = default;
};

InvariantVector invariants(const StructureConstants& a);

// Coefficient matrix of the derivation equations
// D(lambda(e_i,e_j)) = lambda(D e_i, e_j) + lambda(e_i, D e_j),
// one row per (i, j, k) in lexicographic order, one column per matrix
// entry D_pq at index p*dim + q.  Its nullity is derivation_dim.
RatMatrix derivation_matrix(const StructureConstants& a);

// Structure constants of the isomorphic copy lambda'(x, y) =
// g^-1 lambda(g x, g y); throws SingularError when g is not invertible.
StructureConstants transport(const StructureConstants& a, const RatMatrix& g);

// Table equality: same dim, identical products.  Names are ignored.
bool equal_tables(const StructureConstants& a, const StructureConstants& b);

}  // namespace lieb

#endif
