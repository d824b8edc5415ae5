#ifndef LIEB_DEGENERATION_HPP
#define LIEB_DEGENERATION_HPP

#include <cstddef>
#include <tuple>
#include <vector>

#include "lieb/algebra.hpp"
#include "lieb/matrix.hpp"
#include "lieb/rational_function.hpp"

namespace lieb {

// diag(t^{a_1}, .., t^{a_d}); negative exponents allowed
struct WeightVector {
  std::vector<long> weights;
};

// invertible g in GL_d(Q(t))
struct ContractionPath {
  FuncMatrix g;
};

enum class LimitClass { trivial, improper_candidate, proper_candidate };

enum class ContractionRoute { diagonal, path };

struct ContractionResult {
  ContractionRoute route = ContractionRoute::diagonal;
  std::vector<long> weights;  // diagonal route only
  StructureConstants limit;
  LimitClass classification = LimitClass::trivial;
  // diagonal route: exponent of t on each nonzero gamma^k_ij, lex order
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long>>
      exponent_table;
  // general route: each nonzero entry of lambda_t, lex order
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, RatFunc>>
      path_constants;
};

// lambda_t(x, y) = g_t^{-1} lambda(g_t x, g_t y) with g_t diagonal:
// gamma^k_ij picks up t^{a_i + a_j - a_k}.  Limit is the entrywise value
// at t = 0; a negative exponent on a nonzero constant raises NoLimit with
// the lexicographically first offending (i, j, k).
ContractionResult contract_diagonal(const StructureConstants& a,
                                    const WeightVector& w);

// Same contraction along an arbitrary invertible path; structure
// constants are tracked symbolically in Q(t).
ContractionResult contract_path(const StructureConstants& a,
                                const ContractionPath& p);

// trivial if the limit is abelian; improper_candidate if the invariant
// vectors agree (isomorphism is not decided); proper_candidate otherwise.
LimitClass classify_limit(const StructureConstants& a,
                          const StructureConstants& limit);

enum class ScreenViolation {
  orbit_dimension,       // der_dim must strictly increase
  lower_central_series,  // entrywise <= after padding
  derived_series,
  center_dimension,  // must not shrink
  lie_class,         // Lie sources degenerate to Lie limits
  leibniz_class,
};

const char* screen_violation_name(ScreenViolation v);

struct ScreenResult {
  bool pass = false;
  bool improper = false;  // equal tables; checks short-circuited
  std::vector<ScreenViolation> violations;
  InvariantVector source;
  InvariantVector target;
};

// Necessary-condition filter for "lam degenerates to mu".  Equal tables
// pass with the improper note; otherwise all four invariant checks must
// hold.
ScreenResult screen(const StructureConstants& lam,
                    const StructureConstants& mu);

}  // namespace lieb

#endif
