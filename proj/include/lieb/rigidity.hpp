#ifndef LIEB_RIGIDITY_HPP
#define LIEB_RIGIDITY_HPP

#include <array>
#include <cstddef>
#include <optional>

#include "lieb/algebra.hpp"

namespace lieb {

// One-sided rigidity verdicts.  H^2 = 0 is sufficient for Lie rigidity
// (never claimed necessary: the converse fails); HL^2 = 0 is sufficient
// for Leibniz rigidity; for a Lie algebra dim H^2 != dim HL^2 blocks
// Leibniz rigidity (necessary condition).  No unconditional rigid /
// not-rigid verdict is ever produced.
struct RigidityReport {
  bool is_lie = false;
  bool is_leibniz = false;
  std::optional<std::array<std::size_t, 3>> h_dims;  // H^0..H^2, Lie only
  std::array<std::size_t, 3> hl_dims{};              // HL^0..HL^2, adjoint
  bool absolutely_rigid = false;        // Lie and H^2 = 0
  bool lie_rigid_sufficient = false;    // same condition, verdict wording
  bool leibniz_rigid_sufficient = false;  // HL^2 = 0
  bool leibniz_rigidity_blocked = false;  // Lie and dim H^2 != dim HL^2
  std::size_t orbit_dim = 0;                 // dim^2 - der_dim
  std::size_t component_dim_lower_bound = 0;  // same quantity, see below
  // the lower bound is exact when a sufficient flag holds
  bool component_dim_exact = false;
};

RigidityReport analyze(const StructureConstants& a);

// dim^2 - der_dim: the dimension of the orbit of a, hence a lower bound
// for the dimension of any irreducible component containing its closure;
// exact for the component when a rigidity-sufficient flag is set.
std::size_t component_dim(const StructureConstants& a);

}  // namespace lieb

#endif
