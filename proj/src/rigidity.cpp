#include "lieb/rigidity.hpp"

#include "lieb/leibniz_cohomology.hpp"
#include "lieb/lie_cohomology.hpp"

namespace lieb {

RigidityReport analyze(const StructureConstants& a) {
  if (!is_leibniz(a).ok) throw NotLeibnizError();
  RigidityReport r;
  r.is_leibniz = true;
  r.is_lie = is_lie(a).ok;
  for (std::size_t q = 0; q <= 2; ++q)
    r.hl_dims[q] = leibniz_cohomology_dim(a, q, Coefficients::adjoint);
  if (r.is_lie) {
    std::array<std::size_t, 3> h{};
    for (std::size_t q = 0; q <= 2; ++q) h[q] = lie_cohomology_dim(a, q);
    r.h_dims = h;
    r.absolutely_rigid = h[2] == 0;
    r.lie_rigid_sufficient = r.absolutely_rigid;
    r.leibniz_rigidity_blocked = h[2] != r.hl_dims[2];
  }
  r.leibniz_rigid_sufficient = r.hl_dims[2] == 0;
  r.orbit_dim = component_dim(a);
  r.component_dim_lower_bound = r.orbit_dim;
  r.component_dim_exact = r.lie_rigid_sufficient || r.leibniz_rigid_sufficient;
  return r;
}

std::size_t component_dim(const StructureConstants& a) {
  return orbit_dimension(a);
}

}  // namespace lieb
