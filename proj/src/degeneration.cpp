#include "lieb/degeneration.hpp"

#include <algorithm>

namespace lieb {

ContractionResult contract_diagonal(const StructureConstants& a,
                                    const WeightVector& w) {
  if (w.weights.size() != a.dim)
    throw DimensionMismatchError("weight vector length");
  ContractionResult r;
  r.route = ContractionRoute::diagonal;
  r.weights = w.weights;
  r.limit = make_algebra(a.dim);
  r.limit.basis_names = a.basis_names;
  for (const auto& [ij, coeffs] : a.table) {
    auto [i, j] = ij;
    std::vector<Rat> lim(a.dim);
    for (std::size_t k = 0; k < a.dim; ++k) {
      if (coeffs[k].is_zero()) continue;
      long e = w.weights[i] + w.weights[j] - w.weights[k];
      if (e < 0) throw NoLimitError(i, j, k, e);
      r.exponent_table.emplace_back(i, j, k, e);
      if (e == 0) lim[k] = coeffs[k];
    }
    r.limit.set_product(i, j, std::move(lim));
  }
  r.classification = classify_limit(a, r.limit);
  return r;
}

ContractionResult contract_path(const StructureConstants& a,
                                const ContractionPath& p) {
  if (p.g.rows() != a.dim || p.g.cols() != a.dim)
    throw DimensionMismatchError("path matrix shape");
  FuncMatrix ginv;
  try {
    ginv = invert(p.g);
  } catch (const SingularError&) {
    throw SingularPathError();
  }
  ContractionResult r;
  r.route = ContractionRoute::path;
  r.limit = make_algebra(a.dim);
  r.limit.basis_names = a.basis_names;
  std::size_t d = a.dim;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      // u = lambda(g e_i, g e_j) over Q(t)
      std::vector<RatFunc> u(d);
      for (const auto& [pq, coeffs] : a.table) {
        RatFunc c = p.g(pq.first, i) * p.g(pq.second, j);
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < d; ++k)
          if (!coeffs[k].is_zero()) u[k] += c * RatFunc(coeffs[k]);
      }
      std::vector<RatFunc> v = ginv.apply(u);
      std::vector<Rat> lim(d);
      for (std::size_t k = 0; k < d; ++k) {
        if (v[k].is_zero()) continue;
        r.path_constants.emplace_back(i, j, k, v[k]);
        try {
          lim[k] = v[k].eval_at_zero();
        } catch (const PoleAtZeroError& e) {
          throw NoLimitError(i, j, k, -e.order());
        }
      }
      r.limit.set_product(i, j, std::move(lim));
    }
  r.classification = classify_limit(a, r.limit);
  return r;
}

LimitClass classify_limit(const StructureConstants& a,
                          const StructureConstants& limit) {
  if (limit.is_abelian()) return LimitClass::trivial;
  if (invariants(a) == invariants(limit)) return LimitClass::improper_candidate;
  return LimitClass::proper_candidate;
}

const char* screen_violation_name(ScreenViolation v) {
  switch (v) {
    case ScreenViolation::orbit_dimension: return "orbit_dimension";
    case ScreenViolation::lower_central_series: return "lower_central_series";
    case ScreenViolation::derived_series: return "derived_series";
    case ScreenViolation::center_dimension: return "center_dimension";
    case ScreenViolation::lie_class: return "lie_class";
    case ScreenViolation::leibniz_class: return "leibniz_class";
  }
  return "unknown";
}

namespace {

// target entrywise <= source after padding the shorter tail with its last
// value (a stabilized series stays at its terminal dimension)
bool series_dominates(const std::vector<std::size_t>& source,
                      const std::vector<std::size_t>& target) {
  std::size_t n = std::max(source.size(), target.size());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t s = k < source.size() ? source[k] : source.back();
    std::size_t t = k < target.size() ? target[k] : target.back();
    if (t > s) return false;
  }
  return true;
}

}  // namespace

ScreenResult screen(const StructureConstants& lam,
                    const StructureConstants& mu) {
  if (lam.dim != mu.dim)
    throw DimensionMismatchError("screen operands");
  ScreenResult r;
  if (equal_tables(lam, mu)) {
    r.pass = true;
    r.improper = true;
    r.source = invariants(lam);
    r.target = r.source;
    return r;
  }
  r.source = invariants(lam);
  r.target = invariants(mu);
  if (!(r.source.derivation_dim < r.target.derivation_dim))
    r.violations.push_back(ScreenViolation::orbit_dimension);
  if (!series_dominates(r.source.lower_central, r.target.lower_central))
    r.violations.push_back(ScreenViolation::lower_central_series);
  if (!series_dominates(r.source.derived, r.target.derived))
    r.violations.push_back(ScreenViolation::derived_series);
  if (r.target.center_dim < r.source.center_dim)
    r.violations.push_back(ScreenViolation::center_dimension);
  if (r.source.lie && !r.target.lie)
    r.violations.push_back(ScreenViolation::lie_class);
  if (r.source.leibniz && !r.target.leibniz)
    r.violations.push_back(ScreenViolation::leibniz_class);
  r.pass = r.violations.empty();
  return r;
}

}  // namespace lieb
