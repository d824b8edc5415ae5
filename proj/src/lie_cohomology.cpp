#include "lieb/lie_cohomology.hpp"

#include <algorithm>

namespace lieb {

namespace {

constexpr std::size_t kMaxDegree = 3;  // d^3 exists only for the d.d = 0 test

void require_lie(const StructureConstants& a) {
  if (!is_lie(a).ok) throw NotLieError();
}

}  // namespace

CochainSpec CochainSpec::make(std::size_t q, std::size_t d) {
  CochainSpec spec;
  spec.degree = q;
  spec.algebra_dim = d;
  if (q == 0) {
    spec.subsets.push_back({});
  } else if (q <= d) {
    // strictly increasing q-subsets of {0..d-1} in lexicographic order
    std::vector<std::size_t> s(q);
    for (std::size_t i = 0; i < q; ++i) s[i] = i;
    while (true) {
      spec.subsets.push_back(s);
      // rightmost position that can still be incremented
      std::size_t i = q;
      bool found = false;
      while (i-- > 0) {
        if (s[i] < i + d - q) {
          found = true;
          break;
        }
      }
      if (!found) break;
      ++s[i];
      for (std::size_t j = i + 1; j < q; ++j) s[j] = s[j - 1] + 1;
    }
  }
  for (std::size_t r = 0; r < spec.subsets.size(); ++r)
    spec.rank_of_[spec.subsets[r]] = r;
  return spec;
}

std::size_t CochainSpec::subset_rank(const std::vector<std::size_t>& s) const {
  auto it = rank_of_.find(s);
  if (it == rank_of_.end())
    throw InternalError("subset not in cochain enumeration");
  return it->second;
}

CeCoboundary ce_coboundary_matrix(const StructureConstants& a, std::size_t q) {
  if (q > kMaxDegree)
    throw BadParameterError("CE coboundary degree must be at most 3");
  require_lie(a);
  std::size_t d = a.dim;
  CeCoboundary cb;
  cb.domain = CochainSpec::make(q, d);
  cb.codomain = CochainSpec::make(q + 1, d);
  cb.matrix = RatMatrix(cb.codomain.dimension(), cb.domain.dimension());

  std::vector<std::size_t> sub, rest, merged;
  for (std::size_t tr = 0; tr < cb.codomain.subsets.size(); ++tr) {
    const auto& t = cb.codomain.subsets[tr];
    // sum_i (-1)^{i+1} [x_i, f(.. x̂_i ..)]
    for (std::size_t apos = 0; apos < t.size(); ++apos) {
      sub = t;
      sub.erase(sub.begin() + apos);
      std::size_t sr = cb.domain.subset_rank(sub);
      int sign = (apos % 2 == 0) ? 1 : -1;
      std::size_t x = t[apos];
      for (std::size_t k = 0; k < d; ++k) {
        const auto* g = a.product(x, k);
        if (!g) continue;
        for (std::size_t m = 0; m < d; ++m)
          if (!(*g)[m].is_zero())
            cb.matrix(cb.codomain.index(tr, m), cb.domain.index(sr, k)) +=
                (sign > 0 ? (*g)[m] : -(*g)[m]);
      }
    }
    // sum_{i<j} (-1)^{i+j} f([x_i,x_j], .. x̂_i .. x̂_j ..)
    for (std::size_t apos = 0; apos + 1 < t.size(); ++apos)
      for (std::size_t bpos = apos + 1; bpos < t.size(); ++bpos) {
        const auto* g = a.product(t[apos], t[bpos]);
        if (!g) continue;
        int sign0 = ((apos + bpos) % 2 == 0) ? 1 : -1;
        rest = t;
        rest.erase(rest.begin() + bpos);
        rest.erase(rest.begin() + apos);
        for (std::size_t m = 0; m < d; ++m) {
          if ((*g)[m].is_zero()) continue;
          if (std::find(rest.begin(), rest.end(), m) != rest.end())
            continue;  // repeated argument, alternating cochain kills it
          // sort e_m into place, tracking the permutation sign
          std::size_t pos =
              std::lower_bound(rest.begin(), rest.end(), m) - rest.begin();
          merged = rest;
          merged.insert(merged.begin() + pos, m);
          int sign = (pos % 2 == 0) ? sign0 : -sign0;
          std::size_t sr = cb.domain.subset_rank(merged);
          Rat c = sign > 0 ? (*g)[m] : -(*g)[m];
          for (std::size_t k = 0; k < d; ++k)
            cb.matrix(cb.codomain.index(tr, k), cb.domain.index(sr, k)) += c;
        }
      }
  }
  return cb;
}

std::size_t lie_cohomology_dim(const StructureConstants& a, std::size_t q) {
  if (q > 2)
    throw BadParameterError("Lie cohomology degree must be at most 2");
  CeCoboundary dq = ce_coboundary_matrix(a, q);
  std::size_t cocycles = dq.domain.dimension() - rank(dq.matrix);
  std::size_t coboundaries =
      q == 0 ? 0 : rank(ce_coboundary_matrix(a, q - 1).matrix);
  return cocycles - coboundaries;
}

std::vector<std::vector<Rat>> derivations(const StructureConstants& a) {
  return kernel_basis(ce_coboundary_matrix(a, 1).matrix);
}

std::size_t orbit_dimension(const StructureConstants& a) {
  return rank(derivation_matrix(a));
}

}  // namespace lieb
