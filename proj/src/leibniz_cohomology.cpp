#include "lieb/leibniz_cohomology.hpp"

#include <atomic>
#include <limits>

namespace lieb {

namespace {

constexpr std::size_t kMaxDegree = 3;

std::atomic<std::size_t> g_size_guard{kDefaultSizeGuard};

void require_leibniz(const StructureConstants& a) {
  if (!is_leibniz(a).ok) throw NotLeibnizError();
}

}  // namespace

std::size_t coefficient_dim(const StructureConstants& a, Coefficients m) {
  return m == Coefficients::adjoint ? a.dim : 1;
}

std::size_t size_guard() { return g_size_guard.load(); }

void set_size_guard(std::size_t bound) {
  g_size_guard.store(bound == 0 ? kDefaultSizeGuard : bound);
}

TensorCochainSpec TensorCochainSpec::make(std::size_t q, std::size_t d,
                                          std::size_t module_dim) {
  return TensorCochainSpec{q, d, module_dim};
}

std::size_t TensorCochainSpec::word_count() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < degree; ++i) n *= algebra_dim;
  return n;
}

std::size_t TensorCochainSpec::word_rank(
    const std::vector<std::size_t>& w) const {
  if (w.size() != degree) throw InternalError("word length mismatch");
  std::size_t r = 0;
  for (std::size_t x : w) r = r * algebra_dim + x;
  return r;
}

std::vector<std::size_t> TensorCochainSpec::word_at(std::size_t rank) const {
  std::vector<std::size_t> w(degree);
  for (std::size_t p = degree; p-- > 0;) {
    w[p] = rank % algebra_dim;
    rank /= algebra_dim;
  }
  return w;
}

SparseRatMatrix loday_coboundary_sparse(const StructureConstants& a,
                                        std::size_t q, Coefficients m) {
  if (q > kMaxDegree)
    throw BadParameterError("Loday coboundary degree must be at most 3");
  std::size_t d = a.dim;
  bool adjoint = m == Coefficients::adjoint;
  std::size_t dm = coefficient_dim(a, m);
  TensorCochainSpec dom = TensorCochainSpec::make(q, d, dm);
  TensorCochainSpec cod = TensorCochainSpec::make(q + 1, d, dm);
  SparseRatMatrix out(cod.dimension(), dom.dimension());

  std::vector<std::size_t> u(q + 1, 0), sub(q);
  for (std::size_t ur = 0; ur < cod.word_count(); ++ur) {
    if (adjoint) {
      // [x_1, f(x_2 .. x_{q+1})]
      sub.assign(u.begin() + 1, u.end());
      std::size_t wr = dom.word_rank(sub);
      for (std::size_t k = 0; k < d; ++k) {
        const auto* g = a.product(u[0], k);
        if (!g) continue;
        for (std::size_t mm = 0; mm < d; ++mm)
          if (!(*g)[mm].is_zero())
            out.add(cod.index(ur, mm), dom.index(wr, k), (*g)[mm]);
      }
      // sum_{i=2}^{q+1} (-1)^i [f(.. x̂_i ..), x_i]
      for (std::size_t apos = 1; apos <= q; ++apos) {
        sub = u;
        sub.erase(sub.begin() + apos);
        std::size_t wr = dom.word_rank(sub);
        bool plus = (apos % 2 == 1);  // 1-based i = apos + 1
        for (std::size_t k = 0; k < d; ++k) {
          const auto* g = a.product(k, u[apos]);
          if (!g) continue;
          for (std::size_t mm = 0; mm < d; ++mm)
            if (!(*g)[mm].is_zero())
              out.add(cod.index(ur, mm), dom.index(wr, k),
                      plus ? (*g)[mm] : -(*g)[mm]);
        }
      }
    }
    // sum_{i<j} (-1)^{j+1} f(x_1 .. x_{i-1}, [x_i,x_j], x_{i+1} .. x̂_j ..)
    for (std::size_t apos = 0; apos < q; ++apos)
      for (std::size_t bpos = apos + 1; bpos <= q; ++bpos) {
        const auto* g = a.product(u[apos], u[bpos]);
        if (!g) continue;
        bool plus = (bpos % 2 == 0);  // 1-based j = bpos + 1
        for (std::size_t mm = 0; mm < d; ++mm) {
          if ((*g)[mm].is_zero()) continue;
          sub = u;
          sub[apos] = mm;
          sub.erase(sub.begin() + bpos);
          std::size_t wr = dom.word_rank(sub);
          Rat c = plus ? (*g)[mm] : -(*g)[mm];
          for (std::size_t k = 0; k < dm; ++k)
            out.add(cod.index(ur, k), dom.index(wr, k), c);
        }
      }
    // next word, lexicographic
    for (std::size_t p = q + 1; p-- > 0;) {
      if (++u[p] < d) break;
      u[p] = 0;
    }
  }
  out.finalize();
  return out;
}

namespace {

void check_guard(const TensorCochainSpec& cod, std::size_t domain_dim) {
  std::size_t guard = size_guard();
  std::size_t v = cod.module_dim;
  for (std::size_t i = 0; i < cod.degree; ++i) {
    if (cod.algebra_dim != 0 &&
        v > std::numeric_limits<std::size_t>::max() / cod.algebra_dim)
      throw DimensionTooLargeError(v, domain_dim, guard);
    v *= cod.algebra_dim;
    if (v > guard) throw DimensionTooLargeError(v, domain_dim, guard);
  }
}

}  // namespace

LodayCoboundary loday_coboundary_matrix(const StructureConstants& a,
                                        std::size_t q, Coefficients m) {
  if (q > kMaxDegree)
    throw BadParameterError("Loday coboundary degree must be at most 3");
  require_leibniz(a);
  std::size_t dm = coefficient_dim(a, m);
  LodayCoboundary cb;
  cb.domain = TensorCochainSpec::make(q, a.dim, dm);
  cb.codomain = TensorCochainSpec::make(q + 1, a.dim, dm);
  check_guard(cb.codomain, cb.domain.dimension());
  cb.matrix = loday_coboundary_sparse(a, q, m).dense();
  return cb;
}

std::size_t leibniz_cohomology_dim(const StructureConstants& a, std::size_t q,
                                   Coefficients m) {
  if (q > kMaxDegree)
    throw BadParameterError("Leibniz cohomology degree must be at most 3");
  LodayCoboundary dq = loday_coboundary_matrix(a, q, m);
  std::size_t cocycles = dq.domain.dimension() - rank(dq.matrix);
  std::size_t coboundaries =
      q == 0 ? 0 : rank(loday_coboundary_matrix(a, q - 1, m).matrix);
  return cocycles - coboundaries;
}

std::vector<Rat> skew_embed(const StructureConstants& a,
                            const std::vector<Rat>& f) {
  if (!is_lie(a).ok) throw NotLieError();
  std::size_t d = a.dim;
  CochainSpec lie_spec = CochainSpec::make(2, d);
  if (f.size() != lie_spec.dimension())
    throw DimensionMismatchError("skew_embed cochain coordinates");
  TensorCochainSpec spec = TensorCochainSpec::make(2, d, d);
  std::vector<Rat> out(spec.dimension());
  for (std::size_t sr = 0; sr < lie_spec.subsets.size(); ++sr) {
    std::size_t i = lie_spec.subsets[sr][0], j = lie_spec.subsets[sr][1];
    for (std::size_t k = 0; k < d; ++k) {
      const Rat& c = f[lie_spec.index(sr, k)];
      if (c.is_zero()) continue;
      out[spec.index(i * d + j, k)] += c;
      out[spec.index(j * d + i, k)] -= c;
    }
  }
  return out;
}

bool d_squared_report(const StructureConstants& a, Coefficients m,
                      std::size_t qmax) {
  if (qmax > kMaxDegree)
    throw BadParameterError("d.d check degree must be at most 3");
  require_leibniz(a);
  for (std::size_t q = 0; q < qmax; ++q) {
    SparseRatMatrix lo = loday_coboundary_sparse(a, q, m);
    SparseRatMatrix hi = loday_coboundary_sparse(a, q + 1, m);
    if (!(hi * lo).is_zero()) return false;
  }
  return true;
}

}  // namespace lieb
