#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "lieb/algebra.hpp"
#include "lieb/catalog.hpp"
#include "lieb/errors.hpp"
#include "lieb/lie_cohomology.hpp"

using namespace lieb;

namespace {

std::mt19937 rng(460115);

std::vector<Rat> random_coords(std::size_t n) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rat> v(n);
  for (auto& x : v) x = Rat(num(rng), den(rng));
  return v;
}

std::vector<Rat> unit(std::size_t d, std::size_t i) {
  std::vector<Rat> v(d);
  v[i] = Rat(1);
  return v;
}

// degree-1 cochain evaluated on an arbitrary vector
std::vector<Rat> eval1(const CochainSpec& spec, const std::vector<Rat>& coords,
                       const std::vector<Rat>& u) {
  std::size_t d = spec.algebra_dim;
  std::vector<Rat> out(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (u[j].is_zero()) continue;
    std::size_t r = spec.subset_rank({j});
    for (std::size_t k = 0; k < d; ++k)
      out[k] += u[j] * coords[spec.index(r, k)];
  }
  return out;
}

// degree-2 cochain extended alternating bilinearly
std::vector<Rat> eval2(const CochainSpec& spec, const std::vector<Rat>& coords,
                       const std::vector<Rat>& u, const std::vector<Rat>& v) {
  std::size_t d = spec.algebra_dim;
  std::vector<Rat> out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Rat c = u[i] * v[j] - u[j] * v[i];
      if (c.is_zero()) continue;
      std::size_t r = spec.subset_rank({i, j});
      for (std::size_t k = 0; k < d; ++k)
        out[k] += c * coords[spec.index(r, k)];
    }
  return out;
}

void axpy(std::vector<Rat>& acc, const Rat& c, const std::vector<Rat>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
}

std::vector<StructureConstants> lie_samples() {
  std::vector<StructureConstants> out;
  for (const auto& a : catalog::default_instances())
    if (is_lie(a).ok) out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("cochain basis enumeration") {
  CochainSpec c0 = CochainSpec::make(0, 3);
  REQUIRE(c0.subsets.size() == 1);
  CHECK(c0.subsets[0].empty());
  CHECK(c0.dimension() == 3);

  CochainSpec c2 = CochainSpec::make(2, 4);
  std::vector<std::vector<std::size_t>> want = {{0, 1}, {0, 2}, {0, 3},
                                                {1, 2}, {1, 3}, {2, 3}};
  CHECK(c2.subsets == want);
  CHECK(c2.dimension() == 24);

  CochainSpec full = CochainSpec::make(5, 5);
  REQUIRE(full.subsets.size() == 1);
  CHECK(full.subsets[0] == std::vector<std::size_t>{0, 1, 2, 3, 4});

  CHECK(CochainSpec::make(4, 3).dimension() == 0);

  CochainSpec c3 = CochainSpec::make(3, 6);
  CHECK(c3.subsets.size() == 20);
  for (std::size_t r = 0; r < c3.subsets.size(); ++r)
    CHECK(c3.subset_rank(c3.subsets[r]) == r);
}

TEST_CASE("coboundary rejects bad input") {
  CHECK_THROWS_AS(ce_coboundary_matrix(catalog::leibniz_nilpotent2(), 1),
                  NotLieError);
  CHECK_THROWS_AS(ce_coboundary_matrix(catalog::sl2(), 4), BadParameterError);
  CHECK_THROWS_AS(lie_cohomology_dim(catalog::sl2(), 3), BadParameterError);
  CHECK_THROWS_AS(lie_cohomology_dim(catalog::leibniz_nilpotent2(), 0),
                  NotLieError);
}

TEST_CASE("degree 0: (dm)(x) = [x, m]") {
  StructureConstants a = catalog::sl2();
  CeCoboundary d0 = ce_coboundary_matrix(a, 0);
  CHECK(d0.domain.degree == 0);
  CHECK(d0.codomain.degree == 1);
  REQUIRE(d0.matrix.rows() == 9);
  REQUIRE(d0.matrix.cols() == 3);

  // m = h: [h,h] = 0, [e,h] = -2e, [f,h] = 2f
  auto image = d0.matrix.apply(unit(3, 0));
  const CochainSpec& cod = d0.codomain;
  auto at = [&](std::size_t j, std::size_t k) {
    return image[cod.index(cod.subset_rank({j}), k)];
  };
  for (std::size_t k = 0; k < 3; ++k) CHECK(at(0, k) == Rat(0));
  CHECK(at(1, 1) == Rat(-2));
  CHECK(at(1, 0) == Rat(0));
  CHECK(at(2, 2) == Rat(2));
}

TEST_CASE("degree 1 matrix matches the displayed formula") {
  std::vector<StructureConstants> cases = {catalog::sl2(), catalog::gl(2),
                                           catalog::heisenberg(2),
                                           catalog::semidirect_sl2(1)};
  for (const auto& a : cases) {
    CAPTURE(a.name);
    std::size_t d = a.dim;
    CeCoboundary d1 = ce_coboundary_matrix(a, 1);
    auto coords = random_coords(d1.domain.dimension());
    auto image = d1.matrix.apply(coords);
    for (std::size_t t = 0; t < d1.codomain.subsets.size(); ++t) {
      std::size_t i = d1.codomain.subsets[t][0];
      std::size_t j = d1.codomain.subsets[t][1];
      auto ei = unit(d, i);
      auto ej = unit(d, j);
      // [x,f(y)] - [y,f(x)] - f([x,y])
      std::vector<Rat> want = a.bracket(ei, eval1(d1.domain, coords, ej));
      axpy(want, Rat(-1), a.bracket(ej, eval1(d1.domain, coords, ei)));
      axpy(want, Rat(-1), eval1(d1.domain, coords, a.bracket(ei, ej)));
      for (std::size_t k = 0; k < d; ++k)
        CHECK(image[d1.codomain.index(t, k)] == want[k]);
    }
  }
}

TEST_CASE("degree 2 matrix matches the displayed formula") {
  std::vector<StructureConstants> cases = {catalog::sl2(), catalog::gl(2),
                                           catalog::heisenberg(2),
                                           catalog::semidirect_sl2(1)};
  for (const auto& a : cases) {
    CAPTURE(a.name);
    std::size_t d = a.dim;
    CeCoboundary d2 = ce_coboundary_matrix(a, 2);
    auto coords = random_coords(d2.domain.dimension());
    auto image = d2.matrix.apply(coords);
    const CochainSpec& dom = d2.domain;
    for (std::size_t t = 0; t < d2.codomain.subsets.size(); ++t) {
      std::size_t i = d2.codomain.subsets[t][0];
      std::size_t j = d2.codomain.subsets[t][1];
      std::size_t k = d2.codomain.subsets[t][2];
      auto ei = unit(d, i);
      auto ej = unit(d, j);
      auto ek = unit(d, k);
      // [x,f(y,z)] - [y,f(x,z)] + [z,f(x,y)]
      //   - f([x,y],z) + f([x,z],y) - f([y,z],x)
      std::vector<Rat> want = a.bracket(ei, eval2(dom, coords, ej, ek));
      axpy(want, Rat(-1), a.bracket(ej, eval2(dom, coords, ei, ek)));
      axpy(want, Rat(1), a.bracket(ek, eval2(dom, coords, ei, ej)));
      axpy(want, Rat(-1), eval2(dom, coords, a.bracket(ei, ej), ek));
      axpy(want, Rat(1), eval2(dom, coords, a.bracket(ei, ek), ej));
      axpy(want, Rat(-1), eval2(dom, coords, a.bracket(ej, ek), ei));
      for (std::size_t m = 0; m < d; ++m)
        CHECK(image[d2.codomain.index(t, m)] == want[m]);
    }
  }
}

TEST_CASE("d . d = 0") {
  for (const auto& a : lie_samples()) {
    CAPTURE(a.name);
    std::size_t qmax = a.dim <= 6 ? 2 : 1;
    for (std::size_t q = 0; q <= qmax; ++q) {
      RatMatrix comp = ce_coboundary_matrix(a, q + 1).matrix *
                       ce_coboundary_matrix(a, q).matrix;
      CHECK(comp.is_zero());
    }
  }
}

TEST_CASE("frozen coboundary ranks") {
  CHECK(rank(ce_coboundary_matrix(catalog::sl2(), 1).matrix) == 6);
  CHECK(rank(ce_coboundary_matrix(catalog::heisenberg(1), 0).matrix) == 2);
  CeCoboundary d2 = ce_coboundary_matrix(catalog::semidirect_sl2(1), 2);
  CHECK(d2.matrix.rows() == 120);
  CHECK(d2.matrix.cols() == 90);
  CHECK(rank(d2.matrix) == 60);
}

TEST_CASE("the degree 1 kernel of sl2 in normal form") {
  auto ker = kernel_basis(ce_coboundary_matrix(catalog::sl2(), 1).matrix);
  std::vector<std::vector<Rat>> want = {
      {Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(-1, 2), Rat(0),
       Rat(0)},
      {Rat(0), Rat(0), Rat(1), Rat(-1, 2), Rat(0), Rat(0), Rat(0), Rat(0),
       Rat(0)},
      {Rat(0), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0),
       Rat(-1)}};
  CHECK(ker == want);
  CHECK(derivations(catalog::sl2()) == want);
}

TEST_CASE("cohomology dimensions") {
  auto dims = [](const StructureConstants& a) {
    return std::vector<std::size_t>{lie_cohomology_dim(a, 0),
                                    lie_cohomology_dim(a, 1),
                                    lie_cohomology_dim(a, 2)};
  };
  CHECK(dims(catalog::abelian(2)) == std::vector<std::size_t>{2, 4, 2});
  CHECK(dims(catalog::nonabelian2()) == std::vector<std::size_t>{0, 0, 0});
  CHECK(dims(catalog::heisenberg(1)) == std::vector<std::size_t>{1, 4, 5});
  CHECK(dims(catalog::heisenberg(2)) == std::vector<std::size_t>{1, 11, 20});
  CHECK(dims(catalog::sl2()) == std::vector<std::size_t>{0, 0, 0});
  CHECK(dims(catalog::gl(2)) == std::vector<std::size_t>{1, 1, 0});
  CHECK(dims(catalog::semidirect_sl2(1)) == std::vector<std::size_t>{0, 1, 1});
}

TEST_CASE("degree 0 and 1 dimensions against the invariants") {
  for (const auto& a : lie_samples()) {
    CAPTURE(a.name);
    InvariantVector v = invariants(a);
    CHECK(lie_cohomology_dim(a, 0) == v.center_dim);
    // H^1 = derivations modulo inner; inner derivations ~ L / Z(L)
    CHECK(lie_cohomology_dim(a, 1) ==
          v.derivation_dim - (v.dim - v.center_dim));
  }
}

TEST_CASE("derivations are derivations") {
  for (const auto& a : {catalog::sl2(), catalog::gl(2), catalog::heisenberg(1)}) {
    CAPTURE(a.name);
    std::size_t d = a.dim;
    auto ders = derivations(a);
    CHECK(ders.size() == invariants(a).derivation_dim);
    for (const auto& v : ders) {
      // coordinate (S={j}, k) holds f(e_j)_k
      RatMatrix m(d, d);
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) m(k, j) = v[j * d + k];
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          auto lhs = m.apply(a.bracket(unit(d, i), unit(d, j)));
          std::vector<Rat> rhs = a.bracket(m.apply(unit(d, i)), unit(d, j));
          axpy(rhs, Rat(1), a.bracket(unit(d, i), m.apply(unit(d, j))));
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("orbit dimension") {
  CHECK(orbit_dimension(catalog::sl2()) == 6);
  CHECK(orbit_dimension(catalog::heisenberg(1)) == 3);
  CHECK(orbit_dimension(catalog::leibniz_nilpotent2()) == 2);
  for (long n = 1; n <= 3; ++n)
    CHECK(orbit_dimension(catalog::abelian(n)) == 0);
  for (const auto& a : catalog::default_instances()) {
    CAPTURE(a.name);
    CHECK(orbit_dimension(a) ==
          a.dim * a.dim - invariants(a).derivation_dim);
  }
}
