#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "lieb/algebra.hpp"
#include "lieb/catalog.hpp"
#include "lieb/errors.hpp"
#include "lieb/matrix.hpp"

using namespace lieb;

namespace {

std::mt19937 rng(771220);

Rat random_rat(int span = 5) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  return Rat(num(rng), den(rng));
}

std::vector<Rat> random_vec(std::size_t d) {
  std::vector<Rat> v(d);
  for (auto& x : v) x = random_rat();
  return v;
}

RatMatrix random_invertible(std::size_t n) {
  RatMatrix lower = RatMatrix::identity(n);
  RatMatrix upper = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = random_rat(3);
      upper(j, i) = random_rat(3);
    }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  RatMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = Rat(1);
  return lower * p * upper;
}

std::vector<Rat> lin(const Rat& a, const std::vector<Rat>& x, const Rat& b,
                     const std::vector<Rat>& y) {
  std::vector<Rat> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + b * y[i];
  return r;
}

// a two-sided nilpotent non-Lie table that violates the Leibniz identity:
// lambda(e1,e1) = e2, lambda(e2,e1) = e1
StructureConstants broken_leibniz() {
  StructureConstants a = make_algebra(2);
  a.set_product(0, 0, {Rat(0), Rat(1)});
  a.set_product(1, 0, {Rat(1), Rat(0)});
  return a;
}

// antisymmetric but not Jacobi: [e1,e2] = e1, [e1,e3] = e3
StructureConstants broken_jacobi() {
  StructureConstants a = make_algebra(3);
  a.set_product(0, 1, {Rat(1), Rat(0), Rat(0)});
  a.set_product(1, 0, {Rat(-1), Rat(0), Rat(0)});
  a.set_product(0, 2, {Rat(0), Rat(0), Rat(1)});
  a.set_product(2, 0, {Rat(0), Rat(0), Rat(-1)});
  return a;
}

InvariantVector iv(std::size_t dim, std::vector<std::size_t> lcs,
                   std::vector<std::size_t> der, std::size_t center,
                   std::size_t der_dim, bool lie, bool leibniz) {
  InvariantVector v;
  v.dim = dim;
  v.lower_central = std::move(lcs);
  v.derived = std::move(der);
  v.center_dim = center;
  v.derivation_dim = der_dim;
  v.lie = lie;
  v.leibniz = leibniz;
  return v;
}

}  // namespace

TEST_CASE("table bookkeeping") {
  StructureConstants a = make_algebra(3, "demo");
  CHECK(a.dim == 3);
  CHECK(a.name == "demo");
  CHECK(a.basis_names == std::vector<std::string>{"e1", "e2", "e3"});
  CHECK(a.is_abelian());

  a.set_product(0, 1, {Rat(0), Rat(0), Rat(1)});
  CHECK(!a.is_abelian());
  CHECK(a.structure_constant(0, 1, 2) == Rat(1));
  CHECK(a.structure_constant(0, 1, 0) == Rat(0));
  CHECK(a.structure_constant(1, 0, 2) == Rat(0));
  REQUIRE(a.product(0, 1) != nullptr);
  CHECK(a.product(1, 0) == nullptr);

  // writing an all-zero vector removes the entry
  a.set_product(0, 1, std::vector<Rat>(3));
  CHECK(a.is_abelian());
  CHECK(a.product(0, 1) == nullptr);

  CHECK_THROWS_AS(a.set_product(0, 1, {Rat(1)}), DimensionMismatchError);
  CHECK_THROWS_AS(a.bracket(std::vector<Rat>(2), std::vector<Rat>(3)),
                  DimensionMismatchError);
}

TEST_CASE("bracket is bilinear") {
  StructureConstants a = catalog::semidirect_sl2(1);
  for (int trial = 0; trial < 5; ++trial) {
    auto x = random_vec(a.dim);
    auto y = random_vec(a.dim);
    auto z = random_vec(a.dim);
    Rat c = random_rat();
    CHECK(a.bracket(lin(Rat(1), x, c, z), y) ==
          lin(Rat(1), a.bracket(x, y), c, a.bracket(z, y)));
    CHECK(a.bracket(x, lin(Rat(1), y, c, z)) ==
          lin(Rat(1), a.bracket(x, y), c, a.bracket(x, z)));
  }
}

TEST_CASE("is_lie accepts the Lie families") {
  for (const auto& a : catalog::default_instances()) {
    auto check = is_lie(a);
    CAPTURE(a.name);
    if (a.name == "leibniz_nilpotent2") {
      CHECK(!check.ok);
    } else {
      CHECK(check.ok);
      CHECK(check.antisymmetric);
      CHECK(check.jacobi);
      CHECK(!check.witness.has_value());
    }
  }
}

TEST_CASE("is_lie reports an antisymmetry witness") {
  auto check = is_lie(catalog::leibniz_nilpotent2());
  CHECK(!check.ok);
  CHECK(!check.antisymmetric);
  CHECK(check.jacobi);
  REQUIRE(check.witness.has_value());
  CHECK(check.witness->kind == IdentityWitness::Kind::antisymmetry);
  CHECK(check.witness->indices == std::vector<std::size_t>{0, 0});
  CHECK(check.witness->residual == std::vector<Rat>{Rat(0), Rat(2)});
}

TEST_CASE("is_lie reports a Jacobi witness") {
  auto check = is_lie(broken_jacobi());
  CHECK(!check.ok);
  CHECK(check.antisymmetric);
  CHECK(!check.jacobi);
  REQUIRE(check.witness.has_value());
  CHECK(check.witness->kind == IdentityWitness::Kind::jacobi);
  CHECK(check.witness->indices == std::vector<std::size_t>{0, 1, 2});
  CHECK(check.witness->residual == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
}

TEST_CASE("is_leibniz accepts every catalog instance") {
  for (const auto& a : catalog::default_instances()) {
    CAPTURE(a.name);
    auto check = is_leibniz(a);
    CHECK(check.ok);
    CHECK(check.witnesses.empty());
  }
}

TEST_CASE("is_leibniz lists every failing triple") {
  auto check = is_leibniz(broken_leibniz());
  CHECK(!check.ok);
  REQUIRE(check.witnesses.size() == 2);
  CHECK(check.witnesses[0].kind == IdentityWitness::Kind::leibniz);
  CHECK(check.witnesses[0].indices == std::vector<std::size_t>{0, 1, 0});
  CHECK(check.witnesses[0].residual == std::vector<Rat>{Rat(0), Rat(1)});
  CHECK(check.witnesses[1].indices == std::vector<std::size_t>{1, 1, 0});
  CHECK(check.witnesses[1].residual == std::vector<Rat>{Rat(1), Rat(0)});

  // a Jacobi failure on an antisymmetric table is a Leibniz failure too
  CHECK(!is_leibniz(broken_jacobi()).ok);
}

TEST_CASE("invariants of the catalog instances") {
  auto expect = [](const StructureConstants& a, const InvariantVector& want) {
    CAPTURE(a.name);
    CHECK(invariants(a) == want);
  };
  expect(catalog::abelian(1), iv(1, {1, 0}, {1, 0}, 1, 1, true, true));
  expect(catalog::abelian(2), iv(2, {2, 0}, {2, 0}, 2, 4, true, true));
  expect(catalog::abelian(3), iv(3, {3, 0}, {3, 0}, 3, 9, true, true));
  expect(catalog::nonabelian2(), iv(2, {2, 1, 1}, {2, 1, 0}, 0, 2, true, true));
  expect(catalog::heisenberg(1), iv(3, {3, 1, 0}, {3, 1, 0}, 1, 6, true, true));
  expect(catalog::heisenberg(2),
         iv(5, {5, 1, 0}, {5, 1, 0}, 1, 15, true, true));
  expect(catalog::sl2(), iv(3, {3, 3}, {3, 3}, 0, 3, true, true));
  expect(catalog::gl(2), iv(4, {4, 3, 3}, {4, 3, 3}, 1, 4, true, true));
  expect(catalog::leibniz_nilpotent2(),
         iv(2, {2, 1, 0}, {2, 1, 0}, 1, 2, false, true));
  expect(catalog::semidirect_sl2(1), iv(6, {6, 6}, {6, 6}, 0, 7, true, true));
  expect(catalog::semidirect_sl2(2), iv(8, {8, 8}, {8, 8}, 0, 9, true, true));
}

TEST_CASE("derivation matrix kernel consists of derivations") {
  std::vector<StructureConstants> cases = {catalog::sl2(),
                                           catalog::heisenberg(1),
                                           catalog::leibniz_nilpotent2()};
  for (const auto& a : cases) {
    CAPTURE(a.name);
    std::size_t d = a.dim;
    auto ker = kernel_basis(derivation_matrix(a));
    CHECK(ker.size() == invariants(a).derivation_dim);
    for (const auto& v : ker) {
      RatMatrix m(d, d);
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) m(p, q) = v[p * d + q];
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          std::vector<Rat> ei(d), ej(d);
          ei[i] = Rat(1);
          ej[j] = Rat(1);
          auto lhs = m.apply(a.bracket(ei, ej));
          auto rhs = lin(Rat(1), a.bracket(m.apply(ei), ej), Rat(1),
                         a.bracket(ei, m.apply(ej)));
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("inner maps ad_x are derivations of a Lie algebra") {
  StructureConstants a = catalog::sl2();
  RatMatrix dm = derivation_matrix(a);
  for (std::size_t x = 0; x < a.dim; ++x) {
    std::vector<Rat> ex(a.dim);
    ex[x] = Rat(1);
    std::vector<Rat> ad(a.dim * a.dim);
    for (std::size_t j = 0; j < a.dim; ++j) {
      std::vector<Rat> ej(a.dim);
      ej[j] = Rat(1);
      auto col = a.bracket(ex, ej);
      for (std::size_t p = 0; p < a.dim; ++p) ad[p * a.dim + j] = col[p];
    }
    auto image = dm.apply(ad);
    bool zero = std::all_of(image.begin(), image.end(),
                            [](const Rat& r) { return r.is_zero(); });
    CHECK(zero);
  }
}

TEST_CASE("transport by the identity is the identity") {
  for (const auto& a : catalog::default_instances()) {
    CAPTURE(a.name);
    CHECK(equal_tables(transport(a, RatMatrix::identity(a.dim)), a));
  }
}

TEST_CASE("transport preserves invariants and inverts") {
  std::vector<StructureConstants> cases = {catalog::sl2(),
                                           catalog::heisenberg(1),
                                           catalog::leibniz_nilpotent2()};
  for (const auto& a : cases) {
    CAPTURE(a.name);
    for (int trial = 0; trial < 3; ++trial) {
      RatMatrix g = random_invertible(a.dim);
      StructureConstants b = transport(a, g);
      CHECK(invariants(b) == invariants(a));
      CHECK(equal_tables(transport(b, invert(g)), a));
    }
  }
}

TEST_CASE("transport rejects singular and mis-sized matrices") {
  StructureConstants a = catalog::sl2();
  RatMatrix sing(3, 3);
  sing(0, 0) = Rat(1);
  sing(1, 1) = Rat(1);
  CHECK_THROWS_AS(transport(a, sing), SingularError);
  CHECK_THROWS_AS(transport(a, RatMatrix::identity(2)),
                  DimensionMismatchError);
}

TEST_CASE("equal_tables ignores names") {
  StructureConstants a = catalog::sl2();
  StructureConstants b = a;
  b.name = "other";
  b.basis_names = {"x", "y", "z"};
  CHECK(equal_tables(a, b));
  b.set_product(0, 1, {Rat(1), Rat(1), Rat(1)});
  CHECK(!equal_tables(a, b));
  CHECK(!equal_tables(a, catalog::abelian(3)));
}
