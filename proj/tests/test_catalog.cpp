#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "lieb/algebra.hpp"
#include "lieb/catalog.hpp"
#include "lieb/errors.hpp"
#include "lieb/leibniz_cohomology.hpp"

using namespace lieb;
using namespace lieb::catalog;

namespace {

struct GuardRestore {
  ~GuardRestore() { set_size_guard(0); }
};

std::vector<Rat> coeffs(const StructureConstants& a, std::size_t i,
                        std::size_t j) {
  const auto* p = a.product(i, j);
  return p ? *p : std::vector<Rat>(a.dim);
}

}  // namespace

TEST_CASE("every entry's sample instance passes its declared checks") {
  for (const auto& e : entries()) {
    CAPTURE(e.name);
    StructureConstants a = get(e.name, e.sample_params);
    CHECK(is_leibniz(a).ok);
    CHECK(is_lie(a).ok == e.lie_family);
    REQUIRE(e.expected_invariants.has_value());
    CHECK(invariants(a) == *e.expected_invariants);
    CHECK(!e.doc.empty());
  }
}

TEST_CASE("abelian") {
  StructureConstants a = abelian(3);
  CHECK(a.dim == 3);
  CHECK(a.is_abelian());
  CHECK(a.name == "abelian(3)");
  CHECK_THROWS_AS(abelian(0), BadParameterError);
  CHECK_THROWS_AS(abelian(-2), BadParameterError);
}

TEST_CASE("nonabelian2") {
  StructureConstants a = nonabelian2();
  CHECK(a.dim == 2);
  CHECK(coeffs(a, 0, 1) == std::vector<Rat>{Rat(0), Rat(1)});
  CHECK(coeffs(a, 1, 0) == std::vector<Rat>{Rat(0), Rat(-1)});
  CHECK(a.table.size() == 2);
}

TEST_CASE("heisenberg") {
  StructureConstants a = heisenberg(2);
  CHECK(a.dim == 5);
  // [e1, e3] = [e2, e4] = e5
  CHECK(coeffs(a, 0, 2)[4] == Rat(1));
  CHECK(coeffs(a, 2, 0)[4] == Rat(-1));
  CHECK(coeffs(a, 1, 3)[4] == Rat(1));
  CHECK(a.product(0, 1) == nullptr);
  CHECK(a.table.size() == 4);
  CHECK_THROWS_AS(heisenberg(0), BadParameterError);
}

TEST_CASE("sl2") {
  StructureConstants a = sl2();
  CHECK(a.basis_names == std::vector<std::string>{"h", "e", "f"});
  CHECK(coeffs(a, 0, 1) == std::vector<Rat>{Rat(0), Rat(2), Rat(0)});
  CHECK(coeffs(a, 0, 2) == std::vector<Rat>{Rat(0), Rat(0), Rat(-2)});
  CHECK(coeffs(a, 1, 2) == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
  CHECK(coeffs(a, 2, 1) == std::vector<Rat>{Rat(-1), Rat(0), Rat(0)});
  CHECK(a.table.size() == 6);
}

TEST_CASE("gl") {
  StructureConstants a = gl(2);
  CHECK(a.dim == 4);
  CHECK(a.basis_names ==
        std::vector<std::string>{"E11", "E12", "E21", "E22"});
  // [E12, E21] = E11 - E22
  CHECK(coeffs(a, 1, 2) == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(-1)});
  // [E11, E12] = E12
  CHECK(coeffs(a, 0, 1) == std::vector<Rat>{Rat(0), Rat(1), Rat(0), Rat(0)});
  // the identity matrix E11 + E22 is central
  std::vector<Rat> id = {Rat(1), Rat(0), Rat(0), Rat(1)};
  for (std::size_t j = 0; j < 4; ++j) {
    std::vector<Rat> ej(4);
    ej[j] = Rat(1);
    CHECK(a.bracket(id, ej) == std::vector<Rat>(4));
  }
  CHECK_THROWS_AS(gl(0), BadParameterError);
}

TEST_CASE("leibniz_nilpotent2") {
  StructureConstants a = leibniz_nilpotent2();
  CHECK(a.dim == 2);
  CHECK(coeffs(a, 0, 0) == std::vector<Rat>{Rat(0), Rat(1)});
  CHECK(a.table.size() == 1);
  CHECK(!is_lie(a).ok);
  CHECK(is_leibniz(a).ok);
}

TEST_CASE("semidirect_sl2") {
  StructureConstants a = semidirect_sl2(1);
  REQUIRE(a.dim == 6);
  CHECK(a.basis_names ==
        std::vector<std::string>{"h", "e", "f", "v0", "v1", "v2"});

  // the sl2 part is untouched
  StructureConstants s = sl2();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        CHECK(a.structure_constant(i, j, k) == s.structure_constant(i, j, k));

  // h.v_k = (2n-2k) v_k, e.v_k = k(2n-k+1) v_{k-1}, f.v_k = v_{k+1}
  CHECK(coeffs(a, 0, 3)[3] == Rat(2));
  CHECK(a.product(0, 4) == nullptr);
  CHECK(coeffs(a, 0, 5)[5] == Rat(-2));
  CHECK(coeffs(a, 1, 4)[3] == Rat(2));
  CHECK(coeffs(a, 1, 5)[4] == Rat(2));
  CHECK(coeffs(a, 2, 3)[4] == Rat(1));
  CHECK(coeffs(a, 2, 4)[5] == Rat(1));
  CHECK(a.product(2, 5) == nullptr);
  CHECK(coeffs(a, 3, 0)[3] == Rat(-2));

  // the module is an abelian ideal
  for (std::size_t i = 3; i < 6; ++i)
    for (std::size_t j = 3; j < 6; ++j) CHECK(a.product(i, j) == nullptr);

  CHECK_THROWS_AS(semidirect_sl2(0), BadParameterError);
}

TEST_CASE("semidirect_sl2 refuses sizes past the guard") {
  GuardRestore restore;
  // dim = 2n + 4; the guard is applied to dim^2
  CHECK_THROWS_AS(semidirect_sl2(100000), DimensionTooLargeError);
  set_size_guard(10);
  CHECK_THROWS_AS(semidirect_sl2(1), DimensionTooLargeError);
  set_size_guard(0);
  CHECK_NOTHROW(semidirect_sl2(1));
}

TEST_CASE("get dispatches by name") {
  CHECK(equal_tables(get("abelian", {3}), abelian(3)));
  CHECK(equal_tables(get("sl2", {}), sl2()));
  CHECK(equal_tables(get("heisenberg", {2}), heisenberg(2)));
  CHECK(equal_tables(get("semidirect_sl2", {1}), semidirect_sl2(1)));
  CHECK_THROWS_AS(get("so3", {}), UnknownNameError);
  CHECK_THROWS_AS(get("sl2", {1}), BadParameterError);
  CHECK_THROWS_AS(get("heisenberg", {}), BadParameterError);
  CHECK_THROWS_AS(get("heisenberg", {1, 2}), BadParameterError);
}

TEST_CASE("default instances") {
  auto all = default_instances();
  REQUIRE(all.size() == 10);
  std::vector<std::string> names;
  for (const auto& a : all) names.push_back(a.name);
  std::vector<std::string> want = {
      "abelian(1)", "abelian(2)",          "abelian(3)",  "nonabelian2",
      "heisenberg(1)", "heisenberg(2)",    "sl2",         "gl(2)",
      "leibniz_nilpotent2", "semidirect_sl2(1)"};
  CHECK(names == want);
}

TEST_CASE("reference counts") {
  const ReferenceCounts& c = reference_counts();
  CHECK(c.r == std::vector<long>{1, 1, 2, 4, 7, 17, 49});
  CHECK(c.s == std::vector<long>{1, 1, 1, 2, 3, 6, 14});
  CHECK(c.r[2] == 2);   // three-dimensional case
  CHECK(c.s[6] == 14);  // seven-dimensional case
}
