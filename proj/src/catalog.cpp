#include "lieb/catalog.hpp"

#include "lieb/leibniz_cohomology.hpp"

namespace lieb {
namespace catalog {

namespace {

// sets lambda(e_i, e_j) = c e_k and lambda(e_j, e_i) = -c e_k
void skew_pair(StructureConstants& a, std::size_t i, std::size_t j,
               std::size_t k, const Rat& c) {
  std::vector<Rat> v(a.dim);
  if (const auto* p = a.product(i, j)) v = *p;
  v[k] += c;
  a.set_product(i, j, v);
  v.assign(a.dim, Rat());
  if (const auto* p = a.product(j, i)) v = *p;
  v[k] -= c;
  a.set_product(j, i, std::move(v));
}

void require_positive(long p, const char* what) {
  if (p < 1)
    throw BadParameterError(std::string(what) + " must be at least 1");
}

}  // namespace

StructureConstants abelian(long d) {
  require_positive(d, "abelian dimension");
  auto a = make_algebra(static_cast<std::size_t>(d),
                        "abelian(" + std::to_string(d) + ")");
  return a;
}

StructureConstants nonabelian2() {
  auto a = make_algebra(2, "nonabelian2");
  skew_pair(a, 0, 1, 1, Rat(1));  // [e1,e2] = e2
  return a;
}

StructureConstants heisenberg(long m) {
  require_positive(m, "heisenberg parameter");
  std::size_t mm = static_cast<std::size_t>(m);
  auto a = make_algebra(2 * mm + 1, "heisenberg(" + std::to_string(m) + ")");
  for (std::size_t i = 0; i < mm; ++i)
    skew_pair(a, i, mm + i, 2 * mm, Rat(1));  // [e_i, e_{m+i}] = e_{2m+1}
  return a;
}

StructureConstants sl2() {
  auto a = make_algebra(3, "sl2");
  a.basis_names = {"h", "e", "f"};
  skew_pair(a, 0, 1, 1, Rat(2));   // [h,e] = 2e
  skew_pair(a, 0, 2, 2, Rat(-2));  // [h,f] = -2f
  skew_pair(a, 1, 2, 0, Rat(1));   // [e,f] = h
  return a;
}

StructureConstants gl(long m) {
  require_positive(m, "gl parameter");
  std::size_t mm = static_cast<std::size_t>(m);
  std::size_t d = mm * mm;
  auto a = make_algebra(d, "gl(" + std::to_string(m) + ")");
  auto idx = [mm](std::size_t p, std::size_t q) { return p * mm + q; };
  for (std::size_t p = 0; p < mm; ++p)
    for (std::size_t q = 0; q < mm; ++q)
      a.basis_names[idx(p, q)] =
          "E" + std::to_string(p + 1) + std::to_string(q + 1);
  // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
  for (std::size_t ab = 0; ab < d; ++ab)
    for (std::size_t cd = 0; cd < d; ++cd) {
      std::size_t aa = ab / mm, bb = ab % mm;
      std::size_t cc = cd / mm, dd = cd % mm;
      std::vector<Rat> v(d);
      if (bb == cc) v[idx(aa, dd)] += Rat(1);
      if (dd == aa) v[idx(cc, bb)] -= Rat(1);
      a.set_product(ab, cd, std::move(v));
    }
  return a;
}

StructureConstants leibniz_nilpotent2() {
  auto a = make_algebra(2, "leibniz_nilpotent2");
  a.set_product(0, 0, {Rat(0), Rat(1)});  // [e1,e1] = e2
  return a;
}

StructureConstants semidirect_sl2(long n) {
  require_positive(n, "semidirect_sl2 parameter");
  std::size_t nn = static_cast<std::size_t>(n);
  std::size_t d = 3 + (2 * nn + 1);
  // guard the construction like the coboundary it will feed: the degree-1
  // adjoint codomain has d^2 coordinates
  if (d * d > size_guard())
    throw DimensionTooLargeError(d * d, d, size_guard());
  auto a = make_algebra(d, "semidirect_sl2(" + std::to_string(n) + ")");
  a.basis_names = {"h", "e", "f"};
  for (std::size_t k = 0; k <= 2 * nn; ++k)
    a.basis_names.push_back("v" + std::to_string(k));
  skew_pair(a, 0, 1, 1, Rat(2));
  skew_pair(a, 0, 2, 2, Rat(-2));
  skew_pair(a, 1, 2, 0, Rat(1));
  auto v = [](std::size_t k) { return 3 + k; };
  for (std::size_t k = 0; k <= 2 * nn; ++k) {
    long coeff_h = 2 * static_cast<long>(nn) - 2 * static_cast<long>(k);
    if (coeff_h != 0) skew_pair(a, 0, v(k), v(k), Rat(coeff_h));
    if (k >= 1) {
      Rat coeff_e(static_cast<long>(k) *
                  (2 * static_cast<long>(nn) - static_cast<long>(k) + 1));
      skew_pair(a, 1, v(k), v(k - 1), coeff_e);
    }
    if (k < 2 * nn) skew_pair(a, 2, v(k), v(k + 1), Rat(1));
  }
  return a;
}

StructureConstants get(const std::string& name,
                       const std::vector<long>& params) {
  const CatalogEntry* entry = nullptr;
  for (const auto& e : entries())
    if (e.name == name) entry = &e;
  if (!entry) throw UnknownNameError(name);
  if (params.size() != entry->arity)
    throw BadParameterError(name + " takes " + std::to_string(entry->arity) +
                            " parameter(s), got " +
                            std::to_string(params.size()));
  if (name == "abelian") return abelian(params[0]);
  if (name == "nonabelian2") return nonabelian2();
  if (name == "heisenberg") return heisenberg(params[0]);
  if (name == "sl2") return sl2();
  if (name == "gl") return gl(params[0]);
  if (name == "leibniz_nilpotent2") return leibniz_nilpotent2();
  if (name == "semidirect_sl2") return semidirect_sl2(params[0]);
  throw UnknownNameError(name);
}

namespace {

InvariantVector iv(std::size_t dim, std::vector<std::size_t> lcs,
                   std::vector<std::size_t> der, std::size_t center,
                   std::size_t derdim, bool lie, bool leibniz) {
  InvariantVector v;
  v.dim = dim;
  v.lower_central = std::move(lcs);
  v.derived = std::move(der);
  v.center_dim = center;
  v.derivation_dim = derdim;
  v.lie = lie;
  v.leibniz = leibniz;
  return v;
}

}  // namespace

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> table = {
      {"abelian", 1, "abelian Lie algebra of the given dimension", true,
       {2},
       iv(2, {2, 0}, {2, 0}, 2, 4, true, true)},
      {"nonabelian2", 0, "the unique nonabelian 2-dimensional Lie algebra, [e1,e2] = e2",
       true,
       {},
       iv(2, {2, 1, 1}, {2, 1, 0}, 0, 2, true, true)},
      {"heisenberg", 1,
       "the (2m+1)-dimensional Heisenberg algebra, [e_i, e_{m+i}] = e_{2m+1}",
       true,
       {1},
       iv(3, {3, 1, 0}, {3, 1, 0}, 1, 6, true, true)},
      {"sl2", 0, "the simple Lie algebra sl2 in the basis (h, e, f)", true,
       {},
       iv(3, {3, 3}, {3, 3}, 0, 3, true, true)},
      {"gl", 1, "the general linear Lie algebra gl(m) on elementary matrices",
       true,
       {2},
       iv(4, {4, 3, 3}, {4, 3, 3}, 1, 4, true, true)},
      {"leibniz_nilpotent2", 0,
       "2-dimensional nilpotent non-Lie Leibniz algebra, [e1,e1] = e2", false,
       {},
       iv(2, {2, 1, 0}, {2, 1, 0}, 1, 2, false, true)},
      {"semidirect_sl2", 1,
       "sl2 extended by its irreducible (2n+1)-dimensional module", true,
       {1},
       iv(6, {6, 6}, {6, 6}, 0, 7, true, true)},
  };
  return table;
}

std::vector<StructureConstants> default_instances() {
  std::vector<StructureConstants> out;
  out.push_back(abelian(1));
  out.push_back(abelian(2));
  out.push_back(abelian(3));
  out.push_back(nonabelian2());
  out.push_back(heisenberg(1));
  out.push_back(heisenberg(2));
  out.push_back(sl2());
  out.push_back(gl(2));
  out.push_back(leibniz_nilpotent2());
  out.push_back(semidirect_sl2(1));
  return out;
}

const ReferenceCounts& reference_counts() {
  static const ReferenceCounts counts{{1, 1, 2, 4, 7, 17, 49},
                                      {1, 1, 1, 2, 3, 6, 14}};
  return counts;
}

}  // namespace catalog
}  // namespace lieb
