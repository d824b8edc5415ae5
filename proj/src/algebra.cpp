#include "lieb/algebra.hpp"

#include <algorithm>

namespace lieb {

namespace {

bool all_zero(const std::vector<Rat>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rat& x) { return x.is_zero(); });
}

void axpy(std::vector<Rat>& acc, const Rat& c, const std::vector<Rat>& v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) acc[k] += c * v[k];
}

}  // namespace

Rat StructureConstants::structure_constant(std::size_t i, std::size_t j,
                                           std::size_t k) const {
  const auto* p = product(i, j);
  return p ? (*p)[k] : Rat();
}

const std::vector<Rat>* StructureConstants::product(std::size_t i,
                                                    std::size_t j) const {
  auto it = table.find({i, j});
  return it == table.end() ? nullptr : &it->second;
}

void StructureConstants::set_product(std::size_t i, std::size_t j,
                                     std::vector<Rat> coeffs) {
  if (coeffs.size() != dim)
    throw DimensionMismatchError("set_product coefficient vector");
  if (all_zero(coeffs))
    table.erase({i, j});
  else
    table[{i, j}] = std::move(coeffs);
}

std::vector<Rat> StructureConstants::bracket(
    const std::vector<Rat>& x, const std::vector<Rat>& y) const {
  if (x.size() != dim || y.size() != dim)
    throw DimensionMismatchError("bracket operand");
  std::vector<Rat> out(dim);
  for (const auto& [ij, coeffs] : table) {
    Rat c = x[ij.first] * y[ij.second];
    if (!c.is_zero()) axpy(out, c, coeffs);
  }
  return out;
}

StructureConstants make_algebra(std::size_t dim, std::string name) {
  StructureConstants a;
  a.dim = dim;
  a.name = std::move(name);
  a.basis_names.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i)
    a.basis_names.push_back("e" + std::to_string(i + 1));
  return a;
}

LieCheck is_lie(const StructureConstants& a) {
  LieCheck r;
  r.antisymmetric = true;
  std::size_t d = a.dim;
  for (std::size_t i = 0; i < d && r.antisymmetric; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      std::vector<Rat> s(d);
      if (const auto* p = a.product(i, j)) axpy(s, Rat(1), *p);
      if (const auto* p = a.product(j, i)) axpy(s, Rat(1), *p);
      if (!all_zero(s)) {
        r.antisymmetric = false;
        r.witness = IdentityWitness{IdentityWitness::Kind::antisymmetry,
                                    {i, j},
                                    std::move(s)};
        break;
      }
    }
  }
  r.jacobi = true;
  std::vector<Rat> ei(d), ej(d), ek(d);
  for (std::size_t i = 0; i < d && r.jacobi; ++i)
    for (std::size_t j = i + 1; j < d && r.jacobi; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
        std::vector<Rat> s(d);
        ei.assign(d, Rat());
        ei[i] = Rat(1);
        ej.assign(d, Rat());
        ej[j] = Rat(1);
        ek.assign(d, Rat());
        ek[k] = Rat(1);
        axpy(s, Rat(1), a.bracket(a.bracket(ei, ej), ek));
        axpy(s, Rat(1), a.bracket(a.bracket(ej, ek), ei));
        axpy(s, Rat(1), a.bracket(a.bracket(ek, ei), ej));
        if (!all_zero(s)) {
          r.jacobi = false;
          if (!r.witness)
            r.witness = IdentityWitness{IdentityWitness::Kind::jacobi,
                                        {i, j, k},
                                        std::move(s)};
          break;
        }
      }
  r.ok = r.antisymmetric && r.jacobi;
  return r;
}

LeibnizCheck is_leibniz(const StructureConstants& a) {
  LeibnizCheck r;
  std::size_t d = a.dim;
  std::vector<std::vector<Rat>> basis(d, std::vector<Rat>(d));
  for (std::size_t i = 0; i < d; ++i) basis[i][i] = Rat(1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        std::vector<Rat> s =
            a.bracket(basis[i], a.bracket(basis[j], basis[k]));
        axpy(s, Rat(-1), a.bracket(a.bracket(basis[i], basis[j]), basis[k]));
        axpy(s, Rat(1), a.bracket(a.bracket(basis[i], basis[k]), basis[j]));
        if (!all_zero(s))
          r.witnesses.push_back(IdentityWitness{
              IdentityWitness::Kind::leibniz, {i, j, k}, std::move(s)});
      }
  r.ok = r.witnesses.empty();
  return r;
}

namespace {

// span of lambda(u, v) for u in rows_a, v in rows_b, as canonical rows
std::vector<std::vector<Rat>> product_span(
    const StructureConstants& a, const std::vector<std::vector<Rat>>& rows_a,
    const std::vector<std::vector<Rat>>& rows_b) {
  std::vector<std::vector<Rat>> products;
  for (const auto& u : rows_a)
    for (const auto& v : rows_b) {
      auto w = a.bracket(u, v);
      if (!all_zero(w)) products.push_back(std::move(w));
    }
  return reduced_span(products);
}

std::vector<std::vector<Rat>> full_basis(std::size_t d) {
  std::vector<std::vector<Rat>> rows(d, std::vector<Rat>(d));
  for (std::size_t i = 0; i < d; ++i) rows[i][i] = Rat(1);
  return rows;
}

std::size_t center_dim(const StructureConstants& a) {
  std::size_t d = a.dim;
  // x central iff lambda(x, e_j) = 0 and lambda(e_j, x) = 0 for all j
  RatMatrix m(2 * d * d, d);
  for (const auto& [ij, coeffs] : a.table) {
    auto [i, j] = ij;
    for (std::size_t k = 0; k < d; ++k) {
      if (coeffs[k].is_zero()) continue;
      m((j * d + k), i) += coeffs[k];          // coefficient of x_i in [x,e_j]_k
      m(d * d + (i * d + k), j) += coeffs[k];  // coefficient of x_j in [e_i,x]_k
    }
  }
  return d - rank(m);
}

}  // namespace

RatMatrix derivation_matrix(const StructureConstants& a) {
  std::size_t d = a.dim;
  RatMatrix m(d * d * d, d * d);
  auto row = [d](std::size_t i, std::size_t j, std::size_t k) {
    return (i * d + j) * d + k;
  };
  auto col = [d](std::size_t p, std::size_t q) { return p * d + q; };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto* gamma_ij = a.product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        // D(lambda(e_i,e_j))_k = sum_m gamma^m_ij D_km
        if (gamma_ij)
          for (std::size_t mm = 0; mm < d; ++mm)
            if (!(*gamma_ij)[mm].is_zero())
              m(row(i, j, k), col(k, mm)) += (*gamma_ij)[mm];
        // -lambda(D e_i, e_j)_k = -sum_p D_pi gamma^k_pj
        for (std::size_t p = 0; p < d; ++p) {
          Rat g = a.structure_constant(p, j, k);
          if (!g.is_zero()) m(row(i, j, k), col(p, i)) -= g;
        }
        // -lambda(e_i, D e_j)_k = -sum_p D_pj gamma^k_ip
        for (std::size_t p = 0; p < d; ++p) {
          Rat g = a.structure_constant(i, p, k);
          if (!g.is_zero()) m(row(i, j, k), col(p, j)) -= g;
        }
      }
    }
  return m;
}

InvariantVector invariants(const StructureConstants& a) {
  InvariantVector v;
  v.dim = a.dim;
  auto full = full_basis(a.dim);

  // lower central series: L^1 = L, L^{k+1} = lambda(L^k, L)
  auto current = full;
  v.lower_central.push_back(a.dim);
  while (true) {
    std::size_t prev = current.size();
    if (prev == 0) break;
    current = product_span(a, current, full);
    v.lower_central.push_back(current.size());
    if (current.size() == prev || current.empty()) break;
  }

  // derived series: D^1 = L, D^{k+1} = lambda(D^k, D^k)
  current = full;
  v.derived.push_back(a.dim);
  while (true) {
    std::size_t prev = current.size();
    if (prev == 0) break;
    current = product_span(a, current, current);
    v.derived.push_back(current.size());
    if (current.size() == prev || current.empty()) break;
  }

  v.center_dim = center_dim(a);
  v.derivation_dim = a.dim * a.dim - rank(derivation_matrix(a));
  v.lie = is_lie(a).ok;
  v.leibniz = is_leibniz(a).ok;
  return v;
}

StructureConstants transport(const StructureConstants& a, const RatMatrix& g) {
  if (g.rows() != a.dim || g.cols() != a.dim)
    throw DimensionMismatchError("transport matrix");
  RatMatrix ginv = invert(g);
  StructureConstants b = make_algebra(a.dim);
  b.name = a.name;
  std::vector<Rat> gi(a.dim), gj(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t k = 0; k < a.dim; ++k) gi[k] = g(k, i);
    for (std::size_t j = 0; j < a.dim; ++j) {
      for (std::size_t k = 0; k < a.dim; ++k) gj[k] = g(k, j);
      b.set_product(i, j, ginv.apply(a.bracket(gi, gj)));
    }
  }
  return b;
}

bool equal_tables(const StructureConstants& a, const StructureConstants& b) {
  return a.dim == b.dim && a.table == b.table;
}

}  // namespace lieb
