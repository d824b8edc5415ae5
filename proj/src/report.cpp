#include "lieb/report.hpp"

#include <sstream>

#include "lieb/catalog.hpp"
#include "lieb/lie_cohomology.hpp"
#include "io_internal.hpp"

namespace lieb {

using nlohmann::json;

namespace {

std::string finish(const json& doc) { return doc.dump(2) + "\n"; }

const char* bool_word(bool b) { return b ? "true" : "false"; }

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i];
  }
  return out.str();
}

std::string header_line(const StructureConstants& a) {
  std::string line = "algebra: ";
  if (!a.name.empty()) line += a.name + " ";
  line += "(dim " + std::to_string(a.dim) + ")\n";
  return line;
}

void put_algebra_keys(json& doc, const StructureConstants& a) {
  doc["dim"] = a.dim;
  if (!a.name.empty()) doc["name"] = a.name;
}

// coefficient vector -> "2*e1 - e3"; zero vector -> "0"
std::string lincomb(const std::vector<Rat>& v,
                    const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    bool neg = v[k].sign() < 0;
    Rat mag = neg ? -v[k] : v[k];
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (!(mag == Rat(1))) out += mag.str() + "*";
    out += names[k];
  }
  return out.empty() ? "0" : out;
}

void append_products(std::string& out, const StructureConstants& a,
                     const char* indent) {
  if (a.table.empty()) {
    out += indent;
    out += "(all products zero)\n";
    return;
  }
  for (const auto& [ij, coeffs] : a.table) {
    out += indent;
    out += "[" + a.basis_names[ij.first] + ", " + a.basis_names[ij.second] +
           "] = " + lincomb(coeffs, a.basis_names) + "\n";
  }
}

const char* witness_kind_name(IdentityWitness::Kind kind) {
  switch (kind) {
    case IdentityWitness::Kind::antisymmetry: return "antisymmetry";
    case IdentityWitness::Kind::jacobi: return "jacobi";
    case IdentityWitness::Kind::leibniz: return "leibniz";
  }
  return "leibniz";
}

json witness_json(const IdentityWitness& w) {
  json indices = json::array();
  for (auto i : w.indices) indices.push_back(i + 1);
  json residual = json::array();
  for (const auto& r : w.residual) residual.push_back(r.str());
  return {{"identity", witness_kind_name(w.kind)},
          {"indices", indices},
          {"residual", residual}};
}

std::string witness_text(const IdentityWitness& w,
                         const std::vector<std::string>& names) {
  std::string out = "  ";
  out += witness_kind_name(w.kind);
  out += " witness at (";
  for (std::size_t i = 0; i < w.indices.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(w.indices[i] + 1);
  }
  out += "): residual " + lincomb(w.residual, names) + "\n";
  return out;
}

json invariants_json(const InvariantVector& iv) {
  return {{"dim", iv.dim},
          {"lower_central", iv.lower_central},
          {"derived", iv.derived},
          {"center_dim", iv.center_dim},
          {"derivation_dim", iv.derivation_dim},
          {"is_lie", iv.lie},
          {"is_leibniz", iv.leibniz}};
}

void append_invariants(std::string& out, const InvariantVector& iv,
                       const char* indent) {
  out += indent;
  out += "lower_central: " + join(iv.lower_central) + "\n";
  out += indent;
  out += "derived: " + join(iv.derived) + "\n";
  out += indent;
  out += "center_dim: " + std::to_string(iv.center_dim) + "\n";
  out += indent;
  out += "derivation_dim: " + std::to_string(iv.derivation_dim) + "\n";
  out += indent;
  out += std::string("is_lie: ") + bool_word(iv.lie) + "\n";
  out += indent;
  out += std::string("is_leibniz: ") + bool_word(iv.leibniz) + "\n";
}

const char* classification_name(LimitClass c) {
  switch (c) {
    case LimitClass::trivial: return "trivial";
    case LimitClass::improper_candidate: return "improper_candidate";
    case LimitClass::proper_candidate: return "proper_candidate";
  }
  return "trivial";
}

std::string entry_display_name(const catalog::CatalogEntry& e) {
  return e.arity == 0 ? e.name : e.name + "(n)";
}

}  // namespace

std::string render_check(const StructureConstants& a, ReportFormat fmt) {
  LieCheck lie = is_lie(a);
  LeibnizCheck leib = is_leibniz(a);
  if (fmt == ReportFormat::json) {
    json doc;
    doc["kind"] = "check";
    put_algebra_keys(doc, a);
    doc["is_lie"] = lie.ok;
    doc["antisymmetric"] = lie.antisymmetric;
    doc["jacobi"] = lie.jacobi;
    if (lie.witness) doc["lie_witness"] = witness_json(*lie.witness);
    doc["is_leibniz"] = leib.ok;
    json lw = json::array();
    for (const auto& w : leib.witnesses) lw.push_back(witness_json(w));
    doc["leibniz_witnesses"] = lw;
    return finish(doc);
  }
  std::string out = header_line(a);
  out += std::string("is_lie: ") + bool_word(lie.ok) + "\n";
  if (lie.witness) out += witness_text(*lie.witness, a.basis_names);
  out += std::string("is_leibniz: ") + bool_word(leib.ok) + "\n";
  for (const auto& w : leib.witnesses) out += witness_text(w, a.basis_names);
  return out;
}

std::string render_invariants(const StructureConstants& a, ReportFormat fmt) {
  InvariantVector iv = invariants(a);
  if (fmt == ReportFormat::json) {
    json doc = invariants_json(iv);
    doc["kind"] = "invariants";
    if (!a.name.empty()) doc["name"] = a.name;
    return finish(doc);
  }
  std::string out = header_line(a);
  append_invariants(out, iv, "");
  return out;
}

std::string render_cohomology(const StructureConstants& a, Theory theory,
                              Coefficients coeff, std::size_t degree,
                              ReportFormat fmt) {
  if (theory == Theory::lie && coeff != Coefficients::adjoint)
    throw BadParameterError(
        "lie cohomology supports adjoint coefficients only");
  std::size_t value = theory == Theory::lie
                          ? lie_cohomology_dim(a, degree)
                          : leibniz_cohomology_dim(a, degree, coeff);
  const char* theory_name = theory == Theory::lie ? "lie" : "leibniz";
  const char* coeff_name =
      coeff == Coefficients::adjoint ? "adjoint" : "trivial";
  const char* symbol = theory == Theory::lie ? "H" : "HL";
  if (fmt == ReportFormat::json) {
    json doc;
    doc["kind"] = "cohomology";
    put_algebra_keys(doc, a);
    doc["theory"] = theory_name;
    doc["coefficients"] = coeff_name;
    doc["degree"] = degree;
    doc["cohomology_dim"] = value;
    return finish(doc);
  }
  std::string out = header_line(a);
  out += std::string("theory: ") + theory_name + "\n";
  out += std::string("coefficients: ") + coeff_name + "\n";
  out += "degree: " + std::to_string(degree) + "\n";
  out += std::string("dim ") + symbol + "^" + std::to_string(degree) + " = " +
         std::to_string(value) + "\n";
  return out;
}

std::string render_rigidity(const StructureConstants& a, ReportFormat fmt) {
  RigidityReport rep = analyze(a);
  if (fmt == ReportFormat::json) {
    json doc;
    doc["kind"] = "rigidity";
    put_algebra_keys(doc, a);
    doc["is_lie"] = rep.is_lie;
    doc["is_leibniz"] = rep.is_leibniz;
    if (rep.h_dims) {
      doc["h0"] = (*rep.h_dims)[0];
      doc["h1"] = (*rep.h_dims)[1];
      doc["h2"] = (*rep.h_dims)[2];
    }
    doc["hl0"] = rep.hl_dims[0];
    doc["hl1"] = rep.hl_dims[1];
    doc["hl2"] = rep.hl_dims[2];
    doc["absolutely_rigid"] = rep.absolutely_rigid;
    doc["lie_rigid_sufficient"] = rep.lie_rigid_sufficient;
    doc["leibniz_rigid_sufficient"] = rep.leibniz_rigid_sufficient;
    doc["leibniz_rigidity_blocked"] = rep.leibniz_rigidity_blocked;
    doc["orbit_dim"] = rep.orbit_dim;
    doc["component_dim_lower_bound"] = rep.component_dim_lower_bound;
    doc["component_dim_exact"] = rep.component_dim_exact;
    return finish(doc);
  }
  std::string out = header_line(a);
  out += std::string("is_lie: ") + bool_word(rep.is_lie) + "\n";
  out += std::string("is_leibniz: ") + bool_word(rep.is_leibniz) + "\n";
  if (rep.h_dims) {
    out += "dim H^0 = " + std::to_string((*rep.h_dims)[0]) +
           ", dim H^1 = " + std::to_string((*rep.h_dims)[1]) +
           ", dim H^2 = " + std::to_string((*rep.h_dims)[2]) + "\n";
  }
  out += "dim HL^0 = " + std::to_string(rep.hl_dims[0]) +
         ", dim HL^1 = " + std::to_string(rep.hl_dims[1]) +
         ", dim HL^2 = " + std::to_string(rep.hl_dims[2]) + "\n";
  out += "absolutely rigid (H^2 = 0, sufficient for rigidity): ";
  out += rep.is_lie ? (rep.absolutely_rigid ? "yes" : "no")
                    : "not applicable (not Lie)";
  out += "\n";
  out += "Leibniz rigid (HL^2 = 0, sufficient for Leibniz rigidity): ";
  out += rep.leibniz_rigid_sufficient ? "yes" : "no";
  out += "\n";
  out += "Leibniz rigidity blocked "
         "(dim H^2 != dim HL^2, necessary condition fails): ";
  out += rep.is_lie ? (rep.leibniz_rigidity_blocked ? "yes" : "no")
                    : "not applicable (not Lie)";
  out += "\n";
  out += "orbit_dim: " + std::to_string(rep.orbit_dim) + "\n";
  out += "component_dim: " + std::to_string(rep.component_dim_lower_bound);
  out += rep.component_dim_exact ? " (exact)" : " (lower bound)";
  out += "\n";
  return out;
}

std::string render_contraction(const StructureConstants& a,
                               const ContractionResult& r, ReportFormat fmt) {
  bool diagonal = r.route == ContractionRoute::diagonal;
  if (fmt == ReportFormat::json) {
    json doc;
    doc["kind"] = "contraction";
    put_algebra_keys(doc, a);
    doc["route"] = diagonal ? "diagonal" : "path";
    if (diagonal) {
      doc["weights"] = r.weights;
      json table = json::array();
      for (const auto& [i, j, k, e] : r.exponent_table)
        table.push_back(
            {{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"exponent", e}});
      doc["exponent_table"] = table;
    } else {
      json table = json::array();
      for (const auto& [i, j, k, f] : r.path_constants)
        table.push_back(
            {{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"value", f.str()}});
      doc["path_constants"] = table;
    }
    doc["limit"] = algebra_to_json(r.limit);
    doc["classification"] = classification_name(r.classification);
    return finish(doc);
  }
  std::string out = header_line(a);
  out += std::string("route: ") + (diagonal ? "diagonal" : "path") + "\n";
  if (diagonal) out += "weights: " + join(r.weights) + "\n";
  out += "limit:\n";
  append_products(out, r.limit, "  ");
  out += std::string("classification: ") +
         classification_name(r.classification) + "\n";
  if (diagonal) {
    out += "exponents (i, j, k) -> a_i + a_j - a_k:\n";
    for (const auto& [i, j, k, e] : r.exponent_table)
      out += "  (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
             ", " + std::to_string(k + 1) + "): " + std::to_string(e) + "\n";
  } else {
    out += "path constants (i, j, k) -> gamma^k_ij(t):\n";
    for (const auto& [i, j, k, f] : r.path_constants)
      out += "  (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
             ", " + std::to_string(k + 1) + "): " + f.str() + "\n";
  }
  return out;
}

std::string render_screen(const StructureConstants& source,
                          const StructureConstants& target,
                          const ScreenResult& r, ReportFormat fmt) {
  if (fmt == ReportFormat::json) {
    json doc;
    doc["kind"] = "screen";
    doc["pass"] = r.pass;
    doc["improper"] = r.improper;
    json violations = json::array();
    for (auto v : r.violations) violations.push_back(screen_violation_name(v));
    doc["violations"] = violations;
    json src = invariants_json(r.source);
    if (!source.name.empty()) src["name"] = source.name;
    json tgt = invariants_json(r.target);
    if (!target.name.empty()) tgt["name"] = target.name;
    doc["source"] = src;
    doc["target"] = tgt;
    return finish(doc);
  }
  std::string out = std::string("screen: ") + (r.pass ? "pass" : "fail") + "\n";
  out += std::string("improper: ") + bool_word(r.improper) + "\n";
  out += "violations: ";
  if (r.violations.empty()) {
    out += "none\n";
  } else {
    for (std::size_t i = 0; i < r.violations.size(); ++i) {
      if (i) out += ", ";
      out += screen_violation_name(r.violations[i]);
    }
    out += "\n";
  }
  out += "source ";
  out += header_line(source);
  append_invariants(out, r.source, "  ");
  out += "target ";
  out += header_line(target);
  append_invariants(out, r.target, "  ");
  return out;
}

std::string render_catalog_list(ReportFormat fmt) {
  const auto& entries = catalog::entries();
  const auto& counts = catalog::reference_counts();
  if (fmt == ReportFormat::json) {
    json doc;
    doc["kind"] = "catalog_list";
    json list = json::array();
    for (const auto& e : entries)
      list.push_back({{"name", e.name},
                      {"arity", e.arity},
                      {"doc", e.doc},
                      {"lie_family", e.lie_family},
                      {"sample_params", e.sample_params}});
    doc["entries"] = list;
    doc["reference_counts"] = {{"r", counts.r}, {"s", counts.s}};
    return finish(doc);
  }
  std::string out = "catalog:\n";
  for (const auto& e : entries)
    out += "  " + entry_display_name(e) + ": " + e.doc + "\n";
  out += "reference counts, variety of n-dimensional complex Lie algebras, "
         "n = 1..7:\n";
  out += "  components r(n): " + join(counts.r) + "\n";
  out += "  open orbits s(n): " + join(counts.s) + "\n";
  return out;
}

std::string render_catalog_show(const std::string& name,
                                const std::vector<long>& params,
                                ReportFormat fmt) {
  StructureConstants a = catalog::get(name, params);
  const catalog::CatalogEntry* entry = nullptr;
  for (const auto& e : catalog::entries())
    if (e.name == name) entry = &e;
  InvariantVector iv = invariants(a);
  if (fmt == ReportFormat::json) {
    json doc;
    doc["kind"] = "catalog_show";
    doc["entry"] = name;
    doc["params"] = params;
    if (entry) doc["doc"] = entry->doc;
    doc["algebra"] = algebra_to_json(a);
    doc["invariants"] = invariants_json(iv);
    return finish(doc);
  }
  std::string out = "entry: " + name;
  if (!params.empty()) out += "(" + join(params) + ")";
  out += "\n";
  if (entry) out += "doc: " + entry->doc + "\n";
  out += header_line(a);
  out += "basis: " + join(a.basis_names) + "\n";
  out += "products:\n";
  append_products(out, a, "  ");
  out += "invariants:\n";
  append_invariants(out, iv, "  ");
  return out;
}

}  // namespace lieb
