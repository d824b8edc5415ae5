#ifndef LIEB_REPORT_HPP
#define LIEB_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "lieb/algebra.hpp"
#include "lieb/degeneration.hpp"
#include "lieb/leibniz_cohomology.hpp"
#include "lieb/rigidity.hpp"

namespace lieb {

enum class ReportFormat { json, text };

enum class Theory { lie, leibniz };

// Report renderers.  Every document is returned as a complete string with
// a trailing newline; json documents are indented with 2 spaces and have
// sorted keys, so identical inputs render byte-identically.  Indices and
// degrees are 1-based in the output; rationals and rational functions
// travel as strings.

std::string render_check(const StructureConstants& a, ReportFormat fmt);

std::string render_invariants(const StructureConstants& a, ReportFormat fmt);

// theory lie supports adjoint coefficients and degrees 0..2, theory
// leibniz degrees 0..3; anything else raises BadParameter.
std::string render_cohomology(const StructureConstants& a, Theory theory,
                              Coefficients coeff, std::size_t degree,
                              ReportFormat fmt);

std::string render_rigidity(const StructureConstants& a, ReportFormat fmt);

// a is the contraction source; r is the finished result for it.
std::string render_contraction(const StructureConstants& a,
                               const ContractionResult& r, ReportFormat fmt);

std::string render_screen(const StructureConstants& source,
                          const StructureConstants& target,
                          const ScreenResult& r, ReportFormat fmt);

std::string render_catalog_list(ReportFormat fmt);

// Builds the instance via the catalog and reports its table and computed
// invariants; raises UnknownName / BadParameter like catalog::get.
std::string render_catalog_show(const std::string& name,
                                const std::vector<long>& params,
                                ReportFormat fmt);

}  // namespace lieb

#endif
