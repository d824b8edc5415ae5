#include "lieb/lieb.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "lieb/algebra.hpp"
#include "lieb/catalog.hpp"
#include "lieb/degeneration.hpp"
#include "lieb/errors.hpp"
#include "lieb/io.hpp"
#include "lieb/leibniz_cohomology.hpp"
#include "lieb/report.hpp"

struct lieb_algebra {
  lieb::StructureConstants impl;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, converting exceptions to statuses and filling *error_detail.
template <typename Fn>
lieb_status guarded(char** error_detail, Fn&& fn) {
  if (error_detail) *error_detail = nullptr;
  try {
    fn();
    return LIEB_OK;
  } catch (const lieb::Error& e) {
    if (error_detail) *error_detail = dup_string(e.what());
    return static_cast<lieb_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    if (error_detail)
      *error_detail =
          dup_string(std::string("INTERNAL msg=\"") + e.what() + "\"");
    return LIEB_INTERNAL;
  }
}

lieb::ReportFormat to_format(lieb_format f) {
  switch (f) {
    case LIEB_FORMAT_JSON: return lieb::ReportFormat::json;
    case LIEB_FORMAT_TEXT: return lieb::ReportFormat::text;
  }
  throw lieb::BadParameterError("unknown format");
}

lieb::Theory to_theory(lieb_theory t) {
  switch (t) {
    case LIEB_THEORY_LIE: return lieb::Theory::lie;
    case LIEB_THEORY_LEIBNIZ: return lieb::Theory::leibniz;
  }
  throw lieb::BadParameterError("unknown theory");
}

lieb::Coefficients to_coefficients(lieb_coefficients c) {
  switch (c) {
    case LIEB_COEFF_ADJOINT: return lieb::Coefficients::adjoint;
    case LIEB_COEFF_TRIVIAL: return lieb::Coefficients::trivial;
  }
  throw lieb::BadParameterError("unknown coefficients");
}

const lieb::StructureConstants& deref(const lieb_algebra* a) {
  if (!a) throw lieb::BadParameterError("null algebra handle");
  return a->impl;
}

std::string bytes_to_string(const char* bytes, size_t len) {
  if (!bytes && len) throw lieb::BadParameterError("null input buffer");
  return bytes ? std::string(bytes, len) : std::string();
}

std::vector<long> params_to_vector(const long* params, size_t n) {
  if (!params && n) throw lieb::BadParameterError("null parameter buffer");
  return params ? std::vector<long>(params, params + n) : std::vector<long>();
}

void emit(char** out, const std::string& text) {
  if (!out) throw lieb::BadParameterError("null output pointer");
  *out = dup_string(text);
  if (!*out) throw lieb::InternalError("out of memory");
}

}  // namespace

extern "C" {

const char* lieb_version(void) { return LIEB_VERSION; }

const char* lieb_status_name(lieb_status status) {
  return lieb::error_code_name(static_cast<lieb::ErrorCode>(status));
}

void lieb_string_free(char* s) { std::free(s); }

lieb_status lieb_algebra_parse(const char* bytes, size_t len,
                               lieb_algebra** out, char** error_detail) {
  return guarded(error_detail, [&] {
    if (!out) throw lieb::BadParameterError("null output pointer");
    auto parsed = lieb::parse_algebra(bytes_to_string(bytes, len));
    *out = new lieb_algebra{std::move(parsed)};
  });
}

lieb_status lieb_algebra_from_catalog(const char* name, const long* params,
                                      size_t n_params, lieb_algebra** out,
                                      char** error_detail) {
  return guarded(error_detail, [&] {
    if (!out) throw lieb::BadParameterError("null output pointer");
    if (!name) throw lieb::BadParameterError("null name");
    auto built = lieb::catalog::get(name, params_to_vector(params, n_params));
    *out = new lieb_algebra{std::move(built)};
  });
}

void lieb_algebra_free(lieb_algebra* a) { delete a; }

size_t lieb_algebra_dim(const lieb_algebra* a) { return a ? a->impl.dim : 0; }

lieb_status lieb_algebra_render(const lieb_algebra* a, char** out,
                                char** error_detail) {
  return guarded(error_detail,
                 [&] { emit(out, lieb::render_algebra(deref(a))); });
}

lieb_status lieb_check(const lieb_algebra* a, lieb_format format, char** out,
                       char** error_detail) {
  return guarded(error_detail, [&] {
    emit(out, lieb::render_check(deref(a), to_format(format)));
  });
}

lieb_status lieb_invariants(const lieb_algebra* a, lieb_format format,
                            char** out, char** error_detail) {
  return guarded(error_detail, [&] {
    emit(out, lieb::render_invariants(deref(a), to_format(format)));
  });
}

lieb_status lieb_cohomology(const lieb_algebra* a, lieb_theory theory,
                            lieb_coefficients coefficients, unsigned degree,
                            lieb_format format, char** out,
                            char** error_detail) {
  return guarded(error_detail, [&] {
    emit(out, lieb::render_cohomology(deref(a), to_theory(theory),
                                      to_coefficients(coefficients), degree,
                                      to_format(format)));
  });
}

lieb_status lieb_rigidity(const lieb_algebra* a, lieb_format format,
                          char** out, char** error_detail) {
  return guarded(error_detail, [&] {
    emit(out, lieb::render_rigidity(deref(a), to_format(format)));
  });
}

lieb_status lieb_contract_weights(const lieb_algebra* a, const long* weights,
                                  size_t n_weights, lieb_format format,
                                  char** out, char** error_detail) {
  return guarded(error_detail, [&] {
    const auto& src = deref(a);
    lieb::WeightVector w;
    if (!weights && n_weights)
      throw lieb::BadParameterError("null weight buffer");
    w.weights.assign(weights, weights + n_weights);
    auto result = lieb::contract_diagonal(src, w);
    emit(out, lieb::render_contraction(src, result, to_format(format)));
  });
}

lieb_status lieb_contract_path(const lieb_algebra* a, const char* path_bytes,
                               size_t len, lieb_format format, char** out,
                               char** error_detail) {
  return guarded(error_detail, [&] {
    const auto& src = deref(a);
    lieb::ContractionPath p{lieb::parse_path_file(
        bytes_to_string(path_bytes, len))};
    auto result = lieb::contract_path(src, p);
    emit(out, lieb::render_contraction(src, result, to_format(format)));
  });
}

lieb_status lieb_screen(const lieb_algebra* source, const lieb_algebra* target,
                        lieb_format format, char** out, char** error_detail) {
  return guarded(error_detail, [&] {
    const auto& lam = deref(source);
    const auto& mu = deref(target);
    auto result = lieb::screen(lam, mu);
    emit(out, lieb::render_screen(lam, mu, result, to_format(format)));
  });
}

lieb_status lieb_catalog_list(lieb_format format, char** out,
                              char** error_detail) {
  return guarded(error_detail,
                 [&] { emit(out, lieb::render_catalog_list(to_format(format))); });
}

lieb_status lieb_catalog_show(const char* name, const long* params,
                              size_t n_params, int export_algebra,
                              lieb_format format, char** out,
                              char** error_detail) {
  return guarded(error_detail, [&] {
    if (!name) throw lieb::BadParameterError("null name");
    auto vec = params_to_vector(params, n_params);
    if (export_algebra) {
      emit(out, lieb::render_algebra(lieb::catalog::get(name, vec)));
    } else {
      emit(out, lieb::render_catalog_show(name, vec, to_format(format)));
    }
  });
}

lieb_status lieb_set_size_guard(uint64_t bound) {
  if (bound > std::numeric_limits<size_t>::max()) return LIEB_BAD_PARAMETER;
  lieb::set_size_guard(static_cast<size_t>(bound));
  return LIEB_OK;
}

uint64_t lieb_size_guard(void) { return lieb::size_guard(); }

}  // extern "C"
