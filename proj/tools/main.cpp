// lieb: exact structure-constant analysis of Lie and Leibniz algebras.
// Thin shell over the C API; all mathematics lives in the library.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lieb/lieb.h"

namespace {

struct AlgebraDeleter {
  void operator()(lieb_algebra* a) const { lieb_algebra_free(a); }
};
using AlgebraPtr = std::unique_ptr<lieb_algebra, AlgebraDeleter>;

// 0 success, 2 usage or input-file parse trouble, 1 everything else
int exit_code_for(lieb_status st) {
  switch (st) {
    case LIEB_OK:
      return 0;
    case LIEB_PARSE_ERROR:
    case LIEB_DUPLICATE_PRODUCT:
    case LIEB_UNKNOWN_LABEL:
    case LIEB_USAGE:
      return 2;
    default:
      return 1;
  }
}

[[noreturn]] void usage_fail(const std::string& msg) {
  std::cerr << "USAGE msg=\"" << msg << "\"\n";
  std::exit(2);
}

int report_error(lieb_status st, char* err) {
  if (err) {
    std::cerr << err << "\n";
    lieb_string_free(err);
  } else {
    std::cerr << lieb_status_name(st) << "\n";
  }
  return exit_code_for(st);
}

// prints the report or the error; the status must be computed in a
// preceding statement so that out and err are read after the call
int finish(lieb_status st, char* out, char* err) {
  if (st != LIEB_OK) return report_error(st, err);
  std::cout << out;
  lieb_string_free(out);
  return 0;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string bytes{std::istreambuf_iterator<char>(in),
                    std::istreambuf_iterator<char>()};
  if (in.bad()) return std::nullopt;
  return bytes;
}

// loads and parses an algebra file; on failure prints the error and
// returns the exit code, otherwise 0
int load_algebra(const std::string& path, AlgebraPtr& out) {
  auto bytes = read_file(path);
  if (!bytes) {
    std::cerr << "PARSE_ERROR locus=" << path << " msg=\"cannot read file\"\n";
    return 2;
  }
  lieb_algebra* raw = nullptr;
  char* err = nullptr;
  lieb_status st = lieb_algebra_parse(bytes->data(), bytes->size(), &raw, &err);
  if (st != LIEB_OK) return report_error(st, err);
  out.reset(raw);
  return 0;
}

std::vector<long> parse_weights(const std::string& text) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
      tok.erase(tok.begin());
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
      tok.pop_back();
    std::size_t digits = tok.size() - (tok.size() && tok[0] == '-' ? 1 : 0);
    bool ok = digits > 0;
    for (std::size_t i = tok.size() - digits; i < tok.size(); ++i)
      ok = ok && std::isdigit(static_cast<unsigned char>(tok[i]));
    if (!ok) usage_fail("--weights must be a comma-separated list of integers");
    try {
      out.push_back(std::stol(tok));
    } catch (const std::out_of_range&) {
      usage_fail("--weights entry out of range");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void apply_size_guard_env() {
  const char* env = std::getenv("LIEB_SIZE_GUARD");
  if (!env || !*env) return;
  std::string text(env);
  bool ok = !text.empty();
  for (char c : text) ok = ok && std::isdigit(static_cast<unsigned char>(c));
  if (!ok || text.size() > 18)
    usage_fail("LIEB_SIZE_GUARD must be a nonnegative integer");
  lieb_set_size_guard(std::stoull(text));
}

}  // namespace

int main(int argc, char** argv) {
  apply_size_guard_env();

  CLI::App app{
      "exact invariants, cohomology, rigidity verdicts and degenerations "
      "of finite-dimensional Lie and Leibniz algebras given by rational "
      "structure constants"};
  app.require_subcommand(1);
  app.set_version_flag("--version", lieb_version());

  std::string format_name = "text";
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string check_file;
  auto* check = app.add_subcommand(
      "check", "Lie and Leibniz identity verdicts with witnesses");
  check->fallthrough();
  check->add_option("file", check_file, "algebra file")->required();

  std::string inv_file;
  auto* inv = app.add_subcommand(
      "invariants", "series, center and derivation dimensions");
  inv->fallthrough();
  inv->add_option("file", inv_file, "algebra file")->required();

  std::string coh_file;
  std::string theory;
  std::string coeff = "adjoint";
  unsigned degree = 0;
  auto* coh = app.add_subcommand("cohom", "one cohomology dimension");
  coh->fallthrough();
  coh->add_option("file", coh_file, "algebra file")->required();
  coh->add_option("--theory", theory, "lie or leibniz")
      ->required()
      ->check(CLI::IsMember({"lie", "leibniz"}));
  coh->add_option("--coeff", coeff, "adjoint or trivial")
      ->check(CLI::IsMember({"adjoint", "trivial"}))
      ->capture_default_str();
  coh->add_option("--degree", degree, "cohomological degree")
      ->required()
      ->check(CLI::Range(0u, 3u));

  std::string rig_file;
  auto* rig =
      app.add_subcommand("rigidity", "cohomological rigidity report");
  rig->fallthrough();
  rig->add_option("file", rig_file, "algebra file")->required();

  std::string con_file;
  std::string weights_text;
  std::string path_file;
  auto* con =
      app.add_subcommand("contract", "contraction limit along t -> 0");
  con->fallthrough();
  con->add_option("file", con_file, "algebra file")->required();
  auto* wopt = con->add_option("--weights", weights_text,
                               "comma-separated integer exponents a_i for "
                               "g_t = diag(t^a_1, .., t^a_d)");
  auto* popt = con->add_option(
      "--path", path_file, "path file with an invertible matrix over Q(t)");
  wopt->excludes(popt);
  popt->excludes(wopt);

  std::string scr_source;
  std::string scr_target;
  auto* scr = app.add_subcommand(
      "screen", "necessary-condition screen for degeneration candidates");
  scr->fallthrough();
  scr->add_option("source", scr_source, "source algebra file")->required();
  scr->add_option("target", scr_target, "target algebra file")->required();

  auto* cat = app.add_subcommand("catalog", "built-in algebra families");
  cat->fallthrough();
  cat->require_subcommand(1);
  auto* cat_list =
      cat->add_subcommand("list", "entries and reference counts");
  cat_list->fallthrough();
  std::string show_name;
  std::vector<long> show_params;
  bool show_export = false;
  auto* cat_show = cat->add_subcommand("show", "one catalog instance");
  cat_show->fallthrough();
  cat_show->add_option("name", show_name, "entry name")->required();
  cat_show->add_option("params", show_params, "integer parameters");
  cat_show->add_flag("--export", show_export,
                     "print the algebra file instead of a report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "USAGE msg=\"" << e.what() << "\"\n";
    return 2;
  }

  lieb_format fmt =
      format_name == "json" ? LIEB_FORMAT_JSON : LIEB_FORMAT_TEXT;
  char* out = nullptr;
  char* err = nullptr;

  if (check->parsed()) {
    AlgebraPtr a;
    if (int rc = load_algebra(check_file, a)) return rc;
    lieb_status st = lieb_check(a.get(), fmt, &out, &err);
    return finish(st, out, err);
  }

  if (inv->parsed()) {
    AlgebraPtr a;
    if (int rc = load_algebra(inv_file, a)) return rc;
    lieb_status st = lieb_invariants(a.get(), fmt, &out, &err);
    return finish(st, out, err);
  }

  if (coh->parsed()) {
    if (theory == "lie" && coeff == "trivial")
      usage_fail("--theory lie supports --coeff adjoint only");
    if (theory == "lie" && degree > 2)
      usage_fail("--theory lie supports --degree 0..2");
    AlgebraPtr a;
    if (int rc = load_algebra(coh_file, a)) return rc;
    lieb_theory th = theory == "lie" ? LIEB_THEORY_LIE : LIEB_THEORY_LEIBNIZ;
    lieb_coefficients cf =
        coeff == "adjoint" ? LIEB_COEFF_ADJOINT : LIEB_COEFF_TRIVIAL;
    lieb_status st = lieb_cohomology(a.get(), th, cf, degree, fmt, &out, &err);
    return finish(st, out, err);
  }

  if (rig->parsed()) {
    AlgebraPtr a;
    if (int rc = load_algebra(rig_file, a)) return rc;
    lieb_status st = lieb_rigidity(a.get(), fmt, &out, &err);
    return finish(st, out, err);
  }

  if (con->parsed()) {
    bool have_w = wopt->count() > 0;
    bool have_p = popt->count() > 0;
    if (have_w == have_p)
      usage_fail("contract requires exactly one of --weights or --path");
    AlgebraPtr a;
    if (int rc = load_algebra(con_file, a)) return rc;
    if (have_w) {
      std::vector<long> weights = parse_weights(weights_text);
      lieb_status st = lieb_contract_weights(a.get(), weights.data(),
                                             weights.size(), fmt, &out, &err);
      return finish(st, out, err);
    }
    auto bytes = read_file(path_file);
    if (!bytes) {
      std::cerr << "PARSE_ERROR locus=" << path_file
                << " msg=\"cannot read file\"\n";
      return 2;
    }
    lieb_status st = lieb_contract_path(a.get(), bytes->data(), bytes->size(),
                                        fmt, &out, &err);
    return finish(st, out, err);
  }

  if (scr->parsed()) {
    AlgebraPtr source;
    AlgebraPtr target;
    if (int rc = load_algebra(scr_source, source)) return rc;
    if (int rc = load_algebra(scr_target, target)) return rc;
    lieb_status st = lieb_screen(source.get(), target.get(), fmt, &out, &err);
    return finish(st, out, err);
  }

  if (cat_list->parsed()) {
    lieb_status st = lieb_catalog_list(fmt, &out, &err);
    return finish(st, out, err);
  }

  if (cat_show->parsed()) {
    lieb_status st = lieb_catalog_show(show_name.c_str(), show_params.data(),
                                       show_params.size(), show_export ? 1 : 0,
                                       fmt, &out, &err);
    return finish(st, out, err);
  }

  usage_fail("missing subcommand");
}
