#include "lieb/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "io_internal.hpp"

namespace lieb {

using nlohmann::json;

namespace {

std::string item_locus(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

const json& require_field(const json& obj, const char* key,
                          const std::string& locus) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw ParseError(locus, std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const json& v, const std::string& locus) {
  if (!v.is_string()) throw ParseError(locus, "expected a string");
  return v.get<std::string>();
}

}  // namespace

StructureConstants parse_algebra(const std::string& bytes) {
  json root;
  try {
    root = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError("json", e.what());
  }
  if (!root.is_object()) throw ParseError("json", "expected a JSON object");
  static const std::set<std::string> known = {"name", "dim", "basis",
                                              "skew_complete", "products"};
  for (const auto& [key, value] : root.items())
    if (!known.count(key)) throw ParseError(key, "unknown field");

  const json& jdim = require_field(root, "dim", "dim");
  if (!jdim.is_number_unsigned() || jdim.get<std::size_t>() < 1)
    throw ParseError("dim", "expected an integer >= 1");
  std::size_t dim = jdim.get<std::size_t>();

  const json& jbasis = require_field(root, "basis", "basis");
  if (!jbasis.is_array() || jbasis.size() != dim)
    throw ParseError("basis", "expected an array of dim labels");
  StructureConstants a;
  a.dim = dim;
  std::map<std::string, std::size_t> label_index;
  for (std::size_t i = 0; i < dim; ++i) {
    std::string label = require_string(jbasis[i], item_locus("basis", i));
    if (label.empty())
      throw ParseError(item_locus("basis", i), "empty label");
    if (!label_index.emplace(label, i).second)
      throw ParseError(item_locus("basis", i),
                       "duplicate label \"" + label + "\"");
    a.basis_names.push_back(label);
  }

  if (auto it = root.find("name"); it != root.end())
    a.name = require_string(*it, "name");

  bool skew = false;
  if (auto it = root.find("skew_complete"); it != root.end()) {
    if (!it->is_boolean())
      throw ParseError("skew_complete", "expected a boolean");
    skew = it->get<bool>();
  }

  if (auto it = root.find("products"); it != root.end()) {
    if (!it->is_array()) throw ParseError("products", "expected an array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    auto lookup = [&](const std::string& label, const std::string& locus) {
      auto found = label_index.find(label);
      if (found == label_index.end()) throw UnknownLabelError(label, locus);
      return found->second;
    };
    for (std::size_t r = 0; r < it->size(); ++r) {
      const std::string locus = item_locus("products", r);
      const json& rec = (*it)[r];
      if (!rec.is_object()) throw ParseError(locus, "expected an object");
      for (const auto& [key, value] : rec.items())
        if (key != "left" && key != "right" && key != "out")
          throw ParseError(locus + "." + key, "unknown field");
      std::string left =
          require_string(require_field(rec, "left", locus), locus + ".left");
      std::string right =
          require_string(require_field(rec, "right", locus), locus + ".right");
      std::size_t i = lookup(left, locus + ".left");
      std::size_t j = lookup(right, locus + ".right");
      const json& out = require_field(rec, "out", locus);
      if (!out.is_object())
        throw ParseError(locus + ".out", "expected an object");
      std::vector<Rat> coeffs(dim);
      for (const auto& [label, value] : out.items()) {
        std::size_t k = lookup(label, locus + ".out");
        std::string text = require_string(value, locus + ".out." + label);
        try {
          coeffs[k] = Rat::from_decimal_string(text);
        } catch (const ParseError&) {
          throw ParseError(locus + ".out." + label,
                           "not a rational literal: \"" + text + "\"");
        }
      }
      if (!seen.insert({i, j}).second)
        throw DuplicateProductError(left, right);
      a.set_product(i, j, coeffs);
      if (skew && i < j) {
        if (!seen.insert({j, i}).second)
          throw DuplicateProductError(right, left);
        for (auto& c : coeffs) c = -c;
        a.set_product(j, i, std::move(coeffs));
      }
    }
  }
  return a;
}

namespace {

bool table_is_antisymmetric(const StructureConstants& a) {
  for (const auto& [ij, coeffs] : a.table) {
    const auto* mirror = a.product(ij.second, ij.first);
    for (std::size_t k = 0; k < a.dim; ++k) {
      Rat s = coeffs[k];
      if (mirror) s += (*mirror)[k];
      if (!s.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

json algebra_to_json(const StructureConstants& a) {
  json j;
  j["dim"] = a.dim;
  j["basis"] = a.basis_names;
  if (!a.name.empty()) j["name"] = a.name;
  bool skew = table_is_antisymmetric(a);
  j["skew_complete"] = skew;
  json products = json::array();
  for (const auto& [ij, coeffs] : a.table) {
    if (skew && ij.first >= ij.second) continue;
    json out;
    for (std::size_t k = 0; k < a.dim; ++k)
      if (!coeffs[k].is_zero()) out[a.basis_names[k]] = coeffs[k].str();
    products.push_back({{"left", a.basis_names[ij.first]},
                        {"right", a.basis_names[ij.second]},
                        {"out", out}});
  }
  j["products"] = products;
  return j;
}

std::string render_algebra(const StructureConstants& a) {
  return algebra_to_json(a).dump(2) + "\n";
}

namespace {

// recursive-descent parser for the Q(t) expression grammar
class FuncParser {
public:
  FuncParser(const std::string& text, const std::string& locus)
      : s_(text), locus_(locus) {}

  RatFunc parse() {
    RatFunc v = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(locus_, message + " at offset " + std::to_string(pos_) +
                                 " in \"" + s_ + "\"");
  }

  void skip_space() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc v = eat('-') ? -term() : term();
    while (true) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  RatFunc term() {
    RatFunc v = factor();
    while (true) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        RatFunc d = factor();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  RatFunc factor() {
    if (eat('-')) return -factor();
    RatFunc base = atom();
    if (eat('^')) {
      unsigned long e = integer("exponent");
      RatFunc v(Rat(1));
      for (unsigned long i = 0; i < e; ++i) v *= base;
      return v;
    }
    return base;
  }

  RatFunc atom() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 't') {
      ++pos_;
      return RatFunc::t();
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return RatFunc(Rat(mpq_class(mpz_class(digits()), 1)));
    fail("expected a number, 't', or '('");
  }

  unsigned long integer(const char* what) {
    skip_space();
    if (pos_ >= s_.size() ||
        !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail(std::string("expected an integer ") + what);
    std::string d = digits();
    if (d.size() > 4) fail(std::string("oversized ") + what);
    return std::stoul(d);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  const std::string& s_;
  std::string locus_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text, const std::string& locus) {
  return FuncParser(text, locus).parse();
}

FuncMatrix parse_path_file(const std::string& bytes) {
  json root;
  try {
    root = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError("json", e.what());
  }
  if (!root.is_object()) throw ParseError("json", "expected a JSON object");
  for (const auto& [key, value] : root.items())
    if (key != "matrix") throw ParseError(key, "unknown field");
  const json& m = require_field(root, "matrix", "matrix");
  if (!m.is_array() || m.empty())
    throw ParseError("matrix", "expected a non-empty array of rows");
  std::size_t n = m.size();
  FuncMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_locus = item_locus("matrix", i);
    if (!m[i].is_array() || m[i].size() != n)
      throw ParseError(row_locus, "expected a row of " + std::to_string(n) +
                                      " entries (matrix must be square)");
    for (std::size_t j = 0; j < n; ++j) {
      const std::string locus = item_locus(row_locus, j);
      g(i, j) = parse_ratfunc(require_string(m[i][j], locus), locus);
    }
  }
  return g;
}

}  // namespace lieb
