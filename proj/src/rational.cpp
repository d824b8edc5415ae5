#include "lieb/rational.hpp"

#include <cctype>
#include <ostream>

#include "lieb/errors.hpp"

namespace lieb {

Rat::Rat(long num, long den) {
  if (den == 0) throw InternalError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw InternalError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

// Grammar: ^-?[0-9]+(/[1-9][0-9]*)?$
Rat Rat::from_decimal_string(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && s[0] == '-') {
    negative = true;
    s.erase(0, 1);
  }
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (den.empty() || den[0] == '0')
      throw ParseError("rational", "bad denominator in \"" + text + "\"");
  }
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("rational", "not a rational literal: \"" + text + "\"");
  mpq_class v{mpz_class(num), mpz_class(den)};
  v.canonicalize();
  if (negative) v = -v;
  return Rat(v);
}

std::string Rat::str() const {
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace lieb
