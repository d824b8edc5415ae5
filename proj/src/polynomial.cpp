#include "lieb/polynomial.hpp"

#include <sstream>

#include "lieb/errors.hpp"

namespace lieb {

namespace {
const Rat kZero;
}

UniPoly::UniPoly(const Rat& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::t() { return monomial(Rat(1), 1); }

UniPoly UniPoly::monomial(const Rat& c, std::size_t k) {
  if (c.is_zero()) return UniPoly();
  std::vector<Rat> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rat& UniPoly::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : kZero;
}

const Rat& UniPoly::leading() const {
  if (is_zero()) throw InternalError("leading coefficient of zero polynomial");
  return c_.back();
}

std::size_t UniPoly::order_at_zero() const {
  if (is_zero()) throw ZeroFunctionError();
  std::size_t k = 0;
  while (c_[k].is_zero()) ++k;
  return k;
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      v[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(v));
}

UniPoly operator*(const Rat& c, const UniPoly& p) {
  if (c.is_zero()) return UniPoly();
  UniPoly r(p);
  for (auto& x : r.c_) x *= c;
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a,
                                            const UniPoly& b) {
  if (b.is_zero()) throw InternalError("polynomial division by zero");
  UniPoly rem(a);
  if (a.degree() < b.degree()) return {UniPoly(), rem};
  std::vector<Rat> q(a.c_.size() - b.c_.size() + 1);
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    std::size_t shift = rem.c_.size() - b.c_.size();
    Rat f = rem.leading() / b.leading();
    q[shift] = f;
    rem -= monomial(f, shift) * b;
  }
  return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (Rat(1) / a.leading()) * a;
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rat& c = c_[k];
    if (c.is_zero()) continue;
    Rat mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = mag == Rat(1);
    if (k == 0) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace lieb
