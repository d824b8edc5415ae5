#include "lieb/rational_function.hpp"

#include <utility>

#include "lieb/errors.hpp"

namespace lieb {

RatFunc::RatFunc(UniPoly num, UniPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InternalError("rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = UniPoly(Rat(1));
    return;
  }
  UniPoly g = UniPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = UniPoly::divmod(num_, g).first;
    den_ = UniPoly::divmod(den_, g).first;
  }
  Rat lead = den_.leading();
  if (lead != Rat(1)) {
    Rat inv = Rat(1) / lead;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw InternalError("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw InternalError("rational function division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  reduce();
  return *this;
}

Rat RatFunc::eval_at_zero() const {
  if (den_.coeff(0).is_zero())
    throw PoleAtZeroError(static_cast<long>(den_.order_at_zero()));
  return num_.coeff(0) / den_.coeff(0);
}

long RatFunc::pole_order_at_zero() const {
  if (is_zero()) throw ZeroFunctionError();
  return static_cast<long>(den_.order_at_zero()) -
         static_cast<long>(num_.order_at_zero());
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace lieb
