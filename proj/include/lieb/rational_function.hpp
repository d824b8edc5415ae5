#ifndef LIEB_RATIONAL_FUNCTION_HPP
#define LIEB_RATIONAL_FUNCTION_HPP

#include <string>

#include "lieb/polynomial.hpp"
#include "lieb/rational.hpp"

namespace lieb {

// Element of Q(t): a reduced fraction of polynomials with monic
// denominator.  Reduction happens on construction and after every
// arithmetic operation, so representations are unique.
class RatFunc {
public:
  RatFunc() : den_(Rat(1)) {}
  RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rat(c)) {}              // NOLINT
  RatFunc(const UniPoly& p) : num_(p), den_(Rat(1)) {}  // NOLINT
  RatFunc(UniPoly num, UniPoly den);

  static RatFunc t() { return RatFunc(UniPoly::t()); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Value at t = 0; throws PoleAtZeroError when the denominator vanishes
  // there (the fraction being reduced, the numerator then does not).
  Rat eval_at_zero() const;

  // ord_{t=0}(den) - ord_{t=0}(num): positive for a pole, negative for a
  // zero, 0 when the value at t = 0 is finite and nonzero.  Throws
  // ZeroFunctionError on the zero function.
  long pole_order_at_zero() const;

  // Parser-compatible rendering: "num" or "(num)/(den)".
  std::string str() const;

private:
  void reduce();
  UniPoly num_, den_;
};

}  // namespace lieb

#endif
