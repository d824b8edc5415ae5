#ifndef LIEB_POLYNOMIAL_HPP
#define LIEB_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lieb/rational.hpp"

namespace lieb {

// Univariate polynomial in t over Rat, dense coefficient vector with no
// trailing zeros (the zero polynomial has an empty vector).
class UniPoly {
public:
  UniPoly() = default;
  UniPoly(const Rat& c);  // NOLINT: implicit constant embedding
  UniPoly(long c) : UniPoly(Rat(c)) {}
  explicit UniPoly(std::vector<Rat> coeffs);

  static UniPoly t();
  // c * t^k
  static UniPoly monomial(const Rat& c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  // coefficient of t^k, zero beyond the degree
  const Rat& coeff(std::size_t k) const;
  const Rat& leading() const;
  // multiplicity of the root t = 0; polynomial must be nonzero
  std::size_t order_at_zero() const;

  Rat eval(const Rat& x) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rat& c, const UniPoly& p);

  // quotient and remainder; divisor must be nonzero
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a,
                                            const UniPoly& b);
  // monic gcd; gcd(0, 0) = 0
  static UniPoly gcd(UniPoly a, UniPoly b);

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }

  // Human- and parser-readable, e.g. "t^2 - 1/2*t + 3".
  std::string str() const;

private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace lieb

#endif
