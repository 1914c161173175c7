#pragma once

#include <string>
#include <vector>

#include "polycount/rational.hpp"

namespace polycount {

/// Exact polynomial in the field-size symbol q. Coefficients are
/// arbitrary-precision rationals, stored dense in ascending degree; the
/// zero polynomial is the empty vector and the top coefficient is never
/// zero otherwise. All operations are exact.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs);
  QPoly(long constant);  // NOLINT: implicit for readable arithmetic
  explicit QPoly(const Rat& constant);

  static QPoly zero() { return QPoly(); }
  static QPoly one() { return QPoly(1); }
  /// c * q^exp
  static QPoly monomial(long exp, const Rat& c = Rat(1));

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of q^i (zero beyond the degree).
  const Rat& coeff(long i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  bool operator==(const QPoly&) const = default;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;

  /// Every coefficient multiplied by c.
  QPoly scaled(const Rat& c) const;
  /// Exact Horner evaluation at q0.
  Rat eval(const Rat& q0) const;
  /// q -> q^k, k >= 1.
  QPoly subst_pow(long k) const;

  /// Descending-power rendering with a single trailing "/den" when the
  /// coefficients share a denominator, e.g. "(q^4+2q^3+2q^2+q)/2".
  std::string str() const;

  /// LCM of all coefficient denominators (1 for the zero polynomial).
  Int common_den() const;
  /// Coefficients scaled by common_den(), ascending degree.
  std::vector<Int> scaled_int_coeffs() const;

 private:
  std::vector<Rat> c_;
  void normalize();
};

/// a*(a-1)*...*(a-j+1); the empty product 1 for j = 0.
QPoly falling_factorial(const QPoly& a, long j);

}  // namespace polycount
