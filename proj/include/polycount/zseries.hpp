#pragma once

#include <vector>

#include "polycount/qpoly.hpp"

namespace polycount {

/// Truncated power series in z with QPoly coefficients, exact modulo
/// z^{trunc+1}. The truncation is fixed at construction; arithmetic on
/// mixed truncations is rejected rather than coerced.
class ZSeries {
 public:
  explicit ZSeries(long trunc);
  ZSeries(long trunc, std::vector<QPoly> coeffs);

  long trunc() const { return trunc_; }
  const QPoly& coeff(long i) const;
  void set_coeff(long i, QPoly value);

  bool operator==(const ZSeries&) const = default;

  friend ZSeries operator+(const ZSeries& a, const ZSeries& b);
  friend ZSeries operator-(const ZSeries& a, const ZSeries& b);
  /// Truncated Cauchy product; truncations must agree.
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
  ZSeries scaled(const Rat& c) const;
  /// z -> z^k, k >= 1; indices beyond the truncation are dropped.
  ZSeries subst_zpow(long k) const;

 private:
  long trunc_ = 0;
  std::vector<QPoly> c_;
  static void check_same_trunc(const ZSeries& a, const ZSeries& b);
};

/// log of a series with constant term 1, by the exact recurrence from
/// a*(log a)' = a'; every division is by a positive integer index.
ZSeries log1(const ZSeries& a);

/// Moebius function by trial factorization, k >= 1.
int mobius(long k);

}  // namespace polycount
