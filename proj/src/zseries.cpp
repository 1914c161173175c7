#include "polycount/zseries.hpp"

#include <stdexcept>

namespace polycount {

ZSeries::ZSeries(long trunc) : trunc_(trunc) {
  if (trunc < 0) throw std::invalid_argument("ZSeries: negative truncation");
  c_.assign(static_cast<size_t>(trunc) + 1, QPoly());
}

ZSeries::ZSeries(long trunc, std::vector<QPoly> coeffs) : ZSeries(trunc) {
  if (coeffs.size() > c_.size())
    throw std::invalid_argument("ZSeries: more coefficients than truncation allows");
  for (size_t i = 0; i < coeffs.size(); ++i) c_[i] = std::move(coeffs[i]);
}

const QPoly& ZSeries::coeff(long i) const {
  if (i < 0 || i > trunc_) throw std::out_of_range("ZSeries::coeff: index beyond truncation");
  return c_[static_cast<size_t>(i)];
}

void ZSeries::set_coeff(long i, QPoly value) {
  if (i < 0 || i > trunc_) throw std::out_of_range("ZSeries::set_coeff: index beyond truncation");
  c_[static_cast<size_t>(i)] = std::move(value);
}

void ZSeries::check_same_trunc(const ZSeries& a, const ZSeries& b) {
  if (a.trunc_ != b.trunc_) throw std::invalid_argument("ZSeries: truncation mismatch");
}

ZSeries operator+(const ZSeries& a, const ZSeries& b) {
  ZSeries::check_same_trunc(a, b);
  ZSeries r(a.trunc_);
  for (long i = 0; i <= a.trunc_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

ZSeries operator-(const ZSeries& a, const ZSeries& b) {
  ZSeries::check_same_trunc(a, b);
  ZSeries r(a.trunc_);
  for (long i = 0; i <= a.trunc_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
  ZSeries::check_same_trunc(a, b);
  ZSeries r(a.trunc_);
  for (long i = 0; i <= a.trunc_; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (long j = 0; i + j <= a.trunc_; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

ZSeries ZSeries::scaled(const Rat& c) const {
  ZSeries r(trunc_);
  for (long i = 0; i <= trunc_; ++i) r.c_[i] = c_[i].scaled(c);
  return r;
}

ZSeries ZSeries::subst_zpow(long k) const {
  if (k < 1) throw std::invalid_argument("ZSeries::subst_zpow: k must be >= 1");
  ZSeries r(trunc_);
  for (long i = 0; i * k <= trunc_; ++i) r.c_[i * k] = c_[i];
  return r;
}

ZSeries log1(const ZSeries& a) {
  if (a.coeff(0) != QPoly::one())
    throw std::invalid_argument("log1: constant term must be 1");
  const long t = a.trunc();
  ZSeries l(t);
  // (i+1) a_{i+1} = sum_{j=0..i} a_j (i-j+1) L_{i-j+1}, a_0 = 1
  for (long i = 0; i + 1 <= t; ++i) {
    QPoly acc;
    for (long j = 1; j <= i; ++j) {
      if (a.coeff(j).is_zero()) continue;
      acc += (a.coeff(j) * l.coeff(i - j + 1)).scaled(Rat(i - j + 1));
    }
    l.set_coeff(i + 1, a.coeff(i + 1) - acc.scaled(make_rat(1, i + 1)));
  }
  return l;
}

int mobius(long k) {
  if (k < 1) throw std::invalid_argument("mobius: k must be >= 1");
  int sign = 1;
  for (long p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      k /= p;
      if (k % p == 0) return 0;
      sign = -sign;
    }
  }
  if (k > 1) sign = -sign;
  return sign;
}

}  // namespace polycount
