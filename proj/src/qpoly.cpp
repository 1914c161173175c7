#include "polycount/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace polycount {

namespace {
const Rat kZero(0);
}

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

QPoly::QPoly(long constant) {
  if (constant != 0) c_.emplace_back(constant);
}

QPoly::QPoly(const Rat& constant) {
  if (constant != 0) c_.push_back(constant);
}

QPoly QPoly::monomial(long exp, const Rat& c) {
  if (exp < 0) throw std::invalid_argument("QPoly::monomial: negative exponent");
  if (c == 0) return QPoly();
  std::vector<Rat> v(static_cast<size_t>(exp) + 1, Rat(0));
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& QPoly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return QPoly(std::move(out));
}

QPoly QPoly::operator-() const {
  QPoly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly QPoly::scaled(const Rat& c) const {
  if (c == 0) return QPoly();
  QPoly r(*this);
  for (auto& x : r.c_) x *= c;
  return r;
}

Rat QPoly::eval(const Rat& q0) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) {
    acc *= q0;
    acc += c_[i];
  }
  return acc;
}

QPoly QPoly::subst_pow(long k) const {
  if (k < 1) throw std::invalid_argument("QPoly::subst_pow: k must be >= 1");
  if (k == 1 || is_zero()) return *this;
  std::vector<Rat> out(static_cast<size_t>(degree()) * k + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i * k] = c_[i];
  return QPoly(std::move(out));
}

Int QPoly::common_den() const {
  Int den(1);
  for (const auto& x : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  return den;
}

std::vector<Int> QPoly::scaled_int_coeffs() const {
  const Int den = common_den();
  std::vector<Int> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(x.get_num() * (den / x.get_den()));
  return out;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  const Int den = common_den();
  const std::vector<Int> n = scaled_int_coeffs();
  std::ostringstream os;
  bool first = true;
  for (size_t i = n.size(); i-- > 0;) {
    if (n[i] == 0) continue;
    const bool neg = n[i] < 0;
    Int mag = abs(n[i]);
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? '-' : '+');
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 2)
      os << "q^" << i;
    else if (i == 1)
      os << 'q';
  }
  if (den == 1) return os.str();
  return "(" + os.str() + ")/" + den.get_str();
}

QPoly falling_factorial(const QPoly& a, long j) {
  if (j < 0) throw std::invalid_argument("falling_factorial: j must be >= 0");
  QPoly r = QPoly::one();
  QPoly term = a;
  for (long t = 0; t < j; ++t) {
    r = r * term;
    term -= QPoly::one();
  }
  return r;
}

}  // namespace polycount
