#include "polycount/rational.hpp"

#include <stdexcept>

namespace polycount {

Rat make_rat(long n, long d) {
  if (d == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat x(n, d);
  x.canonicalize();
  return x;
}

Rat make_rat(const Int& n, const Int& d) {
  if (d == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat x(n);
  x /= Rat(d);
  return x;
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw std::invalid_argument("rat_pow: 0^negative");
    return Rat(0);
  }
  const auto a = static_cast<unsigned long>(e < 0 ? -e : e);
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), a);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), a);
  if (e < 0) r = 1 / r;
  return r;
}

bool is_integer(const Rat& x) { return x.get_den() == 1; }

std::string rat_str(const Rat& x) { return x.get_str(); }

std::string rat_str_slash(const Rat& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace polycount
