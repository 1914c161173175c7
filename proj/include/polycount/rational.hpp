#pragma once

#include <gmpxx.h>

#include <string>

namespace polycount {

using Int = mpz_class;
using Rat = mpq_class;

// n/d in canonical form; d must be nonzero.
Rat make_rat(long n, long d);
Rat make_rat(const Int& n, const Int& d);

// base^e with exact inversion for negative e; base must be nonzero when e < 0.
Rat rat_pow(const Rat& base, long e);
Int int_pow(const Int& base, unsigned long e);

bool is_integer(const Rat& x);

// "n" or "n/d".
std::string rat_str(const Rat& x);
// always "n/d" (CSV cell format).
std::string rat_str_slash(const Rat& x);

}  // namespace polycount
