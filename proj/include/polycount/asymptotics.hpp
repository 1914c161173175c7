#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycount/counts.hpp"

namespace polycount {

bool is_prime(long n);
long smallest_prime_factor(long n);
/// q = p^k for a prime p, k >= 1.
bool is_prime_power(long q);

/// deg(P_k * P_{n-k}) = b_{r,k} + b_{r,n-k} - 2.
Int u_exp(int r, long n, long k);
/// Real-argument extension via falling factorials, exact in rationals.
Rat u_exp_rat(int r, long n, const Rat& k);
/// deg(P_k * P_{n-sk}) = b_{r,k} + b_{r,n-sk} - 2, for 1 <= k <= n/s.
Int v_exp(int r, long n, int s, long k);
/// deg(P_{n/k}(q^k)) = k (b_{r,n/k} - 1), for k | n.
Int w_exp(int r, long n, long k);

/// Main term for the reducible count: q^{b_{r,n-1}+r-1} (1-q^-r)/(1-q^-1)^2.
Rat rho(int r, long n, const Rat& q);
/// Main term for the s-powerful count.
Rat eta(int r, long n, int s, const Rat& q);
/// Main term for the relatively irreducible count; l is the smallest
/// prime divisor of n.
Rat epsilon_main(int r, long n, const Rat& q);

/// b_{r,n-s} - b_{r,n-2s} - r(r+1)/2: the value of v(1) - v(2), the
/// provable second-order exponent of the Q deviation.
Int delta_main(int r, long n, int s);
/// Same binomials minus r(r-1)/2; exceeds delta_main by exactly r. A
/// documented alternative form, kept so sweeps can record which of the
/// two inequalities holds empirically.
Int delta_alt(int r, long n, int s);

struct SmallestDivisors {
  long l = 0;                 // smallest prime factor
  std::optional<long> k0;     // second smallest divisor > 1; absent for primes
};
SmallestDivisors smallest_divisors(long n);

/// l(b_{r,n/l-1}-1) - k0(b_{r,n/k0}-1) - n/6 + 1 for composite n; exact
/// rational (integral whenever 6 | n).
Rat omega(int r, long n);

enum class Family { R, Q, E, I };
std::string family_name(Family f);

/// One bound evaluation: pass iff |exact - approx| <= bound, all exact
/// rationals; margin = bound - |exact - approx|.
struct BoundCheck {
  Family family = Family::R;
  int r = 2;
  long n = 1;
  std::optional<int> s;
  long q = 2;
  Rat approx, exact, bound;
  bool pass = false;
  Rat margin;
};

BoundCheck make_bound_check(Family f, int r, long n, std::optional<int> s, long q,
                            Rat approx, Rat exact, Rat bound);

enum class QDelta { main, alt };

/// n = 2: equality with rho/2 (1 - q^{-(r+1)}); n = 3: rho * 2 q^{-r(r-1)/2};
/// n >= 4: rho * 3 q^{-b_{r-1,n-1}+r(r+1)/2}.
BoundCheck check_R_bound(int r, long n, long q, const Rat& exact_R);
/// (n,s) = (6,2): eta * 3 q^{-C(r+3,4)-r+1}; otherwise eta * 6 q^{-delta}.
/// Defaults to delta_main (the provable variant); the sweep output
/// records the empirical behaviour of the alternative.
BoundCheck check_Q_bound(int r, long n, int s, long q, const Rat& exact_Q,
                         QDelta variant = QDelta::main);
/// Prime n: exact equality with the corrected main term. n = 4:
/// eps * q^{-(r^2+3r-6)/2}. n = 6: eps * max(2 q^{-e_up}, q^{-e_lb}) with
/// e_up = 2(b_{r,3}-1)-3(b_{r,2}-1), e_lb = b_{r-1,3}-r. Other composite:
/// eps * 2 q^{-l(b_{r-1,n/l}-r)}.
BoundCheck check_E_bound(int r, long n, long q, const Rat& exact_E);
/// One-sided: pass iff exact_I >= P_n(q) - 2 rho. Encoded as the
/// equivalent two-sided check |I - (P - rho)| <= rho (I <= P always).
BoundCheck check_I_lower(int r, long n, long q, const Rat& exact_I);

struct SweepSpec {
  std::vector<Family> families{Family::R, Family::Q, Family::E, Family::I};
  std::vector<int> rs{2, 3};
  std::vector<long> ns{2, 3, 4, 5, 6};
  std::vector<int> ss{2, 3};
  std::vector<long> qs{2, 3, 4, 5, 7, 8, 9};
  QDelta q_variant = QDelta::main;
};

/// Exhaustive grid evaluation with exact engine counts, deterministic
/// order (family, r, n, s, q). Rejects non-prime-power q.
std::vector<BoundCheck> sweep(const SweepSpec& spec);
bool all_pass(const std::vector<BoundCheck>& checks);

/// Non-assertive second-order diagnostics: the ratio of the observed
/// relative deviation to the predicted second-order term, which should
/// trend toward 1 as q grows. The higher-order factors carry no explicit
/// constants, so this is a report, not a check.
struct DiagnosticRow {
  Family family = Family::R;
  int r = 2;
  long n = 1;
  std::optional<int> s;
  long q = 2;
  Rat ratio;
};
std::vector<DiagnosticRow> second_order_diagnostics(const std::vector<long>& qs);

}  // namespace polycount
