#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polycount/zseries.hpp"

namespace polycount {

/// Problem parameters: r variables, counts up to total degree nmax,
/// optional power s for the Q-counts.
struct Params {
  int r = 2;
  int nmax = 1;
  std::optional<int> s;

  void validate() const;
};

/// b_{r,n} = C(r+n, r); zero for n < 0 (the space of degree-<n polynomials
/// is empty, matching P_m = 0 for m < 0).
Int binom_b(int r, long n);

/// Number of monic polynomials in r >= 2 variables of total degree n,
/// as a polynomial in q: sum_{i=0}^{b_{r-1,n}-1} q^{b_{r,n}-1-i}.
QPoly count_all(int r, long n);

/// Generating series of count_all up to z^nmax.
ZSeries series_all(const Params& params);

/// I-series via Moebius inversion: sum_{k>=1} mu(k)/k * log P(z^k).
ZSeries series_irreducible(const Params& params);

/// S-series of s-powerfree counts, from P = S * P(z^s) degree by degree.
ZSeries series_powerfree(const Params& params);

/// Counting engine with per-degree caching. Pure value semantics: every
/// accessor returns exact polynomials derived from Params alone.
class CountEngine {
 public:
  explicit CountEngine(Params params);

  const Params& params() const { return params_; }
  const QPoly& all(int n) const;           // P_n
  const QPoly& irreducible(int n) const;   // I_n
  QPoly reducible(int n) const;            // R_n = P_n - I_n, 1 <= n
  const QPoly& powerfree(int s, int n) const;  // S_n
  QPoly powerful(int s, int n) const;      // Q_{n,s} = P_n - S_n
  QPoly abs_irreducible(int n) const;      // A_n, 1 <= n
  QPoly rel_irreducible(int n) const;      // E_n = I_n - A_n, 1 <= n

 private:
  Params params_;
  std::vector<QPoly> p_;
  std::vector<QPoly> i_;
  mutable std::map<int, std::vector<QPoly>> s_free_;
};

QPoly count_reducible(const Params& params, int n);
QPoly count_powerful(const Params& params, int n);
QPoly count_abs_irreducible(const Params& params, int n);
QPoly count_rel_irreducible(const Params& params, int n);

/// All partitions of n, parts descending, in reverse-lexicographic order.
std::vector<std::vector<long>> enumerate_partitions(long n);
/// Concise notation: the parts concatenated, e.g. {2,1,1} -> "211".
std::string partition_concise(const std::vector<long>& parts);

/// A factorization pattern (m : e, #d): for each factor degree m, how many
/// distinct irreducible factors (d) occur with each multiplicity (e).
struct FactorPattern {
  struct Pair {
    long mult;   // e
    long count;  // d
    bool operator==(const Pair&) const = default;
  };
  struct Group {
    long deg;  // m
    std::vector<Pair> pairs;
    bool operator==(const Group&) const = default;
  };
  std::vector<Group> groups;  // ascending deg; pairs ascending mult

  long degree() const;  // sum_i m_i sum_j e_ij d_ij
  std::string str() const;
  bool operator==(const FactorPattern&) const = default;
};

/// Every pattern of total degree n except the irreducible one (n : 1, #1),
/// each exactly once, in a fixed deterministic order.
std::vector<FactorPattern> enumerate_patterns(long n);

/// prod_i multinomial(I_{m_i}; d_{i1},...,d_{is_i}) as a symbolic
/// polynomial, with irreducible_by_degree[m] = I_m for every m appearing.
QPoly count_with_pattern(const FactorPattern& pattern,
                         const std::vector<QPoly>& irreducible_by_degree);

/// The factorization-pattern route, bootstrapped independently of the
/// generating functions: R_1 = 0 and I_m = P_m - R_m degree by degree,
/// with R_m the sum of count_with_pattern over enumerate_patterns(m).
class PatternEngine {
 public:
  PatternEngine(int r, int nmax);
  const QPoly& reducible(int n) const;    // 1 <= n <= nmax
  const QPoly& irreducible(int n) const;  // 1 <= n <= nmax

 private:
  std::vector<QPoly> r_, i_;
};

QPoly count_reducible_by_patterns(const Params& params, int n);

/// Bundle of symbolic counts for fixed (r, nmax); which optional families
/// are present follows the requested family set.
struct CountReport {
  struct Row {
    int n = 0;
    QPoly P, I, R;
    std::optional<QPoly> S, Q, A, E;
  };
  int r = 2;
  std::optional<int> s;
  std::vector<Row> rows;
};

/// families: subset of "PIRQAE" (S rides along with Q).
CountReport make_report(const Params& params, const std::string& families);

}  // namespace polycount
