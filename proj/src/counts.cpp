#include "polycount/counts.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polycount {

void Params::validate() const {
  if (r < 2) throw std::invalid_argument("Params: r must be >= 2");
  if (nmax < 0) throw std::invalid_argument("Params: nmax must be >= 0");
  if (s && *s < 2) throw std::invalid_argument("Params: s must be >= 2");
}

Int binom_b(int r, long n) {
  if (r < 0) throw std::invalid_argument("binom_b: r must be >= 0");
  if (n < 0) return Int(0);
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(r + n),
               static_cast<unsigned long>(r));
  return out;
}

QPoly count_all(int r, long n) {
  if (r < 2) throw std::invalid_argument("count_all: r must be >= 2");
  if (n < 0) throw std::invalid_argument("count_all: n must be >= 0");
  const Int b = binom_b(r, n);
  if (!b.fits_slong_p()) throw std::overflow_error("count_all: degree does not fit a long");
  const long top = b.get_si() - 1;
  const long width = binom_b(r - 1, n).get_si();
  std::vector<Rat> c(static_cast<size_t>(top) + 1, Rat(0));
  for (long i = 0; i < width; ++i) c[static_cast<size_t>(top - i)] = 1;
  return QPoly(std::move(c));
}

ZSeries series_all(const Params& params) {
  params.validate();
  ZSeries p(params.nmax);
  for (int n = 0; n <= params.nmax; ++n) p.set_coeff(n, count_all(params.r, n));
  return p;
}

ZSeries series_irreducible(const Params& params) {
  params.validate();
  const ZSeries p = series_all(params);
  ZSeries acc(params.nmax);
  // Terms with k > nmax contribute nothing below z^{nmax+1}.
  for (long k = 1; k <= params.nmax; ++k) {
    const int mu = mobius(k);
    if (mu == 0) continue;
    acc = acc + log1(p.subst_zpow(k)).scaled(make_rat(mu, k));
  }
  return acc;
}

ZSeries series_powerfree(const Params& params) {
  params.validate();
  if (!params.s) throw std::invalid_argument("series_powerfree: s missing");
  const int s = *params.s;
  const ZSeries p = series_all(params);
  ZSeries sf(params.nmax);
  sf.set_coeff(0, QPoly::one());
  for (int n = 1; n <= params.nmax; ++n) {
    QPoly val = p.coeff(n);
    for (int i = 1; n - i * s >= 0; ++i) val -= sf.coeff(n - i * s) * p.coeff(i);
    sf.set_coeff(n, std::move(val));
  }
  return sf;
}

CountEngine::CountEngine(Params params) : params_(std::move(params)) {
  params_.validate();
  const ZSeries p = series_all(params_);
  const ZSeries i = series_irreducible(params_);
  for (int n = 0; n <= params_.nmax; ++n) {
    p_.push_back(p.coeff(n));
    i_.push_back(i.coeff(n));
  }
}

const QPoly& CountEngine::all(int n) const {
  if (n < 0 || n > params_.nmax) throw std::out_of_range("CountEngine::all: n out of range");
  return p_[static_cast<size_t>(n)];
}

const QPoly& CountEngine::irreducible(int n) const {
  if (n < 0 || n > params_.nmax)
    throw std::out_of_range("CountEngine::irreducible: n out of range");
  return i_[static_cast<size_t>(n)];
}

QPoly CountEngine::reducible(int n) const {
  if (n < 1 || n > params_.nmax)
    throw std::out_of_range("CountEngine::reducible: n out of range");
  return all(n) - irreducible(n);
}

const QPoly& CountEngine::powerfree(int s, int n) const {
  if (s < 2) throw std::invalid_argument("CountEngine::powerfree: s must be >= 2");
  if (n < 0 || n > params_.nmax)
    throw std::out_of_range("CountEngine::powerfree: n out of range");
  auto it = s_free_.find(s);
  if (it == s_free_.end()) {
    Params q = params_;
    q.s = s;
    const ZSeries sf = series_powerfree(q);
    std::vector<QPoly> v;
    for (int m = 0; m <= params_.nmax; ++m) v.push_back(sf.coeff(m));
    it = s_free_.emplace(s, std::move(v)).first;
  }
  return it->second[static_cast<size_t>(n)];
}

QPoly CountEngine::powerful(int s, int n) const { return all(n) - powerfree(s, n); }

QPoly CountEngine::abs_irreducible(int n) const {
  if (n < 1 || n > params_.nmax)
    throw std::out_of_range("CountEngine::abs_irreducible: n out of range");
  QPoly acc;
  for (long k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    QPoly inner;
    for (long s = 1; s <= k; ++s) {
      if (k % s != 0) continue;
      const int mu = mobius(s);
      if (mu == 0) continue;
      inner += irreducible(static_cast<int>(n / k)).subst_pow(s).scaled(Rat(mu));
    }
    acc += inner.scaled(make_rat(1, k));
  }
  return acc;
}

QPoly CountEngine::rel_irreducible(int n) const { return irreducible(n) - abs_irreducible(n); }

QPoly count_reducible(const Params& params, int n) {
  if (n < 1 || n > params.nmax) throw std::out_of_range("count_reducible: n out of range");
  return CountEngine(params).reducible(n);
}

QPoly count_powerful(const Params& params, int n) {
  if (!params.s) throw std::invalid_argument("count_powerful: s missing");
  if (n < 0 || n > params.nmax) throw std::out_of_range("count_powerful: n out of range");
  return CountEngine(params).powerful(*params.s, n);
}

QPoly count_abs_irreducible(const Params& params, int n) {
  return CountEngine(params).abs_irreducible(n);
}

QPoly count_rel_irreducible(const Params& params, int n) {
  return CountEngine(params).rel_irreducible(n);
}

namespace {

void partitions_rec(long n, long max_part, std::vector<long>& cur,
                    std::vector<std::vector<long>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (long p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long>> enumerate_partitions(long n) {
  if (n < 1) throw std::invalid_argument("enumerate_partitions: n must be >= 1");
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::string partition_concise(const std::vector<long>& parts) {
  std::ostringstream os;
  for (long p : parts) os << p;
  return os.str();
}

long FactorPattern::degree() const {
  long total = 0;
  for (const auto& g : groups) {
    long w = 0;
    for (const auto& p : g.pairs) w += p.mult * p.count;
    total += g.deg * w;
  }
  return total;
}

std::string FactorPattern::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < groups.size(); ++i) {
    if (i) os << "; ";
    os << groups[i].deg << ':';
    for (size_t j = 0; j < groups[i].pairs.size(); ++j) {
      if (j) os << ',';
      os << groups[i].pairs[j].mult << ",#" << groups[i].pairs[j].count;
    }
  }
  os << ')';
  return os.str();
}

namespace {

// Pairs (e, d) with distinct e and sum e*d = w are exactly the partitions
// of w collected by part value.
FactorPattern::Group group_from_partition(long deg, const std::vector<long>& parts) {
  FactorPattern::Group g{deg, {}};
  long i = static_cast<long>(parts.size());
  // parts descending; emit ascending e
  while (i > 0) {
    const long e = parts[static_cast<size_t>(i - 1)];
    long d = 0;
    while (i > 0 && parts[static_cast<size_t>(i - 1)] == e) {
      ++d;
      --i;
    }
    g.pairs.push_back({e, d});
  }
  return g;
}

void patterns_rec(long m, long rem, std::vector<std::pair<long, long>>& weights,
                  std::vector<std::vector<std::pair<long, long>>>& out) {
  if (rem == 0) {
    out.push_back(weights);
    return;
  }
  if (m > rem) return;
  for (long w = rem / m; w >= 0; --w) {
    if (w > 0) weights.emplace_back(m, w);
    patterns_rec(m + 1, rem - m * w, weights, out);
    if (w > 0) weights.pop_back();
  }
}

}  // namespace

std::vector<FactorPattern> enumerate_patterns(long n) {
  if (n < 1) throw std::invalid_argument("enumerate_patterns: n must be >= 1");
  std::vector<std::vector<std::pair<long, long>>> assignments;
  std::vector<std::pair<long, long>> weights;
  patterns_rec(1, n, weights, assignments);

  std::vector<FactorPattern> out;
  for (const auto& assignment : assignments) {
    // Cartesian product over the partitions of each degree's weight.
    std::vector<std::vector<std::vector<long>>> choices;
    for (const auto& [deg, w] : assignment) choices.push_back(enumerate_partitions(w));
    std::vector<size_t> idx(assignment.size(), 0);
    while (true) {
      FactorPattern pat;
      for (size_t i = 0; i < assignment.size(); ++i)
        pat.groups.push_back(group_from_partition(assignment[i].first, choices[i][idx[i]]));
      const bool irreducible_pattern = pat.groups.size() == 1 &&
                                       pat.groups[0].deg == n &&
                                       pat.groups[0].pairs.size() == 1 &&
                                       pat.groups[0].pairs[0] == FactorPattern::Pair{1, 1};
      if (!irreducible_pattern) out.push_back(std::move(pat));
      size_t pos = assignment.size();
      while (pos > 0) {
        if (++idx[pos - 1] < choices[pos - 1].size()) break;
        idx[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
  return out;
}

QPoly count_with_pattern(const FactorPattern& pattern,
                         const std::vector<QPoly>& irreducible_by_degree) {
  QPoly out = QPoly::one();
  for (const auto& g : pattern.groups) {
    if (g.deg < 1 || g.deg >= static_cast<long>(irreducible_by_degree.size()))
      throw std::out_of_range("count_with_pattern: missing I_m for pattern degree");
    long total_distinct = 0;
    Int fact(1);
    for (const auto& p : g.pairs) {
      total_distinct += p.count;
      Int f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(p.count));
      fact *= f;
    }
    // Division by prod d_ij! performed after the falling factorial so the
    // intermediate value stays polynomial.
    out = out * falling_factorial(irreducible_by_degree[static_cast<size_t>(g.deg)],
                                  total_distinct)
                    .scaled(make_rat(Int(1), fact));
  }
  return out;
}

PatternEngine::PatternEngine(int r, int nmax) {
  if (r < 2) throw std::invalid_argument("PatternEngine: r must be >= 2");
  if (nmax < 1) throw std::invalid_argument("PatternEngine: nmax must be >= 1");
  r_.assign(static_cast<size_t>(nmax) + 1, QPoly());
  i_.assign(static_cast<size_t>(nmax) + 1, QPoly());
  i_[1] = count_all(r, 1);  // R_1 = 0 bootstrap
  for (int n = 2; n <= nmax; ++n) {
    QPoly red;
    for (const auto& pat : enumerate_patterns(n)) red += count_with_pattern(pat, i_);
    r_[static_cast<size_t>(n)] = red;
    i_[static_cast<size_t>(n)] = count_all(r, n) - red;
  }
}

const QPoly& PatternEngine::reducible(int n) const {
  if (n < 1 || n >= static_cast<int>(r_.size()))
    throw std::out_of_range("PatternEngine::reducible: n out of range");
  return r_[static_cast<size_t>(n)];
}

const QPoly& PatternEngine::irreducible(int n) const {
  if (n < 1 || n >= static_cast<int>(i_.size()))
    throw std::out_of_range("PatternEngine::irreducible: n out of range");
  return i_[static_cast<size_t>(n)];
}

QPoly count_reducible_by_patterns(const Params& params, int n) {
  params.validate();
  if (n < 1 || n > params.nmax)
    throw std::out_of_range("count_reducible_by_patterns: n out of range");
  return PatternEngine(params.r, params.nmax).reducible(n);
}

CountReport make_report(const Params& params, const std::string& families) {
  params.validate();
  for (char f : families)
    if (std::string("PIRQAE").find(f) == std::string::npos)
      throw std::invalid_argument(std::string("make_report: unknown family '") + f + "'");
  const bool want_q = families.find('Q') != std::string::npos;
  const bool want_ae = families.find('A') != std::string::npos ||
                       families.find('E') != std::string::npos;
  if (want_q && !params.s) throw std::invalid_argument("make_report: Q requested without s");

  const CountEngine eng(params);
  CountReport rep;
  rep.r = params.r;
  rep.s = params.s;
  for (int n = 0; n <= params.nmax; ++n) {
    CountReport::Row row;
    row.n = n;
    row.P = eng.all(n);
    row.I = eng.irreducible(n);
    row.R = row.P - row.I;
    if (want_q) {
      row.S = eng.powerfree(*params.s, n);
      row.Q = eng.powerful(*params.s, n);
    }
    if (want_ae) {
      row.A = n >= 1 ? eng.abs_irreducible(n) : QPoly();
      row.E = n >= 1 ? eng.rel_irreducible(n) : QPoly();
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace polycount
