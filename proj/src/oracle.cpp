#include "polycount/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "polycount/counts.hpp"

namespace polycount::oracle {

namespace {

bool small_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

using Digits = std::vector<int>;  // residue polynomial coefficients mod p

Digits digits_of(long rep, int p, int k) {
  Digits d(static_cast<size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    d[static_cast<size_t>(i)] = static_cast<int>(rep % p);
    rep /= p;
  }
  return d;
}

long rep_of(const Digits& d, int p) {
  long rep = 0;
  for (size_t i = d.size(); i-- > 0;) rep = rep * p + d[i];
  return rep;
}

// product of residue polynomials reduced mod (modulus, p)
Digits mod_mul(const Digits& a, const Digits& b, const std::vector<int>& modulus, int p) {
  const int k = static_cast<int>(a.size());
  std::vector<int> prod(static_cast<size_t>(2 * k - 1), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      prod[static_cast<size_t>(i + j)] =
          (prod[static_cast<size_t>(i + j)] + a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)]) % p;
  for (int i = 2 * k - 2; i >= k; --i) {
    const int c = prod[static_cast<size_t>(i)];
    if (c == 0) continue;
    prod[static_cast<size_t>(i)] = 0;
    // x^i = x^{i-k} * (-(modulus minus leading term))
    for (int j = 0; j < k; ++j)
      prod[static_cast<size_t>(i - k + j)] =
          ((prod[static_cast<size_t>(i - k + j)] - c * modulus[static_cast<size_t>(j)]) % p + p) % p;
  }
  prod.resize(static_cast<size_t>(k));
  return prod;
}

// remainder of univariate a by monic divisor g, both over GF(p)
bool divides(const std::vector<int>& g, std::vector<int> a, int p) {
  const int dg = static_cast<int>(g.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= dg; --i) {
    const int c = a[static_cast<size_t>(i)];
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j)
      a[static_cast<size_t>(i - dg + j)] =
          ((a[static_cast<size_t>(i - dg + j)] - c * g[static_cast<size_t>(j)]) % p + p) % p;
  }
  for (int i = 0; i < dg; ++i)
    if (a[static_cast<size_t>(i)] != 0) return false;
  return true;
}

bool irreducible_mod_p(const std::vector<int>& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long rep = 0; rep < count; ++rep) {
      std::vector<int> g = digits_of(rep, p, d);
      g.push_back(1);  // monic degree-d candidate divisor
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

std::vector<int> least_irreducible_modulus(int p, int k) {
  long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (long rep = 0; rep < count; ++rep) {
    std::vector<int> f = digits_of(rep, p, k);
    f.push_back(1);
    if (irreducible_mod_p(f, p)) return f;
  }
  throw std::logic_error("no irreducible modulus found");
}

}  // namespace

Field Field::prime(int p) {
  if (!small_prime(p) || p > 31)
    throw std::invalid_argument("Field::prime: p must be a prime <= 31");
  return Field(p, 1, {});
}

Field Field::extension(int p, int k) {
  if (!small_prime(p)) throw std::invalid_argument("Field::extension: p must be prime");
  if (k < 1) throw std::invalid_argument("Field::extension: k must be >= 1");
  long order = 1;
  for (int i = 0; i < k; ++i) {
    order *= p;
    if (order > 32) throw std::invalid_argument("Field::extension: order p^k must be <= 32");
  }
  if (k == 1) return prime(p);
  return Field(p, k, least_irreducible_modulus(p, k));
}

Field::Field(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  order_ = 1;
  for (int i = 0; i < k; ++i) order_ *= p;
  add_.resize(static_cast<size_t>(order_ * order_));
  mul_.resize(static_cast<size_t>(order_ * order_));
  neg_.resize(static_cast<size_t>(order_));
  inv_.assign(static_cast<size_t>(order_), 0);
  frob_.resize(static_cast<size_t>(order_));
  for (long a = 0; a < order_; ++a) {
    const Digits da = digits_of(a, p, k);
    Digits nd = da;
    for (auto& x : nd) x = (p - x) % p;
    neg_[static_cast<size_t>(a)] = static_cast<Elem>(rep_of(nd, p));
    for (long b = 0; b < order_; ++b) {
      const Digits db = digits_of(b, p, k);
      Digits sum(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i)
        sum[static_cast<size_t>(i)] = (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % p;
      add_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] = static_cast<Elem>(rep_of(sum, p));
      const Digits prod = k == 1 ? Digits{static_cast<int>((a * b) % p)}
                                 : mod_mul(da, db, modulus_, p);
      mul_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] = static_cast<Elem>(rep_of(prod, p));
    }
  }
  for (long a = 0; a < order_; ++a) {
    Elem acc = static_cast<Elem>(a);
    for (int i = 1; i < p; ++i) acc = mul(acc, static_cast<Elem>(a));
    frob_[static_cast<size_t>(a)] = acc;  // a^p
    for (long b = 1; b < order_; ++b)
      if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) == 1) {
        inv_[static_cast<size_t>(a)] = static_cast<Elem>(b);
        break;
      }
  }
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
  return inv_[a];
}

Field::Elem Field::frobenius_iter(Elem a, int times) const {
  Elem x = a;
  for (int i = 0; i < times; ++i) x = frob_[x];
  return x;
}

Embedding::Embedding(const Field& small, const Field& big) {
  if (small.p() != big.p() || big.k() % small.k() != 0)
    throw std::invalid_argument("Embedding: need GF(p^a) -> GF(p^b) with a | b");
  const int p = small.p();
  map_.assign(static_cast<size_t>(small.order()), 0);
  // prime-field digits map to the constants of the big field
  if (small.k() == 1) {
    for (long a = 0; a < small.order(); ++a) map_[static_cast<size_t>(a)] = static_cast<Field::Elem>(a);
    return;
  }
  // least root of the small modulus in the big field
  Field::Elem root = 0;
  bool found = false;
  for (long y = 0; y < big.order() && !found; ++y) {
    Field::Elem acc = 0;
    for (size_t i = small.modulus().size(); i-- > 0;) {
      acc = big.mul(acc, static_cast<Field::Elem>(y));
      acc = big.add(acc, static_cast<Field::Elem>(small.modulus()[i]));
    }
    if (acc == 0) {
      root = static_cast<Field::Elem>(y);
      found = true;
    }
  }
  if (!found) throw std::logic_error("Embedding: modulus has no root in the big field");
  for (long x = 0; x < small.order(); ++x) {
    long rep = x;
    Field::Elem acc = 0;
    Field::Elem power = 1;
    for (int i = 0; i < small.k(); ++i) {
      const int digit = static_cast<int>(rep % p);
      rep /= p;
      Field::Elem term = 0;
      for (int c = 0; c < digit; ++c) term = big.add(term, power);
      acc = big.add(acc, term);
      power = big.mul(power, root);
    }
    map_[static_cast<size_t>(x)] = acc;
  }
}

namespace {

void gen_degree_block(int r, int d, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r - 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = d; a >= 0; --a) {  // lex descending in x1 > x2 > ...
    cur.push_back(a);
    gen_degree_block(r, d - a, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MonomialBasis::MonomialBasis(int r_, int nbound_) : r(r_), nbound(nbound_) {
  if (r < 1 || nbound < 0) throw std::invalid_argument("MonomialBasis: bad parameters");
  for (int d = nbound; d >= 0; --d) {
    std::vector<int> cur;
    gen_degree_block(r, d, cur, exps);
  }
  const long b = size();
  prod_.assign(static_cast<size_t>(b * b), -1);
  std::map<std::vector<int>, long> index;
  for (long i = 0; i < b; ++i) index[exps[static_cast<size_t>(i)]] = i;
  for (long i = 0; i < b; ++i)
    for (long j = 0; j < b; ++j) {
      std::vector<int> sum(static_cast<size_t>(r));
      int total = 0;
      for (int v = 0; v < r; ++v) {
        sum[static_cast<size_t>(v)] =
            exps[static_cast<size_t>(i)][static_cast<size_t>(v)] +
            exps[static_cast<size_t>(j)][static_cast<size_t>(v)];
        total += sum[static_cast<size_t>(v)];
      }
      if (total <= nbound) prod_[static_cast<size_t>(i * b + j)] = index.at(sum);
    }
}

long MonomialBasis::begin_of_degree(int d) const {
  if (d < 0 || d > nbound) throw std::out_of_range("MonomialBasis::begin_of_degree");
  long pos = 0;
  for (int dd = nbound; dd > d; --dd) pos += binom_b(r - 1, dd).get_si();
  return pos;
}

long MonomialBasis::end_of_degree(int d) const {
  return begin_of_degree(d) + binom_b(r - 1, d).get_si();
}

int MultiPoly::degree() const {
  for (long i = 0; i < basis->size(); ++i)
    if (c[static_cast<size_t>(i)] != 0) {
      int total = 0;
      for (int e : basis->exps[static_cast<size_t>(i)]) total += e;
      return total;
    }
  return -1;
}

bool MultiPoly::is_monic_of_degree(int n) const {
  for (long i = 0; i < basis->size(); ++i)
    if (c[static_cast<size_t>(i)] != 0) {
      int total = 0;
      for (int e : basis->exps[static_cast<size_t>(i)]) total += e;
      return total == n && c[static_cast<size_t>(i)] == 1;
    }
  return false;
}

MultiPoly MultiPoly::rebased(const MonomialBasis& bigger) const {
  if (bigger.r != basis->r || bigger.nbound < basis->nbound)
    throw std::invalid_argument("MultiPoly::rebased: incompatible basis");
  MultiPoly out(bigger);
  std::map<std::vector<int>, long> index;
  for (long i = 0; i < bigger.size(); ++i) index[bigger.exps[static_cast<size_t>(i)]] = i;
  for (long i = 0; i < basis->size(); ++i)
    if (c[static_cast<size_t>(i)] != 0)
      out.c[static_cast<size_t>(index.at(basis->exps[static_cast<size_t>(i)]))] =
          c[static_cast<size_t>(i)];
  return out;
}

MultiPoly poly_mul(const Field& f, const MultiPoly& a, const MultiPoly& b) {
  if (a.basis != b.basis) throw std::invalid_argument("poly_mul: basis mismatch");
  const int da = a.degree(), db = b.degree();
  if (da >= 0 && db >= 0 && da + db > a.basis->nbound)
    throw std::invalid_argument("poly_mul: degree overflow");
  MultiPoly out(*a.basis);
  const long n = a.basis->size();
  for (long i = 0; i < n; ++i) {
    if (a.c[static_cast<size_t>(i)] == 0) continue;
    for (long j = 0; j < n; ++j) {
      if (b.c[static_cast<size_t>(j)] == 0) continue;
      const long t = a.basis->product_index(i, j);
      out.c[static_cast<size_t>(t)] = f.add(
          out.c[static_cast<size_t>(t)],
          f.mul(a.c[static_cast<size_t>(i)], b.c[static_cast<size_t>(j)]));
    }
  }
  return out;
}

MultiPoly poly_pow(const Field& f, const MultiPoly& a, int e) {
  if (e < 1) throw std::invalid_argument("poly_pow: e must be >= 1");
  MultiPoly out = a;
  for (int i = 1; i < e; ++i) out = poly_mul(f, out, a);
  return out;
}

MultiPoly poly_frobenius(const Field& f, const MultiPoly& a, int times) {
  MultiPoly out = a;
  for (auto& x : out.c) x = f.frobenius_iter(x, times);
  return out;
}

uint64_t pack_key(const Field& f, const MultiPoly& a) {
  uint64_t key = 0;
  for (size_t i = a.c.size(); i-- > 0;) key = key * static_cast<uint64_t>(f.order()) + a.c[i];
  return key;
}

void check_size_guard(const Field& f, int r, int n) {
  const Int space = int_pow(Int(f.order()), static_cast<unsigned long>(binom_b(r, n).get_si()));
  if (space > Int(1) << 24)
    throw std::domain_error("oracle size guard exceeded: q^{b_{r,n}} > 2^24");
}

void for_each_monic(const Field& f, const MonomialBasis& basis, int deg,
                    const std::function<void(const MultiPoly&)>& fn) {
  const long bs = basis.begin_of_degree(deg);
  const long be = basis.end_of_degree(deg);
  const long total = basis.size();
  const long q = f.order();
  MultiPoly poly(basis);
  for (long lead = bs; lead < be; ++lead) {
    std::fill(poly.c.begin(), poly.c.end(), 0);
    poly.c[static_cast<size_t>(lead)] = 1;
    // free positions: the rest of the degree block plus all lower degrees
    std::vector<long> free_pos;
    for (long i = lead + 1; i < total; ++i) free_pos.push_back(i);
    while (true) {
      fn(poly);
      size_t pos = free_pos.size();
      while (pos > 0) {
        auto& cell = poly.c[static_cast<size_t>(free_pos[pos - 1])];
        if (++cell < q) break;
        cell = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
}

long count_monic(const Field& f, int r, int n) {
  check_size_guard(f, r, n);
  const MonomialBasis basis(r, n);
  long count = 0;
  for_each_monic(f, basis, n, [&](const MultiPoly&) { ++count; });
  return count;
}

std::vector<bool> sieve_reducible_set(const Field& f, int r, int n) {
  check_size_guard(f, r, n);
  const MonomialBasis basis(r, n);
  const Int space = int_pow(Int(f.order()), static_cast<unsigned long>(binom_b(r, n).get_si()));
  std::vector<bool> present(space.get_ui(), false);
  for (int k = 1; 2 * k <= n; ++k) {
    std::vector<MultiPoly> factors;
    for_each_monic(f, basis, k, [&](const MultiPoly& g) { factors.push_back(g); });
    for_each_monic(f, basis, n - k, [&](const MultiPoly& h) {
      for (const auto& g : factors) present[pack_key(f, poly_mul(f, g, h))] = true;
    });
  }
  return present;
}

long sieve_reducible(const Field& f, int r, int n) {
  const auto set = sieve_reducible_set(f, r, n);
  return std::count(set.begin(), set.end(), true);
}

std::vector<bool> sieve_powerful_set(const Field& f, int r, int n, int s) {
  if (s < 2) throw std::invalid_argument("sieve_powerful_set: s must be >= 2");
  check_size_guard(f, r, n);
  const MonomialBasis basis(r, n);
  const Int space = int_pow(Int(f.order()), static_cast<unsigned long>(binom_b(r, n).get_si()));
  std::vector<bool> present(space.get_ui(), false);
  for (int k = 1; s * k <= n; ++k) {
    std::vector<MultiPoly> powers;
    for_each_monic(f, basis, k, [&](const MultiPoly& g) { powers.push_back(poly_pow(f, g, s)); });
    for_each_monic(f, basis, n - s * k, [&](const MultiPoly& h) {
      for (const auto& gs : powers) present[pack_key(f, poly_mul(f, gs, h))] = true;
    });
  }
  return present;
}

long sieve_powerful(const Field& f, int r, int n, int s) {
  const auto set = sieve_powerful_set(f, r, n, s);
  return std::count(set.begin(), set.end(), true);
}

long count_irreducible(const Field& f, int r, int n) {
  return count_monic(f, r, n) - sieve_reducible(f, r, n);
}

long count_rel_irred_oracle(const Field& base, int r, int n) {
  if (base.k() != 1)
    throw std::invalid_argument("count_rel_irred_oracle: base field must be prime");
  if (n < 1) throw std::invalid_argument("count_rel_irred_oracle: n must be >= 1");
  std::map<std::pair<int, int>, long> irr;  // (extension degree s, degree m) -> #I_{r,m}(F_{p^s})
  auto irreducible_over = [&](int s, int m) {
    const auto key = std::make_pair(s, m);
    auto it = irr.find(key);
    if (it == irr.end()) {
      const Field ext = Field::extension(base.p(), s);
      check_size_guard(ext, r, m);
      it = irr.emplace(key, count_irreducible(ext, r, m)).first;
    }
    return it->second;
  };
  Rat a(0);
  for (int k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    Rat inner(0);
    for (int s = 1; s <= k; ++s) {
      if (k % s != 0) continue;
      const int mu = mobius(s);
      if (mu == 0) continue;
      inner += Rat(mu) * Rat(irreducible_over(s, n / k));
    }
    a += inner / k;
  }
  const long i_base = irreducible_over(1, n);
  const Rat e = Rat(i_base) - a;
  if (!is_integer(e)) throw std::logic_error("count_rel_irred_oracle: non-integral E count");
  return static_cast<long>(e.get_num().get_si());
}

long galois_image_check(const Field& base, int r, int n, int k) {
  if (base.k() != 1) throw std::invalid_argument("galois_image_check: base field must be prime");
  if (k < 2 || n % k != 0) throw std::invalid_argument("galois_image_check: need k | n, k >= 2");
  const int m = n / k;
  const Field ext = Field::extension(base.p(), k);
  check_size_guard(ext, r, m);
  // The degree-n products are only hashed, never enumerated, so they need
  // a representable key rather than an enumerable space.
  if (int_pow(Int(ext.order()), static_cast<unsigned long>(binom_b(r, n).get_si())) >
      (Int(1) << 62))
    throw std::domain_error("galois_image_check: product key exceeds 64 bits");

  const MonomialBasis small_basis(r, m);
  const MonomialBasis big_basis(r, n);
  const auto reducible_ext = sieve_reducible_set(ext, r, m);

  // relative irreducibility over ext is decided by reducibility over the
  // prime-degree extensions of ext
  std::vector<int> rel_primes;
  std::vector<Field> rel_fields;
  std::vector<Embedding> rel_embed;
  std::vector<std::vector<bool>> rel_reducible;
  if (m >= 2) {
    for (int l = 2; l <= m; ++l) {
      if (!small_prime(l) || m % l != 0) continue;
      Field big = Field::extension(base.p(), k * l);
      check_size_guard(big, r, m);
      rel_reducible.push_back(sieve_reducible_set(big, r, m));
      rel_embed.emplace_back(ext, big);
      rel_fields.push_back(std::move(big));
      rel_primes.push_back(l);
    }
  }

  std::vector<int> subfield_indices;  // maximal proper subfields GF(p^{k/l})
  for (int l = 2; l <= k; ++l)
    if (small_prime(l) && k % l == 0) subfield_indices.push_back(k / l);

  std::vector<MultiPoly> iplus;
  for_each_monic(ext, small_basis, m, [&](const MultiPoly& g) {
    if (reducible_ext[pack_key(ext, g)]) return;
    for (int j : subfield_indices) {
      bool inside = true;
      for (auto c : g.c)
        if (!ext.in_subfield(c, j)) {
          inside = false;
          break;
        }
      if (inside) return;
    }
    for (size_t t = 0; t < rel_primes.size(); ++t) {
      MultiPoly lifted = g;
      for (auto& c : lifted.c) c = rel_embed[t](c);
      if (rel_reducible[t][pack_key(rel_fields[t], lifted)]) return;  // relatively irreducible
    }
    iplus.push_back(g);
  });

  if (iplus.size() % static_cast<size_t>(k) != 0)
    throw std::logic_error("galois_image_check: |I+| is not a multiple of k");

  std::unordered_set<uint64_t> image;
  for (const auto& g : iplus) {
    const MultiPoly lifted = g.rebased(big_basis);
    MultiPoly prod = lifted;
    for (int i = 1; i < k; ++i) prod = poly_mul(ext, prod, poly_frobenius(ext, lifted, i));
    if (!(poly_frobenius(ext, prod) == prod))
      throw std::logic_error("galois_image_check: image not Galois-stable");
    for (auto c : prod.c)
      if (!ext.in_prime_field(c))
        throw std::logic_error("galois_image_check: image has non-base coefficients");
    if (!prod.is_monic_of_degree(n))
      throw std::logic_error("galois_image_check: image not monic of full degree");
    image.insert(pack_key(ext, prod));
  }
  if (image.size() * static_cast<size_t>(k) != iplus.size())
    throw std::logic_error("galois_image_check: fibre size is not k");
  return static_cast<long>(image.size());
}

}  // namespace polycount::oracle
