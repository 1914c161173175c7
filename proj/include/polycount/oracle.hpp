#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "polycount/rational.hpp"

namespace polycount::oracle {

/// GF(p^k) with order at most 32, elements encoded as integers in
/// [0, p^k) reading the residue polynomial's coefficient vector base p.
/// Extensions use the lexicographically least irreducible modulus, found
/// by exhaustive search at construction.
class Field {
 public:
  using Elem = uint8_t;

  static Field prime(int p);
  static Field extension(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  long order() const { return order_; }
  /// Modulus coefficients ascending, including the leading 1 (k+1 entries);
  /// empty for k = 1.
  const std::vector<int>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const { return add_[idx(a, neg_[b])]; }
  Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem inv(Elem a) const;
  /// x -> x^p, the Frobenius generator of Gal(GF(p^k) : GF(p)).
  Elem frobenius(Elem a) const { return frob_[a]; }
  Elem frobenius_iter(Elem a, int times) const;
  /// Fixed points of frobenius^j, i.e. membership in GF(p^j) for j | k.
  bool in_subfield(Elem a, int j) const { return frobenius_iter(a, j) == a; }
  bool in_prime_field(Elem a) const { return in_subfield(a, 1); }

 private:
  Field(int p, int k, std::vector<int> modulus);
  size_t idx(Elem a, Elem b) const { return static_cast<size_t>(a) * order_ + b; }

  int p_ = 2;
  int k_ = 1;
  long order_ = 2;
  std::vector<int> modulus_;
  std::vector<Elem> add_, mul_, neg_, frob_;
  std::vector<Elem> inv_;
};

/// Ring embedding GF(p^a) -> GF(p^b) for a | b, by mapping the small
/// field's generator to the least root of its modulus in the big field.
class Embedding {
 public:
  Embedding(const Field& small, const Field& big);
  Field::Elem operator()(Field::Elem x) const { return map_[x]; }

 private:
  std::vector<Field::Elem> map_;
};

/// Monomials of total degree <= nbound in r variables, in graded
/// lexicographic descending order (x1 > x2 > ...): index 0 is x1^nbound.
struct MonomialBasis {
  MonomialBasis(int r, int nbound);

  int r;
  int nbound;
  std::vector<std::vector<int>> exps;
  long begin_of_degree(int d) const;
  long end_of_degree(int d) const;
  long size() const { return static_cast<long>(exps.size()); }
  /// Index of the product monomial, or -1 if it exceeds nbound.
  long product_index(long i, long j) const { return prod_[static_cast<size_t>(i * size() + j)]; }

 private:
  std::vector<long> prod_;
  long index_of(const std::vector<int>& e) const;
};

/// Dense multivariate polynomial over a small field, coefficients aligned
/// with a MonomialBasis. Monic means leading coefficient 1 on the
/// graded-lex largest monomial of its total degree.
struct MultiPoly {
  const MonomialBasis* basis = nullptr;
  std::vector<Field::Elem> c;

  explicit MultiPoly(const MonomialBasis& b)
      : basis(&b), c(static_cast<size_t>(b.size()), 0) {}
  int degree() const;  // -1 for the zero polynomial
  bool is_monic_of_degree(int n) const;
  MultiPoly rebased(const MonomialBasis& bigger) const;
  bool operator==(const MultiPoly& o) const { return c == o.c; }
};

MultiPoly poly_mul(const Field& f, const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_pow(const Field& f, const MultiPoly& a, int e);
/// Coefficientwise Frobenius action.
MultiPoly poly_frobenius(const Field& f, const MultiPoly& a, int times = 1);
/// Canonical dense encoding as a base-order integer; fits 24 bits under
/// the size guard.
uint64_t pack_key(const Field& f, const MultiPoly& a);

/// Enforces q^{b_{r,n}} <= 2^24 (b_{r,n} log2 q <= 24); throws otherwise.
void check_size_guard(const Field& f, int r, int n);

/// Streams every monic polynomial of total degree exactly deg, each once,
/// in a fixed deterministic order.
void for_each_monic(const Field& f, const MonomialBasis& basis, int deg,
                    const std::function<void(const MultiPoly&)>& fn);
long count_monic(const Field& f, int r, int n);

/// Membership bitset over packed keys of the reducible monic degree-n
/// polynomials, union of images of (g, h) -> g h.
std::vector<bool> sieve_reducible_set(const Field& f, int r, int n);
long sieve_reducible(const Field& f, int r, int n);
/// Union of images of (g, h) -> g^s h.
std::vector<bool> sieve_powerful_set(const Field& f, int r, int n, int s);
long sieve_powerful(const Field& f, int r, int n, int s);
long count_irreducible(const Field& f, int r, int n);

/// E = I - A with A from the divisor sum over brute-forced irreducible
/// counts over the extension fields; base field must be prime.
long count_rel_irred_oracle(const Field& base, int r, int n);

/// Directly constructs the restricted Galois-norm image E_{r,n,k} from I+
/// and returns its size; checks the fibre-size and stability claims on
/// the way.
long galois_image_check(const Field& base, int r, int n, int k);

}  // namespace polycount::oracle
