#pragma once

// Exact arithmetic in GF(2^n) and in prime fields F_p.
//
// Elements of GF(2^n) are bit-vectors of polynomial coefficients (bit k is the
// coefficient of x^k). The integer value of that bit-vector is the canonical
// index of the element; every builder orders vertex coordinates by it.

#include <compare>
#include <cstdint>

namespace wood {

struct Gf2Elem {
  std::uint32_t bits = 0;

  constexpr Gf2Elem() = default;
  constexpr explicit Gf2Elem(std::uint32_t b) : bits(b) {}

  constexpr std::uint32_t index() const { return bits; }

  friend constexpr Gf2Elem operator+(Gf2Elem a, Gf2Elem b) { return Gf2Elem{a.bits ^ b.bits}; }
  constexpr Gf2Elem& operator+=(Gf2Elem o) {
    bits ^= o.bits;
    return *this;
  }
  friend constexpr bool operator==(Gf2Elem, Gf2Elem) = default;
  friend constexpr auto operator<=>(Gf2Elem, Gf2Elem) = default;
};

inline constexpr int kMaxExtensionDegree = 13;

// Pinned irreducible modulus for each extension degree 1..13. Bit k is the
// coefficient of x^k. FieldCtx re-verifies irreducibility on construction.
std::uint32_t pinned_modulus(int n);

// Exhaustive irreducibility test over GF(2): trial division by every
// polynomial of degree 1..deg/2.
bool is_irreducible_gf2(std::uint32_t poly);

// Degree of a GF(2) polynomial; -1 for the zero polynomial.
int poly_degree(std::uint32_t poly);

class FieldCtx {
 public:
  // Throws ParameterError unless 1 <= n <= 13 and `modulus` is an irreducible
  // polynomial of degree exactly n.
  FieldCtx(int n, std::uint32_t modulus);

  int n() const { return n_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t size() const { return 1u << n_; }

  Gf2Elem zero() const { return Gf2Elem{0}; }
  Gf2Elem one() const { return Gf2Elem{1}; }
  // The class of the polynomial x (reduced, so it is `one` when n = 1).
  Gf2Elem generator() const { return reduce(2u); }

  bool contains(Gf2Elem a) const { return a.bits < size(); }
  // Throws ParameterError when idx >= 2^n.
  Gf2Elem element(std::uint32_t idx) const;

  Gf2Elem mul(Gf2Elem a, Gf2Elem b) const;
  Gf2Elem pow(Gf2Elem a, std::uint64_t e) const;

  friend bool operator==(const FieldCtx&, const FieldCtx&) = default;

 private:
  Gf2Elem reduce(std::uint64_t poly) const;

  int n_;
  std::uint32_t modulus_;
};

// Field of size 2^n with the pinned modulus.
FieldCtx make_field(int n);

Gf2Elem gf_mul(const FieldCtx& ctx, Gf2Elem a, Gf2Elem b);
Gf2Elem gf_pow(const FieldCtx& ctx, Gf2Elem a, std::uint64_t e);

// ---- prime fields ----

bool is_prime(std::int64_t p);

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod);

// Legendre symbol (a | p) by Euler's criterion. Throws ParameterError unless p
// is an odd prime.
int legendre(std::int64_t a, std::int64_t p);

class PrimeFieldElem {
 public:
  // Throws ParameterError unless p is an odd prime. `v` is reduced into [0, p).
  PrimeFieldElem(std::int64_t v, std::int64_t p);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return p_; }

  PrimeFieldElem operator+(PrimeFieldElem o) const;
  PrimeFieldElem operator-(PrimeFieldElem o) const;
  PrimeFieldElem operator*(PrimeFieldElem o) const;
  PrimeFieldElem operator-() const;

  friend bool operator==(const PrimeFieldElem&, const PrimeFieldElem&) = default;

 private:
  struct Unchecked {};
  PrimeFieldElem(std::int64_t v, std::int64_t p, Unchecked) : value_(v), p_(p) {}
  void require_same_field(const PrimeFieldElem& o) const;

  std::int64_t value_;
  std::int64_t p_;
};

}  // namespace wood
