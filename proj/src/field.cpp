#include "wood/field.hpp"

#include <array>
#include <bit>
#include <string>

#include "wood/error.hpp"

namespace wood {

namespace {

__extension__ typedef unsigned __int128 u128;

// Index n holds the modulus for GF(2^n).
constexpr std::array<std::uint32_t, kMaxExtensionDegree + 1> kModuli = {
    0,
    0b11,                // x + 1
    0b111,               // x^2 + x + 1
    0b1011,              // x^3 + x + 1
    0b10011,             // x^4 + x + 1
    0b100101,            // x^5 + x^2 + 1
    0b1000011,           // x^6 + x + 1
    0b10000011,          // x^7 + x + 1
    0b100011011,         // x^8 + x^4 + x^3 + x + 1
    0b1000010001,        // x^9 + x^4 + 1
    0b10000001001,       // x^10 + x^3 + 1
    0b100000000101,      // x^11 + x^2 + 1
    0b1000000001001,     // x^12 + x^3 + 1
    0b10000000011011,    // x^13 + x^4 + x^3 + x + 1
};

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

}  // namespace

int poly_degree(std::uint32_t poly) {
  return poly == 0 ? -1 : 31 - std::countl_zero(poly);
}

bool is_irreducible_gf2(std::uint32_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  for (std::uint32_t div = 2; poly_degree(div) <= d / 2; ++div)
    if (poly_mod(poly, div) == 0) return false;
  return true;
}

std::uint32_t pinned_modulus(int n) {
  if (n < 1 || n > kMaxExtensionDegree)
    throw ParameterError("extension degree must lie in [1, 13], got " + std::to_string(n));
  return kModuli[static_cast<std::size_t>(n)];
}

FieldCtx::FieldCtx(int n, std::uint32_t modulus) : n_(n), modulus_(modulus) {
  if (n < 1 || n > kMaxExtensionDegree)
    throw ParameterError("extension degree must lie in [1, 13], got " + std::to_string(n));
  if (poly_degree(modulus) != n)
    throw ParameterError("modulus degree " + std::to_string(poly_degree(modulus)) +
                         " does not match extension degree " + std::to_string(n));
  if (!is_irreducible_gf2(modulus))
    throw ParameterError("modulus " + std::to_string(modulus) + " is reducible over GF(2)");
}

Gf2Elem FieldCtx::element(std::uint32_t idx) const {
  if (idx >= size())
    throw ParameterError("element index " + std::to_string(idx) + " outside GF(2^" +
                         std::to_string(n_) + ")");
  return Gf2Elem{idx};
}

Gf2Elem FieldCtx::reduce(std::uint64_t poly) const {
  for (int d = 63 - std::countl_zero(poly | 1); d >= n_; --d)
    if ((poly >> d) & 1u) poly ^= static_cast<std::uint64_t>(modulus_) << (d - n_);
  return Gf2Elem{static_cast<std::uint32_t>(poly)};
}

Gf2Elem FieldCtx::mul(Gf2Elem a, Gf2Elem b) const {
  std::uint64_t product = 0;
  std::uint64_t shifted = a.bits;
  for (std::uint32_t rest = b.bits; rest != 0; rest >>= 1, shifted <<= 1)
    if (rest & 1u) product ^= shifted;
  return reduce(product);
}

Gf2Elem FieldCtx::pow(Gf2Elem a, std::uint64_t e) const {
  Gf2Elem result = one();
  Gf2Elem base = a;
  for (; e != 0; e >>= 1) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

FieldCtx make_field(int n) { return FieldCtx(n, pinned_modulus(n)); }

Gf2Elem gf_mul(const FieldCtx& ctx, Gf2Elem a, Gf2Elem b) { return ctx.mul(a, b); }

Gf2Elem gf_pow(const FieldCtx& ctx, Gf2Elem a, std::uint64_t e) { return ctx.pow(a, e); }

// ---- prime fields ----

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t b = ((base % mod) + mod) % mod;
  std::int64_t r = 1 % mod;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) r = static_cast<std::int64_t>(static_cast<u128>(r) * b % mod);
    b = static_cast<std::int64_t>(static_cast<u128>(b) * b % mod);
  }
  return r;
}

int legendre(std::int64_t a, std::int64_t p) {
  if (p == 2 || !is_prime(p))
    throw ParameterError("legendre symbol needs an odd prime modulus, got " + std::to_string(p));
  const std::int64_t r = mod_pow(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

PrimeFieldElem::PrimeFieldElem(std::int64_t v, std::int64_t p) : value_(0), p_(p) {
  if (p == 2 || !is_prime(p))
    throw ParameterError("prime field needs an odd prime modulus, got " + std::to_string(p));
  value_ = ((v % p) + p) % p;
}

void PrimeFieldElem::require_same_field(const PrimeFieldElem& o) const {
  if (o.p_ != p_) throw ParameterError("mixed prime-field moduli");
}

PrimeFieldElem PrimeFieldElem::operator+(PrimeFieldElem o) const {
  require_same_field(o);
  return {(value_ + o.value_) % p_, p_, Unchecked{}};
}

PrimeFieldElem PrimeFieldElem::operator-(PrimeFieldElem o) const {
  require_same_field(o);
  return {(value_ - o.value_ + p_) % p_, p_, Unchecked{}};
}

PrimeFieldElem PrimeFieldElem::operator*(PrimeFieldElem o) const {
  require_same_field(o);
  return {static_cast<std::int64_t>(static_cast<u128>(value_) * o.value_ % p_), p_, Unchecked{}};
}

PrimeFieldElem PrimeFieldElem::operator-() const { return {(p_ - value_) % p_, p_, Unchecked{}}; }

}  // namespace wood
