#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "wood/error.hpp"
#include "wood/field.hpp"

using namespace wood;

TEST_CASE("make_field pins an irreducible modulus of the right degree") {
  for (int n = 1; n <= kMaxExtensionDegree; ++n) {
    const FieldCtx ctx = make_field(n);
    CHECK(ctx.n() == n);
    CHECK(poly_degree(ctx.modulus()) == n);
    CHECK(is_irreducible_gf2(ctx.modulus()));
    CHECK(ctx.size() == (1u << n));
  }
}

TEST_CASE("irreducibility for n = 3 agrees with trial division by every degree <= 1 polynomial") {
  const std::uint32_t m = make_field(3).modulus();
  // Degree-3 polynomials are reducible iff they have a root in GF(2).
  for (std::uint32_t poly = 0b1000; poly < 0b10000; ++poly) {
    bool has_root = false;
    for (std::uint32_t div : {0b10u, 0b11u}) {
      std::uint32_t r = poly;
      for (int d = 3; d >= 1; --d)
        if ((r >> d) & 1) r ^= div << (d - 1);
      has_root = has_root || r == 0;
    }
    CHECK(is_irreducible_gf2(poly) == !has_root);
  }
  CHECK(is_irreducible_gf2(m));
}

TEST_CASE("field construction rejects bad parameters") {
  CHECK_THROWS_AS(make_field(0), ParameterError);
  CHECK_THROWS_AS(make_field(14), ParameterError);
  CHECK_THROWS_AS(FieldCtx(3, 0b1111), ParameterError);  // (x+1)^3
  CHECK_THROWS_AS(FieldCtx(3, 0b111), ParameterError);   // wrong degree
  CHECK_THROWS_AS(make_field(3).element(8), ParameterError);
  const FieldCtx gf2 = make_field(1);
  CHECK(gf2.size() == 2);
  CHECK(gf2.generator() == gf2.one());
}

TEST_CASE("gf_mul identities and the x * x example") {
  const FieldCtx ctx = make_field(3);
  for (std::uint32_t a = 0; a < 8; ++a) {
    CHECK(gf_mul(ctx, Gf2Elem{a}, ctx.one()) == Gf2Elem{a});
    CHECK(gf_mul(ctx, Gf2Elem{a}, ctx.zero()) == ctx.zero());
  }
  const Gf2Elem x = ctx.generator();
  CHECK(gf_mul(ctx, x, x).bits == oracle::gf_mul(2, 2, ctx.modulus()));
  CHECK(gf_mul(ctx, x, x).bits == 0b100u);
}

TEST_CASE("gf_mul matches the long-division oracle exhaustively for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const FieldCtx ctx = make_field(n);
    for (std::uint32_t a = 0; a < ctx.size(); ++a)
      for (std::uint32_t b = 0; b < ctx.size(); ++b)
        REQUIRE(ctx.mul(Gf2Elem{a}, Gf2Elem{b}).bits == oracle::gf_mul(a, b, ctx.modulus()));
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(12345);
  for (int n = 1; n <= kMaxExtensionDegree; ++n) {
    const FieldCtx ctx = make_field(n);
    std::uniform_int_distribution<std::uint32_t> pick(0, ctx.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      const Gf2Elem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
      REQUIRE(ctx.mul(a, b) == ctx.mul(b, a));
      REQUIRE(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)));
      REQUIRE(ctx.mul(a, b + c) == ctx.mul(a, b) + ctx.mul(a, c));
      REQUIRE(ctx.contains(ctx.mul(a, b)));
    }
  }
}

TEST_CASE("gf_pow") {
  SUBCASE("small exponents") {
    const FieldCtx ctx = make_field(5);
    for (std::uint32_t a = 0; a < ctx.size(); ++a) {
      CHECK(gf_pow(ctx, Gf2Elem{a}, 0) == ctx.one());
      CHECK(gf_pow(ctx, Gf2Elem{a}, 1) == Gf2Elem{a});
    }
  }
  SUBCASE("cube over n = 3 equals three multiplications") {
    const FieldCtx ctx = make_field(3);
    for (std::uint32_t g = 0; g < 8; ++g) {
      const Gf2Elem e{g};
      CHECK(gf_pow(ctx, e, 3) == ctx.mul(ctx.mul(e, e), e));
      CHECK(gf_pow(ctx, e, 3).bits == oracle::gf_pow(g, 3, ctx.modulus()));
    }
  }
  SUBCASE("multiplicative group order, exhaustive for n <= 9") {
    for (int n = 1; n <= 9; ++n) {
      const FieldCtx ctx = make_field(n);
      for (std::uint32_t a = 1; a < ctx.size(); ++a) REQUIRE(gf_pow(ctx, Gf2Elem{a}, ctx.size() - 1) == ctx.one());
    }
  }
  SUBCASE("matches repeated multiplication for arbitrary exponents") {
    const FieldCtx ctx = make_field(4);
    for (std::uint32_t a = 0; a < ctx.size(); ++a)
      for (std::uint64_t e = 0; e < 40; ++e) REQUIRE(gf_pow(ctx, Gf2Elem{a}, e).bits == oracle::gf_pow(a, e, ctx.modulus()));
  }
}

TEST_CASE("legendre symbol") {
  CHECK(legendre(-1, 11) == -1);
  CHECK(legendre(-3, 23) == -1);
  CHECK(legendre(4, 11) == 1);
  CHECK(legendre(0, 11) == 0);
  CHECK(legendre(22, 11) == 0);
  CHECK_THROWS_AS(legendre(3, 2), ParameterError);
  CHECK_THROWS_AS(legendre(3, 15), ParameterError);
  CHECK_THROWS_AS(legendre(3, 1), ParameterError);
}

TEST_CASE("-1 and -3 are nonresidues for every prime p = 11 (mod 12) up to 500") {
  int primes = 0;
  for (std::int64_t p = 11; p <= 500; p += 12) {
    if (!is_prime(p)) continue;
    ++primes;
    CHECK(legendre(-1, p) == -1);
    CHECK(legendre(-3, p) == -1);
  }
  CHECK(primes > 5);
}

TEST_CASE("exactly (p-1)/2 nonzero residues, cross-checked by squaring") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 23, 47, 59, 97, 101}) {
    std::vector<bool> square(static_cast<std::size_t>(p), false);
    for (std::int64_t x = 1; x < p; ++x) square[static_cast<std::size_t>(x * x % p)] = true;
    int residues = 0;
    for (std::int64_t a = 1; a < p; ++a) {
      const int l = legendre(a, p);
      CHECK(l == (square[static_cast<std::size_t>(a)] ? 1 : -1));
      residues += l == 1;
    }
    CHECK(residues == (p - 1) / 2);
  }
}

TEST_CASE("prime field elements") {
  const PrimeFieldElem a(5, 11), b(9, 11);
  CHECK((a + b).value() == 3);
  CHECK((a - b).value() == 7);
  CHECK((a * b).value() == 1);
  CHECK((-a).value() == 6);
  CHECK(PrimeFieldElem(-1, 11).value() == 10);
  CHECK_THROWS_AS(PrimeFieldElem(1, 12), ParameterError);
  CHECK_THROWS_AS(a + PrimeFieldElem(1, 13), ParameterError);
}
