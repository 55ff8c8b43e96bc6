#include <doctest.h>

#include "certify.hpp"
#include "decomposer.hpp"

using namespace invq;

namespace {

MersenneFactorization factor_for(unsigned n) {
  Rng rng(1);
  return factor_mersenne(n, nullptr, kDefaultRhoBudget, rng);
}

}  // namespace

TEST_CASE("decompose n = 5 hits the frozen single-prime answer") {
  // 2^5 - 1 = 31, q == 3 (mod 4), so the Sylow generator is forced to -1
  // and the certificate is seed-independent: 3^15 == -1 (mod 31).
  MersenneFactorization f = factor_for(5);
  DecomposeOptions opts;
  RunStats stats;
  DecompositionCertificate cert = decompose(5, f, opts, &stats);
  CHECK(cert.verified);
  CHECK_FALSE(stats.fallback_used);
  CHECK_FALSE(stats.cubics_used);
  REQUIRE(cert.factors.size() == 1);
  CHECK(cert.factors[0].kind == GoldFactor::Kind::Quadratic);
  CHECK(cert.factors[0].a == 1);
  CHECK(cert.factors[0].multiplicity == 15);
}

TEST_CASE("decompose n = 7 picks the first usable candidate") {
  // Candidates scan odd a ascending; a = 1 already works since
  // jacobi(3, 127) = -1, giving 3^63 == -1 (mod 127).
  MersenneFactorization f = factor_for(7);
  DecomposeOptions opts;
  DecompositionCertificate cert = decompose(7, f, opts, nullptr);
  CHECK(cert.verified);
  REQUIRE(cert.factors.size() == 1);
  CHECK(cert.factors[0].a == 1);
  CHECK(cert.factors[0].multiplicity == 63);
}

TEST_CASE("decompose n = 9 needs the basis fallback") {
  // Parity vectors over (7, 73): a=1 -> (1,0), a=3 -> (0,0), a=5 -> (1,1),
  // a=7 -> (1,1). No unit pattern for the 73 column, so the greedy basis
  // selection kicks in.
  MersenneFactorization f = factor_for(9);
  DecomposeOptions opts;
  RunStats stats;
  DecompositionCertificate cert = decompose(9, f, opts, &stats);
  CHECK(cert.verified);
  CHECK(stats.fallback_used);
  CHECK_FALSE(stats.cubics_used);
  VerifyResult res = verify(cert);
  CHECK(res.ok);
}

TEST_CASE("strict unit policy surfaces a span failure on n = 9") {
  MersenneFactorization f = factor_for(9);
  DecomposeOptions opts;
  opts.strict_unit = true;
  try {
    decompose(9, f, opts, nullptr);
    FAIL("expected SpanFailure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SpanFailure);
    CHECK(std::string(e.what()).find("parity") != std::string::npos);
  }
}

TEST_CASE("same seed gives identical certificates, different seeds verify") {
  MersenneFactorization f = factor_for(21);
  DecomposeOptions a;
  a.seed = 11;
  DecomposeOptions b;
  b.seed = 11;
  DecomposeOptions c;
  c.seed = 12;
  DecompositionCertificate ca = decompose(21, f, a, nullptr);
  DecompositionCertificate cb = decompose(21, f, b, nullptr);
  DecompositionCertificate cc = decompose(21, f, c, nullptr);
  CHECK(serialize(ca) == serialize(cb));
  CHECK(ca.verified);
  CHECK(cc.verified);
}

TEST_CASE("lifted modulus: n = 21 exponents work mod the full 2^21 - 1") {
  // 2^21 - 1 = 7^2 * 127 * 337; the radical misses a factor 7 and the
  // exponents must still hold modulo the full modulus.
  MersenneFactorization f = factor_for(21);
  REQUIRE(f.lift_q == 7);
  DecomposeOptions opts;
  DecompositionCertificate cert = decompose(21, f, opts, nullptr);
  CHECK(cert.verified);
  mpz_class mod = (mpz_class(1) << 21) - 1;
  mpz_class acc = 1;
  for (const auto& fac : cert.factors)
    acc = (acc * modpow(fac.exponent_value, fac.multiplicity, mod)) % mod;
  CHECK(acc == mod - 1);
}

TEST_CASE("every odd n up to 61 decomposes and verifies") {
  for (unsigned n = 3; n <= 61; n += 2) {
    INFO("n = ", n);
    MersenneFactorization f = factor_for(n);
    REQUIRE(f.complete);
    DecomposeOptions opts;
    DecompositionCertificate cert = decompose(n, f, opts, nullptr);
    CHECK(cert.verified);
    CHECK(verify(cert).ok);
    for (const auto& fac : cert.factors) CHECK(fac.multiplicity > 0);
  }
}

TEST_CASE("decompose refuses mismatched or incomplete factorizations") {
  MersenneFactorization f = factor_for(7);
  DecomposeOptions opts;
  CHECK_THROWS_AS(decompose(9, f, opts, nullptr), Error);

  Rng rng(5);
  MersenneFactorization partial = factor_mersenne(101, nullptr, 16, rng);
  REQUIRE_FALSE(partial.complete);
  try {
    decompose(101, partial, opts, nullptr);
    FAIL("expected IncompleteFactorization");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompleteFactorization);
  }
}

TEST_CASE("multiplicity reduction keeps certificates small but valid") {
  MersenneFactorization f = factor_for(25);
  DecomposeOptions reduced;
  DecomposeOptions raw;
  raw.reduce_multiplicities = false;
  DecompositionCertificate cr = decompose(25, f, reduced, nullptr);
  DecompositionCertificate cw = decompose(25, f, raw, nullptr);
  CHECK(cr.verified);
  CHECK(cw.verified);
  mpz_class lambda = 1;
  for (const auto& [q, m] : f.prime_powers) {
    mpz_class part = q - 1;
    for (unsigned i = 1; i < m; ++i) part *= q;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lambda.get_mpz_t(), part.get_mpz_t());
    lambda = lambda / g * part;
  }
  for (const auto& fac : cr.factors) CHECK(fac.multiplicity < lambda);
}

TEST_CASE("cubic pool stays off unless requested") {
  MersenneFactorization f = factor_for(9);
  DecomposeOptions opts;
  opts.include_cubics = true;
  RunStats stats;
  DecompositionCertificate cert = decompose(9, f, opts, &stats);
  // Quadratics alone span for n = 9, so even with the pool enabled no
  // cubic should be chosen.
  CHECK(cert.verified);
  CHECK_FALSE(stats.cubics_used);
  for (const auto& fac : cert.factors)
    CHECK(fac.kind == GoldFactor::Kind::Quadratic);
}
