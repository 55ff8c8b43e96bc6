#include "good_integers.hpp"

#include "modarith.hpp"

namespace invq {

namespace {

// Core congruence search for any n >= 2, odd or even.
std::optional<GoodWitness> witness_search(unsigned n, unsigned long s_max) {
  const mpz_class modulus = (mpz_class(1) << n) - 1;
  GoodWitness w;
  w.n = n;
  w.nu = nu2(mpz_class(n) - 1);
  const mpz_class target = mpz_class(n - 1) >> w.nu;

  mpz_class pow3 = 1 % modulus;
  for (unsigned long s = 0; s <= s_max; ++s) {
    mpz_class v = pow3;
    for (unsigned long k = 0; k < n; ++k) {
      if (v == target) {
        w.k = k;
        w.s = s;
        return w;
      }
      v <<= 1;
      if (v >= modulus) v -= modulus;
    }
    pow3 = (3 * pow3) % modulus;
  }
  return std::nullopt;
}

}  // namespace

std::optional<GoodWitness> good_witness(unsigned n,
                                        std::optional<unsigned long> s_max) {
  if (n < 3 || n % 2 == 0)
    throw_bad_argument("good_witness: n must be odd and >= 3");
  return witness_search(n, s_max.value_or(default_s_max(n)));
}

DecompositionCertificate theorem1_decomposition(const GoodWitness& w) {
  if (w.n < 3 || w.n % 2 == 0)
    throw_bad_argument("theorem1_decomposition: n must be odd and >= 3");
  if (w.nu != nu2(mpz_class(w.n) - 1))
    throw Error(ErrorCode::ValidationError,
                "theorem1_decomposition: nu != nu2(n-1)");
  // Every witness seen in practice has small k (the search hits integer
  // equalities with k = 0); the factor exponents 2^(2^j) below are not
  // materializable beyond that anyway.
  if (w.k > 20)
    throw_bad_argument("theorem1_decomposition: k too large to materialize");
  const mpz_class modulus = (mpz_class(1) << w.n) - 1;
  const mpz_class target = mpz_class(w.n - 1) >> w.nu;
  if (modpow(2, w.k, modulus) * modpow(3, w.s, modulus) % modulus != target)
    throw Error(ErrorCode::ValidationError,
                "theorem1_decomposition: witness congruence fails");

  DecompositionCertificate cert;
  cert.n = w.n;
  cert.method = DecompositionCertificate::Method::Theorem1;
  cert.factors.push_back(GoldFactor::frobenius(1));
  auto exp_of = [](unsigned long e) -> unsigned {
    if (e > 1000000)
      throw_bad_argument("theorem1_decomposition: factor exponent too large");
    return static_cast<unsigned>(e);
  };
  for (unsigned long j = 0; j < w.k; ++j)
    cert.factors.push_back(GoldFactor::quadratic(exp_of(1ul << j)));
  unsigned long p3 = 1;
  for (unsigned long j = 0; j < w.s; ++j) {
    if (p3 > 1000000)
      throw_bad_argument("theorem1_decomposition: factor exponent too large");
    cert.factors.push_back(GoldFactor::cubic(exp_of((2ul << w.k) * p3),
                                             exp_of((1ul << w.k) * p3)));
    p3 *= 3;
  }
  for (unsigned long j = 1; j <= w.nu; ++j)
    cert.factors.push_back(
        GoldFactor::quadratic(exp_of((w.n - 1) >> j)));
  return cert;
}

std::vector<unsigned long> scan_good(unsigned long x_max,
                                     std::optional<unsigned long> s_max) {
  if (x_max < 1) throw_bad_argument("scan_good: x_max must be >= 1");
  std::vector<unsigned long> out;
  out.push_back(1);  // modulus 2^1 - 1 = 1 is degenerate; included by convention
  for (unsigned long n = 2; n <= x_max; ++n) {
    unsigned un = static_cast<unsigned>(n);
    if (witness_search(un, s_max.value_or(default_s_max(un))))
      out.push_back(n);
  }
  return out;
}

}  // namespace invq
