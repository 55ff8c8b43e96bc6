#pragma once

#include <vector>
#include <gmpxx.h>

#include "errors.hpp"

namespace invq {

// One factor of a decomposition of -1 mod 2^n - 1: the exponent of a
// power map on F_{2^n}, together with how many times it is composed.
struct GoldFactor {
  enum class Kind { Frobenius, Quadratic, Cubic };

  Kind kind = Kind::Quadratic;
  unsigned a = 0;  // frobenius: the power t; quadratic: a; cubic: larger exponent
  unsigned b = 0;  // cubic only: smaller exponent, a > b >= 1
  mpz_class exponent_value;  // 2^t, 2^a + 1, or 2^a + 2^b + 1
  mpz_class multiplicity = 1;

  static GoldFactor frobenius(unsigned t, mpz_class mult = 1);
  static GoldFactor quadratic(unsigned a, mpz_class mult = 1);
  static GoldFactor cubic(unsigned a, unsigned b, mpz_class mult = 1);

  // Value the kind parameters dictate; must equal exponent_value.
  mpz_class expected_value() const;

  bool operator==(const GoldFactor&) const = default;
};

struct DecompositionCertificate {
  enum class Method { Theorem1, Algorithm1 };

  unsigned n = 0;
  Method method = Method::Algorithm1;
  std::vector<GoldFactor> factors;
  bool verified = false;  // advisory; verification always recomputes

  bool operator==(const DecompositionCertificate&) const = default;
};

}  // namespace invq
