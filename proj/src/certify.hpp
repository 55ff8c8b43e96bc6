#pragma once

#include <string>

#include "certificate.hpp"

namespace invq {

struct VerifyResult {
  bool ok = false;
  mpz_class residue;  // computed product mod 2^n - 1
  std::string detail;
};

// Checks the defining congruence: product over factors of
// exponent_value^multiplicity must be 2^n - 2, i.e. -1, mod 2^n - 1.
// Works from the certificate alone, using only the arithmetic
// primitives; never consults how the certificate was produced.  A
// factor whose exponent_value contradicts its kind parameters is
// rejected (ValidationError) before any arithmetic.
VerifyResult verify(const DecompositionCertificate& cert);

// Canonical text form (one structured document per certificate, big
// integers as decimal strings).  deserialize re-derives the verified
// flag; the stored text never carries it.
std::string serialize(const DecompositionCertificate& cert);
DecompositionCertificate deserialize(const std::string& text);

}  // namespace invq
