#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "certificate.hpp"
#include "lin2k.hpp"
#include "mersenne_factor.hpp"
#include "modarith.hpp"

namespace invq {

enum class SelectionPolicy {
  UnitVectorFirst,  // exact unit sign patterns, basis fallback on a miss
  AnyBasis,         // straight to greedy GF(2) basis selection
};

struct DecomposeOptions {
  SelectionPolicy policy = SelectionPolicy::UnitVectorFirst;
  bool include_cubics = false;  // extend pool with 2^a+2^b+1 on rank failure
  bool strict_unit = false;     // fail instead of falling back to a basis
  bool reduce_multiplicities = true;  // reduce mod lambda(2^n - 1)
  uint64_t seed = 0;
};

// How the run went, beyond what the certificate itself records.
struct RunStats {
  bool fallback_used = false;  // basis selection engaged under UnitVectorFirst
  bool cubics_used = false;    // some selected candidate is cubic
};

// Candidate with its sign pattern against the distinct primes.
struct Candidate {
  GoldFactor::Kind kind = GoldFactor::Kind::Quadratic;
  unsigned a = 0;
  unsigned b = 0;  // cubic only
  mpz_class value;
  ParityVector parity;
};

// Sign pattern of the candidate value against each prime: bit j = 1 iff
// it is a nonresidue mod primes[j].  nullopt (degenerate) when some
// prime divides the value; such candidates are discarded whole.
std::optional<ParityVector> legendre_parity_vector(
    const Candidate& cand, const std::vector<mpz_class>& primes);

// Picks k = |primes| candidates whose parity vectors are linearly
// independent over GF(2), per the options' policy.  Quadratic pool is
// odd a ascending in [1, n-2]; the cubic extension (lexicographic
// (a, b), a > b >= 1) joins only when the quadratics do not span and
// include_cubics is set.  Throws Error(SpanFailure) with a parity dump
// when even the extended pool falls short.
std::vector<Candidate> select_candidates(unsigned n,
                                         const std::vector<mpz_class>& primes,
                                         const DecomposeOptions& opts,
                                         RunStats* stats = nullptr);

// Entry (i, j) = 2-Sylow discrete log of candidate i at prime j; its
// parity is asserted against the candidate's sign bit.
DlogMatrix build_dlog_matrix(const std::vector<Candidate>& candidates,
                             const std::vector<SylowData>& sylow);

// Turns solver output y into certificate multiplicities:
// e_i = y_i * R * lift_q with R = lcm of the odd parts, optionally
// reduced mod lambda(2^n - 1) (valid: every base is a unit).  Zero
// entries are legitimate and mean the factor is dropped.
std::vector<mpz_class> assemble_exponents(const std::vector<mpz_class>& y,
                                          const std::vector<SylowData>& sylow,
                                          const MersenneFactorization& f,
                                          bool reduce);

// Whole pipeline: candidate selection, dlog matrix, unit-determinant
// solve, exponent assembly, certificate emission.  The certificate is
// re-verified against 2^n - 1 before being returned and always has
// verified = true.  Requires odd n >= 3 and a complete factorization.
DecompositionCertificate decompose(unsigned n, const MersenneFactorization& f,
                                   const DecomposeOptions& opts = {},
                                   RunStats* stats = nullptr);

}  // namespace invq
