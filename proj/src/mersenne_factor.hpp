#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>
#include <gmpxx.h>

#include "errors.hpp"
#include "modarith.hpp"
#include "rng.hpp"

namespace invq {

struct MersenneFactorization {
  unsigned n = 0;
  // Certified primes with aggregated multiplicities, sorted ascending.
  std::vector<std::pair<mpz_class, unsigned>> prime_powers;
  // Cofactors the rho budget could not crack; empty iff complete.
  std::vector<std::pair<mpz_class, unsigned>> composites;
  mpz_class radical;  // product of the distinct certified primes
  mpz_class lift_q;   // (2^n - 1) / radical
  bool complete = false;
};

struct FactorTable {
  std::map<unsigned, std::vector<mpz_class>> entries;
};

// All divisors d of n with the integer value of the d-th cyclotomic
// polynomial at 2, ascending by d.  The values multiply to 2^n - 1.
std::vector<std::pair<unsigned, mpz_class>> cyclotomic_split(unsigned n);

// Parses the line-oriented table format: '#' starts a comment, data
// lines read "n q1 q2 ... qm" with primes repeated per multiplicity.
// Every line is validated (primality of each factor, exact product
// 2^n - 1); the table is untrusted input, not ground truth.  Throws
// ParseError with a line number, or Error(ValidationError).
FactorTable load_factor_table(std::istream& in);

inline constexpr uint64_t kDefaultRhoBudget = uint64_t(1) << 26;

// Factorization of 2^n - 1.  A table entry for n wins outright;
// otherwise each cyclotomic part is split by small-prime trial
// division, order-aware trial division (primitive prime factors of the
// d-th part satisfy q == 1 mod 2d), and Pollard-Brent rho with the
// given per-composite iteration budget.  Budget exhaustion yields
// complete = false with the surviving composite recorded; downstream
// consumers refuse such results.
MersenneFactorization factor_mersenne(unsigned n, const FactorTable* table,
                                      uint64_t budget, Rng& rng);

struct CongruenceCheck {
  mpz_class q;
  bool mod_n_applicable = false;  // only when n is prime
  bool mod_n_ok = false;          // q == 1 (mod n)
  bool mod8_applicable = false;   // only when n is odd
  bool mod8_ok = false;           // q == +-1 (mod 8)
};

struct CongruenceReport {
  bool n_prime = false;
  bool n_odd = false;
  std::vector<CongruenceCheck> checks;
  bool all_ok = true;  // over applicable checks
};

// For prime n every q must satisfy q == 1 (mod n); for odd n every q
// must satisfy q == +-1 (mod 8) (2 is a square mod q since 2^n == 1).
// Requires a complete factorization.
CongruenceReport check_divisor_congruences(const MersenneFactorization& f);

struct OmegaReport {
  unsigned omega = 0;
  double bound = 0.0;  // 1.36 * ln n
  bool within = false;
  bool squarefree = false;
};

// Diagnostic only; never fails the pipeline.
OmegaReport omega_report(const MersenneFactorization& f);

}  // namespace invq
