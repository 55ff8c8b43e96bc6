#pragma once

#include <cstdint>
#include <vector>
#include <gmpxx.h>

#include "errors.hpp"
#include "rng.hpp"

namespace invq {

// 2-adic valuation of m >= 1.
unsigned long nu2(const mpz_class& m);

// base^exp mod m for m >= 2, exp >= 0.
mpz_class modpow(const mpz_class& base, const mpz_class& exp,
                 const mpz_class& m);

// Jacobi symbol (a/m) for odd m >= 1.  Returns -1, 0, or +1.
int jacobi(const mpz_class& a, const mpz_class& m);

// One step of the even-quotient descent on an exponent pair:
// prev = (2k)*cur + eps*r with k >= 1, eps in {+1,-1}, 0 < r < cur, r odd.
struct ChainStep {
  unsigned long k;
  int eps;
  unsigned long r;
};

struct SignedRemainderChain {
  unsigned long n = 0;  // starting pair: n then a
  unsigned long a = 0;
  std::vector<ChainStep> steps;

  unsigned long ell() const { return steps.size(); }
  // Replays every step against (n, a) and checks the exact integer
  // identities, odd remainders, strict descent, final remainder 1.
  bool consistent() const;
};

struct RotkiewiczSymbol {
  int value;  // equals jacobi(2^a + 1, 2^n - 1)
  SignedRemainderChain chain;
};

// Quadratic character of the Gold number 2^a + 1 modulo 2^n - 1 via the
// even-quotient Euclidean descent on the exponents (n, a) themselves.
// The symbol is (-1)^(ell+1) where ell is the chain length; a = 1 is
// terminal already and yields the empty chain (ell = 0, value -1),
// consistent with jacobi(3, 2^n - 1) = -1 for every odd n.  The generic
// Jacobi route computes the same quantity on the full-size integers;
// the two are compared in the tests, never substituted for each other.
//
// Requires odd a with 1 <= a <= n - 2, odd n >= 3.  Throws
// NonCoprimeError when gcd(a, n) > 1 (the descent cannot reach 1).
RotkiewiczSymbol rotkiewicz_symbol(unsigned long a, unsigned long n);

// Deterministic for m < 2^64 (fixed Miller-Rabin base set); Baillie-PSW
// (base-2 strong probable prime + strong Lucas) above that.  No
// composite is known to pass BPSW.
bool is_prime(const mpz_class& m);

// Odd primes below 2^16, computed once.
const std::vector<uint32_t>& small_primes();

// Data attached to one prime power q^mult dividing a factored modulus:
// q - 1 = 2^alpha * r_odd with alpha >= 1.
struct SylowData {
  mpz_class q;
  unsigned mult = 1;
  unsigned alpha = 0;
  mpz_class r_odd;
  mpz_class generator;  // filled in by sylow2_generator when needed
};

SylowData sylow_split(const mpz_class& q, unsigned mult);

// Element of exact order 2^alpha in (Z/q)^*, q an odd prime with
// q - 1 = 2^alpha * r_odd.  Raises random elements to r_odd; each try
// lands a generator with probability 1/2.
mpz_class sylow2_generator(const mpz_class& q, unsigned alpha,
                           const mpz_class& r_odd, Rng& rng);

// Discrete log in the 2-Sylow subgroup generated by h: the unique
// b mod 2^alpha with x^r_odd == h^b mod q.  Bit-by-bit Pohlig-Hellman,
// alpha rounds.  b is even iff x is a quadratic residue mod q.
mpz_class dlog_2sylow(const mpz_class& x, const mpz_class& h,
                      const mpz_class& q, unsigned alpha,
                      const mpz_class& r_odd);

}  // namespace invq
