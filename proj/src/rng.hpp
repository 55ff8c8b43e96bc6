#pragma once

#include <cstdint>
#include <gmpxx.h>

namespace invq {

// Deterministic random source shared by the probabilistic routines
// (Pollard rho restarts, Sylow generator search).  Wraps GMP's
// Mersenne Twister state so the same seed reproduces the same run on
// any platform.
class Rng {
public:
  explicit Rng(uint64_t seed) {
    gmp_randinit_mt(state_);
    gmp_randseed_ui(state_, static_cast<unsigned long>(seed));
  }
  ~Rng() { gmp_randclear(state_); }
  Rng(const Rng&) = delete;
  Rng& operator=(const Rng&) = delete;

  // Uniform in [0, bound), bound >= 1.
  mpz_class below(const mpz_class& bound) {
    mpz_class out;
    mpz_urandomm(out.get_mpz_t(), state_, bound.get_mpz_t());
    return out;
  }

  // Uniform in [lo, hi], lo <= hi.
  mpz_class between(const mpz_class& lo, const mpz_class& hi) {
    return lo + below(hi - lo + 1);
  }

private:
  gmp_randstate_t state_;
};

}  // namespace invq
