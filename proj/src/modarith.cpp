#include "modarith.hpp"

#include <array>
#include <numeric>

namespace invq {

unsigned long nu2(const mpz_class& m) {
  if (m <= 0) throw_bad_argument("nu2: argument must be >= 1");
  return mpz_scan1(m.get_mpz_t(), 0);
}

mpz_class modpow(const mpz_class& base, const mpz_class& exp,
                 const mpz_class& m) {
  if (m < 2) throw_bad_argument("modpow: modulus must be >= 2");
  if (exp < 0) throw_bad_argument("modpow: negative exponent");
  mpz_class out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return out;
}

int jacobi(const mpz_class& a, const mpz_class& m) {
  if (m < 1 || mpz_even_p(m.get_mpz_t()))
    throw_bad_argument("jacobi: modulus must be odd and positive");
  return mpz_jacobi(a.get_mpz_t(), m.get_mpz_t());
}

bool SignedRemainderChain::consistent() const {
  if (a == 1) return steps.empty();
  unsigned long prev = n, cur = a;
  for (size_t t = 0; t < steps.size(); ++t) {
    const ChainStep& st = steps[t];
    if (st.k < 1 || (st.eps != 1 && st.eps != -1)) return false;
    if (st.r % 2 == 0 || st.r >= cur) return false;
    long rhs = static_cast<long>(2 * st.k * cur) + st.eps * static_cast<long>(st.r);
    if (rhs < 0 || static_cast<unsigned long>(rhs) != prev) return false;
    prev = cur;
    cur = st.r;
  }
  return !steps.empty() && steps.back().r == 1;
}

RotkiewiczSymbol rotkiewicz_symbol(unsigned long a, unsigned long n) {
  if (n < 3 || n % 2 == 0) throw_bad_argument("rotkiewicz_symbol: n must be odd and >= 3");
  if (a % 2 == 0 || a < 1 || a > n - 2)
    throw_bad_argument("rotkiewicz_symbol: a must be odd with 1 <= a <= n - 2");
  if (std::gcd(a, n) != 1)
    throw NonCoprimeError("rotkiewicz_symbol: gcd(a, n) > 1");

  RotkiewiczSymbol out;
  out.chain.n = n;
  out.chain.a = a;
  unsigned long prev = n, cur = a;
  while (cur > 1) {
    // prev = (2k)*cur + eps*r with 0 < r < cur: take prev mod 2*cur and
    // fold the upper half to a negative sign.  cur | (prev mod 2*cur)
    // would mean gcd(prev, cur) = cur > 1, excluded by the precondition.
    unsigned long m = prev % (2 * cur);
    ChainStep st;
    if (m < cur) {
      st.k = (prev - m) / (2 * cur);
      st.eps = 1;
      st.r = m;
    } else {
      st.r = 2 * cur - m;
      st.k = (prev + st.r) / (2 * cur);
      st.eps = -1;
    }
    out.chain.steps.push_back(st);
    prev = cur;
    cur = st.r;
  }
  out.value = (out.chain.ell() % 2 == 0) ? -1 : 1;
  return out;
}

namespace {

bool miller_rabin_round(const mpz_class& m, const mpz_class& base,
                        const mpz_class& d, unsigned long s) {
  mpz_class x = modpow(base % m, d, m);
  if (x == 1 || x == m - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % m;
    if (x == m - 1) return true;
  }
  return false;
}

// Strong Lucas probable prime test with Selfridge's parameters.
// Assumes m odd, m >= 3, not a perfect square, no tiny prime factors.
bool strong_lucas(const mpz_class& m) {
  long d_abs = 5;
  int sign = 1;
  mpz_class d;
  for (;;) {
    d = sign * d_abs;
    int j = mpz_jacobi(d.get_mpz_t(), m.get_mpz_t());
    if (j == -1) break;
    if (j == 0 && mpz_cmpabs(d.get_mpz_t(), m.get_mpz_t()) != 0) return false;
    d_abs += 2;
    sign = -sign;
  }
  // P = 1, Q = (1 - D) / 4.
  mpz_class q = (1 - d) / 4;

  mpz_class delta = m + 1;
  unsigned long s = mpz_scan1(delta.get_mpz_t(), 0);
  mpz_class t = delta >> s;

  // Compute U_t, V_t by binary expansion, tracking Q^t as well.
  mpz_class u = 1, v = 1, qk = q % m;
  long bits = mpz_sizeinbase(t.get_mpz_t(), 2);
  mpz_class inv2 = (m + 1) / 2;  // inverse of 2 mod odd m
  for (long i = bits - 2; i >= 0; --i) {
    // double: U_{2k} = U_k V_k, V_{2k} = V_k^2 - 2 Q^k
    u = (u * v) % m;
    v = (v * v - 2 * qk) % m;
    qk = (qk * qk) % m;
    if (mpz_tstbit(t.get_mpz_t(), i)) {
      // increment: U_{k+1} = (U_k + V_k)/2, V_{k+1} = (D U_k + V_k)/2
      mpz_class u1 = ((u + v) * inv2) % m;
      mpz_class v1 = ((d * u + v) * inv2) % m;
      u = u1;
      v = v1;
      qk = (qk * q) % m;
    }
  }
  u = ((u % m) + m) % m;
  v = ((v % m) + m) % m;
  if (u == 0 || v == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    v = (v * v - 2 * qk) % m;
    v = ((v % m) + m) % m;
    qk = (qk * qk) % m;
    if (v == 0) return true;
  }
  return false;
}

}  // namespace

const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    constexpr uint32_t limit = 1u << 16;
    std::vector<bool> sieve(limit, true);
    std::vector<uint32_t> out;
    for (uint32_t p = 3; p < limit; p += 2) {
      if (!sieve[p]) continue;
      out.push_back(p);
      for (uint64_t q = uint64_t(p) * p; q < limit; q += 2 * p)
        sieve[static_cast<size_t>(q)] = false;
    }
    return out;
  }();
  return primes;
}

bool is_prime(const mpz_class& m) {
  if (m < 2) return false;
  if (m == 2) return true;
  if (mpz_even_p(m.get_mpz_t())) return false;
  for (uint32_t p : small_primes()) {
    if (m == p) return true;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return false;
    if (mpz_class(p) * p > m) return true;
  }

  mpz_class d = m - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;

  if (mpz_sizeinbase(m.get_mpz_t(), 2) <= 64) {
    // Deterministic for all m < 2^64 with the first twelve prime bases.
    static constexpr std::array<unsigned, 12> bases = {2,  3,  5,  7,  11, 13,
                                                       17, 19, 23, 29, 31, 37};
    for (unsigned b : bases) {
      if (m == b) return true;
      if (!miller_rabin_round(m, b, d, s)) return false;
    }
    return true;
  }

  if (!miller_rabin_round(m, 2, d, s)) return false;
  if (mpz_perfect_square_p(m.get_mpz_t())) return false;
  return strong_lucas(m);
}

SylowData sylow_split(const mpz_class& q, unsigned mult) {
  SylowData out;
  out.q = q;
  out.mult = mult;
  mpz_class qm1 = q - 1;
  out.alpha = static_cast<unsigned>(nu2(qm1));
  out.r_odd = qm1 >> out.alpha;
  return out;
}

mpz_class sylow2_generator(const mpz_class& q, unsigned alpha,
                           const mpz_class& r_odd, Rng& rng) {
  if (alpha < 1 || r_odd * (mpz_class(1) << alpha) != q - 1)
    throw_bad_argument("sylow2_generator: q - 1 != 2^alpha * r_odd");
  mpz_class half = mpz_class(1) << (alpha - 1);
  for (int tries = 0; tries < 128; ++tries) {
    mpz_class g = rng.between(2, q - 2);
    mpz_class h = modpow(g, r_odd, q);
    // h has order 2^j for some j <= alpha; j = alpha iff h^(2^(alpha-1)) != 1.
    if (h != 1 && modpow(h, half, q) != 1) return h;
  }
  throw Error(ErrorCode::Internal, "sylow2_generator: no generator in 128 trials");
}

mpz_class dlog_2sylow(const mpz_class& x, const mpz_class& h,
                      const mpz_class& q, unsigned alpha,
                      const mpz_class& r_odd) {
  if (x % q == 0) throw_bad_argument("dlog_2sylow: x not a unit mod q");
  mpz_class target = modpow(x, r_odd, q);
  mpz_class hinv;
  if (mpz_invert(hinv.get_mpz_t(), h.get_mpz_t(), q.get_mpz_t()) == 0)
    throw_bad_argument("dlog_2sylow: h not a unit mod q");

  // Decide bit i of b by checking whether the residual has order
  // dividing 2^(alpha-1-i) after stripping the bits found so far.
  mpz_class b = 0;
  mpz_class residual = target;
  for (unsigned i = 0; i < alpha; ++i) {
    mpz_class probe = modpow(residual, mpz_class(1) << (alpha - 1 - i), q);
    if (probe != 1) {
      b |= mpz_class(1) << i;
      residual = (residual * modpow(hinv, mpz_class(1) << i, q)) % q;
    }
  }
  if (residual != 1)
    throw Error(ErrorCode::Internal, "dlog_2sylow: x^r_odd outside <h>");
  return b;
}

}  // namespace invq
