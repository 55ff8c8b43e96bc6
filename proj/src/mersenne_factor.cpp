#include "mersenne_factor.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <string>

namespace invq {

namespace {

mpz_class mersenne(unsigned n) { return (mpz_class(1) << n) - 1; }

std::vector<unsigned> divisors_ascending(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// One Pollard-Brent attempt on odd composite c; returns a nontrivial
// factor or 0 when the iteration budget runs out.  Deterministic given
// the rng state.
mpz_class brent_rho(const mpz_class& c, uint64_t budget, Rng& rng) {
  uint64_t used = 0;
  while (used < budget) {
    mpz_class y = rng.between(1, c - 1);
    mpz_class incr = rng.between(1, c - 1);
    mpz_class x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long batch = 128;
    while (g == 1 && used < budget) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + incr) % c;
      used += r;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        unsigned long lim = std::min(batch, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + incr) % c;
          q = (q * abs(x - y)) % c;
        }
        used += lim;
        g = gcd(q, c);
        k += batch;
      }
      r *= 2;
    }
    if (g == c) {
      // The batch overshot a proper factor; replay one step at a time.
      do {
        ys = (ys * ys + incr) % c;
        g = gcd(abs(x - ys), c);
      } while (g == 1);
    }
    if (g != c && g != 1) return g;
    // Cycle collapsed to the trivial factor: retry with fresh parameters.
  }
  return 0;
}

void factor_into(const mpz_class& value, unsigned mult,
                 std::map<mpz_class, unsigned>& primes,
                 std::map<mpz_class, unsigned>& composites, uint64_t budget,
                 Rng& rng) {
  if (value == 1) return;
  if (is_prime(value)) {
    primes[value] += mult;
    return;
  }
  if (mpz_perfect_power_p(value.get_mpz_t())) {
    unsigned long maxe = mpz_sizeinbase(value.get_mpz_t(), 2);
    for (unsigned long e = 2; e <= maxe; ++e) {
      mpz_class root, rem;
      mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), value.get_mpz_t(), e);
      if (rem == 0) {
        factor_into(root, mult * static_cast<unsigned>(e), primes, composites,
                    budget, rng);
        return;
      }
    }
  }
  mpz_class f = brent_rho(value, budget, rng);
  if (f == 0) {
    composites[value] += mult;
    return;
  }
  factor_into(f, mult, primes, composites, budget, rng);
  factor_into(value / f, mult, primes, composites, budget, rng);
}

// Strips small and order-forced prime factors of the d-th cyclotomic
// part in place, recording them in primes.  Primitive prime factors
// satisfy q == 1 (mod 2d) for odd d, so stepping through that residue
// class reaches far beyond the generic small-prime bound.
void trial_divide_part(mpz_class& v, unsigned d,
                       std::map<mpz_class, unsigned>& primes) {
  for (uint32_t p : small_primes()) {
    if (mpz_class(p) * p > v) break;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
      primes[p] += 1;
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
    }
  }
  if (v == 1 || d % 2 == 0) return;
  const uint64_t step = 2ull * d;
  // Bounded scan; anything past it is rho's job.
  const uint64_t limit = step * (uint64_t(1) << 20);
  for (uint64_t q = step + 1; q < limit; q += step) {
    mpz_class qz(static_cast<unsigned long>(q));
    if (qz * qz > v) break;
    if (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(q))) {
      // q divides v and every prime factor of q also divides 2^n - 1;
      // only record certified primes here.
      if (!is_prime(qz)) continue;
      while (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(q))) {
        primes[qz] += 1;
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(),
                        static_cast<unsigned long>(q));
      }
    }
  }
}

}  // namespace

std::vector<std::pair<unsigned, mpz_class>> cyclotomic_split(unsigned n) {
  if (n < 1) throw_bad_argument("cyclotomic_split: n must be >= 1");
  std::vector<std::pair<unsigned, mpz_class>> out;
  for (unsigned d : divisors_ascending(n)) {
    mpz_class phi = mersenne(d);
    for (const auto& [e, val] : out)
      if (d % e == 0) mpz_divexact(phi.get_mpz_t(), phi.get_mpz_t(), val.get_mpz_t());
    out.emplace_back(d, phi);
  }
  return out;
}

FactorTable load_factor_table(std::istream& in) {
  FactorTable table;
  std::string line;
  unsigned long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;
    auto parse = [&](const std::string& s) -> mpz_class {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("factor table line " + std::to_string(lineno) +
                         ": bad integer '" + s + "'");
      return mpz_class(s);
    };
    mpz_class nz = parse(tok);
    if (nz < 2 || !nz.fits_uint_p())
      throw ParseError("factor table line " + std::to_string(lineno) +
                       ": n out of range");
    unsigned n = static_cast<unsigned>(nz.get_ui());
    if (table.entries.count(n))
      throw Error(ErrorCode::ValidationError,
                  "factor table line " + std::to_string(lineno) +
                      ": duplicate entry for n=" + std::to_string(n));
    std::vector<mpz_class> factors;
    while (ss >> tok) factors.push_back(parse(tok));
    if (factors.empty())
      throw ParseError("factor table line " + std::to_string(lineno) +
                       ": no factors listed");
    mpz_class prod = 1;
    for (const mpz_class& q : factors) {
      if (!is_prime(q))
        throw Error(ErrorCode::ValidationError,
                    "factor table n=" + std::to_string(n) + ": listed factor " +
                        q.get_str() + " is not prime");
      prod *= q;
    }
    if (prod != mersenne(n))
      throw Error(ErrorCode::ValidationError,
                  "factor table n=" + std::to_string(n) +
                      ": product of factors != 2^n - 1");
    std::sort(factors.begin(), factors.end());
    table.entries.emplace(n, std::move(factors));
  }
  return table;
}

MersenneFactorization factor_mersenne(unsigned n, const FactorTable* table,
                                      uint64_t budget, Rng& rng) {
  if (n < 2) throw_bad_argument("factor_mersenne: n must be >= 2");
  std::map<mpz_class, unsigned> primes;
  std::map<mpz_class, unsigned> composites;

  if (table && table->entries.count(n)) {
    for (const mpz_class& q : table->entries.at(n)) primes[q] += 1;
  } else {
    for (const auto& [d, value] : cyclotomic_split(n)) {
      mpz_class v = value;
      if (v == 1) continue;
      trial_divide_part(v, d, primes);
      factor_into(v, 1, primes, composites, budget, rng);
    }
  }

  MersenneFactorization out;
  out.n = n;
  out.radical = 1;
  for (const auto& [q, m] : primes) {
    out.prime_powers.emplace_back(q, m);
    out.radical *= q;
  }
  for (const auto& [c, m] : composites) out.composites.emplace_back(c, m);
  out.complete = composites.empty();
  mpz_class whole = mersenne(n);
  mpz_divexact(out.lift_q.get_mpz_t(), whole.get_mpz_t(),
               out.radical.get_mpz_t());
  return out;
}

CongruenceReport check_divisor_congruences(const MersenneFactorization& f) {
  if (!f.complete)
    throw Error(ErrorCode::IncompleteFactorization,
                "check_divisor_congruences: factorization incomplete");
  CongruenceReport report;
  report.n_prime = is_prime(mpz_class(f.n));
  report.n_odd = (f.n % 2 == 1);
  for (const auto& [q, m] : f.prime_powers) {
    CongruenceCheck c;
    c.q = q;
    if (report.n_prime) {
      c.mod_n_applicable = true;
      c.mod_n_ok = (q % f.n == 1);
    }
    if (report.n_odd) {
      mpz_class r = q % 8;
      c.mod8_applicable = true;
      c.mod8_ok = (r == 1 || r == 7);
    }
    if ((c.mod_n_applicable && !c.mod_n_ok) ||
        (c.mod8_applicable && !c.mod8_ok))
      report.all_ok = false;
    report.checks.push_back(std::move(c));
  }
  return report;
}

OmegaReport omega_report(const MersenneFactorization& f) {
  if (!f.complete)
    throw Error(ErrorCode::IncompleteFactorization,
                "omega_report: factorization incomplete");
  OmegaReport r;
  r.omega = static_cast<unsigned>(f.prime_powers.size());
  r.bound = 1.36 * std::log(static_cast<double>(f.n));
  r.within = r.omega < r.bound;
  r.squarefree = std::all_of(f.prime_powers.begin(), f.prime_powers.end(),
                             [](const auto& pm) { return pm.second == 1; });
  return r;
}

}  // namespace invq
