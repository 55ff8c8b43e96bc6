#include "decomposer.hpp"

#include <algorithm>
#include <sstream>

#include "certify.hpp"

namespace invq {

namespace {

Candidate make_quadratic(unsigned a) {
  Candidate c;
  c.kind = GoldFactor::Kind::Quadratic;
  c.a = a;
  c.value = (mpz_class(1) << a) + 1;
  return c;
}

Candidate make_cubic(unsigned a, unsigned b) {
  Candidate c;
  c.kind = GoldFactor::Kind::Cubic;
  c.a = a;
  c.b = b;
  c.value = (mpz_class(1) << a) + (mpz_class(1) << b) + 1;
  return c;
}

// All quadratic candidates for n with nondegenerate sign patterns, a
// ascending.
std::vector<Candidate> quadratic_pool(unsigned n,
                                      const std::vector<mpz_class>& primes) {
  std::vector<Candidate> pool;
  for (unsigned a = 1; a + 2 <= n; a += 2) {
    Candidate c = make_quadratic(a);
    if (auto pv = legendre_parity_vector(c, primes)) {
      c.parity = std::move(*pv);
      pool.push_back(std::move(c));
    }
  }
  return pool;
}

std::vector<Candidate> cubic_pool(unsigned n,
                                  const std::vector<mpz_class>& primes) {
  std::vector<Candidate> pool;
  for (unsigned a = 2; a + 2 <= n; ++a) {
    for (unsigned b = 1; b < a; ++b) {
      Candidate c = make_cubic(a, b);
      if (auto pv = legendre_parity_vector(c, primes)) {
        c.parity = std::move(*pv);
        pool.push_back(std::move(c));
      }
    }
  }
  return pool;
}

std::string parity_dump(const std::vector<Candidate>& pool) {
  std::ostringstream os;
  for (const Candidate& c : pool) {
    if (c.kind == GoldFactor::Kind::Cubic)
      os << " (" << c.a << "," << c.b << ")=";
    else
      os << " a" << c.a << "=";
    for (uint8_t bit : c.parity.bits) os << int(bit);
  }
  return os.str();
}

mpz_class carmichael(const MersenneFactorization& f) {
  mpz_class lambda = 1;
  for (const auto& [q, m] : f.prime_powers) {
    mpz_class part = q - 1;
    for (unsigned i = 1; i < m; ++i) part *= q;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), lambda.get_mpz_t(), part.get_mpz_t());
    lambda = l;
  }
  return lambda;
}

}  // namespace

std::optional<ParityVector> legendre_parity_vector(
    const Candidate& cand, const std::vector<mpz_class>& primes) {
  ParityVector pv;
  pv.a = cand.a;
  pv.b = cand.b;
  pv.bits.reserve(primes.size());
  for (const mpz_class& q : primes) {
    int sym = jacobi(cand.value % q, q);
    if (sym == 0) return std::nullopt;
    pv.bits.push_back(sym == -1 ? 1 : 0);
  }
  return pv;
}

std::vector<Candidate> select_candidates(unsigned n,
                                         const std::vector<mpz_class>& primes,
                                         const DecomposeOptions& opts,
                                         RunStats* stats) {
  const unsigned k = static_cast<unsigned>(primes.size());
  if (k == 0) throw_bad_argument("select_candidates: no primes");
  std::vector<Candidate> pool = quadratic_pool(n, primes);

  if (opts.policy == SelectionPolicy::UnitVectorFirst) {
    std::vector<Candidate> picked(k);
    bool complete = true;
    for (unsigned i = 0; i < k && complete; ++i) {
      auto hit = std::find_if(pool.begin(), pool.end(), [&](const Candidate& c) {
        for (unsigned j = 0; j < k; ++j)
          if (c.parity.bits[j] != (i == j ? 1 : 0)) return false;
        return true;
      });
      if (hit == pool.end())
        complete = false;
      else
        picked[i] = *hit;
    }
    if (complete) return picked;
    if (opts.strict_unit)
      throw Error(ErrorCode::SpanFailure,
                  "select_candidates: no unit sign pattern for some prime; "
                  "parity vectors:" + parity_dump(pool));
    if (stats) stats->fallback_used = true;
  }

  auto try_basis = [&](const std::vector<Candidate>& p)
      -> std::optional<std::vector<Candidate>> {
    std::vector<ParityVector> vecs;
    vecs.reserve(p.size());
    for (const Candidate& c : p) vecs.push_back(c.parity);
    try {
      std::vector<size_t> idx = gf2_rank_select(vecs, k);
      std::vector<Candidate> out;
      out.reserve(k);
      for (size_t i : idx) out.push_back(p[i]);
      return out;
    } catch (const InsufficientRankError&) {
      return std::nullopt;
    }
  };

  if (auto sel = try_basis(pool)) return *sel;
  if (opts.include_cubics) {
    std::vector<Candidate> extended = pool;
    for (Candidate& c : cubic_pool(n, primes)) extended.push_back(std::move(c));
    if (auto sel = try_basis(extended)) {
      bool any_cubic = std::any_of(sel->begin(), sel->end(), [](const auto& c) {
        return c.kind == GoldFactor::Kind::Cubic;
      });
      if (any_cubic && stats) stats->cubics_used = true;
      return *sel;
    }
    pool = std::move(extended);
  }
  throw Error(ErrorCode::SpanFailure,
              "select_candidates: candidate pool spans < k dimensions; "
              "pool:" + parity_dump(pool));
}

DlogMatrix build_dlog_matrix(const std::vector<Candidate>& candidates,
                             const std::vector<SylowData>& sylow) {
  const unsigned k = static_cast<unsigned>(candidates.size());
  if (sylow.size() != k)
    throw_bad_argument("build_dlog_matrix: candidate/prime count mismatch");
  DlogMatrix B;
  B.k = k;
  B.alphas.reserve(k);
  for (const SylowData& s : sylow) B.alphas.push_back(s.alpha);
  B.entries.assign(k, std::vector<mpz_class>(k));
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned j = 0; j < k; ++j) {
      const SylowData& s = sylow[j];
      mpz_class b = dlog_2sylow(candidates[i].value % s.q, s.generator, s.q,
                                s.alpha, s.r_odd);
      if (mpz_odd_p(b.get_mpz_t()) != (candidates[i].parity.bits[j] != 0))
        throw Error(ErrorCode::Internal,
                    "build_dlog_matrix: dlog parity disagrees with sign bit");
      B.entries[i][j] = std::move(b);
    }
  }
  return B;
}

std::vector<mpz_class> assemble_exponents(const std::vector<mpz_class>& y,
                                          const std::vector<SylowData>& sylow,
                                          const MersenneFactorization& f,
                                          bool reduce) {
  mpz_class big_r = 1;
  for (const SylowData& s : sylow) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), big_r.get_mpz_t(), s.r_odd.get_mpz_t());
    big_r = l;
  }
  const mpz_class lambda = carmichael(f);
  std::vector<mpz_class> e;
  e.reserve(y.size());
  for (const mpz_class& yi : y) {
    mpz_class ei = yi * big_r * f.lift_q;
    if (reduce) ei %= lambda;
    e.push_back(std::move(ei));
  }
  return e;
}

DecompositionCertificate decompose(unsigned n, const MersenneFactorization& f,
                                   const DecomposeOptions& opts,
                                   RunStats* stats) {
  if (n < 3 || n % 2 == 0)
    throw_bad_argument("decompose: n must be odd and >= 3");
  if (f.n != n) throw_bad_argument("decompose: factorization is for another n");
  if (!f.complete)
    throw Error(ErrorCode::IncompleteFactorization,
                "decompose: refusing incomplete factorization of 2^n - 1");

  std::vector<mpz_class> primes;
  primes.reserve(f.prime_powers.size());
  for (const auto& [q, m] : f.prime_powers) primes.push_back(q);

  std::vector<Candidate> candidates = select_candidates(n, primes, opts, stats);

  Rng rng(opts.seed);
  std::vector<SylowData> sylow;
  sylow.reserve(f.prime_powers.size());
  for (const auto& [q, m] : f.prime_powers) {
    SylowData s = sylow_split(q, m);
    s.generator = sylow2_generator(s.q, s.alpha, s.r_odd, rng);
    sylow.push_back(std::move(s));
  }

  DlogMatrix B = build_dlog_matrix(candidates, sylow);
  std::vector<mpz_class> y = solve_unit_system(B);
  std::vector<mpz_class> e =
      assemble_exponents(y, sylow, f, opts.reduce_multiplicities);

  DecompositionCertificate cert;
  cert.n = n;
  cert.method = DecompositionCertificate::Method::Algorithm1;
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (e[i] == 0) continue;
    const Candidate& c = candidates[i];
    cert.factors.push_back(c.kind == GoldFactor::Kind::Cubic
                               ? GoldFactor::cubic(c.a, c.b, e[i])
                               : GoldFactor::quadratic(c.a, e[i]));
  }
  VerifyResult vr = verify(cert);
  if (!vr.ok)
    throw Error(ErrorCode::Internal,
                "decompose: pipeline produced a non-verifying certificate: " +
                    vr.detail);
  cert.verified = true;
  return cert;
}

}  // namespace invq
