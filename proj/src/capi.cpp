#include "invq/invq.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "certify.hpp"
#include "decomposer.hpp"
#include "good_integers.hpp"
#include "mersenne_factor.hpp"
#include "modarith.hpp"

using namespace invq;

struct invq_table {
  FactorTable table;
};

struct invq_factorization {
  MersenneFactorization f;
};

struct invq_certificate {
  DecompositionCertificate cert;
};

namespace {

thread_local std::string g_last_error;

invq_status status_of(const Error& e) {
  return static_cast<invq_status>(static_cast<int32_t>(e.code()));
}

// Runs fn, routing exceptions to (status, last_error).
template <typename Fn>
invq_status guarded(Fn&& fn) {
  try {
    fn();
    return INVQ_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return INVQ_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return INVQ_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool cond, const char* msg) {
  if (!cond) throw_bad_argument(msg);
}

const char* kind_cstr(GoldFactor::Kind k) {
  switch (k) {
    case GoldFactor::Kind::Frobenius:
      return "frobenius";
    case GoldFactor::Kind::Quadratic:
      return "quadratic";
    case GoldFactor::Kind::Cubic:
      return "cubic";
  }
  return "?";
}

}  // namespace

extern "C" {

const char* invq_version(void) { return "1.0.0"; }

const char* invq_last_error(void) { return g_last_error.c_str(); }

void invq_string_free(char* s) { std::free(s); }

void invq_u64_free(uint64_t* p) { std::free(p); }

invq_status invq_table_load(const char* path, invq_table** out) {
  return guarded([&] {
    require(path && out, "invq_table_load: null argument");
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError,
                         std::string("cannot open factor table: ") + path);
    auto t = std::make_unique<invq_table>();
    t->table = load_factor_table(in);
    *out = t.release();
  });
}

void invq_table_free(invq_table* t) { delete t; }

void invq_factor_options_init(invq_factor_options* opts) {
  if (!opts) return;
  opts->seed = 0;
  opts->rho_budget = 0;
}

invq_status invq_factor_mersenne(unsigned n, const invq_table* table,
                                 const invq_factor_options* opts,
                                 invq_factorization** out) {
  return guarded([&] {
    require(out != nullptr, "invq_factor_mersenne: null output");
    uint64_t seed = opts ? opts->seed : 0;
    uint64_t budget = (opts && opts->rho_budget) ? opts->rho_budget
                                                 : kDefaultRhoBudget;
    Rng rng(seed);
    auto f = std::make_unique<invq_factorization>();
    f->f = factor_mersenne(n, table ? &table->table : nullptr, budget, rng);
    *out = f.release();
  });
}

void invq_factorization_free(invq_factorization* f) { delete f; }

int invq_factorization_complete(const invq_factorization* f) {
  return f && f->f.complete ? 1 : 0;
}

size_t invq_factorization_prime_count(const invq_factorization* f) {
  return f ? f->f.prime_powers.size() : 0;
}

invq_status invq_factorization_prime(const invq_factorization* f, size_t i,
                                     char** q_dec, unsigned* multiplicity) {
  return guarded([&] {
    require(f && i < f->f.prime_powers.size(),
            "invq_factorization_prime: index out of range");
    if (q_dec) *q_dec = dup_string(f->f.prime_powers[i].first.get_str());
    if (multiplicity) *multiplicity = f->f.prime_powers[i].second;
  });
}

size_t invq_factorization_composite_count(const invq_factorization* f) {
  return f ? f->f.composites.size() : 0;
}

invq_status invq_factorization_composite(const invq_factorization* f, size_t i,
                                         char** c_dec, unsigned* multiplicity) {
  return guarded([&] {
    require(f && i < f->f.composites.size(),
            "invq_factorization_composite: index out of range");
    if (c_dec) *c_dec = dup_string(f->f.composites[i].first.get_str());
    if (multiplicity) *multiplicity = f->f.composites[i].second;
  });
}

invq_status invq_factorization_radical(const invq_factorization* f,
                                       char** dec) {
  return guarded([&] {
    require(f && dec, "invq_factorization_radical: null argument");
    *dec = dup_string(f->f.radical.get_str());
  });
}

invq_status invq_factorization_lift_q(const invq_factorization* f, char** dec) {
  return guarded([&] {
    require(f && dec, "invq_factorization_lift_q: null argument");
    *dec = dup_string(f->f.lift_q.get_str());
  });
}

invq_status invq_congruence_report(const invq_factorization* f, char** text,
                                   int* all_ok) {
  return guarded([&] {
    require(f != nullptr, "invq_congruence_report: null factorization");
    CongruenceReport r = check_divisor_congruences(f->f);
    std::ostringstream os;
    if (!r.n_prime)
      os << "n = " << f->f.n << " composite: q == 1 (mod n) check skipped\n";
    for (const CongruenceCheck& c : r.checks) {
      os << c.q.get_str() << ":";
      if (c.mod_n_applicable)
        os << " mod-n " << (c.mod_n_ok ? "ok" : "FAIL");
      if (c.mod8_applicable)
        os << " mod-8 " << (c.mod8_ok ? "ok" : "FAIL");
      os << "\n";
    }
    if (text) *text = dup_string(os.str());
    if (all_ok) *all_ok = r.all_ok ? 1 : 0;
  });
}

invq_status invq_omega_report(const invq_factorization* f, unsigned* omega,
                              double* bound, int* within, int* squarefree) {
  return guarded([&] {
    require(f != nullptr, "invq_omega_report: null factorization");
    OmegaReport r = omega_report(f->f);
    if (omega) *omega = r.omega;
    if (bound) *bound = r.bound;
    if (within) *within = r.within ? 1 : 0;
    if (squarefree) *squarefree = r.squarefree ? 1 : 0;
  });
}

void invq_decompose_options_init(invq_decompose_options* opts) {
  if (!opts) return;
  opts->seed = 0;
  opts->policy = INVQ_POLICY_UNIT_VECTOR_FIRST;
  opts->include_cubics = 0;
  opts->strict_unit = 0;
  opts->reduce_multiplicities = 1;
}

invq_status invq_decompose(unsigned n, const invq_factorization* f,
                           const invq_decompose_options* opts,
                           invq_certificate** out, int* fallback_used,
                           int* cubics_used) {
  return guarded([&] {
    require(f && out, "invq_decompose: null argument");
    DecomposeOptions o;
    if (opts) {
      require(opts->policy == INVQ_POLICY_UNIT_VECTOR_FIRST ||
                  opts->policy == INVQ_POLICY_ANY_BASIS,
              "invq_decompose: unknown policy");
      o.policy = opts->policy == INVQ_POLICY_ANY_BASIS
                     ? SelectionPolicy::AnyBasis
                     : SelectionPolicy::UnitVectorFirst;
      o.include_cubics = opts->include_cubics != 0;
      o.strict_unit = opts->strict_unit != 0;
      o.reduce_multiplicities = opts->reduce_multiplicities != 0;
      o.seed = opts->seed;
    }
    RunStats stats;
    auto c = std::make_unique<invq_certificate>();
    c->cert = decompose(n, f->f, o, &stats);
    if (fallback_used) *fallback_used = stats.fallback_used ? 1 : 0;
    if (cubics_used) *cubics_used = stats.cubics_used ? 1 : 0;
    *out = c.release();
  });
}

invq_status invq_good_witness(unsigned n, uint64_t s_max, uint64_t* k,
                              uint64_t* s, uint64_t* nu, int* found) {
  return guarded([&] {
    require(found != nullptr, "invq_good_witness: null found");
    std::optional<unsigned long> bound;
    if (s_max != UINT64_MAX) bound = static_cast<unsigned long>(s_max);
    std::optional<GoodWitness> w = good_witness(n, bound);
    *found = w.has_value() ? 1 : 0;
    if (w) {
      if (k) *k = w->k;
      if (s) *s = w->s;
      if (nu) *nu = w->nu;
    }
  });
}

invq_status invq_theorem1_certificate(unsigned n, uint64_t s_max,
                                      invq_certificate** out, int* found) {
  return guarded([&] {
    require(out && found, "invq_theorem1_certificate: null argument");
    std::optional<unsigned long> bound;
    if (s_max != UINT64_MAX) bound = static_cast<unsigned long>(s_max);
    std::optional<GoodWitness> w = good_witness(n, bound);
    *found = w.has_value() ? 1 : 0;
    *out = nullptr;
    if (!w) return;
    auto c = std::make_unique<invq_certificate>();
    c->cert = theorem1_decomposition(*w);
    c->cert.verified = verify(c->cert).ok;
    *out = c.release();
  });
}

invq_status invq_scan_good(uint64_t x_max, uint64_t s_max, uint64_t** values,
                           size_t* count) {
  return guarded([&] {
    require(values && count, "invq_scan_good: null argument");
    std::optional<unsigned long> bound;
    if (s_max != UINT64_MAX) bound = static_cast<unsigned long>(s_max);
    std::vector<unsigned long> good = scan_good(x_max, bound);
    uint64_t* buf =
        static_cast<uint64_t*>(std::malloc(sizeof(uint64_t) * good.size()));
    if (!buf && !good.empty()) throw std::bad_alloc();
    for (size_t i = 0; i < good.size(); ++i) buf[i] = good[i];
    *values = buf;
    *count = good.size();
  });
}

invq_status invq_rotkiewicz_symbol(uint64_t a, uint64_t n, int* value,
                                   uint64_t* ell, char** chain_text) {
  return guarded([&] {
    require(value != nullptr, "invq_rotkiewicz_symbol: null value");
    RotkiewiczSymbol sym = rotkiewicz_symbol(static_cast<unsigned long>(a),
                                             static_cast<unsigned long>(n));
    *value = sym.value;
    if (ell) *ell = sym.chain.ell();
    if (chain_text) {
      std::ostringstream os;
      unsigned long prev = sym.chain.n, cur = sym.chain.a;
      for (size_t t = 0; t < sym.chain.steps.size(); ++t) {
        const ChainStep& st = sym.chain.steps[t];
        if (t) os << "; ";
        os << prev << " = " << 2 * st.k << "*" << cur
           << (st.eps > 0 ? " + " : " - ") << st.r;
        prev = cur;
        cur = st.r;
      }
      *chain_text = dup_string(os.str());
    }
  });
}

invq_status invq_jacobi_gold(uint64_t a, uint64_t n, int* value) {
  return guarded([&] {
    require(value != nullptr, "invq_jacobi_gold: null value");
    require(n >= 2 && n <= 1000000, "invq_jacobi_gold: n out of range");
    require(a >= 1 && a < n, "invq_jacobi_gold: need 1 <= a < n");
    mpz_class gold = (mpz_class(1) << static_cast<unsigned long>(a)) + 1;
    mpz_class mod = (mpz_class(1) << static_cast<unsigned long>(n)) - 1;
    *value = jacobi(gold, mod);
  });
}

invq_status invq_certificate_parse(const char* text, invq_certificate** out) {
  return guarded([&] {
    require(text && out, "invq_certificate_parse: null argument");
    auto c = std::make_unique<invq_certificate>();
    c->cert = deserialize(text);
    *out = c.release();
  });
}

invq_status invq_certificate_serialize(const invq_certificate* c, char** text) {
  return guarded([&] {
    require(c && text, "invq_certificate_serialize: null argument");
    *text = dup_string(serialize(c->cert));
  });
}

void invq_certificate_free(invq_certificate* c) { delete c; }

unsigned invq_certificate_n(const invq_certificate* c) {
  return c ? c->cert.n : 0;
}

const char* invq_certificate_method(const invq_certificate* c) {
  if (!c) return "?";
  return c->cert.method == DecompositionCertificate::Method::Theorem1
             ? "theorem1"
             : "algorithm1";
}

int invq_certificate_verified(const invq_certificate* c) {
  return c && c->cert.verified ? 1 : 0;
}

size_t invq_certificate_factor_count(const invq_certificate* c) {
  return c ? c->cert.factors.size() : 0;
}

invq_status invq_certificate_factor(const invq_certificate* c, size_t i,
                                    const char** kind, unsigned* a, unsigned* b,
                                    char** value_dec, char** mult_dec) {
  return guarded([&] {
    require(c && i < c->cert.factors.size(),
            "invq_certificate_factor: index out of range");
    const GoldFactor& f = c->cert.factors[i];
    if (kind) *kind = kind_cstr(f.kind);
    if (a) *a = f.a;
    if (b) *b = f.b;
    if (value_dec) *value_dec = dup_string(f.exponent_value.get_str());
    if (mult_dec) *mult_dec = dup_string(f.multiplicity.get_str());
  });
}

invq_status invq_certificate_verify(const invq_certificate* c, int* ok,
                                    char** residue_dec, char** detail) {
  return guarded([&] {
    require(c && ok, "invq_certificate_verify: null argument");
    VerifyResult r = verify(c->cert);
    *ok = r.ok ? 1 : 0;
    if (residue_dec) *residue_dec = dup_string(r.residue.get_str());
    if (detail) *detail = dup_string(r.detail);
  });
}

}  // extern "C"
