// Command-line front end over the public C API (invq/invq.h).
#include <invq/invq.h>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  invq_string_free(s);
  return out;
}

int fail(const std::string& ctx) {
  std::cerr << "error: " << ctx << ": " << invq_last_error() << "\n";
  return 1;
}

struct TableHandle {
  invq_table* t = nullptr;
  ~TableHandle() { invq_table_free(t); }
};

int load_table(const std::string& path, TableHandle& h) {
  if (path.empty()) return 0;
  if (invq_table_load(path.c_str(), &h.t) != INVQ_OK)
    return fail("loading table " + path);
  return 0;
}

void print_factorization(invq_factorization* f, unsigned n) {
  std::cout << "n = " << n << "\n";
  std::ostringstream prod;
  size_t np = invq_factorization_prime_count(f);
  for (size_t i = 0; i < np; ++i) {
    char* q = nullptr;
    unsigned m = 0;
    invq_factorization_prime(f, i, &q, &m);
    if (i) prod << " * ";
    prod << take(q);
    if (m > 1) prod << "^" << m;
  }
  size_t nc = invq_factorization_composite_count(f);
  for (size_t i = 0; i < nc; ++i) {
    char* c = nullptr;
    unsigned m = 0;
    invq_factorization_composite(f, i, &c, &m);
    prod << (np + i ? " * " : "") << "C" << take(c);
    if (m > 1) prod << "^" << m;
  }
  std::cout << "2^" << n << " - 1 = " << prod.str() << "\n";
  char* rad = nullptr;
  char* q = nullptr;
  invq_factorization_radical(f, &rad);
  invq_factorization_lift_q(f, &q);
  std::cout << "radical = " << take(rad) << "\n";
  std::cout << "Q = " << take(q) << "\n";
  std::cout << "complete = "
            << (invq_factorization_complete(f) ? "yes" : "no") << "\n";
}

int cmd_factor(unsigned n, const std::string& table_path) {
  TableHandle table;
  if (int rc = load_table(table_path, table)) return rc;
  invq_factorization* f = nullptr;
  if (invq_factor_mersenne(n, table.t, nullptr, &f) != INVQ_OK)
    return fail("factoring 2^n - 1");
  print_factorization(f, n);
  if (invq_factorization_complete(f)) {
    unsigned omega = 0;
    double bound = 0;
    int within = 0, squarefree = 0;
    invq_omega_report(f, &omega, &bound, &within, &squarefree);
    std::cout << "omega = " << omega << ", bound(1.36 ln n) = " << bound
              << ", within = " << (within ? "yes" : "no") << ", squarefree = "
              << (squarefree ? "yes" : "no") << "\n";
    char* text = nullptr;
    int all_ok = 0;
    invq_congruence_report(f, &text, &all_ok);
    std::cout << "congruence report (" << (all_ok ? "all ok" : "FAILURES")
              << "):\n" << take(text);
  } else {
    std::cout << "factorization incomplete: raise the rho budget or supply "
                 "--table\n";
  }
  int complete = invq_factorization_complete(f);
  invq_factorization_free(f);
  return complete ? 0 : 1;
}

int cmd_decompose(unsigned n, const std::string& table_path, uint64_t seed,
                  bool cubics, const std::string& policy,
                  const std::string& out_path) {
  TableHandle table;
  if (int rc = load_table(table_path, table)) return rc;
  invq_factorization* f = nullptr;
  invq_factor_options fopts;
  invq_factor_options_init(&fopts);
  fopts.seed = seed;
  if (invq_factor_mersenne(n, table.t, &fopts, &f) != INVQ_OK)
    return fail("factoring 2^n - 1");
  invq_decompose_options opts;
  invq_decompose_options_init(&opts);
  opts.seed = seed;
  opts.include_cubics = cubics ? 1 : 0;
  opts.policy = (policy == "basis") ? INVQ_POLICY_ANY_BASIS
                                    : INVQ_POLICY_UNIT_VECTOR_FIRST;
  invq_certificate* cert = nullptr;
  int fallback = 0, used_cubics = 0;
  invq_status st = invq_decompose(n, f, &opts, &cert, &fallback, &used_cubics);
  invq_factorization_free(f);
  if (st != INVQ_OK) return fail("decomposing");
  char* text = nullptr;
  invq_certificate_serialize(cert, &text);
  std::string doc = take(text);
  std::ostringstream status;
  status << "verified = yes, method = " << invq_certificate_method(cert)
         << ", factors = " << invq_certificate_factor_count(cert)
         << ", fallback = " << (fallback ? "yes" : "no")
         << ", cubics = " << (used_cubics ? "yes" : "no");
  invq_certificate_free(cert);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
    out << doc;
    std::cout << "wrote " << out_path << "\n" << status.str() << "\n";
  } else {
    std::cout << doc;
    std::cerr << status.str() << "\n";
  }
  return 0;
}

int cmd_good(unsigned n, uint64_t s_max) {
  uint64_t k = 0, s = 0, nu = 0;
  int found = 0;
  if (invq_good_witness(n, s_max, &k, &s, &nu, &found) != INVQ_OK)
    return fail("good-integer search");
  if (found)
    std::cout << "n = " << n << ": good, witness k = " << k << ", s = " << s
              << ", nu = " << nu
              << "  ((n-1)/2^nu == 2^k * 3^s (mod 2^n - 1))\n";
  else
    std::cout << "n = " << n << ": not good within bound (s <= "
              << (s_max == UINT64_MAX ? 4ull * n : s_max)
              << "); this is not a proof of superbadness\n";
  return 0;
}

int cmd_scan_good(uint64_t x_max, uint64_t s_max) {
  uint64_t* values = nullptr;
  size_t count = 0;
  if (invq_scan_good(x_max, s_max, &values, &count) != INVQ_OK)
    return fail("scan");
  for (size_t i = 0; i < count; ++i)
    std::cout << values[i] << (i + 1 < count ? " " : "\n");
  invq_u64_free(values);
  return 0;
}

int cmd_symbol(uint64_t a, uint64_t n) {
  int value = 0;
  uint64_t ell = 0;
  char* chain = nullptr;
  invq_status st = invq_rotkiewicz_symbol(a, n, &value, &ell, &chain);
  int jvalue = 0;
  bool have_jacobi = invq_jacobi_gold(a, n, &jvalue) == INVQ_OK;
  if (st == INVQ_ERR_NONCOPRIME) {
    std::cerr << "error: " << invq_last_error() << "\n";
    if (have_jacobi)
      std::cerr << "generic jacobi(2^" << a << "+1, 2^" << n
                << "-1) = " << jvalue << "\n";
    return 1;
  }
  if (st != INVQ_OK) return fail("symbol");
  std::cout << "rotkiewicz(" << a << ", " << n << ") = "
            << (value > 0 ? "+1" : "-1") << ", l = " << ell << "\n";
  std::cout << "chain: " << take(chain) << "\n";
  if (have_jacobi)
    std::cout << "jacobi(2^" << a << "+1, 2^" << n << "-1) = "
              << (jvalue > 0 ? "+1" : (jvalue < 0 ? "-1" : "0")) << " ("
              << (jvalue == value ? "agrees" : "DISAGREES") << ")\n";
  return (have_jacobi && jvalue != value) ? 1 : 0;
}

int cmd_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  invq_certificate* cert = nullptr;
  if (invq_certificate_parse(buf.str().c_str(), &cert) != INVQ_OK)
    return fail("parsing certificate");
  int ok = 0;
  char* residue = nullptr;
  char* detail = nullptr;
  invq_status st = invq_certificate_verify(cert, &ok, &residue, &detail);
  unsigned n = invq_certificate_n(cert);
  std::cout << "n = " << n << ", method = " << invq_certificate_method(cert)
            << ", factors = " << invq_certificate_factor_count(cert) << "\n";
  invq_certificate_free(cert);
  if (st != INVQ_OK) {
    invq_string_free(residue);
    invq_string_free(detail);
    return fail("verifying certificate");
  }
  std::string det = take(detail);
  if (ok) {
    std::cout << "verified: residue " << take(residue) << " == -1 (mod 2^" << n
              << " - 1)\n";
    return 0;
  }
  std::cout << "verification FAILED: " << det << "\n";
  invq_string_free(residue);
  return 1;
}

int cmd_sweep(uint64_t max_n, const std::string& table_path,
              const std::string& out_dir, uint64_t seed) {
  TableHandle table;
  if (int rc = load_table(table_path, table)) return rc;
  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
      std::cerr << "error: cannot create " << out_dir << "\n";
      return 1;
    }
  }
  std::cout << "# n\tk\tmethod\tfallback\tcubics\tms\n";
  int failures = 0;
  for (uint64_t n = 3; n <= max_n; n += 2) {
    auto t0 = std::chrono::steady_clock::now();
    invq_factorization* f = nullptr;
    invq_factor_options fopts;
    invq_factor_options_init(&fopts);
    fopts.seed = seed;
    if (invq_factor_mersenne(static_cast<unsigned>(n), table.t, &fopts, &f) !=
        INVQ_OK) {
      std::cout << n << "\t-\t-\t-\t-\tFAILED: " << invq_last_error() << "\n";
      ++failures;
      continue;
    }
    invq_decompose_options opts;
    invq_decompose_options_init(&opts);
    opts.seed = seed;
    // Cubic candidates stay available as the contingency pool.
    opts.include_cubics = 1;
    invq_certificate* cert = nullptr;
    int fallback = 0, cubics = 0;
    invq_status st = invq_decompose(static_cast<unsigned>(n), f, &opts, &cert,
                                    &fallback, &cubics);
    unsigned omega = 0;
    invq_omega_report(f, &omega, nullptr, nullptr, nullptr);
    invq_factorization_free(f);
    if (st != INVQ_OK) {
      std::cout << n << "\t" << omega << "\t-\t-\t-\tFAILED: "
                << invq_last_error() << "\n";
      ++failures;
      continue;
    }
    if (!out_dir.empty()) {
      char* text = nullptr;
      invq_certificate_serialize(cert, &text);
      std::string doc = take(text);
      std::string path = out_dir + "/cert_" + std::to_string(n) + ".json";
      std::ofstream out(path);
      if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        invq_certificate_free(cert);
        return 1;
      }
      out << doc;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << n << "\t" << omega << "\t" << invq_certificate_method(cert)
              << "\t" << (fallback ? "yes" : "no") << "\t"
              << (cubics ? "yes" : "no") << "\t" << ms << "\n";
    invq_certificate_free(cert);
  }
  if (failures) {
    std::cerr << failures << " decompositions failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decompositions of the inverse power map exponent mod 2^n - 1"};
  app.require_subcommand(1);

  unsigned arg_n = 0;
  uint64_t arg_a = 0, arg_n64 = 0, arg_max = 0;
  uint64_t arg_smax = UINT64_MAX, arg_seed = 0;
  std::string arg_table, arg_out, arg_policy = "unit", arg_file;
  bool arg_cubics = false;

  CLI::App* c_factor = app.add_subcommand("factor", "factor 2^n - 1");
  c_factor->add_option("n", arg_n, "modulus exponent")->required();
  c_factor->add_option("--table", arg_table, "factor table file");

  CLI::App* c_dec =
      app.add_subcommand("decompose", "emit a verified certificate for n");
  c_dec->add_option("n", arg_n, "odd modulus exponent")->required();
  c_dec->add_option("--table", arg_table, "factor table file");
  c_dec->add_option("--seed", arg_seed, "random seed");
  c_dec->add_flag("--cubics", arg_cubics, "allow cubic candidates");
  c_dec->add_option("--policy", arg_policy, "unit|basis")
      ->check(CLI::IsMember({"unit", "basis"}));
  c_dec->add_option("--out", arg_out, "certificate output file");

  CLI::App* c_good = app.add_subcommand("good", "good-integer witness for n");
  c_good->add_option("n", arg_n, "odd integer >= 3")->required();
  c_good->add_option("--smax", arg_smax, "bound on s (default 4n)");

  CLI::App* c_scan = app.add_subcommand("scan-good", "list good n <= max");
  c_scan->add_option("--max", arg_max, "upper bound")->required();
  c_scan->add_option("--smax", arg_smax, "bound on s (default 4n)");

  CLI::App* c_sym =
      app.add_subcommand("symbol", "even-quotient symbol (2^a+1 / 2^n-1)");
  c_sym->add_option("a", arg_a, "odd exponent a")->required();
  c_sym->add_option("n", arg_n64, "odd exponent n")->required();

  CLI::App* c_verify = app.add_subcommand("verify", "re-verify a certificate");
  c_verify->add_option("file", arg_file, "certificate file")->required();

  CLI::App* c_sweep =
      app.add_subcommand("sweep", "decompose all odd n in [3, max]");
  c_sweep->add_option("--max", arg_max, "upper bound")->required();
  c_sweep->add_option("--table", arg_table, "factor table file");
  c_sweep->add_option("--out", arg_out, "certificate output directory");
  c_sweep->add_option("--seed", arg_seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  if (c_factor->parsed()) return cmd_factor(arg_n, arg_table);
  if (c_dec->parsed())
    return cmd_decompose(arg_n, arg_table, arg_seed, arg_cubics, arg_policy,
                         arg_out);
  if (c_good->parsed()) return cmd_good(arg_n, arg_smax);
  if (c_scan->parsed()) return cmd_scan_good(arg_max, arg_smax);
  if (c_sym->parsed()) return cmd_symbol(arg_a, arg_n64);
  if (c_verify->parsed()) return cmd_verify(arg_file);
  if (c_sweep->parsed()) return cmd_sweep(arg_max, arg_table, arg_out, arg_seed);
  return 1;
}
