#include <doctest.h>

#include <cstring>
#include <string>

#include <invq/invq.h>

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  invq_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version string is present") {
  const char* v = invq_version();
  REQUIRE(v != nullptr);
  CHECK(std::strlen(v) > 0);
}

TEST_CASE("factor 2^21 - 1 through the C surface") {
  invq_factor_options opts;
  invq_factor_options_init(&opts);
  invq_factorization* f = nullptr;
  REQUIRE(invq_factor_mersenne(21, nullptr, &opts, &f) == INVQ_OK);
  CHECK(invq_factorization_complete(f) == 1);
  REQUIRE(invq_factorization_prime_count(f) == 3);

  char* q = nullptr;
  unsigned mult = 0;
  REQUIRE(invq_factorization_prime(f, 0, &q, &mult) == INVQ_OK);
  CHECK(take(q) == "7");
  CHECK(mult == 2);
  REQUIRE(invq_factorization_prime(f, 2, &q, &mult) == INVQ_OK);
  CHECK(take(q) == "337");
  CHECK(mult == 1);

  char* rad = nullptr;
  REQUIRE(invq_factorization_radical(f, &rad) == INVQ_OK);
  CHECK(take(rad) == "299593");  // 7 * 127 * 337
  char* lift = nullptr;
  REQUIRE(invq_factorization_lift_q(f, &lift) == INVQ_OK);
  CHECK(take(lift) == "7");

  unsigned omega = 0;
  double bound = 0;
  int within = 0, squarefree = 0;
  REQUIRE(invq_omega_report(f, &omega, &bound, &within, &squarefree) ==
          INVQ_OK);
  CHECK(omega == 3);
  CHECK(squarefree == 0);

  CHECK(invq_factorization_prime(f, 99, &q, &mult) == INVQ_ERR_BAD_ARGUMENT);
  CHECK(std::strlen(invq_last_error()) > 0);

  invq_factorization_free(f);
}

TEST_CASE("congruence report for a prime exponent") {
  invq_factor_options opts;
  invq_factor_options_init(&opts);
  invq_factorization* f = nullptr;
  REQUIRE(invq_factor_mersenne(11, nullptr, &opts, &f) == INVQ_OK);
  char* text = nullptr;
  int all_ok = 0;
  REQUIRE(invq_congruence_report(f, &text, &all_ok) == INVQ_OK);
  std::string report = take(text);
  CHECK(all_ok == 1);
  CHECK(report.find("23") != std::string::npos);
  CHECK(report.find("89") != std::string::npos);
  invq_factorization_free(f);
}

TEST_CASE("table load rejects a missing file") {
  invq_table* t = nullptr;
  CHECK(invq_table_load("/nonexistent/table.txt", &t) == INVQ_ERR_IO);
  CHECK(t == nullptr);
}

TEST_CASE("decompose and certificate round-trip") {
  invq_factor_options fopts;
  invq_factor_options_init(&fopts);
  invq_factorization* f = nullptr;
  REQUIRE(invq_factor_mersenne(9, nullptr, &fopts, &f) == INVQ_OK);

  invq_decompose_options dopts;
  invq_decompose_options_init(&dopts);
  CHECK(dopts.reduce_multiplicities == 1);
  invq_certificate* cert = nullptr;
  int fallback = 0, cubics = 0;
  REQUIRE(invq_decompose(9, f, &dopts, &cert, &fallback, &cubics) == INVQ_OK);
  CHECK(fallback == 1);
  CHECK(cubics == 0);
  CHECK(invq_certificate_n(cert) == 9);
  CHECK(std::string(invq_certificate_method(cert)) == "algorithm1");
  CHECK(invq_certificate_verified(cert) == 1);

  char* text = nullptr;
  REQUIRE(invq_certificate_serialize(cert, &text) == INVQ_OK);
  std::string doc = take(text);
  invq_certificate* back = nullptr;
  REQUIRE(invq_certificate_parse(doc.c_str(), &back) == INVQ_OK);
  CHECK(invq_certificate_verified(back) == 1);
  CHECK(invq_certificate_factor_count(back) ==
        invq_certificate_factor_count(cert));

  int ok = 0;
  char* residue = nullptr;
  REQUIRE(invq_certificate_verify(back, &ok, &residue, nullptr) == INVQ_OK);
  CHECK(ok == 1);
  CHECK(take(residue) == "510");

  invq_certificate_free(back);
  invq_certificate_free(cert);
  invq_factorization_free(f);
}

TEST_CASE("strict unit policy reports a span failure status") {
  invq_factor_options fopts;
  invq_factor_options_init(&fopts);
  invq_factorization* f = nullptr;
  REQUIRE(invq_factor_mersenne(9, nullptr, &fopts, &f) == INVQ_OK);
  invq_decompose_options dopts;
  invq_decompose_options_init(&dopts);
  dopts.strict_unit = 1;
  invq_certificate* cert = nullptr;
  CHECK(invq_decompose(9, f, &dopts, &cert, nullptr, nullptr) ==
        INVQ_ERR_SPAN_FAILURE);
  CHECK(cert == nullptr);
  invq_factorization_free(f);
}

TEST_CASE("good witness queries") {
  uint64_t k = 99, s = 99, nu = 99;
  int found = 0;
  REQUIRE(invq_good_witness(7, UINT64_MAX, &k, &s, &nu, &found) == INVQ_OK);
  CHECK(found == 1);
  CHECK(k == 0);
  CHECK(s == 1);
  CHECK(nu == 1);
  REQUIRE(invq_good_witness(11, UINT64_MAX, &k, &s, &nu, &found) == INVQ_OK);
  CHECK(found == 0);
}

TEST_CASE("scan_good matches the census") {
  uint64_t* values = nullptr;
  size_t count = 0;
  REQUIRE(invq_scan_good(50, UINT64_MAX, &values, &count) == INVQ_OK);
  REQUIRE(count == 16);
  uint64_t want[] = {1, 2, 3, 4, 5, 7, 9, 10, 13, 17, 19, 25, 28, 33, 37, 49};
  for (size_t i = 0; i < count; ++i) CHECK(values[i] == want[i]);
  invq_u64_free(values);
}

TEST_CASE("theorem1 certificate through the C surface") {
  invq_certificate* cert = nullptr;
  int found = 0;
  REQUIRE(invq_theorem1_certificate(13, UINT64_MAX, &cert, &found) == INVQ_OK);
  REQUIRE(found == 1);
  CHECK(std::string(invq_certificate_method(cert)) == "theorem1");
  CHECK(invq_certificate_verified(cert) == 1);
  const char* kind = nullptr;
  unsigned a = 0, b = 0;
  char* value = nullptr;
  REQUIRE(invq_certificate_factor(cert, 0, &kind, &a, &b, &value, nullptr) ==
          INVQ_OK);
  CHECK(std::string(kind) == "frobenius");
  CHECK(take(value) == "2");
  invq_certificate_free(cert);
}

TEST_CASE("rotkiewicz symbol with chain text") {
  int value = 0;
  uint64_t ell = 0;
  char* chain = nullptr;
  REQUIRE(invq_rotkiewicz_symbol(5, 7, &value, &ell, &chain) == INVQ_OK);
  CHECK(value == -1);
  CHECK(ell == 2);
  CHECK(take(chain) == "7 = 2*5 - 3; 5 = 2*3 - 1");

  int jac = 0;
  REQUIRE(invq_jacobi_gold(5, 7, &jac) == INVQ_OK);
  CHECK(jac == -1);

  CHECK(invq_rotkiewicz_symbol(3, 9, &value, &ell, nullptr) ==
        INVQ_ERR_NONCOPRIME);
}

TEST_CASE("parse errors set last_error") {
  invq_certificate* cert = nullptr;
  CHECK(invq_certificate_parse("{]", &cert) == INVQ_ERR_PARSE);
  CHECK(cert == nullptr);
  CHECK(std::strlen(invq_last_error()) > 0);
}

TEST_CASE("null arguments are rejected not crashed") {
  CHECK(invq_factor_mersenne(9, nullptr, nullptr, nullptr) ==
        INVQ_ERR_BAD_ARGUMENT);
  CHECK(invq_table_load(nullptr, nullptr) == INVQ_ERR_BAD_ARGUMENT);
  CHECK(invq_certificate_parse(nullptr, nullptr) == INVQ_ERR_BAD_ARGUMENT);
}
