#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "lin2k.hpp"

using namespace invq;

static ParityVector pv(unsigned a, std::vector<uint8_t> bits) {
  ParityVector v;
  v.a = a;
  v.b = 0;
  v.bits = std::move(bits);
  return v;
}

TEST_CASE("gf2_rank_select keeps an independent subset in input order") {
  std::vector<ParityVector> vecs = {
      pv(1, {1, 0}), pv(3, {1, 0}), pv(5, {1, 1}), pv(7, {0, 1})};
  std::vector<size_t> sel = gf2_rank_select(vecs, 2);
  REQUIRE(sel.size() == 2);
  CHECK(sel[0] == 0);
  CHECK(sel[1] == 2);
}

TEST_CASE("gf2_rank_select reports the rank it reached") {
  std::vector<ParityVector> vecs = {pv(1, {1, 0, 1}), pv(3, {1, 0, 1}),
                                    pv(5, {0, 0, 0})};
  try {
    gf2_rank_select(vecs, 3);
    FAIL("expected InsufficientRankError");
  } catch (const InsufficientRankError& e) {
    CHECK(e.rank_achieved() == 1);
    CHECK(e.code() == ErrorCode::InsufficientRank);
  }
}

TEST_CASE("gf2_rank_select on empty input") {
  std::vector<ParityVector> none;
  CHECK_THROWS_AS(gf2_rank_select(none, 1), InsufficientRankError);
  CHECK(gf2_rank_select(none, 0).empty());
}

TEST_CASE("solve_unit_system on a frozen 2x2 instance") {
  // alphas (2, 3); matrix rows are per-candidate dlog vectors.
  DlogMatrix B;
  B.k = 2;
  B.alphas = {2, 3};
  B.entries = {{1, 2}, {2, 3}};
  // Targets are 2^(alpha_j - 1) = (2, 4); unique solution mod 8 is y = (2, 0):
  // 2*1 + 0*2 = 2 == 2 (mod 4), 2*2 + 0*3 = 4 == 4 (mod 8).
  std::vector<mpz_class> y = solve_unit_system(B);
  REQUIRE(y.size() == 2);
  CHECK(y[0] == 2);
  CHECK(y[1] == 0);
}

TEST_CASE("solve_unit_system needs an odd pivot per column") {
  DlogMatrix B;
  B.k = 2;
  B.alphas = {1, 1};
  B.entries = {{1, 0}, {1, 0}};
  try {
    solve_unit_system(B);
    FAIL("expected SingularSystem");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularSystem);
  }
}

TEST_CASE("solve_unit_system accepts k = 1") {
  DlogMatrix B;
  B.k = 1;
  B.alphas = {1};
  B.entries = {{1}};
  std::vector<mpz_class> y = solve_unit_system(B);
  REQUIRE(y.size() == 1);
  CHECK(y[0] == 1);
}

TEST_CASE("solution is independent of column order in the lift") {
  // Two columns of different alpha; swapping them must not change the
  // returned solution once reduced per-column.
  DlogMatrix B;
  B.k = 2;
  B.alphas = {3, 1};
  B.entries = {{1, 1}, {6, 1}};
  DlogMatrix swapped;
  swapped.k = 2;
  swapped.alphas = {1, 3};
  swapped.entries = {{1, 1}, {1, 6}};
  std::vector<mpz_class> y1 = solve_unit_system(B);
  std::vector<mpz_class> y2 = solve_unit_system(swapped);
  REQUIRE(y1.size() == 2);
  REQUIRE(y2.size() == 2);
  mpz_class two_alpha = 8;
  for (size_t j = 0; j < 2; ++j) {
    mpz_class lhs1 = (y1[0] * B.entries[0][j] + y1[1] * B.entries[1][j]);
    mpz_class want = mpz_class(1) << (B.alphas[j] - 1);
    mpz_class m = mpz_class(1) << B.alphas[j];
    CHECK(lhs1 % m == want % m);
  }
  for (size_t j = 0; j < 2; ++j) {
    mpz_class lhs2 =
        (y2[0] * swapped.entries[0][j] + y2[1] * swapped.entries[1][j]);
    mpz_class want = mpz_class(1) << (swapped.alphas[j] - 1);
    mpz_class m = mpz_class(1) << swapped.alphas[j];
    CHECK(lhs2 % m == want % m);
  }
}

TEST_CASE("random odd-determinant systems match exhaustive search") {
  // Small k and alpha so that brute force over all y is cheap.
  std::mt19937_64 gen(2024);
  int built = 0;
  while (built < 200) {
    unsigned k = 1 + gen() % 3;
    DlogMatrix B;
    B.k = k;
    B.alphas.resize(k);
    for (auto& a : B.alphas) a = 1 + gen() % 3;
    unsigned alpha = *std::max_element(B.alphas.begin(), B.alphas.end());
    unsigned long mod = 1ul << alpha;
    B.entries.assign(k, std::vector<mpz_class>(k));
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j) B.entries[i][j] = gen() % mod;
    if (!B.odd_determinant()) continue;
    ++built;
    std::vector<mpz_class> y = solve_unit_system(B);
    // Exhaustive check: y is a solution, and any other solution agrees
    // with it mod 2^alpha_j on every equation.
    for (unsigned j = 0; j < k; ++j) {
      mpz_class acc = 0;
      for (unsigned i = 0; i < k; ++i) acc += y[i] * B.entries[i][j];
      mpz_class mj = mpz_class(1) << B.alphas[j];
      CHECK(acc % mj == (mpz_class(1) << (B.alphas[j] - 1)) % mj);
    }
    if (k == 1) {
      unsigned long count = 0;
      for (unsigned long cand = 0; cand < mod; ++cand) {
        mpz_class acc = cand * B.entries[0][0];
        mpz_class mj = mpz_class(1) << B.alphas[0];
        if (acc % mj == (mpz_class(1) << (B.alphas[0] - 1)) % mj) ++count;
      }
      CHECK(count == (1ul << (alpha - B.alphas[0])));
    }
  }
}

TEST_CASE("odd_determinant") {
  DlogMatrix B;
  B.k = 2;
  B.alphas = {1, 1};
  B.entries = {{1, 0}, {0, 1}};
  CHECK(B.odd_determinant());
  B.entries = {{1, 1}, {1, 1}};
  CHECK_FALSE(B.odd_determinant());
  B.entries = {{2, 1}, {1, 2}};
  CHECK(B.odd_determinant());
}
