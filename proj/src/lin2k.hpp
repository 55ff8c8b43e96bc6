#pragma once

#include <cstdint>
#include <vector>
#include <gmpxx.h>

#include "errors.hpp"

namespace invq {

// Sign pattern of one candidate against the distinct primes q_1..q_k of
// the modulus: bits[j] = 1 iff the candidate value is a quadratic
// nonresidue mod q_j.  For quadratic candidates b is 0 and the value is
// 2^a + 1; for cubic candidates the value is 2^a + 2^b + 1 with a > b.
struct ParityVector {
  unsigned a = 0;
  unsigned b = 0;
  std::vector<uint8_t> bits;
};

// Matrix of 2-Sylow discrete logs b_ij of candidate i at prime j,
// reduced per column: 0 <= entries[i][j] < 2^alphas[j].
struct DlogMatrix {
  unsigned k = 0;
  std::vector<unsigned> alphas;
  std::vector<std::vector<mpz_class>> entries;

  bool odd_determinant() const;
};

// Greedy scan in input order keeping a GF(2) row-echelon basis; returns
// the first k indices whose bit vectors are linearly independent.
// Order-sensitive by contract so the upstream candidate policy fully
// determines the selection.  Throws InsufficientRankError (carrying the
// achieved rank) when the whole list spans fewer than k dimensions.
std::vector<size_t> gf2_rank_select(const std::vector<ParityVector>& vectors,
                                    unsigned k);

// Solves sum_i y_i * b_ij == 2^(alphas[j]-1) (mod 2^alphas[j]) for all
// j, working uniformly mod 2^alpha with alpha = max alphas[j]; entry
// lifts do not matter because any excess is a multiple of 2^alphas[j].
// Gaussian elimination pivoting on odd entries (the units of Z/2^alpha);
// the returned y is substituted back and checked before returning.
// Throws Error(SingularSystem) when the determinant is even.
std::vector<mpz_class> solve_unit_system(const DlogMatrix& B);

}  // namespace invq
