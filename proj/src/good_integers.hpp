#pragma once

#include <optional>
#include <vector>

#include "certificate.hpp"

namespace invq {

// Witness that the odd part of n - 1 is congruent to 2^k * 3^s modulo
// 2^n - 1.  nu = nu2(n - 1).
struct GoodWitness {
  unsigned n = 0;
  unsigned long k = 0;
  unsigned long s = 0;
  unsigned long nu = 0;
};

// Search bound on s when none is given; k always ranges over the full
// period [0, n - 1].
inline unsigned long default_s_max(unsigned n) { return 4ul * n; }

// Searches s in [0, s_max], k in [0, n-1], returning the
// lexicographically smallest (s, k) hit or nullopt when the bound is
// exhausted.  Absence of a witness within the bound proves nothing.
// Requires odd n >= 3.
std::optional<GoodWitness> good_witness(
    unsigned n, std::optional<unsigned long> s_max = std::nullopt);

// The explicit factor list attached to a witness: the Frobenius factor
// 2, the quadratics 2^(2^j)+1 for j < k, the cubics
// 2^(2^(k+1) 3^j) + 2^(2^k 3^j) + 1 for j < s, and the quadratics
// 2^((n-1)/2^j)+1 for 1 <= j <= nu.  Non-affine factor count is
// k + s + nu.  The witness congruence is revalidated first.
DecompositionCertificate theorem1_decomposition(const GoodWitness& w);

// All n <= x_max whose odd part of n - 1 is found congruent to
// 2^k * 3^s within bounds; even n are tested the same way (nu = 0) and
// n = 1 is included by convention.  Sorted ascending.
std::vector<unsigned long> scan_good(
    unsigned long x_max, std::optional<unsigned long> s_max = std::nullopt);

}  // namespace invq
