#include "lin2k.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace invq {

namespace {

// Reduce bits against an echelon basis (rows with distinct leading
// positions).  Returns the residue; empty means dependent.
std::vector<uint8_t> reduce_row(std::vector<uint8_t> bits,
                                const std::vector<std::vector<uint8_t>>& basis,
                                const std::vector<size_t>& leads) {
  for (size_t r = 0; r < basis.size(); ++r) {
    if (bits[leads[r]]) {
      for (size_t j = 0; j < bits.size(); ++j) bits[j] ^= basis[r][j];
    }
  }
  return bits;
}

size_t leading_one(const std::vector<uint8_t>& bits) {
  for (size_t j = 0; j < bits.size(); ++j)
    if (bits[j]) return j;
  return bits.size();
}

}  // namespace

bool DlogMatrix::odd_determinant() const {
  // GF(2) elimination on the reduced matrix.
  std::vector<std::vector<uint8_t>> m(k, std::vector<uint8_t>(k));
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j)
      m[i][j] = static_cast<uint8_t>(mpz_odd_p(entries[i][j].get_mpz_t()) != 0);
  for (unsigned col = 0; col < k; ++col) {
    unsigned piv = col;
    while (piv < k && !m[piv][col]) ++piv;
    if (piv == k) return false;
    std::swap(m[piv], m[col]);
    for (unsigned r = 0; r < k; ++r)
      if (r != col && m[r][col])
        for (unsigned j = 0; j < k; ++j) m[r][j] ^= m[col][j];
  }
  return true;
}

std::vector<size_t> gf2_rank_select(const std::vector<ParityVector>& vectors,
                                    unsigned k) {
  std::vector<size_t> selected;
  std::vector<std::vector<uint8_t>> basis;
  std::vector<size_t> leads;
  for (size_t idx = 0; idx < vectors.size() && selected.size() < k; ++idx) {
    const auto& pv = vectors[idx];
    if (pv.bits.size() != k)
      throw_bad_argument("gf2_rank_select: vector length != k");
    std::vector<uint8_t> residue = reduce_row(pv.bits, basis, leads);
    size_t lead = leading_one(residue);
    if (lead == residue.size()) continue;
    selected.push_back(idx);
    basis.push_back(std::move(residue));
    leads.push_back(lead);
  }
  if (selected.size() < k)
    throw InsufficientRankError(
        "gf2_rank_select: vectors span only " +
            std::to_string(selected.size()) + " of " + std::to_string(k) +
            " dimensions",
        static_cast<unsigned>(selected.size()));
  return selected;
}

std::vector<mpz_class> solve_unit_system(const DlogMatrix& B) {
  const unsigned k = B.k;
  if (B.alphas.size() != k || B.entries.size() != k)
    throw_bad_argument("solve_unit_system: malformed matrix");
  unsigned alpha = 0;
  for (unsigned a : B.alphas) {
    if (a < 1) throw_bad_argument("solve_unit_system: alpha_j must be >= 1");
    alpha = std::max(alpha, a);
  }
  const mpz_class mod = mpz_class(1) << alpha;

  // Equation j reads sum_i entries[i][j] * y_i = 2^(alphas[j]-1); build
  // the k x (k+1) augmented system over Z/2^alpha.
  std::vector<std::vector<mpz_class>> aug(k, std::vector<mpz_class>(k + 1));
  for (unsigned j = 0; j < k; ++j) {
    for (unsigned i = 0; i < k; ++i) aug[j][i] = B.entries[i][j] % mod;
    aug[j][k] = mpz_class(1) << (B.alphas[j] - 1);
  }

  for (unsigned col = 0; col < k; ++col) {
    unsigned piv = col;
    while (piv < k && mpz_even_p(aug[piv][col].get_mpz_t())) ++piv;
    if (piv == k)
      throw Error(ErrorCode::SingularSystem,
                  "solve_unit_system: no odd pivot in column " +
                      std::to_string(col) + " (even determinant)");
    std::swap(aug[piv], aug[col]);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), aug[col][col].get_mpz_t(), mod.get_mpz_t());
    for (unsigned j = col; j <= k; ++j) aug[col][j] = (aug[col][j] * inv) % mod;
    for (unsigned r = 0; r < k; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      mpz_class f = aug[r][col];
      for (unsigned j = col; j <= k; ++j)
        aug[r][j] = (aug[r][j] - f * aug[col][j]) % mod;
    }
  }

  std::vector<mpz_class> y(k);
  for (unsigned i = 0; i < k; ++i) y[i] = ((aug[i][k] % mod) + mod) % mod;

  // Unconditional substitution check against the per-column moduli.
  for (unsigned j = 0; j < k; ++j) {
    const mpz_class mj = mpz_class(1) << B.alphas[j];
    mpz_class acc = 0;
    for (unsigned i = 0; i < k; ++i) acc += y[i] * B.entries[i][j];
    if (acc % mj != (mpz_class(1) << (B.alphas[j] - 1)))
      throw Error(ErrorCode::Internal,
                  "solve_unit_system: substitution check failed");
  }
  return y;
}

}  // namespace invq
