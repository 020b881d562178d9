#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hyperspec {

// Dense bit-packed GF(2) row.
class Gf2Row {
 public:
  explicit Gf2Row(int nbits = 0) : bits_(nbits), words_((nbits + 63) / 64, 0) {}

  int size() const { return bits_; }
  bool get(int i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(int i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    words_[i / 64] = value ? (words_[i / 64] | mask) : (words_[i / 64] & ~mask);
  }
  void flip(int i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  Gf2Row& operator^=(const Gf2Row& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  bool any() const;
  friend bool operator==(const Gf2Row&, const Gf2Row&) = default;

 private:
  int bits_;
  std::vector<std::uint64_t> words_;
};

// Affine solution set {particular + span(nullspace)} of A x = b over GF(2).
struct Gf2Solution {
  Gf2Row particular;
  std::vector<Gf2Row> nullspace;
};

std::optional<Gf2Solution> solve_gf2(std::vector<Gf2Row> rows, std::vector<bool> rhs, int nvars);

// One solution of A x = b over Z/modulus, or nullopt when inconsistent.
// Splits the modulus into prime powers, diagonalises over each local ring
// by minimum-valuation pivoting, and recombines with the CRT.
std::optional<std::vector<int>> solve_mod(const std::vector<std::vector<int>>& a,
                                          const std::vector<int>& b, int nvars, int modulus);

}  // namespace hyperspec
