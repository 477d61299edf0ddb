#pragma once

// Square bit-matrices over the two-element field, one machine word per row.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace booldim {

using Word = std::uint64_t;

/// Largest supported order (rows, vertices). One word holds a full row.
inline constexpr std::size_t kMaxOrder = 64;

/// Bits 0..n-1 set.
constexpr Word low_bits(std::size_t n) {
  return n >= 64 ? ~Word{0} : (Word{1} << n) - 1;
}

constexpr bool parity(Word w) { return (std::popcount(w) & 1) != 0; }

/// Diagonal perturbation D: bit i set means d_{i,i} = 1.
class DiagonalMask {
 public:
  DiagonalMask() = default;
  /// Throws InputError if bits above position n-1 are set.
  DiagonalMask(std::size_t n, Word bits);

  static DiagonalMask zero(std::size_t n) { return DiagonalMask(n, 0); }
  static DiagonalMask ones(std::size_t n) { return DiagonalMask(n, low_bits(n)); }

  std::size_t order() const { return n_; }
  Word bits() const { return bits_; }
  bool test(std::size_t i) const { return (bits_ >> i) & 1; }

  friend bool operator==(const DiagonalMask&, const DiagonalMask&) = default;

 private:
  std::size_t n_ = 0;
  Word bits_ = 0;
};

class F2Matrix {
 public:
  F2Matrix() = default;
  /// Zero matrix of order n. Throws CapacityError if n > kMaxOrder.
  explicit F2Matrix(std::size_t n);

  static F2Matrix identity(std::size_t n);
  /// Builds from row words; bits beyond column n-1 must be clear.
  static F2Matrix from_rows(std::span<const Word> rows);

  std::size_t order() const { return n_; }
  bool get(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1; }
  void set(std::size_t i, std::size_t j, bool value);
  void flip(std::size_t i, std::size_t j) { rows_[i] ^= Word{1} << j; }

  Word row(std::size_t i) const { return rows_[i]; }
  std::span<const Word> rows() const { return {rows_.data(), n_}; }

  Word diagonal() const;
  bool is_symmetric() const;

  friend bool operator==(const F2Matrix& a, const F2Matrix& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.rows_[i] != b.rows_[i]) return false;
    return true;
  }

 private:
  std::size_t n_ = 0;
  std::array<Word, kMaxOrder> rows_{};
};

/// Row rank over F2. Rows are reduced on a local copy.
std::size_t rank(const F2Matrix& m);

/// Rank of the matrix whose rows are `rows` with the diagonal XOR-ed by
/// `diagonal`. This is the kernel of every diagonal sweep; `rows` must have at
/// most kMaxOrder entries.
std::size_t rank_with_diagonal(std::span<const Word> rows, Word diagonal);

/// M with d_{i,i} flipped wherever D has bit i. Throws InputError on an
/// order mismatch or a non-symmetric M.
F2Matrix add_diagonal(const F2Matrix& m, const DiagonalMask& d);

/// True iff every diagonal entry is zero.
bool is_alternating(const F2Matrix& m);

}  // namespace booldim
