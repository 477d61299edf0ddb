#include "booldim/f2matrix.hpp"

#include <string>

#include "booldim/error.hpp"

namespace booldim {

DiagonalMask::DiagonalMask(std::size_t n, Word bits) : n_(n), bits_(bits) {
  if (n > kMaxOrder) throw CapacityError("diagonal mask order exceeds 64");
  if ((bits & ~low_bits(n)) != 0) throw InputError("diagonal mask has bits beyond its order");
}

F2Matrix::F2Matrix(std::size_t n) : n_(n) {
  if (n > kMaxOrder) throw CapacityError("matrix order " + std::to_string(n) + " exceeds 64");
}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i] = Word{1} << i;
  return m;
}

F2Matrix F2Matrix::from_rows(std::span<const Word> rows) {
  F2Matrix m(rows.size());
  const Word mask = low_bits(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if ((rows[i] & ~mask) != 0) throw InputError("row " + std::to_string(i) + " has bits beyond the matrix order");
    m.rows_[i] = rows[i];
  }
  return m;
}

void F2Matrix::set(std::size_t i, std::size_t j, bool value) {
  const Word bit = Word{1} << j;
  rows_[i] = value ? (rows_[i] | bit) : (rows_[i] & ~bit);
}

Word F2Matrix::diagonal() const {
  Word d = 0;
  for (std::size_t i = 0; i < n_; ++i) d |= rows_[i] & (Word{1} << i);
  return d;
}

bool F2Matrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (get(i, j) != get(j, i)) return false;
  return true;
}

namespace {

// Column-pivot elimination: pivot[b] holds a reduced row whose highest set bit
// is b. Each incoming row is reduced against the pivots until it either
// vanishes or claims a fresh pivot column.
std::size_t eliminate(const Word* rows, std::size_t n, Word diagonal) {
  std::array<Word, kMaxOrder> pivot{};
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Word v = rows[i] ^ (diagonal & (Word{1} << i));
    while (v != 0) {
      const int b = 63 - std::countl_zero(v);
      if (pivot[b] == 0) {
        pivot[b] = v;
        ++r;
        break;
      }
      v ^= pivot[b];
    }
  }
  return r;
}

}  // namespace

std::size_t rank(const F2Matrix& m) { return eliminate(m.rows().data(), m.order(), 0); }

std::size_t rank_with_diagonal(std::span<const Word> rows, Word diagonal) {
  return eliminate(rows.data(), rows.size(), diagonal);
}

F2Matrix add_diagonal(const F2Matrix& m, const DiagonalMask& d) {
  if (d.order() != m.order()) throw InputError("diagonal mask order does not match matrix order");
  if (!m.is_symmetric()) throw InputError("add_diagonal expects a symmetric matrix");
  F2Matrix out = m;
  for (std::size_t i = 0; i < m.order(); ++i)
    if (d.test(i)) out.flip(i, i);
  return out;
}

bool is_alternating(const F2Matrix& m) { return m.diagonal() == 0; }

}  // namespace booldim
