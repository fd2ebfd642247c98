#include "monideal/linalg_modp.hpp"

#include <stdexcept>
#include <utility>

namespace mi::modp {

void Matrix::append_row(const std::vector<std::uint32_t>& row) {
  if (rows_ == 0 && cols_ == 0) {
    cols_ = row.size();
  }
  if (row.size() != cols_) {
    throw std::logic_error("row length mismatch");
  }
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1U) {
      result = result * base % p;
    }
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

namespace {

// Reduces m to row echelon form; returns pivot columns.
std::vector<std::size_t> echelon(Matrix& m, std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col) == 0) {
      ++pivot;
    }
    if (pivot == m.rows()) {
      continue;
    }
    if (pivot != row) {
      for (std::size_t c = col; c < m.cols(); ++c) {
        std::swap(m.at(pivot, c), m.at(row, c));
      }
    }
    const std::uint64_t inv = inverse(m.at(row, col), p);
    for (std::size_t c = col; c < m.cols(); ++c) {
      m.at(row, c) = static_cast<std::uint32_t>(m.at(row, c) * inv % p);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) {
        continue;
      }
      const std::uint64_t f = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        const std::uint64_t sub = f * m.at(row, c) % p;
        m.at(r, c) = static_cast<std::uint32_t>((m.at(r, c) + p - sub) % p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

std::size_t rank(Matrix m, std::uint32_t p) { return echelon(m, p).size(); }

Matrix nullspace(Matrix m, std::uint32_t p) {
  const auto pivots = echelon(m, p);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) {
    is_pivot[c] = true;
  }
  Matrix basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) {
      continue;
    }
    std::vector<std::uint32_t> v(m.cols(), 0);
    v[free] = 1;
    // Reduced echelon form: pivot variable = -entry in the free column.
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const std::uint32_t e = m.at(r, free);
      v[pivots[r]] = e == 0 ? 0 : p - e;
    }
    basis.append_row(v);
  }
  if (basis.rows() == 0) {
    return Matrix(0, m.cols());
  }
  return basis;
}

} // namespace mi::modp
