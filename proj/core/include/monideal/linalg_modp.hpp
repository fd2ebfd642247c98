#ifndef MONIDEAL_LINALG_MODP_HPP
#define MONIDEAL_LINALG_MODP_HPP

#include <cstdint>
#include <vector>

namespace mi::modp {

/// Dense row-major matrix over Z/p. Small sizes only (boundary matrices of
/// complexes on at most a dozen vertices).
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void append_row(const std::vector<std::uint32_t>& row);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> a_;
};

std::uint32_t inverse(std::uint32_t a, std::uint32_t p);

/// Rank by Gaussian elimination (the argument is consumed).
std::size_t rank(Matrix m, std::uint32_t p);

/// Basis of {x : m x = 0}, one vector per row of the result.
Matrix nullspace(Matrix m, std::uint32_t p);

} // namespace mi::modp

#endif
