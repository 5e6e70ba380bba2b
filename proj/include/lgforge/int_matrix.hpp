#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace lgforge {

// Dense row-major integer matrix. Arithmetic is overflow-checked and throws
// std::overflow_error rather than wrapping.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  // Builds a matrix whose j-th column is columns[j].
  static IntMatrix from_columns(const std::vector<std::vector<std::int64_t>>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::int64_t> column(std::size_t j) const;
  std::vector<std::int64_t> row(std::size_t i) const;
  IntMatrix transpose() const;

  // Elementary operations. `add_*` adds factor * source into target.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  void add_row_multiple(std::size_t target, std::size_t source, std::int64_t factor);
  void add_col_multiple(std::size_t target, std::size_t source, std::int64_t factor);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<std::int64_t> operator*(const IntMatrix& a, const std::vector<std::int64_t>& v);

// Exact determinant (fraction-free elimination over big integers). Throws
// std::overflow_error if the result does not fit in 64 bits.
std::int64_t determinant(const IntMatrix& a);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

// gcd with gcd(0, 0) = 0; result is nonnegative.
std::int64_t gcd(std::int64_t a, std::int64_t b);
// Floor division and the matching nonnegative-for-positive-divisor remainder.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t floor_mod(std::int64_t a, std::int64_t b);

}  // namespace lgforge
