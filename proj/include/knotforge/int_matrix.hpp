#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace knotforge {

// Dense integer matrix, row-major. Arithmetic is overflow-checked; see
// checked_int.hpp.
class IntMatrix {
 public:
  IntMatrix() = default;  // 0 x 0
  IntMatrix(int rows, int cols);
  IntMatrix(int rows, int cols, std::vector<std::int64_t> entries);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t at(int r, int c) const;
  std::int64_t& at(int r, int c);

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool is_zero() const;

  // Row-major nested arrays, e.g. "[[0, -1, 1], [1, 0, -1]]".
  std::string to_string() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> entries_;
};

}  // namespace knotforge
