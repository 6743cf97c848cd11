#include "knotforge/int_matrix.hpp"

#include <utility>

#include "knotforge/checked_int.hpp"
#include "knotforge/errors.hpp"

namespace knotforge {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InvalidArgument("matrix dimensions must be nonnegative");
  entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw InvalidArgument("matrix dimensions must be nonnegative");
  if (entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw InvalidArgument("matrix entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::int64_t IntMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw IndexOutOfRange("matrix index out of range");
  return entries_[static_cast<std::size_t>(r) * cols_ + c];
}

std::int64_t& IntMatrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw IndexOutOfRange("matrix index out of range");
  return entries_[static_cast<std::size_t>(r) * cols_ + c];
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidArgument("matrix product dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < rhs.cols_; ++c) {
      std::int64_t acc = 0;
      for (int k = 0; k < cols_; ++k) acc = checked_add(acc, checked_mul(at(r, k), rhs.at(k, c)));
      out.at(r, c) = acc;
    }
  return out;
}

bool IntMatrix::is_zero() const {
  for (std::int64_t e : entries_)
    if (e != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (int r = 0; r < rows_; ++r) {
    if (r > 0) out += ", ";
    out += "[";
    for (int c = 0; c < cols_; ++c) {
      if (c > 0) out += ", ";
      out += std::to_string(at(r, c));
    }
    out += "]";
  }
  out += "]";
  return out;
}

}  // namespace knotforge
