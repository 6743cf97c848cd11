#include "knotforge/word.hpp"

#include <cstdlib>
#include <utility>

#include "knotforge/errors.hpp"

namespace knotforge {

namespace {

std::vector<int> freely_reduce(std::vector<int> in) {
  std::vector<int> out;
  out.reserve(in.size());
  for (int letter : in) {
    if (letter == 0) throw InvalidArgument("word letter must be a nonzero generator index");
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

}  // namespace

Word::Word(std::vector<int> letters) : letters_(freely_reduce(std::move(letters))) {}

Word::Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

int Word::max_generator() const {
  int m = 0;
  for (int letter : letters_) m = std::max(m, std::abs(letter));
  return m;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<int> combined = letters_;
  combined.insert(combined.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(combined));
}

Word Word::inverse() const {
  std::vector<int> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(-*it);
  return Word(std::move(inv));
}

Word Word::cyclically_reduced() const {
  std::size_t b = 0;
  std::size_t e = letters_.size();
  while (e - b >= 2 && letters_[b] == -letters_[e - 1]) {
    ++b;
    --e;
  }
  return Word(std::vector<int>(letters_.begin() + b, letters_.begin() + e));
}

bool Word::is_cyclically_reduced() const {
  return letters_.size() < 2 || letters_.front() != -letters_.back();
}

std::vector<std::int64_t> Word::exponent_sums(int generator_count) const {
  if (max_generator() > generator_count)
    throw InvalidArgument("word references a generator beyond the generator count");
  std::vector<std::int64_t> sums(static_cast<std::size_t>(generator_count), 0);
  for (int letter : letters_) sums[static_cast<std::size_t>(std::abs(letter)) - 1] += letter > 0 ? 1 : -1;
  return sums;
}

bool cyclically_equal(const Word& u, const Word& v) {
  const std::vector<int>& a = u.letters();
  const std::vector<int>& b = v.letters();
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n == 0) return true;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) match = a[i] == b[(i + shift) % n];
    if (match) return true;
  }
  return false;
}

bool cyclically_equal_up_to_inversion(const Word& u, const Word& v) {
  return cyclically_equal(u, v) || cyclically_equal(u, v.inverse());
}

}  // namespace knotforge
