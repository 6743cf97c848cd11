#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace knotforge {

// A freely reduced word over abstract generators. Letters are nonzero
// integers: +g stands for generator g, -g for its inverse. Construction
// reduces eagerly, so two Words represent the same free-group element
// exactly when their letter sequences compare equal.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);
  Word(std::initializer_list<int> letters);

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  // Largest generator index mentioned; 0 for the empty word.
  int max_generator() const;

  // Freely reduced concatenation.
  Word operator*(const Word& rhs) const;

  Word inverse() const;

  // Strips cancelling first/last letter pairs until none remain.
  Word cyclically_reduced() const;
  bool is_cyclically_reduced() const;

  // Exponent sum of each generator 1..generator_count.
  std::vector<std::int64_t> exponent_sums(int generator_count) const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<int> letters_;
};

// True when u is a cyclic rotation of v (letter sequences compared as-is).
bool cyclically_equal(const Word& u, const Word& v);

// True when u is a cyclic rotation of v or of v's inverse.
bool cyclically_equal_up_to_inversion(const Word& u, const Word& v);

}  // namespace knotforge
