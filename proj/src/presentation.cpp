#include "knotforge/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "knotforge/errors.hpp"
#include "knotforge/smith.hpp"

namespace knotforge {

Presentation::Presentation(int generator_count, std::vector<Word> relators)
    : generator_count_(generator_count), relators_(std::move(relators)) {
  if (generator_count_ < 0) throw InvalidArgument("generator count must be nonnegative");
  for (const Word& r : relators_)
    if (r.max_generator() > generator_count_)
      throw InvalidArgument("relator references a generator beyond the generator count");
}

IntMatrix exponent_sum_matrix(const Presentation& p) {
  IntMatrix m(static_cast<int>(p.relators().size()), p.generator_count());
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    const std::vector<std::int64_t> sums = p.relators()[i].exponent_sums(p.generator_count());
    for (int j = 0; j < p.generator_count(); ++j) m.at(static_cast<int>(i), j) = sums[j];
  }
  return m;
}

namespace {

// Canonical representative of a relator's conjugacy class (up to cyclic
// permutation and inversion): the lexicographically smallest rotation of the
// cyclic reduction or of its inverse.
std::vector<int> cyclic_key(const Word& w) {
  const Word reduced = w.cyclically_reduced();
  const std::size_t n = reduced.length();
  std::vector<int> best;
  bool first = true;
  for (const Word& variant : {reduced, reduced.inverse()}) {
    const std::vector<int>& a = variant.letters();
    for (std::size_t shift = 0; shift < std::max<std::size_t>(n, 1); ++shift) {
      std::vector<int> rot(n);
      for (std::size_t i = 0; i < n; ++i) rot[i] = a[(i + shift) % n];
      if (first || rot < best) {
        best = std::move(rot);
        first = false;
      }
    }
  }
  return best;
}

// Occurrences of generator gen in w, counting both exponents.
int occurrence_count(const Word& w, int gen) {
  int count = 0;
  for (int letter : w.letters())
    if (std::abs(letter) == gen) ++count;
  return count;
}

Word substitute(const Word& target, int gen, const Word& replacement) {
  std::vector<int> out;
  out.reserve(target.length());
  const Word inverse_replacement = replacement.inverse();
  for (int letter : target.letters()) {
    if (letter == gen)
      out.insert(out.end(), replacement.letters().begin(), replacement.letters().end());
    else if (letter == -gen)
      out.insert(out.end(), inverse_replacement.letters().begin(), inverse_replacement.letters().end());
    else
      out.push_back(letter);
  }
  return Word(std::move(out));
}

// Shifts generator indices above removed down by one.
Word renumber_without(const Word& w, int removed) {
  std::vector<int> out;
  out.reserve(w.length());
  for (int letter : w.letters()) {
    const int gen = std::abs(letter);
    out.push_back(gen > removed ? (letter > 0 ? letter - 1 : letter + 1) : letter);
  }
  return Word(std::move(out));
}

}  // namespace

Presentation tietze_simplify(const Presentation& p) {
  int generator_count = p.generator_count();
  std::vector<Word> relators = p.relators();

  bool changed = true;
  while (changed) {
    changed = false;

    // (i) empty relators say nothing
    const std::size_t before = relators.size();
    relators.erase(std::remove_if(relators.begin(), relators.end(),
                                  [](const Word& w) { return w.empty(); }),
                   relators.end());
    changed = relators.size() != before;

    // (ii) duplicates up to cyclic permutation and inversion
    std::vector<std::vector<int>> keys;
    keys.reserve(relators.size());
    std::vector<Word> unique;
    unique.reserve(relators.size());
    for (const Word& r : relators) {
      std::vector<int> key = cyclic_key(r);
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        keys.push_back(std::move(key));
        unique.push_back(r);
      } else {
        changed = true;
      }
    }
    relators = std::move(unique);

    // (iii) eliminate a generator that occurs exactly once in some relator;
    // shortest relator first, ties by index, lowest generator inside.
    int best_relator = -1;
    int best_generator = 0;
    for (std::size_t i = 0; i < relators.size(); ++i) {
      if (best_relator >= 0 && relators[i].length() >= relators[best_relator].length()) continue;
      for (int gen = 1; gen <= generator_count; ++gen) {
        if (occurrence_count(relators[i], gen) == 1) {
          best_relator = static_cast<int>(i);
          best_generator = gen;
          break;
        }
      }
    }
    if (best_relator < 0) continue;

    const Word& relator = relators[best_relator];
    std::size_t pos = 0;
    while (std::abs(relator.letters()[pos]) != best_generator) ++pos;
    const Word prefix(std::vector<int>(relator.letters().begin(), relator.letters().begin() + pos));
    const Word suffix(std::vector<int>(relator.letters().begin() + pos + 1, relator.letters().end()));

    // u g v = 1 gives g = u^-1 v^-1; u g^-1 v = 1 gives g = v u.
    const Word replacement = relator.letters()[pos] > 0
                                 ? prefix.inverse() * suffix.inverse()
                                 : suffix * prefix;

    std::vector<Word> next;
    next.reserve(relators.size() - 1);
    for (std::size_t i = 0; i < relators.size(); ++i) {
      if (static_cast<int>(i) == best_relator) continue;
      next.push_back(renumber_without(substitute(relators[i], best_generator, replacement), best_generator));
    }
    relators = std::move(next);
    --generator_count;
    changed = true;
  }

  return Presentation(generator_count, std::move(relators));
}

AbelianGroup abelianization(const Presentation& p) {
  const SmithNormalForm snf = smith_normal_form(exponent_sum_matrix(p));
  const int rank = p.generator_count() - snf.rank;
  std::vector<std::int64_t> torsion;
  for (int i = 0; i < snf.rank; ++i)
    if (snf.d.at(i, i) > 1) torsion.push_back(snf.d.at(i, i));
  return AbelianGroup(rank, std::move(torsion));
}

std::string generator_name(int index) {
  if (index >= 1 && index <= 26) return std::string(1, static_cast<char>('a' + index - 1));
  return "g" + std::to_string(index);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  const std::vector<int>& letters = w.letters();
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t run = 1;
    while (i + run < letters.size() && letters[i + run] == letters[i]) ++run;
    if (!out.empty()) out += ' ';
    out += generator_name(std::abs(letters[i]));
    const long long exponent = letters[i] > 0 ? static_cast<long long>(run) : -static_cast<long long>(run);
    if (exponent != 1) out += "^" + std::to_string(exponent);
    i += run;
  }
  return out;
}

std::string to_string(const Presentation& p) {
  std::string out = "⟨";
  for (int g = 1; g <= p.generator_count(); ++g) {
    if (g > 1) out += ", ";
    out += generator_name(g);
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(p.relators()[i]);
  }
  out += "⟩";
  return out;
}

}  // namespace knotforge
