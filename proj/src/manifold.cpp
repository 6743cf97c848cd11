#include "knotforge/manifold.hpp"

#include <cctype>
#include <string>
#include <utility>

#include "knotforge/errors.hpp"

namespace knotforge {

HeegaardDiagram::HeegaardDiagram(int genus, std::vector<Word> curves)
    : genus_(genus), curves_(std::move(curves)) {
  if (genus_ < 0) throw InvalidArgument("genus must be nonnegative");
  for (Word& curve : curves_) {
    if (curve.max_generator() > genus_)
      throw InvalidArgument("attaching curve references a generator beyond the genus");
    curve = curve.cyclically_reduced();
  }
}

HandlebodyInvariants handlebody_invariants(int genus) {
  if (genus < 0) throw InvalidArgument("genus must be nonnegative");
  return HandlebodyInvariants{Presentation(genus, {}), AbelianGroup::free(1),
                              AbelianGroup::free(genus), AbelianGroup::free(0)};
}

Presentation close_manifold(const HeegaardDiagram& h) {
  return Presentation(h.genus(), h.curves());
}

AbelianGroup closed_manifold_h1(const HeegaardDiagram& h) {
  return abelianization(close_manifold(h));
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Word parse_curve(const std::string& line, int line_number, int genus) {
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[pos]))) {
      ++pos;
      continue;
    }
    const char letter = line[pos];
    if (letter < 'a' || letter > 'z')
      throw MalformedSyntax("line " + std::to_string(line_number) + ": expected a curve letter a..z, got '" +
                            std::string(1, letter) + "'");
    const int generator = letter - 'a' + 1;
    if (generator > genus)
      throw MalformedSyntax("line " + std::to_string(line_number) + ": letter '" + std::string(1, letter) +
                            "' exceeds genus " + std::to_string(genus));
    ++pos;
    long exponent = 1;
    if (pos < line.size() && line[pos] == '^') {
      ++pos;
      bool negative = false;
      if (pos < line.size() && (line[pos] == '-' || line[pos] == '+')) {
        negative = line[pos] == '-';
        ++pos;
      }
      if (pos >= line.size() || !std::isdigit(static_cast<unsigned char>(line[pos])))
        throw MalformedSyntax("line " + std::to_string(line_number) + ": expected an exponent after '^'");
      exponent = 0;
      while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
        exponent = exponent * 10 + (line[pos] - '0');
        if (exponent > 10000)
          throw MalformedSyntax("line " + std::to_string(line_number) + ": exponent too large");
        ++pos;
      }
      if (exponent == 0)
        throw MalformedSyntax("line " + std::to_string(line_number) + ": exponent must be nonzero");
      if (negative) exponent = -exponent;
    }
    for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i)
      letters.push_back(exponent > 0 ? generator : -generator);
  }
  return Word(std::move(letters));
}

}  // namespace

HeegaardDiagram parse_heegaard(std::string_view text) {
  const std::vector<std::string> lines = split_lines(text);

  std::size_t idx = 0;
  while (idx < lines.size() && blank_or_comment(lines[idx])) ++idx;
  if (idx >= lines.size()) throw MalformedSyntax("expected a 'genus g' header line");

  const std::string& header = lines[idx];
  std::size_t pos = 0;
  while (pos < header.size() && std::isspace(static_cast<unsigned char>(header[pos]))) ++pos;
  static constexpr std::string_view kGenus = "genus";
  if (header.compare(pos, kGenus.size(), kGenus) != 0)
    throw MalformedSyntax("first line must be 'genus g'");
  pos += kGenus.size();
  while (pos < header.size() && std::isspace(static_cast<unsigned char>(header[pos]))) ++pos;
  if (pos >= header.size() || !std::isdigit(static_cast<unsigned char>(header[pos])))
    throw MalformedSyntax("first line must be 'genus g' with a nonnegative integer g");
  long genus = 0;
  while (pos < header.size() && std::isdigit(static_cast<unsigned char>(header[pos]))) {
    genus = genus * 10 + (header[pos] - '0');
    if (genus > 1000) throw MalformedSyntax("genus too large");
    ++pos;
  }
  while (pos < header.size() && std::isspace(static_cast<unsigned char>(header[pos]))) ++pos;
  if (pos != header.size()) throw MalformedSyntax("unexpected text after the genus header");

  std::vector<Word> curves;
  for (std::size_t i = idx + 1; i < lines.size(); ++i) {
    if (blank_or_comment(lines[i])) continue;
    curves.push_back(parse_curve(lines[i], static_cast<int>(i) + 1, static_cast<int>(genus)));
  }
  return HeegaardDiagram(static_cast<int>(genus), std::move(curves));
}

}  // namespace knotforge
