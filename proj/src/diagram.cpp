#include "knotforge/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <utility>

#include "knotforge/errors.hpp"

namespace knotforge {

KnotDiagram::KnotDiagram() = default;

KnotDiagram::KnotDiagram(int arc_count, std::vector<Crossing> crossings)
    : arc_count_(arc_count), crossings_(std::move(crossings)) {
  if (crossings_.empty()) {
    if (arc_count_ != 1) throw BadIncidence("a zero-crossing diagram has exactly one arc");
    return;
  }
  if (arc_count_ != static_cast<int>(crossings_.size()))
    throw BadIncidence("arc count must equal crossing count");

  std::vector<int> next(static_cast<std::size_t>(arc_count_) + 1, 0);
  std::vector<bool> seen_out(static_cast<std::size_t>(arc_count_) + 1, false);
  for (const Crossing& c : crossings_) {
    if (c.sign != 1 && c.sign != -1) throw BadIncidence("crossing sign must be +1 or -1");
    for (int arc : {c.over, c.under_in, c.under_out})
      if (arc < 1 || arc > arc_count_) throw BadIncidence("crossing references an arc outside the diagram");
    if (next[c.under_in] != 0) throw BadIncidence("an arc passes under more than once");
    next[c.under_in] = c.under_out;
    if (seen_out[c.under_out]) throw BadIncidence("an arc leaves an under-passage more than once");
    seen_out[c.under_out] = true;
  }

  // Every arc goes under exactly once, so `next` is a permutation; the knot
  // is connected exactly when it is a single cycle.
  int cycle_length = 0;
  int arc = 1;
  do {
    arc = next[arc];
    ++cycle_length;
  } while (arc != 1 && cycle_length <= arc_count_);
  if (cycle_length != arc_count_)
    throw DisconnectedUnderCycle("under-strand passages split into more than one cycle");
}

namespace {

// ---- PD codes -------------------------------------------------------------

struct PdTuple {
  int labels[4];  // i, j, k, l
};

void skip_separators(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
    ++pos;
}

int parse_positive_int(std::string_view text, std::size_t& pos, const char* what) {
  skip_separators(text, pos);
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw MalformedSyntax(std::string("expected ") + what + " at position " + std::to_string(pos));
  long value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > 1000000) throw MalformedSyntax("label too large");
    ++pos;
  }
  if (value == 0) throw MalformedSyntax(std::string(what) + " must be positive");
  return static_cast<int>(value);
}

void expect_char(std::string_view text, std::size_t& pos, char c) {
  skip_separators(text, pos);
  if (pos >= text.size() || text[pos] != c)
    throw MalformedSyntax(std::string("expected '") + c + "' at position " + std::to_string(pos));
  ++pos;
}

std::vector<PdTuple> lex_pd(std::string_view text) {
  std::vector<PdTuple> tuples;
  std::size_t pos = 0;
  while (true) {
    skip_separators(text, pos);
    if (pos >= text.size()) break;
    if (text[pos] != 'X' && text[pos] != 'x')
      throw MalformedSyntax("expected crossing tuple 'X(...)' at position " + std::to_string(pos));
    ++pos;
    expect_char(text, pos, '(');
    PdTuple t{};
    for (int slot = 0; slot < 4; ++slot) t.labels[slot] = parse_positive_int(text, pos, "edge label");
    expect_char(text, pos, ')');
    tuples.push_back(t);
  }
  return tuples;
}

struct OrientedCrossing {
  int under_in, under_out, over_in, over_out;
  int sign;
};

// Checks that every edge label enters exactly one passage and leaves exactly
// one passage under the given over-strand orientations.
bool roles_consistent(const std::vector<OrientedCrossing>& crossings, const std::vector<int>& labels) {
  std::map<int, std::pair<int, int>> degree;  // label -> (in, out)
  for (int label : labels) degree[label] = {0, 0};
  for (const OrientedCrossing& c : crossings) {
    degree[c.under_in].first++;
    degree[c.over_in].first++;
    degree[c.under_out].second++;
    degree[c.over_out].second++;
  }
  for (const auto& [label, deg] : degree)
    if (deg.first != 1 || deg.second != 1) return false;
  return true;
}

KnotDiagram pd_to_diagram(const std::vector<PdTuple>& tuples) {
  const int n = static_cast<int>(tuples.size());

  // Census: each edge label must occur exactly twice across all tuples.
  std::map<int, int> census;
  for (const PdTuple& t : tuples)
    for (int label : t.labels) census[label]++;
  for (const auto& [label, count] : census)
    if (count != 2)
      throw BadIncidence("edge label " + std::to_string(label) + " appears " + std::to_string(count) +
                         " times; expected 2");

  std::vector<int> labels;
  labels.reserve(census.size());
  for (const auto& [label, count] : census) labels.push_back(label);

  std::map<int, int> position;  // label -> index in sorted order
  for (std::size_t i = 0; i < labels.size(); ++i) position[labels[i]] = static_cast<int>(i);
  const auto succ = [&](int label) {
    return labels[(static_cast<std::size_t>(position.at(label)) + 1) % labels.size()];
  };

  // Orient each crossing. The under-strand is forced (i enters, k = succ(i)
  // leaves); the over pair {j, l} is oriented by label succession. Both
  // directions can satisfy succession only in a 1-crossing diagram, where
  // the role check below settles it.
  std::vector<OrientedCrossing> oriented;
  std::vector<std::size_t> ambiguous;
  oriented.reserve(tuples.size());
  for (const PdTuple& t : tuples) {
    const int i = t.labels[0], j = t.labels[1], k = t.labels[2], l = t.labels[3];
    if (k != succ(i))
      throw BadIncidence("under-strand of X(" + std::to_string(i) + ",...) must leave on edge " +
                         std::to_string(succ(i)) + ", not " + std::to_string(k));
    const bool over_jl = succ(j) == l;  // over runs j -> l (right to left): sign -1
    const bool over_lj = succ(l) == j;  // over runs l -> j (left to right): sign +1
    if (!over_jl && !over_lj)
      throw BadIncidence("over-strand edges " + std::to_string(j) + "," + std::to_string(l) +
                         " are not consecutive");
    if (over_jl && over_lj) ambiguous.push_back(oriented.size());
    oriented.push_back(over_jl ? OrientedCrossing{i, k, j, l, -1} : OrientedCrossing{i, k, l, j, +1});
  }

  for (std::size_t idx : ambiguous) {
    if (roles_consistent(oriented, labels)) break;
    OrientedCrossing& c = oriented[idx];
    c = OrientedCrossing{c.under_in, c.under_out, c.over_out, c.over_in, -c.sign};
  }
  if (!roles_consistent(oriented, labels))
    throw BadIncidence("edge labels do not form a consistent traversal");

  // Arcs are maximal runs of edges not separated by an under-passage; the
  // cut after edge e exists exactly when e is some crossing's incoming
  // under edge. Arc 1 contains the smallest edge label.
  std::map<int, bool> is_under_in;
  for (int label : labels) is_under_in[label] = false;
  for (const OrientedCrossing& c : oriented) is_under_in[c.under_in] = true;

  const auto pred = [&](int label) {
    const std::size_t p = static_cast<std::size_t>(position.at(label));
    return labels[(p + labels.size() - 1) % labels.size()];
  };
  int start = labels[0];
  while (!is_under_in.at(pred(start))) start = pred(start);

  std::map<int, int> arc_of;
  int arc = 1;
  int edge = start;
  for (std::size_t step = 0; step < labels.size(); ++step) {
    arc_of[edge] = arc;
    if (is_under_in.at(edge)) ++arc;
    edge = succ(edge);
  }

  std::vector<Crossing> crossings;
  crossings.reserve(oriented.size());
  for (const OrientedCrossing& c : oriented) {
    if (arc_of.at(c.over_in) != arc_of.at(c.over_out))
      throw BadIncidence("over-strand is interrupted by an under-passage");
    crossings.push_back(Crossing{arc_of.at(c.over_in), arc_of.at(c.under_in), arc_of.at(c.under_out), c.sign});
  }
  return KnotDiagram(n, std::move(crossings));
}

// ---- Gauss codes ----------------------------------------------------------

struct GaussToken {
  bool over;
  int crossing;
  int sign;
};

std::vector<GaussToken> lex_gauss(std::string_view text) {
  std::vector<GaussToken> tokens;
  std::size_t pos = 0;
  while (true) {
    skip_separators(text, pos);
    if (pos >= text.size()) break;
    const char kind = text[pos];
    if (kind != 'O' && kind != 'o' && kind != 'U' && kind != 'u')
      throw MalformedSyntax("expected 'O' or 'U' at position " + std::to_string(pos));
    ++pos;
    const int crossing = parse_positive_int(text, pos, "crossing number");
    if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
      throw MalformedSyntax("expected '+' or '-' at position " + std::to_string(pos));
    const int sign = text[pos] == '+' ? 1 : -1;
    ++pos;
    tokens.push_back(GaussToken{kind == 'O' || kind == 'o', crossing, sign});
  }
  return tokens;
}

KnotDiagram gauss_to_diagram(const std::vector<GaussToken>& tokens) {
  struct Visits {
    int over_pos = -1, under_pos = -1;
    int over_sign = 0, under_sign = 0;
  };
  std::map<int, Visits> visits;
  std::vector<int> appearance_order;
  for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
    const GaussToken& t = tokens[pos];
    if (visits.find(t.crossing) == visits.end()) appearance_order.push_back(t.crossing);
    Visits& v = visits[t.crossing];
    if (t.over) {
      if (v.over_pos >= 0)
        throw BadIncidence("crossing " + std::to_string(t.crossing) + " visited twice as over");
      v.over_pos = static_cast<int>(pos);
      v.over_sign = t.sign;
    } else {
      if (v.under_pos >= 0)
        throw BadIncidence("crossing " + std::to_string(t.crossing) + " visited twice as under");
      v.under_pos = static_cast<int>(pos);
      v.under_sign = t.sign;
    }
  }
  for (const auto& [label, v] : visits) {
    if (v.over_pos < 0 || v.under_pos < 0)
      throw BadIncidence("crossing " + std::to_string(label) + " is missing an over or under visit");
    if (v.over_sign != v.under_sign)
      throw SignMismatch("crossing " + std::to_string(label) + " has mismatched signs");
  }

  const int n = static_cast<int>(visits.size());

  // Arc t ends at the t-th under passage along the traversal; positions past
  // the last one wrap around to arc 1.
  std::vector<int> under_positions;
  under_positions.reserve(static_cast<std::size_t>(n));
  for (std::size_t pos = 0; pos < tokens.size(); ++pos)
    if (!tokens[pos].over) under_positions.push_back(static_cast<int>(pos));
  const auto arc_at = [&](int pos) {
    const auto it = std::lower_bound(under_positions.begin(), under_positions.end(), pos);
    return it == under_positions.end() ? 1 : static_cast<int>(it - under_positions.begin()) + 1;
  };

  std::vector<Crossing> crossings;
  crossings.reserve(appearance_order.size());
  for (int label : appearance_order) {
    const Visits& v = visits.at(label);
    const int under_in = arc_at(v.under_pos);
    crossings.push_back(Crossing{arc_at(v.over_pos), under_in, under_in % n + 1, v.under_sign});
  }
  return KnotDiagram(n, std::move(crossings));
}

}  // namespace

KnotDiagram parse_pd(std::string_view text) {
  const std::vector<PdTuple> tuples = lex_pd(text);
  if (tuples.empty()) return KnotDiagram();
  return pd_to_diagram(tuples);
}

KnotDiagram parse_gauss(std::string_view text) {
  const std::vector<GaussToken> tokens = lex_gauss(text);
  if (tokens.empty()) return KnotDiagram();
  return gauss_to_diagram(tokens);
}

}  // namespace knotforge
