#pragma once

// Independent oracles and helpers used by the unit and acceptance suites.
// Everything here deliberately avoids the library's computation paths: the
// coloring count enumerates assignments, and determinants/minors use
// cofactor expansion instead of the Smith machinery they verify.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "knotforge/diagram.hpp"
#include "knotforge/int_matrix.hpp"
#include "knotforge/presentation.hpp"
#include "knotforge/word.hpp"

namespace oracles {

std::int64_t brute_force_colorings(const knotforge::KnotDiagram& d, int n);

// Cofactor expansion with 128-bit intermediates; throws std::overflow_error
// when the Hadamard bound does not fit, instead of answering wrongly.
std::int64_t determinant(const knotforge::IntMatrix& m);

// Rigorous |det| == 1 test that works for matrices whose determinant
// expansion would overflow: determinants modulo enough primes that their
// product exceeds twice the Hadamard bound. det = 1 forces residue 1 and
// det = -1 forces residue p - 1 at every prime; anything else rules |det|=1
// out.
bool is_unimodular(const knotforge::IntMatrix& m);

// u * a * v == d evaluated with 128-bit intermediates; throws
// std::overflow_error if the guard bound is exceeded.
bool triple_product_equals(const knotforge::IntMatrix& u, const knotforge::IntMatrix& a,
                           const knotforge::IntMatrix& v, const knotforge::IntMatrix& d);

// gcd of the absolute values of all k x k minors; 0 when every minor is 0.
std::int64_t gcd_of_minors(const knotforge::IntMatrix& m, int k);

knotforge::IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int max_abs);

knotforge::Word random_word(std::mt19937& rng, int generator_count, int max_length);

knotforge::Presentation random_presentation(std::mt19937& rng, int max_generators, int max_relators,
                                            int max_relator_length);

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

// Runs a shell command, capturing stdout; stderr is discarded.
CommandResult run_command(const std::string& command);

}  // namespace oracles
