#pragma once

// Randomized property suites: each orbit-size equality statement checked on
// sampled inputs from a fixed set of small groups.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/equalities.hpp"

namespace hurwitz {

enum class Theorem {
  PairSwap,           // (x, y) ~ (y, x)
  PairInverse,        // (x, y) ~ (x^-1, y^-1)
  Cycle,              // rotation
  FlipInverse,        // reverse and invert
  Conjugate,          // simultaneous conjugation
  InvolutionReverse,  // reversal when every factor has order <= 2
  DoubleReverse,      // word tuples over a presentation with reversible relations
  ClosedForm,         // closed form for sigma^m on pairs against iterated moves
  MirrorMoves,        // mirrored inverse moves keep double reverses
};

std::optional<Theorem> theorem_from_string(std::string_view name);
std::string to_string(Theorem t);
const std::vector<Theorem>& all_theorems();

struct NamedGroup {
  std::string name;
  GroupPtr group;
};

/// S4, D12 via <r, s | r^6, s^2, r s r s^-1>, Q8 via <a, b | ...>, G4 and G6,
/// realized once and shared.
const std::vector<NamedGroup>& standard_groups();

struct SuiteOptions {
  std::size_t samples = 100;           // per group
  std::uint64_t seed = 1;
  long range = 20;                     // |m| bound for ClosedForm
  std::size_t min_length = 2;
  std::size_t max_length = 4;          // factorization length for the orbit suites
  std::size_t max_word_length = 3;     // DoubleReverse / MirrorMoves
  std::size_t max_braid_length = 8;    // MirrorMoves
  std::size_t node_cap = kDefaultNodeCap;
  std::size_t coset_cap = kDefaultCosetCap;
  /// Presentations for DoubleReverse / MirrorMoves; empty means
  /// dihedral-rs:5 and g6.
  std::vector<std::string> presentations;
};

struct SuiteResult {
  Theorem theorem;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t inconclusive = 0;
  bool refused = false;
  std::string refusal;
  std::vector<std::string> failures;  // first few, for diagnostics

  bool ok(bool strict) const { return !refused && failed == 0 && (!strict || inconclusive == 0); }
  std::string summary() const;
};

SuiteResult run_suite(Theorem t, const SuiteOptions& options);

}  // namespace hurwitz
