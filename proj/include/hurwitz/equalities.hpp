#pragma once

// Factorization transforms that preserve Hurwitz orbit size, and executable
// checks comparing the two orbit sizes. Nothing here assumes a theorem: every
// comparison enumerates both orbits.

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/hurwitz.hpp"
#include "hurwitz/presentations.hpp"

namespace hurwitz {

/// sigma^m (x, y) in closed form, for any integer m (negative m means |m|
/// inverse moves). With m = 2n:
///   ( y^-1 (x^-1 y^-1)^(n-1) x (y x)^(n-1) y,  (y^-1 x^-1)^n y (x y)^n )
/// and with m = 2n + 1:
///   ( (y^-1 x^-1)^n y (x y)^n,  y^-1 (x^-1 y^-1)^n x (y x)^n y ).
std::pair<ElementKey, ElementKey> closed_form_pair(const Group& G, ElementKey x, ElementKey y, long m);

/// (x_1, .., x_l) -> (x_2, .., x_l, x_1)
Factorization cycle(const Factorization& f);
/// Every factor replaced by y^-1 x_k y.
Factorization conjugate_all(const Factorization& f, ElementKey y);
/// (x_1, .., x_l) -> (x_l^-1, .., x_1^-1)
Factorization flip_inverse(const Factorization& f);
/// (x_1, .., x_l) -> (x_l, .., x_1)
Factorization reverse_tuple(const Factorization& f);
/// (x_1, .., x_l) -> (x_1^-1, .., x_l^-1)
Factorization invert_each(const Factorization& f);

// ---- word tuples --------------------------------------------------------------

/// Factorization written with free-group words over one alphabet.
class WordTuple {
 public:
  WordTuple(AlphabetPtr alphabet, std::vector<Word> words);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Word>& words() const { return words_; }
  std::size_t length() const { return words_.size(); }
  std::string to_string() const;

  friend bool operator==(const WordTuple&, const WordTuple&) = default;

 private:
  AlphabetPtr alphabet_;
  std::vector<Word> words_;
};

/// Comma-separated words, e.g. `i, j, i j`.
WordTuple parse_word_tuple(const AlphabetPtr& alphabet, std::string_view text);

/// (a_1, .., a_l) -> (a_l*, .., a_1*)
WordTuple double_reverse(const WordTuple& t);

/// Evaluates every word in a group realized from the words' presentation.
/// Throws IncompatibleAlphabet if `group` is not such a CayleyGroup.
Factorization evaluate(const GroupPtr& group, const WordTuple& t);

/// Hurwitz moves carried out in the free group.
WordTuple hurwitz_move(const WordTuple& t, Move m);
WordTuple apply_braid(const WordTuple& t, std::span<const Move> moves);

/// sigma_p -> sigma_{l-p}^-1, move by move.
std::vector<Move> mirrored_moves(std::span<const Move> moves, std::size_t length);

/// True when v is exactly the double reverse of u in the free group.
bool are_double_reverses(const WordTuple& u, const WordTuple& v);
/// True when reverse(u_k) and v_{l+1-k} evaluate to the same element for
/// every k.
bool are_double_reverses_in(const CayleyGroup& G, const WordTuple& u, const WordTuple& v);

// ---- equality checks ---------------------------------------------------------------

enum class TransformKind { Cycle, FlipInverse, ConjugateAll, ReverseTuple, InvertEach, DoubleReverse };

struct Transform {
  TransformKind kind;
  ElementKey conjugator = 0;              // ConjugateAll
  std::optional<WordTuple> words;         // DoubleReverse: the tuple F was evaluated from
  Reversibility presentation = Reversibility::Unknown;  // DoubleReverse

  static Transform cycle() { return {TransformKind::Cycle, 0, std::nullopt}; }
  static Transform flip_inverse() { return {TransformKind::FlipInverse, 0, std::nullopt}; }
  static Transform conjugate_all(ElementKey y) { return {TransformKind::ConjugateAll, y, std::nullopt}; }
  static Transform reverse_tuple() { return {TransformKind::ReverseTuple, 0, std::nullopt}; }
  static Transform invert_each() { return {TransformKind::InvertEach, 0, std::nullopt}; }
  static Transform double_reverse(WordTuple t, Reversibility r) {
    return {TransformKind::DoubleReverse, 0, std::move(t), r};
  }

  std::string name() const;
};

enum class Verdict { Equal, Unequal, Inconclusive };
std::string to_string(Verdict v);

struct EqualityReport {
  std::string transform;
  Factorization input;
  Factorization output;
  OrbitSize size_left;
  OrbitSize size_right;
  Verdict verdict;
  /// Whether a known theorem predicts equality for this input; false e.g. for
  /// double reverses over a presentation without reversible relations.
  bool guaranteed;

  /// {transform, input, output, size_left, size_right, verdict, guaranteed}
  std::string to_json() const;
};

/// Applies `t` to `f` and compares the two orbit sizes. For DoubleReverse,
/// `f` must be the evaluation of `t.words`.
EqualityReport check_equality(const Factorization& f, const Transform& t, std::size_t node_cap = kDefaultNodeCap);

/// Whether the reversed two-symbol pattern is a cyclic rotation of it.
/// Throws std::invalid_argument for more than two distinct symbols.
bool remark_rotation_check(std::span<const int> pattern);

// ---- G6 and G4 scans ---------------------------------------------------------------

/// Letters of the scan alphabet {a, b, a^-1}.
enum class ScanLetter : int { A = 0, B = 1, AInv = 2 };

struct ScanRow {
  std::vector<ScanLetter> multiset;     // sorted
  std::vector<ScanLetter> permutation;  // one distinct arrangement
  OrbitSize size;
};

struct MultisetSummary {
  std::vector<ScanLetter> multiset;
  std::set<std::size_t> sizes;  // finite sizes observed
  std::size_t permutations = 0;
  bool inconclusive = false;    // some orbit was capped
  bool uniform() const { return sizes.size() <= 1; }
  bool counterexample_candidate() const { return sizes.size() > 1; }
};

struct ScanReport {
  std::vector<ScanRow> rows;
  std::vector<MultisetSummary> multisets;

  std::size_t uniform_count() const;
  std::size_t candidate_count() const;
  std::size_t inconclusive_count() const;
  /// multiset,permutation,orbit_size,capped
  std::string to_csv() const;
  std::string summary() const;
  std::string to_json() const;
};

std::string to_string(std::span<const ScanLetter> letters);

/// For every multiset over {a, b, a^-1} of size 1..max_len, the orbit size of
/// every distinct arrangement. `g6` must have generators named a and b.
ScanReport conjecture_scan(const GroupPtr& g6, std::size_t max_len, std::size_t node_cap = kDefaultNodeCap);

struct G4Check {
  OrbitSize aabb;
  OrbitSize abab;
  bool same_orbit = false;
  bool pass() const { return !aabb.capped && !abab.capped && aabb.value == 36 && abab.value == 27; }
};

/// Orbit sizes of (a, a, b, b) and (a, b, a, b); `g4` must have generators a, b.
G4Check g4_counterexample_check(const GroupPtr& g4, std::size_t node_cap = kDefaultNodeCap);

}  // namespace hurwitz
