#pragma once

// Finite presentations <X | R>: text grammar, the named families used
// throughout the library, and the reversible-relations test.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/words.hpp"

namespace hurwitz {

struct Presentation {
  AlphabetPtr alphabet;
  std::vector<Word> relators;  // each relator r asserts r = 1

  std::size_t generator_count() const { return alphabet->size(); }
  const std::vector<std::string>& generators() const { return alphabet->names; }

  /// Canonical text form `<a, b | a^3, b^2, ...>`; parses back to an equal value.
  std::string to_string() const;

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return Word::same_alphabet(a.alphabet, b.alphabet) && a.relators == b.relators;
  }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownGenerator : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Parses `<names | relations>`. Equation chains u1 = u2 = ... become the
/// relators u_i u_{i+1}^-1; relators that reduce to 1 are dropped.
Presentation parse_presentation(std::string_view text);

/// Parses a single term (`1` or `name^k name ...`) over `alphabet`.
Word parse_word(const AlphabetPtr& alphabet, std::string_view text);

/// Relator text with runs folded into exponents, e.g. `a^3 b^-1`.
std::string render_relator(const Word& w);

// ---- named presentations ---------------------------------------------------

enum class Family { DihedralRS, DihedralInv, Q8AB, Q8IJK, G4, G6, Shephard, Coxeter };

/// <r, s | r^n, s^2, r s r s^-1>
Presentation dihedral_rs(int n);
/// <a, b | a^2, b^2, (a b)^n>
Presentation dihedral_inv(int n);
/// <a, b | a^4, a^2 b^-2, b a b^-1 a>
Presentation q8_ab();
/// <m, i, j, k | m^2, i^2 m, j^2 m, k^2 m, i j k m>; m stands for -1.
Presentation q8_ijk();
/// Shephard(3, 3; 3) on generators a, b.
Presentation g4();
/// Shephard(3, 2; 6) on generators a, b.
Presentation g6();

/// Generators s1..sn with s_i^{p_i} = 1, far pairs commuting and alternating
/// braid relations with q_i terms on each side between s_i and s_{i+1}.
/// `names` overrides the default s1..sn.
Presentation shephard(std::span<const int> orders, std::span<const int> braid_lengths,
                      std::vector<std::string> names = {});

/// Coxeter presentation from a symmetric matrix: diagonal 1, off-diagonal
/// m >= 2 gives a braid relation of length m, 0 means no relation.
Presentation coxeter(const std::vector<std::vector<int>>& matrix);

/// Dispatch by family; params are n for the dihedral families, the p's then
/// q's for Shephard (n p's followed by n-1 q's), a row-major square matrix
/// for Coxeter, and nothing for the rest.
Presentation builtin(Family family, std::span<const int> params = {});

/// `dihedral-rs:6`, `dihedral-inv:4`, `q8-ab`, `q8-ijk`, `g4`, `g6`,
/// `shephard:3,3/3`, `coxeter:1,3,3,1`. Throws std::invalid_argument.
Presentation builtin_from_string(std::string_view name);

// ---- reversible relations ---------------------------------------------------

class CayleyRealization;
struct Enumeration;

enum class Reversibility { Reversible, NotReversible, Unknown };

struct ReversibilityReport {
  Reversibility status = Reversibility::Unknown;
  std::optional<Word> witness_relator;
  std::optional<Word> witness_reverse;
  bool cap_hit = false;
};

std::string to_string(Reversibility r);

/// Every relator's reverse must be trivial in the realized group. The first
/// failing relator is returned as witness.
ReversibilityReport check_reversible(const Presentation& p, const CayleyRealization& realization);

/// As above; Unknown with cap_hit when the enumeration hit its cap.
ReversibilityReport check_reversible(const Presentation& p, const Enumeration& enumeration);

/// Syntactic shapes whose reverse lies in the normal closure without any
/// computation: a power of one generator, a relator u (u*)^-1 encoding
/// u = u*, and a relator u v^-1 with u and v palindromes.
enum class ReversibleShape { GeneratorPower, SelfReverse, PalindromePair };

std::optional<ReversibleShape> reversible_shape(const Word& relator);

/// True when every relator has one of the shapes above.
bool reversible_by_shape(const Presentation& p);

}  // namespace hurwitz
