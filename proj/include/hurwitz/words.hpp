#pragma once

// Reduced words in a free group F(X) over a named alphabet.

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

/// Ordered list of generator names shared by every word built over it.
struct Alphabet {
  std::vector<std::string> names;

  std::size_t size() const { return names.size(); }
  /// Index of `name`, or -1 when absent.
  int find(std::string_view name) const;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

/// Thrown when two words (or a word and a group) disagree on the alphabet.
class IncompatibleAlphabet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A generator or its formal inverse.
struct Letter {
  std::uint32_t generator = 0;
  std::int8_t sign = 1;  // +1 or -1

  Letter inverse() const { return {generator, static_cast<std::int8_t>(-sign)}; }
  bool cancels(const Letter& other) const {
    return generator == other.generator && sign == -other.sign;
  }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter gen(std::uint32_t g) { return {g, 1}; }
inline Letter gen_inv(std::uint32_t g) { return {g, -1}; }

/// Element of F(X): a freely reduced letter sequence. Immutable.
class Word {
 public:
  /// The empty word over `alphabet`.
  explicit Word(AlphabetPtr alphabet);

  /// Reduces `raw` by repeated deletion of inverse pairs.
  static Word reduce(AlphabetPtr alphabet, std::span<const Letter> raw);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Letters written as `name` / `name^-1`, space separated; `1` when empty.
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_ && same_alphabet(a.alphabet_, b.alphabet_);
  }

  static bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

 private:
  Word(AlphabetPtr alphabet, std::vector<Letter> reduced)
      : alphabet_(std::move(alphabet)), letters_(std::move(reduced)) {}

  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;

  friend Word concat(const Word&, const Word&);
  friend Word invert(const Word&);
  friend Word reverse(const Word&);
};

/// Free-group product; throws IncompatibleAlphabet on mismatched alphabets.
Word concat(const Word& u, const Word& v);

/// Letters in reverse order with every sign flipped.
Word invert(const Word& w);

/// Letters in reverse order, signs kept. The result is again reduced.
Word reverse(const Word& w);

bool is_palindrome(const Word& w);

/// w^k for any integer k (negative powers invert first).
Word power(const Word& w, long k);

}  // namespace hurwitz
