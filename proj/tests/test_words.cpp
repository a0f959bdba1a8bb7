#include <random>

#include "doctest.h"
#include "hurwitz/presentations.hpp"
#include "hurwitz/words.hpp"

using namespace hurwitz;

namespace {

AlphabetPtr abc() { return make_alphabet({"a", "b", "c"}); }

Word w(const AlphabetPtr& a, const char* text) { return parse_word(a, text); }

std::vector<Letter> random_letters(std::mt19937_64& rng, std::size_t n, std::size_t gens) {
  std::vector<Letter> ls;
  for (std::size_t k = 0; k < n; ++k) {
    ls.push_back({static_cast<std::uint32_t>(rng() % gens), static_cast<std::int8_t>(rng() % 2 ? 1 : -1)});
  }
  return ls;
}

}  // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
  auto a = abc();
  std::vector<Letter> one{gen(0), gen(1), gen_inv(1), gen(2)};
  CHECK(Word::reduce(a, one).to_string() == "a c");
  std::vector<Letter> two{gen(0), gen_inv(0)};
  CHECK(Word::reduce(a, two).empty());
  CHECK(Word::reduce(a, two).to_string() == "1");
  std::vector<Letter> cascade{gen(1), gen_inv(0), gen(0), gen_inv(0), gen(0), gen(1)};
  CHECK(Word::reduce(a, cascade).to_string() == "b b");
}

TEST_CASE("concat") {
  auto a = abc();
  CHECK(concat(w(a, "a b"), w(a, "b^-1 c")) == w(a, "a c"));
  CHECK(concat(w(a, "a b^-1 a"), Word(a)) == w(a, "a b^-1 a"));
  CHECK(concat(w(a, "a b"), w(a, "b^-1 a^-1")).empty());
}

TEST_CASE("concat rejects words over different alphabets") {
  auto a = abc();
  auto other = make_alphabet({"x", "y"});
  CHECK_THROWS_AS(concat(w(a, "a"), w(other, "x")), IncompatibleAlphabet);
}

TEST_CASE("alphabets with equal names are compatible") {
  auto a = abc();
  auto b = abc();
  CHECK(concat(w(a, "a"), w(b, "a^-1")).empty());
}

TEST_CASE("invert") {
  auto a = abc();
  CHECK(invert(w(a, "a b")) == w(a, "b^-1 a^-1"));
  CHECK(invert(Word(a)).empty());
  CHECK(invert(w(a, "a^-1")) == w(a, "a"));
}

TEST_CASE("reverse keeps signs") {
  auto a = abc();
  CHECK(reverse(w(a, "a b")) == w(a, "b a"));
  CHECK(reverse(w(a, "a^-1 b")) == w(a, "b a^-1"));
  CHECK(reverse(concat(w(a, "a b"), w(a, "c"))) == w(a, "c b a"));
}

TEST_CASE("palindromes") {
  auto a = abc();
  CHECK(is_palindrome(w(a, "a b a")));
  CHECK_FALSE(is_palindrome(w(a, "a b")));
  CHECK(is_palindrome(Word(a)));
  CHECK_FALSE(is_palindrome(w(a, "a b^-1 a^-1")));
}

TEST_CASE("power") {
  auto a = abc();
  CHECK(power(w(a, "a b"), 2) == w(a, "a b a b"));
  CHECK(power(w(a, "a b"), -1) == w(a, "b^-1 a^-1"));
  CHECK(power(w(a, "a b"), 0).empty());
  CHECK(power(w(a, "a b a^-1"), 3) == w(a, "a b b b a^-1"));
}

TEST_CASE("rendering") {
  auto a = abc();
  CHECK(w(a, "a b^-1 a").to_string() == "a b^-1 a");
  CHECK(Word(a).to_string() == "1");
}

TEST_CASE("free group properties on random words") {
  auto a = abc();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    auto raw = random_letters(rng, rng() % 12, 3);
    Word r = Word::reduce(a, raw);
    CHECK(Word::reduce(a, r.letters()) == r);
    for (std::size_t k = 0; k + 1 < r.length(); ++k) CHECK_FALSE(r.letters()[k].cancels(r.letters()[k + 1]));

    Word u = Word::reduce(a, random_letters(rng, rng() % 8, 3));
    Word v = Word::reduce(a, random_letters(rng, rng() % 8, 3));
    Word x = Word::reduce(a, random_letters(rng, rng() % 8, 3));
    CHECK(concat(concat(u, v), x) == concat(u, concat(v, x)));
    CHECK(reverse(invert(u)) == invert(reverse(u)));
    CHECK(reverse(concat(u, v)) == concat(reverse(v), reverse(u)));
    CHECK(reverse(reverse(u)) == u);
    CHECK(concat(u, invert(u)).empty());
  }
}
