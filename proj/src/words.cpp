#include "hurwitz/words.hpp"

#include <algorithm>
#include <sstream>

namespace hurwitz {

int Alphabet::find(std::string_view name) const {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(Alphabet{std::move(names)});
}

bool Word::same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->names == b->names;
}

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("word needs an alphabet");
}

Word Word::reduce(AlphabetPtr alphabet, std::span<const Letter> raw) {
  if (!alphabet) throw std::invalid_argument("word needs an alphabet");
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.generator >= alphabet->size() || (l.sign != 1 && l.sign != -1)) {
      throw IncompatibleAlphabet("letter outside the alphabet");
    }
    if (!out.empty() && out.back().cancels(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(alphabet), std::move(out));
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << alphabet_->names[letters_[i].generator];
    if (letters_[i].sign < 0) os << "^-1";
  }
  return os.str();
}

Word concat(const Word& u, const Word& v) {
  if (!Word::same_alphabet(u.alphabet_, v.alphabet_)) {
    throw IncompatibleAlphabet("cannot concatenate words over different alphabets");
  }
  // Only the junction can cancel since both halves are reduced.
  std::size_t cut = 0;
  const std::size_t n = u.letters_.size(), m = v.letters_.size();
  while (cut < n && cut < m && u.letters_[n - 1 - cut].cancels(v.letters_[cut])) ++cut;
  std::vector<Letter> out;
  out.reserve(n + m - 2 * cut);
  out.insert(out.end(), u.letters_.begin(), u.letters_.end() - static_cast<std::ptrdiff_t>(cut));
  out.insert(out.end(), v.letters_.begin() + static_cast<std::ptrdiff_t>(cut), v.letters_.end());
  return Word(u.alphabet_, std::move(out));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.letters_.size());
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(w.alphabet_, std::move(out));
}

Word reverse(const Word& w) {
  return Word(w.alphabet_, std::vector<Letter>(w.letters_.rbegin(), w.letters_.rend()));
}

bool is_palindrome(const Word& w) {
  auto ls = w.letters();
  return std::equal(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(ls.size() / 2), ls.rbegin());
}

Word power(const Word& w, long k) {
  Word base = k < 0 ? invert(w) : w;
  Word out(w.alphabet());
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out = concat(out, base);
  return out;
}

}  // namespace hurwitz
