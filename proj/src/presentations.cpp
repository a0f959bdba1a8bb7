#include "hurwitz/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "hurwitz/toddcoxeter.hpp"

namespace hurwitz {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation presentation() {
    expect('<');
    std::vector<std::string> names;
    names.push_back(name());
    while (accept(',')) names.push_back(name());
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (names[i] == names[j]) throw ParseError("duplicate generator '" + names[i] + "'", pos_);
      }
    }
    alphabet_ = make_alphabet(std::move(names));
    expect('|');
    std::vector<Word> relators;
    skip_ws();
    if (peek() != '>') {
      chain(relators);
      while (accept(',')) chain(relators);
    }
    expect('>');
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return {alphabet_, std::move(relators)};
  }

  Word lone_term(AlphabetPtr alphabet) {
    alphabet_ = std::move(alphabet);
    Word w = term();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
    return w;
  }

 private:
  void chain(std::vector<Word>& out) {
    std::vector<Word> terms;
    terms.push_back(term());
    while (accept('=')) terms.push_back(term());
    if (terms.size() == 1) {
      if (!terms[0].empty()) out.push_back(terms[0]);
      return;
    }
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
      Word r = concat(terms[i], invert(terms[i + 1]));
      if (!r.empty()) out.push_back(std::move(r));
    }
  }

  Word term() {
    skip_ws();
    if (peek() == '1') {
      ++pos_;
      if (pos_ < text_.size() && is_name_char(text_[pos_])) throw ParseError("bad term", pos_);
      return Word(alphabet_);
    }
    std::vector<Letter> raw;
    if (!is_name_start(peek())) throw ParseError("expected generator name or 1", pos_);
    while (is_name_start(peek())) {
      std::size_t at = pos_;
      std::string n = name();
      int g = alphabet_->find(n);
      if (g < 0) throw UnknownGenerator("unknown generator '" + n + "'", at);
      long e = 1;
      if (accept('^')) e = integer();
      Letter l{static_cast<std::uint32_t>(g), static_cast<std::int8_t>(e < 0 ? -1 : 1)};
      for (long k = 0; k < (e < 0 ? -e : e); ++k) raw.push_back(l);
      skip_ws();
    }
    return Word::reduce(alphabet_, raw);
  }

  std::string name() {
    skip_ws();
    if (!is_name_start(peek())) throw ParseError("expected generator name", pos_);
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    long v = 0;
    const char* first = text_.data() + start + ((text_[start] == '+') ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, v);
    if (ec != std::errc() || ptr != text_.data() + pos_) throw ParseError("expected integer", start);
    if (v > 1'000'000 || v < -1'000'000) throw ParseError("exponent too large", start);
    return v;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  AlphabetPtr alphabet_;
};

Word word_of(const AlphabetPtr& a, std::initializer_list<Letter> letters) {
  return Word::reduce(a, std::vector<Letter>(letters));
}

// x y x y ... with `terms` letters.
Word alternating(const AlphabetPtr& a, std::uint32_t x, std::uint32_t y, int terms) {
  std::vector<Letter> raw;
  for (int t = 0; t < terms; ++t) raw.push_back(gen(t % 2 == 0 ? x : y));
  return Word::reduce(a, raw);
}

Word braid_relator(const AlphabetPtr& a, std::uint32_t x, std::uint32_t y, int terms) {
  return concat(alternating(a, x, y, terms), invert(alternating(a, y, x, terms)));
}

std::vector<int> parse_ints(std::string_view s) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string_view::npos) j = s.size();
    std::string_view tok = s.substr(i, j - i);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("bad integer list '" + std::string(s) + "'");
    }
    out.push_back(v);
    i = j + 1;
  }
  return out;
}

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).presentation(); }

Word parse_word(const AlphabetPtr& alphabet, std::string_view text) {
  return Parser(text).lone_term(alphabet);
}

std::string render_relator(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  auto ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long e = static_cast<long>(j - i) * ls[i].sign;
    if (i) os << ' ';
    os << w.alphabet()->names[ls[i].generator];
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < alphabet->size(); ++i) os << (i ? ", " : "") << alphabet->names[i];
  os << " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) os << (i ? ", " : "") << render_relator(relators[i]);
  os << '>';
  return os.str();
}

Presentation dihedral_rs(int n) {
  if (n < 1) throw std::invalid_argument("dihedral order parameter must be >= 1");
  auto a = make_alphabet({"r", "s"});
  const std::uint32_t r = 0, s = 1;
  return {a,
          {power(word_of(a, {gen(r)}), n), word_of(a, {gen(s), gen(s)}),
           word_of(a, {gen(r), gen(s), gen(r), gen_inv(s)})}};
}

Presentation dihedral_inv(int n) {
  if (n < 1) throw std::invalid_argument("dihedral order parameter must be >= 1");
  auto a = make_alphabet({"a", "b"});
  return {a,
          {word_of(a, {gen(0), gen(0)}), word_of(a, {gen(1), gen(1)}),
           power(word_of(a, {gen(0), gen(1)}), n)}};
}

Presentation q8_ab() {
  auto a = make_alphabet({"a", "b"});
  return {a,
          {power(word_of(a, {gen(0)}), 4), word_of(a, {gen(0), gen(0), gen_inv(1), gen_inv(1)}),
           word_of(a, {gen(1), gen(0), gen_inv(1), gen(0)})}};
}

Presentation q8_ijk() {
  auto a = make_alphabet({"m", "i", "j", "k"});
  const std::uint32_t m = 0, i = 1, j = 2, k = 3;
  return {a,
          {word_of(a, {gen(m), gen(m)}), word_of(a, {gen(i), gen(i), gen(m)}),
           word_of(a, {gen(j), gen(j), gen(m)}), word_of(a, {gen(k), gen(k), gen(m)}),
           word_of(a, {gen(i), gen(j), gen(k), gen(m)})}};
}

Presentation g4() {
  const int p[] = {3, 3}, q[] = {3};
  return shephard(p, q, {"a", "b"});
}

Presentation g6() {
  const int p[] = {3, 2}, q[] = {6};
  return shephard(p, q, {"a", "b"});
}

Presentation shephard(std::span<const int> orders, std::span<const int> braid_lengths,
                      std::vector<std::string> names) {
  const std::size_t n = orders.size();
  if (n == 0) throw std::invalid_argument("Shephard presentation needs at least one generator");
  if (braid_lengths.size() != n - 1) {
    throw std::invalid_argument("Shephard presentation needs n-1 braid lengths");
  }
  for (int p : orders) {
    if (p < 1) throw std::invalid_argument("generator orders must be >= 1");
  }
  for (int q : braid_lengths) {
    if (q < 2) throw std::invalid_argument("braid lengths must be >= 2");
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i + 1));
  }
  if (names.size() != n) throw std::invalid_argument("wrong number of generator names");
  auto a = make_alphabet(std::move(names));
  std::vector<Word> rels;
  for (std::uint32_t i = 0; i < n; ++i) rels.push_back(power(word_of(a, {gen(i)}), orders[i]));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 2; j < n; ++j) rels.push_back(braid_relator(a, i, j, 2));
  }
  for (std::uint32_t i = 0; i + 1 < n; ++i) rels.push_back(braid_relator(a, i, i + 1, braid_lengths[i]));
  return {a, std::move(rels)};
}

Presentation coxeter(const std::vector<std::vector<int>>& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) throw std::invalid_argument("Coxeter matrix is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw std::invalid_argument("Coxeter matrix must be square");
    if (matrix[i][i] != 1) throw std::invalid_argument("Coxeter matrix diagonal must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix[i][j] != matrix[j][i]) throw std::invalid_argument("Coxeter matrix must be symmetric");
      if (i != j && matrix[i][j] != 0 && matrix[i][j] < 2) {
        throw std::invalid_argument("Coxeter matrix entries must be >= 2 (or 0 for infinity)");
      }
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i + 1));
  auto a = make_alphabet(std::move(names));
  std::vector<Word> rels;
  for (std::uint32_t i = 0; i < n; ++i) rels.push_back(word_of(a, {gen(i), gen(i)}));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (matrix[i][j] != 0) rels.push_back(braid_relator(a, i, j, matrix[i][j]));
    }
  }
  return {a, std::move(rels)};
}

Presentation builtin(Family family, std::span<const int> params) {
  auto want = [&](std::size_t k) {
    if (params.size() != k) throw std::invalid_argument("wrong number of builtin parameters");
  };
  switch (family) {
    case Family::DihedralRS: want(1); return dihedral_rs(params[0]);
    case Family::DihedralInv: want(1); return dihedral_inv(params[0]);
    case Family::Q8AB: want(0); return q8_ab();
    case Family::Q8IJK: want(0); return q8_ijk();
    case Family::G4: want(0); return g4();
    case Family::G6: want(0); return g6();
    case Family::Shephard: {
      if (params.size() % 2 == 0) throw std::invalid_argument("Shephard needs n orders and n-1 braid lengths");
      std::size_t n = (params.size() + 1) / 2;
      return shephard(params.first(n), params.subspan(n));
    }
    case Family::Coxeter: {
      std::size_t n = 0;
      while (n * n < params.size()) ++n;
      if (n * n != params.size()) throw std::invalid_argument("Coxeter matrix must be square");
      std::vector<std::vector<int>> m(n, std::vector<int>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = params[i * n + j];
      }
      return coxeter(m);
    }
  }
  throw std::invalid_argument("unknown family");
}

Presentation builtin_from_string(std::string_view name) {
  std::string_view head = name, tail;
  if (auto c = name.find(':'); c != std::string_view::npos) {
    head = name.substr(0, c);
    tail = name.substr(c + 1);
  }
  auto ints = [&] { return parse_ints(tail); };
  if (head == "dihedral-rs") return builtin(Family::DihedralRS, ints());
  if (head == "dihedral-inv") return builtin(Family::DihedralInv, ints());
  if (head == "q8-ab") return q8_ab();
  if (head == "q8-ijk") return q8_ijk();
  if (head == "g4") return g4();
  if (head == "g6") return g6();
  if (head == "coxeter") return builtin(Family::Coxeter, ints());
  if (head == "shephard") {
    auto slash = tail.find('/');
    if (slash == std::string_view::npos) throw std::invalid_argument("shephard:P1,..,Pn/Q1,..,Qn-1");
    auto p = parse_ints(tail.substr(0, slash));
    auto q = tail.size() > slash + 1 ? parse_ints(tail.substr(slash + 1)) : std::vector<int>{};
    return shephard(p, q);
  }
  throw std::invalid_argument("unknown builtin presentation '" + std::string(name) + "'");
}

std::string to_string(Reversibility r) {
  switch (r) {
    case Reversibility::Reversible: return "reversible";
    case Reversibility::NotReversible: return "not reversible";
    case Reversibility::Unknown: return "unknown";
  }
  return "?";
}

ReversibilityReport check_reversible(const Presentation& p, const CayleyRealization& realization) {
  if (!Word::same_alphabet(p.alphabet, realization.origin().alphabet)) {
    throw IncompatibleAlphabet("realization does not belong to this presentation");
  }
  ReversibilityReport report;
  for (const Word& r : p.relators) {
    Word rev = reverse(r);
    if (realization.evaluate(rev) != realization.identity()) {
      report.status = Reversibility::NotReversible;
      report.witness_relator = r;
      report.witness_reverse = std::move(rev);
      return report;
    }
  }
  report.status = Reversibility::Reversible;
  return report;
}

ReversibilityReport check_reversible(const Presentation& p, const Enumeration& enumeration) {
  if (!enumeration.realization) {
    ReversibilityReport report;
    report.status = Reversibility::Unknown;
    report.cap_hit = true;
    return report;
  }
  return check_reversible(p, *enumeration.realization);
}

std::optional<ReversibleShape> reversible_shape(const Word& relator) {
  auto ls = relator.letters();
  const std::size_t n = ls.size();
  if (n == 0 || std::all_of(ls.begin(), ls.end(), [&](const Letter& l) { return l == ls[0]; })) {
    return ReversibleShape::GeneratorPower;
  }
  if (n % 2 == 0) {
    // u v with v = (u*)^-1, i.e. v is u with every sign flipped.
    bool self = true;
    for (std::size_t i = 0; i < n / 2 && self; ++i) self = ls[n / 2 + i] == ls[i].inverse();
    if (self) return ReversibleShape::SelfReverse;
  }
  auto palindrome = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      if (!(ls[i] == ls[from + to - 1 - i])) return false;
    }
    return true;
  };
  for (std::size_t cut = 0; cut <= n; ++cut) {
    if (palindrome(0, cut) && palindrome(cut, n)) return ReversibleShape::PalindromePair;
  }
  return std::nullopt;
}

bool reversible_by_shape(const Presentation& p) {
  return std::all_of(p.relators.begin(), p.relators.end(),
                     [](const Word& r) { return reversible_shape(r).has_value(); });
}

}  // namespace hurwitz
