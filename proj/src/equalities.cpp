#include "hurwitz/equalities.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace hurwitz {

std::pair<ElementKey, ElementKey> closed_form_pair(const Group& G, ElementKey x, ElementKey y, long m) {
  // floor division so that m = 2n or 2n + 1 for negative m as well
  const long n = (m >= 0) ? m / 2 : -((-m + 1) / 2);
  const bool odd = (m - 2 * n) == 1;
  const ElementKey xi = G.inverse(x), yi = G.inverse(y);
  auto mul = [&](std::initializer_list<ElementKey> xs) {
    ElementKey acc = G.identity();
    for (ElementKey v : xs) acc = G.multiply(acc, v);
    return acc;
  };
  const ElementKey yixi = G.multiply(yi, xi);  // y^-1 x^-1
  const ElementKey xiyi = G.multiply(xi, yi);  // x^-1 y^-1
  const ElementKey xy = G.multiply(x, y);
  const ElementKey yx = G.multiply(y, x);
  if (!odd) {
    ElementKey left = mul({yi, power(G, xiyi, n - 1), x, power(G, yx, n - 1), y});
    ElementKey right = mul({power(G, yixi, n), y, power(G, xy, n)});
    return {left, right};
  }
  ElementKey left = mul({power(G, yixi, n), y, power(G, xy, n)});
  ElementKey right = mul({yi, power(G, xiyi, n), x, power(G, yx, n), y});
  return {left, right};
}

namespace {

Factorization with_factors(const Factorization& f, std::vector<ElementKey> xs) {
  return Factorization(f.group(), std::move(xs));
}

}  // namespace

Factorization cycle(const Factorization& f) {
  std::vector<ElementKey> xs(f.factors().begin(), f.factors().end());
  std::rotate(xs.begin(), xs.begin() + 1, xs.end());
  return with_factors(f, std::move(xs));
}

Factorization conjugate_all(const Factorization& f, ElementKey y) {
  std::vector<ElementKey> xs;
  for (ElementKey x : f.factors()) xs.push_back(conjugate(*f.group(), x, y));
  return with_factors(f, std::move(xs));
}

Factorization flip_inverse(const Factorization& f) {
  std::vector<ElementKey> xs;
  for (auto it = f.factors().rbegin(); it != f.factors().rend(); ++it) xs.push_back(f.group()->inverse(*it));
  return with_factors(f, std::move(xs));
}

Factorization reverse_tuple(const Factorization& f) {
  return with_factors(f, std::vector<ElementKey>(f.factors().rbegin(), f.factors().rend()));
}

Factorization invert_each(const Factorization& f) {
  std::vector<ElementKey> xs;
  for (ElementKey x : f.factors()) xs.push_back(f.group()->inverse(x));
  return with_factors(f, std::move(xs));
}

// ---- word tuples ------------------------------------------------------------------

WordTuple::WordTuple(AlphabetPtr alphabet, std::vector<Word> words)
    : alphabet_(std::move(alphabet)), words_(std::move(words)) {
  for (const Word& w : words_) {
    if (!Word::same_alphabet(w.alphabet(), alphabet_)) {
      throw IncompatibleAlphabet("word tuple mixes alphabets");
    }
  }
}

std::string WordTuple::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < words_.size(); ++k) out += (k ? ", " : "") + words_[k].to_string();
  return out + ")";
}

WordTuple parse_word_tuple(const AlphabetPtr& alphabet, std::string_view text) {
  std::vector<Word> words;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    words.push_back(parse_word(alphabet, part));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return WordTuple(alphabet, std::move(words));
}

WordTuple double_reverse(const WordTuple& t) {
  std::vector<Word> out;
  for (auto it = t.words().rbegin(); it != t.words().rend(); ++it) out.push_back(reverse(*it));
  return WordTuple(t.alphabet(), std::move(out));
}

Factorization evaluate(const GroupPtr& group, const WordTuple& t) {
  const auto* cg = dynamic_cast<const CayleyGroup*>(group.get());
  if (!cg || !Word::same_alphabet(cg->realization().origin().alphabet, t.alphabet())) {
    throw IncompatibleAlphabet("word tuple must be evaluated in a group realized from its presentation");
  }
  std::vector<ElementKey> xs;
  for (const Word& w : t.words()) xs.push_back(cg->evaluate(w));
  return Factorization(group, std::move(xs));
}

WordTuple hurwitz_move(const WordTuple& t, Move m) {
  if (m.position < 1 || m.position + 1 > t.length()) {
    throw std::out_of_range("Hurwitz move position must be in 1..length-1");
  }
  std::vector<Word> ws = t.words();
  const std::size_t k = m.position - 1;
  Word a = ws[k], b = ws[k + 1];
  if (m.direction == Direction::Forward) {
    ws[k] = b;
    ws[k + 1] = concat(concat(invert(b), a), b);
  } else {
    ws[k] = concat(concat(a, b), invert(a));
    ws[k + 1] = a;
  }
  return WordTuple(t.alphabet(), std::move(ws));
}

WordTuple apply_braid(const WordTuple& t, std::span<const Move> moves) {
  WordTuple out = t;
  for (const Move& m : moves) out = hurwitz_move(out, m);
  return out;
}

std::vector<Move> mirrored_moves(std::span<const Move> moves, std::size_t length) {
  std::vector<Move> out;
  for (const Move& m : moves) {
    if (m.position < 1 || m.position + 1 > length) throw std::out_of_range("move position out of range");
    out.push_back({length - m.position,
                   m.direction == Direction::Forward ? Direction::Inverse : Direction::Forward});
  }
  return out;
}

bool are_double_reverses(const WordTuple& u, const WordTuple& v) { return double_reverse(u) == v; }

bool are_double_reverses_in(const CayleyGroup& G, const WordTuple& u, const WordTuple& v) {
  if (u.length() != v.length()) return false;
  const std::size_t l = u.length();
  for (std::size_t k = 0; k < l; ++k) {
    if (G.evaluate(reverse(u.words()[k])) != G.evaluate(v.words()[l - 1 - k])) return false;
  }
  return true;
}

// ---- equality checks ----------------------------------------------------------------

std::string Transform::name() const {
  switch (kind) {
    case TransformKind::Cycle: return "cycle";
    case TransformKind::FlipInverse: return "flip_inverse";
    case TransformKind::ConjugateAll: return "conjugate_all";
    case TransformKind::ReverseTuple: return "reverse_tuple";
    case TransformKind::InvertEach: return "invert_each";
    case TransformKind::DoubleReverse: return "double_reverse";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::Unequal: return "unequal";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string EqualityReport::to_json() const {
  auto size_json = [](const OrbitSize& s) {
    return nlohmann::ordered_json{{"value", s.value}, {"capped", s.capped}};
  };
  auto factors_json = [](const Factorization& f) {
    auto arr = nlohmann::ordered_json::array();
    for (ElementKey x : f.factors()) arr.push_back(f.group()->label(x));
    return arr;
  };
  nlohmann::ordered_json j;
  j["transform"] = transform;
  j["input"] = factors_json(input);
  j["output"] = factors_json(output);
  j["size_left"] = size_json(size_left);
  j["size_right"] = size_json(size_right);
  j["verdict"] = to_string(verdict);
  j["guaranteed"] = guaranteed;
  return j.dump();
}

EqualityReport check_equality(const Factorization& f, const Transform& t, std::size_t node_cap) {
  const Group& G = *f.group();
  bool all_involutions = std::all_of(f.factors().begin(), f.factors().end(),
                                     [&](ElementKey x) { return G.multiply(x, x) == G.identity(); });
  std::optional<Factorization> out;
  bool guaranteed = true;
  switch (t.kind) {
    case TransformKind::Cycle: out = cycle(f); break;
    case TransformKind::FlipInverse: out = flip_inverse(f); break;
    case TransformKind::ConjugateAll: out = conjugate_all(f, t.conjugator); break;
    case TransformKind::ReverseTuple:
      out = reverse_tuple(f);
      guaranteed = f.length() <= 2 || all_involutions;
      break;
    case TransformKind::InvertEach:
      out = invert_each(f);
      guaranteed = f.length() <= 2;
      break;
    case TransformKind::DoubleReverse: {
      if (!t.words) throw std::invalid_argument("double reverse needs the word tuple");
      if (!(evaluate(f.group(), *t.words) == f)) {
        throw std::invalid_argument("factorization is not the evaluation of the word tuple");
      }
      out = evaluate(f.group(), double_reverse(*t.words));
      guaranteed = t.presentation == Reversibility::Reversible;
      break;
    }
  }
  OrbitSize left = orbit_size(f, node_cap);
  OrbitSize right = orbit_size(*out, node_cap);
  Verdict v = (left.capped || right.capped) ? Verdict::Inconclusive
              : left.value == right.value   ? Verdict::Equal
                                            : Verdict::Unequal;
  return {t.name(), f, *out, left, right, v, guaranteed};
}

bool remark_rotation_check(std::span<const int> pattern) {
  std::set<int> symbols(pattern.begin(), pattern.end());
  if (symbols.size() > 2) throw std::invalid_argument("pattern has more than two distinct symbols");
  std::vector<int> rev(pattern.rbegin(), pattern.rend());
  std::vector<int> rot(pattern.begin(), pattern.end());
  for (std::size_t r = 0; r < std::max<std::size_t>(rot.size(), 1); ++r) {
    if (rot == rev) return true;
    std::rotate(rot.begin(), rot.begin() + (rot.empty() ? 0 : 1), rot.end());
  }
  return false;
}

// ---- scans -------------------------------------------------------------------------

std::string to_string(std::span<const ScanLetter> letters) {
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) out += ' ';
    switch (letters[k]) {
      case ScanLetter::A: out += "a"; break;
      case ScanLetter::B: out += "b"; break;
      case ScanLetter::AInv: out += "a^-1"; break;
    }
  }
  return out;
}

std::size_t ScanReport::uniform_count() const {
  return static_cast<std::size_t>(std::count_if(multisets.begin(), multisets.end(),
                                                [](const MultisetSummary& m) { return m.uniform(); }));
}

std::size_t ScanReport::candidate_count() const {
  return static_cast<std::size_t>(std::count_if(multisets.begin(), multisets.end(), [](const MultisetSummary& m) {
    return m.counterexample_candidate();
  }));
}

std::size_t ScanReport::inconclusive_count() const {
  return static_cast<std::size_t>(std::count_if(multisets.begin(), multisets.end(),
                                                [](const MultisetSummary& m) { return m.inconclusive; }));
}

std::string ScanReport::to_csv() const {
  std::ostringstream os;
  os << "multiset,permutation,orbit_size,capped\n";
  for (const ScanRow& r : rows) {
    os << to_string(r.multiset) << ',' << to_string(r.permutation) << ',' << r.size.value << ','
       << (r.size.capped ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string ScanReport::summary() const {
  std::ostringstream os;
  os << "multisets: " << multisets.size() << ", uniform: " << uniform_count()
     << ", counterexample candidates: " << candidate_count() << ", inconclusive: " << inconclusive_count();
  return os.str();
}

std::string ScanReport::to_json() const {
  nlohmann::ordered_json j;
  auto ms = nlohmann::ordered_json::array();
  for (const auto& m : multisets) {
    ms.push_back({{"multiset", to_string(m.multiset)},
                  {"permutations", m.permutations},
                  {"sizes", std::vector<std::size_t>(m.sizes.begin(), m.sizes.end())},
                  {"uniform", m.uniform()},
                  {"inconclusive", m.inconclusive}});
  }
  j["multisets"] = ms;
  auto rs = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    rs.push_back({{"multiset", to_string(r.multiset)},
                  {"permutation", to_string(r.permutation)},
                  {"orbit_size", r.size.value},
                  {"capped", r.size.capped}});
  }
  j["rows"] = rs;
  j["uniform"] = uniform_count();
  j["counterexample_candidates"] = candidate_count();
  return j.dump();
}

namespace {

void require_ab(const Group& G) {
  auto names = G.generator_names();
  if (names.size() != 2 || names[0] != "a" || names[1] != "b") {
    throw std::invalid_argument("expected a group generated by a and b");
  }
}

}  // namespace

ScanReport conjecture_scan(const GroupPtr& g6, std::size_t max_len, std::size_t node_cap) {
  require_ab(*g6);
  const ElementKey a = g6->generators()[0], b = g6->generators()[1];
  const ElementKey letter_keys[3] = {a, b, g6->inverse(a)};
  ScanReport report;
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::size_t na = len + 1; na-- > 0;) {
      for (std::size_t nb = len - na + 1; nb-- > 0;) {
        const std::size_t ninv = len - na - nb;
        std::vector<ScanLetter> ms;
        ms.insert(ms.end(), na, ScanLetter::A);
        ms.insert(ms.end(), nb, ScanLetter::B);
        ms.insert(ms.end(), ninv, ScanLetter::AInv);

        MultisetSummary summary{ms, {}, 0, false};
        // Arrangements already seen inside a computed orbit share its size.
        std::map<std::vector<ElementKey>, OrbitSize> known;
        std::vector<ScanLetter> perm = ms;
        do {
          std::vector<ElementKey> keys;
          for (ScanLetter l : perm) keys.push_back(letter_keys[static_cast<int>(l)]);
          OrbitSize size;
          if (auto it = known.find(keys); it != known.end()) {
            size = it->second;
          } else {
            Orbit o = orbit(Factorization(g6, keys), node_cap);
            size = {o.size(), o.capped()};
            if (!o.capped()) {
              std::vector<ScanLetter> other = ms;
              do {
                std::vector<ElementKey> ok;
                for (ScanLetter l : other) ok.push_back(letter_keys[static_cast<int>(l)]);
                if (o.contains(ok)) known.emplace(ok, size);
              } while (std::next_permutation(other.begin(), other.end()));
            }
          }
          ++summary.permutations;
          if (size.capped) {
            summary.inconclusive = true;
          } else {
            summary.sizes.insert(size.value);
          }
          report.rows.push_back({ms, perm, size});
        } while (std::next_permutation(perm.begin(), perm.end()));
        report.multisets.push_back(std::move(summary));
      }
    }
  }
  return report;
}

G4Check g4_counterexample_check(const GroupPtr& g4, std::size_t node_cap) {
  require_ab(*g4);
  const ElementKey a = g4->generators()[0], b = g4->generators()[1];
  Factorization aabb(g4, {a, a, b, b}), abab(g4, {a, b, a, b});
  Orbit o = orbit(aabb, node_cap);
  G4Check c;
  c.aabb = {o.size(), o.capped()};
  c.abab = orbit_size(abab, node_cap);
  c.same_orbit = o.contains(abab.factors());
  return c;
}

}  // namespace hurwitz
