#include "hurwitz/groups.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

void Group::check(ElementKey g) const {
  if (g >= order()) throw std::out_of_range("element key out of range for " + name());
}

ElementKey Group::parse_element(std::string_view text) const {
  auto names = generator_names();
  auto gens = generators();
  Word w = parse_word(make_alphabet(names), text);
  ElementKey g = identity();
  for (const Letter& l : w.letters()) {
    ElementKey x = gens[l.generator];
    g = multiply(g, l.sign > 0 ? x : inverse(x));
  }
  return g;
}

// ---- CayleyGroup ------------------------------------------------------------

CayleyGroup::CayleyGroup(CayleyRealization realization, std::string name)
    : realization_(std::move(realization)), name_(std::move(name)) {
  if (name_.empty()) name_ = realization_.origin().to_string();
}

std::vector<ElementKey> CayleyGroup::generators() const {
  std::vector<ElementKey> out;
  for (std::uint32_t g = 0; g < realization_.generator_count(); ++g) {
    out.push_back(realization_.generator_element(g));
  }
  return out;
}

ElementKey CayleyGroup::parse_element(std::string_view text) const {
  return realization_.evaluate(parse_word(realization_.origin().alphabet, text));
}

// ---- permutations -------------------------------------------------------------

std::uint64_t lehmer_rank(std::span<const std::uint8_t> perm) {
  const std::size_t n = perm.size();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += perm[j] < perm[i];
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

Permutation lehmer_unrank(std::uint64_t rank, std::size_t degree) {
  std::vector<std::uint64_t> digits(degree);
  for (std::size_t i = degree; i-- > 0;) {
    std::uint64_t base = degree - i;
    digits[i] = rank % base;
    rank /= base;
  }
  std::vector<std::uint8_t> pool(degree);
  std::iota(pool.begin(), pool.end(), 0);
  Permutation out;
  for (std::size_t i = 0; i < degree; ++i) {
    out.push_back(pool[digits[i]]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
  }
  return out;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation result(degree);
  std::iota(result.begin(), result.end(), 0);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (text.substr(i) == "1") return result;
  while (skip(), i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", i);
    ++i;
    std::vector<std::size_t> cycle;
    while (skip(), i < text.size() && text[i] != ')') {
      if (text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t start = i;
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      if (i == start) throw ParseError("expected point in cycle", i);
      if (v < 1 || v > degree) throw ParseError("point out of range", start);
      if (std::find(cycle.begin(), cycle.end(), v - 1) != cycle.end()) {
        throw ParseError("repeated point in cycle", start);
      }
      cycle.push_back(v - 1);
    }
    if (i >= text.size()) throw ParseError("unterminated cycle", i);
    ++i;
    Permutation c(degree);
    std::iota(c.begin(), c.end(), 0);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      c[cycle[k]] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
    }
    Permutation next(degree);
    for (std::size_t p = 0; p < degree; ++p) next[p] = c[result[p]];
    result = std::move(next);
  }
  return result;
}

std::string format_cycles(std::span<const std::uint8_t> perm) {
  std::ostringstream os;
  std::vector<bool> done(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (done[i] || perm[i] == i) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
      j = perm[j];
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = q[p[i]];
  return out;
}

}  // namespace

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators, std::string name)
    : degree_(degree), name_(std::move(name)) {
  if (degree == 0 || degree > kMaxDegree) throw std::invalid_argument("permutation degree must be in 1..9");
  for (const auto& g : generators) {
    Permutation sorted = g;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < degree; ++i) {
      if (g.size() != degree || sorted[i] != i) throw std::invalid_argument("generator is not a permutation");
    }
  }
  key_by_rank_.assign(factorial(degree), -1);
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::uint64_t> ranks{lehmer_rank(id)};
  key_by_rank_[ranks[0]] = 0;
  std::vector<Permutation> frontier{id};
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (const auto& g : generators) {
      Permutation p = compose(frontier[i], g);
      std::uint64_t r = lehmer_rank(p);
      if (key_by_rank_[r] < 0) {
        key_by_rank_[r] = 0;
        ranks.push_back(r);
        frontier.push_back(std::move(p));
      }
    }
  }
  std::sort(ranks.begin(), ranks.end());
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    key_by_rank_[ranks[k]] = static_cast<std::int32_t>(k);
    elements_.push_back(lehmer_unrank(ranks[k], degree));
  }
  for (const auto& g : generators) generator_keys_.push_back(key_of(g));
  inverse_.resize(elements_.size());
  for (ElementKey k = 0; k < elements_.size(); ++k) {
    Permutation inv(degree);
    for (std::size_t i = 0; i < degree; ++i) inv[elements_[k][i]] = static_cast<std::uint8_t>(i);
    inverse_[k] = key_of(inv);
  }
  if (elements_.size() <= 2048) {
    const std::size_t n = elements_.size();
    table_.resize(n * n);
    for (ElementKey g = 0; g < n; ++g) {
      for (ElementKey h = 0; h < n; ++h) table_[g * n + h] = key_of(compose(elements_[g], elements_[h]));
    }
  }
  if (name_.empty()) name_ = "permutation group of degree " + std::to_string(degree) + ", order " + std::to_string(order());
}

const Permutation& PermutationGroup::element(ElementKey g) const {
  check(g);
  return elements_[g];
}

ElementKey PermutationGroup::key_of(std::span<const std::uint8_t> perm) const {
  if (perm.size() != degree_) throw std::invalid_argument("permutation has the wrong degree");
  std::int32_t k = key_by_rank_[lehmer_rank(perm)];
  if (k < 0 || lehmer_rank(elements_[static_cast<std::size_t>(k)]) != lehmer_rank(perm)) {
    throw std::invalid_argument("permutation " + format_cycles(perm) + " is not in the group");
  }
  return static_cast<ElementKey>(k);
}

ElementKey PermutationGroup::multiply(ElementKey g, ElementKey h) const {
  check(g);
  check(h);
  if (!table_.empty()) return table_[g * elements_.size() + h];
  return key_of(compose(elements_[g], elements_[h]));
}

ElementKey PermutationGroup::inverse(ElementKey g) const {
  check(g);
  return inverse_[g];
}

std::vector<std::string> PermutationGroup::generator_names() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < generator_keys_.size(); ++i) out.push_back("g" + std::to_string(i + 1));
  return out;
}

ElementKey PermutationGroup::parse_element(std::string_view text) const {
  auto first = text.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && (text[first] == '(' || text.substr(first) == "1")) {
    return key_of(parse_cycles(text, degree_));
  }
  return Group::parse_element(text);
}

// ---- direct dihedral and quaternion ------------------------------------------------

DihedralGroup::DihedralGroup(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("dihedral parameter must be >= 1");
}

ElementKey DihedralGroup::multiply(ElementKey g, ElementKey h) const {
  check(g);
  check(h);
  // (r^a s^e)(r^b s^f) = r^(a + (-1)^e b) s^(e+f)
  std::size_t a = g % n_, e = g / n_, b = h % n_, f = h / n_;
  std::size_t k = e ? (a + n_ - b) % n_ : (a + b) % n_;
  return static_cast<ElementKey>(k + n_ * ((e + f) % 2));
}

ElementKey DihedralGroup::inverse(ElementKey g) const {
  check(g);
  if (g >= n_) return g;  // reflections are involutions
  return static_cast<ElementKey>((n_ - g) % n_);
}

std::string DihedralGroup::label(ElementKey g) const {
  check(g);
  std::size_t k = g % n_;
  bool s = g >= n_;
  if (k == 0 && !s) return "1";
  std::string out;
  if (k == 1) out = "r";
  if (k > 1) out = "r^" + std::to_string(k);
  if (s) out += out.empty() ? "s" : " s";
  return out;
}

std::vector<ElementKey> DihedralGroup::generators() const {
  return {static_cast<ElementKey>(1 % n_), static_cast<ElementKey>(n_)};
}

namespace {

// Keys: 2*u + sign with u indexing 1, i, j, k and sign 1 meaning negative.
struct Quat {
  int unit;
  bool negative;
};

Quat quat_mul(Quat x, Quat y) {
  // unit products: row * column, as (unit, negative)
  static const Quat units[4][4] = {
      {{0, false}, {1, false}, {2, false}, {3, false}},
      {{1, false}, {0, true}, {3, false}, {2, true}},
      {{2, false}, {3, true}, {0, true}, {1, false}},
      {{3, false}, {2, false}, {1, true}, {0, true}},
  };
  Quat p = units[x.unit][y.unit];
  return {p.unit, p.negative != (x.negative != y.negative)};
}

}  // namespace

QuaternionGroup::QuaternionGroup() {
  for (ElementKey g = 0; g < 8; ++g) {
    for (ElementKey h = 0; h < 8; ++h) {
      Quat p = quat_mul({static_cast<int>(g / 2), (g % 2) != 0}, {static_cast<int>(h / 2), (h % 2) != 0});
      table_[g][h] = static_cast<ElementKey>(2 * p.unit + (p.negative ? 1 : 0));
    }
  }
}

ElementKey QuaternionGroup::multiply(ElementKey g, ElementKey h) const {
  check(g);
  check(h);
  return table_[g][h];
}

ElementKey QuaternionGroup::inverse(ElementKey g) const {
  check(g);
  return g < 2 ? g : g ^ 1U;
}

std::string QuaternionGroup::label(ElementKey g) const {
  check(g);
  static const char* names[] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return names[g];
}

ElementKey QuaternionGroup::parse_element(std::string_view text) const {
  static const char* names[] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  for (ElementKey g = 0; g < 8; ++g) {
    if (t == names[g]) return g;
  }
  return Group::parse_element(text);
}

// ---- factories and free functions ----------------------------------------------------

GroupPtr cayley_group(CayleyRealization realization, std::string name) {
  return std::make_shared<const CayleyGroup>(std::move(realization), std::move(name));
}

GroupPtr symmetric_group(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("symmetric group degree must be in 1..8");
  const auto d = static_cast<std::size_t>(n);
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation t(d), c(d);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (std::size_t i = 0; i < d; ++i) c[i] = static_cast<std::uint8_t>((i + 1) % d);
    gens = {t, c};
  }
  return std::make_shared<const PermutationGroup>(d, std::move(gens), "S" + std::to_string(n));
}

GroupPtr dihedral_group(int n) {
  if (n < 1) throw std::invalid_argument("dihedral parameter must be >= 1");
  return std::make_shared<const DihedralGroup>(static_cast<std::size_t>(n));
}

GroupPtr quaternion_group() { return std::make_shared<const QuaternionGroup>(); }

ElementKey conjugate(const Group& G, ElementKey g, ElementKey y) {
  return G.multiply(G.multiply(G.inverse(y), g), y);
}

ElementKey power(const Group& G, ElementKey g, long k) {
  ElementKey base = k < 0 ? G.inverse(g) : g;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  ElementKey acc = G.identity();
  while (e) {
    if (e & 1U) acc = G.multiply(acc, base);
    base = G.multiply(base, base);
    e >>= 1U;
  }
  return acc;
}

std::size_t element_order(const Group& G, ElementKey g) {
  std::size_t k = 1;
  ElementKey x = g;
  while (x != G.identity()) {
    x = G.multiply(x, g);
    ++k;
    if (k > G.order()) throw std::logic_error("element order exceeds group order");
  }
  return k;
}

std::map<std::size_t, std::size_t> element_order_counts(const Group& G) {
  std::map<std::size_t, std::size_t> out;
  for (ElementKey g = 0; g < G.order(); ++g) ++out[element_order(G, g)];
  return out;
}

bool satisfies_group_axioms(const Group& G) {
  const std::size_t n = G.order();
  if (n > 200) throw std::invalid_argument("exhaustive axiom check limited to order <= 200");
  const ElementKey e = G.identity();
  for (ElementKey a = 0; a < n; ++a) {
    if (G.multiply(a, e) != a || G.multiply(e, a) != a) return false;
    if (G.multiply(a, G.inverse(a)) != e || G.multiply(G.inverse(a), a) != e) return false;
    for (ElementKey b = 0; b < n; ++b) {
      ElementKey ab = G.multiply(a, b);
      if (ab >= n) return false;
      for (ElementKey c = 0; c < n; ++c) {
        if (G.multiply(ab, c) != G.multiply(a, G.multiply(b, c))) return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<ElementKey>> extend_to_isomorphism(const Group& a,
                                                             std::span<const ElementKey> gens_a,
                                                             const Group& b,
                                                             std::span<const ElementKey> gens_b) {
  if (a.order() != b.order() || gens_a.size() != gens_b.size()) return std::nullopt;
  const std::size_t n = a.order();
  constexpr ElementKey kUnset = ~ElementKey{0};
  std::vector<ElementKey> map(n, kUnset);
  map[a.identity()] = b.identity();
  std::vector<ElementKey> queue{a.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t k = 0; k < gens_a.size(); ++k) {
      ElementKey x = a.multiply(queue[i], gens_a[k]);
      ElementKey fx = b.multiply(map[queue[i]], gens_b[k]);
      if (map[x] == kUnset) {
        map[x] = fx;
        queue.push_back(x);
      } else if (map[x] != fx) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != n) return std::nullopt;  // gens_a do not generate a
  std::vector<bool> hit(n, false);
  for (ElementKey v : map) {
    if (hit[v]) return std::nullopt;
    hit[v] = true;
  }
  // Full homomorphism check on small orders.
  if (n <= 512) {
    for (ElementKey x = 0; x < n; ++x) {
      for (ElementKey y = 0; y < n; ++y) {
        if (map[a.multiply(x, y)] != b.multiply(map[x], map[y])) return std::nullopt;
      }
    }
  }
  return map;
}

std::optional<MultiplicationTable> MultiplicationTable::build(const Group& G, std::size_t max_order) {
  if (G.order() > max_order) return std::nullopt;
  MultiplicationTable t;
  t.order_ = G.order();
  t.products_.resize(t.order_ * t.order_);
  t.inverses_.resize(t.order_);
  for (ElementKey g = 0; g < t.order_; ++g) {
    t.inverses_[g] = G.inverse(g);
    for (ElementKey h = 0; h < t.order_; ++h) t.products_[g * t.order_ + h] = G.multiply(g, h);
  }
  return t;
}

}  // namespace hurwitz
