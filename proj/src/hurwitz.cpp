#include "hurwitz/hurwitz.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace hurwitz {

namespace {

// Open-addressing set of fixed-width key tuples stored contiguously in an
// arena; slot values are row indices into the arena.
class TupleSet {
 public:
  explicit TupleSet(std::size_t width) : width_(width), slots_(1024, kEmpty), mask_(1023) {}

  std::size_t size() const { return count_; }
  const ElementKey* row(std::size_t k) const { return arena_.data() + k * width_; }
  std::vector<ElementKey> release() { return std::move(arena_); }

  bool contains(const ElementKey* t) const {
    for (std::size_t s = hash(t) & mask_;; s = (s + 1) & mask_) {
      if (slots_[s] == kEmpty) return false;
      if (std::equal(t, t + width_, row(slots_[s]))) return true;
    }
  }

  void insert_new(const ElementKey* t) {
    if (2 * (count_ + 1) > slots_.size()) grow();
    arena_.insert(arena_.end(), t, t + width_);
    place(static_cast<std::uint32_t>(count_));
    ++count_;
  }

 private:
  static constexpr std::uint32_t kEmpty = ~std::uint32_t{0};

  std::size_t hash(const ElementKey* t) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i < width_; ++i) {
      h ^= t[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }

  void place(std::uint32_t k) {
    std::size_t s = hash(row(k)) & mask_;
    while (slots_[s] != kEmpty) s = (s + 1) & mask_;
    slots_[s] = k;
  }

  void grow() {
    slots_.assign(slots_.size() * 2, kEmpty);
    mask_ = slots_.size() - 1;
    for (std::uint32_t k = 0; k < count_; ++k) place(k);
  }

  std::size_t width_;
  std::vector<ElementKey> arena_;
  std::vector<std::uint32_t> slots_;
  std::size_t mask_;
  std::size_t count_ = 0;
};

struct TableOps {
  const MultiplicationTable& t;
  ElementKey mul(ElementKey a, ElementKey b) const { return t.multiply(a, b); }
  ElementKey inv(ElementKey a) const { return t.inverse(a); }
};

struct GroupOps {
  const Group& g;
  ElementKey mul(ElementKey a, ElementKey b) const { return g.multiply(a, b); }
  ElementKey inv(ElementKey a) const { return g.inverse(a); }
};

template <class Ops>
void move_in_place(const Ops& ops, ElementKey* x, std::size_t k, Direction d) {
  ElementKey a = x[k], b = x[k + 1];
  if (d == Direction::Forward) {
    x[k] = b;
    x[k + 1] = ops.mul(ops.mul(ops.inv(b), a), b);
  } else {
    x[k] = ops.mul(ops.mul(a, b), ops.inv(a));
    x[k + 1] = a;
  }
}

template <class Ops>
std::pair<std::vector<ElementKey>, bool> explore(const Ops& ops, std::span<const ElementKey> base,
                                                 std::size_t cap) {
  const std::size_t w = base.size();
  TupleSet seen(w);
  seen.insert_new(base.data());
  std::vector<ElementKey> cur(w), next(w);
  bool capped = false;
  for (std::size_t k = 0; k < seen.size() && !capped; ++k) {
    std::copy_n(seen.row(k), w, cur.begin());
    for (std::size_t i = 0; i + 1 < w && !capped; ++i) {
      for (Direction d : {Direction::Forward, Direction::Inverse}) {
        next = cur;
        move_in_place(ops, next.data(), i, d);
        if (seen.contains(next.data())) continue;
        if (seen.size() >= cap) {
          capped = true;
          break;
        }
        seen.insert_new(next.data());
      }
    }
  }
  return {seen.release(), capped};
}

std::vector<ElementKey> sort_rows(const std::vector<ElementKey>& arena, std::size_t w) {
  const std::size_t n = arena.size() / w;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(arena.begin() + static_cast<std::ptrdiff_t>(a * w),
                                        arena.begin() + static_cast<std::ptrdiff_t>((a + 1) * w),
                                        arena.begin() + static_cast<std::ptrdiff_t>(b * w),
                                        arena.begin() + static_cast<std::ptrdiff_t>((b + 1) * w));
  });
  std::vector<ElementKey> out;
  out.reserve(arena.size());
  for (std::size_t k : idx) {
    out.insert(out.end(), arena.begin() + static_cast<std::ptrdiff_t>(k * w),
               arena.begin() + static_cast<std::ptrdiff_t>((k + 1) * w));
  }
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Factorization::Factorization(GroupPtr group, std::vector<ElementKey> factors)
    : group_(std::move(group)), factors_(std::move(factors)) {
  if (!group_) throw std::invalid_argument("factorization needs a group");
  if (factors_.empty()) throw std::invalid_argument("factorization needs at least one factor");
  for (ElementKey x : factors_) {
    if (x >= group_->order()) throw std::out_of_range("factor is not an element of the group");
  }
}

std::string Factorization::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) out += ", ";
    out += group_->label(factors_[k]);
  }
  return out + ")";
}

Factorization parse_factorization(GroupPtr group, std::string_view text) {
  std::vector<std::string> parts;
  std::string t = trim(text);
  if (t.find(',') != std::string::npos) {
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, ',')) parts.push_back(trim(part));
  } else if (!t.empty() && t[0] == '(') {
    std::size_t i = 0;
    while (i < t.size()) {
      std::size_t close = t.find(')', i);
      if (close == std::string::npos) throw ParseError("unterminated cycle", i);
      parts.push_back(trim(t.substr(i, close + 1 - i)));
      i = t.find_first_not_of(" \t", close + 1);
      if (i == std::string::npos) break;
    }
  } else {
    std::stringstream ss(t);
    std::string part;
    while (ss >> part) parts.push_back(part);
  }
  std::vector<ElementKey> keys;
  for (const auto& p : parts) {
    if (p.empty()) throw ParseError("empty factor", 0);
    keys.push_back(group->parse_element(p));
  }
  return Factorization(std::move(group), std::move(keys));
}

Factorization hurwitz_move(const Factorization& f, std::size_t position, Direction direction) {
  if (position < 1 || position + 1 > f.length()) {
    throw std::out_of_range("Hurwitz move position must be in 1..length-1");
  }
  std::vector<ElementKey> x(f.factors().begin(), f.factors().end());
  move_in_place(GroupOps{*f.group()}, x.data(), position - 1, direction);
  return Factorization(f.group(), std::move(x));
}

Factorization hurwitz_move(const Factorization& f, Move m) { return hurwitz_move(f, m.position, m.direction); }

Factorization apply_braid(const Factorization& f, std::span<const Move> moves) {
  for (const Move& m : moves) {
    if (m.position < 1 || m.position + 1 > f.length()) {
      throw std::out_of_range("Hurwitz move position must be in 1..length-1");
    }
  }
  std::vector<ElementKey> x(f.factors().begin(), f.factors().end());
  for (const Move& m : moves) move_in_place(GroupOps{*f.group()}, x.data(), m.position - 1, m.direction);
  return Factorization(f.group(), std::move(x));
}

ElementKey product(const Factorization& f) {
  ElementKey p = f.group()->identity();
  for (ElementKey x : f.factors()) p = f.group()->multiply(p, x);
  return p;
}

Orbit::Orbit(Factorization base, std::vector<ElementKey> sorted_members, bool capped)
    : base_(std::move(base)), width_(base_.length()), members_(std::move(sorted_members)), capped_(capped) {}

Factorization Orbit::member_factorization(std::size_t k) const {
  auto m = member(k);
  return Factorization(base_.group(), std::vector<ElementKey>(m.begin(), m.end()));
}

std::optional<std::size_t> Orbit::find(std::span<const ElementKey> factors) const {
  if (factors.size() != width_) return std::nullopt;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto m = member(mid);
    if (std::lexicographical_compare(m.begin(), m.end(), factors.begin(), factors.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < size() && std::ranges::equal(member(lo), factors)) return lo;
  return std::nullopt;
}

bool Orbit::contains(std::span<const ElementKey> factors) const { return find(factors).has_value(); }

Orbit orbit(const Factorization& f, std::size_t node_cap) {
  if (node_cap == 0) throw std::invalid_argument("node cap must be >= 1");
  const Group& G = *f.group();
  std::pair<std::vector<ElementKey>, bool> found;
  if (auto table = MultiplicationTable::build(G, 2048)) {
    found = explore(TableOps{*table}, f.factors(), node_cap);
  } else {
    found = explore(GroupOps{G}, f.factors(), node_cap);
  }
  return Orbit(f, sort_rows(found.first, f.length()), found.second);
}

std::string OrbitSize::to_string() const {
  return capped ? ">= " + std::to_string(value) : std::to_string(value);
}

OrbitSize orbit_size(const Factorization& f, std::size_t node_cap) {
  Orbit o = orbit(f, node_cap);
  return {o.size(), o.capped()};
}

Membership same_orbit(const Factorization& a, const Factorization& b, std::size_t node_cap) {
  if (a.group() != b.group()) throw FactorizationMismatch("factorizations belong to different groups");
  if (a.length() != b.length()) throw FactorizationMismatch("factorizations have different lengths");
  Orbit o = orbit(a, node_cap);
  if (o.contains(b.factors())) return Membership::Yes;
  return o.capped() ? Membership::Unknown : Membership::No;
}

std::string export_orbit_graph(const Orbit& o, GraphFormat format, bool self_loops) {
  if (o.capped()) {
    throw std::invalid_argument("orbit is capped at " + std::to_string(o.size()) +
                                " members; rerun with a larger node cap");
  }
  struct Edge {
    std::size_t from, to, move;
  };
  std::vector<Edge> edges;
  const Group& G = *o.base().group();
  std::vector<ElementKey> x(o.length());
  for (std::size_t k = 0; k < o.size(); ++k) {
    for (std::size_t i = 0; i + 1 < o.length(); ++i) {
      auto m = o.member(k);
      std::copy(m.begin(), m.end(), x.begin());
      move_in_place(GroupOps{G}, x.data(), i, Direction::Forward);
      std::size_t to = *o.find(x);
      if (to == k && !self_loops) continue;
      edges.push_back({k, to, i + 1});
    }
  }

  auto label = [&](std::size_t k) { return o.member_factorization(k).to_string(); };
  if (format == GraphFormat::Dot) {
    std::ostringstream os;
    os << "digraph hurwitz_orbit {\n";
    for (std::size_t k = 0; k < o.size(); ++k) {
      std::string l = label(k);
      std::string escaped;
      for (char c : l) {
        if (c == '"' || c == '\\') escaped += '\\';
        escaped += c;
      }
      os << "  n" << k << " [label=\"" << escaped << "\"];\n";
    }
    for (const Edge& e : edges) {
      os << "  n" << e.from << " -> n" << e.to << " [label=\"s" << e.move << "\"];\n";
    }
    os << "}\n";
    return os.str();
  }

  nlohmann::ordered_json j;
  j["size"] = o.size();
  j["length"] = o.length();
  auto vs = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < o.size(); ++k) {
    auto m = o.member(k);
    vs.push_back({{"id", k}, {"factors", std::vector<ElementKey>(m.begin(), m.end())}, {"label", label(k)}});
  }
  j["vertices"] = vs;
  auto es = nlohmann::ordered_json::array();
  for (const Edge& e : edges) es.push_back({{"from", e.from}, {"to", e.to}, {"move", e.move}});
  j["edges"] = es;
  return j.dump();
}

}  // namespace hurwitz
