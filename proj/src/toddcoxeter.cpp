#include "hurwitz/toddcoxeter.hpp"

#include <algorithm>
#include <deque>

#include "json.hpp"

namespace hurwitz {

namespace {

constexpr std::int64_t kUndefined = -1;
constexpr std::size_t kTableLimit = 2048;  // tabulate products up to this order

struct CapReached {};

class CosetTable {
 public:
  CosetTable(const Presentation& p, std::size_t cap)
      : cols_(2 * p.generator_count()), cap_(cap), alloc_limit_(8 * cap + 1024) {
    for (const Word& r : p.relators) {
      std::vector<std::size_t> cols;
      for (const Letter& l : r.letters()) cols.push_back(CayleyRealization::column(l.generator, l.sign));
      relators_.push_back(std::move(cols));
    }
    new_coset();
  }

  void run() {
    for (std::size_t c = 0; c < forward_.size(); ++c) {
      if (!live(c)) continue;
      for (const auto& r : relators_) {
        scan_and_fill(c, r);
        if (!live(c)) break;
      }
      if (!live(c)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        if (at(c, x) == kUndefined) define(c, x);
      }
    }
  }

  std::size_t peak() const { return peak_; }

  // Renumber live cosets breadth-first from coset 0.
  std::vector<std::vector<ElementId>> standardized() const {
    std::vector<std::int64_t> renum(forward_.size(), kUndefined);
    std::vector<std::size_t> order;
    renum[0] = 0;
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t x = 0; x < cols_; ++x) {
        auto d = static_cast<std::size_t>(at(order[i], x));
        if (renum[d] == kUndefined) {
          renum[d] = static_cast<std::int64_t>(order.size());
          order.push_back(d);
        }
      }
    }
    std::vector<std::vector<ElementId>> actions(cols_, std::vector<ElementId>(order.size()));
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t x = 0; x < cols_; ++x) {
        actions[x][i] = static_cast<ElementId>(renum[static_cast<std::size_t>(at(order[i], x))]);
      }
    }
    return actions;
  }

 private:
  static std::size_t inv(std::size_t x) { return x ^ 1U; }
  bool live(std::size_t c) const { return forward_[c] == c; }
  std::int64_t& at(std::size_t c, std::size_t x) { return table_[c * cols_ + x]; }
  std::int64_t at(std::size_t c, std::size_t x) const { return table_[c * cols_ + x]; }

  std::size_t new_coset() {
    if (live_ >= cap_ || forward_.size() >= alloc_limit_) throw CapReached{};
    std::size_t n = forward_.size();
    forward_.push_back(n);
    table_.resize(table_.size() + cols_, kUndefined);
    ++live_;
    peak_ = std::max(peak_, live_);
    return n;
  }

  void define(std::size_t c, std::size_t x) {
    std::size_t d = new_coset();
    at(c, x) = static_cast<std::int64_t>(d);
    at(d, inv(x)) = static_cast<std::int64_t>(c);
  }

  std::size_t rep(std::size_t c) {
    std::size_t root = c;
    while (forward_[root] != root) root = forward_[root];
    while (forward_[c] != root) {
      std::size_t next = forward_[c];
      forward_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::size_t a, std::size_t b, std::deque<std::size_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    forward_[b] = a;
    --live_;
    queue.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      std::size_t dead = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < cols_; ++x) {
        std::int64_t target = at(dead, x);
        if (target == kUndefined) continue;
        auto d = static_cast<std::size_t>(target);
        at(d, inv(x)) = kUndefined;
        std::size_t mu = rep(dead), nu = rep(d);
        if (at(mu, x) != kUndefined) {
          merge(nu, static_cast<std::size_t>(at(mu, x)), queue);
        } else if (at(nu, inv(x)) != kUndefined) {
          merge(mu, static_cast<std::size_t>(at(nu, inv(x))), queue);
        } else {
          at(mu, x) = static_cast<std::int64_t>(nu);
          at(nu, inv(x)) = static_cast<std::int64_t>(mu);
        }
      }
    }
  }

  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    const std::size_t len = w.size();
    if (len == 0) return;
    std::size_t f = c, b = c;
    std::size_t i = 0, j = len;  // forward scan covers w[0..i), backward w[j..len)
    while (true) {
      while (i < len && at(f, w[i]) != kUndefined) f = static_cast<std::size_t>(at(f, w[i++]));
      if (i == len) {
        if (f != c) coincidence(f, c);
        return;
      }
      while (j > i && at(b, inv(w[j - 1])) != kUndefined) {
        b = static_cast<std::size_t>(at(b, inv(w[j - 1])));
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = static_cast<std::int64_t>(b);
        at(b, inv(w[i])) = static_cast<std::int64_t>(f);
        return;
      }
      define(f, w[i]);
    }
  }

  std::size_t cols_;
  std::size_t cap_;
  std::size_t alloc_limit_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::size_t> forward_;
  std::vector<std::int64_t> table_;
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
};

}  // namespace

CayleyRealization::CayleyRealization(Presentation origin, std::vector<std::vector<ElementId>> actions)
    : origin_(std::move(origin)), order_(0), actions_(std::move(actions)) {
  const std::size_t cols = 2 * origin_.generator_count();
  if (actions_.size() != cols) throw std::invalid_argument("one action table per generator and sign");
  order_ = cols ? actions_[0].size() : 1;
  if (order_ == 0) throw std::invalid_argument("empty realization");
  for (std::size_t x = 0; x < cols; ++x) {
    const auto& col = actions_[x];
    const auto& back = actions_[x ^ 1U];
    if (col.size() != order_) throw std::invalid_argument("action tables have different sizes");
    std::vector<bool> seen(order_, false);
    for (ElementId e = 0; e < order_; ++e) {
      if (col[e] >= order_ || seen[col[e]]) throw std::invalid_argument("action is not a permutation");
      seen[col[e]] = true;
      if (back.size() != order_ || back[col[e]] != e) {
        throw std::invalid_argument("inverse generator action does not undo the generator");
      }
    }
  }

  tree_parent_.assign(order_, 0);
  tree_column_.assign(order_, 0);
  std::vector<bool> reached(order_, false);
  std::vector<ElementId> queue{0};
  reached[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t x = 0; x < cols; ++x) {
      ElementId d = actions_[x][queue[i]];
      if (!reached[d]) {
        reached[d] = true;
        tree_parent_[d] = queue[i];
        tree_column_[d] = static_cast<std::uint32_t>(x);
        queue.push_back(d);
      }
    }
  }
  if (queue.size() != order_) throw std::invalid_argument("action is not transitive");

  for (const Word& r : origin_.relators) {
    for (ElementId e = 0; e < order_; ++e) {
      if (act(e, r) != e) throw std::invalid_argument("relator " + r.to_string() + " acts nontrivially");
    }
  }

  inverse_.resize(order_);
  for (ElementId g = 0; g < order_; ++g) inverse_[g] = evaluate(invert(representative(g)));

  if (order_ <= kTableLimit) {
    table_.resize(order_ * order_);
    for (ElementId h = 0; h < order_; ++h) {
      Word w = representative(h);
      for (ElementId g = 0; g < order_; ++g) table_[g * order_ + h] = act(g, w);
    }
    // The right translations by representatives must be closed under the
    // generators, otherwise this is a coset action of a nontrivial subgroup.
    for (ElementId h = 0; h < order_; ++h) {
      for (std::size_t x = 0; x < cols; ++x) {
        ElementId hx = actions_[x][h];
        for (ElementId g = 0; g < order_; ++g) {
          if (actions_[x][table_[g * order_ + h]] != table_[g * order_ + hx]) {
            throw std::invalid_argument("action is not the regular representation");
          }
        }
      }
    }
  }
}

ElementId CayleyRealization::act(ElementId g, const Word& w) const {
  check(g);
  if (!Word::same_alphabet(w.alphabet(), origin_.alphabet)) {
    throw IncompatibleAlphabet("word is not over this group's generators");
  }
  for (const Letter& l : w.letters()) g = actions_[column(l.generator, l.sign)][g];
  return g;
}

ElementId CayleyRealization::multiply(ElementId g, ElementId h) const {
  check(g);
  check(h);
  if (!table_.empty()) return table_[g * order_ + h];
  return act(g, representative(h));
}

ElementId CayleyRealization::inverse(ElementId g) const {
  check(g);
  return inverse_[g];
}

Word CayleyRealization::representative(ElementId g) const {
  check(g);
  std::vector<Letter> rev;
  while (g != 0) {
    std::uint32_t c = tree_column_[g];
    rev.push_back({c / 2, static_cast<std::int8_t>(c % 2 ? -1 : 1)});
    g = tree_parent_[g];
  }
  return Word::reduce(origin_.alphabet, std::vector<Letter>(rev.rbegin(), rev.rend()));
}

std::string CayleyRealization::to_json() const {
  nlohmann::ordered_json j;
  j["order"] = order_;
  j["generators"] = origin_.generators();
  auto rels = nlohmann::ordered_json::array();
  for (const Word& r : origin_.relators) rels.push_back(render_relator(r));
  j["relators"] = rels;
  nlohmann::ordered_json acts = nlohmann::ordered_json::object();
  for (std::uint32_t g = 0; g < generator_count(); ++g) {
    acts[origin_.generators()[g]] = actions_[column(g, 1)];
    acts[origin_.generators()[g] + "^-1"] = actions_[column(g, -1)];
  }
  j["actions"] = acts;
  return j.dump();
}

CayleyRealization CayleyRealization::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad realization JSON: ") + e.what());
  }
  try {
    auto names = j.at("generators").get<std::vector<std::string>>();
    auto alphabet = make_alphabet(names);
    Presentation p{alphabet, {}};
    for (const auto& r : j.at("relators")) {
      Word w = parse_word(alphabet, r.get<std::string>());
      if (!w.empty()) p.relators.push_back(std::move(w));
    }
    std::vector<std::vector<ElementId>> actions;
    for (const auto& n : names) {
      actions.push_back(j.at("actions").at(n).get<std::vector<ElementId>>());
      actions.push_back(j.at("actions").at(n + "^-1").get<std::vector<ElementId>>());
    }
    CayleyRealization r(std::move(p), std::move(actions));
    if (r.order() != j.at("order").get<std::size_t>()) throw std::invalid_argument("order mismatch");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad realization JSON: ") + e.what());
  }
}

Enumeration enumerate(const Presentation& p, std::size_t coset_cap) {
  if (coset_cap == 0) throw std::invalid_argument("coset cap must be >= 1");
  CosetTable table(p, coset_cap);
  try {
    table.run();
  } catch (const CapReached&) {
    return {std::nullopt, table.peak()};
  }
  return {CayleyRealization(p, table.standardized()), table.peak()};
}

CayleyRealization realize(const Presentation& p, std::size_t coset_cap) {
  Enumeration e = enumerate(p, coset_cap);
  if (!e.realization) {
    throw CosetCapExceeded("coset enumeration exceeded " + std::to_string(coset_cap) + " live cosets");
  }
  return std::move(*e.realization);
}

}  // namespace hurwitz
