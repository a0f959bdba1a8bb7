#include "hurwitz/suites.hpp"

#include <random>
#include <sstream>

namespace hurwitz {

namespace {

const std::vector<std::pair<Theorem, std::string>>& theorem_names() {
  static const std::vector<std::pair<Theorem, std::string>> names = {
      {Theorem::PairSwap, "pair-swap"},
      {Theorem::PairInverse, "pair-inverse"},
      {Theorem::Cycle, "cycle"},
      {Theorem::FlipInverse, "flip-inverse"},
      {Theorem::Conjugate, "conjugate"},
      {Theorem::InvolutionReverse, "involution-reverse"},
      {Theorem::DoubleReverse, "double-reverse"},
      {Theorem::ClosedForm, "closed-form"},
      {Theorem::MirrorMoves, "mirror-moves"},
  };
  return names;
}

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Word random_reduced_word(Rng& rng, const AlphabetPtr& a, std::size_t length) {
  std::vector<Letter> ls;
  while (ls.size() < length) {
    Letter l{static_cast<std::uint32_t>(uniform(rng, 0, a->size() - 1)),
             static_cast<std::int8_t>(uniform(rng, 0, 1) ? 1 : -1)};
    if (!ls.empty() && ls.back().cancels(l)) continue;
    ls.push_back(l);
  }
  return Word::reduce(a, ls);
}

WordTuple random_word_tuple(Rng& rng, const AlphabetPtr& a, std::size_t max_len, std::size_t max_word) {
  std::vector<Word> ws;
  std::size_t len = uniform(rng, std::min<std::size_t>(2, max_len), max_len);
  for (std::size_t k = 0; k < len; ++k) ws.push_back(random_reduced_word(rng, a, uniform(rng, 1, max_word)));
  return WordTuple(a, std::move(ws));
}

void record_failure(SuiteResult& r, std::string what) {
  ++r.failed;
  if (r.failures.size() < 5) r.failures.push_back(std::move(what));
}

void tally(SuiteResult& r, const EqualityReport& rep, const std::string& group) {
  ++r.checked;
  switch (rep.verdict) {
    case Verdict::Equal: ++r.passed; break;
    case Verdict::Inconclusive: ++r.inconclusive; break;
    case Verdict::Unequal:
      record_failure(r, group + ": " + rep.input.to_string() + " has orbit size " + rep.size_left.to_string() +
                            " but " + rep.transform + " gives " + rep.output.to_string() + " with " +
                            rep.size_right.to_string());
      break;
  }
}

Factorization random_factorization(Rng& rng, const GroupPtr& G, std::size_t len,
                                   const std::vector<ElementKey>* pool = nullptr) {
  std::vector<ElementKey> xs;
  for (std::size_t k = 0; k < len; ++k) {
    if (pool) {
      xs.push_back((*pool)[uniform(rng, 0, pool->size() - 1)]);
    } else {
      xs.push_back(static_cast<ElementKey>(uniform(rng, 0, G->order() - 1)));
    }
  }
  return Factorization(G, std::move(xs));
}

void run_orbit_suite(Theorem t, const SuiteOptions& o, SuiteResult& r) {
  const auto& groups = standard_groups();
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& [name, G] = groups[gi];
    Rng rng(o.seed * 0x100000001b3ULL + static_cast<std::uint64_t>(t) * 1000 + gi);
    std::vector<ElementKey> involutions;
    for (ElementKey g = 0; g < G->order(); ++g) {
      if (G->multiply(g, g) == G->identity()) involutions.push_back(g);
    }
    for (std::size_t s = 0; s < o.samples; ++s) {
      const bool pair = t == Theorem::PairSwap || t == Theorem::PairInverse;
      std::size_t len = pair ? 2 : uniform(rng, o.min_length, o.max_length);
      Factorization f = random_factorization(rng, G, len, t == Theorem::InvolutionReverse ? &involutions : nullptr);
      Transform tr = Transform::cycle();
      switch (t) {
        case Theorem::PairSwap: tr = Transform::reverse_tuple(); break;
        case Theorem::PairInverse: tr = Transform::invert_each(); break;
        case Theorem::Cycle: tr = Transform::cycle(); break;
        case Theorem::FlipInverse: tr = Transform::flip_inverse(); break;
        case Theorem::Conjugate:
          tr = Transform::conjugate_all(static_cast<ElementKey>(uniform(rng, 0, G->order() - 1)));
          break;
        case Theorem::InvolutionReverse: tr = Transform::reverse_tuple(); break;
        default: break;
      }
      tally(r, check_equality(f, tr, o.node_cap), name);
    }
  }
}

void run_closed_form(const SuiteOptions& o, SuiteResult& r) {
  const auto& groups = standard_groups();
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& [name, G] = groups[gi];
    Rng rng(o.seed * 0x100000001b3ULL + 7777 + gi);
    for (std::size_t s = 0; s < o.samples; ++s) {
      Factorization f = random_factorization(rng, G, 2);
      ++r.checked;
      bool good = true;
      for (Direction d : {Direction::Forward, Direction::Inverse}) {
        Factorization cur = f;
        for (long step = 0; step <= o.range && good; ++step) {
          long m = d == Direction::Forward ? step : -step;
          auto [left, right] = closed_form_pair(*G, f[0], f[1], m);
          if (left != cur[0] || right != cur[1]) {
            good = false;
            record_failure(r, name + ": closed form disagrees with iterated moves for " + f.to_string() +
                                  " at m = " + std::to_string(m));
          }
          cur = hurwitz_move(cur, 1, d);
        }
      }
      if (good) ++r.passed;
    }
  }
}

struct RealizedPresentation {
  std::string name;
  Presentation presentation;
  GroupPtr group;
  Reversibility status;
};

std::optional<RealizedPresentation> realize_named(const std::string& name, const SuiteOptions& o,
                                                  SuiteResult& r) {
  Presentation p = builtin_from_string(name);
  Enumeration e = enumerate(p, o.coset_cap);
  if (!e.realization) {
    r.refused = true;
    r.refusal = name + ": coset enumeration capped";
    return std::nullopt;
  }
  Reversibility status = check_reversible(p, *e.realization).status;
  return RealizedPresentation{name, p, cayley_group(std::move(*e.realization), name), status};
}

std::vector<std::string> word_presentations(const SuiteOptions& o) {
  if (!o.presentations.empty()) return o.presentations;
  return {"dihedral-rs:5", "g6"};
}

void run_double_reverse(const SuiteOptions& o, SuiteResult& r) {
  std::vector<RealizedPresentation> targets;
  for (const auto& name : word_presentations(o)) {
    auto rp = realize_named(name, o, r);
    if (!rp) return;
    if (rp->status != Reversibility::Reversible) {
      r.refused = true;
      r.refusal = name + ": presentation does not have reversible relations";
      return;
    }
    targets.push_back(std::move(*rp));
  }
  for (std::size_t ti = 0; ti < targets.size(); ++ti) {
    const auto& t = targets[ti];
    Rng rng(o.seed * 0x100000001b3ULL + 4242 + ti);
    for (std::size_t s = 0; s < o.samples; ++s) {
      WordTuple u = random_word_tuple(rng, t.presentation.alphabet, 3, o.max_word_length);
      Factorization f = evaluate(t.group, u);
      tally(r, check_equality(f, Transform::double_reverse(u, t.status), o.node_cap), t.name);
    }
  }
}

void run_mirror_moves(const SuiteOptions& o, SuiteResult& r) {
  for (std::size_t ti = 0; const auto& name : word_presentations(o)) {
    auto rp = realize_named(name, o, r);
    if (!rp) return;
    const auto* cg = dynamic_cast<const CayleyGroup*>(rp->group.get());
    Rng rng(o.seed * 0x100000001b3ULL + 9191 + ti++);
    for (std::size_t s = 0; s < o.samples; ++s) {
      WordTuple u = random_word_tuple(rng, rp->presentation.alphabet, 3, o.max_word_length);
      std::vector<Move> moves;
      std::size_t n = uniform(rng, 0, o.max_braid_length);
      for (std::size_t k = 0; k < n; ++k) moves.push_back({uniform(rng, 1, u.length() - 1), Direction::Forward});
      WordTuple un = apply_braid(u, moves);
      WordTuple vn = apply_braid(double_reverse(u), mirrored_moves(moves, u.length()));
      ++r.checked;
      if (are_double_reverses(un, vn) && are_double_reverses_in(*cg, un, vn)) {
        ++r.passed;
      } else {
        record_failure(r, name + ": " + u.to_string() + " after " + std::to_string(n) +
                              " moves is not mirrored by its double reverse");
      }
    }
  }
}

}  // namespace

std::optional<Theorem> theorem_from_string(std::string_view name) {
  for (const auto& [t, n] : theorem_names()) {
    if (n == name) return t;
  }
  return std::nullopt;
}

std::string to_string(Theorem t) {
  for (const auto& [th, n] : theorem_names()) {
    if (th == t) return n;
  }
  return "?";
}

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> all = [] {
    std::vector<Theorem> v;
    for (const auto& [t, n] : theorem_names()) v.push_back(t);
    return v;
  }();
  return all;
}

const std::vector<NamedGroup>& standard_groups() {
  static const std::vector<NamedGroup> groups = {
      {"S4", symmetric_group(4)},
      {"dihedral-rs:6", cayley_group(realize(dihedral_rs(6)), "dihedral-rs:6")},
      {"q8-ab", cayley_group(realize(q8_ab()), "q8-ab")},
      {"g4", cayley_group(realize(g4()), "g4")},
      {"g6", cayley_group(realize(g6()), "g6")},
  };
  return groups;
}

std::string SuiteResult::summary() const {
  std::ostringstream os;
  os << to_string(theorem) << ": ";
  if (refused) {
    os << "refused (" << refusal << ")";
    return os.str();
  }
  os << (failed == 0 ? "pass" : "FAIL") << " (" << checked << " checked, " << passed << " passed, " << failed
     << " failed, " << inconclusive << " inconclusive)";
  return os.str();
}

SuiteResult run_suite(Theorem t, const SuiteOptions& options) {
  SuiteResult r;
  r.theorem = t;
  switch (t) {
    case Theorem::ClosedForm: run_closed_form(options, r); break;
    case Theorem::DoubleReverse: run_double_reverse(options, r); break;
    case Theorem::MirrorMoves: run_mirror_moves(options, r); break;
    default: run_orbit_suite(t, options, r); break;
  }
  return r;
}

}  // namespace hurwitz
