#include <set>

#include "doctest.h"
#include "json.hpp"
#include "hurwitz/groups.hpp"
#include "hurwitz/toddcoxeter.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {

Word word(const Presentation& p, const char* text) { return parse_word(p.alphabet, text); }

}  // namespace

TEST_CASE("cyclic group") {
  auto r = realize(parse_presentation("<a | a^5>"));
  CHECK(r.order() == 5);
  CHECK(realize(parse_presentation("<a | 1 = 1, a^1>")).order() == 1);
}

TEST_CASE("trivial presentations") {
  CHECK(realize(parse_presentation("<a, b | a, b>")).order() == 1);
  CHECK(realize(parse_presentation("<a, b | a^2, b^3, a b>")).order() == 1);
}

TEST_CASE("infinite presentations hit the cap") {
  auto e = enumerate(parse_presentation("<a, b | a^2>"), 1000);
  CHECK(e.capped());
  CHECK(e.peak_live_cosets <= 1000);
  CHECK_THROWS_AS(realize(parse_presentation("<a | a a a a^-1 a^-1 a^-1>"), 500), CosetCapExceeded);
}

TEST_CASE("orders of the dihedral, quaternion and reflection groups") {
  CHECK(realize(dihedral_rs(6)).order() == 12);
  CHECK(realize(q8_ab()).order() == 8);
  CHECK(realize(q8_ijk()).order() == 8);
  CHECK(realize(g4()).order() == 24);
  CHECK(realize(g6()).order() == 48);
}

TEST_CASE("G4 and G6 orders agree with the matrix closure") {
  CHECK(oracle::closure_size(oracle::g4_reflections()) == realize(g4()).order());
  CHECK(oracle::closure_size(oracle::g6_reflections()) == realize(g6()).order());
}

TEST_CASE("dihedral presentations match explicit permutation groups") {
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    auto p = dihedral_rs(n);
    auto r = realize(p);
    auto perms = oracle::perm_closure({oracle::rotation(n), oracle::reflection(n)});
    CHECK(r.order() == perms.size());
    CHECK(r.order() == static_cast<std::size_t>(2 * n));
    CHECK(oracle::matches_dihedral_permutations(r, n));
  }
}

TEST_CASE("multiply and inverse") {
  auto p = q8_ab();
  auto r = realize(p);
  CHECK(r.multiply(r.identity(), 3) == 3);
  CHECK(r.multiply(r.evaluate(word(p, "a")), r.evaluate(word(p, "a"))) == r.evaluate(word(p, "b^2")));
  for (ElementId g = 0; g < r.order(); ++g) {
    CHECK(r.multiply(g, r.inverse(g)) == r.identity());
    CHECK(r.inverse(r.inverse(g)) == g);
  }
  CHECK(r.inverse(r.identity()) == r.identity());
  auto d = dihedral_rs(4);
  auto rd = realize(d);
  CHECK(rd.inverse(rd.evaluate(word(d, "r"))) == rd.evaluate(word(d, "r^3")));
  CHECK_THROWS_AS(r.multiply(0, 8), std::out_of_range);
}

TEST_CASE("evaluation") {
  auto p = g6();
  auto r = realize(p);
  CHECK(r.evaluate(Word(p.alphabet)) == r.identity());
  CHECK(r.evaluate(word(p, "a b a b a b")) == r.evaluate(word(p, "b a b a b a")));
  for (const auto& rel : p.relators) CHECK(r.evaluate(rel) == r.identity());
  for (ElementId g = 0; g < r.order(); ++g) CHECK(r.evaluate(r.representative(g)) == g);
  CHECK_THROWS_AS(r.evaluate(parse_word(make_alphabet({"x"}), "x")), IncompatibleAlphabet);
}

TEST_CASE("latin square and faithful regular representation") {
  for (auto name : {"dihedral-rs:7", "q8-ijk", "g4", "g6"}) {
    auto r = realize(builtin_from_string(name));
    const auto n = r.order();
    std::set<std::vector<ElementId>> rows;
    for (ElementId g = 0; g < n; ++g) {
      std::vector<ElementId> row(n), col(n);
      for (ElementId h = 0; h < n; ++h) {
        row[h] = r.multiply(g, h);
        col[h] = r.multiply(h, g);
      }
      CHECK(std::set<ElementId>(row.begin(), row.end()).size() == n);
      CHECK(std::set<ElementId>(col.begin(), col.end()).size() == n);
      rows.insert(row);
    }
    CHECK(rows.size() == n);
  }
}

TEST_CASE("element ids are deterministic") {
  auto a = realize(g6());
  auto b = realize(g6());
  CHECK(a.to_json() == b.to_json());
}

TEST_CASE("json round trip is exact") {
  for (auto name : {"dihedral-rs:5", "q8-ijk", "g6"}) {
    auto r = realize(builtin_from_string(name));
    auto text = r.to_json();
    auto back = CayleyRealization::from_json(text);
    CHECK(back.order() == r.order());
    CHECK(back.origin() == r.origin());
    CHECK(back.to_json() == text);
  }
}

TEST_CASE("json import rejects inconsistent tables") {
  auto text = realize(parse_presentation("<a | a^3>")).to_json();
  auto j = nlohmann::json::parse(text);
  auto broken = j;
  broken["order"] = 4;
  CHECK_THROWS(CayleyRealization::from_json(broken.dump()));
  broken = j;
  broken["relators"] = nlohmann::json::array({"a^2"});
  CHECK_THROWS(CayleyRealization::from_json(broken.dump()));
  CHECK_THROWS(CayleyRealization::from_json("{not json"));
}
