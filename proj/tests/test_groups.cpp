#include <set>

#include "doctest.h"
#include "hurwitz/groups.hpp"
#include "hurwitz/toddcoxeter.hpp"

using namespace hurwitz;

namespace {

using Counts = std::map<std::size_t, std::size_t>;

}  // namespace

TEST_CASE("symmetric group orders") {
  CHECK(symmetric_group(1)->order() == 1);
  CHECK(symmetric_group(3)->order() == 6);
  CHECK(symmetric_group(4)->order() == 24);
  CHECK(symmetric_group(5)->order() == 120);
  CHECK_THROWS(symmetric_group(0));
}

TEST_CASE("lehmer ranks") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::uint64_t> ranks;
    auto G = symmetric_group(static_cast<int>(n));
    const auto* S = dynamic_cast<const PermutationGroup*>(G.get());
    REQUIRE(S);
    for (ElementKey g = 0; g < G->order(); ++g) {
      const auto& p = S->element(g);
      CHECK(lehmer_rank(p) == g);
      CHECK(lehmer_unrank(g, n) == p);
      ranks.insert(lehmer_rank(p));
    }
    CHECK(ranks.size() == G->order());
  }
}

TEST_CASE("cycle notation") {
  auto G = symmetric_group(3);
  CHECK(G->label(G->parse_element("(1 2)")) == "(1 2)");
  CHECK(G->parse_element("()") == G->identity());
  CHECK(G->parse_element("1") == G->identity());
  CHECK(G->label(G->parse_element("(1 2)(2 3)")) == "(1 3 2)");
  CHECK(G->label(G->identity()) == "()");
  CHECK_THROWS(G->parse_element("(1 4)"));
  CHECK_THROWS(G->parse_element("(1 1)"));
  CHECK_THROWS(G->parse_element("(1 2"));
}

TEST_CASE("composition applies the left factor first") {
  auto G = symmetric_group(3);
  auto a = G->parse_element("(1 2)");
  auto b = G->parse_element("(2 3)");
  // 1 -> 2 -> 3, 3 -> 3 -> 2, 2 -> 1 -> 1
  CHECK(G->label(G->multiply(a, b)) == "(1 3 2)");
}

TEST_CASE("conjugation") {
  auto G = symmetric_group(3);
  auto t12 = G->parse_element("(1 2)");
  auto t23 = G->parse_element("(2 3)");
  CHECK(conjugate(*G, t12, G->identity()) == t12);
  CHECK(G->label(conjugate(*G, t12, t23)) == "(1 3)");
  for (ElementKey g = 0; g < G->order(); ++g)
    for (ElementKey y = 0; y < G->order(); ++y) CHECK(conjugate(*G, conjugate(*G, g, y), G->inverse(y)) == g);
}

TEST_CASE("element orders") {
  auto G = symmetric_group(4);
  CHECK(element_order(*G, G->identity()) == 1);
  CHECK(element_order_counts(*G) == Counts{{1, 1}, {2, 9}, {3, 8}, {4, 6}});

  auto p = dihedral_inv(7);
  auto D = cayley_group(realize(p));
  CHECK(element_order(*D, D->parse_element("a")) == 2);

  auto g6g = cayley_group(realize(g6()));
  CHECK(element_order(*g6g, g6g->parse_element("a")) == 3);
  CHECK(element_order(*g6g, g6g->parse_element("b")) == 2);
}

TEST_CASE("power") {
  auto G = symmetric_group(4);
  auto c = G->parse_element("(1 2 3 4)");
  CHECK(power(*G, c, 4) == G->identity());
  CHECK(power(*G, c, -1) == G->inverse(c));
  CHECK(power(*G, c, 0) == G->identity());
  CHECK(power(*G, c, 6) == power(*G, c, 2));
}

TEST_CASE("group axioms") {
  CHECK(satisfies_group_axioms(*symmetric_group(4)));
  CHECK(satisfies_group_axioms(*dihedral_group(6)));
  CHECK(satisfies_group_axioms(*quaternion_group()));
  CHECK(satisfies_group_axioms(*cayley_group(realize(g6()))));
  CHECK_THROWS(satisfies_group_axioms(*symmetric_group(6)));
}

TEST_CASE("quaternion table") {
  auto Q = quaternion_group();
  auto i = Q->parse_element("i"), j = Q->parse_element("j"), k = Q->parse_element("k");
  auto m1 = Q->parse_element("-1");
  CHECK(Q->multiply(i, j) == k);
  CHECK(Q->multiply(j, i) == Q->parse_element("-k"));
  CHECK(Q->multiply(i, i) == m1);
  CHECK(Q->multiply(Q->multiply(i, j), k) == m1);
  CHECK(element_order_counts(*Q) == Counts{{1, 1}, {2, 1}, {4, 6}});
}

TEST_CASE("quaternion presentations agree with the explicit table") {
  auto Q = quaternion_group();
  for (auto name : {"q8-ab", "q8-ijk"}) {
    auto G = cayley_group(realize(builtin_from_string(name)));
    CHECK(G->order() == 8);
    CHECK(element_order_counts(*G) == element_order_counts(*Q));
  }
  auto ab = cayley_group(realize(q8_ab()));
  std::vector<ElementKey> ga = ab->generators(), gq = {Q->parse_element("i"), Q->parse_element("j")};
  CHECK(extend_to_isomorphism(*ab, ga, *Q, gq).has_value());

  auto ijk = cayley_group(realize(q8_ijk()));
  std::vector<ElementKey> gi = ijk->generators();
  std::vector<ElementKey> gq4 = {Q->parse_element("-1"), Q->parse_element("i"), Q->parse_element("j"),
                                 Q->parse_element("k")};
  CHECK(extend_to_isomorphism(*ijk, gi, *Q, gq4).has_value());
}

TEST_CASE("dihedral backends are isomorphic to the presentations") {
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    auto D = dihedral_group(n);
    auto rs = cayley_group(realize(dihedral_rs(n)));
    auto inv = cayley_group(realize(dihedral_inv(n)));
    CHECK(rs->order() == static_cast<std::size_t>(2 * n));
    CHECK(inv->order() == static_cast<std::size_t>(2 * n));
    std::vector<ElementKey> grs = rs->generators(), gd = D->generators();
    CHECK(extend_to_isomorphism(*rs, grs, *D, gd).has_value());
    CHECK(element_order_counts(*rs) == element_order_counts(*inv));
  }
}

TEST_CASE("isomorphism extension rejects a non-homomorphism") {
  auto D = dihedral_group(4);
  auto S = symmetric_group(4);
  std::vector<ElementKey> gd = D->generators();
  std::vector<ElementKey> gs = {S->parse_element("(1 2 3 4)"), S->parse_element("(1 2)")};
  CHECK_FALSE(extend_to_isomorphism(*D, gd, *S, gs).has_value());
  std::vector<ElementKey> good = {S->parse_element("(1 2 3 4)"), S->parse_element("(1 3)")};
  CHECK_FALSE(extend_to_isomorphism(*D, gd, *S, good).has_value());  // not onto S4
}

TEST_CASE("S3 directly and by coset enumeration") {
  auto S = symmetric_group(3);
  auto C = cayley_group(realize(parse_presentation("<a, b | a^2, b^2, a b a b a b>")));
  CHECK(S->order() == C->order());
  CHECK(element_order_counts(*S) == element_order_counts(*C));
  std::vector<ElementKey> gc = C->generators();
  std::vector<ElementKey> gs = {S->parse_element("(1 2)"), S->parse_element("(2 3)")};
  CHECK(extend_to_isomorphism(*C, gc, *S, gs).has_value());
}

TEST_CASE("keys are injective") {
  auto G = symmetric_group(5);
  const auto* P = dynamic_cast<const PermutationGroup*>(G.get());
  std::set<Permutation> seen;
  for (ElementKey g = 0; g < G->order(); ++g) seen.insert(P->element(g));
  CHECK(seen.size() == G->order());
  auto sub = std::make_shared<PermutationGroup>(
      4, std::vector<Permutation>{parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)});
  CHECK(sub->order() == 4);
  for (ElementKey g = 0; g < sub->order(); ++g) CHECK(sub->key_of(sub->element(g)) == g);
}

TEST_CASE("multiplication table") {
  auto G = cayley_group(realize(g4()));
  auto T = MultiplicationTable::build(*G);
  REQUIRE(T);
  for (ElementKey g = 0; g < G->order(); ++g) {
    CHECK(T->inverse(g) == G->inverse(g));
    for (ElementKey h = 0; h < G->order(); ++h) CHECK(T->multiply(g, h) == G->multiply(g, h));
  }
  CHECK_FALSE(MultiplicationTable::build(*G, 10).has_value());
}
