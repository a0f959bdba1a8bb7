#pragma once

// Backend-agnostic finite groups. Every element is addressed by a dense key
// in [0, order()), with key 0 the identity.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/toddcoxeter.hpp"

namespace hurwitz {

using ElementKey = std::uint32_t;

class Group {
 public:
  virtual ~Group() = default;

  virtual std::string name() const = 0;
  virtual std::size_t order() const = 0;
  ElementKey identity() const { return 0; }
  virtual ElementKey multiply(ElementKey g, ElementKey h) const = 0;
  virtual ElementKey inverse(ElementKey g) const = 0;

  /// Human-readable form of an element (word, cycle notation, ...).
  virtual std::string label(ElementKey g) const = 0;

  /// Named generators; `parse_element` accepts words over these names.
  virtual std::vector<std::string> generator_names() const = 0;
  virtual std::vector<ElementKey> generators() const = 0;

  /// Parses an element literal. The default accepts words in the generator
  /// names (`a b^-1`); permutation groups also accept cycle notation.
  virtual ElementKey parse_element(std::string_view text) const;

 protected:
  void check(ElementKey g) const;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Wraps a coset-enumerated realization; keys are its element ids.
class CayleyGroup final : public Group {
 public:
  explicit CayleyGroup(CayleyRealization realization, std::string name = "");

  std::string name() const override { return name_; }
  std::size_t order() const override { return realization_.order(); }
  ElementKey multiply(ElementKey g, ElementKey h) const override { return realization_.multiply(g, h); }
  ElementKey inverse(ElementKey g) const override { return realization_.inverse(g); }
  std::string label(ElementKey g) const override { return realization_.representative(g).to_string(); }
  std::vector<std::string> generator_names() const override { return realization_.origin().generators(); }
  std::vector<ElementKey> generators() const override;
  ElementKey parse_element(std::string_view text) const override;

  const CayleyRealization& realization() const { return realization_; }
  ElementKey evaluate(const Word& w) const { return realization_.evaluate(w); }

 private:
  CayleyRealization realization_;
  std::string name_;
};

/// A permutation of {0, .., n-1}; image[i] is where i goes.
using Permutation = std::vector<std::uint8_t>;

/// Lehmer-code rank of a permutation in [0, n!).
std::uint64_t lehmer_rank(std::span<const std::uint8_t> perm);
Permutation lehmer_unrank(std::uint64_t rank, std::size_t degree);

/// Parses cycle notation on points 1..degree, e.g. `(1 2)(2 3)` or `()`.
/// Cycles compose left to right.
Permutation parse_cycles(std::string_view text, std::size_t degree);
std::string format_cycles(std::span<const std::uint8_t> perm);

/// Closure of a set of permutations of degree <= 9, computed eagerly.
/// Products apply the left factor first: (p q)(i) = q(p(i)).
/// Keys are positions in the Lehmer-rank order of the elements, so for the
/// full symmetric group the key is the Lehmer rank itself.
class PermutationGroup final : public Group {
 public:
  static constexpr std::size_t kMaxDegree = 9;

  PermutationGroup(std::size_t degree, std::vector<Permutation> generators, std::string name = "");

  std::string name() const override { return name_; }
  std::size_t order() const override { return elements_.size(); }
  ElementKey multiply(ElementKey g, ElementKey h) const override;
  ElementKey inverse(ElementKey g) const override;
  std::string label(ElementKey g) const override { return format_cycles(element(g)); }
  std::vector<std::string> generator_names() const override;
  std::vector<ElementKey> generators() const override { return generator_keys_; }
  ElementKey parse_element(std::string_view text) const override;

  std::size_t degree() const { return degree_; }
  const Permutation& element(ElementKey g) const;
  /// Key of a permutation; throws std::invalid_argument if not in the group.
  ElementKey key_of(std::span<const std::uint8_t> perm) const;

 private:
  std::size_t degree_;
  std::string name_;
  std::vector<Permutation> elements_;
  std::vector<std::int32_t> key_by_rank_;
  std::vector<ElementKey> generator_keys_;
  std::vector<ElementKey> inverse_;
  std::vector<ElementKey> table_;
};

/// D_{2n} as r^k s^e, keyed k + n e.
class DihedralGroup final : public Group {
 public:
  explicit DihedralGroup(std::size_t n);

  std::string name() const override { return "D" + std::to_string(2 * n_); }
  std::size_t order() const override { return 2 * n_; }
  ElementKey multiply(ElementKey g, ElementKey h) const override;
  ElementKey inverse(ElementKey g) const override;
  std::string label(ElementKey g) const override;
  std::vector<std::string> generator_names() const override { return {"r", "s"}; }
  std::vector<ElementKey> generators() const override;

 private:
  std::size_t n_;
};

/// Q8 = {±1, ±i, ±j, ±k} with the Hamilton rules.
class QuaternionGroup final : public Group {
 public:
  QuaternionGroup();

  std::string name() const override { return "Q8"; }
  std::size_t order() const override { return 8; }
  ElementKey multiply(ElementKey g, ElementKey h) const override;
  ElementKey inverse(ElementKey g) const override;
  std::string label(ElementKey g) const override;
  std::vector<std::string> generator_names() const override { return {"i", "j"}; }
  std::vector<ElementKey> generators() const override { return {2, 4}; }
  ElementKey parse_element(std::string_view text) const override;

 private:
  ElementKey table_[8][8];
};

GroupPtr cayley_group(CayleyRealization realization, std::string name = "");
/// S_n for 1 <= n <= 8.
GroupPtr symmetric_group(int n);
GroupPtr dihedral_group(int n);
GroupPtr quaternion_group();

/// y^-1 g y
ElementKey conjugate(const Group& G, ElementKey g, ElementKey y);
ElementKey power(const Group& G, ElementKey g, long k);
/// Least k >= 1 with g^k = 1.
std::size_t element_order(const Group& G, ElementKey g);
/// order -> number of elements of that order
std::map<std::size_t, std::size_t> element_order_counts(const Group& G);

/// Exhaustive check of associativity, identity and inverses. Only groups of
/// order <= 200 are checked; larger ones throw std::invalid_argument.
bool satisfies_group_axioms(const Group& G);

/// Extends gens_a[i] -> gens_b[i] to a map on all of `a` and returns it when
/// it is a well-defined bijective homomorphism onto `b`.
std::optional<std::vector<ElementKey>> extend_to_isomorphism(const Group& a,
                                                             std::span<const ElementKey> gens_a,
                                                             const Group& b,
                                                             std::span<const ElementKey> gens_b);

/// Dense multiplication and inverse tables copied out of any group.
class MultiplicationTable {
 public:
  static std::optional<MultiplicationTable> build(const Group& G, std::size_t max_order = 4096);

  std::size_t order() const { return order_; }
  ElementKey multiply(ElementKey g, ElementKey h) const { return products_[g * order_ + h]; }
  ElementKey inverse(ElementKey g) const { return inverses_[g]; }
  ElementKey conjugate(ElementKey g, ElementKey y) const {
    return multiply(multiply(inverses_[y], g), y);
  }

 private:
  std::size_t order_ = 0;
  std::vector<ElementKey> products_;
  std::vector<ElementKey> inverses_;
};

}  // namespace hurwitz
