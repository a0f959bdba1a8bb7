#pragma once

// Coset enumeration over the trivial subgroup: turns a finite presentation
// into the regular permutation representation of the group it defines.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/presentations.hpp"

namespace hurwitz {

using ElementId = std::uint32_t;

/// A finite group given by right-multiplication tables of its generators.
///
/// Element 0 is the identity. Elements are numbered in breadth-first order of
/// the Cayley graph (generators in declaration order, each generator before
/// its inverse), so ids are reproducible for a given presentation.
class CayleyRealization {
 public:
  /// Builds from action tables indexed by `column(g, sign)`; validates that
  /// every column is a permutation, inverse columns match, the action is
  /// transitive and every relator of `origin` acts trivially.
  CayleyRealization(Presentation origin, std::vector<std::vector<ElementId>> actions);

  std::size_t order() const { return order_; }
  ElementId identity() const { return 0; }
  const Presentation& origin() const { return origin_; }
  std::size_t generator_count() const { return origin_.generator_count(); }

  static std::size_t column(std::uint32_t generator, int sign) {
    return 2 * generator + (sign < 0 ? 1 : 0);
  }
  std::span<const ElementId> action(std::uint32_t generator, int sign) const {
    return actions_[column(generator, sign)];
  }

  /// Right action of a word: the element g w.
  ElementId act(ElementId g, const Word& w) const;
  ElementId evaluate(const Word& w) const { return act(identity(), w); }
  ElementId generator_element(std::uint32_t generator) const {
    return actions_[column(generator, 1)][0];
  }

  ElementId multiply(ElementId g, ElementId h) const;
  ElementId inverse(ElementId g) const;

  /// Shortest word for g, lexicographically first along the breadth-first tree.
  Word representative(ElementId g) const;

  /// {order, generators, relators, actions} with deterministic key order.
  std::string to_json() const;
  static CayleyRealization from_json(std::string_view text);

 private:
  void check(ElementId g) const {
    if (g >= order_) throw std::out_of_range("element id out of range");
  }

  Presentation origin_;
  std::size_t order_;
  std::vector<std::vector<ElementId>> actions_;
  // Breadth-first spanning tree: parent element and the column used to reach it.
  std::vector<ElementId> tree_parent_;
  std::vector<std::uint32_t> tree_column_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> table_;  // order^2 products when small enough, else empty
};

inline constexpr std::size_t kDefaultCosetCap = 1'000'000;

/// Result of an enumeration: the realization, or nothing when the number of
/// live cosets exceeded the cap.
struct Enumeration {
  std::optional<CayleyRealization> realization;
  std::size_t peak_live_cosets = 0;

  bool capped() const { return !realization.has_value(); }
};

/// Hasselgrove-Leech-Trotter enumeration with coincidence processing.
/// Deterministic: cosets are scanned in creation order against relators in
/// declaration order. Throws std::invalid_argument if `coset_cap` is 0.
Enumeration enumerate(const Presentation& p, std::size_t coset_cap = kDefaultCosetCap);

/// Convenience wrapper that throws CosetCapExceeded instead of returning capped.
class CosetCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
CayleyRealization realize(const Presentation& p, std::size_t coset_cap = kDefaultCosetCap);

}  // namespace hurwitz
