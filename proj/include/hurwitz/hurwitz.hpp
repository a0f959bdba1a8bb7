#pragma once

// Hurwitz moves on factorizations and breadth-first orbit enumeration.
//
//   sigma_i     : (.., x_i, x_{i+1}, ..) -> (.., x_{i+1}, x_{i+1}^-1 x_i x_{i+1}, ..)
//   sigma_i^-1  : (.., x_i, x_{i+1}, ..) -> (.., x_i x_{i+1} x_i^-1, x_i, ..)
//
// Positions are 1-based, 1 <= i <= length - 1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/groups.hpp"

namespace hurwitz {

/// Thrown for factorizations of different groups or lengths.
class FactorizationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Factorization {
 public:
  Factorization(GroupPtr group, std::vector<ElementKey> factors);

  const GroupPtr& group() const { return group_; }
  std::span<const ElementKey> factors() const { return factors_; }
  ElementKey operator[](std::size_t k) const { return factors_[k]; }
  std::size_t length() const { return factors_.size(); }

  /// `(a, b^-1, ...)` using the group's element labels.
  std::string to_string() const;

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.group_ == b.group_ && a.factors_ == b.factors_;
  }

 private:
  GroupPtr group_;
  std::vector<ElementKey> factors_;
};

/// Parses factors separated by commas, or by whitespace when no comma is
/// present; for permutation groups each parenthesized cycle is one factor
/// when no comma is present.
Factorization parse_factorization(GroupPtr group, std::string_view text);

enum class Direction { Forward, Inverse };

struct Move {
  std::size_t position;  // 1-based
  Direction direction = Direction::Forward;
  friend bool operator==(const Move&, const Move&) = default;
};

Factorization hurwitz_move(const Factorization& f, std::size_t position, Direction direction = Direction::Forward);
Factorization hurwitz_move(const Factorization& f, Move m);

/// Applies moves left to right.
Factorization apply_braid(const Factorization& f, std::span<const Move> moves);

/// Left-to-right product x_1 x_2 ... x_l.
ElementKey product(const Factorization& f);

inline constexpr std::size_t kDefaultNodeCap = 10'000'000;

/// Closure of a factorization under all moves, or the part of it reached
/// breadth-first before the member count hit the cap.
class Orbit {
 public:
  const Factorization& base() const { return base_; }
  std::size_t size() const { return members_.size() / width_; }
  bool capped() const { return capped_; }
  std::size_t length() const { return width_; }

  /// Members in lexicographic key order.
  std::span<const ElementKey> member(std::size_t k) const {
    return {members_.data() + k * width_, width_};
  }
  Factorization member_factorization(std::size_t k) const;
  bool contains(std::span<const ElementKey> factors) const;
  /// Index of a member, if present.
  std::optional<std::size_t> find(std::span<const ElementKey> factors) const;

 private:
  friend Orbit orbit(const Factorization&, std::size_t);
  Orbit(Factorization base, std::vector<ElementKey> sorted_members, bool capped);

  Factorization base_;
  std::size_t width_;
  std::vector<ElementKey> members_;
  bool capped_;
};

/// Breadth-first closure under sigma_i and sigma_i^-1. When more than
/// `node_cap` members would be needed the orbit is marked capped and holds the
/// first `node_cap` members found.
Orbit orbit(const Factorization& f, std::size_t node_cap = kDefaultNodeCap);

/// Finite(n) when `capped` is false, otherwise AtLeast(value).
struct OrbitSize {
  std::size_t value = 0;
  bool capped = false;

  bool finite() const { return !capped; }
  std::string to_string() const;
  friend bool operator==(const OrbitSize&, const OrbitSize&) = default;
};

OrbitSize orbit_size(const Factorization& f, std::size_t node_cap = kDefaultNodeCap);

enum class Membership { Yes, No, Unknown };

/// Whether `b` lies in the orbit of `a`. Throws FactorizationMismatch for
/// different groups or lengths.
Membership same_orbit(const Factorization& a, const Factorization& b, std::size_t node_cap = kDefaultNodeCap);

enum class GraphFormat { Dot, Json };

/// Vertices are the members, edges the forward moves sigma_i labelled `s<i>`.
/// Throws std::invalid_argument on a capped orbit.
std::string export_orbit_graph(const Orbit& o, GraphFormat format, bool self_loops = false);

}  // namespace hurwitz
