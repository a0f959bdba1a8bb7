#pragma once

// Independent reference computations used only by the tests. None of these
// share code with the library beyond the Group interface.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "hurwitz/groups.hpp"
#include "hurwitz/toddcoxeter.hpp"

namespace oracle {

// ---- Z[zeta_12] with zeta^4 = zeta^2 - 1, basis 1, zeta, zeta^2, zeta^3 ----

struct Cyclo {
  std::array<long long, 4> c{};

  static Cyclo integer(long long n) { return Cyclo{{n, 0, 0, 0}}; }
  static Cyclo zeta_power(int k) {
    k = ((k % 12) + 12) % 12;
    Cyclo z = integer(1);
    for (int i = 0; i < k; ++i) z = z * Cyclo{{0, 1, 0, 0}};
    return z;
  }

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    Cyclo r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    Cyclo r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    long long p[7] = {};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) p[i + j] += a.c[i] * b.c[j];
    for (int k = 6; k >= 4; --k) {
      p[k - 2] += p[k];
      p[k - 4] -= p[k];
      p[k] = 0;
    }
    return Cyclo{{p[0], p[1], p[2], p[3]}};
  }
  friend bool operator==(const Cyclo&, const Cyclo&) = default;
  friend auto operator<=>(const Cyclo&, const Cyclo&) = default;
};

using Matrix = std::array<Cyclo, 4>;  // row-major 2x2

inline Matrix mul(const Matrix& x, const Matrix& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

/// Number of distinct matrices generated by `gens`, or 0 beyond `limit`.
inline std::size_t closure_size(const std::vector<Matrix>& gens, std::size_t limit = 10000) {
  Matrix id{Cyclo::integer(1), Cyclo::integer(0), Cyclo::integer(0), Cyclo::integer(1)};
  std::set<Matrix> seen{id};
  std::vector<Matrix> frontier{id};
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& m : frontier) {
      for (const auto& g : gens) {
        Matrix p = mul(m, g);
        if (seen.insert(p).second) {
          if (seen.size() > limit) return 0;
          next.push_back(p);
        }
      }
    }
    frontier.swap(next);
  }
  return seen.size();
}

inline Matrix power(const Matrix& m, int k) {
  Matrix r{Cyclo::integer(1), Cyclo::integer(0), Cyclo::integer(0), Cyclo::integer(1)};
  for (int i = 0; i < k; ++i) r = mul(r, m);
  return r;
}

inline Cyclo omega() { return Cyclo::zeta_power(4); }

inline std::vector<Matrix> g4_reflections() {
  Cyclo w = omega(), one = Cyclo::integer(1), zero = Cyclo::integer(0);
  return {Matrix{w, one, zero, one}, Matrix{one, zero, zero - w, w}};
}

inline std::vector<Matrix> g6_reflections() {
  Cyclo w = omega(), one = Cyclo::integer(1), zero = Cyclo::integer(0);
  Cyclo t = one - w - Cyclo::zeta_power(11);
  return {Matrix{w, one, zero, one}, Matrix{one, zero, t, zero - one}};
}

// ---- orbits ---------------------------------------------------------------------

using Tuple = std::vector<hurwitz::ElementKey>;

inline Tuple move(const hurwitz::Group& G, Tuple t, std::size_t i, bool forward) {
  auto x = t[i], y = t[i + 1];
  if (forward) {
    t[i] = y;
    t[i + 1] = G.multiply(G.multiply(G.inverse(y), x), y);
  } else {
    t[i] = G.multiply(G.multiply(x, y), G.inverse(x));
    t[i + 1] = x;
  }
  return t;
}

/// Breadth-first closure over std::set.
inline std::set<Tuple> bfs_orbit(const hurwitz::Group& G, const Tuple& start) {
  std::set<Tuple> seen{start};
  std::vector<Tuple> frontier{start};
  while (!frontier.empty()) {
    std::vector<Tuple> next;
    for (const auto& t : frontier) {
      for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        for (bool f : {true, false}) {
          Tuple u = move(G, t, i, f);
          if (seen.insert(u).second) next.push_back(u);
        }
      }
    }
    frontier.swap(next);
  }
  return seen;
}

/// Depth-first closure over an explicit stack, forward moves only (each
/// forward move is a bijection on a finite set, so this reaches the orbit).
inline std::size_t dfs_orbit_size(const hurwitz::Group& G, const Tuple& start) {
  std::set<Tuple> seen{start};
  std::vector<Tuple> stack{start};
  while (!stack.empty()) {
    Tuple t = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      Tuple u = move(G, t, i, true);
      if (seen.insert(u).second) stack.push_back(u);
    }
  }
  return seen.size();
}

// ---- explicit permutations ------------------------------------------------------

using Perm = std::vector<int>;

/// (p q)(i) = q(p(i)): left factor applied first.
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline std::set<Perm> perm_closure(const std::vector<Perm>& gens) {
  Perm id(gens.front().size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        Perm q = compose(p, g);
        if (seen.insert(q).second) next.push_back(q);
      }
    }
    frontier.swap(next);
  }
  return seen;
}

inline Perm rotation(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

inline Perm reflection(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = (n - i) % n;
  return p;
}

/// Sends r to the rotation and s to the reflection of an n-gon through each
/// element's representative word, and checks that this is an injective
/// homomorphism onto the explicit dihedral group of order 2n.
inline bool matches_dihedral_permutations(const hurwitz::CayleyRealization& r, int n) {
  auto explicit_group = perm_closure({rotation(n), reflection(n)});
  if (explicit_group.size() != r.order()) return false;
  std::vector<Perm> image;
  for (hurwitz::ElementId g = 0; g < r.order(); ++g) {
    Perm x(n);
    for (int i = 0; i < n; ++i) x[i] = i;
    hurwitz::Word rep = r.representative(g);
    for (const auto& l : rep.letters()) {
      Perm gen = l.generator == 0 ? rotation(n) : reflection(n);
      if (l.sign < 0) {
        Perm inv(n);
        for (int i = 0; i < n; ++i) inv[gen[i]] = i;
        gen = inv;
      }
      x = compose(x, gen);
    }
    image.push_back(x);
  }
  if (std::set<Perm>(image.begin(), image.end()).size() != r.order()) return false;
  for (hurwitz::ElementId g = 0; g < r.order(); ++g)
    for (hurwitz::ElementId h = 0; h < r.order(); ++h)
      if (compose(image[g], image[h]) != image[r.multiply(g, h)]) return false;
  return true;
}

}  // namespace oracle
