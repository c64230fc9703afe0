#pragma once

/**
 * @file dessin.hpp
 * @brief The Hecke dessin B_{0,N} as a pair of permutations on P^1(Z/NZ).
 *
 * Edges are the points of P^1(Z/NZ) in enumerate() order. The white
 * rotation x comes from S, the black rotation y from U, and the faces are
 * the cycles of t = "y then x", i.e. of T: [c:d] -> [c+d:d].
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "projline.hpp"

namespace hecke {

using Permutation = std::vector<std::size_t>;
using Cycle = std::vector<std::size_t>;

/// Cycles of perm, each starting at its least element, ordered by that
/// element.
inline std::vector<Cycle> cycles(const Permutation& perm) {
  std::vector<Cycle> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    Cycle cyc;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

/// e -> second[first[e]].
inline Permutation then(const Permutation& first, const Permutation& second) {
  Permutation out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
  return out;
}

inline std::size_t fixed_points(const Permutation& perm) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) k += perm[i] == i;
  return k;
}

inline bool is_identity_power(const Permutation& perm, int order) {
  for (std::size_t i = 0; i < perm.size(); ++i) {
    std::size_t j = i;
    for (int k = 0; k < order; ++k) j = perm[j];
    if (j != i) return false;
  }
  return true;
}

/// Whether the group generated by x and y acts transitively.
inline bool is_transitive(const Permutation& x, const Permutation& y) {
  if (x.empty()) return true;
  std::vector<bool> seen(x.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t e = stack.back();
    stack.pop_back();
    for (std::size_t f : {x[e], y[e]}) {
      if (!seen[f]) {
        seen[f] = true;
        ++count;
        stack.push_back(f);
      }
    }
  }
  return count == x.size();
}

struct Dessin {
  std::int64_t level = 1;
  std::vector<ProjPoint> edges;
  Permutation x; // white rotation
  Permutation y; // black rotation

  std::size_t size() const { return edges.size(); }

  /// Cusp permutation: apply y, then x.
  Permutation t() const { return then(y, x); }

  /// Position of p in edges.
  std::size_t index_of(const ProjPoint& p) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), p);
    if (it == edges.end() || *it != p) throw std::out_of_range("Dessin::index_of: " + p.str());
    return static_cast<std::size_t>(it - edges.begin());
  }

  friend bool operator==(const Dessin&, const Dessin&) = default;
};

inline Dessin build(std::int64_t n) {
  Dessin out;
  out.level = n;
  out.edges = enumerate(n);
  out.x.resize(out.edges.size());
  out.y.resize(out.edges.size());
  for (std::size_t i = 0; i < out.edges.size(); ++i) {
    out.x[i] = out.index_of(act_S(out.edges[i]));
    out.y[i] = out.index_of(act_U(out.edges[i]));
  }
  return out;
}

struct VertexSet {
  std::vector<Cycle> white;
  std::vector<Cycle> black;
  std::vector<Cycle> faces;
};

inline VertexSet vertex_sets(const Dessin& d) { return {cycles(d.x), cycles(d.y), cycles(d.t())}; }

// ---------------------------------------------------------------------------
// Torsion points (closed forms)
// ---------------------------------------------------------------------------

/// Number of solutions of x^2 = -1 in Z/NZ: zero if 4 | N or some odd prime
/// p | N has p = 3 (mod 4), else 2^(number of odd primes).
inline std::int64_t torsion2_count(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("torsion2_count: level must be positive");
  std::int64_t r = 1;
  for (auto [p, e] : factorize(n)) {
    if (p == 2) {
      if (e > 1) return 0;
    } else if (p % 4 == 1) {
      r *= 2;
    } else {
      return 0;
    }
  }
  return r;
}

/// Number of solutions of k^2 + k + 1 = 0 in Z/NZ: zero if 9 | N or some
/// prime p != 3 dividing N has p != 1 (mod 3), else 2^(number of such p).
inline std::int64_t torsion3_count(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("torsion3_count: level must be positive");
  std::int64_t r = 1;
  for (auto [p, e] : factorize(n)) {
    if (p == 3) {
      if (e > 1) return 0;
    } else if (p % 3 == 1) {
      r *= 2;
    } else {
      return 0;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Genus
// ---------------------------------------------------------------------------

/// Genus from the Euler characteristic V - E + F of the embedded graph.
inline std::int64_t genus_euler(const Dessin& d) {
  VertexSet v = vertex_sets(d);
  const auto chi = static_cast<std::int64_t>(v.white.size() + v.black.size() + v.faces.size()) -
                   static_cast<std::int64_t>(d.size());
  if (chi % 2 != 0 || chi > 2) throw InternalInconsistency("genus_euler: invalid Euler characteristic");
  return (2 - chi) / 2;
}

// genus_rh() lives in cusps.hpp, next to the cusp census it depends on.

// ---------------------------------------------------------------------------
// Canonical morphisms
// ---------------------------------------------------------------------------

/// Edge map B_{0,N} -> B_{0,d} induced by reduction mod d, as indices into
/// enumerate(N) and enumerate(d).
inline std::vector<std::size_t> quotient_morphism(const Dessin& source, const Dessin& target) {
  const std::int64_t n = source.level, d = target.level;
  if (d <= 0 || n % d != 0) throw std::invalid_argument("quotient_morphism: target level must divide source level");
  std::vector<std::size_t> out(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    const ProjPoint& p = source.edges[i];
    out[i] = target.index_of(ProjPoint::normalize(p.c(), p.d(), d));
  }
  return out;
}

inline std::vector<std::size_t> quotient_morphism(std::int64_t n, std::int64_t d) {
  if (n <= 0 || d <= 0 || n % d != 0)
    throw std::invalid_argument("quotient_morphism: " + std::to_string(d) + " does not divide " + std::to_string(n));
  return quotient_morphism(build(n), build(d));
}

} // namespace hecke
