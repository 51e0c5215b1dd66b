#ifndef WLAB_LATTICE_CORPUS_HPP
#define WLAB_LATTICE_CORPUS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wlab/lattice.hpp"

namespace wlab {

inline FiniteLattice chain_lattice(int length) {
  if (length < 1) throw PreconditionError("chain needs at least one element");
  std::vector<std::vector<bool>> leq(length, std::vector<bool>(length, false));
  for (int a = 0; a < length; ++a)
    for (int b = a; b < length; ++b) leq[a][b] = true;
  return validate_lattice(length, leq);
}

// Subsets of a k-element set ordered by inclusion; element i is the bitmask i.
inline FiniteLattice boolean_lattice(int k) {
  if (k < 0 || k > 16) throw PreconditionError("cube dimension out of range");
  int n = 1 << k;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[a][b] = (a & b) == a;
  return validate_lattice(n, leq);
}

// Three incomparable atoms between the bounds.
inline FiniteLattice diamond_m3() {
  int n = 5;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    leq[a][a] = true;
    leq[0][a] = true;
    leq[a][4] = true;
  }
  return validate_lattice(n, leq, {"bot", "x", "y", "z", "top"});
}

// Pentagon: bot < a < c < top on one side, bot < b < top on the other.
inline FiniteLattice pentagon_n5() {
  int n = 5;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    leq[a][a] = true;
    leq[0][a] = true;
    leq[a][4] = true;
  }
  leq[1][2] = true;
  return validate_lattice(n, leq, {"bot", "a", "c", "b", "top"});
}

// The four-element square with a fresh top adjoined above the old one.
inline FiniteLattice square_plus_top() {
  int n = 5;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) leq[a][b] = (a & b) == a;
  for (int a = 0; a < n; ++a) {
    leq[a][a] = true;
    leq[a][4] = true;
  }
  return validate_lattice(n, leq, {"bot", "a", "b", "m", "top"});
}

// The named standard corpus: chains 2..6, both cubes, the two minimal
// non-distributive lattices, and the square with an extra top.
inline std::vector<std::pair<std::string, FiniteLattice>> standard_lattices() {
  std::vector<std::pair<std::string, FiniteLattice>> out;
  for (int k = 2; k <= 6; ++k)
    out.emplace_back("chain" + std::to_string(k), chain_lattice(k));
  out.emplace_back("square", boolean_lattice(2));
  out.emplace_back("cube", boolean_lattice(3));
  out.emplace_back("m3", diamond_m3());
  out.emplace_back("n5", pentagon_n5());
  out.emplace_back("square_plus_top", square_plus_top());
  return out;
}

// Deterministic stream of random lattices: random upward edge sets on an
// index-ordered vertex set, transitively closed, kept when the result
// validates. Raw generator bits are reduced directly so the stream does not
// depend on library distribution internals.
inline std::vector<FiniteLattice> random_lattice_stream(std::uint64_t seed, int count,
                                                        int max_size = 7) {
  if (count < 0 || max_size < 2) throw PreconditionError("need count >= 0 and max_size >= 2");
  std::mt19937_64 rng(seed);
  std::vector<FiniteLattice> out;
  while (static_cast<int>(out.size()) < count) {
    int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size - 1));
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a) leq[a][a] = true;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) leq[a][b] = (rng() & 1) != 0;
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (leq[a][k] && leq[k][b]) leq[a][b] = true;
    try {
      out.push_back(validate_lattice(n, leq));
    } catch (const NotALattice&) {
    } catch (const NotBounded&) {
    }
  }
  return out;
}

}  // namespace wlab

#endif
