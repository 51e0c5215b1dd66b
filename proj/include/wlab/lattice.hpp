#ifndef WLAB_LATTICE_HPP
#define WLAB_LATTICE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wlab/errors.hpp"

namespace wlab {

// A validated finite bounded lattice. Elements are 0..size-1; leq is the full
// order matrix and meet/join tables are materialized by validate_lattice.
struct FiniteLattice {
  int size = 0;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<int>> meet_table;
  std::vector<std::vector<int>> join_table;
  std::vector<std::string> names;
  int bottom = -1;
  int top = -1;

  bool le(int a, int b) const { return leq[a][b]; }
  int meet(int a, int b) const { return meet_table[a][b]; }
  int join(int a, int b) const { return join_table[a][b]; }

  std::string name_of(int a) const {
    if (a >= 0 && a < static_cast<int>(names.size()) && !names[a].empty()) return names[a];
    return std::to_string(a);
  }
};

namespace detail {

// Greatest element of a nonempty subset, or -1 when the subset has none.
inline int greatest_of(const std::vector<std::vector<bool>>& leq, const std::vector<int>& set) {
  for (int g : set) {
    bool all = true;
    for (int c : set) {
      if (!leq[c][g]) {
        all = false;
        break;
      }
    }
    if (all) return g;
  }
  return -1;
}

inline int least_of(const std::vector<std::vector<bool>>& leq, const std::vector<int>& set) {
  for (int g : set) {
    bool all = true;
    for (int c : set) {
      if (!leq[g][c]) {
        all = false;
        break;
      }
    }
    if (all) return g;
  }
  return -1;
}

}  // namespace detail

inline FiniteLattice validate_lattice(int n, const std::vector<std::vector<bool>>& leq,
                                      std::vector<std::string> names = {}) {
  if (n < 0 || static_cast<int>(leq.size()) != n)
    throw PreconditionError("order matrix must be n x n");
  for (const auto& row : leq)
    if (static_cast<int>(row.size()) != n) throw PreconditionError("order matrix must be n x n");
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw PreconditionError("names must be empty or cover every element");
  if (n == 0) throw NotBounded("no least element in an empty order");

  for (int a = 0; a < n; ++a)
    if (!leq[a][a]) throw NotAPoset("not reflexive at " + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && leq[a][b] && leq[b][a])
        throw NotAPoset("not antisymmetric at (" + std::to_string(a) + ", " + std::to_string(b) +
                        ")");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c] && !leq[a][c])
          throw NotAPoset("not transitive through (" + std::to_string(a) + ", " +
                          std::to_string(b) + ", " + std::to_string(c) + ")");

  FiniteLattice L;
  L.size = n;
  L.leq = leq;
  L.names = std::move(names);
  L.meet_table.assign(n, std::vector<int>(n, -1));
  L.join_table.assign(n, std::vector<int>(n, -1));
  std::vector<int> bounds;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      bounds.clear();
      for (int c = 0; c < n; ++c)
        if (leq[c][a] && leq[c][b]) bounds.push_back(c);
      int m = detail::greatest_of(leq, bounds);
      if (m < 0)
        throw NotALattice("no meet for (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      L.meet_table[a][b] = m;
      bounds.clear();
      for (int c = 0; c < n; ++c)
        if (leq[a][c] && leq[b][c]) bounds.push_back(c);
      int j = detail::least_of(leq, bounds);
      if (j < 0)
        throw NotALattice("no join for (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      L.join_table[a][b] = j;
    }
  }

  // A finite lattice is bounded once all pairwise bounds exist; fold to find
  // the two ends anyway so the fields are authoritative.
  int bot = 0, top = 0;
  for (int a = 1; a < n; ++a) {
    bot = L.meet_table[bot][a];
    top = L.join_table[top][a];
  }
  for (int a = 0; a < n; ++a) {
    if (!leq[bot][a]) throw NotBounded("no least element");
    if (!leq[a][top]) throw NotBounded("no greatest element");
  }
  L.bottom = bot;
  L.top = top;
  return L;
}

inline bool is_distributive(const FiniteLattice& L) {
  for (int a = 0; a < L.size; ++a)
    for (int b = 0; b < L.size; ++b)
      for (int c = 0; c < L.size; ++c) {
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
        if (L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), L.join(a, c))) return false;
      }
  return true;
}

// Masks over elements: a is join-irreducible when a = b v c forces a = b or
// a = c; meet-irreducible dually. The bounds are not special-cased.
struct IrreducibleSets {
  std::vector<bool> meet_irreducible;
  std::vector<bool> join_irreducible;
};

inline IrreducibleSets irreducibles(const FiniteLattice& L) {
  IrreducibleSets r;
  r.meet_irreducible.assign(L.size, true);
  r.join_irreducible.assign(L.size, true);
  for (int a = 0; a < L.size; ++a)
    for (int b = 0; b < L.size; ++b)
      for (int c = 0; c < L.size; ++c) {
        if (L.join(b, c) == a && b != a && c != a) r.join_irreducible[a] = false;
        if (L.meet(b, c) == a && b != a && c != a) r.meet_irreducible[a] = false;
      }
  return r;
}

// Result of a residuation-table construction. Exactly one of table/offending
// is meaningful: `table[a][b]` when every pair admits the extremum, the first
// pair lacking one otherwise.
struct ResidualTable {
  std::vector<std::vector<int>> table;
  std::optional<std::pair<int, int>> offending;

  bool ok() const { return !offending.has_value(); }
};

// table[a][b] = greatest c with c ^ a <= b.
inline ResidualTable heyting_table(const FiniteLattice& L) {
  ResidualTable r;
  r.table.assign(L.size, std::vector<int>(L.size, -1));
  std::vector<int> set;
  for (int a = 0; a < L.size; ++a)
    for (int b = 0; b < L.size; ++b) {
      set.clear();
      for (int c = 0; c < L.size; ++c)
        if (L.le(L.meet(c, a), b)) set.push_back(c);
      int g = detail::greatest_of(L.leq, set);
      if (g < 0) {
        r.table.clear();
        r.offending = {a, b};
        return r;
      }
      r.table[a][b] = g;
    }
  return r;
}

// table[a][b] = least c with b <= c v a.
inline ResidualTable brouwer_table(const FiniteLattice& L) {
  ResidualTable r;
  r.table.assign(L.size, std::vector<int>(L.size, -1));
  std::vector<int> set;
  for (int a = 0; a < L.size; ++a)
    for (int b = 0; b < L.size; ++b) {
      set.clear();
      for (int c = 0; c < L.size; ++c)
        if (L.le(b, L.join(c, a))) set.push_back(c);
      int g = detail::least_of(L.leq, set);
      if (g < 0) {
        r.table.clear();
        r.offending = {a, b};
        return r;
      }
      r.table[a][b] = g;
    }
  return r;
}

inline FiniteLattice dual(const FiniteLattice& L) {
  FiniteLattice D;
  D.size = L.size;
  D.leq.assign(L.size, std::vector<bool>(L.size, false));
  for (int a = 0; a < L.size; ++a)
    for (int b = 0; b < L.size; ++b) D.leq[a][b] = L.leq[b][a];
  D.meet_table = L.join_table;
  D.join_table = L.meet_table;
  D.names = L.names;
  D.bottom = L.top;
  D.top = L.bottom;
  return D;
}

// The three closure laws: extensive, monotone, idempotent.
inline bool check_closure(const FiniteLattice& L, const std::vector<int>& op) {
  if (static_cast<int>(op.size()) != L.size)
    throw PreconditionError("closure map must be total");
  for (int a = 0; a < L.size; ++a)
    if (op[a] < 0 || op[a] >= L.size) throw PreconditionError("closure map must be total");
  for (int a = 0; a < L.size; ++a)
    if (!L.le(a, op[a])) return false;
  for (int a = 0; a < L.size; ++a)
    for (int b = 0; b < L.size; ++b)
      if (L.le(a, b) && !L.le(op[a], op[b])) return false;
  for (int a = 0; a < L.size; ++a)
    if (op[op[a]] != op[a]) return false;
  return true;
}

// Fixed points of a closure operator, as a lattice in their own right: meets
// are inherited, joins are the ambient join followed by the operator.
inline FiniteLattice image_lattice(const FiniteLattice& L, const std::vector<int>& op) {
  if (static_cast<int>(op.size()) != L.size)
    throw PreconditionError("closure map must be total");
  for (int a = 0; a < L.size; ++a) {
    if (op[a] < 0 || op[a] >= L.size) throw PreconditionError("closure map must be total");
    if (!L.le(a, op[a])) throw NotClosure("not extensive at " + std::to_string(a));
    if (op[op[a]] != op[a]) throw NotClosure("not idempotent at " + std::to_string(a));
  }
  for (int a = 0; a < L.size; ++a)
    for (int b = 0; b < L.size; ++b)
      if (L.le(a, b) && !L.le(op[a], op[b]))
        throw NotClosure("not monotone on (" + std::to_string(a) + ", " + std::to_string(b) + ")");

  std::vector<int> members;
  for (int a = 0; a < L.size; ++a)
    if (op[a] == a) members.push_back(a);
  int k = static_cast<int>(members.size());
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) leq[i][j] = L.le(members[i], members[j]);
  std::vector<std::string> names;
  names.reserve(members.size());
  for (int m : members) names.push_back(L.name_of(m));
  return validate_lattice(k, leq, std::move(names));
}

enum class HomKind {
  kMeet,
  kJoin,
  kLattice,
  kHeyting,
  kBrouwer,
  kLatticeEmbedding,
  kHeytingEmbedding,
  kBrouwerEmbedding,
};

inline bool hom_check(HomKind kind, const std::vector<int>& m, const FiniteLattice& L1,
                      const FiniteLattice& L2) {
  if (static_cast<int>(m.size()) != L1.size) throw PreconditionError("map must be total");
  for (int a = 0; a < L1.size; ++a)
    if (m[a] < 0 || m[a] >= L2.size) throw PreconditionError("map must land in the codomain");

  bool need_meet = kind != HomKind::kJoin;
  bool need_join = kind != HomKind::kMeet;
  bool heyting = kind == HomKind::kHeyting || kind == HomKind::kHeytingEmbedding;
  bool brouwer = kind == HomKind::kBrouwer || kind == HomKind::kBrouwerEmbedding;
  bool injective = kind == HomKind::kLatticeEmbedding || kind == HomKind::kHeytingEmbedding ||
                   kind == HomKind::kBrouwerEmbedding;

  if (need_meet)
    for (int a = 0; a < L1.size; ++a)
      for (int b = 0; b < L1.size; ++b)
        if (m[L1.meet(a, b)] != L2.meet(m[a], m[b])) return false;
  if (need_join)
    for (int a = 0; a < L1.size; ++a)
      for (int b = 0; b < L1.size; ++b)
        if (m[L1.join(a, b)] != L2.join(m[a], m[b])) return false;

  if (heyting || brouwer) {
    ResidualTable t1 = heyting ? heyting_table(L1) : brouwer_table(L1);
    ResidualTable t2 = heyting ? heyting_table(L2) : brouwer_table(L2);
    if (!t1.ok() || !t2.ok())
      throw MissingStructure("residuation table absent on one side of the map");
    for (int a = 0; a < L1.size; ++a)
      for (int b = 0; b < L1.size; ++b)
        if (m[t1.table[a][b]] != t2.table[m[a]][m[b]]) return false;
    if (m[L1.bottom] != L2.bottom || m[L1.top] != L2.top) return false;
  }

  if (injective)
    for (int a = 0; a < L1.size; ++a)
      for (int b = a + 1; b < L1.size; ++b)
        if (m[a] == m[b]) return false;
  return true;
}

}  // namespace wlab

#endif
