#ifndef WLAB_LLPO_HPP
#define WLAB_LLPO_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wlab/constructions.hpp"
#include "wlab/ops.hpp"
#include "wlab/problem.hpp"
#include "wlab/transducer.hpp"

namespace wlab {

namespace detail {

// Tuples of w components (depth d each) with at most `bound` nonzero symbols
// in total, in index order of the tuple coding.
inline std::vector<Seq> sparse_tuples(int w, int d, int alphabet, int bound,
                                      std::uint64_t cap = kOpPointCap) {
  std::vector<int> cur(static_cast<size_t>(w * d), 0);
  // enumerate by choosing nonzero positions and symbols, depth-first
  std::vector<Seq> out;
  auto rec = [&](auto&& self, int from, int left) -> void {
    out.push_back(Seq{alphabet, cur});
    if (static_cast<std::uint64_t>(out.size()) > cap)
      throw BudgetExceeded("sparse tuple enumeration exceeds cap");
    if (left == 0) return;
    for (int pos = from; pos < w * d; ++pos)
      for (int s = 1; s < alphabet; ++s) {
        cur[static_cast<size_t>(pos)] = s;
        self(self, pos + 1, left - 1);
        cur[static_cast<size_t>(pos)] = 0;
      }
  };
  rec(rec, 0, bound);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// component i (0-based) of a tuple-coded point is all zero
inline bool component_zero(const Seq& x, int w, int d, int comp) {
  for (int row = 0; row < d; ++row)
    if (x.sym[static_cast<size_t>(row * w + comp)] != 0) return false;
  return true;
}

inline Seq answer_seq(int i, int out_alphabet, int d) {
  return tag_seq(i, zeros({out_alphabet, d}));
}

}  // namespace detail

// Given w sequences with at most one nonzero entry overall, name a
// component among the first n that is all zero. Answer tags are 1-based.
inline Problem llpo_n1(int n, int w, int d, int in_alphabet = 2, int out_alphabet = 0) {
  if (n < 2 || w < n || d < 1) throw DimensionError("llpo_n1 needs w >= n >= 2, d >= 1");
  if (in_alphabet < 2) throw AlphabetError("llpo_n1 input alphabet needs a nonzero symbol");
  if (out_alphabet == 0) out_alphabet = n + 1;
  if (out_alphabet < n + 1) throw AlphabetError("llpo_n1 answers need symbols up to n");
  std::map<Seq, std::set<Seq>> g;
  for (const Seq& x : detail::sparse_tuples(w, d, in_alphabet, 1)) {
    std::set<Seq> vals;
    for (int i = 1; i <= n; ++i)
      if (detail::component_zero(x, w, d, i - 1)) vals.insert(detail::answer_seq(i, out_alphabet, d));
    g[x] = std::move(vals);  // nonempty: at most one component is touched, n >= 2
  }
  return make_problem({in_alphabet, w * d}, {out_alphabet, d + 1}, std::move(g));
}

// Given w sequences with at most k nonzero entries overall, name any all-zero
// component. Points whose components are all touched are outside the domain.
inline Problem llpo_inf_n(int k, int w, int d, int in_alphabet = 2, int out_alphabet = 0) {
  if (w < 1 || d < 1 || k < 0) throw DimensionError("llpo_inf_n needs w, d >= 1, k >= 0");
  if (in_alphabet < 2) throw AlphabetError("llpo_inf_n input alphabet needs a nonzero symbol");
  if (out_alphabet == 0) out_alphabet = w + 1;
  if (out_alphabet < w + 1) throw AlphabetError("llpo_inf_n answers need symbols up to w");
  std::map<Seq, std::set<Seq>> g;
  for (const Seq& x : detail::sparse_tuples(w, d, in_alphabet, k)) {
    std::set<Seq> vals;
    for (int i = 1; i <= w; ++i)
      if (detail::component_zero(x, w, d, i - 1)) vals.insert(detail::answer_seq(i, out_alphabet, d));
    if (!vals.empty()) g[x] = std::move(vals);
  }
  return make_problem({in_alphabet, w * d}, {out_alphabet, d + 1}, std::move(g));
}

// Selector-guarded union of the family: an all-zero selector asks the
// two-error variant over all components, a selector 0^n 1 0... with
// k <= n <= min(w, d-1) asks the n-component one-error variant. The all-zero
// selector is deliberately the ambiguous one. Inputs pair the selector
// (depth d) with the tuple; answer tags are 1-based as above.
inline Problem sigma_llpo(int k, int w, int d, int in_alphabet = 2, int out_alphabet = 0) {
  if (k < 2 || w < 1 || d < 1) throw DimensionError("sigma_llpo needs k >= 2, w >= 1, d >= 1");
  if (in_alphabet < 2) throw AlphabetError("sigma_llpo input alphabet needs a nonzero symbol");
  if (out_alphabet == 0) out_alphabet = w + 1;
  if (out_alphabet < w + 1) throw AlphabetError("sigma_llpo answers need symbols up to w");
  std::map<Seq, std::set<Seq>> g;
  Seq qz = zeros({in_alphabet, d});
  for (const Seq& p : detail::sparse_tuples(w, d, in_alphabet, 2)) {
    std::set<Seq> vals;
    for (int i = 1; i <= w; ++i)
      if (detail::component_zero(p, w, d, i - 1)) vals.insert(detail::answer_seq(i, out_alphabet, d));
    if (!vals.empty()) g[pair_pad(qz, p)] = std::move(vals);
  }
  for (int n = k; n <= std::min(w, d - 1); ++n) {
    Seq q = zeros({in_alphabet, d});
    q.sym[static_cast<size_t>(n)] = 1;
    for (const Seq& p : detail::sparse_tuples(w, d, in_alphabet, 1)) {
      std::set<Seq> vals;
      for (int i = 1; i <= n; ++i)
        if (detail::component_zero(p, w, d, i - 1))
          vals.insert(detail::answer_seq(i, out_alphabet, d));
      g[pair_pad(q, p)] = std::move(vals);  // nonempty: n >= k >= 2
    }
  }
  return make_problem({in_alphabet, 2 * w * d}, {out_alphabet, d + 1}, std::move(g));
}

// Source and target of the splitting equivalence at level k: the level-k sum
// against (k-component one-error) |_| (level k+1 sum). Everything lives in
// one ambient alphabet, large enough for the answer tags, so the coproduct
// is well-formed; the zero/nonzero reading is alphabet-independent.
inline std::pair<Problem, Problem> sigma_split_instance(int k, int w, int d,
                                                        int in_alphabet = 2) {
  int a = std::max(in_alphabet, w + 1);
  Problem S = sigma_llpo(k, w, d, a, a);
  Problem L = llpo_n1(k, w, d, a, a);
  Problem R = sigma_llpo(k + 1, w, d, a, a);
  return {std::move(S), coprod(L, R)};
}

// Witnesses for both directions of the splitting equivalence. First element
// reduces the sum to the coproduct (dispatch on the selector), second element
// embeds the coproduct back (rebuild the selector).
inline std::pair<Witness, Witness> witness_sigma_split(int k, int w, int d,
                                                       int in_alphabet = 2) {
  if (k < 2 || w < k || d < k + 1)
    throw DimensionError("sigma split needs the level-k selector to fit: w >= k, d >= k+1");
  int ambient = std::max(in_alphabet, w + 1);
  int wd = w * d;
  int dpair = 2 * wd;

  Witness forward;
  forward.K = [k, d, wd, dpair](const Seq& x) {
    auto [qh, p] = unpair_seq(x);
    Seq q = trunc_seq(qh, d);
    bool level_k = q.sym[static_cast<size_t>(k)] == 1;
    for (int i = 0; i < k && level_k; ++i)
      if (q.sym[static_cast<size_t>(i)] != 0) level_k = false;
    if (level_k) return tag_seq(0, pad_seq(p, dpair));
    return tag_seq(1, x);
  };
  forward.H = [](const Seq&, const Seq& y) { return shift_seq(y); };

  Witness backward;
  backward.K = [k, d, wd, ambient](const Seq& z) {
    Seq inner = shift_seq(z);
    if (z.sym[0] == 0) {
      Seq p = trunc_seq(inner, wd);
      Seq q = zeros({ambient, d});
      q.sym[static_cast<size_t>(k)] = 1;
      return pair_pad(q, p);
    }
    return inner;
  };
  backward.H = [](const Seq& z, const Seq& y) { return tag_seq(z.sym[0], y); };
  return {std::move(forward), std::move(backward)};
}

struct SeparationCertificate {
  std::string P_name, Q_name;
  int depth = 0;
  int modulus = 0;
  std::uint64_t candidates_checked = 0;
  bool exhaustive = false;
  std::optional<std::pair<Transducer, TwoTapeTransducer>> witness;

  bool holds() const { return witness.has_value(); }
};

namespace detail {

// Every value is first-symbol coded: zero tail past the leading position.
// Such value sets are in bijection with their sets of leading symbols, so an
// answer map is determined by what it does on leading cells.
inline bool flat_values(const Problem& P) {
  for (const auto& [x, vals] : P.graph)
    for (const Seq& v : vals)
      for (size_t i = 1; i < v.sym.size(); ++i)
        if (v.sym[i] != 0) return false;
  return true;
}

inline std::uint64_t guarded_size(std::uint64_t n, std::uint64_t budget) {
  if (n > budget) throw BudgetExceeded("transducer table exceeds budget");
  return n;
}

inline Transducer blank_k(const SpaceSpec& in_sp, const SpaceSpec& out_sp, int modulus,
                          std::uint64_t budget) {
  Transducer kt;
  kt.in_sp = in_sp;
  kt.out_sp = out_sp;
  kt.modulus = modulus;
  for (int kpos = 0; kpos < out_sp.depth; ++kpos) {
    std::uint64_t n = pow_sat(static_cast<std::uint64_t>(in_sp.alphabet),
                              static_cast<std::uint64_t>(kt.prefix_len(kpos)),
                              SpaceSpec::kSizeCap);
    kt.table.push_back(std::vector<int>(static_cast<size_t>(guarded_size(n, budget)), 0));
  }
  return kt;
}

inline TwoTapeTransducer blank_h(const SpaceSpec& x_sp, const SpaceSpec& y_sp,
                                 const SpaceSpec& out_sp, int modulus, std::uint64_t budget) {
  TwoTapeTransducer ht;
  ht.x_sp = x_sp;
  ht.y_sp = y_sp;
  ht.out_sp = out_sp;
  ht.modulus = modulus;
  for (int kpos = 0; kpos < out_sp.depth; ++kpos) {
    std::uint64_t nx = pow_sat(static_cast<std::uint64_t>(x_sp.alphabet),
                               static_cast<std::uint64_t>(ht.x_len(kpos)),
                               SpaceSpec::kSizeCap);
    std::uint64_t ny = pow_sat(static_cast<std::uint64_t>(y_sp.alphabet),
                               static_cast<std::uint64_t>(ht.y_len(kpos)),
                               SpaceSpec::kSizeCap);
    std::uint64_t n = nx > SpaceSpec::kSizeCap / ny ? SpaceSpec::kSizeCap : nx * ny;
    ht.table.push_back(std::vector<int>(static_cast<size_t>(guarded_size(n, budget)), 0));
  }
  return ht;
}

// Inner map with the given behavior on dom(P): assigned prefixes get their
// symbols, everything else answers 0.
inline Transducer materialize_k(const std::vector<Seq>& xs,
                                const std::vector<std::vector<int>>& image,
                                const SpaceSpec& in_sp, const SpaceSpec& out_sp, int modulus,
                                std::uint64_t budget) {
  Transducer kt = blank_k(in_sp, out_sp, modulus, budget);
  for (size_t i = 0; i < xs.size(); ++i)
    for (int kpos = 0; kpos < out_sp.depth; ++kpos)
      kt.table[static_cast<size_t>(kpos)][kt.prefix_index(xs[i], kpos)] =
          image[i][static_cast<size_t>(kpos)];
  return kt;
}

// Exact answer-map feasibility for a fixed inner-map behavior. Builds the
// least two-tape transducer answering every (x in dom(P), y in Q(K(x))) pair
// inside P's value sets, or reports none exists. Cells are filled position by
// position; unreachable cells stay 0.
struct HSolveState {
  const Problem* P;
  const Problem* Q;
  int modulus;
  std::vector<Seq> xs;
  std::vector<Seq> images;  // K(x) per x, aligned with xs
  std::uint64_t* work;
  std::uint64_t budget;
};

inline bool h_solve(HSolveState& st, TwoTapeTransducer& out) {
  const Problem& P = *st.P;
  const Problem& Q = *st.Q;
  out = blank_h(P.in_sp, Q.out_sp, P.out_sp, st.modulus, st.budget);

  struct PairState {
    const Seq* x;
    const Seq* y;
    std::vector<const Seq*> viable;  // values of P(x) matching the emitted prefix
  };
  std::vector<PairState> pairs;
  for (size_t i = 0; i < st.xs.size(); ++i) {
    auto qit = Q.graph.find(st.images[i]);
    if (qit == Q.graph.end()) return false;
    for (const Seq& y : qit->second) {
      PairState ps;
      ps.x = &st.xs[i];
      ps.y = &y;
      for (const Seq& v : P.graph.at(st.xs[i])) ps.viable.push_back(&v);
      pairs.push_back(std::move(ps));
    }
  }

  // reachable cells per position, canonical order; unreachable cells stay 0
  struct CellSlot {
    int kpos;
    std::uint64_t cell;
    std::vector<size_t> members;
  };
  std::vector<CellSlot> slots;
  for (int kpos = 0; kpos < P.out_sp.depth; ++kpos) {
    std::map<std::uint64_t, std::vector<size_t>> cells;
    for (size_t pi = 0; pi < pairs.size(); ++pi)
      cells[out.cell_index(*pairs[pi].x, *pairs[pi].y, kpos)].push_back(pi);
    for (auto& [cell, members] : cells) slots.push_back(CellSlot{kpos, cell, std::move(members)});
  }

  // exact search: choices in one cell can constrain later positions through
  // the shared pair value sets, so symbols are backtracked, least-first
  struct Frame {
    int symbol = 0;
    std::vector<std::pair<size_t, std::vector<const Seq*>>> saved;
  };
  std::vector<Frame> stack;
  if (slots.empty()) return true;
  stack.push_back({});
  while (!stack.empty()) {
    size_t depth = stack.size() - 1;
    Frame& fr = stack.back();
    for (auto& [pi, old] : fr.saved) pairs[pi].viable = old;
    fr.saved.clear();
    if (fr.symbol >= P.out_sp.alphabet) {
      stack.pop_back();
      continue;
    }
    if (++*st.work > st.budget) throw BudgetExceeded("separation search budget");
    int s = fr.symbol++;
    const CellSlot& sl = slots[depth];
    bool ok = true;
    for (size_t pi : sl.members) {
      fr.saved.push_back({pi, pairs[pi].viable});
      std::vector<const Seq*> kept;
      for (const Seq* v : pairs[pi].viable)
        if (v->sym[static_cast<size_t>(sl.kpos)] == s) kept.push_back(v);
      pairs[pi].viable = std::move(kept);
      if (pairs[pi].viable.empty()) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    out.table[static_cast<size_t>(sl.kpos)][static_cast<size_t>(sl.cell)] = s;
    if (depth + 1 == slots.size()) return true;
    stack.push_back({});
  }
  return false;
}

// DFS over modulus-consistent assignments of dom(Q) points to dom(P) points.
// Slots group dom(P) by visible prefix per output position, so an assignment
// is exactly an inner-map behavior restricted to dom(P). allowed[i] lists the
// admissible target indices for xs[i]; leaf runs on each complete assignment
// until it accepts. The image matrix holds the accepted assignment.
struct LandingSearch {
  int aout;
  const std::vector<Seq>* qdom;
  struct Slot {
    int pos;
    std::vector<size_t> members;
  };
  std::vector<Slot> slots;
  std::vector<std::vector<int>> image;

  enum class Status { FOUND, EXHAUSTED, TRUNCATED };

  LandingSearch(const std::vector<Seq>& xs, const std::vector<Seq>& qdom_,
                const SpaceSpec& in_sp, const SpaceSpec& out_sp, int modulus)
      : aout(out_sp.alphabet),
        qdom(&qdom_),
        image(xs.size(), std::vector<int>(static_cast<size_t>(out_sp.depth), 0)) {
    for (int kpos = 0; kpos < out_sp.depth; ++kpos) {
      int len = std::min(kpos + modulus + 1, in_sp.depth);
      std::map<std::vector<int>, std::vector<size_t>> groups;
      for (size_t i = 0; i < xs.size(); ++i) {
        std::vector<int> pref(xs[i].sym.begin(), xs[i].sym.begin() + len);
        groups[std::move(pref)].push_back(i);
      }
      for (auto& [pref, members] : groups) slots.push_back(Slot{kpos, std::move(members)});
    }
  }

  template <class Leaf>
  Status run(const std::vector<std::vector<size_t>>& allowed, Leaf leaf, std::uint64_t& work,
             std::uint64_t budget) {
    std::vector<std::vector<size_t>> viable = allowed;
    for (const auto& v : viable)
      if (v.empty()) return Status::EXHAUSTED;
    struct Frame {
      int symbol = 0;
      std::vector<std::pair<size_t, std::vector<size_t>>> saved;
    };
    std::vector<Frame> stack;
    stack.push_back({});
    while (!stack.empty()) {
      size_t depth = stack.size() - 1;
      Frame& fr = stack.back();
      for (auto& [xi, old] : fr.saved) viable[xi] = old;
      fr.saved.clear();
      if (fr.symbol >= aout) {
        stack.pop_back();
        continue;
      }
      if (work >= budget) return Status::TRUNCATED;
      ++work;
      int s = fr.symbol++;
      const Slot& sl = slots[depth];
      bool ok = true;
      for (size_t xi : sl.members) {
        image[xi][static_cast<size_t>(sl.pos)] = s;
        fr.saved.push_back({xi, viable[xi]});
        std::vector<size_t> kept;
        for (size_t j : viable[xi])
          if ((*qdom)[j].sym[static_cast<size_t>(sl.pos)] == s) kept.push_back(j);
        viable[xi] = std::move(kept);
        if (viable[xi].empty()) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (depth + 1 < slots.size()) {
        stack.push_back({});
        continue;
      }
      if (leaf(image)) return Status::FOUND;
    }
    return Status::EXHAUSTED;
  }
};

}  // namespace detail

inline Witness to_witness(const Transducer& k, const TwoTapeTransducer& h) {
  auto kt = std::make_shared<Transducer>(k);
  auto ht = std::make_shared<TwoTapeTransducer>(h);
  return Witness{[kt](const Seq& x) { return kt->apply(x); },
                 [ht](const Seq& x, const Seq& y) { return ht->apply(x, y); }};
}

// Canonical-order search for a modulus-bounded witness pair, certifying
// absence when the whole candidate space was covered. Two candidate orders
// share the budget and the contract:
//  - answer-map order, taken when every value of P is first-symbol coded and
//    the table of answer symbols on leading cells is small: enumerate those
//    tables ascending, then look for a consistent landing map into the
//    targets each table validates;
//  - landing-map order, taken otherwise: enumerate consistent landing maps on
//    dom(P) ascending, solving for a compatible answer map exactly per map.
// candidates_checked counts candidates on the leading side of the chosen
// order. The choice depends only on the instance, so runs are reproducible.
inline SeparationCertificate separation_search(const Problem& P, const Problem& Q, int modulus,
                                               std::uint64_t budget = 1u << 22,
                                               std::string p_name = "P",
                                               std::string q_name = "Q") {
  if (P.top || Q.top) throw TopError("separation search needs concrete problems");
  if (modulus < 0) throw DimensionError("modulus must be >= 0");
  SeparationCertificate cert;
  cert.P_name = std::move(p_name);
  cert.Q_name = std::move(q_name);
  cert.depth = P.in_sp.depth;
  cert.modulus = modulus;

  std::vector<Seq> xs;
  for (const auto& [x, _] : P.graph) xs.push_back(x);
  if (xs.empty()) {
    cert.witness = {detail::blank_k(P.in_sp, Q.in_sp, modulus, budget),
                    detail::blank_h(P.in_sp, Q.out_sp, P.out_sp, modulus, budget)};
    cert.candidates_checked = 1;
    return cert;
  }

  std::vector<Seq> qdom;
  for (const auto& [x, _] : Q.graph) qdom.push_back(x);

  detail::LandingSearch land(xs, qdom, P.in_sp, Q.in_sp, modulus);
  std::uint64_t work = 0;
  bool truncated = false;
  std::optional<std::pair<Transducer, TwoTapeTransducer>> found;

  // eligibility for answer-map order
  constexpr std::uint64_t kAnswerTableCap = 1u << 20;
  int lx = std::min(modulus + 1, P.in_sp.depth);
  int ly = std::min(modulus + 1, Q.out_sp.depth);
  std::vector<std::vector<int>> xprefs, yprefs;
  bool leading = detail::flat_values(P);
  if (leading) {
    std::set<std::vector<int>> xset, yset;
    for (const Seq& x : xs)
      xset.insert(std::vector<int>(x.sym.begin(), x.sym.begin() + lx));
    for (const auto& [q, vals] : Q.graph)
      for (const Seq& y : vals)
        yset.insert(std::vector<int>(y.sym.begin(), y.sym.begin() + ly));
    xprefs.assign(xset.begin(), xset.end());
    yprefs.assign(yset.begin(), yset.end());
    std::uint64_t cells =
        static_cast<std::uint64_t>(xprefs.size()) * static_cast<std::uint64_t>(yprefs.size());
    std::uint64_t total = detail::pow_sat(static_cast<std::uint64_t>(P.out_sp.alphabet), cells,
                                          SpaceSpec::kSizeCap);
    if (cells > kAnswerTableCap || total > kAnswerTableCap) leading = false;
  }

  if (leading) {
    size_t nx = xprefs.size(), ny = yprefs.size();
    std::map<std::vector<int>, size_t> ypi;
    for (size_t j = 0; j < ny; ++j) ypi[yprefs[j]] = j;
    std::vector<size_t> xcls(xs.size());
    {
      std::map<std::vector<int>, size_t> xpi;
      for (size_t i = 0; i < nx; ++i) xpi[xprefs[i]] = i;
      for (size_t i = 0; i < xs.size(); ++i)
        xcls[i] = xpi.at(std::vector<int>(xs[i].sym.begin(), xs[i].sym.begin() + lx));
    }
    std::vector<std::vector<size_t>> qcls(qdom.size());
    for (size_t j = 0; j < qdom.size(); ++j) {
      std::set<size_t> cs;
      for (const Seq& y : Q.graph.at(qdom[j]))
        cs.insert(ypi.at(std::vector<int>(y.sym.begin(), y.sym.begin() + ly)));
      qcls[j].assign(cs.begin(), cs.end());
    }
    std::vector<std::vector<char>> firsts(
        xs.size(), std::vector<char>(static_cast<size_t>(P.out_sp.alphabet), 0));
    for (size_t i = 0; i < xs.size(); ++i)
      for (const Seq& v : P.graph.at(xs[i])) firsts[i][static_cast<size_t>(v.sym[0])] = 1;

    // cell (xc, yc) -> answer symbol, xc-major; ascending as one numeral,
    // last cell least significant
    std::vector<int> digits(nx * ny, 0);
    std::vector<std::vector<size_t>> allowed(xs.size());
    bool done = false;
    while (!done) {
      if (work >= budget) {
        truncated = true;
        break;
      }
      ++work;
      ++cert.candidates_checked;
      bool alive = true;
      for (size_t i = 0; i < xs.size() && alive; ++i) {
        allowed[i].clear();
        for (size_t j = 0; j < qdom.size(); ++j) {
          bool ok = true;
          for (size_t yc : qcls[j])
            if (!firsts[i][static_cast<size_t>(digits[xcls[i] * ny + yc])]) {
              ok = false;
              break;
            }
          if (ok) allowed[i].push_back(j);
        }
        work += qdom.size();
        if (allowed[i].empty()) alive = false;
      }
      if (alive) {
        auto st = land.run(
            allowed, [](const std::vector<std::vector<int>>&) { return true; }, work, budget);
        if (st == detail::LandingSearch::Status::TRUNCATED) {
          truncated = true;
          break;
        }
        if (st == detail::LandingSearch::Status::FOUND) {
          Transducer kt =
              detail::materialize_k(xs, land.image, P.in_sp, Q.in_sp, modulus, budget);
          TwoTapeTransducer ht = detail::blank_h(P.in_sp, Q.out_sp, P.out_sp, modulus, budget);
          for (size_t xc = 0; xc < nx; ++xc)
            for (size_t yc = 0; yc < ny; ++yc) {
              std::uint64_t xi = 0, yi = 0, nyr = 1;
              for (int t = 0; t < ht.x_len(0); ++t)
                xi = xi * static_cast<std::uint64_t>(P.in_sp.alphabet) +
                     static_cast<std::uint64_t>(xprefs[xc][static_cast<size_t>(t)]);
              for (int t = 0; t < ht.y_len(0); ++t) {
                yi = yi * static_cast<std::uint64_t>(Q.out_sp.alphabet) +
                     static_cast<std::uint64_t>(yprefs[yc][static_cast<size_t>(t)]);
                nyr *= static_cast<std::uint64_t>(Q.out_sp.alphabet);
              }
              ht.table[0][static_cast<size_t>(xi * nyr + yi)] = digits[xc * ny + yc];
            }
          found = {std::move(kt), std::move(ht)};
          break;
        }
      }
      done = true;
      for (size_t c = digits.size(); c-- > 0;) {
        if (++digits[c] < P.out_sp.alphabet) {
          done = false;
          break;
        }
        digits[c] = 0;
      }
    }
  } else {
    std::vector<std::vector<size_t>> allowed(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
      allowed[i].resize(qdom.size());
      for (size_t j = 0; j < qdom.size(); ++j) allowed[i][j] = j;
    }
    TwoTapeTransducer ht;
    auto leaf = [&](const std::vector<std::vector<int>>& image) {
      ++cert.candidates_checked;
      detail::HSolveState st;
      st.P = &P;
      st.Q = &Q;
      st.modulus = modulus;
      st.xs = xs;
      st.images.clear();
      for (size_t i = 0; i < xs.size(); ++i) st.images.push_back(Seq{Q.in_sp.alphabet, image[i]});
      st.work = &work;
      st.budget = budget;
      return detail::h_solve(st, ht);
    };
    try {
      auto st = land.run(allowed, leaf, work, budget);
      if (st == detail::LandingSearch::Status::TRUNCATED) truncated = true;
      if (st == detail::LandingSearch::Status::FOUND)
        found = {detail::materialize_k(xs, land.image, P.in_sp, Q.in_sp, modulus, budget),
                 std::move(ht)};
    } catch (const BudgetExceeded&) {
      truncated = true;
    }
  }

  // the flag certifies absence: true only when the whole candidate space was
  // covered and nothing passed
  cert.exhaustive = !truncated && !found.has_value();
  if (found) {
    if (!check_reduction(P, Q, to_witness(found->first, found->second)).holds)
      throw WitnessError("separation search produced an invalid witness");
    cert.witness = std::move(found);
  }
  return cert;
}

// Constructive side split for a choice function of an infimum: either some
// fixed left point forces the right tag everywhere (then the right problem
// has a choice function), or every left point admits a right partner with
// the left tag (then the left problem does).
struct SplitChoice {
  int side = 0;  // 0 answers P, 1 answers Q
  std::map<Seq, Seq> choice;
};

inline SplitChoice split_choice(const Problem& P, const Problem& Q, const Transducer& I) {
  Problem E = oplus(P, Q);
  if (E.top) throw TopError("split needs concrete problems");
  if (E.graph.empty()) throw PreconditionError("split needs a nonempty infimum domain");
  for (const auto& [x, vals] : E.graph)
    if (!vals.count(I.apply(x))) throw PreconditionError("not a choice function of the infimum");

  int dp = P.out_sp.depth, dq = Q.out_sp.depth;
  auto q_answer = [&](const Seq& p0, const Seq& q) {
    Seq raw = trunc_seq(shift_seq(I.apply(pair_pad(p0, q))), dq);
    return Seq{Q.out_sp.alphabet, raw.sym};
  };
  auto p_answer = [&](const Seq& p, const Seq& qp) {
    Seq raw = trunc_seq(shift_seq(I.apply(pair_pad(p, qp))), dp);
    return Seq{P.out_sp.alphabet, raw.sym};
  };

  for (const auto& [p0, _] : P.graph) {
    bool all_right = true;
    for (const auto& [q, __] : Q.graph)
      if (I.apply(pair_pad(p0, q)).sym[0] != 1) {
        all_right = false;
        break;
      }
    if (all_right) {
      SplitChoice sc;
      sc.side = 1;
      for (const auto& [q, __] : Q.graph) sc.choice[q] = q_answer(p0, q);
      auto f = [&sc](const Seq& q) { return sc.choice.at(q); };
      if (!is_choice_function(f, Q)) throw WitnessError("split produced an invalid right side");
      return sc;
    }
  }
  SplitChoice sc;
  sc.side = 0;
  for (const auto& [p, _] : P.graph) {
    const Seq* qp = nullptr;
    for (const auto& [q, __] : Q.graph)
      if (I.apply(pair_pad(p, q)).sym[0] == 0) {
        qp = &q;
        break;
      }
    if (!qp) throw WitnessError("split found no left partner");  // unreachable: negation of side 1
    sc.choice[p] = p_answer(p, *qp);
  }
  auto f = [&sc](const Seq& p) { return sc.choice.at(p); };
  if (!is_choice_function(f, P)) throw WitnessError("split produced an invalid left side");
  return sc;
}

}  // namespace wlab

#endif
