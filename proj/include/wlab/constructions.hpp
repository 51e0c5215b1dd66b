#ifndef WLAB_CONSTRUCTIONS_HPP
#define WLAB_CONSTRUCTIONS_HPP

#include <utility>
#include <vector>

#include "wlab/ops.hpp"

namespace wlab {

enum class StarDirection { LE, GE };

namespace detail {

// Shared depth bookkeeping for the constructions below. All operands of one
// construction live over one alphabet; depths differ and get padded.
struct Depths {
  int in_p, out_p, in_q, out_q;
  Depths(const Problem& P, const Problem& Q)
      : in_p(P.in_sp.depth), out_p(P.out_sp.depth), in_q(Q.in_sp.depth), out_q(Q.out_sp.depth) {}
};

inline Seq oplus_val(int side, const Seq& y, int payload_depth) {
  return tag_seq(side, pad_seq(y, payload_depth));
}

}  // namespace detail

// From a witness for P x Q <= P, build the recursive witness for
// P x star_bounded(Q, n) <= P: fold K over the listed Q-inputs, then unwind
// the answers level by level.
inline Witness witness_axiom8(const Problem& P, const Problem& Q, const Witness& w, int n) {
  {
    auto pre = check_reduction(times(P, Q), P, w);
    if (!pre.holds) {
      std::string msg = "axiom 8 hypothesis P x Q <= P fails";
      if (pre.counterexample)
        msg += " at " + show_seq(pre.counterexample->x) + " / " + show_seq(pre.counterexample->y);
      throw WitnessError(msg);
    }
  }
  Problem Qs = star_bounded(Q, n);
  int a = P.in_sp.alphabet;
  int din_p = P.in_sp.depth, dout_p = P.out_sp.depth;
  int din_q = Q.in_sp.depth, dout_q = Q.out_sp.depth;
  int din_s = Qs.in_sp.depth;

  auto decode = [=](const Seq& x) {
    auto [ph, sh] = unpair_seq(x);
    Seq p = trunc_seq(ph, din_p);
    Seq s = trunc_seq(sh, din_s);
    return std::make_pair(p, star_decode(s, din_q));
  };
  auto kprefix = [=, K = w.K](const Seq& p, const std::vector<Seq>& qs, size_t m) {
    Seq cur = p;
    for (size_t i = 0; i < m; ++i) cur = K(pair_pad(cur, qs[i]));
    return cur;
  };

  Witness out;
  out.K = [=](const Seq& x) {
    auto [p, sp] = decode(x);
    return kprefix(p, sp.parts, sp.parts.size());
  };
  out.H = [=, H = w.H](const Seq& x, const Seq& r) {
    auto [p, sp] = decode(x);
    size_t k = sp.parts.size();
    Seq cur = r;
    std::vector<Seq> h2s(k);
    // Unwind from the outermost query back to the base.
    for (size_t m = k; m >= 1; --m) {
      Seq xm = pair_pad(kprefix(p, sp.parts, m - 1), sp.parts[m - 1]);
      Seq ans = H(xm, cur);
      auto [rh, qh] = unpair_seq(ans);
      h2s[m - 1] = trunc_seq(qh, dout_q);
      cur = trunc_seq(rh, dout_p);
    }
    return pair_pad(cur, star_encode(n, dout_q, a, h2s));
  };
  return out;
}

// Witnesses for the bounded-star infimum identity. LE reduces
// star(P (+) Q, n) to star(P, n) (+) star(Q, n); GE reduces the (+) of stars
// to star(P (+) Q, n*n) via the grid construction.
inline Witness witness_oplus_star(const Problem& P, const Problem& Q, int n,
                                  StarDirection direction) {
  detail::require_same_alphabet(P, Q);
  int a = P.in_sp.alphabet;
  detail::Depths d(P, Q);
  int din_o = 2 * std::max(d.in_p, d.in_q);
  int payload_out = std::max(d.out_p, d.out_q);
  int dout_o = payload_out + 1;
  int star_in_p = 1 + std::max(1, n * d.in_p), star_out_p = 1 + std::max(1, n * d.out_p);
  int star_in_q = 1 + std::max(1, n * d.in_q), star_out_q = 1 + std::max(1, n * d.out_q);

  if (direction == StarDirection::LE) {
    Witness w;
    w.K = [=](const Seq& x) {
      StarPoint sp = star_decode(x, din_o);
      std::vector<Seq> ps, qs;
      for (const Seq& part : sp.parts) {
        auto [p, q] = unpair_trunc(part, d.in_p, d.in_q);
        ps.push_back(p);
        qs.push_back(q);
      }
      return pair_pad(star_encode(n, d.in_p, a, ps), star_encode(n, d.in_q, a, qs));
    };
    w.H = [=](const Seq&, const Seq& y) {
      int side = y.sym[0];
      int star_out = side == 0 ? star_out_p : star_out_q;
      int comp_out = side == 0 ? d.out_p : d.out_q;
      Seq v = trunc_seq(shift_seq(y), star_out);
      StarPoint sv = star_decode(v, comp_out);
      std::vector<Seq> merged;
      for (const Seq& yy : sv.parts) merged.push_back(detail::oplus_val(side, yy, payload_out));
      return star_encode(n, dout_o, a, merged);
    };
    return w;
  }

  // GE: source star(P,n) (+) star(Q,n), target star(P (+) Q, n*n).
  int grid = n * n;
  Witness w;
  auto decode_sides = [=](const Seq& x) {
    auto [s1h, s2h] = unpair_seq(x);
    StarPoint sp = star_decode(trunc_seq(s1h, star_in_p), d.in_p);
    StarPoint sq = star_decode(trunc_seq(s2h, star_in_q), d.in_q);
    return std::make_pair(sp, sq);
  };
  w.K = [=](const Seq& x) {
    auto [sp, sq] = decode_sides(x);
    if (sp.parts.empty() || sq.parts.empty()) return star_encode(grid, din_o, a, {});
    std::vector<Seq> cells;
    for (const Seq& p : sp.parts)
      for (const Seq& q : sq.parts) cells.push_back(pair_pad(p, q));
    return star_encode(grid, din_o, a, cells);
  };
  w.H = [=](const Seq& x, const Seq& y) {
    auto [sp, sq] = decode_sides(x);
    size_t k = sp.parts.size(), l = sq.parts.size();
    int dso = std::max(star_out_p, star_out_q);
    if (k == 0) return tag_seq(0, zeros({a, dso}));
    if (l == 0) return tag_seq(1, zeros({a, dso}));
    StarPoint sv = star_decode(y, dout_o);
    auto cell = [&](size_t j, size_t i) -> const Seq& { return sv.parts[j * l + i]; };
    // Either every row holds a first-side answer, or some row is entirely
    // second-side, forcing every column to hold one.
    std::vector<size_t> row_pick(k, l);
    bool all_rows = true;
    for (size_t j = 0; j < k; ++j) {
      for (size_t i = 0; i < l; ++i)
        if (cell(j, i).sym[0] == 0) {
          row_pick[j] = i;
          break;
        }
      if (row_pick[j] == l) all_rows = false;
    }
    if (all_rows) {
      std::vector<Seq> ys;
      for (size_t j = 0; j < k; ++j)
        ys.push_back(trunc_seq(shift_seq(cell(j, row_pick[j])), d.out_p));
      return tag_seq(0, pad_seq(star_encode(n, d.out_p, a, ys), dso));
    }
    std::vector<Seq> zs;
    for (size_t i = 0; i < l; ++i) {
      size_t pick = k;
      for (size_t j = 0; j < k; ++j)
        if (cell(j, i).sym[0] == 1) {
          pick = j;
          break;
        }
      if (pick == k) return tag_seq(0, zeros({a, dso}));
      zs.push_back(trunc_seq(shift_seq(cell(pick, i)), d.out_q));
    }
    return tag_seq(1, pad_seq(star_encode(n, d.out_q, a, zs), dso));
  };
  return w;
}

// Witnesses for the bounded-star supremum identity. LE splits a run of
// tagged questions into the two per-side runs; GE concatenates two runs with
// budget 2n.
inline Witness witness_coprod_star(const Problem& P, const Problem& Q, int n,
                                   StarDirection direction) {
  detail::require_same_alphabet(P, Q);
  int a = P.in_sp.alphabet;
  detail::Depths d(P, Q);
  int din_c = 1 + std::max(d.in_p, d.in_q);
  int payload_out = std::max(d.out_p, d.out_q);
  int dout_c = payload_out + 1;
  int star_in_p = 1 + std::max(1, n * d.in_p), star_out_p = 1 + std::max(1, n * d.out_p);
  int star_in_q = 1 + std::max(1, n * d.in_q), star_out_q = 1 + std::max(1, n * d.out_q);

  if (direction == StarDirection::LE) {
    Witness w;
    w.K = [=](const Seq& x) {
      StarPoint sp = star_decode(x, din_c);
      std::vector<Seq> ps, qs;
      for (const Seq& part : sp.parts) {
        if (part.sym[0] == 0)
          ps.push_back(trunc_seq(shift_seq(part), d.in_p));
        else
          qs.push_back(trunc_seq(shift_seq(part), d.in_q));
      }
      return pair_pad(star_encode(n, d.in_p, a, ps), star_encode(n, d.in_q, a, qs));
    };
    w.H = [=](const Seq& x, const Seq& y) {
      StarPoint sp = star_decode(x, din_c);
      auto [v1h, v2h] = unpair_seq(y);
      StarPoint pv = star_decode(trunc_seq(v1h, star_out_p), d.out_p);
      StarPoint qv = star_decode(trunc_seq(v2h, star_out_q), d.out_q);
      std::vector<Seq> merged;
      size_t ip = 0, iq = 0;
      for (const Seq& part : sp.parts) {
        if (part.sym[0] == 0 && ip < pv.parts.size())
          merged.push_back(detail::oplus_val(0, pv.parts[ip++], payload_out));
        else if (part.sym[0] == 1 && iq < qv.parts.size())
          merged.push_back(detail::oplus_val(1, qv.parts[iq++], payload_out));
        else
          merged.push_back(zeros({a, dout_c}));
      }
      return star_encode(n, dout_c, a, merged);
    };
    return w;
  }

  // GE: source star(P,n) x star(Q,n), target star(P (|_|) Q, 2n).
  Witness w;
  auto decode_sides = [=](const Seq& x) {
    auto [s1h, s2h] = unpair_seq(x);
    StarPoint sp = star_decode(trunc_seq(s1h, star_in_p), d.in_p);
    StarPoint sq = star_decode(trunc_seq(s2h, star_in_q), d.in_q);
    return std::make_pair(sp, sq);
  };
  w.K = [=](const Seq& x) {
    auto [sp, sq] = decode_sides(x);
    std::vector<Seq> parts;
    for (const Seq& p : sp.parts) parts.push_back(tag_seq(0, pad_seq(p, din_c - 1)));
    for (const Seq& q : sq.parts) parts.push_back(tag_seq(1, pad_seq(q, din_c - 1)));
    return star_encode(2 * n, din_c, a, parts);
  };
  w.H = [=](const Seq& x, const Seq& y) {
    auto [sp, sq] = decode_sides(x);
    size_t k = sp.parts.size(), l = sq.parts.size();
    StarPoint sv = star_decode(y, dout_c);
    std::vector<Seq> ws, zs;
    for (size_t i = 0; i < sv.parts.size() && i < k + l; ++i) {
      if (i < k)
        ws.push_back(trunc_seq(shift_seq(sv.parts[i]), d.out_p));
      else
        zs.push_back(trunc_seq(shift_seq(sv.parts[i]), d.out_q));
    }
    return pair_pad(star_encode(n, d.out_p, a, ws), star_encode(n, d.out_q, a, zs));
  };
  return w;
}

// The four distributivity reductions. Items 2 and 4 target the squared
// right-hand sides; collapsing P x P to P is the callers' star-fixedness
// hypothesis, not part of these codecs.
inline Witness witness_distributivity(int item, const Problem& P, const Problem& Q,
                                      const Problem& R) {
  if (item < 1 || item > 4) throw DimensionError("distributivity item must be 1..4");
  detail::require_same_alphabet(P, Q);
  detail::require_same_alphabet(P, R);
  int dip = P.in_sp.depth, dop = P.out_sp.depth;
  int diq = Q.in_sp.depth, doq = Q.out_sp.depth;
  int dir_ = R.in_sp.depth, dor_ = R.out_sp.depth;

  Witness w;
  switch (item) {
    case 1: {
      // P (+) (Q x R)  <=  (P (+) Q) x (P (+) R)
      int din_qr = 2 * std::max(diq, dir_);
      int dout_pq = 1 + std::max(dop, doq), dout_pr = 1 + std::max(dop, dor_);
      int payload_s = std::max(dop, 2 * std::max(doq, dor_));
      auto decode = [=](const Seq& x) {
        auto [ph, th] = unpair_seq(x);
        Seq p = trunc_seq(ph, dip);
        auto [q, r] = unpair_trunc(trunc_seq(th, din_qr), diq, dir_);
        return std::make_tuple(p, q, r);
      };
      w.K = [=](const Seq& x) {
        auto [p, q, r] = decode(x);
        return pair_pad(pair_pad(p, q), pair_pad(p, r));
      };
      w.H = [=](const Seq&, const Seq& y) {
        auto [y1h, y2h] = unpair_seq(y);
        Seq y1 = trunc_seq(y1h, dout_pq), y2 = trunc_seq(y2h, dout_pr);
        if (y1.sym[0] == 0)
          return tag_seq(0, pad_seq(trunc_seq(shift_seq(y1), dop), payload_s));
        if (y2.sym[0] == 0)
          return tag_seq(0, pad_seq(trunc_seq(shift_seq(y2), dop), payload_s));
        Seq z1 = trunc_seq(shift_seq(y1), doq), z2 = trunc_seq(shift_seq(y2), dor_);
        return tag_seq(1, pad_seq(pair_pad(z1, z2), payload_s));
      };
      break;
    }
    case 2: {
      // (P (+) Q) x (P (+) R)  <=  (P x P) (+) (Q x R)
      int din_pq = 2 * std::max(dip, diq), din_pr = 2 * std::max(dip, dir_);
      int dout_pp = 2 * dop, dout_qr = 2 * std::max(doq, dor_);
      int pay_pq = std::max(dop, doq), pay_pr = std::max(dop, dor_);
      w.K = [=](const Seq& x) {
        auto [x1h, x2h] = unpair_seq(x);
        auto [p1, q] = unpair_trunc(trunc_seq(x1h, din_pq), dip, diq);
        auto [p2, r] = unpair_trunc(trunc_seq(x2h, din_pr), dip, dir_);
        return pair_pad(pair_pad(p1, p2), pair_pad(q, r));
      };
      w.H = [=](const Seq&, const Seq& y) {
        int dtag = y.sym[0];
        Seq vh = shift_seq(y);
        if (dtag == 0) {
          auto [a1, a2] = unpair_trunc(trunc_seq(vh, dout_pp), dop, dop);
          return pair_pad(detail::oplus_val(0, a1, pay_pq), detail::oplus_val(0, a2, pay_pr));
        }
        auto [z1, z2] = unpair_trunc(trunc_seq(vh, dout_qr), doq, dor_);
        return pair_pad(detail::oplus_val(1, z1, pay_pq), detail::oplus_val(1, z2, pay_pr));
      };
      break;
    }
    case 3: {
      // P x (Q (+) R)  <=  (P x Q) (+) (P x R)
      int din_qr = 2 * std::max(diq, dir_);
      int dout_pq = 2 * std::max(dop, doq), dout_pr = 2 * std::max(dop, dor_);
      int pay_qr = std::max(doq, dor_);
      w.K = [=](const Seq& x) {
        auto [ph, th] = unpair_seq(x);
        Seq p = trunc_seq(ph, dip);
        auto [q, r] = unpair_trunc(trunc_seq(th, din_qr), diq, dir_);
        return pair_pad(pair_pad(p, q), pair_pad(p, r));
      };
      w.H = [=](const Seq&, const Seq& y) {
        int dtag = y.sym[0];
        Seq vh = shift_seq(y);
        Seq v = trunc_seq(vh, dtag == 0 ? dout_pq : dout_pr);
        auto [y1, z] = unpair_trunc(v, dop, dtag == 0 ? doq : dor_);
        return pair_pad(y1, tag_seq(dtag, pad_seq(z, pay_qr)));
      };
      break;
    }
    case 4: {
      // (P x Q) (+) (P x R)  <=  (P x P) x (Q (+) R)
      int din_pq = 2 * std::max(dip, diq), din_pr = 2 * std::max(dip, dir_);
      int dout_pp = 2 * dop, dout_qr = 1 + std::max(doq, dor_);
      int pay_s = std::max(2 * std::max(dop, doq), 2 * std::max(dop, dor_));
      w.K = [=](const Seq& x) {
        auto [x1h, x2h] = unpair_seq(x);
        auto [p1, q] = unpair_trunc(trunc_seq(x1h, din_pq), dip, diq);
        auto [p2, r] = unpair_trunc(trunc_seq(x2h, din_pr), dip, dir_);
        return pair_pad(pair_pad(p1, p2), pair_pad(q, r));
      };
      w.H = [=](const Seq&, const Seq& y) {
        auto [v1h, v2h] = unpair_seq(y);
        auto [a1, a2] = unpair_trunc(trunc_seq(v1h, dout_pp), dop, dop);
        Seq vqr = trunc_seq(v2h, dout_qr);
        int dtag = vqr.sym[0];
        Seq z = trunc_seq(shift_seq(vqr), dtag == 0 ? doq : dor_);
        return tag_seq(dtag, pad_seq(pair_pad(dtag == 0 ? a1 : a2, z), pay_s));
      };
      break;
    }
  }
  return w;
}

// Source/target builders matching the four witnesses above, shared by tests
// and the laws driver.
inline std::pair<Problem, Problem> distributivity_instance(int item, const Problem& P,
                                                           const Problem& Q, const Problem& R) {
  switch (item) {
    case 1:
      return {oplus(P, times(Q, R)), times(oplus(P, Q), oplus(P, R))};
    case 2:
      return {times(oplus(P, Q), oplus(P, R)), oplus(times(P, P), times(Q, R))};
    case 3:
      return {times(P, oplus(Q, R)), oplus(times(P, Q), times(P, R))};
    case 4:
      return {oplus(times(P, Q), times(P, R)), times(times(P, P), oplus(Q, R))};
    default:
      throw DimensionError("distributivity item must be 1..4");
  }
}

inline std::pair<Problem, Problem> oplus_star_instance(const Problem& P, const Problem& Q, int n,
                                                       StarDirection direction) {
  if (direction == StarDirection::LE)
    return {star_bounded(oplus(P, Q), n), oplus(star_bounded(P, n), star_bounded(Q, n))};
  return {oplus(star_bounded(P, n), star_bounded(Q, n)), star_bounded(oplus(P, Q), n * n)};
}

inline std::pair<Problem, Problem> coprod_star_instance(const Problem& P, const Problem& Q, int n,
                                                        StarDirection direction) {
  if (direction == StarDirection::LE)
    return {star_bounded(coprod(P, Q), n), times(star_bounded(P, n), star_bounded(Q, n))};
  return {times(star_bounded(P, n), star_bounded(Q, n)), star_bounded(coprod(P, Q), 2 * n)};
}

}  // namespace wlab

#endif
