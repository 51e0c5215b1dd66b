#ifndef WLAB_WITNESS_CLASS_HPP
#define WLAB_WITNESS_CLASS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wlab/ops.hpp"
#include "wlab/problem.hpp"
#include "wlab/transducer.hpp"

namespace wlab {

// Canonical coding of a two-argument input: both components padded to the
// common depth, then interleaved.
inline SpaceSpec pair_space(const SpaceSpec& x, const SpaceSpec& y) {
  if (x.alphabet != y.alphabet) throw DimensionError("pair components must share one alphabet");
  return {x.alphabet, 2 * std::max(x.depth, y.depth)};
}

// A named total map contributed to a clone. Builtins (empty table) apply at
// every space signature that fits their shape; table generators carry one
// fixed signature.
struct CloneGenerator {
  std::string name;
  SpaceSpec in{2, 1}, out{2, 1};
  std::map<Seq, Seq> table;  // empty marks a builtin

  bool is_builtin() const { return table.empty(); }
};

inline CloneGenerator table_generator(std::string name, SpaceSpec in, SpaceSpec out,
                                      std::map<Seq, Seq> table) {
  for (const Seq& x : all_points(in))
    if (!table.count(x)) throw ClassError("generator " + name + " is not total");
  for (const auto& [x, y] : table)
    if (!x.in_space(in) || !y.in_space(out))
      throw ClassError("generator " + name + " leaves its spaces");
  return CloneGenerator{std::move(name), in, out, std::move(table)};
}

inline CloneGenerator builtin_generator(std::string name) {
  static const std::set<std::string> known{"shift", "pad",    "trunc", "dup",
                                           "swap",  "const0", "const1"};
  if (!known.count(name)) throw ClassError("unknown builtin generator " + name);
  return CloneGenerator{std::move(name), {2, 1}, {2, 1}, {}};
}

// The admissible-witness universe a reducibility query is relative to.
struct WitnessClass {
  enum class Kind { ALL, MODULUS, CLONE };
  Kind kind = Kind::ALL;
  int modulus = 0;
  std::vector<CloneGenerator> generators;
  int composition_depth = 3;
  std::uint64_t member_budget = 1u << 20;

  static WitnessClass all() { return {}; }
  static WitnessClass with_modulus(int m) {
    WitnessClass c;
    c.kind = Kind::MODULUS;
    c.modulus = m;
    return c;
  }
  static WitnessClass clone_of(std::vector<CloneGenerator> gens, int depth) {
    WitnessClass c;
    c.kind = Kind::CLONE;
    c.generators = std::move(gens);
    c.composition_depth = depth;
    return c;
  }
};

struct ClassMember {
  std::string name;
  std::function<Seq(const Seq&)> map;
};

namespace cl {

// One clone element over a signature, stored extensionally: table[i] is the
// out-space index of the image of the i-th in-space point.
struct Fn {
  std::vector<std::uint32_t> table;
  std::string desc;
};

struct Universe {
  int alphabet = 2;
  int max_depth = 1;
  std::uint64_t size_cap = 1u << 16;
  // funcs[din][dout][level] in canonical order; dedupe across levels.
  std::map<std::pair<int, int>, std::vector<std::vector<Fn>>> levels;
  std::map<std::pair<int, int>, std::set<std::vector<std::uint32_t>>> seen;

  bool fits(int d) const {
    return d >= 1 && d <= max_depth && SpaceSpec{alphabet, d}.size() <= size_cap;
  }
};

inline void add_fn(Universe& u, int din, int dout, std::vector<std::vector<Fn>>& lv, int level,
                   std::vector<std::uint32_t> table, std::string desc) {
  auto& dd = u.seen[{din, dout}];
  if (dd.count(table)) return;
  dd.insert(table);
  lv[static_cast<size_t>(level)].push_back(Fn{std::move(table), std::move(desc)});
}

inline std::uint64_t total_fns(const Universe& u) {
  std::uint64_t n = 0;
  for (const auto& [sig, lvls] : u.levels)
    for (const auto& l : lvls) n += l.size();
  return n;
}

// Generators plus identity, projections and tagging, then composition and
// pairing up to the depth bound, every space drawn from depths 1..max_depth.
inline Universe build_universe(const WitnessClass& cls, int alphabet, int max_depth) {
  Universe u;
  u.alphabet = alphabet;
  u.max_depth = max_depth;
  u.size_cap = cls.member_budget;

  auto points = [&](int d) { return all_points({alphabet, d}); };
  int levels_n = cls.composition_depth + 1;
  for (int din = 1; din <= max_depth; ++din)
    for (int dout = 1; dout <= max_depth; ++dout)
      if (u.fits(din) && u.fits(dout))
        u.levels[{din, dout}].assign(static_cast<size_t>(levels_n), {});

  // Atoms. Order: generators by list position, then id, proj0, proj1, tags.
  for (auto& [sig, lv] : u.levels) {
    auto [din, dout] = sig;
    SpaceSpec A{alphabet, din}, B{alphabet, dout};
    auto ins = points(din);
    auto mk = [&](auto&& f, const std::string& desc) {
      std::vector<std::uint32_t> t(ins.size());
      for (size_t i = 0; i < ins.size(); ++i) t[i] = static_cast<std::uint32_t>(index_of(f(ins[i])));
      add_fn(u, din, dout, lv, 0, std::move(t), desc);
    };
    for (const auto& g : cls.generators) {
      if (!g.is_builtin()) {
        if (g.in.alphabet == alphabet && g.out.alphabet == alphabet && g.in.depth == din &&
            g.out.depth == dout)
          mk([&](const Seq& x) { return g.table.at(x); }, g.name);
        continue;
      }
      const std::string& n = g.name;
      if (n == "shift" && din >= 2 && dout == din - 1)
        mk([&](const Seq& x) { return shift_seq(x); }, n);
      else if (n == "pad" && dout == din + 1)
        mk([&](const Seq& x) { return pad_seq(x, dout); }, n);
      else if (n == "trunc" && din >= 2 && dout == din - 1)
        mk([&](const Seq& x) { return trunc_seq(x, dout); }, n);
      else if (n == "dup" && dout == 2 * din)
        mk([&](const Seq& x) { return pair_seq(x, x); }, n);
      else if (n == "swap" && din == dout && din % 2 == 0)
        mk([&](const Seq& x) {
          auto [p, q] = unpair_seq(x);
          return pair_seq(q, p);
        }, n);
      else if (n == "const0")
        mk([&](const Seq&) { return zeros(B); }, n + "_" + std::to_string(dout));
      else if (n == "const1")
        mk([&](const Seq&) { return ones(B); }, n + "_" + std::to_string(dout));
      else if (n != "shift" && n != "pad" && n != "trunc" && n != "dup" && n != "swap" &&
               n != "const0" && n != "const1")
        throw ClassError("unknown builtin generator " + n);
    }
    if (din == dout) mk([&](const Seq& x) { return x; }, "id");
    if (din % 2 == 0 && dout == din / 2) {
      mk([&](const Seq& x) { return unpair_seq(x).first; }, "proj0");
      mk([&](const Seq& x) { return unpair_seq(x).second; }, "proj1");
    }
    if (dout == din + 1)
      for (int c = 0; c < alphabet; ++c)
        mk([&](const Seq& x) { return tag_seq(c, x); }, "tag" + std::to_string(c));
  }

  // Combinators, level by level.
  for (int level = 1; level <= cls.composition_depth; ++level) {
    for (auto& [sig, lv] : u.levels) {
      auto [din, dout] = sig;
      // compose(second, first): route through every mid depth.
      for (int dmid = 1; dmid <= max_depth; ++dmid) {
        if (!u.fits(dmid)) continue;
        auto itf = u.levels.find({din, dmid});
        auto itg = u.levels.find({dmid, dout});
        if (itf == u.levels.end() || itg == u.levels.end()) continue;
        for (int i = 0; i < level; ++i) {
          int j = level - 1 - i;
          for (const Fn& f : itf->second[static_cast<size_t>(i)])
            for (const Fn& g : itg->second[static_cast<size_t>(j)]) {
              std::vector<std::uint32_t> t(f.table.size());
              for (size_t x = 0; x < t.size(); ++x) t[x] = g.table[f.table[x]];
              add_fn(u, din, dout, lv, level, std::move(t),
                     "comp(" + g.desc + "," + f.desc + ")");
            }
        }
      }
      // pairing: target depth must be 2*max(d1,d2).
      if (din >= 1 && dout % 2 == 0) {
        int half = dout / 2;
        for (int d1 = 1; d1 <= half; ++d1)
          for (int d2 = 1; d2 <= half; ++d2) {
            if (std::max(d1, d2) != half || !u.fits(d1) || !u.fits(d2)) continue;
            auto it1 = u.levels.find({din, d1});
            auto it2 = u.levels.find({din, d2});
            if (it1 == u.levels.end() || it2 == u.levels.end()) continue;
            auto outs1 = all_points({alphabet, d1});
            auto outs2 = all_points({alphabet, d2});
            for (int i = 0; i < level; ++i) {
              int j = level - 1 - i;
              for (const Fn& f : it1->second[static_cast<size_t>(i)])
                for (const Fn& g : it2->second[static_cast<size_t>(j)]) {
                  std::vector<std::uint32_t> t(f.table.size());
                  for (size_t x = 0; x < t.size(); ++x)
                    t[x] = static_cast<std::uint32_t>(
                        index_of(pair_pad(outs1[f.table[x]], outs2[g.table[x]])));
                  add_fn(u, din, dout, lv, level, std::move(t),
                         "pair(" + f.desc + "," + g.desc + ")");
                }
            }
          }
      }
      if (total_fns(u) > cls.member_budget)
        throw BudgetExceeded("clone enumeration exceeds member budget");
    }
  }
  return u;
}

}  // namespace cl

// All class members with the given signature, in canonical order.
inline std::vector<ClassMember> class_members(const WitnessClass& cls, const SpaceSpec& in_sp,
                                              const SpaceSpec& out_sp) {
  in_sp.validate();
  out_sp.validate();
  if (cls.kind == WitnessClass::Kind::ALL)
    throw ClassError("ALL has no finite member enumeration");
  std::vector<ClassMember> out;
  if (cls.kind == WitnessClass::Kind::MODULUS) {
    auto ts = enumerate_transducers(in_sp, out_sp, cls.modulus, cls.member_budget);
    for (size_t i = 0; i < ts.size(); ++i) {
      auto t = std::make_shared<Transducer>(std::move(ts[i]));
      out.push_back({"t" + std::to_string(i), [t](const Seq& x) { return t->apply(x); }});
    }
    return out;
  }
  if (in_sp.alphabet != out_sp.alphabet)
    throw ClassError("clone signatures use one alphabet");
  int max_depth = std::max(in_sp.depth, out_sp.depth);
  for (const auto& g : cls.generators)
    if (!g.is_builtin()) max_depth = std::max({max_depth, g.in.depth, g.out.depth});
  if (in_sp.size() > cls.member_budget || out_sp.size() > cls.member_budget)
    throw BudgetExceeded("clone signature space exceeds member budget");
  cl::Universe u = cl::build_universe(cls, in_sp.alphabet, max_depth);
  auto it = u.levels.find({in_sp.depth, out_sp.depth});
  if (it == u.levels.end()) return out;
  auto ins = all_points(in_sp);
  auto outs = all_points(out_sp);
  for (const auto& level : it->second)
    for (const cl::Fn& f : level) {
      auto tbl = std::make_shared<std::vector<std::uint32_t>>(f.table);
      SpaceSpec osp = out_sp;
      out.push_back({f.desc, [tbl, osp](const Seq& x) {
                       return seq_at(osp, (*tbl)[static_cast<size_t>(index_of(x))]);
                     }});
    }
  return out;
}

// Locate a map in the class by extension over the whole signature space.
inline std::optional<std::size_t> find_member(const WitnessClass& cls, const SpaceSpec& in_sp,
                                              const SpaceSpec& out_sp,
                                              const std::function<Seq(const Seq&)>& f) {
  auto ms = class_members(cls, in_sp, out_sp);
  auto pts = all_points(in_sp);
  for (size_t i = 0; i < ms.size(); ++i) {
    bool same = true;
    for (const Seq& x : pts)
      if (ms[i].map(x) != f(x)) {
        same = false;
        break;
      }
    if (same) return i;
  }
  return std::nullopt;
}

// A witness found inside a class: raw member maps plus their canonical
// indices. The H member reads the canonical pairing of source input and
// target answer.
struct ClassWitness {
  std::size_t k_index = 0, h_index = 0;
  std::function<Seq(const Seq&)> k_map, h_map;
  int pair_depth = 1;

  Witness to_witness() const {
    auto h = h_map;
    int w = pair_depth;
    return Witness{k_map, [h, w](const Seq& x, const Seq& y) {
                     int a = std::max(x.alphabet, y.alphabet);
                     Seq xl{a, x.sym}, yl{a, y.sym};
                     return h(pair_seq(pad_seq(xl, w), pad_seq(yl, w)));
                   }};
  }
};

struct SearchResult {
  std::optional<ClassWitness> witness;
  bool exhaustive = true;
  std::uint64_t candidates_checked = 0;

  bool holds() const { return witness.has_value(); }
};

struct SearchOptions {
  std::uint64_t budget = 1u << 20;
};

// Canonically-first witness for P <= Q inside the class. Under ALL the
// first witness is constructed directly (constant K to the least target
// domain point, H answering the least source value); under MODULUS/CLONE
// members are scanned in canonical order, K-major.
inline SearchResult reduction_search(const Problem& P, const Problem& Q, const WitnessClass& cls,
                                     SearchOptions opts = {}) {
  SearchResult res;
  if (Q.top) {
    res.witness = ClassWitness{0, 0, [](const Seq& x) { return x; },
                               [](const Seq& x) { return x; }, 1};
    res.candidates_checked = 0;
    return res;
  }
  if (P.top) return res;

  if (cls.kind == WitnessClass::Kind::ALL) {
    res.candidates_checked = 1;
    if (!P.graph.empty() && Q.graph.empty()) return res;
    auto Pp = std::make_shared<const Problem>(P);
    Seq qmin = Q.graph.empty() ? zeros(Q.in_sp) : Q.graph.begin()->first;
    Seq fallback = zeros(P.out_sp);
    int dpin = P.in_sp.depth;
    ClassWitness cw;
    cw.pair_depth = std::max(P.in_sp.depth, Q.out_sp.depth);
    int ain = P.in_sp.alphabet;
    cw.k_map = [qmin](const Seq&) { return qmin; };
    cw.h_map = [Pp, fallback, dpin, ain](const Seq& z) {
      Seq lifted = trunc_seq(unpair_seq(z).first, dpin);
      Seq x{ain, lifted.sym};
      auto it = Pp->graph.find(x);
      return it == Pp->graph.end() ? fallback : *it->second.begin();
    };
    res.witness = std::move(cw);
    return res;
  }

  auto kms = class_members(cls, P.in_sp, Q.in_sp);
  auto hms = class_members(cls, pair_space(P.in_sp, Q.out_sp), P.out_sp);
  int w = std::max(P.in_sp.depth, Q.out_sp.depth);
  for (size_t i = 0; i < kms.size(); ++i) {
    if (++res.candidates_checked > opts.budget) {
      res.exhaustive = false;
      return res;
    }
    bool lands = true;
    for (const auto& [x, _] : P.graph)
      if (!Q.graph.count(kms[i].map(x))) {
        lands = false;
        break;
      }
    if (!lands) continue;
    for (size_t j = 0; j < hms.size(); ++j) {
      if (++res.candidates_checked > opts.budget) {
        res.exhaustive = false;
        return res;
      }
      ClassWitness cw{i, j, kms[i].map, hms[j].map, w};
      if (check_reduction(P, Q, cw.to_witness()).holds) {
        res.witness = std::move(cw);
        return res;
      }
    }
  }
  return res;
}

}  // namespace wlab

#endif
