#ifndef WLAB_SPACE_HPP
#define WLAB_SPACE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "wlab/errors.hpp"

namespace wlab {

// A finite truncation of Baire space: all sequences of `depth` symbols drawn
// from {0, ..., alphabet-1}.
struct SpaceSpec {
  int alphabet = 2;
  int depth = 1;

  friend auto operator<=>(const SpaceSpec&, const SpaceSpec&) = default;

  void validate() const {
    if (alphabet < 1) throw AlphabetError("alphabet must be >= 1");
    if (depth < 1) throw DimensionError("depth must be >= 1");
  }

  // Saturating point count; anything above the cap is reported as the cap.
  static constexpr std::uint64_t kSizeCap = UINT64_C(1) << 62;
  std::uint64_t size() const {
    std::uint64_t n = 1;
    for (int i = 0; i < depth; ++i) {
      if (n > kSizeCap / static_cast<std::uint64_t>(alphabet)) return kSizeCap;
      n *= static_cast<std::uint64_t>(alphabet);
    }
    return n;
  }
};

// A point of a finite space. Symbols are stored most-significant first, so the
// default ordering doubles as the canonical (lexicographic) point order.
struct Seq {
  int alphabet = 2;
  std::vector<int> sym;

  Seq() = default;
  Seq(int a, std::vector<int> s) : alphabet(a), sym(std::move(s)) {}

  int depth() const { return static_cast<int>(sym.size()); }
  SpaceSpec space() const { return {alphabet, depth()}; }
  bool in_space(const SpaceSpec& sp) const {
    if (alphabet != sp.alphabet || depth() != sp.depth) return false;
    for (int v : sym)
      if (v < 0 || v >= alphabet) return false;
    return true;
  }

  friend auto operator<=>(const Seq&, const Seq&) = default;
};

inline Seq zeros(const SpaceSpec& sp) {
  return Seq(sp.alphabet, std::vector<int>(static_cast<size_t>(sp.depth), 0));
}

inline Seq ones(const SpaceSpec& sp) {
  if (sp.alphabet < 2) throw AlphabetError("all-ones point needs alphabet >= 2");
  return Seq(sp.alphabet, std::vector<int>(static_cast<size_t>(sp.depth), 1));
}

inline bool is_all_zero(const Seq& s) {
  for (int v : s.sym)
    if (v != 0) return false;
  return true;
}

// Canonical index of a point: base-`alphabet` digits, sym[0] most significant.
inline std::uint64_t index_of(const Seq& s) {
  std::uint64_t idx = 0;
  for (int v : s.sym) idx = idx * static_cast<std::uint64_t>(s.alphabet) + static_cast<std::uint64_t>(v);
  return idx;
}

inline Seq seq_at(const SpaceSpec& sp, std::uint64_t index) {
  Seq s = zeros(sp);
  for (int i = sp.depth - 1; i >= 0; --i) {
    s.sym[static_cast<size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(sp.alphabet));
    index /= static_cast<std::uint64_t>(sp.alphabet);
  }
  return s;
}

inline std::vector<Seq> all_points(const SpaceSpec& sp, std::uint64_t cap = UINT64_C(1) << 22) {
  std::uint64_t n = sp.size();
  if (n > cap) throw BudgetExceeded("space of " + std::to_string(n) + " points exceeds enumeration cap");
  std::vector<Seq> pts;
  pts.reserve(static_cast<size_t>(n));
  for (std::uint64_t i = 0; i < n; ++i) pts.push_back(seq_at(sp, i));
  return pts;
}

// ---- Codecs ----------------------------------------------------------------
// All pairings are round-robin interleavings, so prefixes of the code cover
// prefixes of every component.

inline Seq pair_seq(const Seq& p, const Seq& q) {
  if (p.alphabet != q.alphabet) throw AlphabetError("pair of mixed alphabets");
  if (p.depth() != q.depth()) throw DimensionError("pair of unequal depths");
  Seq r(p.alphabet, std::vector<int>(p.sym.size() * 2, 0));
  for (size_t i = 0; i < p.sym.size(); ++i) {
    r.sym[2 * i] = p.sym[i];
    r.sym[2 * i + 1] = q.sym[i];
  }
  return r;
}

inline std::pair<Seq, Seq> unpair_seq(const Seq& r) {
  if (r.depth() % 2 != 0) throw DimensionError("unpair of odd depth");
  size_t half = r.sym.size() / 2;
  Seq p(r.alphabet, std::vector<int>(half, 0)), q(r.alphabet, std::vector<int>(half, 0));
  for (size_t i = 0; i < half; ++i) {
    p.sym[i] = r.sym[2 * i];
    q.sym[i] = r.sym[2 * i + 1];
  }
  return {p, q};
}

inline Seq tuple_seq(const std::vector<Seq>& parts) {
  if (parts.empty()) throw DimensionError("tuple of zero width");
  size_t w = parts.size(), d = parts[0].sym.size();
  for (const Seq& p : parts) {
    if (p.alphabet != parts[0].alphabet) throw AlphabetError("tuple of mixed alphabets");
    if (p.sym.size() != d) throw DimensionError("tuple of unequal depths");
  }
  Seq r(parts[0].alphabet, std::vector<int>(w * d, 0));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < w; ++j) r.sym[i * w + j] = parts[j].sym[i];
  return r;
}

inline std::vector<Seq> untuple_seq(const Seq& r, int width) {
  if (width < 1) throw DimensionError("untuple of zero width");
  if (r.depth() % width != 0) throw DimensionError("untuple depth not divisible by width");
  size_t w = static_cast<size_t>(width), d = r.sym.size() / w;
  std::vector<Seq> parts(w, Seq(r.alphabet, std::vector<int>(d, 0)));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < w; ++j) parts[j].sym[i] = r.sym[i * w + j];
  return parts;
}

inline Seq tag_seq(int symbol, const Seq& p) {
  if (symbol < 0 || symbol >= p.alphabet) throw AlphabetError("tag symbol outside alphabet");
  Seq r(p.alphabet, {});
  r.sym.reserve(p.sym.size() + 1);
  r.sym.push_back(symbol);
  r.sym.insert(r.sym.end(), p.sym.begin(), p.sym.end());
  return r;
}

inline Seq shift_seq(const Seq& p) {
  if (p.depth() < 2) throw DimensionError("shift needs depth >= 2");
  return Seq(p.alphabet, std::vector<int>(p.sym.begin() + 1, p.sym.end()));
}

inline Seq pad_seq(const Seq& p, int depth) {
  if (depth < p.depth()) throw DimensionError("pad target shallower than input");
  Seq r = p;
  r.sym.resize(static_cast<size_t>(depth), 0);
  return r;
}

inline Seq trunc_seq(const Seq& p, int depth) {
  if (depth < 1 || depth > p.depth()) throw DimensionError("truncation depth out of range");
  return Seq(p.alphabet, std::vector<int>(p.sym.begin(), p.sym.begin() + depth));
}

inline std::string show_seq(const Seq& s) {
  std::string out;
  for (size_t i = 0; i < s.sym.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(s.sym[i]);
  }
  return out;
}

}  // namespace wlab

#endif
