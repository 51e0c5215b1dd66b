#ifndef WLAB_TRANSDUCER_HPP
#define WLAB_TRANSDUCER_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "wlab/space.hpp"
#include "wlab/errors.hpp"

namespace wlab {

// Finite-lookahead map between truncated spaces: output position k depends
// only on input symbols 0..min(k+modulus, depth-1). The per-position tables
// make the dependence structural rather than asserted.
struct Transducer {
  SpaceSpec in_sp{2, 1}, out_sp{2, 1};
  int modulus = 0;
  std::vector<std::vector<int>> table;  // [k][prefix_index] -> output symbol

  int prefix_len(int k) const { return std::min(k + modulus + 1, in_sp.depth); }

  std::uint64_t prefix_index(const Seq& x, int k) const {
    int len = prefix_len(k);
    std::uint64_t idx = 0;
    for (int i = 0; i < len; ++i) idx = idx * static_cast<std::uint64_t>(in_sp.alphabet) + x.sym[i];
    return idx;
  }

  Seq apply(const Seq& x) const {
    std::vector<int> out(static_cast<size_t>(out_sp.depth));
    for (int k = 0; k < out_sp.depth; ++k)
      out[static_cast<size_t>(k)] = table[static_cast<size_t>(k)][prefix_index(x, k)];
    return Seq{out_sp.alphabet, std::move(out)};
  }
};

namespace detail {
inline std::uint64_t pow_sat(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  if (base <= 1) return exp == 0 ? 1 : base;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap;
    r *= base;
  }
  return r;
}
}  // namespace detail

// Number of modulus-bounded transducers between the spaces, saturating at
// kSizeCap when the true count exceeds it.
inline std::uint64_t transducer_count(const SpaceSpec& in_sp, const SpaceSpec& out_sp,
                                      int modulus) {
  in_sp.validate();
  out_sp.validate();
  if (modulus < 0) throw DimensionError("modulus must be >= 0");
  const std::uint64_t cap = SpaceSpec::kSizeCap;
  std::uint64_t total = 1;
  for (int k = 0; k < out_sp.depth; ++k) {
    int len = std::min(k + modulus + 1, in_sp.depth);
    std::uint64_t prefixes = detail::pow_sat(in_sp.alphabet, static_cast<std::uint64_t>(len), cap);
    std::uint64_t block = detail::pow_sat(out_sp.alphabet, prefixes, cap);
    if (block >= cap || total > cap / std::max<std::uint64_t>(block, 1)) return cap;
    total *= block;
  }
  return total;
}

// Canonical transducer for a given index: tables read as one mixed-radix
// numeral, position 0 / prefix 0 most significant, so ascending index is
// lexicographic table order.
inline Transducer transducer_at(const SpaceSpec& in_sp, const SpaceSpec& out_sp, int modulus,
                                std::uint64_t index) {
  Transducer t;
  t.in_sp = in_sp;
  t.out_sp = out_sp;
  t.modulus = modulus;
  std::vector<std::uint64_t> sizes;
  for (int k = 0; k < out_sp.depth; ++k) {
    int len = std::min(k + modulus + 1, in_sp.depth);
    sizes.push_back(detail::pow_sat(in_sp.alphabet, static_cast<std::uint64_t>(len),
                                    SpaceSpec::kSizeCap));
  }
  std::uint64_t total_cells = 0;
  for (std::uint64_t s : sizes) total_cells += s;
  std::vector<int> digits(static_cast<size_t>(total_cells));
  for (size_t c = digits.size(); c-- > 0;) {
    digits[c] = static_cast<int>(index % static_cast<std::uint64_t>(out_sp.alphabet));
    index /= static_cast<std::uint64_t>(out_sp.alphabet);
  }
  size_t at = 0;
  for (int k = 0; k < out_sp.depth; ++k) {
    t.table.emplace_back(digits.begin() + static_cast<long>(at),
                         digits.begin() + static_cast<long>(at + sizes[static_cast<size_t>(k)]));
    at += sizes[static_cast<size_t>(k)];
  }
  return t;
}

inline std::vector<Transducer> enumerate_transducers(const SpaceSpec& in_sp,
                                                     const SpaceSpec& out_sp, int modulus,
                                                     std::uint64_t budget = 1u << 20) {
  std::uint64_t n = transducer_count(in_sp, out_sp, modulus);
  if (n > budget)
    throw BudgetExceeded("transducer enumeration size " + std::to_string(n) +
                         " exceeds budget " + std::to_string(budget));
  std::vector<Transducer> out;
  out.reserve(static_cast<size_t>(n));
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(transducer_at(in_sp, out_sp, modulus, i));
  return out;
}

// Lookahead map consuming two tapes at once: output position k reads
// x[0..min(k+modulus, dx-1)] and y[0..min(k+modulus, dy-1)]. The modulus is
// per component, matching the product topology on pairs.
struct TwoTapeTransducer {
  SpaceSpec x_sp{2, 1}, y_sp{2, 1}, out_sp{2, 1};
  int modulus = 0;
  std::vector<std::vector<int>> table;  // [k][x_prefix * n_y_prefixes + y_prefix]

  int x_len(int k) const { return std::min(k + modulus + 1, x_sp.depth); }
  int y_len(int k) const { return std::min(k + modulus + 1, y_sp.depth); }

  std::uint64_t cell_index(const Seq& x, const Seq& y, int k) const {
    std::uint64_t xi = 0, yi = 0, ny = 1;
    for (int i = 0; i < x_len(k); ++i) xi = xi * static_cast<std::uint64_t>(x_sp.alphabet) + x.sym[i];
    for (int i = 0; i < y_len(k); ++i) {
      yi = yi * static_cast<std::uint64_t>(y_sp.alphabet) + y.sym[i];
      ny *= static_cast<std::uint64_t>(y_sp.alphabet);
    }
    return xi * ny + yi;
  }

  Seq apply(const Seq& x, const Seq& y) const {
    std::vector<int> out(static_cast<size_t>(out_sp.depth));
    for (int k = 0; k < out_sp.depth; ++k)
      out[static_cast<size_t>(k)] = table[static_cast<size_t>(k)][cell_index(x, y, k)];
    return Seq{out_sp.alphabet, std::move(out)};
  }
};

}  // namespace wlab

#endif
