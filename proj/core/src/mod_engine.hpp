#pragma once

// Streaming evaluation of a recurrence mod m. A cursor at position k holds
// the state (k mod m, u_k, ..., u_{k+r-1}); step() derives u_{k+r} from the
// coefficient polynomials evaluated at k + r. Two interchangeable coefficient
// sources:
//   * table mode (m small): P_i(j) mod m precomputed for every residue class
//     j, one row load per step;
//   * difference mode: per-polynomial forward-difference rows, a few modular
//     additions per step, O(deg) memory.
// Cursors are plain value types; copying one is how cycle detection
// teleports.

#include <cstdint>
#include <numeric>
#include <vector>

#include "holoperiod/errors.hpp"
#include "holoperiod/modnum.hpp"
#include "holoperiod/recurrence.hpp"

namespace holoperiod::detail {

class ModEngine {
 public:
  ModEngine(const Recurrence& rec, std::uint64_t m);

  struct Cursor {
    std::uint64_t index = 0;  // k: window holds u_k .. u_{k+r-1}
    std::uint64_t jk = 0;     // k mod m
    std::uint64_t ji = 0;     // (k + r) mod m
    std::vector<std::uint64_t> window;
    std::vector<std::vector<std::uint64_t>> diffs;  // empty in table mode
  };

  Cursor make_cursor() const;

  void step(Cursor& c) const {
    if (hot_) {
      // order-2 family shape: one fused row load, one Barrett reduction
      const std::uint64_t* row = &coef_table_[c.ji * 2];
      std::uint64_t val = bar_.reduce(row[0] * c.window[1] + row[1] * c.window[0]);
      c.window[0] = c.window[1];
      c.window[1] = val;
      ++c.index;
      c.jk = c.jk + 1 == m_ ? 0 : c.jk + 1;
      c.ji = c.ji + 1 == m_ ? 0 : c.ji + 1;
      return;
    }
    std::uint64_t val;
    if (fast_sum_) {
      std::uint64_t acc = 0;
      for (unsigned t = 1; t <= r_; ++t)
        acc += coefficient(c, t - 1) * c.window[r_ - t];
      val = bar_.reduce(acc);
    } else {
      unsigned __int128 acc = 0;
      for (unsigned t = 1; t <= r_; ++t)
        acc += static_cast<unsigned __int128>(coefficient(c, t - 1)) *
               c.window[r_ - t];
      val = static_cast<std::uint64_t>(acc % m_);
    }
    if (!p0_unit_ && m_ > 1) val = apply_leading_inverse(c, val);
    if (!table_mode_) advance_tables(c);
    for (unsigned t = 0; t + 1 < r_; ++t) c.window[t] = c.window[t + 1];
    c.window[r_ - 1] = val;
    ++c.index;
    c.jk = c.jk + 1 == m_ ? 0 : c.jk + 1;
    c.ji = c.ji + 1 == m_ ? 0 : c.ji + 1;
  }

  void advance(Cursor& c, std::uint64_t steps) const {
    for (std::uint64_t i = 0; i < steps; ++i) step(c);
  }

  std::uint64_t front(const Cursor& c) const { return c.window[0]; }

  bool same_state(const Cursor& a, const Cursor& b) const {
    return a.jk == b.jk && a.window == b.window;
  }

  std::uint64_t modulus() const { return m_; }
  unsigned order() const { return r_; }

 private:
  std::uint64_t coefficient(const Cursor& c, unsigned t) const {
    return table_mode_ ? coef_table_[c.ji * r_ + t] : c.diffs[t][0];
  }

  void advance_tables(Cursor& c) const {
    for (auto& row : c.diffs)
      for (std::size_t k = 0; k + 1 < row.size(); ++k)
        row[k] = add_mod(row[k], row[k + 1], m_);
  }

  std::uint64_t apply_leading_inverse(const Cursor& c, std::uint64_t val) const;

  std::uint64_t m_;
  Barrett bar_;
  unsigned r_;
  bool p0_unit_;
  bool table_mode_;
  bool fast_sum_;
  bool hot_ = false;  // r == 2, unit P0, table mode, single-word sums
  std::vector<std::uint64_t> coef_table_;  // [j * r + (t-1)] = P_t(j) mod m
  std::vector<std::uint64_t> p0_table_;
  std::vector<std::uint64_t> p0_inv_;      // 0 marks a non-invertible class
  std::vector<std::vector<std::uint64_t>> polys_;  // reduced P1..Pr (+ P0)
  std::vector<std::uint64_t> init_;
};

/// u_{n+period} == u_n for all n in [start, start+span), via two cursors
/// offset by the candidate period.
inline bool streaming_verify(const ModEngine& engine, std::uint64_t period,
                             std::uint64_t start, std::uint64_t span) {
  auto a = engine.make_cursor();
  for (std::uint64_t i = 0; i < start; ++i) engine.step(a);
  auto b = a;
  for (std::uint64_t i = 0; i < period; ++i) engine.step(b);
  for (std::uint64_t i = 0; i < span; ++i) {
    if (engine.front(a) != engine.front(b)) return false;
    engine.step(a);
    engine.step(b);
  }
  return true;
}

}  // namespace holoperiod::detail
