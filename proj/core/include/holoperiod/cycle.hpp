#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "holoperiod/recurrence.hpp"

namespace holoperiod {

enum class Method { brute, fast, both_agree };

std::string method_name(Method m);

struct CycleStats {
  std::uint64_t lambda = 0;  // state-cycle length
  std::uint64_t mu = 0;      // state-cycle tail

  friend bool operator==(const CycleStats&, const CycleStats&) = default;
};

/// Eventual period T_m and minimal preperiod n_m of a sequence mod m.
/// For brute-force results the underlying state-cycle shape is attached;
/// T_m always divides lambda and n_m <= mu.
struct PeriodResult {
  std::uint64_t modulus = 1;
  std::uint64_t period = 1;     // T_m >= 1
  std::uint64_t preperiod = 0;  // n_m (an upper bound for fast results)
  Method method = Method::brute;
  std::optional<CycleStats> cycle;
};

struct DetectOptions {
  /// Hard cap on state-map applications; the state space is bounded by
  /// m^(r+1) and the period by m^(2r), so runaway walks indicate an input
  /// out of practical reach.
  std::uint64_t max_steps = std::uint64_t{1} << 33;
  /// Largest cycle window materialized for minimality analysis; longer
  /// cycles fall back to streaming divisor checks.
  std::uint64_t window_limit = std::uint64_t{1} << 27;
};

/// Brute-force period detection: Brent's cycle search on the deterministic
/// state map s_n = (n mod m, u_n, ..., u_{n+r-1}), then minimal-period
/// analysis of the value word over one full cycle and a backward scan for the
/// minimal preperiod.
PeriodResult detect_period(const Recurrence& rec, std::uint64_t m,
                           const DetectOptions& opts = {});

/// Smallest d with window[i] = window[(i + d) mod len] for all i, given that
/// the window spans one full cycle of the periodic part; d divides len.
std::uint64_t minimal_word_period(std::span<const std::uint64_t> window);

/// Streaming check of u_{n+period} = u_n mod m for n in [start, start+span);
/// O(span) time, O(r) memory.
bool verify_period(const Recurrence& rec, std::uint64_t m,
                   std::uint64_t period, std::uint64_t start,
                   std::uint64_t span);

}  // namespace holoperiod
