#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holoperiod/cycle.hpp"
#include "holoperiod/recurrence.hpp"

namespace holoperiod {

/// Per-prime-power prediction and result for the structured period
/// computation.
struct PrimePowerRecord {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  /// jacobi(discriminant, p) for odd p. For p = 2 the parity case stands in:
  /// -1 when a, b are both odd (inert behavior), +1 when a is odd and b is
  /// even (split behavior).
  int symbol = 0;
  std::uint64_t bound = 1;   // divisor bound for T_{p^e}
  std::uint64_t period = 0;  // exact T_{p^e} once computed
  bool via_fallback = false; // no divisor of the bound verified; brute force used
};

/// Prediction record for a full modulus, with the structural predicates the
/// computed period was checked against. A nonempty anomaly list means a
/// theorem-shaped expectation failed; results are still reported.
struct Classification {
  std::uint64_t modulus = 1;
  FamilyParams params;
  std::vector<PrimePowerRecord> factors;
  std::uint64_t period = 1;
  std::uint64_t preperiod_bound = 0;
  std::vector<std::string> anomalies;
};

/// Divisor bound for T_{p^e}: 1 for split/ramified odd primes,
/// 2 p^e ord_p(discriminant) for inert odd primes, 2^(e+1) for p = 2 with
/// a, b odd, 1 for p = 2 with a odd and b even. The remaining parity cases
/// at p = 2 are UnsupportedCase.
PrimePowerRecord predict_prime_power(std::uint64_t p, unsigned e,
                                     FamilyParams params);

/// Exact T_{p^e}: the divisors of the predicted bound are verified in
/// increasing order against a stabilized stretch of the sequence; the first
/// one that holds over a full bound-length window is the minimal period.
std::uint64_t exact_prime_power(std::uint64_t p, unsigned e,
                                FamilyParams params);

struct FastPeriodOutcome {
  PeriodResult result;
  Classification classification;
};

/// T_m as the lcm of exact per-prime-power periods, with the structural
/// predicates (period-1 characterization, evenness, 4-divisibility, the
/// period-2 characterization for the (1,1) family) asserted against the
/// computed value.
FastPeriodOutcome fast_period(std::uint64_t m, FamilyParams params = {});

struct WieferichRecord {
  std::uint64_t prime = 0;
  unsigned residue_mod5 = 0;
  bool fermat_quotient_zero = false;  // 5^(p-1) = 1 mod p^2
  bool product_condition = false;     // falling product = 5 mod p^2
};

struct WieferichScan {
  std::vector<WieferichRecord> hits;   // primes with at least one condition
  std::uint64_t primes_scanned = 0;    // candidates tested (odd, 2 or 3 mod 5)
};

/// Scans the primes p <= limit with p = 2, 3 mod 5 for the two conditions a
/// prime must satisfy for its square to inherit the single-power period
/// bound. threads = 0 picks machine parallelism.
WieferichScan wieferich_search(std::uint64_t limit, unsigned threads = 0);

/// Prediction for a family member mod m, checked against brute-force cycle
/// detection.
struct FamilyReport {
  FamilyParams params;
  std::uint64_t modulus = 1;
  bool rational = false;  // perfect-square discriminant: T_m = 1 for all m
  std::vector<PrimePowerRecord> predictions;
  std::uint64_t predicted_bound = 1;
  bool requires_multiple_of_4 = false;
  PeriodResult brute;
  bool consistent = false;
};

FamilyReport family_classifier(FamilyParams params, std::uint64_t m);

}  // namespace holoperiod
