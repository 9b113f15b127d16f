#include "holoperiod/theory.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "holoperiod/errors.hpp"
#include "holoperiod/modnum.hpp"
#include "holoperiod/quadring.hpp"
#include "mod_engine.hpp"

namespace holoperiod {

namespace {

std::uint64_t prime_power_value(std::uint64_t p, unsigned e) {
  std::uint64_t pe = 1;
  for (unsigned i = 0; i < e; ++i) pe = checked_mul(pe, p);
  return pe;
}

// Index from which the per-prime-power period bounds are known to hold;
// generous versions of the stabilization thresholds behind the bounds.
std::uint64_t stabilization_index(std::uint64_t p, unsigned e,
                                  std::uint64_t pe) {
  if (p == 2) return checked_mul(4, pe);
  return std::max<std::uint64_t>(checked_mul(4, pe), 10ull * e);
}

PrimePowerRecord compute_prime_power(std::uint64_t p, unsigned e,
                                     FamilyParams params) {
  PrimePowerRecord record = predict_prime_power(p, e, params);
  std::uint64_t pe = prime_power_value(p, e);
  Recurrence rec = family_recurrence(params);
  detail::ModEngine engine(rec, pe);
  std::uint64_t n0 = stabilization_index(p, e, pe);
  std::uint64_t span = record.bound + 64;
  for (std::uint64_t d : divisors_ascending(factorize(record.bound))) {
    if (detail::streaming_verify(engine, d, n0, span)) {
      record.period = d;
      return record;
    }
  }
  // No divisor of the bound verified; resolve by brute force and flag it.
  record.via_fallback = true;
  record.period = detect_period(rec, pe).period;
  return record;
}

bool class_one(const PrimePowerRecord& r) { return r.bound == 1; }

}  // namespace

PrimePowerRecord predict_prime_power(std::uint64_t p, unsigned e,
                                     FamilyParams params) {
  if (!is_prime(p))
    throw std::invalid_argument("predict_prime_power: p must be prime");
  if (e < 1)
    throw std::invalid_argument("predict_prime_power: exponent must be >= 1");
  PrimePowerRecord record;
  record.prime = p;
  record.exponent = e;
  if (p == 2) {
    bool a_odd = (params.a % 2) != 0;
    bool b_odd = (params.b % 2) != 0;
    if (!a_odd)
      throw UnsupportedCase(
          "p = 2 with even a is outside the analyzed parity cases");
    if (b_odd) {
      record.symbol = -1;
      if (e + 1 >= 63) throw OverflowError("2^(e+1) exceeds 64 bits");
      record.bound = std::uint64_t{1} << (e + 1);
    } else {
      record.symbol = 1;
      record.bound = 1;
    }
    return record;
  }
  record.symbol = jacobi(params.discriminant(), p);
  if (record.symbol == -1) {
    std::uint64_t ord = mult_order(params.discriminant(), p);
    record.bound = checked_mul(checked_mul(2, prime_power_value(p, e)), ord);
  } else {
    record.bound = 1;
  }
  return record;
}

std::uint64_t exact_prime_power(std::uint64_t p, unsigned e,
                                FamilyParams params) {
  return compute_prime_power(p, e, params).period;
}

FastPeriodOutcome fast_period(std::uint64_t m, FamilyParams params) {
  if (m == 0 || m >= kModulusLimit)
    throw std::invalid_argument("fast_period: modulus must be in [1, 2^63)");
  FastPeriodOutcome out;
  out.classification.modulus = m;
  out.classification.params = params;
  if (m == 1) {
    out.result = PeriodResult{1, 1, 0, Method::fast, std::nullopt};
    return out;
  }

  Classification& cls = out.classification;
  std::vector<std::uint64_t> parts;
  std::uint64_t preperiod = 0;
  for (const auto& pp : factorize(m)) {
    PrimePowerRecord record =
        compute_prime_power(pp.prime, pp.exponent, params);
    if (record.via_fallback)
      cls.anomalies.push_back(
          "no divisor of the bound verified for p^e = " +
          std::to_string(prime_power_value(pp.prime, pp.exponent)) +
          "; period recovered by cycle detection");
    parts.push_back(record.period);
    preperiod = std::max(
        preperiod, stabilization_index(pp.prime, pp.exponent,
                                       prime_power_value(pp.prime,
                                                         pp.exponent)));
    cls.factors.push_back(record);
  }
  cls.period = lcm_all(parts);
  cls.preperiod_bound = preperiod;

  // Structural predicates; any violation is recorded, never swallowed.
  bool all_one =
      std::all_of(cls.factors.begin(), cls.factors.end(), class_one);
  if ((cls.period == 1) != all_one)
    cls.anomalies.push_back(
        "period-1 characterization failed: T = " + std::to_string(cls.period) +
        (all_one ? " with only split/ramified factors"
                 : " although an inert factor is present"));
  if (cls.period > 1 && cls.period % 2 != 0)
    cls.anomalies.push_back("period " + std::to_string(cls.period) +
                            " is > 1 but odd");
  if (cls.factors.size() == 1 && cls.factors[0].exponent == 1 &&
      cls.factors[0].prime % 2 == 1 && cls.factors[0].symbol == -1 &&
      cls.period % 4 != 0)
    cls.anomalies.push_back("period of an inert odd prime must be a multiple "
                            "of 4, got " + std::to_string(cls.period));
  if (params == FamilyParams{1, 1} && m >= 3) {
    unsigned two_exp = 0;
    bool odd_ok = true;
    for (const auto& rec : cls.factors) {
      if (rec.prime == 2)
        two_exp = rec.exponent;
      else if (rec.prime % 5 == 2 || rec.prime % 5 == 3)
        odd_ok = false;
    }
    bool expect_two = two_exp == 1 && odd_ok;
    if ((cls.period == 2) != expect_two)
      cls.anomalies.push_back(
          "period-2 characterization failed at m = " + std::to_string(m));
  }

  out.result = PeriodResult{m, cls.period, cls.preperiod_bound, Method::fast,
                            std::nullopt};
  return out;
}

WieferichScan wieferich_search(std::uint64_t limit, unsigned threads) {
  if (limit < 2)
    throw std::invalid_argument("wieferich_search: limit must be >= 2");
  if (limit > 3'000'000'000ull)
    throw std::invalid_argument(
        "wieferich_search: limit too large, p^2 must stay below 2^63");

  std::vector<std::uint64_t> candidates;
  for_each_prime(limit, [&candidates](std::uint64_t p) {
    if (p % 2 == 1 && (p % 5 == 2 || p % 5 == 3)) candidates.push_back(p);
  });

  WieferichScan scan;
  scan.primes_scanned = candidates.size();
  if (candidates.empty()) return scan;

  auto scan_range = [&candidates](std::size_t lo, std::size_t hi,
                                  std::vector<WieferichRecord>& hits) {
    for (std::size_t i = lo; i < hi; ++i) {
      std::uint64_t p = candidates[i];
      WieferichRecord rec;
      rec.prime = p;
      rec.residue_mod5 = static_cast<unsigned>(p % 5);
      rec.fermat_quotient_zero =
          pow_mod(5, p - 1, checked_mul(p, p)) == 1;
      rec.product_condition = wieferich_product_condition(p);
      if (rec.fermat_quotient_zero || rec.product_condition)
        hits.push_back(rec);
    }
  };

  if (threads == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = hw ? hw : 1;
  }
  std::size_t n_workers =
      std::min<std::size_t>(threads, candidates.size());
  if (n_workers <= 1) {
    scan_range(0, candidates.size(), scan.hits);
    return scan;
  }
  std::vector<std::vector<WieferichRecord>> partial(n_workers);
  std::vector<std::thread> workers;
  std::size_t chunk = (candidates.size() + n_workers - 1) / n_workers;
  for (std::size_t w = 0; w < n_workers; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(candidates.size(), lo + chunk);
    workers.emplace_back(
        [lo, hi, &partial, w, &scan_range] { scan_range(lo, hi, partial[w]); });
  }
  for (auto& t : workers) t.join();
  for (auto& part : partial)
    scan.hits.insert(scan.hits.end(), part.begin(), part.end());
  return scan;
}

FamilyReport family_classifier(FamilyParams params, std::uint64_t m) {
  if (m == 0 || m >= kModulusLimit)
    throw std::invalid_argument(
        "family_classifier: modulus must be in [1, 2^63)");
  FamilyReport report;
  report.params = params;
  report.modulus = m;
  report.rational = params.rational_roots();
  report.brute = detect_period(family_recurrence(params), m);
  if (report.rational || m == 1) {
    report.predicted_bound = 1;
    report.consistent = report.brute.period == 1;
    return report;
  }
  std::uint64_t bound = 1;
  for (const auto& pp : factorize(m)) {
    PrimePowerRecord rec = predict_prime_power(pp.prime, pp.exponent, params);
    bound = checked_mul(bound / std::gcd(bound, rec.bound), rec.bound);
    report.predictions.push_back(rec);
  }
  report.predicted_bound = bound;
  report.requires_multiple_of_4 = report.predictions.size() == 1 &&
                                  report.predictions[0].exponent == 1 &&
                                  report.predictions[0].prime % 2 == 1 &&
                                  report.predictions[0].symbol == -1;
  report.consistent =
      report.predicted_bound % report.brute.period == 0 &&
      (!report.requires_multiple_of_4 || report.brute.period % 4 == 0);
  return report;
}

}  // namespace holoperiod
