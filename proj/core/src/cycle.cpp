#include "holoperiod/cycle.hpp"

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "holoperiod/errors.hpp"
#include "holoperiod/modnum.hpp"
#include "mod_engine.hpp"

namespace holoperiod {

namespace {

using detail::ModEngine;

template <class T>
std::uint64_t minimal_cyclic_period_span(std::span<const T> w) {
  const std::size_t n = w.size();
  if (n == 0)
    throw std::invalid_argument("minimal_word_period: window must be nonempty");
  if (n == 1) return 1;
  std::size_t cand = 1;
  if (n < std::numeric_limits<std::uint32_t>::max()) {
    // failure function of the window; n - f[n-1] is the minimal linear period
    std::vector<std::uint32_t> f(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
      std::uint32_t k = f[i - 1];
      while (k > 0 && w[i] != w[k]) k = f[k - 1];
      if (w[i] == w[k]) ++k;
      f[i] = k;
    }
    cand = n - f[n - 1];
    if (n % cand == 0) return cand;
  }
  // minimal linear period does not divide the cycle length: fall back to the
  // divisors of n (a cyclic period must divide n, and for d | n the linear
  // check over the window is equivalent to the cyclic one)
  for (std::uint64_t d : divisors_ascending(factorize(n))) {
    if (d < cand || d == n) continue;
    bool ok = true;
    for (std::size_t i = 0; i + d < n; ++i)
      if (w[i] != w[i + d]) {
        ok = false;
        break;
      }
    if (ok) return d;
  }
  return n;
}

struct StepBudget {
  std::uint64_t used = 0;
  std::uint64_t cap;
  std::uint64_t modulus;
  unsigned order;

  void charge(std::uint64_t amount) {
    used += amount;
    if (used > cap)
      throw ResourceLimitExceeded(
          "state-cycle search exceeded " + std::to_string(cap) +
          " steps; the period mod " + std::to_string(modulus) +
          " of an order-" + std::to_string(order) +
          " recurrence is only bounded by m^(2r) = " +
          std::to_string(modulus) + "^" + std::to_string(2 * order) +
          ", raise the step cap to continue");
  }
};

template <class T>
std::uint64_t window_period(const ModEngine& engine, std::uint64_t mu,
                            std::uint64_t lambda) {
  auto cursor = engine.make_cursor();
  for (std::uint64_t i = 0; i < mu; ++i) engine.step(cursor);
  std::vector<T> window(lambda);
  for (std::uint64_t i = 0; i < lambda; ++i) {
    window[i] = static_cast<T>(engine.front(cursor));
    engine.step(cursor);
  }
  return minimal_cyclic_period_span(std::span<const T>(window));
}

std::uint64_t streaming_window_period(const ModEngine& engine,
                                      std::uint64_t mu, std::uint64_t lambda,
                                      StepBudget& budget) {
  for (std::uint64_t d : divisors_ascending(factorize(lambda))) {
    if (d == lambda) break;
    budget.charge(mu + d + 2 * lambda);
    auto a = engine.make_cursor();
    for (std::uint64_t i = 0; i < mu; ++i) engine.step(a);
    auto b = a;
    for (std::uint64_t i = 0; i < d; ++i) engine.step(b);
    bool ok = true;
    for (std::uint64_t i = 0; i < lambda; ++i) {
      if (engine.front(a) != engine.front(b)) {
        ok = false;
        break;
      }
      engine.step(a);
      engine.step(b);
    }
    if (ok) return d;
  }
  return lambda;
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::brute:
      return "brute";
    case Method::fast:
      return "fast";
    case Method::both_agree:
      return "both-agree";
  }
  return "unknown";
}

PeriodResult detect_period(const Recurrence& rec, std::uint64_t m,
                           const DetectOptions& opts) {
  if (m == 1)
    return PeriodResult{1, 1, 0, Method::brute, CycleStats{1, 0}};

  ModEngine engine(rec, m);
  StepBudget budget{0, opts.max_steps, m, rec.order};

  // Brent: find lambda
  auto tortoise = engine.make_cursor();
  auto hare = engine.make_cursor();
  engine.step(hare);
  budget.charge(1);
  std::uint64_t power = 1, lambda = 1;
  while (!engine.same_state(tortoise, hare)) {
    if (power == lambda) {
      tortoise = hare;
      power <<= 1;
      lambda = 0;
    }
    engine.step(hare);
    budget.charge(1);
    ++lambda;
  }

  // tail length mu
  auto ahead = engine.make_cursor();
  for (std::uint64_t i = 0; i < lambda; ++i) engine.step(ahead);
  budget.charge(lambda);
  auto base = engine.make_cursor();
  std::uint64_t mu = 0;
  while (!engine.same_state(base, ahead)) {
    engine.step(base);
    engine.step(ahead);
    budget.charge(2);
    ++mu;
  }

  // minimal period of the value word over one full cycle
  std::uint64_t period;
  if (lambda <= opts.window_limit) {
    budget.charge(mu + lambda);
    if (m <= 0xFFull)
      period = window_period<std::uint8_t>(engine, mu, lambda);
    else if (m <= 0xFFFFull)
      period = window_period<std::uint16_t>(engine, mu, lambda);
    else if (m <= 0xFFFFFFFFull)
      period = window_period<std::uint32_t>(engine, mu, lambda);
    else
      period = window_period<std::uint64_t>(engine, mu, lambda);
  } else {
    period = streaming_window_period(engine, mu, lambda, budget);
  }
  if (lambda % period != 0)
    throw ConsistencyError("cycle analysis: word period does not divide lambda");

  // minimal preperiod: last mismatch of u_n vs u_{n+T} below mu
  std::uint64_t preperiod = 0;
  if (mu > 0) {
    budget.charge(2 * mu + period);
    auto a = engine.make_cursor();
    auto b = engine.make_cursor();
    for (std::uint64_t i = 0; i < period; ++i) engine.step(b);
    for (std::uint64_t n = 0; n < mu; ++n) {
      if (engine.front(a) != engine.front(b)) preperiod = n + 1;
      engine.step(a);
      engine.step(b);
    }
  }

  return PeriodResult{m, period, preperiod, Method::brute,
                      CycleStats{lambda, mu}};
}

std::uint64_t minimal_word_period(std::span<const std::uint64_t> window) {
  return minimal_cyclic_period_span(window);
}

bool verify_period(const Recurrence& rec, std::uint64_t m,
                   std::uint64_t period, std::uint64_t start,
                   std::uint64_t span) {
  if (period == 0)
    throw std::invalid_argument("verify_period: period must be positive");
  if (span == 0)
    throw std::invalid_argument("verify_period: span must be positive");
  ModEngine engine(rec, m);
  return detail::streaming_verify(engine, period, start, span);
}

}  // namespace holoperiod
