#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "holoperiod/cycle.hpp"
#include "holoperiod/errors.hpp"
#include "holoperiod/modnum.hpp"
#include "holoperiod/recurrence.hpp"
#include "oracles.hpp"

using namespace holoperiod;

namespace {

const Recurrence& family11() {
  static const Recurrence rec = family_recurrence({1, 1});
  return rec;
}

}  // namespace

TEST_CASE("minimal_word_period fixtures") {
  CHECK(minimal_word_period(std::vector<std::uint64_t>{7, 7, 7, 7}) == 1);
  CHECK(minimal_word_period(std::vector<std::uint64_t>{1, 0, 1, 0, 1, 0}) == 2);
  // one full period of the sequence mod 15
  CHECK(minimal_word_period(std::vector<std::uint64_t>{10, 5, 10, 10, 0, 10,
                                                       5, 10, 5, 5, 0, 5}) ==
        12);
  CHECK(minimal_word_period(std::vector<std::uint64_t>{4}) == 1);
  CHECK_THROWS_AS(minimal_word_period(std::span<const std::uint64_t>{}),
                  std::invalid_argument);
}

TEST_CASE("minimal_word_period equals the divisor-scan oracle") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    std::uint64_t tile_len = rng() % 12 + 1;
    std::uint64_t reps = rng() % 12 + 1;
    std::vector<std::uint64_t> tile(tile_len);
    for (auto& v : tile) v = rng() % 4;
    std::vector<std::uint64_t> word;
    for (std::uint64_t r = 0; r < reps; ++r)
      word.insert(word.end(), tile.begin(), tile.end());
    CHECK(minimal_word_period(word) == oracles::naive_cyclic_period(word));
  }
}

TEST_CASE("verify_period fixtures mod 15") {
  CHECK(verify_period(family11(), 15, 12, 9, 1000));
  CHECK_FALSE(verify_period(family11(), 15, 6, 9, 1000));
  CHECK(verify_period(family11(), 15, 24, 9, 1000));  // any multiple works
  CHECK_THROWS_AS(verify_period(family11(), 15, 0, 9, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_period(family11(), 15, 12, 9, 0),
                  std::invalid_argument);
}

TEST_CASE("detect_period fixtures") {
  auto r15 = detect_period(family11(), 15);
  CHECK(r15.period == 12);
  CHECK(r15.preperiod == 9);
  CHECK(r15.method == Method::brute);
  REQUIRE(r15.cycle.has_value());
  CHECK(r15.cycle->lambda == 60);  // lcm(12, 15): the state carries n mod m
  CHECK(r15.cycle->mu == 9);

  auto r1 = detect_period(family11(), 1);
  CHECK(r1.period == 1);
  CHECK(r1.preperiod == 0);

  CHECK(detect_period(family11(), 2).period == 2);
  CHECK(detect_period(family11(), 2).preperiod == 0);
  CHECK(detect_period(family11(), 4).period == 8);
  CHECK(detect_period(family11(), 5).period == 1);
  CHECK(detect_period(family11(), 5).preperiod == 9);
}

TEST_CASE("detect_period invariants for m up to 300") {
  for (std::uint64_t m = 1; m <= 300; ++m) {
    auto res = detect_period(family11(), m);
    CAPTURE(m);
    REQUIRE(res.period >= 1);
    REQUIRE(res.cycle.has_value());
    REQUIRE(res.cycle->lambda % res.period == 0);
    REQUIRE(res.preperiod <= res.cycle->mu);
    // the claimed period holds over three full cycles
    REQUIRE(verify_period(family11(), m, res.period, res.preperiod,
                          3 * res.cycle->lambda + 8));
    // and multiples of it hold too
    REQUIRE(verify_period(family11(), m, 2 * res.period, res.preperiod,
                          2 * res.cycle->lambda + 8));
    REQUIRE(verify_period(family11(), m, 3 * res.period, res.preperiod,
                          2 * res.cycle->lambda + 8));
    // no proper divisor of the period is itself a period
    for (std::uint64_t d : divisors_ascending(factorize(res.period)))
      if (d != res.period)
        REQUIRE_FALSE(verify_period(family11(), m, d, res.preperiod,
                                    res.cycle->lambda + res.period));
    // preperiod is minimal
    if (res.preperiod > 0)
      REQUIRE_FALSE(verify_period(family11(), m, res.period,
                                  res.preperiod - 1, res.cycle->lambda));
    // period bound m^(2r) for the order-2 recurrence
    unsigned __int128 bound = 1;
    for (int i = 0; i < 4; ++i) bound *= m;
    REQUIRE(static_cast<unsigned __int128>(res.period) <= bound);
  }
}

TEST_CASE("periods over coprime moduli combine by lcm") {
  std::vector<std::uint64_t> period(301, 0);
  for (std::uint64_t m = 1; m <= 300; ++m)
    period[m] = detect_period(family11(), m).period;
  for (std::uint64_t m1 = 2; m1 <= 300; ++m1)
    for (std::uint64_t m2 = m1 + 1; m1 * m2 <= 300; ++m2) {
      if (std::gcd(m1, m2) != 1) continue;
      CAPTURE(m1);
      CAPTURE(m2);
      std::uint64_t combined = period[m1] / std::gcd(period[m1], period[m2]) *
                               period[m2];
      REQUIRE(period[m1 * m2] == combined);
    }
}

TEST_CASE("step cap aborts runaway searches") {
  DetectOptions opts;
  opts.max_steps = 100;
  CHECK_THROWS_AS(detect_period(family11(), 23, opts), ResourceLimitExceeded);
}

TEST_CASE("streaming fallback matches the windowed analysis") {
  DetectOptions tiny;
  tiny.window_limit = 4;
  for (std::uint64_t m = 2; m <= 60; ++m) {
    auto a = detect_period(family11(), m);
    auto b = detect_period(family11(), m, tiny);
    CAPTURE(m);
    REQUIRE(a.period == b.period);
    REQUIRE(a.preperiod == b.preperiod);
    REQUIRE(a.cycle->lambda == b.cycle->lambda);
    REQUIRE(a.cycle->mu == b.cycle->mu);
  }
}

TEST_CASE("non-invertible inputs are refused") {
  auto bax = Recurrence::create(Poly{6, 5, 1},
                                {Poly{-2, 7, 7}, Poly{16, -24, 8}},
                                {mpz_class(0), mpz_class(1)});
  CHECK_THROWS_AS(detect_period(bax, 3), NonInvertibleLeading);
}

TEST_CASE("order-1 recurrence: factorial mod a prime dies out") {
  auto rec = Recurrence::create(Poly{1}, {Poly{0, 1}}, {mpz_class(1)});
  auto res = detect_period(rec, 7);
  CHECK(res.period == 1);
  CHECK(res.preperiod == 7);  // 7! is the first multiple of 7
  CHECK(res.cycle->lambda == 7);
  CHECK(res.cycle->mu == 7);
}

TEST_CASE("custom recurrence with non-unit leading coefficient") {
  // 3 u_n = 2 u_{n-1} + u_{n-2} mod 7: constant-coefficient order-2 system
  auto rec = Recurrence::create(Poly{3}, {Poly{2}, Poly{1}},
                                {mpz_class(0), mpz_class(1)});
  REQUIRE(invertibility_check(rec, 7));
  auto res = detect_period(rec, 7);
  CHECK(res.period >= 1);
  CHECK(verify_period(rec, 7, res.period, res.preperiod, 200));
}
