// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion pins its tolerances and runtime budget in code.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "holoperiod/cycle.hpp"
#include "holoperiod/modnum.hpp"
#include "holoperiod/quadring.hpp"
#include "holoperiod/recurrence.hpp"
#include "holoperiod/theory.hpp"
#include "subprocess.hpp"

using namespace holoperiod;

namespace {

struct Check {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

const std::vector<std::uint64_t> kPublishedTable = {
    2,    12,   8,    1,    12,   84,   8,    36,   2,    1,    24,  104,
    84,   12,   16,   544,  36,   1,    8,    84,   2,    1012, 24,  1,
    104,  108,  168,  1,    12,   1,    32,   12,   544,  84,   72,  2664,
    2,    312,  8,    1,    84,   3612, 8,    36,   1012, 4324, 48,  588,
    2,    1632, 104,  5512, 108,  1,    168,  12,   2,    1,    24,  1,
    2,    252,  64,   104,  12,   2948, 544,  3036, 84,   1,    72,  10512,
    2664, 12,   8,    84,   312,  1,    16,   324,  2,    13612, 168, 544,
    3612, 12,   8,    1,    36,   2184, 2024, 12,   4324, 1,    96,  18624,
    588,  36,   8};

const long kValues1to12[] = {0,     1,      2,       7,      32,     179,
                             1182,  8993,   77440,   744425, 7901410,
                             91774375};

const Recurrence& family11() {
  static const Recurrence rec = family_recurrence({1, 1});
  return rec;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

bool residue_class_one(std::uint64_t p) {
  return p % 5 == 0 || p % 5 == 1 || p % 5 == 4;
}

// 1. table --max 100 reproduces the published list; fast < 10 s, brute < 5 min
Check criterion_table() {
  Check c;
  auto start = std::chrono::steady_clock::now();
  auto res = testutil::run_cli("table --max 100");
  double fast_s = seconds_since(start);
  if (res.code != 0) c.fail("CLI exited " + std::to_string(res.code));
  std::vector<std::uint64_t> got;
  std::stringstream ss(res.out);
  std::string tok;
  while (std::getline(ss, tok, ',')) got.push_back(std::stoull(tok));
  if (got != kPublishedTable) c.fail("fast table differs from the published list");
  if (fast_s >= 10.0) c.fail("fast path took " + std::to_string(fast_s) + " s");

  start = std::chrono::steady_clock::now();
  std::vector<std::uint64_t> brute;
  for (std::uint64_t m = 2; m <= 100; ++m)
    brute.push_back(detect_period(family11(), m).period);
  double brute_s = seconds_since(start);
  if (brute != kPublishedTable) c.fail("brute table differs from the published list");
  if (brute_s >= 300.0) c.fail("brute path took " + std::to_string(brute_s) + " s");
  char buf[96];
  std::snprintf(buf, sizeof buf, "99 entries exact; fast %.2f s, brute %.2f s",
                fast_s, brute_s);
  c.note(buf);
  return c;
}

// 2. T_3617 = 26158144, fast < 1 s, brute < 2 min, bound structure exact
Check criterion_large_fixture() {
  Check c;
  constexpr std::uint64_t kWant = 26158144;
  auto start = std::chrono::steady_clock::now();
  auto fast = fast_period(3617);
  double fast_s = seconds_since(start);
  if (fast.result.period != kWant)
    c.fail("fast got " + std::to_string(fast.result.period));
  if (fast_s >= 1.0) c.fail("fast took " + std::to_string(fast_s) + " s");

  start = std::chrono::steady_clock::now();
  auto brute = detect_period(family11(), 3617);
  double brute_s = seconds_since(start);
  if (brute.period != kWant)
    c.fail("brute got " + std::to_string(brute.period));
  if (brute_s >= 120.0) c.fail("brute took " + std::to_string(brute_s) + " s");

  std::uint64_t ord = mult_order(5, 3617);
  if (kWant != 2 * 3617 * ord)
    c.fail("period != 2 * 3617 * ord_3617(5)");
  // order verified independently: 5^ord = 1 and no proper prime quotient works
  if (pow_mod(5, ord, 3617) != 1) c.fail("ord does not annihilate");
  for (auto& pp : factorize(ord))
    if (pow_mod(5, ord / pp.prime, 3617) == 1)
      c.fail("ord not minimal at factor " + std::to_string(pp.prime));
  char buf[96];
  std::snprintf(buf, sizeof buf,
                "T = 26158144 = 2*3617*%llu; fast %.2f s, brute %.2f s",
                static_cast<unsigned long long>(ord), fast_s, brute_s);
  c.note(buf);
  return c;
}

// 3. exact values b_1..b_12 and the mod 2 / mod 4 / mod 15 words
Check criterion_sequence_fixtures() {
  Check c;
  auto exact = eval_exact(family11(), 12);
  for (int n = 1; n <= 12; ++n)
    if (exact[n] != kValues1to12[n - 1]) c.fail("b_" + std::to_string(n));
  auto mod2 = eval_mod(family11(), 2, 10000);
  for (std::size_t n = 0; n <= 10000; ++n)
    if (mod2[n] != (n % 2 == 0 ? 1u : 0u)) {
      c.fail("mod-2 word at n = " + std::to_string(n));
      break;
    }
  const std::uint64_t word4[8] = {1, 0, 1, 2, 3, 0, 3, 2};
  auto mod4 = eval_mod(family11(), 4, 10000);
  for (std::size_t n = 0; n <= 10000; ++n)
    if (mod4[n] != word4[n % 8]) {
      c.fail("mod-4 word at n = " + std::to_string(n));
      break;
    }
  const std::uint64_t block15[12] = {10, 5, 10, 10, 0, 10, 5, 10, 5, 5, 0, 5};
  auto mod15 = eval_mod(family11(), 15, 20);
  for (std::size_t i = 0; i < 12; ++i)
    if (mod15[9 + i] != block15[i]) c.fail("mod-15 block");
  c.note("exact b_1..b_12, mod-2/4 words to n = 10^4, mod-15 block");
  return c;
}

// 4. fast = brute for every m <= 300; ring oracle = recurrence for n <= 2000
Check criterion_oracle_equivalence() {
  Check c;
  auto start = std::chrono::steady_clock::now();
  for (std::uint64_t m = 1; m <= 300; ++m) {
    auto fast = fast_period(m);
    auto brute = detect_period(family11(), m);
    if (fast.result.period != brute.period) {
      c.fail("period mismatch at m = " + std::to_string(m));
      break;
    }
    if (!fast.classification.anomalies.empty()) {
      c.fail("anomaly at m = " + std::to_string(m));
      break;
    }
  }
  // 20 moduli <= 10^4 drawn from a fixed-seed generator
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next_mod = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state % 9999 + 2;
  };
  for (int i = 0; i < 20; ++i) {
    std::uint64_t m = next_mod();
    auto seq = eval_mod(family11(), m, 2000);
    for (std::uint64_t n = 0; n <= 2000; ++n)
      if (bn_ring_oracle(n, m, {1, 1}) != seq[n]) {
        c.fail("ring oracle != recurrence at m = " + std::to_string(m) +
               ", n = " + std::to_string(n));
        break;
      }
  }
  double s = seconds_since(start);
  if (s >= 300.0) c.fail("took " + std::to_string(s) + " s");
  char buf[80];
  std::snprintf(buf, sizeof buf,
                "m in [1,300] and 20 ring-oracle moduli in %.2f s", s);
  c.note(buf);
  return c;
}

// 5. structure theorem property suites over m <= 300
Check criterion_structure_suites() {
  Check c;
  std::vector<std::uint64_t> period(301, 1);
  for (std::uint64_t m = 2; m <= 300; ++m)
    period[m] = fast_period(m).result.period;

  for (std::uint64_t m = 2; m <= 300; ++m) {
    bool split_only = true;
    for (auto& pp : factorize(m))
      split_only = split_only && residue_class_one(pp.prime);
    if ((period[m] == 1) != split_only) {
      c.fail("period-1 characterization at m = " + std::to_string(m));
      break;
    }
  }
  for_each_prime(300, [&](std::uint64_t p) {
    if (p == 5) {
      if (period[p] != 1) c.fail("T_5 != 1");
      return;
    }
    std::uint64_t bound = p == 2 ? 4 : 2 * p * mult_order(5, p);
    if (bound % period[p] != 0)
      c.fail("T_p does not divide 2 p ord_p(5) at p = " + std::to_string(p));
  });
  for (std::uint64_t m = 2; m <= 300; ++m)
    if (period[m] > 1 && period[m] % 2 != 0) {
      c.fail("odd period above 1 at m = " + std::to_string(m));
      break;
    }
  for_each_prime(300, [&](std::uint64_t p) {
    if (p > 2 && (p % 5 == 2 || p % 5 == 3) && period[p] % 4 != 0)
      c.fail("inert prime period not 0 mod 4 at p = " + std::to_string(p));
  });
  for (std::uint64_t m = 3; m <= 300; ++m) {
    bool expect = m % 2 == 0 && (m / 2) % 2 == 1;
    if (expect)
      for (auto& pp : factorize(m / 2))
        expect = expect && residue_class_one(pp.prime);
    if ((period[m] == 2) != expect) {
      c.fail("period-2 characterization at m = " + std::to_string(m));
      break;
    }
  }
  for_each_prime(300, [&](std::uint64_t p) {
    if (p == 2 || (p % 5 != 2 && p % 5 != 3)) return;
    for (std::uint64_t pk = p; pk <= 300; pk *= p)
      if ((2 * pk * (p - 1)) % period[pk] != 0)
        c.fail("inert power bound fails at " + std::to_string(pk));
  });
  for (unsigned r = 1; r <= 8; ++r) {
    std::uint64_t m = 1ull << r;
    std::uint64_t t =
        m <= 300 ? period[m] : fast_period(m).result.period;
    if ((1ull << (r + 1)) % t != 0)
      c.fail("power-of-two bound fails at r = " + std::to_string(r));
  }
  c.note("parts a-f characterizations and divisor bounds over m <= 300");
  return c;
}

// 6. supercongruence windows
Check criterion_supercongruences() {
  Check c;
  for_each_prime(100, [&c](std::uint64_t p) {
    if (p % 5 != 2 && p % 5 != 3) return;
    auto seq = eval_mod(family11(), p, 4 * p + 500);
    for (std::uint64_t n = 2 * p + 1; n <= 2 * p + 500; ++n)
      if (seq[n + 2 * p] != mul_mod(5 % p, seq[n], p)) {
        c.fail("single-prime window fails at p = " + std::to_string(p) +
               ", n = " + std::to_string(n));
        return;
      }
  });
  const std::pair<std::uint64_t, unsigned> powers[] = {
      {3, 2}, {3, 3}, {7, 2}, {13, 2}};
  for (auto [p, r] : powers) {
    std::uint64_t pr = 1, prm1 = 1;
    for (unsigned i = 0; i < r; ++i) pr *= p;
    for (unsigned i = 0; i + 1 < r; ++i) prm1 *= p;
    std::uint64_t factor = pow_mod(5, prm1, pr);
    auto seq = eval_mod(family11(), pr, 4 * pr + 500);
    for (std::uint64_t n = 2 * pr + 1; n <= 2 * pr + 500; ++n)
      if (seq[n + 2 * pr] != mul_mod(factor, seq[n], pr)) {
        c.fail("prime-power window fails at p^r = " + std::to_string(pr));
        break;
      }
  }
  c.note("b_{n+2p} = 5 b_n windows for p <= 100 and four prime-power lifts");
  return c;
}

// 7. factorial product congruences for all p^r <= 256 plus the 2-adic chain
Check criterion_congruences() {
  Check c;
  auto start = std::chrono::steady_clock::now();
  for (std::uint64_t p = 3; p <= 256; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t pr = p; pr <= 256; pr *= p) {
      unsigned r = 0;
      for (std::uint64_t q = pr; q > 1; q /= p) ++r;
      if (!check_factorial_congruence(p, r))
        c.fail("fails at " + std::to_string(p) + "^" + std::to_string(r));
      if (pr > 256 / p) break;
    }
  }
  for (unsigned r = 1; r <= 8; ++r)
    if (!check_factorial_congruence(2, r))
      c.fail("2-adic variant fails at r = " + std::to_string(r));
  double s = seconds_since(start);
  if (s >= 30.0) c.fail("took " + std::to_string(s) + " s");
  char buf[64];
  std::snprintf(buf, sizeof buf, "all odd p^r <= 256 and 2^r, r <= 8, in %.2f s",
                s);
  c.note(buf);
  return c;
}

// 8. Wieferich scan to 50000
Check criterion_wieferich() {
  Check c;
  auto start = std::chrono::steady_clock::now();
  auto scan = wieferich_search(50000);
  double s = seconds_since(start);
  std::vector<std::uint64_t> fermat;
  for (auto& h : scan.hits)
    if (h.fermat_quotient_zero) fermat.push_back(h.prime);
  if (fermat != std::vector<std::uint64_t>{40487})
    c.fail("Fermat-quotient hits are not exactly {40487}");
  if (s >= 10.0) c.fail("took " + std::to_string(s) + " s");
  // computed fixture, not asserted from the literature: 40487 fails the
  // product condition, so its square keeps the larger bound
  bool product = false;
  for (auto& h : scan.hits)
    if (h.prime == 40487) product = h.product_condition;
  if (product) c.fail("product condition at 40487 flipped to true");
  char buf[96];
  std::snprintf(buf, sizeof buf,
                "40487 alone in %.2f s; product condition there: false", s);
  c.note(buf);
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {"table reproduction T_2..T_100", criterion_table},
      {"large-period fixture T_3617", criterion_large_fixture},
      {"sequence fixtures", criterion_sequence_fixtures},
      {"oracle equivalence", criterion_oracle_equivalence},
      {"structure theorem suites", criterion_structure_suites},
      {"supercongruence windows", criterion_supercongruences},
      {"factorial congruences", criterion_congruences},
      {"wieferich search", criterion_wieferich},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[i].run();
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    double s = seconds_since(start);
    std::printf("[%zu/9] %-34s %s (%.2f s)%s%s\n", i + 1, criteria[i].name,
                c.pass ? "PASS" : "FAIL", s, c.detail.empty() ? "" : " - ",
                c.detail.c_str());
    std::fflush(stdout);
    if (!c.pass) ++failures;
  }
  std::printf(
      "[9/9] %-34s N/A - asymptotics and the density heuristic are "
      "documentation, no runnable claim\n",
      "out-of-scope analytics");
  return failures == 0 ? 0 : 1;
}
