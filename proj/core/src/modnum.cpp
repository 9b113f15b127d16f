#include "holoperiod/modnum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "holoperiod/errors.hpp"

namespace holoperiod {

namespace {

void require_modulus(std::uint64_t m) {
  if (m < 1 || m >= kModulusLimit)
    throw std::invalid_argument("modulus must be in [1, 2^63)");
}

std::uint64_t pow_mod_reduced(std::uint64_t base, std::uint64_t exp,
                              std::uint64_t m) {
  std::uint64_t result = m == 1 ? 0 : 1;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// One Miller-Rabin round; n odd, n > 2, d * 2^s = n - 1.
bool mr_witness(std::uint64_t n, std::uint64_t d, unsigned s,
                std::uint64_t a) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t x = pow_mod_reduced(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

std::uint64_t pollard_rho(std::uint64_t n) {
  // Brent's variant with batched gcds; n odd composite, not a prime power
  // guard needed here since callers retry with a different increment.
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, q = 1, d = 1;
    std::uint64_t xs = x;
    unsigned power = 1, lam = 0;
    auto f = [&](std::uint64_t v) { return add_mod(mul_mod(v, v, n), c, n); };
    while (d == 1) {
      if (lam == power) {
        xs = y;
        power *= 2;
        lam = 0;
      }
      y = f(y);
      ++lam;
      q = mul_mod(q, xs > y ? xs - y : y - xs, n);
      if (lam % 64 == 0) {
        d = std::gcd(q, n);
        if (d == n) break;
      }
    }
    if (d == 1) d = std::gcd(q, n);
    if (d != 1 && d != n) return d;
    // retry with next increment, including the rare q = 0 collision
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

std::uint64_t reduce_mod(std::int64_t value, std::uint64_t m) {
  require_modulus(m);
  std::int64_t r = value % static_cast<std::int64_t>(m);
  if (r < 0) r += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t pow_mod(std::int64_t base, std::uint64_t exp, std::uint64_t m) {
  require_modulus(m);
  return pow_mod_reduced(reduce_mod(base, m), exp, m);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all n < 2^64 (Sorenson & Webster).
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (!mr_witness(n, d, s, a)) return false;
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization out;
  auto push = [&out](std::uint64_t p, unsigned e) {
    out.push_back(PrimePower{p, e});
  };
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) push(p, e);
  }
  static constexpr std::uint64_t kTrialLimit = 1ull << 20;
  static constexpr int kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  std::uint64_t d = 7;
  int w = 0;
  while (d <= kTrialLimit && d * d <= n) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      push(d, e);
    }
    d += kWheel[w];
    w = (w + 1) & 7;
  }
  if (n > 1) {
    if (d * d > n) {
      push(n, 1);
    } else {
      std::vector<std::uint64_t> primes;
      factor_into(n, primes);
      std::sort(primes.begin(), primes.end());
      for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        push(primes[i], static_cast<unsigned>(j - i));
        i = j;
      }
    }
  }
  return out;
}

std::uint64_t factorization_value(const Factorization& f) {
  std::uint64_t v = 1;
  for (const auto& pp : f)
    for (unsigned i = 0; i < pp.exponent; ++i) v = checked_mul(v, pp.prime);
  return v;
}

std::vector<std::uint64_t> divisors_ascending(const Factorization& f) {
  std::vector<std::uint64_t> divs{1};
  for (const auto& pp : f) {
    std::size_t before = divs.size();
    std::uint64_t q = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      q = checked_mul(q, pp.prime);
      for (std::size_t i = 0; i < before; ++i)
        divs.push_back(checked_mul(divs[i], q));
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

int jacobi(std::int64_t a, std::uint64_t n) {
  if (n == 0 || n % 2 == 0)
    throw std::invalid_argument("jacobi: lower argument must be odd and >= 1");
  std::uint64_t x = reduce_mod(a, n);
  int result = 1;
  while (x != 0) {
    while ((x & 1) == 0) {
      x >>= 1;
      std::uint64_t n8 = n & 7;
      if (n8 == 3 || n8 == 5) result = -result;
    }
    std::swap(x, n);
    if ((x & 3) == 3 && (n & 3) == 3) result = -result;
    x %= n;
  }
  return n == 1 ? result : 0;
}

std::uint64_t mult_order(std::int64_t a, std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::invalid_argument("mult_order: p must be an odd prime");
  std::uint64_t ar = reduce_mod(a, p);
  if (ar == 0)
    throw std::invalid_argument("mult_order: a and p must be coprime");
  std::uint64_t order = p - 1;
  for (const auto& pp : factorize(p - 1)) {
    for (unsigned i = 0; i < pp.exponent; ++i) {
      if (order % pp.prime != 0) break;
      std::uint64_t candidate = order / pp.prime;
      if (pow_mod_reduced(ar, candidate, p) == 1)
        order = candidate;
      else
        break;
    }
  }
  return order;
}

std::uint64_t lcm_all(std::span<const std::uint64_t> values) {
  if (values.empty())
    throw std::invalid_argument("lcm_all: list must be nonempty");
  std::uint64_t acc = 1;
  for (std::uint64_t v : values) {
    if (v == 0) throw std::invalid_argument("lcm_all: values must be positive");
    acc = checked_mul(acc / std::gcd(acc, v), v);
  }
  return acc;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow: " + std::to_string(a) + " * " +
                        std::to_string(b) + " exceeds 64 bits");
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  __int128 t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m);
  std::int64_t new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) return 0;
  if (t < 0) t += static_cast<__int128>(m);
  return static_cast<std::uint64_t>(t);
}

void for_each_prime(std::uint64_t limit,
                    const std::function<void(std::uint64_t)>& fn) {
  if (limit < 2) return;
  fn(2);
  if (limit < 3) return;
  // odd-only bit sieve: bit k stands for 2k + 3
  std::uint64_t count = (limit - 1) / 2;  // odd numbers in [3, limit]
  std::vector<std::uint64_t> bits((count + 63) / 64, 0);
  auto is_set = [&](std::uint64_t k) {
    return (bits[k >> 6] >> (k & 63)) & 1;
  };
  for (std::uint64_t k = 0; k < count; ++k) {
    if (is_set(k)) continue;
    std::uint64_t p = 2 * k + 3;
    fn(p);
    if (p * p > limit) continue;
    for (std::uint64_t j = (p * p - 3) / 2; j < count; j += p)
      bits[j >> 6] |= 1ull << (j & 63);
  }
}

}  // namespace holoperiod
