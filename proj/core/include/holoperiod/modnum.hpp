#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace holoperiod {

/// Largest supported modulus (exclusive). All modular routines are exact for
/// moduli below 2^63 thanks to double-width intermediates.
inline constexpr std::uint64_t kModulusLimit = std::uint64_t{1} << 63;

/// Canonical residue of a possibly negative value.
std::uint64_t reduce_mod(std::int64_t value, std::uint64_t m);

/// (a * b) mod m for a, b already reduced. Exact for m < 2^63.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t m) {
  std::uint64_t s = a + b;  // no overflow: a, b < m < 2^63
  return s >= m ? s - m : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

/// Reduction of full 64-bit values by a fixed modulus, one multiply-high
/// instead of a hardware divide. Correct for any x once the magic constant is
/// set up; at most two correction subtractions are needed.
struct Barrett {
  std::uint64_t mod = 1;
  std::uint64_t magic = 0;

  Barrett() = default;
  explicit Barrett(std::uint64_t m) : mod(m), magic(m > 1 ? ~0ull / m : 0) {}

  std::uint64_t reduce(std::uint64_t x) const {
    if (mod == 1) return 0;
    std::uint64_t q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * magic) >> 64);
    std::uint64_t r = x - q * mod;
    while (r >= mod) r -= mod;
    return r;
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (mod <= 0xFFFFFFFFull) return reduce(a * b);
    return mul_mod(a, b, mod);
  }
};

/// base^exp mod m with canonical result in [0, m). base may be negative.
std::uint64_t pow_mod(std::int64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic for every 64-bit input (Miller-Rabin with a fixed witness
/// set that is exact below 2^64).
bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Complete factorization, primes strictly increasing. Empty for n = 1.
using Factorization = std::vector<PrimePower>;

/// Trial division to 2^20, then Miller-Rabin plus Pollard rho for what
/// remains. Rejects n = 0.
Factorization factorize(std::uint64_t n);

/// Product of prime^exponent; overflow-checked.
std::uint64_t factorization_value(const Factorization& f);

/// All divisors of the factored integer, sorted ascending.
std::vector<std::uint64_t> divisors_ascending(const Factorization& f);

/// Jacobi symbol (a/n) for odd n >= 1; equals the Legendre symbol when n is
/// prime. Rejects even n.
int jacobi(std::int64_t a, std::uint64_t n);

/// Smallest k > 0 with a^k = 1 mod p, for odd prime p and gcd(a, p) = 1.
/// Computed by factoring p-1 and stripping prime factors.
std::uint64_t mult_order(std::int64_t a, std::uint64_t p);

/// Least common multiple of a nonempty list; overflow is a reported error,
/// never a silent wrap.
std::uint64_t lcm_all(std::span<const std::uint64_t> values);

/// a * b with overflow reported via OverflowError.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

/// Modular inverse when gcd(a, m) = 1, otherwise 0 (0 is never a valid
/// inverse for m > 1).
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

/// Streams the primes <= limit in increasing order through the callback.
void for_each_prime(std::uint64_t limit,
                    const std::function<void(std::uint64_t)>& fn);

}  // namespace holoperiod
