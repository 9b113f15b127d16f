#pragma once

#include <cstdint>
#include <vector>

#include "holoperiod/recurrence.hpp"

namespace holoperiod {

/// Z[alpha]/(M) where alpha^2 = a*alpha + b. The conjugate root beta = a -
/// alpha is never stored; conj() maps onto it.
struct QuadRing {
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::uint64_t modulus = 1;

  QuadRing() = default;
  QuadRing(std::int64_t a_, std::int64_t b_, std::uint64_t modulus_);

  std::uint64_t a_mod = 1;  // canonical residues of the ring parameters
  std::uint64_t b_mod = 1;

  friend bool operator==(const QuadRing& l, const QuadRing& r) {
    return l.a == r.a && l.b == r.b && l.modulus == r.modulus;
  }
};

/// x + y*alpha with canonical residues.
struct QuadInt {
  QuadRing ring;
  std::uint64_t x = 0;
  std::uint64_t y = 0;

  friend bool operator==(const QuadInt& l, const QuadInt& r) {
    return l.ring == r.ring && l.x == r.x && l.y == r.y;
  }
};

QuadInt quad_make(const QuadRing& ring, std::int64_t x, std::int64_t y);
QuadInt quad_add(const QuadInt& u, const QuadInt& v);
QuadInt quad_sub(const QuadInt& u, const QuadInt& v);
QuadInt quad_mul(const QuadInt& u, const QuadInt& v);
QuadInt quad_pow(const QuadInt& u, std::uint64_t e);

/// alpha -> beta = a - alpha; an involutive ring homomorphism fixing the
/// rational part.
QuadInt conj(const QuadInt& u);

/// u * conj(u); always has zero alpha-coefficient.
QuadInt norm(const QuadInt& u);

/// prod_{k=0}^{count-1} (alpha - k) in the ring; the empty product is 1.
QuadInt falling_product(const QuadRing& ring, std::uint64_t count);

/// Closed-form evaluation of the family sequence mod M, independent of the
/// recurrence: with z = (a - alpha) * prod_{k=0}^{n-1}(alpha - k), the
/// alpha-coefficient y of z satisfies b_n = (-1)^(n-1) * y. The division by
/// sqrt(discriminant) in the closed form is eliminated algebraically
/// (z - conj(z) = y*(2*alpha - a)), so the oracle is valid even when M shares
/// a factor with the discriminant.
std::uint64_t bn_ring_oracle(std::uint64_t n, std::uint64_t modulus,
                             FamilyParams params);

enum class Frobenius { FixesAlpha, SwapsToBeta, Ramified };

/// Classifies alpha^p in Z[alpha]/(p) and cross-checks the outcome against
/// the Jacobi symbol of the discriminant; disagreement is a
/// ConsistencyError. Requires odd prime p with p not dividing b.
Frobenius frobenius_check(std::uint64_t p, FamilyParams params);

/// Dense polynomial with coefficients reduced mod the attached modulus;
/// canonical form has no trailing zero coefficient.
struct ModPoly {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> coeffs;  // ascending degree

  static ModPoly from_coeffs(std::uint64_t modulus,
                             std::vector<std::int64_t> coeffs);
  friend bool operator==(const ModPoly&, const ModPoly&) = default;
};

ModPoly poly_mul(const ModPoly& f, const ModPoly& g);
ModPoly poly_pow(const ModPoly& f, std::uint64_t e);

/// prod_{k=0}^{count-1} (X - k) mod m as a dense polynomial.
ModPoly falling_factorial_poly(std::uint64_t modulus, std::uint64_t count);

/// Coefficient-wise verification of the factorial product congruence:
/// for odd p, prod_{k=0}^{p^r-1}(X-k) = (X^p - X)^(p^(r-1)) mod p^r; for
/// p = 2 the doubled-range variant prod_{k=0}^{2^(r+1)-1}(X-k) =
/// (X^2 - X)^(2^r) mod 2^r. Guard: p^r <= 4096.
bool check_factorial_congruence(std::uint64_t p, unsigned r);

/// prod_{k=0}^{2p-1}(alpha - k) = 5 mod p^2 in the (1, 1) ring, the product
/// half of the double condition a prime needs for its period bound to
/// collapse from 2p^2*ord to 2p*ord.
bool wieferich_product_condition(std::uint64_t p);

}  // namespace holoperiod
