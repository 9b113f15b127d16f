#include "holoperiod/quadring.hpp"

#include <stdexcept>
#include <string>

#include "holoperiod/errors.hpp"
#include "holoperiod/modnum.hpp"

namespace holoperiod {

namespace {

void require_same_ring(const QuadInt& u, const QuadInt& v) {
  if (!(u.ring == v.ring))
    throw std::invalid_argument("quadring: mismatched ring or modulus");
}

void require_odd_prime(std::uint64_t p, const char* who) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
}

}  // namespace

QuadRing::QuadRing(std::int64_t a_, std::int64_t b_, std::uint64_t modulus_)
    : a(a_), b(b_), modulus(modulus_) {
  if (modulus == 0 || modulus >= kModulusLimit)
    throw std::invalid_argument("quadring: modulus must be in [1, 2^63)");
  a_mod = reduce_mod(a, modulus);
  b_mod = reduce_mod(b, modulus);
}

QuadInt quad_make(const QuadRing& ring, std::int64_t x, std::int64_t y) {
  return QuadInt{ring, reduce_mod(x, ring.modulus), reduce_mod(y, ring.modulus)};
}

QuadInt quad_add(const QuadInt& u, const QuadInt& v) {
  require_same_ring(u, v);
  std::uint64_t m = u.ring.modulus;
  return QuadInt{u.ring, add_mod(u.x, v.x, m), add_mod(u.y, v.y, m)};
}

QuadInt quad_sub(const QuadInt& u, const QuadInt& v) {
  require_same_ring(u, v);
  std::uint64_t m = u.ring.modulus;
  return QuadInt{u.ring, sub_mod(u.x, v.x, m), sub_mod(u.y, v.y, m)};
}

QuadInt quad_mul(const QuadInt& u, const QuadInt& v) {
  require_same_ring(u, v);
  std::uint64_t m = u.ring.modulus;
  // (x1 + y1 a)(x2 + y2 a) = x1x2 + b y1y2 + (x1y2 + x2y1 + a y1y2) a
  std::uint64_t yy = mul_mod(u.y, v.y, m);
  std::uint64_t x = add_mod(mul_mod(u.x, v.x, m), mul_mod(u.ring.b_mod, yy, m), m);
  std::uint64_t y = add_mod(mul_mod(u.x, v.y, m), mul_mod(u.y, v.x, m), m);
  y = add_mod(y, mul_mod(u.ring.a_mod, yy, m), m);
  return QuadInt{u.ring, x, y};
}

QuadInt quad_pow(const QuadInt& u, std::uint64_t e) {
  QuadInt result = quad_make(u.ring, 1, 0);
  QuadInt base = u;
  while (e > 0) {
    if (e & 1) result = quad_mul(result, base);
    base = quad_mul(base, base);
    e >>= 1;
  }
  return result;
}

QuadInt conj(const QuadInt& u) {
  std::uint64_t m = u.ring.modulus;
  return QuadInt{u.ring, add_mod(u.x, mul_mod(u.ring.a_mod, u.y, m), m),
                 u.y == 0 ? 0 : m - u.y};
}

QuadInt norm(const QuadInt& u) { return quad_mul(u, conj(u)); }

QuadInt falling_product(const QuadRing& ring, std::uint64_t count) {
  const std::uint64_t m = ring.modulus;
  if (m == 1) return QuadInt{ring, 0, 0};
  Barrett bar(m);
  std::uint64_t x = 1, y = 0;
  std::uint64_t c = 0;  // (-k) mod m, stepped by decrement
  const bool small = m <= 0xFFFFFFFFull;
  if (small && ring.a_mod == 1 && ring.b_mod == 1) {
    // (x + y a)(c + a) = (xc + y) + (x + yc + y) a when a = b = 1
    for (std::uint64_t k = 0; k < count; ++k) {
      std::uint64_t nx = add_mod(bar.reduce(x * c), y, m);
      std::uint64_t ny = add_mod(x, add_mod(bar.reduce(y * c), y, m), m);
      x = nx;
      y = ny;
      c = c == 0 ? m - 1 : c - 1;
    }
  } else {
    for (std::uint64_t k = 0; k < count; ++k) {
      // (x + y a)(c + a) = (xc + b y) + (x + yc + a y) a
      std::uint64_t nx = add_mod(bar.mul(x, c), bar.mul(ring.b_mod, y), m);
      std::uint64_t ny =
          add_mod(x, add_mod(bar.mul(y, c), bar.mul(ring.a_mod, y), m), m);
      x = nx;
      y = ny;
      c = c == 0 ? m - 1 : c - 1;
    }
  }
  return QuadInt{ring, x, y};
}

std::uint64_t bn_ring_oracle(std::uint64_t n, std::uint64_t modulus,
                             FamilyParams params) {
  QuadRing ring(params.a, params.b, modulus);
  QuadInt z = quad_mul(quad_make(ring, params.a, -1),  // beta = a - alpha
                       falling_product(ring, n));
  // z - conj(z) = y (2 alpha - a), so the alpha-coefficient y of z carries
  // (-1)^(n-1) b_n without any ring division
  if (n % 2 == 1 || z.y == 0) return z.y;
  return modulus - z.y;
}

Frobenius frobenius_check(std::uint64_t p, FamilyParams params) {
  require_odd_prime(p, "frobenius_check");
  if (reduce_mod(params.b, p) == 0)
    throw std::invalid_argument("frobenius_check: p must not divide b");
  QuadRing ring(params.a, params.b, p);
  QuadInt alpha = quad_make(ring, 0, 1);
  QuadInt ap = quad_pow(alpha, p);
  Frobenius f;
  if (ap == alpha)
    f = Frobenius::FixesAlpha;
  else if (ap == quad_make(ring, params.a, -1))
    f = Frobenius::SwapsToBeta;
  else
    f = Frobenius::Ramified;
  int jac = jacobi(params.discriminant(), p);
  bool agree = (f == Frobenius::FixesAlpha && jac == 1) ||
               (f == Frobenius::SwapsToBeta && jac == -1) ||
               (f == Frobenius::Ramified && jac == 0);
  if (!agree)
    throw ConsistencyError(
        "frobenius_check: alpha^p classification disagrees with the Jacobi "
        "symbol at p = " + std::to_string(p));
  return f;
}

ModPoly ModPoly::from_coeffs(std::uint64_t modulus,
                             std::vector<std::int64_t> coeffs) {
  if (modulus == 0 || modulus >= kModulusLimit)
    throw std::invalid_argument("ModPoly: modulus must be in [1, 2^63)");
  ModPoly p;
  p.modulus = modulus;
  p.coeffs.reserve(coeffs.size());
  for (std::int64_t c : coeffs) p.coeffs.push_back(reduce_mod(c, modulus));
  while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
  return p;
}

ModPoly poly_mul(const ModPoly& f, const ModPoly& g) {
  if (f.modulus != g.modulus)
    throw std::invalid_argument("poly_mul: mismatched moduli");
  ModPoly out;
  out.modulus = f.modulus;
  if (f.coeffs.empty() || g.coeffs.empty()) return out;
  Barrett bar(f.modulus);
  out.coeffs.assign(f.coeffs.size() + g.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < g.coeffs.size(); ++j)
      out.coeffs[i + j] =
          add_mod(out.coeffs[i + j], bar.mul(f.coeffs[i], g.coeffs[j]),
                  f.modulus);
  }
  while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

ModPoly poly_pow(const ModPoly& f, std::uint64_t e) {
  ModPoly result = ModPoly::from_coeffs(f.modulus, {1});
  ModPoly base = f;
  while (e > 0) {
    if (e & 1) result = poly_mul(result, base);
    base = poly_mul(base, base);
    e >>= 1;
  }
  return result;
}

ModPoly falling_factorial_poly(std::uint64_t modulus, std::uint64_t count) {
  ModPoly acc = ModPoly::from_coeffs(modulus, {1});
  for (std::uint64_t k = 0; k < count; ++k) {
    ModPoly lin;
    lin.modulus = modulus;
    lin.coeffs = {reduce_mod(-static_cast<std::int64_t>(k), modulus), 1 % modulus};
    while (!lin.coeffs.empty() && lin.coeffs.back() == 0) lin.coeffs.pop_back();
    acc = poly_mul(acc, lin);
  }
  return acc;
}

bool check_factorial_congruence(std::uint64_t p, unsigned r) {
  if (!is_prime(p))
    throw std::invalid_argument("check_factorial_congruence: p must be prime");
  if (r < 1)
    throw std::invalid_argument("check_factorial_congruence: r must be >= 1");
  std::uint64_t pr = 1;
  for (unsigned i = 0; i < r; ++i) {
    pr = checked_mul(pr, p);
    if (pr > 4096)
      throw std::invalid_argument(
          "check_factorial_congruence: p^r must be <= 4096");
  }
  if (p == 2) {
    // doubled range: prod_{k=0}^{2^(r+1)-1}(X-k) = (X^2-X)^(2^r) mod 2^r
    ModPoly lhs = falling_factorial_poly(pr, 2 * pr);
    ModPoly rhs = poly_pow(ModPoly::from_coeffs(pr, {0, -1, 1}), pr);
    return lhs == rhs;
  }
  ModPoly lhs = falling_factorial_poly(pr, pr);
  ModPoly xp_minus_x;
  {
    std::vector<std::int64_t> c(p + 1, 0);
    c[1] = -1;
    c[p] = 1;
    xp_minus_x = ModPoly::from_coeffs(pr, std::move(c));
  }
  ModPoly rhs = poly_pow(xp_minus_x, pr / p);
  return lhs == rhs;
}

bool wieferich_product_condition(std::uint64_t p) {
  require_odd_prime(p, "wieferich_product_condition");
  std::uint64_t res5 = p % 5;
  if (res5 != 2 && res5 != 3)
    throw std::invalid_argument(
        "wieferich_product_condition: p must be 2 or 3 mod 5");
  std::uint64_t p2 = checked_mul(p, p);
  QuadRing ring(1, 1, p2);
  QuadInt prod = falling_product(ring, 2 * p);
  return prod == quad_make(ring, 5, 0);
}

}  // namespace holoperiod
