#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace holoperiod {

/// Integer polynomial in the index variable, coefficients ascending by
/// degree. Canonical form has no trailing zero; the zero polynomial is empty.
using Poly = std::vector<std::int64_t>;

/// Strips trailing zeros.
Poly poly_canonical(Poly p);

/// P(n) mod m by Horner on pre-reduced coefficients.
std::uint64_t poly_eval_mod(const Poly& p, std::uint64_t n, std::uint64_t m);

/// P(n) exactly.
mpz_class poly_eval_exact(const Poly& p, const mpz_class& n);

/// Order-r recurrence with integer-polynomial coefficients:
///
///   P0(n) * u_n = sum_{i=1..r} Pi(n) * u_{n-i}   for n >= r,
///
/// seeded by exact initial values u_0 .. u_{r-1}.
struct Recurrence {
  unsigned order = 0;                 // r >= 1
  Poly leading;                       // P0
  std::vector<Poly> trailing;         // P1 .. Pr
  std::vector<mpz_class> initial;     // u_0 .. u_{r-1}

  /// Validates counts, canonicalizes polynomials.
  static Recurrence create(Poly leading, std::vector<Poly> trailing,
                           std::vector<mpz_class> initial);

  /// True when P0 is the constant 1.
  bool unit_leading() const {
    return leading.size() == 1 && leading[0] == 1;
  }
};

/// Parameters (a, b) of the two-parameter family whose roots are those of
/// x^2 - a x - b; the discriminant a^2 + 4b decides the arithmetic of the
/// family mod every prime.
struct FamilyParams {
  std::int64_t a = 1;
  std::int64_t b = 1;

  std::int64_t discriminant() const;   // a^2 + 4b, overflow-checked
  bool rational_roots() const;         // discriminant is a perfect square

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// The order-2 recurrence
///   u_n = (2(n-2) - a + 1) u_{n-1} + (b + a(n-2) - (n-2)^2) u_{n-2},
/// u_0 = 1, u_1 = 0. For (a, b) = (1, 1) this is the sequence
/// 1, 0, 1, 2, 7, 32, 179, ...
Recurrence family_recurrence(FamilyParams params);

/// Residues u_0 .. u_{n_max} mod m. Requires an ultimately invertible leading
/// coefficient; a non-invertible P0(n) encountered during evaluation throws
/// NonInvertibleLeading.
std::vector<std::uint64_t> eval_mod(const Recurrence& rec, std::uint64_t m,
                                    std::uint64_t n_max);

/// Exact values u_0 .. u_{n_max}; only defined for P0 = 1.
std::vector<mpz_class> eval_exact(const Recurrence& rec, std::uint64_t n_max);

/// True iff gcd(P0(n) mod m, m) = 1 for every residue class n in [0, m).
/// Because P0(n) mod m is m-periodic in n this is equivalent to ultimate
/// invertibility.
bool invertibility_check(const Recurrence& rec, std::uint64_t m);

/// Plain-text recurrence format, one polynomial per line:
///
///   order 2
///   P0 1
///   P1 -4 2
///   P2 -5 5 -1
///   init 1 0
///
/// Coefficients ascend by degree; '#' starts a comment.
Recurrence parse_recurrence(std::istream& in);
Recurrence parse_recurrence_file(const std::string& path);
void write_recurrence(std::ostream& out, const Recurrence& rec);

}  // namespace holoperiod
