#include "holoperiod/recurrence.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "holoperiod/errors.hpp"
#include "holoperiod/modnum.hpp"
#include "mod_engine.hpp"

namespace holoperiod {

namespace {

constexpr std::uint64_t kTableCap = 1ull << 20;

std::int64_t checked_i64(__int128 v, const char* what) {
  if (v < -static_cast<__int128>(1ull << 62) ||
      v > static_cast<__int128>(1ull << 62))
    throw OverflowError(std::string(what) + " exceeds the supported range");
  return static_cast<std::int64_t>(v);
}

std::vector<std::uint64_t> reduce_poly(const Poly& p, std::uint64_t m) {
  std::vector<std::uint64_t> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = reduce_mod(p[i], m);
  return out;
}

std::uint64_t horner(const std::vector<std::uint64_t>& reduced,
                     std::uint64_t x, std::uint64_t m) {
  std::uint64_t acc = 0;
  for (std::size_t i = reduced.size(); i-- > 0;)
    acc = add_mod(mul_mod(acc, x, m), reduced[i], m);
  return acc;
}

// Forward-difference row of p at start index s: row[k] = Δ^k p(s) mod m.
std::vector<std::uint64_t> difference_row(
    const std::vector<std::uint64_t>& reduced, std::uint64_t s,
    std::uint64_t m) {
  std::size_t len = reduced.empty() ? 1 : reduced.size();
  std::vector<std::uint64_t> row(len, 0);
  for (std::size_t k = 0; k < len; ++k)
    row[k] = horner(reduced, (s + k) % m, m);
  for (std::size_t lvl = 1; lvl < len; ++lvl)
    for (std::size_t i = len; i-- > lvl;)
      row[i] = sub_mod(row[i], row[i - 1], m);
  return row;
}

}  // namespace

Poly poly_canonical(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::uint64_t poly_eval_mod(const Poly& p, std::uint64_t n, std::uint64_t m) {
  return horner(reduce_poly(p, m), n % m, m);
}

mpz_class poly_eval_exact(const Poly& p, const mpz_class& n) {
  mpz_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc *= n;
    acc += static_cast<long>(p[i]);
  }
  return acc;
}

Recurrence Recurrence::create(Poly leading, std::vector<Poly> trailing,
                              std::vector<mpz_class> initial) {
  Recurrence rec;
  rec.leading = poly_canonical(std::move(leading));
  if (rec.leading.empty())
    throw std::invalid_argument("recurrence: leading polynomial must be nonzero");
  if (trailing.empty())
    throw std::invalid_argument("recurrence: order must be >= 1");
  rec.order = static_cast<unsigned>(trailing.size());
  if (initial.size() != trailing.size())
    throw std::invalid_argument(
        "recurrence: need exactly one initial value per trailing polynomial");
  rec.trailing.reserve(trailing.size());
  for (auto& p : trailing) rec.trailing.push_back(poly_canonical(std::move(p)));
  rec.initial = std::move(initial);
  return rec;
}

std::int64_t FamilyParams::discriminant() const {
  __int128 d = static_cast<__int128>(a) * a + static_cast<__int128>(4) * b;
  return checked_i64(d, "family discriminant");
}

bool FamilyParams::rational_roots() const {
  std::int64_t d = discriminant();
  if (d < 0) return false;
  auto root = static_cast<std::uint64_t>(
      std::llround(std::sqrt(static_cast<double>(d))));
  for (std::uint64_t s = root > 1 ? root - 2 : 0; s <= root + 2; ++s)
    if (s * s == static_cast<std::uint64_t>(d)) return true;
  return false;
}

Recurrence family_recurrence(FamilyParams params) {
  params.discriminant();  // range check on (a, b)
  __int128 a = params.a, b = params.b;
  // u_n = (2(n-2) - a + 1) u_{n-1} + (b + a(n-2) - (n-2)^2) u_{n-2}
  Poly p1{checked_i64(-a - 3, "family coefficient"), 2};
  Poly p2{checked_i64(b - 2 * a - 4, "family coefficient"),
          checked_i64(a + 4, "family coefficient"), -1};
  return Recurrence::create(Poly{1}, {std::move(p1), std::move(p2)},
                            {mpz_class(1), mpz_class(0)});
}

std::vector<std::uint64_t> eval_mod(const Recurrence& rec, std::uint64_t m,
                                    std::uint64_t n_max) {
  detail::ModEngine engine(rec, m);
  auto cursor = engine.make_cursor();
  std::vector<std::uint64_t> out;
  out.reserve(n_max + 1);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    out.push_back(engine.front(cursor));
    if (n < n_max) engine.step(cursor);
  }
  return out;
}

std::vector<mpz_class> eval_exact(const Recurrence& rec, std::uint64_t n_max) {
  if (!rec.unit_leading())
    throw std::invalid_argument(
        "eval_exact: only recurrences with P0 = 1 evaluate exactly");
  std::vector<mpz_class> out;
  out.reserve(n_max + 1);
  for (std::uint64_t n = 0; n <= n_max && n < rec.order; ++n)
    out.push_back(rec.initial[n]);
  for (std::uint64_t n = rec.order; n <= n_max; ++n) {
    mpz_class acc = 0;
    mpz_class idx(static_cast<unsigned long>(n));
    for (unsigned i = 1; i <= rec.order; ++i)
      acc += poly_eval_exact(rec.trailing[i - 1], idx) * out[n - i];
    out.push_back(std::move(acc));
  }
  return out;
}

bool invertibility_check(const Recurrence& rec, std::uint64_t m) {
  if (m == 0 || m >= kModulusLimit)
    throw std::invalid_argument("modulus must be in [1, 2^63)");
  if (m == 1) return true;
  if (rec.leading.size() == 1 &&
      (rec.leading[0] == 1 || rec.leading[0] == -1))
    return true;
  for (const auto& pp : factorize(m)) {
    auto reduced = reduce_poly(rec.leading, pp.prime);
    for (std::uint64_t j = 0; j < pp.prime; ++j)
      if (horner(reduced, j, pp.prime) == 0) return false;
  }
  return true;
}

namespace detail {

ModEngine::ModEngine(const Recurrence& rec, std::uint64_t m)
    : m_(m),
      bar_(m),
      r_(rec.order),
      p0_unit_(rec.unit_leading()),
      table_mode_(m <= kTableCap && m * rec.order <= (1ull << 22)) {
  if (m == 0 || m >= kModulusLimit)
    throw std::invalid_argument("modulus must be in [1, 2^63)");
  fast_sum_ = m <= 0xFFFFFFFFull &&
              static_cast<unsigned __int128>(r_) * (m - 1) * (m - 1) <
                  (static_cast<unsigned __int128>(1) << 64);
  polys_.reserve(r_ + 1);
  for (const auto& p : rec.trailing) polys_.push_back(reduce_poly(p, m));
  if (!p0_unit_) polys_.push_back(reduce_poly(rec.leading, m));
  if (table_mode_) {
    coef_table_.resize(m * r_);
    for (std::uint64_t j = 0; j < m; ++j)
      for (unsigned t = 0; t < r_; ++t)
        coef_table_[j * r_ + t] = horner(polys_[t], j, m);
    if (!p0_unit_) {
      p0_table_.resize(m);
      p0_inv_.resize(m);
      for (std::uint64_t j = 0; j < m; ++j) {
        p0_table_[j] = horner(polys_[r_], j, m);
        p0_inv_[j] = inv_mod(p0_table_[j], m);
      }
    }
  }
  hot_ = table_mode_ && fast_sum_ && p0_unit_ && r_ == 2;
  init_.reserve(r_);
  for (const auto& v : rec.initial) {
    mpz_class red = v % mpz_class(static_cast<unsigned long>(m));
    if (red < 0) red += mpz_class(static_cast<unsigned long>(m));
    init_.push_back(mpz_get_ui(red.get_mpz_t()));
  }
}

ModEngine::Cursor ModEngine::make_cursor() const {
  Cursor c;
  c.window = init_;
  c.jk = 0;
  c.ji = r_ % m_;
  if (!table_mode_) {
    c.diffs.reserve(polys_.size());
    for (const auto& p : polys_) c.diffs.push_back(difference_row(p, c.ji, m_));
  }
  return c;
}

std::uint64_t ModEngine::apply_leading_inverse(const Cursor& c,
                                               std::uint64_t val) const {
  std::uint64_t p0v = table_mode_ ? p0_table_[c.ji] : c.diffs[r_][0];
  std::uint64_t inv = table_mode_ ? p0_inv_[c.ji] : inv_mod(p0v, m_);
  if (inv == 0)
    throw NonInvertibleLeading(c.index + r_, std::gcd(p0v, m_), m_);
  return bar_.mul(val, inv);
}

}  // namespace detail

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream iss(line.substr(0, line.find('#')));
  std::string t;
  while (iss >> t) toks.push_back(t);
  return toks;
}

std::int64_t parse_i64(const std::string& s) {
  std::size_t pos = 0;
  std::int64_t v;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("recurrence file: bad integer '" + s + "'");
  }
  if (pos != s.size())
    throw std::invalid_argument("recurrence file: bad integer '" + s + "'");
  return v;
}

mpz_class parse_mpz(const std::string& s) {
  try {
    return mpz_class(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("recurrence file: bad initial value '" + s +
                                "'");
  }
}

}  // namespace

Recurrence parse_recurrence(std::istream& in) {
  long order = -1;
  std::vector<Poly> polys;  // P0 .. Pr
  std::vector<bool> seen;
  std::vector<mpz_class> initial;
  bool have_init = false;

  std::string line;
  while (std::getline(in, line)) {
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    if (key == "order") {
      if (toks.size() != 2)
        throw std::invalid_argument("recurrence file: 'order' wants one value");
      order = parse_i64(toks[1]);
      if (order < 1 || order > 64)
        throw std::invalid_argument("recurrence file: order must be in [1, 64]");
      polys.assign(static_cast<std::size_t>(order) + 1, Poly{});
      seen.assign(static_cast<std::size_t>(order) + 1, false);
    } else if (key.size() > 1 && key[0] == 'P') {
      if (order < 0)
        throw std::invalid_argument("recurrence file: 'order' must come first");
      long idx = parse_i64(key.substr(1));
      if (idx < 0 || idx > order)
        throw std::invalid_argument("recurrence file: polynomial index out of range");
      if (seen[static_cast<std::size_t>(idx)])
        throw std::invalid_argument("recurrence file: duplicate " + key);
      Poly p;
      for (std::size_t i = 1; i < toks.size(); ++i)
        p.push_back(parse_i64(toks[i]));
      polys[static_cast<std::size_t>(idx)] = std::move(p);
      seen[static_cast<std::size_t>(idx)] = true;
    } else if (key == "init") {
      if (order < 0)
        throw std::invalid_argument("recurrence file: 'order' must come first");
      if (have_init)
        throw std::invalid_argument("recurrence file: duplicate 'init'");
      for (std::size_t i = 1; i < toks.size(); ++i)
        initial.push_back(parse_mpz(toks[i]));
      have_init = true;
    } else {
      throw std::invalid_argument("recurrence file: unknown key '" + key + "'");
    }
  }
  if (order < 0) throw std::invalid_argument("recurrence file: missing 'order'");
  for (long i = 0; i <= order; ++i)
    if (!seen[static_cast<std::size_t>(i)])
      throw std::invalid_argument("recurrence file: missing P" +
                                  std::to_string(i));
  if (!have_init) throw std::invalid_argument("recurrence file: missing 'init'");
  if (initial.size() != static_cast<std::size_t>(order))
    throw std::invalid_argument(
        "recurrence file: 'init' wants exactly order-many values");
  std::vector<Poly> trailing(polys.begin() + 1, polys.end());
  return Recurrence::create(std::move(polys[0]), std::move(trailing),
                            std::move(initial));
}

Recurrence parse_recurrence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open recurrence file: " + path);
  return parse_recurrence(in);
}

void write_recurrence(std::ostream& out, const Recurrence& rec) {
  out << "order " << rec.order << "\n";
  auto put_poly = [&out](const char* name, unsigned idx, const Poly& p) {
    out << name << idx;
    if (p.empty()) out << " 0";
    for (std::int64_t c : p) out << ' ' << c;
    out << "\n";
  };
  put_poly("P", 0, rec.leading);
  for (unsigned i = 0; i < rec.order; ++i)
    put_poly("P", i + 1, rec.trailing[i]);
  out << "init";
  for (const auto& v : rec.initial) out << ' ' << v.get_str();
  out << "\n";
}

}  // namespace holoperiod
