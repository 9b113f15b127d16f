// holoperiod: periods mod m of polynomially-recursive sequences.
//
// Subcommands: seq, period, table, verify, wieferich, congruence.
// Exit codes: 0 success, 2 usage or guard violation, 3 mathematical
// disagreement or anomaly.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "holoperiod/cycle.hpp"
#include "holoperiod/errors.hpp"
#include "holoperiod/modnum.hpp"
#include "holoperiod/quadring.hpp"
#include "holoperiod/recurrence.hpp"
#include "holoperiod/theory.hpp"

namespace {

using holoperiod::FamilyParams;
using holoperiod::Recurrence;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitAnomaly = 3;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

unsigned resolve_threads(unsigned flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("HOLOPERIOD_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void emit(const ordered_json& record) { std::cout << record.dump() << "\n"; }

ordered_json make_record(const std::string& command, ordered_json input,
                         ordered_json result, const std::string& method,
                         double elapsed_ms,
                         const std::vector<std::string>& anomalies = {}) {
  ordered_json rec;
  rec["command"] = command;
  rec["input"] = std::move(input);
  rec["result"] = std::move(result);
  rec["method"] = method;
  rec["elapsed_ms"] = elapsed_ms;
  rec["anomalies"] = anomalies;
  return rec;
}

ordered_json factors_json(const holoperiod::Classification& cls) {
  ordered_json arr = ordered_json::array();
  for (const auto& f : cls.factors) {
    ordered_json e;
    e["prime"] = f.prime;
    e["exponent"] = f.exponent;
    e["symbol"] = f.symbol;
    e["bound"] = f.bound;
    e["T"] = f.period;
    if (f.via_fallback) e["via_fallback"] = true;
    arr.push_back(std::move(e));
  }
  return arr;
}

struct SeqArgs {
  std::uint64_t m = 0;
  std::uint64_t count = 0;
  std::int64_t a = 1, b = 1;
  bool exact = false;
  bool json = false;
  std::string recurrence_file;
};

Recurrence load_recurrence(const std::string& path, FamilyParams params) {
  if (!path.empty()) return holoperiod::parse_recurrence_file(path);
  return holoperiod::family_recurrence(params);
}

int run_seq(const SeqArgs& args) {
  if (args.count < 1)
    throw std::invalid_argument("seq: --count must be >= 1");
  if (!args.exact && args.m < 1)
    throw std::invalid_argument("seq: --m is required unless --exact");
  Timer timer;
  Recurrence rec = load_recurrence(args.recurrence_file, {args.a, args.b});
  ordered_json input{{"count", args.count}, {"a", args.a}, {"b", args.b}};
  if (!args.recurrence_file.empty())
    input["recurrence_file"] = args.recurrence_file;
  ordered_json values = ordered_json::array();
  if (args.exact) {
    auto exact = holoperiod::eval_exact(rec, args.count);
    if (!args.json) {
      for (const auto& v : exact) std::cout << v.get_str() << "\n";
      return kExitOk;
    }
    input["exact"] = true;
    for (const auto& v : exact) values.push_back(v.get_str());
  } else {
    auto mod = holoperiod::eval_mod(rec, args.m, args.count);
    if (!args.json) {
      for (auto v : mod) std::cout << v << "\n";
      return kExitOk;
    }
    input["m"] = args.m;
    for (auto v : mod) values.push_back(v);
  }
  emit(make_record("seq", std::move(input), ordered_json{{"values", values}},
                   args.exact ? "exact" : "mod", timer.elapsed_ms()));
  return kExitOk;
}

struct PeriodArgs {
  std::uint64_t m = 0;
  std::string method = "both";
  std::int64_t a = 1, b = 1;
  bool json = false;
  std::string recurrence_file;
};

int run_period(const PeriodArgs& args) {
  if (args.m < 1) throw std::invalid_argument("period: --m must be >= 1");
  bool custom = !args.recurrence_file.empty();
  if (custom && args.method != "brute")
    throw std::invalid_argument(
        "period: the fast method needs the two-parameter family; use "
        "--method brute with --recurrence-file");
  Timer timer;
  FamilyParams params{args.a, args.b};
  Recurrence rec = load_recurrence(args.recurrence_file, params);

  std::optional<holoperiod::PeriodResult> brute;
  std::optional<holoperiod::FastPeriodOutcome> fast;
  if (args.method == "brute" || args.method == "both")
    brute = holoperiod::detect_period(rec, args.m);
  if (args.method == "fast" || args.method == "both")
    fast = holoperiod::fast_period(args.m, params);

  std::vector<std::string> anomalies;
  if (fast) anomalies = fast->classification.anomalies;
  bool disagree = brute && fast && brute->period != fast->result.period;
  if (disagree)
    anomalies.push_back("fast period " +
                        std::to_string(fast->result.period) +
                        " disagrees with brute period " +
                        std::to_string(brute->period));

  holoperiod::Method method = args.method == "brute" ? holoperiod::Method::brute
                              : args.method == "fast"
                                  ? holoperiod::Method::fast
                                  : holoperiod::Method::both_agree;
  if (disagree) method = holoperiod::Method::fast;  // no agreement to claim
  const auto& primary = brute ? *brute : fast->result;

  ordered_json result;
  result["modulus"] = args.m;
  result["T"] = primary.period;
  result["preperiod"] = primary.preperiod;
  if (brute && brute->cycle) {
    result["lambda"] = brute->cycle->lambda;
    result["mu"] = brute->cycle->mu;
  }
  if (fast) result["factors"] = factors_json(fast->classification);

  if (args.json) {
    ordered_json input{{"m", args.m},
                       {"method", args.method},
                       {"a", args.a},
                       {"b", args.b}};
    if (custom) input["recurrence_file"] = args.recurrence_file;
    emit(make_record("period", std::move(input), std::move(result),
                     holoperiod::method_name(method), timer.elapsed_ms(),
                     anomalies));
  } else {
    std::cout << "T_" << args.m << " = " << primary.period << "\n";
    std::cout << "preperiod " << (brute ? "= " : "<= ") << primary.preperiod
              << "\n";
    std::cout << "method: " << holoperiod::method_name(method) << "\n";
    if (brute && brute->cycle)
      std::cout << "state cycle: lambda = " << brute->cycle->lambda
                << ", mu = " << brute->cycle->mu << "\n";
    if (fast)
      for (const auto& f : fast->classification.factors)
        std::cout << "  " << f.prime << "^" << f.exponent
                  << ": T = " << f.period << " (bound " << f.bound
                  << ", symbol " << f.symbol << ")\n";
    for (const auto& a : anomalies) std::cout << "anomaly: " << a << "\n";
  }
  return anomalies.empty() ? kExitOk : kExitAnomaly;
}

struct TableArgs {
  std::uint64_t max = 0;
  std::string method = "fast";
  std::int64_t a = 1, b = 1;
  bool json = false;
};

int run_table(const TableArgs& args) {
  if (args.max < 2) throw std::invalid_argument("table: --max must be >= 2");
  Timer timer;
  FamilyParams params{args.a, args.b};
  Recurrence rec = holoperiod::family_recurrence(params);
  std::vector<std::uint64_t> periods;
  std::vector<std::string> anomalies;
  periods.reserve(args.max - 1);
  for (std::uint64_t m = 2; m <= args.max; ++m) {
    if (args.method == "brute") {
      periods.push_back(holoperiod::detect_period(rec, m).period);
    } else {
      auto fast = holoperiod::fast_period(m, params);
      periods.push_back(fast.result.period);
      for (const auto& a : fast.classification.anomalies)
        anomalies.push_back("m = " + std::to_string(m) + ": " + a);
    }
  }
  if (args.json) {
    emit(make_record(
        "table",
        ordered_json{{"max", args.max}, {"method", args.method},
                     {"a", args.a}, {"b", args.b}},
        ordered_json{{"periods", periods}}, args.method, timer.elapsed_ms(),
        anomalies));
  } else {
    for (std::size_t i = 0; i < periods.size(); ++i)
      std::cout << periods[i] << (i + 1 < periods.size() ? ", " : "\n");
    for (const auto& a : anomalies) std::cout << "anomaly: " << a << "\n";
  }
  return anomalies.empty() ? kExitOk : kExitAnomaly;
}

struct VerifyArgs {
  std::uint64_t max = 0;
  unsigned threads = 0;
  std::int64_t a = 1, b = 1;
  bool json = false;
};

int run_verify(const VerifyArgs& args) {
  if (args.max < 1) throw std::invalid_argument("verify: --max must be >= 1");
  Timer timer;
  FamilyParams params{args.a, args.b};
  unsigned threads = resolve_threads(args.threads);

  struct Mismatch {
    std::uint64_t m, fast, brute;
  };
  std::vector<Mismatch> mismatches;
  std::mutex mtx;
  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    Recurrence rec = holoperiod::family_recurrence(params);
    std::vector<Mismatch> local;
    for (std::uint64_t m = lo; m < hi; ++m) {
      std::uint64_t fast = holoperiod::fast_period(m, params).result.period;
      std::uint64_t brute = holoperiod::detect_period(rec, m).period;
      if (fast != brute) local.push_back({m, fast, brute});
    }
    std::scoped_lock lock(mtx);
    mismatches.insert(mismatches.end(), local.begin(), local.end());
  };
  std::uint64_t total = args.max;
  std::uint64_t n_workers = std::min<std::uint64_t>(threads, total);
  if (n_workers <= 1) {
    work(1, args.max + 1);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t chunk = (total + n_workers - 1) / n_workers;
    for (std::uint64_t w = 0; w < n_workers; ++w) {
      std::uint64_t lo = 1 + w * chunk;
      std::uint64_t hi = std::min<std::uint64_t>(args.max + 1, lo + chunk);
      if (lo <= args.max) pool.emplace_back(work, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  std::sort(mismatches.begin(), mismatches.end(),
            [](const Mismatch& l, const Mismatch& r) { return l.m < r.m; });

  std::vector<std::string> anomalies;
  for (const auto& mm : mismatches)
    anomalies.push_back("m = " + std::to_string(mm.m) + ": fast " +
                        std::to_string(mm.fast) + " != brute " +
                        std::to_string(mm.brute));
  if (args.json) {
    emit(make_record("verify",
                     ordered_json{{"max", args.max}, {"a", args.a},
                                  {"b", args.b}},
                     ordered_json{{"checked", args.max},
                                  {"mismatches", mismatches.size()}},
                     "both", timer.elapsed_ms(), anomalies));
  } else {
    for (const auto& a : anomalies) std::cout << "mismatch: " << a << "\n";
    std::cout << "verified m in [1, " << args.max << "]: "
              << mismatches.size() << " mismatches ("
              << timer.elapsed_ms() / 1000.0 << " s)\n";
  }
  return mismatches.empty() ? kExitOk : kExitAnomaly;
}

struct WieferichArgs {
  std::uint64_t limit = 0;
  unsigned threads = 0;
};

int run_wieferich(const WieferichArgs& args) {
  Timer timer;
  auto scan =
      holoperiod::wieferich_search(args.limit, resolve_threads(args.threads));
  for (const auto& hit : scan.hits) {
    ordered_json rec;
    rec["prime"] = hit.prime;
    rec["residue_mod5"] = hit.residue_mod5;
    rec["fermat_quotient_zero"] = hit.fermat_quotient_zero;
    rec["product_condition"] = hit.product_condition;
    emit(rec);
  }
  std::cerr << "scanned " << scan.primes_scanned
            << " primes = 2,3 mod 5 up to " << args.limit << " in "
            << timer.elapsed_ms() / 1000.0 << " s; " << scan.hits.size()
            << " hits\n";
  return kExitOk;
}

struct CongruenceArgs {
  std::uint64_t p = 0;
  unsigned r = 0;
};

int run_congruence(const CongruenceArgs& args) {
  bool ok = holoperiod::check_factorial_congruence(args.p, args.r);
  std::cout << (ok ? "true" : "false") << "\n";
  return ok ? kExitOk : kExitAnomaly;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "periods mod m of polynomially-recursive sequences: brute-force state "
      "cycles, structured fast computation, and the congruence toolkit "
      "behind them"};
  app.require_subcommand(1);

  SeqArgs seq_args;
  auto* seq = app.add_subcommand("seq", "print b_0..b_count (mod m or exact)");
  seq->add_option("--m", seq_args.m, "modulus");
  seq->add_option("--count", seq_args.count, "last index to print")
      ->required();
  seq->add_option("--a", seq_args.a, "family parameter a");
  seq->add_option("--b", seq_args.b, "family parameter b");
  seq->add_flag("--exact", seq_args.exact, "exact integer values");
  seq->add_flag("--json", seq_args.json, "JSON-lines output");
  seq->add_option("--recurrence-file", seq_args.recurrence_file,
                  "evaluate a recurrence loaded from this file");

  PeriodArgs period_args;
  auto* period =
      app.add_subcommand("period", "eventual period T_m and preperiod");
  period->add_option("--m", period_args.m, "modulus")->required();
  period->add_option("--method", period_args.method, "brute | fast | both")
      ->check(CLI::IsMember({"brute", "fast", "both"}));
  period->add_option("--a", period_args.a, "family parameter a");
  period->add_option("--b", period_args.b, "family parameter b");
  period->add_flag("--json", period_args.json, "JSON-lines output");
  period->add_option("--recurrence-file", period_args.recurrence_file,
                     "use a recurrence loaded from this file (brute only)");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "comma-separated T_2..T_max");
  table->add_option("--max", table_args.max, "largest modulus")->required();
  table->add_option("--method", table_args.method, "fast | brute")
      ->check(CLI::IsMember({"fast", "brute"}));
  table->add_option("--a", table_args.a, "family parameter a");
  table->add_option("--b", table_args.b, "family parameter b");
  table->add_flag("--json", table_args.json, "JSON-lines output");

  VerifyArgs verify_args;
  auto* verify =
      app.add_subcommand("verify", "fast vs brute for all m <= max");
  verify->add_option("--max", verify_args.max, "largest modulus")->required();
  verify->add_option("--threads", verify_args.threads,
                     "worker count (0 = machine parallelism)");
  verify->add_option("--a", verify_args.a, "family parameter a");
  verify->add_option("--b", verify_args.b, "family parameter b");
  verify->add_flag("--json", verify_args.json, "JSON-lines output");

  WieferichArgs wieferich_args;
  auto* wieferich = app.add_subcommand(
      "wieferich", "scan primes = 2,3 mod 5 for the two square-lift conditions");
  wieferich->add_option("--limit", wieferich_args.limit, "scan bound")
      ->required();
  wieferich->add_option("--threads", wieferich_args.threads,
                        "worker count (0 = machine parallelism)");

  CongruenceArgs congruence_args;
  auto* congruence = app.add_subcommand(
      "congruence", "coefficient-wise factorial product congruence mod p^r");
  congruence->add_option("--p", congruence_args.p, "prime")->required();
  congruence->add_option("--r", congruence_args.r, "exponent")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (seq->parsed()) return run_seq(seq_args);
    if (period->parsed()) return run_period(period_args);
    if (table->parsed()) return run_table(table_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (wieferich->parsed()) return run_wieferich(wieferich_args);
    if (congruence->parsed()) return run_congruence(congruence_args);
  } catch (const holoperiod::ConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAnomaly;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    // NonInvertibleLeading, UnsupportedCase, OverflowError, resource caps:
    // all reject the request rather than report a wrong answer.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
