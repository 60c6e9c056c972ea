// gwalk: verify the group structure and periodicity of the Grover walk on
// complete graphs with self-loops, and simulate the walk.
//
// Exit status: 0 all checks pass, 1 a check failed, 2 usage error,
// 3 element ceiling exceeded, 4 output could not be written.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "gwalk/report.hpp"

namespace {

using namespace gwalk;

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kResourceLimit = 3, kIoError = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, Engine> kEngines = {
    {"monomial", Engine::monomial}, {"exact", Engine::exact}, {"both", Engine::both}};

/// Writes to `path`, or stdout for "" / "-".
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  fn(out);
  if (!out) throw IoError("failed writing " + path);
}

void require_n(unsigned n) {
  if (n < 2 || n > kMaxWalkSize)
    throw UsageError("--n must be in 2.." + std::to_string(kMaxWalkSize) + ", got " + std::to_string(n));
}

AmplitudeState parse_init(unsigned n, const std::string& spec, std::uint64_t seed) {
  if (spec == "uniform") return uniform_state(n);
  if (spec == "random" || spec == "seeded-random") {
    std::mt19937_64 rng(seed);
    return random_state(n, rng);
  }
  if (spec.rfind("vertex:", 0) == 0) {
    const std::string idx = spec.substr(7);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(idx, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != idx.size()) throw UsageError("bad vertex index in --init " + spec);
    if (v < 1 || v > n) throw UsageError("--init vertex must be in 1.." + std::to_string(n));
    return vertex_state(n, static_cast<unsigned>(v));
  }
  throw UsageError("--init must be uniform, vertex:<j> or seeded-random, got " + spec);
}

struct Options {
  unsigned n = 0;
  std::string engine = "monomial";
  std::string mode = "both";
  unsigned long long steps = 0;
  std::string init = "uniform";
  std::uint64_t seed = 0;
  std::string out;
  std::string amplitudes_out;
  std::string format;
  std::size_t max_elements = kDefaultElementCeiling;
  bool timing = false;
};

int cmd_verify(const Options& o) {
  require_n(o.n);
  if (!o.format.empty() && o.format != "json") throw UsageError("verify writes json only");
  VerifyOptions vo;
  vo.engine = kEngines.at(o.engine);
  vo.max_elements = o.max_elements;
  vo.seed = o.seed;
  const auto report = run_verify(o.n, vo);
  with_output(o.out, [&](std::ostream& os) { os << to_json(report, o.timing).dump(2) << '\n'; });
  if (!o.out.empty() && o.out != "-")
    for (const auto& c : report.checks)
      std::cerr << (c.status == CheckStatus::pass ? "PASS " : c.status == CheckStatus::fail ? "FAIL " : "SKIP ")
                << c.name << ": " << c.details << '\n';
  return report.passed() ? kOk : kCheckFailed;
}

int cmd_period(const Options& o) {
  require_n(o.n);
  if (!o.format.empty() && o.format != "json") throw UsageError("period supports --format json or plain text");
  const Engine engine = kEngines.at(o.engine);
  const bool want_exact = o.mode != "float", want_float = o.mode != "exact";
  const unsigned long long target = 2ull * o.n;

  std::optional<unsigned long long> exact, numeric;
  if (want_exact) {
    const auto bound = generate_K<MonomialBackend>(o.n, o.max_elements).order();
    exact = engine == Engine::exact ? minimal_common_exponent<ExactBackend>(o.n, bound)
                                    : minimal_common_exponent<MonomialBackend>(o.n, bound);
    if (engine == Engine::both && exact != minimal_common_exponent<ExactBackend>(o.n, bound)) exact.reset();
  }
  if (want_float) {
    PeriodOptions po;
    po.seed = o.seed;
    numeric = detect_period(o.n, po);
  }
  const bool ok = (!want_exact || exact == target) && (!want_float || numeric == target);

  with_output(o.out, [&](std::ostream& os) {
    if (o.format == "json") {
      Json j;
      j["schema_version"] = kReportSchemaVersion;
      j["command"] = "period";
      j["n"] = o.n;
      j["mode"] = o.mode;
      j["seed"] = o.seed;
      if (want_exact) j["exact"] = exact ? Json(*exact) : Json(nullptr);
      if (want_float) j["float"] = numeric ? Json(*numeric) : Json(nullptr);
      j["expected"] = target;
      j["passed"] = ok;
      os << j.dump(2) << '\n';
    } else {
      if (want_exact) os << "exact: " << (exact ? std::to_string(*exact) : "none") << '\n';
      if (want_float) os << "float: " << (numeric ? std::to_string(*numeric) : "none") << '\n';
      os << "seed: " << o.seed << '\n';
    }
  });
  return ok ? kOk : kCheckFailed;
}

int cmd_simulate(const Options& o) {
  require_n(o.n);
  if (!o.format.empty() && o.format != "csv") throw UsageError("simulate writes csv only");
  const AmplitudeState init = parse_init(o.n, o.init, o.seed);
  WalkTrace trace = simulate(o.n, init, o.steps);
  if (o.init == "random" || o.init == "seeded-random") trace.seed = o.seed;
  with_output(o.out, [&](std::ostream& os) {
    if (trace.seed) os << "# seed " << *trace.seed << '\n';
    write_probability_csv(os, trace);
  });
  if (!o.amplitudes_out.empty()) with_output(o.amplitudes_out, [&](std::ostream& os) { write_amplitude_csv(os, trace); });
  return kOk;
}

int cmd_group(const Options& o) {
  require_n(o.n);
  if (!o.format.empty() && o.format != "json") throw UsageError("group writes json only");
  const Engine engine = kEngines.at(o.engine);
  Json j;
  bool ok = true;
  if (engine == Engine::both) {
    const auto m = make_group_report<MonomialBackend>(o.n, o.max_elements);
    const auto e = make_group_report<ExactBackend>(o.n, o.max_elements);
    const bool agree = m.order_K == e.order_K && m.order_H == e.order_H && m.order_quotient == e.order_quotient &&
                       m.quotient_structure == e.quotient_structure;
    j["schema_version"] = kReportSchemaVersion;
    j["command"] = "group";
    j["n"] = o.n;
    j["engine"] = "both";
    j["reports"] = Json::array({to_json(m), to_json(e)});
    j["engines_agree"] = agree;
    ok = agree && m.consistent() && e.consistent();
  } else {
    const auto r = engine == Engine::exact ? make_group_report<ExactBackend>(o.n, o.max_elements)
                                           : make_group_report<MonomialBackend>(o.n, o.max_elements);
    j = to_json(r);
    ok = r.consistent();
  }
  with_output(o.out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grover walk group structure and periodicity on complete graphs with self-loops"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* c) { c->add_option("--n", o.n, "number of vertices (>= 2)")->required(); };
  auto add_engine = [&](CLI::App* c) {
    c->add_option("--engine", o.engine, "group element backend")->check(CLI::IsMember({"monomial", "exact", "both"}));
  };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--out", o.out, "output path (default stdout)");
    c->add_option("--seed", o.seed, "seed for random initial states");
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_ceiling = [&](CLI::App* c) {
    c->add_option("--max-elements", o.max_elements, "abort group closures larger than this")->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify", "run every structural check for one n, JSON report");
  add_n(verify);
  add_engine(verify);
  add_common(verify);
  add_ceiling(verify);
  verify->add_flag("--timing", o.timing, "include elapsed time in the report");

  auto* period = app.add_subcommand("period", "minimal period, exactly and/or numerically");
  add_n(period);
  add_engine(period);
  add_common(period);
  add_ceiling(period);
  period->add_option("--mode", o.mode, "exact, float or both")->check(CLI::IsMember({"exact", "float", "both"}));

  auto* sim = app.add_subcommand("simulate", "write a walk trace as CSV");
  add_n(sim);
  add_common(sim);
  sim->add_option("--steps", o.steps, "number of steps")->check(CLI::NonNegativeNumber);
  sim->add_option("--init", o.init, "uniform | vertex:<j> (1-based) | seeded-random");
  sim->add_option("--amplitudes", o.amplitudes_out, "also write t,index,re,im amplitudes here");

  auto* group = app.add_subcommand("group", "orders, quotient structure and membership facts, JSON report");
  add_n(group);
  add_engine(group);
  add_common(group);
  add_ceiling(group);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return cmd_verify(o);
    if (*period) return cmd_period(o);
    if (*sim) return cmd_simulate(o);
    if (*group) return cmd_group(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ClosureLimitExceeded& e) {
    std::cerr << "resource limit: " << e.what() << " (raise --max-elements)\n";
    return kResourceLimit;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kIoError;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}
