#pragma once

// Verification suites and their serialized forms. The CLI in tools/ is a thin
// argument parser over these functions.
//
// JSON reports carry a top-level "schema_version". Walk traces are CSV:
//   probabilities:  t,vertex,probability     (vertex is 1-based)
//   amplitudes:     t,index,re,im            (index is 0-based into Psi_t)

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <type_traits>
#include <string>
#include <vector>

#include "gwalk/exact_linalg.hpp"
#include "gwalk/group.hpp"
#include "gwalk/monomial.hpp"
#include "gwalk/walk_sim.hpp"

namespace gwalk {

inline constexpr int kReportSchemaVersion = 1;
/// Largest n accepted by the CLI.
inline constexpr unsigned kMaxWalkSize = 16;
/// Largest n on which verify cross-runs the exact backend automatically.
inline constexpr unsigned kExactCrossCheckLimit = 8;
/// Largest n for the direct U^m power scan in exact arithmetic.
inline constexpr unsigned kExactEvolutionLimit = 6;

enum class Engine { monomial, exact, both };

inline std::string to_string(Engine e) {
  switch (e) {
    case Engine::monomial: return "monomial";
    case Engine::exact: return "exact";
    case Engine::both: return "both";
  }
  return "?";
}

enum class CheckStatus { pass, fail, skipped };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  std::string details;
};

struct VerificationReport {
  unsigned n = 0;
  Engine engine = Engine::monomial;
  std::vector<CheckResult> checks;
  std::optional<double> elapsed_ms;

  bool passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::fail) return false;
    return true;
  }
};

struct VerifyOptions {
  Engine engine = Engine::monomial;
  std::size_t max_elements = kDefaultElementCeiling;
  std::uint64_t seed = 0;
};

namespace detail {

inline CheckResult check(std::string name, bool ok, std::string details) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(details)};
}

inline std::vector<CheckResult> exact_matrix_checks(unsigned n) {
  std::vector<CheckResult> out;
  const CycMatrix g = build_G(n), s = build_S(n);

  out.push_back(check("exact/grover_involutory", (g * g).is_identity(), "G^2 = I"));
  out.push_back(check("exact/phase_order", mat_pow(s, n).is_identity(), "S^n = I"));

  bool noncommuting = true;
  std::string bad;
  for (unsigned j = 1; j < n; ++j) {
    const CycMatrix sj = build_S_pow(n, j);
    if (g * sj == sj * g) {
      noncommuting = false;
      bad += " j=" + std::to_string(j);
    }
  }
  out.push_back(check("exact/grover_phase_noncommuting", noncommuting,
                      noncommuting ? "G S^j != S^j G for j = 1..n-1" : "commuting for" + bad));

  out.push_back(check("exact/diagonalization", check_diagonalization(n),
                      "(A (x) I)^-1 U (A (x) I) = diag(G, SG, ..., S^{n-1}G)"));

  bool comm_form = true, comm_inv = true;
  for (unsigned j = 1; j < n; ++j) {
    const CycMatrix sj = build_S_pow(n, j);
    const CycMatrix c = commutator(sj, g);
    const CycMatrix chat = conjugate_by_A(c);
    for (unsigned i = 0; i < n && comm_form; ++i)
      for (unsigned k = 0; k < n; ++k) {
        const bool minus = i == k && (i == 0 || i == j);
        const CycNum want = i != k ? CycNum::zero(n) : minus ? -CycNum::one(n) : CycNum::one(n);
        if (!(chat(i, k) == want)) {
          comm_form = false;
          break;
        }
      }
    comm_inv = comm_inv && (c * c).is_identity() && c == commutator(g, sj);
  }
  out.push_back(check("exact/commutator_fourier_form", comm_form,
                      "A^-1 [S^j,G] A diagonal with -1 exactly at positions 1 and j+1"));
  out.push_back(check("exact/commutator_involutory", comm_inv, "[S^j,G]^2 = I and [S^j,G] = [G,S^j]"));

  if (n <= kExactEvolutionLimit) {
    const CycMatrix u = build_U(n);
    CycMatrix p = u;
    std::optional<unsigned> first;
    for (unsigned m = 1; m <= 2 * n; ++m) {
      if (p.is_identity()) {
        first = m;
        break;
      }
      p = p * u;
    }
    out.push_back(check("exact/evolution_period", first == 2 * n,
                        first ? "smallest m with U^m = I is " + std::to_string(*first)
                              : "U^m != I for all m <= 2n"));
  } else {
    out.push_back({"exact/evolution_period", CheckStatus::skipped,
                   "direct U^m scan runs for n <= " + std::to_string(kExactEvolutionLimit) +
                       "; covered by minimal_common_exponent via the block diagonalization"});
  }
  return out;
}

template <GroupBackend B>
std::vector<CheckResult> group_checks(unsigned n, std::size_t ceiling, std::size_t* order_K_out,
                                      std::size_t* order_H_out) {
  const std::string p = std::string(B::name) + "/";
  std::vector<CheckResult> out;
  const auto K = generate_K<B>(n, ceiling);
  const auto H = generate_H<B>(n, ceiling);
  if (order_K_out) *order_K_out = K.order();
  if (order_H_out) *order_H_out = H.order();

  bool involutions = true;
  for (const auto& h : H.elements()) involutions = involutions && B::compose(h, h) == H.identity();
  const std::size_t expect_H = std::size_t{1} << (n - 1);
  out.push_back(check(p + "subgroup_order", H.order() == expect_H && involutions,
                      "|H| = " + std::to_string(H.order()) + " (expected " + std::to_string(expect_H) +
                          "), every element of order <= 2: " + (involutions ? "yes" : "no")));

  const bool normal = is_normal<B>(H, K);
  out.push_back(check(p + "normality", normal, "H is normal in K"));
  if (!normal) {
    for (const char* rest : {"lagrange", "quotient_structure", "coset_representatives", "membership", "coset_swap",
                             "minimal_common_exponent", "period_structure"})
      out.push_back(check(p + rest, false, "not evaluated: H is not normal in K"));
    if constexpr (std::is_same_v<B, MonomialBackend>) out.push_back(check(p + "parity_membership", false, "not evaluated"));
    return out;
  }

  const auto q = quotient<B>(K, H);
  const std::size_t expect_q = n % 2 == 0 ? 2 * n : n;
  out.push_back(check(p + "lagrange", q.is_group() && q.order() * H.order() == K.order(),
                      "|K| = " + std::to_string(K.order()) + " = |K/H| * |H| = " + std::to_string(q.order()) +
                          " * " + std::to_string(H.order())));
  try {
    const auto type = identify_abelian_structure(q, n);
    out.push_back(check(p + "quotient_structure", q.order() == expect_q, "K/H = " + type.label()));
  } catch (const std::exception& e) {
    out.push_back(check(p + "quotient_structure", false, e.what()));
  }

  const auto reps = coset_representative_check<B>(n, K, H);
  out.push_back(check(p + "coset_representatives", reps.passed(),
                      std::to_string(reps.representatives) + " claimed representatives, pairwise distinct: " +
                          (reps.pairwise_distinct ? "yes" : "no") + ", cover K/H: " + (reps.covers ? "yes" : "no")));

  const auto facts = membership_suite<B>(n, H);
  std::string wrong;
  for (const auto& f : facts.facts)
    if (!f.agrees()) wrong += " " + f.element;
  out.push_back(check(p + "membership", facts.consistent(),
                      facts.consistent() ? std::string("S^j, S^jG not in H; G ") + (n % 2 ? "in" : "not in") + " H"
                                         : "disagreeing:" + wrong));

  out.push_back(check(p + "coset_swap", coset_swap_check<B>(n, H), "S^j G^k H = G^k S^j H for j < n, k < 2"));

  const auto m = minimal_common_exponent<B>(n, K.order());
  out.push_back(check(p + "minimal_common_exponent", m == 2ull * n,
                      m ? "smallest m with (S^jG)^m = 1 for all j is " + std::to_string(*m) : "not found"));

  bool powers_in_H = true;
  for (unsigned j = 0; j < n; ++j) powers_in_H = powers_in_H && H.contains(element_power<B>(walk_word<B>(n, j, 1), n));
  const auto sg = walk_word<B>(n, 1, 1);
  const auto first_in_H = smallest_power_in<B>(sg, H, K.order());
  const bool sg_n_nontrivial = n % 2 == 1 || !(element_power<B>(sg, n) == H.identity());
  out.push_back(check(p + "period_structure", powers_in_H && first_in_H == n && sg_n_nontrivial,
                      std::string("(S^jG)^n in H: ") + (powers_in_H ? "yes" : "no") +
                          ", smallest k with (SG)^k in H: " + (first_in_H ? std::to_string(*first_in_H) : "none") +
                          (n % 2 == 0 ? std::string(", (SG)^n != 1: ") + (sg_n_nontrivial ? "yes" : "no") : "")));

  if constexpr (std::is_same_v<B, MonomialBackend>) {
    bool agree = true;
    for (const auto& a : K.elements()) agree = agree && in_H(a) == H.contains(a);
    out.push_back(check(p + "parity_membership", agree, "fast sign-parity test equals closure membership on K"));
  }
  return out;
}

}  // namespace detail

/// Full check suite for one n. ClosureLimitExceeded propagates.
inline VerificationReport run_verify(unsigned n, const VerifyOptions& opt = {}) {
  if (n < 2 || n > kMaxWalkSize)
    throw PreconditionViolation("verify: n must be in 2.." + std::to_string(kMaxWalkSize));
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.n = n;
  rep.engine = opt.engine;
  const bool run_monomial = opt.engine != Engine::exact || n <= kExactCrossCheckLimit;
  const bool run_exact = opt.engine != Engine::monomial || n <= kExactCrossCheckLimit;

  for (auto& c : detail::exact_matrix_checks(n)) rep.checks.push_back(std::move(c));

  std::size_t mk = 0, mh = 0, ek = 0, eh = 0;
  if (run_monomial)
    for (auto& c : detail::group_checks<MonomialBackend>(n, opt.max_elements, &mk, &mh)) rep.checks.push_back(std::move(c));
  if (run_exact)
    for (auto& c : detail::group_checks<ExactBackend>(n, opt.max_elements, &ek, &eh)) rep.checks.push_back(std::move(c));
  if (run_monomial && run_exact)
    rep.checks.push_back(detail::check("cross/closure_sizes", mk == ek && mh == eh,
                                       "monomial |K|,|H| = " + std::to_string(mk) + "," + std::to_string(mh) +
                                           "; exact |K|,|H| = " + std::to_string(ek) + "," + std::to_string(eh)));

  PeriodOptions po;
  po.seed = opt.seed;
  const auto period = detect_period(n, po);
  rep.checks.push_back(detail::check("float/detected_period", period == 2ull * n,
                                     period ? "numerical period " + std::to_string(*period) + " (seed " +
                                                  std::to_string(opt.seed) + ")"
                                            : "no period within 4n steps"));

  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

struct GroupReport {
  unsigned n = 0;
  std::string engine;
  std::size_t order_K = 0, order_H = 0, order_quotient = 0;
  std::string quotient_structure;
  std::map<std::size_t, std::size_t> quotient_element_orders;
  std::map<std::size_t, std::size_t> subgroup_element_orders;
  MembershipFacts membership;
  std::optional<unsigned long long> minimal_exponent_m;

  bool consistent() const {
    return order_quotient * order_H == order_K && membership.consistent() && minimal_exponent_m == 2ull * n &&
           quotient_structure == expected_quotient_type(n).label();
  }
};

template <GroupBackend B>
GroupReport make_group_report(unsigned n, std::size_t ceiling = kDefaultElementCeiling) {
  GroupReport r;
  r.n = n;
  r.engine = B::name;
  const auto K = generate_K<B>(n, ceiling);
  const auto H = generate_H<B>(n, ceiling);
  r.order_K = K.order();
  r.order_H = H.order();
  for (const auto& h : H.elements()) ++r.subgroup_element_orders[*element_order<B>(h, H.order())];
  const auto q = quotient<B>(K, H);
  r.order_quotient = q.order();
  r.quotient_element_orders = q.order_multiset();
  if (q.is_abelian()) {
    if (auto t = match_abelian_type(q, quotient_candidates(n))) r.quotient_structure = t->label();
    else r.quotient_structure = "unidentified abelian group of order " + std::to_string(q.order());
  } else {
    r.quotient_structure = "non-abelian group of order " + std::to_string(q.order());
  }
  r.membership = membership_suite<B>(n, H);
  r.minimal_exponent_m = minimal_common_exponent<B>(n, K.order());
  return r;
}

// ---------------------------------------------------------------------------
// Serialization

using Json = nlohmann::ordered_json;

inline Json orders_to_json(const std::map<std::size_t, std::size_t>& m) {
  Json j = Json::object();
  for (auto [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

inline Json to_json(const VerificationReport& r, bool include_timing = false) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = "verify";
  j["n"] = r.n;
  j["engine"] = to_string(r.engine);
  j["passed"] = r.passed();
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
  j["checks"] = std::move(checks);
  if (include_timing && r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

inline Json to_json(const GroupReport& r) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = "group";
  j["n"] = r.n;
  j["engine"] = r.engine;
  j["order_K"] = r.order_K;
  j["order_H"] = r.order_H;
  j["order_quotient"] = r.order_quotient;
  j["quotient_structure"] = r.quotient_structure;
  j["quotient_element_orders"] = orders_to_json(r.quotient_element_orders);
  j["subgroup_element_orders"] = orders_to_json(r.subgroup_element_orders);
  Json mem = Json::object();
  for (const auto& f : r.membership.facts) mem[f.element] = f.in_H;
  j["membership"] = std::move(mem);
  j["membership_consistent"] = r.membership.consistent();
  j["minimal_exponent_m"] = r.minimal_exponent_m ? Json(*r.minimal_exponent_m) : Json(nullptr);
  j["consistent"] = r.consistent();
  return j;
}

inline void write_probability_csv(std::ostream& os, const WalkTrace& trace) {
  os << "t,vertex,probability\n";
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t t = 0; t < trace.probabilities.size(); ++t)
    for (std::size_t v = 0; v < trace.probabilities[t].size(); ++v)
      os << t << ',' << (v + 1) << ',' << trace.probabilities[t][v] << '\n';
}

inline void write_amplitude_csv(std::ostream& os, const WalkTrace& trace) {
  os << "t,index,re,im\n";
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t t = 0; t < trace.states.size(); ++t) {
    const auto& a = trace.states[t].amplitudes;
    for (Eigen::Index i = 0; i < a.size(); ++i) os << t << ',' << i << ',' << a(i).real() << ',' << a(i).imag() << '\n';
  }
}

}  // namespace gwalk
