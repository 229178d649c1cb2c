#pragma once

// Exhaustive verification drivers for the wreath/symmetric character
// identities. Each driver compares two independent computations:
//   left:  the wreath-product Murnaghan-Nakayama sum (psi),
//   right: hat + sign_r + the symmetric-group recursion (chi),
// and collects every disagreement instead of stopping at the first.
//
// Every driver sweeps n = 1..max_n; classes mu run over partitions of n.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "wreathchar/abacus.hpp"
#include "wreathchar/cyclotomic.hpp"
#include "wreathchar/error.hpp"
#include "wreathchar/groups.hpp"
#include "wreathchar/partition.hpp"
#include "wreathchar/serialize.hpp"
#include "wreathchar/symchar.hpp"
#include "wreathchar/wreath.hpp"

namespace wreathchar {

struct SweepOptions {
  std::size_t max_failures = 32;
  unsigned jobs = 1;
};

struct VerificationFailure {
  nlohmann::json shape;
  Partition class_type;
  CyclotomicInt lhs;
  CyclotomicInt rhs;
};

struct VerificationReport {
  std::string identity;
  nlohmann::json parameters = nlohmann::json::object();
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  std::vector<VerificationFailure> failures;  // the first max_failures, in sweep order
  nlohmann::json details = nlohmann::json::object();
  double elapsed_seconds = 0;

  bool passed() const noexcept { return failure_count == 0; }

  nlohmann::json to_json(bool with_timing = true) const {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : failures)
      fails.push_back({{"shape", f.shape},
                       {"class", f.class_type},
                       {"lhs", f.lhs},
                       {"rhs", f.rhs},
                       {"lhs_text", to_string(f.lhs)},
                       {"rhs_text", to_string(f.rhs)}});
    nlohmann::json j = {{"schema", 1},
                        {"identity", identity},
                        {"parameters", parameters},
                        {"cases", cases},
                        {"failure_count", failure_count},
                        {"failures", fails},
                        {"details", details},
                        {"verdict", passed() ? "pass" : "fail"}};
    if (with_timing) j["elapsed_seconds"] = elapsed_seconds;
    return j;
  }
};

namespace detail {

/// Runs fn(i) for i in [0, count) on up to `jobs` threads; results keep
/// their index so assembly does not depend on scheduling.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t count, unsigned jobs, Fn fn) {
  std::vector<R> out(count);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

struct WreathCase {
  RPartitePartition shape;
  Partition mu;
};

struct CaseResult {
  CyclotomicInt lhs;
  CyclotomicInt rhs;
  bool equal = true;
};

inline void collect(VerificationReport& report, const std::vector<WreathCase>& cases,
                    const std::vector<CaseResult>& results, const SweepOptions& opts) {
  report.cases = cases.size();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (results[i].equal) continue;
    ++report.failure_count;
    if (report.failures.size() < opts.max_failures)
      report.failures.push_back({cases[i].shape, cases[i].mu, results[i].lhs, results[i].rhs});
  }
}

/// sign_r(hat) * chi_hat(r mu) as an element of Z[zeta_level].
inline CyclotomicInt hat_side(const RPartitePartition& shape, const Partition& mu, int level) {
  const int r = shape.arity();
  const Partition h = hat(shape);
  const Integer value = sign_r(h, r) * chi(h, scaled(mu, r));
  return CyclotomicInt::from_int(level, value);
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void require_max_n(int max_n) {
  if (max_n < 1) throw InvalidInput("sweep needs n >= 1");
}

}  // namespace detail

/// psi_shape(e, ..., e; w_mu) == sign_r(hat) chi_hat(w_{r mu}) for every
/// r-partite shape of n, r = |G|.
inline VerificationReport verify_rr(int max_n, const AbelianModel& model, const SweepOptions& opts = {}) {
  detail::require_max_n(max_n);
  const int r = model.character_count();
  if (r < 2) throw InvalidInput("verify_rr needs |G| >= 2");
  detail::Stopwatch clock;
  VerificationReport report;
  report.identity = "rr";
  report.parameters = {{"n_max", max_n}, {"group", model.name()}, {"r", r}, {"labelling", labelling_json(model)}};

  std::vector<detail::WreathCase> cases;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& shape : enumerate_rpartite(n, r))
      for (const auto& mu : enumerate_partitions(n)) cases.push_back({shape, mu});

  const auto e = model.group().identity();
  auto results = detail::parallel_map<detail::CaseResult>(cases.size(), opts.jobs, [&](std::size_t i) {
    const auto& c = cases[i];
    detail::CaseResult res;
    res.lhs = psi(c.shape, model, constant_colored(model.group(), e, c.mu));
    res.rhs = detail::hat_side(c.shape, c.mu, model.level());
    res.equal = res.lhs == res.rhs;
    return res;
  });
  detail::collect(report, cases, results, opts);
  report.elapsed_seconds = clock.seconds();
  return report;
}

/// d^t * sign * chi: the right-hand side when every character in the support
/// has degree d and the class has t cycles.
inline Integer equal_degree_rhs(int degree, int cycles, int sign, const Integer& chi_value) {
  Integer p = 1;
  for (int i = 0; i < cycles; ++i) p *= degree;
  return p * sign * chi_value;
}

/// psi_shape(e, ..., e; w_mu) == d^t sign_r(hat) chi_hat(w_{r mu}) for every
/// shape whose support consists of characters of one common known degree d.
/// Shapes outside that set are counted as skipped.
template <ColorGroupModel M>
VerificationReport verify_rr_general(int max_n, const M& model, const SweepOptions& opts = {}) {
  detail::require_max_n(max_n);
  const int r = model.character_count();
  if (r < 2) throw InvalidInput("verify_rr_general needs at least two characters");
  detail::Stopwatch clock;
  VerificationReport report;
  report.identity = "rr-general";
  report.parameters = {{"n_max", max_n}, {"group", model.name()}, {"r", r}, {"labelling", labelling_json(model)}};

  // characters of known degree that the model can also evaluate
  std::vector<int> usable;
  for (int j = 0; j < model.linear_count(); ++j)
    if (model.degree(j)) usable.push_back(j);

  std::vector<detail::WreathCase> cases;
  std::vector<int> degrees;
  std::size_t skipped = 0;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& shape : enumerate_rpartite(n, r)) {
      std::optional<int> common;
      bool ok = true;
      for (int j : shape.support()) {
        if (!std::binary_search(usable.begin(), usable.end(), j)) { ok = false; break; }
        const int dj = *model.degree(j);
        if (common && *common != dj) { ok = false; break; }
        common = dj;
      }
      if (!ok) {
        ++skipped;
        continue;
      }
      for (const auto& mu : enumerate_partitions(n)) {
        cases.push_back({shape, mu});
        degrees.push_back(common.value_or(1));
      }
    }

  const auto e = model.group().identity();
  auto results = detail::parallel_map<detail::CaseResult>(cases.size(), opts.jobs, [&](std::size_t i) {
    const auto& c = cases[i];
    detail::CaseResult res;
    res.lhs = psi(c.shape, model, constant_colored(model.group(), e, c.mu));
    const Partition h = hat(c.shape);
    res.rhs = CyclotomicInt::from_int(
        model.level(), equal_degree_rhs(degrees[i], c.mu.length(), sign_r(h, r), chi(h, scaled(c.mu, r))));
    res.equal = res.lhs == res.rhs;
    return res;
  });
  detail::collect(report, cases, results, opts);
  report.details = {{"skipped_shapes", skipped}, {"usable_characters", usable}};
  report.elapsed_seconds = clock.seconds();
  return report;
}

namespace detail {

inline nlohmann::json fibers_json(const FiberPartition& fp) {
  nlohmann::json f = nlohmann::json::array();
  for (const auto& fiber : fp.fibers) f.push_back(fiber);
  return {{"order", fp.order}, {"fibers", f}};
}

/// Coefficient of n_i in alpha, per character index.
inline std::vector<int> alpha_coefficients(const FiberPartition& fp, int arity) {
  std::vector<int> c(static_cast<std::size_t>(arity), 0);
  for (int k = 0; k < fp.order; ++k)
    for (int i : fp.fibers[static_cast<std::size_t>(k)]) c[static_cast<std::size_t>(i)] = k;
  return c;
}

template <ColorGroupModel M>
std::vector<CaseResult> constant_color_results(const std::vector<WreathCase>& cases, const M& model,
                                               const GroupElement& a, const FiberPartition& fp, unsigned jobs) {
  const int lvl = model.level();
  return parallel_map<CaseResult>(cases.size(), jobs, [&](std::size_t i) {
    const auto& c = cases[i];
    CaseResult res;
    res.lhs = psi(c.shape, model, constant_colored(model.group(), a, c.mu));
    const int al = alpha(c.shape, fp);
    res.rhs = CyclotomicInt::zeta(lvl, static_cast<long long>(al) * (lvl / fp.order)) *
              hat_side(c.shape, c.mu, lvl);
    res.equal = res.lhs == res.rhs;
    return res;
  });
}

}  // namespace detail

/// psi_shape(a, ..., a; w_mu) == zeta_r^alpha sign_d(hat) chi_hat(w_{d mu})
/// for every d-partite shape, d = |G|, r = |a|.
inline VerificationReport verify_main(int max_n, const AbelianModel& model, const GroupElement& a,
                                      const SweepOptions& opts = {}) {
  detail::require_max_n(max_n);
  const int d = model.character_count();
  if (d < 2) throw InvalidInput("verify_main needs |G| >= 2");
  model.group().require(a);
  detail::Stopwatch clock;
  const auto fp = fiber_partition(model, a);
  VerificationReport report;
  report.identity = "main";
  report.parameters = {{"n_max", max_n},
                       {"group", model.name()},
                       {"color", a},
                       {"d", d},
                       {"labelling", labelling_json(model)}};

  std::vector<detail::WreathCase> cases;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& shape : enumerate_rpartite(n, d))
      for (const auto& mu : enumerate_partitions(n)) cases.push_back({shape, mu});

  auto results = detail::constant_color_results(cases, model, a, fp, opts.jobs);
  detail::collect(report, cases, results, opts);
  report.details = {{"fiber_partition", detail::fibers_json(fp)},
                    {"alpha_coefficients", detail::alpha_coefficients(fp, d)},
                    {"m", d / fp.order}};
  report.elapsed_seconds = clock.seconds();
  return report;
}

/// The same identity for an arbitrary group through its linear characters:
/// shapes are supported on characters 0..s-1, a is given by its image in
/// G/G' and must lie in the subgroup generated by the model's distinguished
/// image.
inline VerificationReport verify_main2(int max_n, const QuotientLinearModel& model, const GroupElement& a,
                                       const SweepOptions& opts = {}) {
  detail::require_max_n(max_n);
  const int d = model.character_count();
  const int s = model.linear_count();
  model.group().require(a);
  if (!model.in_distinguished_subgroup(a))
    throw InvalidInput("color " + AbelianGroup::format(a) + " is not a power of the distinguished element");
  detail::Stopwatch clock;
  const auto fp = fiber_partition(model, a);
  VerificationReport report;
  report.identity = "main2";
  report.parameters = {{"n_max", max_n},
                       {"group", model.name()},
                       {"color", a},
                       {"d", d},
                       {"s", s},
                       {"labelling", labelling_json(model)}};

  std::vector<detail::WreathCase> cases;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& shape : enumerate_rpartite(n, s))
      for (const auto& mu : enumerate_partitions(n)) cases.push_back({shape.padded(d), mu});

  auto results = detail::constant_color_results(cases, model, a, fp, opts.jobs);
  detail::collect(report, cases, results, opts);
  report.details = {{"fiber_partition", detail::fibers_json(fp)},
                    {"alpha_coefficients", detail::alpha_coefficients(fp, s)},
                    {"m", s / fp.order}};

  // For a two-element abelianization and an element outside G', compare the
  // sign factors (-1)^{n_1} and (-1)^{n_2} against the computed values.
  if (s == 2 && fp.order == 2 && d > 2) {
    std::size_t match_n1 = 0, match_n2 = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const auto& c = cases[i];
      const auto base = detail::hat_side(c.shape, c.mu, model.level());
      const auto with = [&](int idx) {
        return c.shape[static_cast<std::size_t>(idx)].size() % 2 == 0 ? base : -base;
      };
      if (results[i].lhs == with(1)) ++match_n1;
      if (results[i].lhs == with(2)) ++match_n2;
    }
    report.details["sign_exponent_candidates"] = {{"n_1", match_n1}, {"n_2", match_n2}, {"cases", cases.size()}};
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

/// Tabulates the peeling-defined sign_2 on partitions of 2n with empty
/// 2-core against (-1)^{odd} and (-1)^{odd/2}, odd = number of odd parts.
/// Failures are disagreements with the halved exponent; disagreements with
/// the unhalved one are listed in the details.
inline VerificationReport report_sign2(int max_n, const SweepOptions& opts = {}) {
  detail::require_max_n(max_n);
  detail::Stopwatch clock;
  VerificationReport report;
  report.identity = "sign2";
  report.parameters = {{"n_max", max_n}};
  std::size_t literal_agree = 0, halved_agree = 0;
  nlohmann::json literal_disagreements = nlohmann::json::array();
  for (int n = 1; n <= max_n; ++n)
    for (const auto& lambda : enumerate_partitions(2 * n)) {
      if (!r_core(lambda, 2).empty()) continue;
      ++report.cases;
      const int sign = sign_r(lambda, 2);
      const int odd = odd_parts(lambda);
      const int literal = odd % 2 == 0 ? 1 : -1;
      const int halved = (odd / 2) % 2 == 0 ? 1 : -1;
      if (literal == sign) {
        ++literal_agree;
      } else if (literal_disagreements.size() < opts.max_failures) {
        literal_disagreements.push_back({{"shape", lambda}, {"sign2", sign}, {"literal", literal}});
      }
      if (halved == sign) {
        ++halved_agree;
      } else {
        ++report.failure_count;
        if (report.failures.size() < opts.max_failures)
          report.failures.push_back({lambda, Partition(std::vector<int>(static_cast<std::size_t>(n), 2)),
                                     CyclotomicInt::from_int(1, sign), CyclotomicInt::from_int(1, halved)});
      }
    }
  const auto rate = [&](std::size_t k) {
    return report.cases == 0 ? 1.0 : static_cast<double>(k) / static_cast<double>(report.cases);
  };
  report.details = {
      {"literal_formula", {{"formula", "(-1)^odd"}, {"agreements", literal_agree}, {"rate", rate(literal_agree)}}},
      {"halved_formula", {{"formula", "(-1)^(odd/2)"}, {"agreements", halved_agree}, {"rate", rate(halved_agree)}}},
      {"literal_disagreements", literal_disagreements}};
  report.elapsed_seconds = clock.seconds();
  return report;
}

}  // namespace wreathchar
