#pragma once

// Command-line front end. run() never exits the process; it returns
//   0  success / identity verified
//   1  an identity sweep found counterexamples
//   2  usage error or invalid input

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wreathchar/abacus.hpp"
#include "wreathchar/error.hpp"
#include "wreathchar/groups.hpp"
#include "wreathchar/identities.hpp"
#include "wreathchar/partition.hpp"
#include "wreathchar/serialize.hpp"
#include "wreathchar/symchar.hpp"
#include "wreathchar/wreath.hpp"

namespace wreathchar::cli {

namespace detail {

struct Options {
  std::string shape;
  std::string cls;
  std::optional<int> r;
  std::string group;
  std::string color;
  std::optional<int> n;
  std::string format = "json";
  std::size_t max_failures = 32;
  unsigned jobs = 1;
  std::size_t cache_cap = 0;
  bool timing = false;
  std::string identity;
};

inline void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

inline void require_json(const Options& o, const std::string& cmd) {
  if (o.format != "json") throw InvalidInput(cmd + ": only --format json is supported");
}

inline int require_n(const Options& o) {
  if (!o.n) throw InvalidInput("--n is required");
  if (*o.n < 1) throw InvalidInput("--n must be >= 1");
  return *o.n;
}

inline int require_r(const Options& o) {
  if (!o.r) throw InvalidInput("--r is required");
  return *o.r;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

inline std::string partition_text(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.parts().size(); ++i) s += (i ? "," : "") + std::to_string(p.parts()[i]);
  return s;
}

inline int cmd_char_sym(const Options& o, std::ostream& out) {
  require_json(o, "char-sym");
  const auto shape = parse_partition(o.shape);
  const auto cls = parse_composition(o.cls);
  const auto v = chi(shape, cls);
  emit(out, {{"schema", 1}, {"shape", shape}, {"class", cls}, {"value", integer_to_json(v)}});
  return 0;
}

inline int cmd_char_wreath(const Options& o, std::ostream& out) {
  require_json(o, "char-wreath");
  if (o.group.empty()) throw InvalidInput("char-wreath: --group is required");
  const auto model = parse_group_model(o.group);
  const auto shape = parse_rpartite(o.shape);
  const auto cls = parse_composition(o.cls);
  return std::visit(
      [&](const auto& m) {
        const auto a = m.group().parse_element(o.color);
        const auto value = psi(shape, m, constant_colored(m.group(), a, cls));
        emit(out, {{"schema", 1},
                   {"group", m.name()},
                   {"labelling", labelling_json(m)},
                   {"shape", shape},
                   {"color", a},
                   {"class", cls},
                   {"value", value},
                   {"text", to_string(value)}});
        return 0;
      },
      model);
}

inline int cmd_core_quotient(const Options& o, std::ostream& out) {
  require_json(o, "core-quotient");
  const auto shape = parse_partition(o.shape);
  const int r = require_r(o);
  emit(out, {{"schema", 1}, {"shape", shape}, {"r", r}, {"core", r_core(shape, r)}, {"quotient", r_quotient(shape, r)}});
  return 0;
}

inline int cmd_hat(const Options& o, std::ostream& out) {
  require_json(o, "hat");
  const auto shape = parse_rpartite(o.shape);
  if (o.r && *o.r != shape.arity())
    throw InvalidInput("hat: --r " + std::to_string(*o.r) + " does not match the arity " +
                       std::to_string(shape.arity()) + " of the shape");
  emit(out, {{"schema", 1}, {"shape", shape}, {"r", shape.arity()}, {"hat", hat(shape)}});
  return 0;
}

inline int cmd_sign(const Options& o, std::ostream& out) {
  require_json(o, "sign");
  const auto shape = parse_partition(o.shape);
  const int r = require_r(o);
  emit(out, {{"schema", 1}, {"shape", shape}, {"r", r}, {"sign", sign_r(shape, r)}});
  return 0;
}

inline int cmd_table(const Options& o, std::ostream& out) {
  const auto t = character_table(require_n(o));
  if (o.format == "csv") {
    out << "shape";
    for (const auto& mu : t.classes) out << ',' << csv_field(partition_text(mu));
    out << '\n' << "class_size";
    for (const auto& z : t.class_sizes) out << ',' << z;
    out << '\n';
    for (std::size_t i = 0; i < t.shapes.size(); ++i) {
      out << csv_field(partition_text(t.shapes[i]));
      for (const auto& v : t.values[i]) out << ',' << v;
      out << '\n';
    }
    return 0;
  }
  nlohmann::json values = nlohmann::json::array();
  for (const auto& row : t.values) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(integer_to_json(v));
    values.push_back(r);
  }
  nlohmann::json sizes = nlohmann::json::array();
  for (const auto& z : t.class_sizes) sizes.push_back(integer_to_json(z));
  emit(out, {{"schema", 1}, {"n", t.n}, {"shapes", t.shapes}, {"classes", t.classes}, {"class_sizes", sizes},
             {"values", values}});
  return 0;
}

inline const AbelianModel& require_abelian(const GroupModel& m, const std::string& what) {
  if (const auto* a = std::get_if<AbelianModel>(&m)) return *a;
  throw InvalidInput(what + " needs an abelian group (e.g. Z6, Z2xZ2)");
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  require_json(o, "verify");
  const int n = require_n(o);
  SweepOptions sweep;
  sweep.max_failures = o.max_failures;
  sweep.jobs = o.jobs;
  VerificationReport report;
  if (o.identity == "rr") {
    const auto m = require_abelian(parse_group_model(o.group.empty() ? "Z2" : o.group), "verify rr");
    report = verify_rr(n, m, sweep);
  } else if (o.identity == "rr-general") {
    const auto model = parse_group_model(o.group.empty() ? "Z2" : o.group);
    report = std::visit([&](const auto& m) { return verify_rr_general(n, m, sweep); }, model);
  } else if (o.identity == "main") {
    if (o.group.empty()) throw InvalidInput("verify main: --group is required");
    if (o.color.empty()) throw InvalidInput("verify main: --color is required");
    const auto m = require_abelian(parse_group_model(o.group), "verify main");
    report = verify_main(n, m, m.group().parse_element(o.color), sweep);
  } else if (o.identity == "main2") {
    const auto model = parse_group_model(o.group.empty() ? "S3" : o.group);
    const auto* q = std::get_if<QuotientLinearModel>(&model);
    if (!q) throw InvalidInput("verify main2 needs a quotient model (S3 or quot:...)");
    const auto a = o.color.empty() ? q->distinguished() : q->group().parse_element(o.color);
    report = verify_main2(n, *q, a, sweep);
  } else {
    report = report_sign2(n, sweep);
  }
  emit(out, report.to_json(o.timing));
  return report.passed() ? 0 : 1;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Exact characters of symmetric groups and wreath products G wr S_n", "wreathchar"};
  app.require_subcommand(1);
  app.add_option("--cache-cap", o.cache_cap, "Maximum entries in the character cache (0 = unbounded)");

  const auto format_option = [&](CLI::App* sub, bool csv) {
    auto* opt = sub->add_option("--format", o.format, "Output format")->capture_default_str();
    if (csv) opt->check(CLI::IsMember({"json", "csv"}));
    else opt->check(CLI::IsMember({"json"}));
  };

  auto* char_sym = app.add_subcommand("char-sym", "chi_shape at a permutation of the given cycle type");
  char_sym->add_option("--shape", o.shape, "Partition, e.g. 3,1")->required();
  char_sym->add_option("--class", o.cls, "Cycle type, e.g. 2,2")->required();
  format_option(char_sym, false);

  auto* char_wreath = app.add_subcommand("char-wreath", "psi_shape at (a,...,a; w_class)");
  char_wreath->add_option("--group", o.group, "Z6, Z2xZ2, S3, quot:d=..,s=..,ab=..,a=..")->required();
  char_wreath->add_option("--shape", o.shape, "Multipartition, e.g. \"[1|∅|1]\"")->required();
  char_wreath->add_option("--class", o.cls, "Cycle type, e.g. 1,1")->required();
  char_wreath->add_option("--color", o.color, "Color a, e.g. 5 or 1,0 (default: identity)");
  format_option(char_wreath, false);

  auto* core_quotient = app.add_subcommand("core-quotient", "r-core and r-quotient of a partition");
  core_quotient->add_option("--shape", o.shape, "Partition")->required();
  core_quotient->add_option("--r", o.r, "r >= 2")->required();
  format_option(core_quotient, false);

  auto* hat_cmd = app.add_subcommand("hat", "Partition with empty core and the given quotient");
  hat_cmd->add_option("--shape", o.shape, "Multipartition, e.g. \"[1|1]\"")->required();
  hat_cmd->add_option("--r", o.r, "Arity (optional; must match the shape)");
  format_option(hat_cmd, false);

  auto* sign_cmd = app.add_subcommand("sign", "sign_r of a partition with empty r-core");
  sign_cmd->add_option("--shape", o.shape, "Partition")->required();
  sign_cmd->add_option("--r", o.r, "Strip length")->required();
  format_option(sign_cmd, false);

  auto* table_cmd = app.add_subcommand("table", "Character table of S_n");
  table_cmd->add_option("--n", o.n, "n >= 1")->required();
  format_option(table_cmd, true);

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive identity sweep over n = 1..N");
  verify_cmd->add_option("identity", o.identity, "rr | rr-general | main | main2 | sign2")
      ->required()
      ->check(CLI::IsMember({"rr", "rr-general", "main", "main2", "sign2"}));
  verify_cmd->add_option("--n", o.n, "Largest n swept")->required();
  verify_cmd->add_option("--group", o.group, "Color group (default Z2; S3 for main2)");
  verify_cmd->add_option("--color", o.color, "Color a (main, main2)");
  verify_cmd->add_option("--max-failures", o.max_failures, "Counterexamples kept in the report")
      ->capture_default_str();
  verify_cmd->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--timing", o.timing, "Include elapsed_seconds in the report");
  format_option(verify_cmd, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  CharacterCache::shared().set_cap(o.cache_cap);
  try {
    if (char_sym->parsed()) return detail::cmd_char_sym(o, out);
    if (char_wreath->parsed()) return detail::cmd_char_wreath(o, out);
    if (core_quotient->parsed()) return detail::cmd_core_quotient(o, out);
    if (hat_cmd->parsed()) return detail::cmd_hat(o, out);
    if (sign_cmd->parsed()) return detail::cmd_sign(o, out);
    if (table_cmd->parsed()) return detail::cmd_table(o, out);
    return detail::cmd_verify(o, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UnsupportedEvaluation& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace wreathchar::cli
