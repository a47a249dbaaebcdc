#pragma once

// Command-line front end. `run` is kept separate from main so the tests can drive it with
// string streams.

#include "gdet/gdet.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace gdet::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kError = 2 };

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Interprets --coeffs: an existing file, inline JSON, or (for S4) an expression.
inline RingElement load_coeffs(const std::string& source, const GroupPtr& group) {
  std::string text = source;
  if (std::error_code ec; std::filesystem::is_regular_file(source, ec)) text = read_file(source);
  Json j = Json::parse(text, nullptr, false);
  if (!j.is_discarded()) return ring_element_from_json(j, group);
  if (group->kind().family == GroupFamily::symmetric4) return parse_expr(text, group);
  throw InvalidArgument("--coeffs is neither a file nor valid JSON");
}

/// The concrete group a closed-form rule describes.
inline GroupKind kind_for_rule(const GroupRule& rule) {
  switch (rule.kind) {
    case RuleKind::Zp: return GroupKind::cyclic(rule.p);
    case RuleKind::Z2p: return GroupKind::cyclic(2 * rule.p);
    case RuleKind::Z9: return GroupKind::cyclic(9);
    case RuleKind::Z4: return GroupKind::cyclic(4);
    case RuleKind::Klein4: return GroupKind::klein();
    case RuleKind::D8: return GroupKind::dihedral(8);
    case RuleKind::S3: return GroupKind::dihedral(6);
    case RuleKind::A4: return GroupKind::alternating4();
    case RuleKind::S4: return GroupKind::symmetric4();
  }
  return GroupKind::symmetric4();
}

inline void print_json(std::ostream& out, const Json& j, bool one_line) { out << (one_line ? j.dump() : j.dump(2)) << '\n'; }

inline std::string join(std::span<const BigInt> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
  return s;
}

inline void print_coeffs(std::ostream& out, const RingElement& e) {
  if (e.group().kind().family == GroupFamily::symmetric4) {
    out << "a: " << join(e.coeffs().subspan(0, 12)) << '\n';
    out << "b: " << join(e.coeffs().subspan(12, 12)) << '\n';
  } else {
    out << "coeffs: " << join(e.coeffs()) << '\n';
  }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer group determinants of small finite groups", "gdet"};
  app.require_subcommand(1);

  // det
  auto* det = app.add_subcommand("det", "determinant of a group-ring element");
  std::string det_group = "S4", det_coeffs, det_expr;
  bool det_factors = false, det_json = false;
  det->add_option("--group", det_group, "group: Z<n>, Zn:<n>, K4, D<2n>, D:<2n>, S3, A4, S4");
  auto* coeffs_opt = det->add_option("--coeffs", det_coeffs, "file, inline JSON or expression");
  auto* expr_opt = det->add_option("--expr", det_expr, "expression in x=(1234), y=(12)");
  coeffs_opt->excludes(expr_opt);
  det->add_flag("--factors", det_factors, "also print the S4 factor profile");
  det->add_flag("--json", det_json, "one-line JSON output");

  // member
  auto* mem = app.add_subcommand("member", "decide membership in S(G)");
  std::string mem_group = "S4", mem_m;
  bool mem_json = false;
  mem->add_option("--group", mem_group, "rule: Z4, Z9, Zp:<p>, Z2p:<p>, K4, D8, S3, A4, S4");
  mem->add_option("m", mem_m, "integer")->required();
  mem->add_flag("--json", mem_json);

  // lambda
  auto* lam = app.add_subcommand("lambda", "smallest |m| >= 2 in S(G)");
  std::string lam_group = "S4", lam_range;
  std::vector<std::size_t> lam_support;
  bool lam_json = false;
  lam->add_option("--group", lam_group);
  lam->add_option("--scan-range", lam_range, "also scan exhaustively over lo:hi");
  lam->add_option("--support", lam_support, "0-based slots allowed to be nonzero in the scan");
  lam->add_flag("--json", lam_json);

  // witness
  auto* wit = app.add_subcommand("witness", "construct an S4 coefficient vector with determinant m");
  std::string wit_m;
  bool wit_json = false;
  wit->add_option("m", wit_m, "integer")->required();
  wit->add_flag("--json", wit_json);

  // verify-identities
  auto* ver = app.add_subcommand("verify-identities", "check the S4 polynomial identities exactly");
  std::vector<std::string> ver_ids;
  bool ver_json = false;
  ver->add_option("--id", ver_ids, "identity name (repeatable)");
  ver->add_flag("--json", ver_json);

  // scan
  auto* sc = app.add_subcommand("scan", "falsification scan against the closed-form decider");
  std::string sc_group = "S4", sc_range, sc_out, sc_eval = "exact";
  std::uint64_t sc_random = 0, sc_seed = 0;
  bool sc_exhaustive = false, sc_full = false, sc_json = false;
  std::vector<std::size_t> sc_support;
  sc->add_option("--group", sc_group);
  sc->add_option("--range", sc_range, "entry range lo:hi")->required();
  auto* random_opt = sc->add_option("--random", sc_random, "number of random vectors");
  auto* exh_opt = sc->add_flag("--exhaustive", sc_exhaustive, "every vector in the range");
  random_opt->excludes(exh_opt);
  sc->add_option("--seed", sc_seed);
  sc->add_option("--out", sc_out, "JSON-lines report path; a CSV summary is written beside it");
  sc->add_flag("--full", sc_full, "one record per vector in the report");
  sc->add_option("--evaluator", sc_eval)->check(CLI::IsMember({"exact", "factored"}));
  sc->add_option("--support", sc_support, "0-based slots allowed to be nonzero");
  sc->add_flag("--json", sc_json);

  // parse
  auto* par = app.add_subcommand("parse", "reduce an expression in x, y to S4 coefficients");
  std::string par_expr;
  bool par_json = false;
  par->add_option("--expr", par_expr)->required();
  par->add_flag("--json", par_json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kError;
  }

  try {
    if (det->parsed()) {
      if (det_coeffs.empty() == det_expr.empty()) throw InvalidArgument("give exactly one of --coeffs or --expr");
      const GroupPtr g = parse_group_kind(det_group) == GroupKind::symmetric4() ? s4_group()
                                                                               : make_group(parse_group_kind(det_group));
      const RingElement e = det_expr.empty() ? detail::load_coeffs(det_coeffs, g) : parse_expr(det_expr, g);
      const BigInt d = det_exact(e);
      if (det_json) {
        Json j = to_json(e);
        j["schema"] = kJsonSchemaVersion;
        j["det"] = to_json(d);
        if (det_factors) j["factors"] = to_json(s4_factors(e));
        detail::print_json(out, j, true);
      } else {
        out << d << '\n';
        if (det_factors) detail::print_json(out, to_json(s4_factors(e)), false);
      }
      return kYes;
    }

    if (mem->parsed()) {
      const GroupRule rule = parse_group_rule(mem_group);
      const BigInt m = parse_bigint(mem_m);
      const MembershipVerdict v = member(rule, m);
      detail::print_json(out, to_json(rule, m, v), mem_json);
      return v.member ? kYes : kNo;
    }

    if (lam->parsed()) {
      const GroupRule rule = parse_group_rule(lam_group);
      const BigInt value = lambda_of(rule);
      Json j{{"schema", kJsonSchemaVersion}, {"group", rule.name()}, {"lambda", to_json(value)}};
      if (!lam_range.empty()) {
        const auto [lo, hi] = parse_range(lam_range);
        const auto found = lambda_scan(detail::kind_for_rule(rule), lo, hi, lam_support);
        j["scan"] = {{"range", {lo, hi}}, {"lambda", found ? to_json(*found) : Json()}};
      }
      if (lam_json) {
        detail::print_json(out, j, true);
      } else {
        out << "lambda(" << rule.name() << ") = " << value << '\n';
        if (j.contains("scan")) {
          out << "scan over " << lam_range << ": ";
          if (j["scan"]["lambda"].is_null()) out << "no |det| >= 2\n";
          else out << j["scan"]["lambda"].dump() << '\n';
        }
      }
      return kYes;
    }

    if (wit->parsed()) {
      const BigInt m = parse_bigint(wit_m);
      try {
        const WitnessCertificate c = synthesize(m);
        const bool ok = verify_certificate(c);
        detail::print_json(out, to_json(c, ok), wit_json);
        return ok ? kYes : kError;
      } catch (const NotInSet& e) {
        if (wit_json) detail::print_json(out, Json{{"schema", kJsonSchemaVersion}, {"target", to_json(m)}, {"member", false}}, true);
        err << "gdet: " << e.what() << '\n';
        return kNo;
      }
    }

    if (ver->parsed()) {
      std::vector<IdentityId> ids;
      for (const auto& name : ver_ids) ids.push_back(parse_identity_id(name));
      if (ids.empty()) ids.assign(kAllIdentities.begin(), kAllIdentities.end());
      const auto reports = check_identities(ids, default_threads());
      bool all = true;
      Json arr = Json::array();
      for (const auto& r : reports) {
        all = all && r.holds;
        arr.push_back(to_json(r));
        if (!ver_json) {
          out << (r.holds ? "PASS " : "FAIL ") << identity_name(r.id) << "  " << std::fixed << std::setprecision(2)
              << r.seconds << "s  " << identity_statement(r.id) << '\n';
          if (!r.holds && !r.residual_sample.empty()) out << "  residual: " << r.residual_sample << '\n';
        }
      }
      if (ver_json) detail::print_json(out, Json{{"schema", kJsonSchemaVersion}, {"identities", arr}, {"all_hold", all}}, true);
      return all ? kYes : kNo;
    }

    if (sc->parsed()) {
      if ((sc_random > 0) == sc_exhaustive) throw InvalidArgument("give exactly one of --random N or --exhaustive");
      ScanConfig cfg;
      cfg.group = parse_group_kind(sc_group);
      std::tie(cfg.lo, cfg.hi) = parse_range(sc_range);
      cfg.mode = sc_exhaustive ? ScanMode::exhaustive : ScanMode::random;
      cfg.count = sc_random;
      cfg.seed = sc_seed;
      cfg.support = sc_support;
      cfg.evaluator = sc_eval == "factored" ? Evaluator::factored : Evaluator::exact;
      if (!sc_out.empty()) cfg.output_path = sc_out;
      cfg.full = sc_full;
      cfg.threads = default_threads();
      const ScanReport r = scan(cfg);
      if (sc_json) {
        Json j = to_json(r);
        j["schema"] = kJsonSchemaVersion;
        j["group"] = cfg.group.name();
        detail::print_json(out, j, true);
      } else {
        out << "group " << cfg.group.name() << ", " << r.total << " vectors, " << r.zero_count << " zero, "
            << r.values.size() << " distinct values, " << r.violation_count << " violations\n";
        for (const auto& v : r.violations)
          out << "violation #" << v.index << ": det " << v.value << " coeffs [" << detail::join(v.coeffs) << "]\n";
      }
      return r.violation_count == 0 ? kYes : kNo;
    }

    if (par->parsed()) {
      const RingElement e = parse_expr(par_expr);
      if (par_json) {
        Json j = to_json(e);
        j["schema"] = kJsonSchemaVersion;
        detail::print_json(out, j, true);
      } else {
        detail::print_coeffs(out, e);
      }
      return kYes;
    }
  } catch (const std::exception& e) {
    err << "gdet: error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace gdet::cli
