#pragma once

// Exhaustive and seeded random determinant scans checked against the closed-form deciders.
//
// Random vectors are drawn slot by slot (support order) from std::mt19937_64 seeded with the
// config seed; each entry is lo + r mod span after rejecting r >= floor(2^64 / span) * span,
// so a run is reproducible on any platform.

#include "gdet/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <thread>

namespace gdet {

inline constexpr std::uint64_t kMaxExhaustiveVectors = 10'000'000;
inline constexpr std::size_t kMaxStoredViolations = 100;
inline constexpr std::string_view kRngName = "mt19937_64-rejection";

enum class ScanMode { exhaustive, random };
enum class Evaluator { exact, factored };

struct ScanConfig {
  GroupKind group = GroupKind::symmetric4();
  std::int64_t lo = -1, hi = 1;
  ScanMode mode = ScanMode::random;
  std::uint64_t count = 1000;  // random mode
  std::uint64_t seed = 0;      // random mode
  std::vector<std::size_t> support;  // slots allowed to be nonzero; empty means all
  Evaluator evaluator = Evaluator::exact;
  std::optional<std::string> output_path;  // JSON-lines report; CSV summary beside it
  bool full = false;                       // one JSON-lines record per evaluated vector
  unsigned threads = 1;
};

struct Violation {
  std::uint64_t index;
  std::vector<BigInt> coeffs;
  BigInt value;
};

struct ScanReport {
  std::uint64_t total = 0;
  std::uint64_t zero_count = 0;
  std::uint64_t violation_count = 0;
  std::map<BigInt, std::uint64_t> values;  // distinct determinant -> multiplicity
  std::vector<Violation> violations;       // first kMaxStoredViolations, by index
  std::array<std::uint64_t, 24> residue_mod24{};  // nonzero values only
  std::map<unsigned, std::uint64_t> v2_histogram, v3_histogram;  // nonzero values only

  /// Associative, order-independent merge.
  void merge(const ScanReport& o) {
    total += o.total;
    zero_count += o.zero_count;
    violation_count += o.violation_count;
    for (const auto& [v, n] : o.values) values[v] += n;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    std::sort(violations.begin(), violations.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
    if (violations.size() > kMaxStoredViolations) violations.resize(kMaxStoredViolations);
    for (std::size_t i = 0; i < 24; ++i) residue_mod24[i] += o.residue_mod24[i];
    for (const auto& [k, n] : o.v2_histogram) v2_histogram[k] += n;
    for (const auto& [k, n] : o.v3_histogram) v3_histogram[k] += n;
  }
};

/// Worker count: GDET_THREADS if set, else the hardware concurrency.
inline unsigned default_threads() {
  if (const char* env = std::getenv("GDET_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

inline std::string evaluator_name(Evaluator e) { return e == Evaluator::exact ? "exact" : "factored"; }

/// Inclusive integer range "lo:hi".
inline std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text) {
  const auto colon = text.find(':', 1);
  if (colon == std::string_view::npos) throw InvalidArgument("range must look like lo:hi");
  auto parse = [](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw InvalidArgument("bad range bound '" + std::string(s) + "'");
    }
    return v;
  };
  return {parse(text.substr(0, colon)), parse(text.substr(colon + 1))};
}

namespace detail {

struct ScanPlan {
  GroupPtr group;
  std::vector<std::size_t> support;
  std::uint64_t span;
  std::uint64_t vectors;
};

inline ScanPlan plan_scan(const ScanConfig& cfg) {
  if (cfg.lo > cfg.hi) throw InvalidArgument("empty range");
  ScanPlan plan;
  plan.group = make_group(cfg.group);
  const std::size_t n = plan.group->order();
  plan.support = cfg.support;
  if (plan.support.empty()) {
    for (std::size_t i = 0; i < n; ++i) plan.support.push_back(i);
  }
  for (auto s : plan.support)
    if (s >= n) throw InvalidArgument("support slot out of range");
  const __int128 span = static_cast<__int128>(cfg.hi) - cfg.lo + 1;
  if (span > (__int128{1} << 62)) throw InvalidArgument("range too wide");
  plan.span = static_cast<std::uint64_t>(span);
  if (cfg.mode == ScanMode::exhaustive) {
    __int128 total = 1;
    for (std::size_t i = 0; i < plan.support.size(); ++i) {
      total *= span;
      if (total > static_cast<__int128>(kMaxExhaustiveVectors)) {
        throw InvalidArgument("exhaustive scan exceeds " + std::to_string(kMaxExhaustiveVectors) + " vectors");
      }
    }
    plan.vectors = static_cast<std::uint64_t>(total);
  } else {
    plan.vectors = cfg.count;
  }
  if (cfg.evaluator == Evaluator::factored && cfg.group.family != GroupFamily::symmetric4) {
    throw InvalidArgument("the factored evaluator is only available for S4");
  }
  return plan;
}

inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::uint64_t span) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  for (;;) {
    const std::uint64_t r = rng();
    if (r < limit) return lo + static_cast<std::int64_t>(r % span);
  }
}

inline BigInt evaluate(const ScanConfig& cfg, const GroupTable& g, std::span<const BigInt> coeffs) {
  if (cfg.evaluator == Evaluator::factored) return s4_det_fast(coeffs);
  return det_exact(g, coeffs);
}

inline Json header_json(const ScanConfig& cfg, const ScanPlan& plan) {
  Json h{{"format", "gdet-scan"},
         {"version", kJsonSchemaVersion},
         {"group", cfg.group.name()},
         {"range", {cfg.lo, cfg.hi}},
         {"mode", cfg.mode == ScanMode::exhaustive ? "exhaustive" : "random"},
         {"vectors", plan.vectors},
         {"support", plan.support},
         {"evaluator", evaluator_name(cfg.evaluator)}};
  if (cfg.mode == ScanMode::random) {
    h["seed"] = cfg.seed;
    h["rng"] = std::string(kRngName);
  }
  return h;
}

}  // namespace detail

inline Json to_json(const ScanReport& r) {
  Json values = Json::array();
  for (const auto& [v, n] : r.values) values.push_back(Json::array({to_json(v), n}));
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back(Json{{"index", v.index}, {"coeffs", to_json(v.coeffs)}, {"det", to_json(v.value)}});
  Json v2 = Json::object(), v3 = Json::object();
  for (const auto& [k, n] : r.v2_histogram) v2[std::to_string(k)] = n;
  for (const auto& [k, n] : r.v3_histogram) v3[std::to_string(k)] = n;
  return Json{{"total", r.total},
              {"zero", r.zero_count},
              {"distinct", r.values.size()},
              {"violation_count", r.violation_count},
              {"violations", violations},
              {"residue_mod24", r.residue_mod24},
              {"v2_histogram", v2},
              {"v3_histogram", v3},
              {"values", values}};
}

/// Writes the value/multiplicity summary as CSV with a version header line.
inline void write_summary_csv(std::ostream& out, const ScanReport& r) {
  out << "# gdet-scan-summary v" << kJsonSchemaVersion << "\n";
  out << "value,multiplicity\n";
  for (const auto& [v, n] : r.values) out << v << ',' << n << '\n';
}

inline std::string summary_csv_path(const std::string& jsonl_path) {
  const auto dot = jsonl_path.rfind('.');
  const auto slash = jsonl_path.rfind('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return jsonl_path + ".csv";
  return jsonl_path.substr(0, dot) + ".csv";
}

/// Evaluates every configured vector, checks each nonzero determinant against the group's
/// decider and optionally persists the report.
inline ScanReport scan(const ScanConfig& cfg) {
  const auto rule = rule_for(cfg.group);
  if (!rule) throw InvalidArgument("no closed-form decider for group " + cfg.group.name());
  const detail::ScanPlan plan = detail::plan_scan(cfg);
  const GroupTable& g = *plan.group;
  const std::size_t n = g.order();

  std::ofstream jsonl;
  if (cfg.output_path) {
    jsonl.open(*cfg.output_path);
    if (!jsonl) throw Error("cannot write " + *cfg.output_path);
    jsonl << detail::header_json(cfg, plan).dump() << '\n';
  }

  std::mt19937_64 rng(cfg.seed);
  const std::uint64_t block = 4096;
  const unsigned threads = std::max(1U, cfg.threads);
  ScanReport report;
  std::vector<std::vector<BigInt>> vectors;
  std::vector<BigInt> dets;

  for (std::uint64_t begin = 0; begin < plan.vectors; begin += block) {
    const std::uint64_t end = std::min(plan.vectors, begin + block);
    vectors.assign(end - begin, std::vector<BigInt>(n, BigInt(0)));
    for (std::uint64_t i = begin; i < end; ++i) {
      auto& vec = vectors[i - begin];
      if (cfg.mode == ScanMode::random) {
        for (auto slot : plan.support) vec[slot] = detail::draw(rng, cfg.lo, plan.span);
      } else {
        std::uint64_t rest = i;
        for (auto slot : plan.support) {
          vec[slot] = cfg.lo + static_cast<std::int64_t>(rest % plan.span);
          rest /= plan.span;
        }
      }
    }

    dets.assign(vectors.size(), BigInt(0));
    std::vector<ScanReport> partial(threads);
    auto work = [&](unsigned t) {
      for (std::size_t j = t; j < vectors.size(); j += threads) {
        dets[j] = detail::evaluate(cfg, g, vectors[j]);
        ScanReport& r = partial[t];
        ++r.total;
        const BigInt& value = dets[j];
        ++r.values[value];
        if (value == 0) {
          ++r.zero_count;
          continue;
        }
        ++r.residue_mod24[residue(value, 24)];
        ++r.v2_histogram[valuation(value, 2).value()];
        ++r.v3_histogram[valuation(value, 3).value()];
        if (!is_member(*rule, value)) {
          ++r.violation_count;
          if (r.violations.size() < kMaxStoredViolations) r.violations.push_back({begin + j, vectors[j], value});
        }
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    for (const auto& p : partial) report.merge(p);

    if (cfg.output_path && cfg.full) {
      for (std::size_t j = 0; j < vectors.size(); ++j) {
        const bool ok = dets[j] == 0 || is_member(*rule, dets[j]);
        jsonl << Json{{"i", begin + j}, {"coeffs", to_json(vectors[j])}, {"det", to_json(dets[j])}, {"member", ok}}.dump()
              << '\n';
      }
    }
  }

  if (cfg.output_path) {
    jsonl << Json{{"summary", to_json(report)}}.dump() << '\n';
    std::ofstream csv(summary_csv_path(*cfg.output_path));
    if (!csv) throw Error("cannot write summary CSV");
    write_summary_csv(csv, report);
  }
  return report;
}

/// Smallest |det| >= 2 over an exhaustive scan of the range (restricted to `support` when
/// given); empty if no such value occurs.
inline std::optional<BigInt> lambda_scan(const GroupKind& group, std::int64_t lo, std::int64_t hi,
                                         std::vector<std::size_t> support = {}) {
  ScanConfig cfg;
  cfg.group = group;
  cfg.lo = lo;
  cfg.hi = hi;
  cfg.mode = ScanMode::exhaustive;
  cfg.support = std::move(support);
  const detail::ScanPlan plan = detail::plan_scan(cfg);
  const GroupTable& g = *plan.group;
  std::optional<BigInt> best;
  std::vector<BigInt> vec(g.order());
  for (std::uint64_t i = 0; i < plan.vectors; ++i) {
    std::fill(vec.begin(), vec.end(), BigInt(0));
    std::uint64_t rest = i;
    for (auto slot : plan.support) {
      vec[slot] = lo + static_cast<std::int64_t>(rest % plan.span);
      rest /= plan.span;
    }
    const BigInt value = abs(det_exact(g, vec));
    if (value >= 2 && (!best || value < *best)) best = value;
  }
  return best;
}

}  // namespace gdet
