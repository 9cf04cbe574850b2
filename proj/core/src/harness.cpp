// Copyright 2026 The actionconv Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "actionconv/harness.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "actionconv/limits.hpp"

namespace actionconv {

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename T>
T ParseNumber(std::string_view text, std::string_view what) {
  text = Trim(text);
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("bad " + std::string(what) + " '" +
                                std::string(text) + "'");
  }
  return value;
}

// Splits off the first ':'-separated field.
std::pair<std::string_view, std::string_view> Head(std::string_view s) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) return {s, {}};
  return {s.substr(0, colon), s.substr(colon + 1)};
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string FormatDouble(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

GraphSpec ParseGraphSpec(std::string_view text) {
  auto [kind, rest] = Head(Trim(text));
  if (kind == "edgelist") return LoadEdgeList(std::string(rest));
  if (rest.empty()) {
    throw std::invalid_argument("graph spec '" + std::string(text) +
                                "': expected kind:N");
  }
  if (kind == "er") {
    auto [n_text, tail] = Head(rest);
    auto [p_text, seed_text] = Head(tail);
    if (seed_text.empty()) {
      throw std::invalid_argument("graph spec: expected er:N:P:SEED");
    }
    return GraphSpec::ErdosRenyi(ParseNumber<std::size_t>(n_text, "vertex count"),
                                 ParseNumber<double>(p_text, "edge probability"),
                                 ParseNumber<std::uint64_t>(seed_text, "seed"));
  }
  const auto n = ParseNumber<std::size_t>(rest, "vertex count");
  if (kind == "star") return GraphSpec::Star(n);
  if (kind == "empty") return GraphSpec::Empty(n);
  if (kind == "cycle") return GraphSpec::Cycle(n);
  if (kind == "path") return GraphSpec::Path(n);
  if (kind == "complete") return GraphSpec::Complete(n);
  throw std::invalid_argument("unknown graph kind '" + std::string(kind) + "'");
}

WeightedOperator ParseOperatorSpec(std::string_view text) {
  text = Trim(text);
  auto [kind, rest] = Head(text);
  if (kind == "gplus") return GPlus(ParseGraphSpec(rest));
  if (kind == "broadcast") {
    auto [n_text, i_text] = Head(rest);
    const auto n = ParseNumber<std::size_t>(n_text, "vertex count");
    const auto i = i_text.empty() ? std::size_t{0}
                                  : ParseNumber<std::size_t>(i_text, "index");
    return Broadcast(n, i);
  }
  if (kind == "plus" || kind == "minus") {
    auto [i_text, inner] = Head(rest);
    const auto i = ParseNumber<std::size_t>(i_text, "index");
    return SignedLimit(ParseOperatorSpec(inner), i,
                       kind == "plus" ? Sign::kPlus : Sign::kMinus);
  }
  if (kind == "json") {
    return OperatorFromJson(nlohmann::json::parse(ReadFile(std::string(rest))));
  }
  const GraphSpec spec = ParseGraphSpec(text);
  return Adjacency(spec).WithId(std::string(text));
}

DiscreteMeasure RandomMeasure(SplitMix64& rng, std::size_t dim,
                              std::size_t max_atoms, double span, int grid) {
  const std::size_t atoms = 1 + rng.Below(max_atoms);
  std::vector<Point> points(atoms, Point(dim));
  std::vector<Weight> weights(atoms);
  BigInt total = 0;
  std::vector<int> mass(atoms);
  for (std::size_t a = 0; a < atoms; ++a) {
    for (double& x : points[a]) {
      if (grid > 0) {
        const auto steps = static_cast<std::int64_t>(span * grid);
        x = static_cast<double>(
                static_cast<std::int64_t>(rng.Below(2 * steps + 1)) - steps) /
            grid;
      } else {
        x = rng.Uniform(-span, span);
      }
    }
    mass[a] = 1 + static_cast<int>(rng.Below(6));
    total += mass[a];
  }
  for (std::size_t a = 0; a < atoms; ++a) weights[a] = Weight(BigInt(mass[a]), total);
  return Empirical(points, std::span<const Weight>(weights));
}

void ExperimentConfig::Set(std::string_view key, std::string_view value) {
  key = Trim(key);
  value = Trim(value);
  if (key == "experiment") {
    if (value != "star_broadcast" && value != "gplus_signed") {
      throw std::invalid_argument("unknown experiment '" + std::string(value) + "'");
    }
    experiment = value;
  } else if (key == "base") {
    ParseGraphSpec(std::string(value) + ":8");  // validates the family name
    base = value;
  } else if (key == "sizes") {
    sizes.clear();
    std::string_view rest = value;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      sizes.push_back(ParseNumber<std::size_t>(rest.substr(0, comma), "size"));
      rest = comma == std::string_view::npos ? std::string_view{}
                                             : rest.substr(comma + 1);
    }
    if (sizes.empty()) throw std::invalid_argument("sizes: empty list");
  } else if (key == "K") {
    truncation = ParseNumber<std::size_t>(value, "K");
    if (truncation == 0) throw std::invalid_argument("K must be >= 1");
  } else if (key == "count") {
    count = ParseNumber<std::size_t>(value, "count");
  } else if (key == "seed") {
    seed = ParseNumber<std::uint64_t>(value, "seed");
  } else if (key == "kind") {
    kind = ParseStrategyKind(value);
  } else if (key == "sign") {
    if (value == "+1" || value == "1" || value == "+") {
      sign = +1;
    } else if (value == "-1" || value == "-") {
      sign = -1;
    } else {
      throw std::invalid_argument("sign must be +1 or -1");
    }
  } else if (key == "out") {
    out = std::string(value);
  } else {
    throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
  }
}

std::map<std::string, std::string> ExperimentConfig::ToMap() const {
  std::string size_list;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    size_list += (i ? "," : "") + std::to_string(sizes[i]);
  }
  return {{"experiment", experiment},
          {"base", base},
          {"sizes", size_list},
          {"K", std::to_string(truncation)},
          {"count", std::to_string(count)},
          {"seed", std::to_string(seed)},
          {"kind", std::string(ToString(kind))},
          {"sign", sign > 0 ? "+1" : "-1"},
          {"out", out.string()}};
}

ExperimentConfig ParseConfig(std::string_view text) {
  ExperimentConfig cfg;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key=value");
    }
    cfg.Set(line.substr(0, eq), line.substr(eq + 1));
  }
  return cfg;
}

ExperimentConfig LoadConfig(const std::filesystem::path& path) {
  return ParseConfig(ReadFile(path));
}

std::vector<TrajectoryRow> ComputeTrajectory(const ExperimentConfig& cfg) {
  TestFunctionStrategy strategy;
  strategy.kind = cfg.kind;
  strategy.count = cfg.count;
  strategy.seed = cfg.seed;

  std::vector<TrajectoryRow> rows;
  for (std::size_t n : cfg.sizes) {
    TrajectoryRow row;
    row.n = n;
    TestFunctionStrategy sa = strategy.WithProbe(0);
    TestFunctionStrategy sb = strategy.WithProbe(0);
    if (cfg.experiment == "star_broadcast") {
      row.operator_a = "star:" + std::to_string(n);
      row.operator_b = "broadcast:" + std::to_string(n) + ":0";
    } else {
      row.operator_a = "gplus:" + cfg.base + ":" + std::to_string(n);
      row.operator_b = std::string(cfg.sign > 0 ? "plus" : "minus") + ":0:" +
                       cfg.base + ":" + std::to_string(n + 1);
      sa = strategy.WithProbe(n);  // the apex of G+
    }
    const WeightedOperator a = ParseOperatorSpec(row.operator_a);
    const WeightedOperator b = ParseOperatorSpec(row.operator_b);
    row.report = EstimateActionDistance(a, b, cfg.truncation, sa, sb);
    row.norm_profile_a = NormFromProfile(SampleProfile(a, 1, sa));
    row.norm_profile_b = NormFromProfile(SampleProfile(b, 1, sb));
    auto exact_norm = [](const WeightedOperator& op) -> std::optional<double> {
      try {
        return PqNorm(op, kInfinity, 1.0);
      } catch (const std::domain_error&) {
        return std::nullopt;
      }
    };
    row.norm_inf1_a = exact_norm(a);
    row.norm_inf1_b = exact_norm(b);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string TrajectoryCsv(std::span<const TrajectoryRow> rows) {
  std::string csv =
      "n,d_hat,tail_bound,norm_profile_a,norm_profile_b,norm_inf1_a,norm_inf1_b\n";
  auto opt = [](const std::optional<double>& x) {
    return x ? FormatDouble(*x) : std::string();
  };
  for (const TrajectoryRow& r : rows) {
    csv += std::to_string(r.n) + "," + FormatDouble(r.report.value) + "," +
           FormatDouble(r.report.tail_bound) + "," +
           FormatDouble(r.norm_profile_a) + "," +
           FormatDouble(r.norm_profile_b) + "," + opt(r.norm_inf1_a) + "," +
           opt(r.norm_inf1_b) + "\n";
  }
  return csv;
}

std::vector<std::filesystem::path> RunExperiment(const ExperimentConfig& cfg) {
  const std::vector<TrajectoryRow> rows = ComputeTrajectory(cfg);
  std::filesystem::create_directories(cfg.out);
  std::vector<std::filesystem::path> written;
  auto write = [&](const std::string& name, const std::string& content) {
    const auto path = cfg.out / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
    written.push_back(path);
  };

  nlohmann::json files = nlohmann::json::array();
  for (const TrajectoryRow& r : rows) {
    nlohmann::json report = ToJson(r.report);
    report["n"] = r.n;
    report["a"] = r.operator_a;
    report["b"] = r.operator_b;
    const std::string name = "report_n" + std::to_string(r.n) + ".json";
    write(name, report.dump(2) + "\n");
    files.push_back(name);
  }
  write("trajectory.csv", TrajectoryCsv(rows));
  files.push_back("trajectory.csv");
  nlohmann::json manifest = {{"config", cfg.ToMap()}, {"files", files}};
  write("manifest.json", manifest.dump(2) + "\n");
  return written;
}

nlohmann::json ToJson(const VerificationRecord& record) {
  nlohmann::json j = {{"id", record.id},
                      {"anchor", record.anchor},
                      {"expected", record.expected},
                      {"measured", record.measured},
                      {"pass", record.skipped ? nlohmann::json(nullptr)
                                              : nlohmann::json(record.pass)},
                      {"ms", record.ms}};
  if (!record.warning.empty()) j["warning"] = record.warning;
  return j;
}

bool AllPassed(std::span<const VerificationRecord> records) {
  for (const VerificationRecord& r : records) {
    if (!r.skipped && !r.pass) return false;
  }
  return true;
}

}  // namespace actionconv
