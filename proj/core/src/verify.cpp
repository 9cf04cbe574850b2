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

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>

#include "actionconv/harness.hpp"
#include "actionconv/limits.hpp"
#include "actionconv/lp_metric.hpp"
#include "actionconv/parallel.hpp"

namespace actionconv {

namespace {

// Closed registry of claim labels; every record cites one of these.
constexpr std::string_view kLpDefinition =
    "levy-prokhorov distance between discrete measures";
constexpr std::string_view kLpShift =
    "levy-prokhorov behaviour under shifts and marginals";
constexpr std::string_view kStarNorm = "(inf,1)-norm of the star graph";
constexpr std::string_view kDegreeNorm =
    "q-norm growth of the star degree sequence";
constexpr std::string_view kGridApprox =
    "grid quantization error of measures on a box";
constexpr std::string_view kGPlusShift = "G+ profiles are shifted G profiles";
constexpr std::string_view kStarLimit =
    "star graphs converge to the broadcast operator";
constexpr std::string_view kGPlusLimit =
    "G+ sequences converge to A plus/minus broadcast";
constexpr std::string_view kNotSelfAdjoint =
    "self-adjointness of adjacency vs broadcast operators";
constexpr std::string_view kRegularity =
    "regularity and positivity of the signed limits";
constexpr std::string_view kNormGap =
    "(inf,1)-norm readout gap between stars and broadcast";
constexpr std::string_view kAdjointNorm =
    "(inf,1)-norm duality of adjoint operators";

constexpr std::array<std::string_view, 12> kAnchorList = {
    kLpDefinition, kLpShift,    kStarNorm,       kDegreeNorm,
    kGridApprox,   kGPlusShift, kStarLimit,      kGPlusLimit,
    kNotSelfAdjoint, kRegularity, kNormGap,      kAdjointNorm};

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string Fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

VerificationRecord Record(std::string id, std::string_view anchor,
                          std::string expected, nlohmann::json measured,
                          bool pass) {
  VerificationRecord r;
  r.id = std::move(id);
  r.anchor = std::string(anchor);
  r.expected = std::move(expected);
  r.measured = std::move(measured);
  r.pass = pass;
  return r;
}

std::string Padded(std::size_t n) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04zu", n);
  return buf;
}

using Records = std::vector<VerificationRecord>;

// --- criterion 1 ------------------------------------------------------------

Records LpOracle(const VerifyOptions& opt) {
  const auto start = Clock::now();
  SplitMix64 rng(HashSeed({opt.seed, 1}));
  double worst = 0.0;
  std::size_t worst_case = 0;
  for (std::size_t c = 0; c < opt.lp_oracle_cases; ++c) {
    const std::size_t dim = 1 + rng.Below(4);
    // Alternate exact-grid and continuous coordinates; the grid produces
    // the distance ties that stress breakpoint handling.
    const int grid = (c % 2 == 0) ? 4 : 0;
    const DiscreteMeasure mu = RandomMeasure(rng, dim, 4, 1.0, grid);
    const DiscreteMeasure nu = RandomMeasure(rng, dim, 4, 1.0, grid);
    const double diff = std::abs(LpDistance(mu, nu).value -
                                 LpDistanceBruteForce(mu, nu).value);
    if (diff > worst) {
      worst = diff;
      worst_case = c;
    }
  }
  const double ms = MillisSince(start);
  VerificationRecord r = Record(
      "ac01.lp_oracle.agreement", kLpDefinition,
      "|flow - brute force| <= 1e-9 on every case; runtime < 10 s",
      {{"cases", opt.lp_oracle_cases}, {"max_abs_diff", worst},
       {"worst_case", worst_case}, {"seconds", ms / 1000.0}},
      worst <= 1e-9 && ms < 10'000.0);
  if (opt.lp_oracle_cases == 0) r.warning = "vacuous: no cases were run";
  return {r};
}

// --- criterion 2 ------------------------------------------------------------

Records LpMetricProperties(const VerifyOptions& opt) {
  SplitMix64 rng(HashSeed({opt.seed, 2}));
  struct Tally {
    std::size_t violations = 0;
    double worst = 0.0;  // largest amount by which the relation failed
    void Check(bool ok, double amount) {
      if (!ok) {
        ++violations;
        worst = std::max(worst, amount);
      }
    }
  };
  Tally symmetry, identity, triangle, bounded, shift_identity, contraction,
      marginal;
  for (std::size_t c = 0; c < opt.lp_metric_cases; ++c) {
    const std::size_t dim = 1 + rng.Below(3);
    // Coordinates on the 1/16 grid keep x + w and y - w exact, which the
    // shift identity needs for bitwise equality.
    const DiscreteMeasure mu = RandomMeasure(rng, dim, 6, 1.0, 16);
    const DiscreteMeasure nu = RandomMeasure(rng, dim, 6, 1.0, 16);
    const DiscreteMeasure eta = RandomMeasure(rng, dim, 6, 1.0, 16);
    std::vector<double> w(dim);
    for (double& x : w) x = static_cast<double>(static_cast<int>(rng.Below(33)) - 16) / 16.0;
    const ShiftVector shift(w);

    const double d_mn = LpDistance(mu, nu).value;
    const double d_nm = LpDistance(nu, mu).value;
    const double d_ne = LpDistance(nu, eta).value;
    const double d_me = LpDistance(mu, eta).value;
    const double d_mm = LpDistance(mu, mu).value;
    symmetry.Check(d_mn == d_nm, std::abs(d_mn - d_nm));
    identity.Check(d_mm == 0.0, d_mm);
    triangle.Check(d_me <= d_mn + d_ne + 1e-12, d_me - d_mn - d_ne);
    for (double d : {d_mn, d_ne, d_me}) bounded.Check(d <= 1.0, d - 1.0);

    const double lhs = LpDistance(Shift(mu, shift), nu).value;
    const double rhs = LpDistance(mu, Shift(nu, -shift)).value;
    shift_identity.Check(lhs == rhs, std::abs(lhs - rhs));

    const double moved = LpDistance(mu, Shift(mu, shift)).value;
    contraction.Check(moved <= shift.Norm() + 1e-12, moved - shift.Norm());

    std::vector<std::size_t> coords;
    for (std::size_t i = 0; i < dim; ++i) {
      if (rng.Coin(0.5)) coords.push_back(i);
    }
    if (coords.empty()) coords.push_back(rng.Below(dim));
    const double projected =
        LpDistance(Marginal(mu, coords), Marginal(nu, coords)).value;
    marginal.Check(projected <= d_mn, projected - d_mn);
  }
  const std::size_t cases = opt.lp_metric_cases;
  auto rec = [&](std::string id, std::string_view anchor, std::string expected,
                 const Tally& t) {
    return Record("ac02.lp_metric." + std::move(id), anchor, std::move(expected),
                  {{"cases", cases}, {"violations", t.violations},
                   {"worst_excess", t.worst}},
                  t.violations == 0);
  };
  return {
      rec("symmetry", kLpDefinition, "d(mu,nu) == d(nu,mu) exactly", symmetry),
      rec("identity", kLpDefinition, "d(mu,mu) == 0", identity),
      rec("triangle", kLpDefinition, "d(mu,eta) <= d(mu,nu) + d(nu,eta) + 1e-12",
          triangle),
      rec("bounded", kLpDefinition, "d <= 1", bounded),
      rec("shift_identity", kLpShift,
          "d(mu (+) w, nu) == d(mu, nu (+) -w) exactly", shift_identity),
      rec("shift_contraction", kLpShift, "d(mu, mu (+) w) <= |w| + 1e-12",
          contraction),
      rec("marginal_contraction", kLpShift,
          "d(marginal mu, marginal nu) <= d(mu, nu)", marginal),
  };
}

// --- criterion 3 ------------------------------------------------------------

Records Norms(const VerifyOptions&) {
  const auto start = Clock::now();
  Records out;
  for (std::size_t n : {4, 10, 100, 1000}) {
    const double measured = PqNorm(Adjacency(GraphSpec::Star(n)), kInfinity, 1.0);
    const double expected = ToDouble(Weight(2 * n - 2, n));
    out.push_back(Record("ac03.norms.star_inf1.n=" + Padded(n), kStarNorm,
                         "== 2 - 2/n = " + Fmt(expected), measured,
                         measured == expected));
  }
  {
    const WeightedOperator star = Adjacency(GraphSpec::Star(10));
    const double measured =
        QNorm(Apply(star, std::vector<double>(10, 1.0)), star.weights(), 2.0);
    out.push_back(Record("ac03.norms.degree_q2.n=0010", kDegreeNorm, "== 3",
                         measured, measured == 3.0));
  }
  for (std::size_t n : {10, 100, 1000}) {
    const WeightedOperator star = Adjacency(GraphSpec::Star(n));
    const double measured =
        QNorm(Apply(star, std::vector<double>(n, 1.0)), star.weights(), 2.0);
    const double bound = static_cast<double>(n - 1) / std::sqrt(static_cast<double>(n));
    out.push_back(Record("ac03.norms.degree_q2_lower.n=" + Padded(n), kDegreeNorm,
                         ">= (n-1)/sqrt(n) = " + Fmt(bound), measured,
                         measured >= bound));
  }
  const double ms = MillisSince(start);
  out.push_back(Record("ac03.norms.runtime", kStarNorm, "< 1 s",
                       {{"seconds", ms / 1000.0}}, ms < 1000.0));
  return out;
}

// --- criterion 4 ------------------------------------------------------------

Records DiscretizeBound(const VerifyOptions&) {
  const auto start = Clock::now();
  constexpr std::size_t kAtoms = 2048;
  const double pitch = 2.0 / kAtoms;
  std::vector<Point> points(kAtoms);
  for (std::size_t i = 0; i < kAtoms; ++i) {
    points[i] = {-1.0 + (static_cast<double>(i) + 0.5) * pitch};
  }
  const DiscreteMeasure proxy = Empirical(points);
  const Box box = Box::Cube(1, -1.0, 1.0);
  Records out;
  for (int k : {2, 4, 8}) {
    const DiscreteMeasure coarse = Discretize(proxy, box, k);
    const double d = LpDistance(proxy, coarse).value;
    const double bound = 1.0 / k + pitch;
    out.push_back(Record("ac04.discretize.k=" + Padded(k), kGridApprox,
                         "d_LP(proxy, discretized) <= 1/k + pitch = " + Fmt(bound),
                         {{"d_lp", d}, {"cells", coarse.size()}}, d <= bound));
  }
  const double ms = MillisSince(start);
  out.push_back(Record("ac04.discretize.runtime", kGridApprox, "< 30 s",
                       {{"seconds", ms / 1000.0}}, ms < 30'000.0));
  return out;
}

// --- criterion 5 ------------------------------------------------------------

Records GPlusShift(const VerifyOptions& opt) {
  constexpr std::size_t kN = 50;
  SplitMix64 rng(HashSeed({opt.seed, 5}));
  const double bound = 1.0 / (kN + 1) + 1e-12;
  double worst = 0.0;
  std::size_t max_atoms = 0;
  for (std::size_t g = 0; g < opt.gplus_shift_graphs; ++g) {
    const GraphSpec spec =
        GraphSpec::ErdosRenyi(kN, rng.Uniform(0.05, 0.5), rng.Next());
    const WeightedOperator base = Adjacency(spec);
    const WeightedOperator plus = GPlus(spec);
    const std::size_t k = 1 + rng.Below(2);
    TestTuple f(k, std::vector<double>(kN));
    TestTuple f_plus(k);
    std::vector<double> shift(2 * k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
      for (double& x : f[i]) x = rng.Uniform(-1.0, 1.0);
      const double apex = rng.Uniform(-1.0, 1.0);
      f_plus[i] = f[i];
      f_plus[i].push_back(apex);
      shift[k + i] = apex;
    }
    const DiscreteMeasure lhs = MeasureOf(plus, f_plus);
    const DiscreteMeasure rhs = Shift(MeasureOf(base, f), ShiftVector(shift));
    max_atoms = std::max(max_atoms, lhs.size() + rhs.size());
    worst = std::max(worst, LpDistance(lhs, rhs).value);
  }
  return {Record("ac05.gplus_shift.bound", kGPlusShift,
                 "d_LP(mu+(f,v), mu(f) (+) (0,v)) <= 1/(n+1) + 1e-12 = " + Fmt(bound),
                 {{"graphs", opt.gplus_shift_graphs}, {"n", kN},
                  {"worst", worst}, {"max_combined_atoms", max_atoms}},
                 worst <= bound)};
}

// --- criteria 6 and 7 -------------------------------------------------------

struct Trajectory {
  std::vector<std::size_t> sizes;
  std::vector<double> values;
  nlohmann::json Json() const {
    nlohmann::json j = nlohmann::json::object();
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      j["n=" + std::to_string(sizes[i])] = values[i];
    }
    return j;
  }
  bool NonIncreasing() const {
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i] > values[i - 1]) return false;
    }
    return true;
  }
};

Trajectory RunTrajectory(const VerifyOptions& opt, const std::string& experiment) {
  ExperimentConfig cfg;
  cfg.experiment = experiment;
  cfg.sizes = {8, 32, 128};
  cfg.truncation = opt.truncation;
  cfg.count = opt.count;
  cfg.seed = opt.seed;
  Trajectory t;
  for (const TrajectoryRow& row : ComputeTrajectory(cfg)) {
    t.sizes.push_back(row.n);
    t.values.push_back(row.report.value);
  }
  return t;
}

Records StarLimit(const VerifyOptions& opt) {
  const auto start = Clock::now();
  const Trajectory t = RunTrajectory(opt, "star_broadcast");
  const double ms = MillisSince(start);
  return {
      Record("ac06.star_limit.nonincreasing", kStarLimit,
             "d_M(star(n), broadcast(n,0)) nonincreasing over n = 8, 32, 128",
             t.Json(), t.NonIncreasing()),
      Record("ac06.star_limit.halving", kStarLimit, "value(128) <= value(8) / 2",
             t.Json(), t.values.back() <= t.values.front() / 2.0),
      Record("ac06.star_limit.runtime", kStarLimit, "< 300 s",
             {{"seconds", ms / 1000.0}}, ms < 300'000.0),
  };
}

Records GPlusLimit(const VerifyOptions& opt) {
  const Trajectory t = RunTrajectory(opt, "gplus_signed");
  return {Record("ac07.gplus_limit.nonincreasing", kGPlusLimit,
                 "d_M(gplus(cycle(n)), plus(cycle(n+1), 0)) nonincreasing over "
                 "n = 8, 32, 128",
                 t.Json(), t.NonIncreasing())};
}

// --- criterion 8 ------------------------------------------------------------

Records SelfAdjoint(const VerifyOptions&) {
  Records out;
  for (std::size_t n : {8, 64}) {
    const double measured = NonSelfAdjointWitness(Broadcast(n, 0), 0);
    const double expected = ToDouble(Weight(n - 1, n));
    out.push_back(Record("ac08.self_adjoint.broadcast_witness.n=" + Padded(n),
                         kNotSelfAdjoint, "== 1 - 1/n = " + Fmt(expected),
                         measured, measured == expected));
  }
  const std::vector<std::pair<std::string, WeightedOperator>> graphs = {
      {"star:10", Adjacency(GraphSpec::Star(10))},
      {"cycle:12", Adjacency(GraphSpec::Cycle(12))},
      {"path:7", Adjacency(GraphSpec::Path(7))},
      {"complete:6", Adjacency(GraphSpec::Complete(6))},
      {"empty:5", Adjacency(GraphSpec::Empty(5))},
      {"er:40:0.3:1", Adjacency(GraphSpec::ErdosRenyi(40, 0.3, 1))},
      {"gplus:cycle:9", GPlus(GraphSpec::Cycle(9))},
  };
  nlohmann::json defects = nlohmann::json::object();
  bool all_zero = true;
  for (const auto& [name, op] : graphs) {
    const double d = SelfAdjointDefect(op);
    defects[name] = d;
    all_zero = all_zero && d == 0.0;
  }
  out.push_back(Record("ac08.self_adjoint.adjacency_defect", kNotSelfAdjoint,
                       "== 0 for every adjacency matrix", defects, all_zero));
  return out;
}

// --- criterion 9 ------------------------------------------------------------

Records Regularity(const VerifyOptions&) {
  Records out;
  for (std::size_t n : {8, 64}) {
    const WeightedOperator cycle = Adjacency(GraphSpec::Cycle(n));
    const WeightedOperator plus = SignedLimit(cycle, 0, Sign::kPlus);
    const WeightedOperator minus = SignedLimit(cycle, 0, Sign::kMinus);
    const auto c_plus = CRegularity(plus);
    const auto c_minus = CRegularity(minus);
    const std::string suffix = ".n=" + Padded(n);
    out.push_back(Record("ac09.regularity.plus" + suffix, kRegularity,
                         "c-regular with c == 3",
                         c_plus ? nlohmann::json(*c_plus) : nlohmann::json(nullptr),
                         c_plus && *c_plus == 3.0));
    out.push_back(Record("ac09.regularity.minus" + suffix, kRegularity,
                         "c-regular with c == 1",
                         c_minus ? nlohmann::json(*c_minus) : nlohmann::json(nullptr),
                         c_minus && *c_minus == 1.0));
    const double pos_plus = PositivityDefect(plus);
    const double pos_minus = PositivityDefect(minus);
    out.push_back(Record("ac09.positivity.plus" + suffix, kRegularity,
                         "positivity defect == 0", pos_plus, pos_plus == 0.0));
    out.push_back(Record("ac09.positivity.minus" + suffix, kRegularity,
                         "positivity defect > 0", pos_minus, pos_minus > 0.0));
  }
  return out;
}

// --- criterion 10 -----------------------------------------------------------

Records NormGap(const VerifyOptions& opt) {
  TestFunctionStrategy strategy;
  strategy.count = opt.count;
  strategy.seed = opt.seed;
  Records out;
  nlohmann::json gap = nlohmann::json::object();
  for (std::size_t n : {8, 128}) {
    const double star =
        NormFromProfile(SampleProfile(Adjacency(GraphSpec::Star(n)), 1, strategy));
    const double broadcast = NormFromProfile(SampleProfile(Broadcast(n, 0), 1, strategy));
    const double expected = ToDouble(Weight(2 * n - 2, n));
    out.push_back(Record("ac10.norm_gap.star.n=" + Padded(n), kNormGap,
                         "== 2 - 2/n = " + Fmt(expected), star, star == expected));
    out.push_back(Record("ac10.norm_gap.broadcast.n=" + Padded(n), kNormGap,
                         "== 1", broadcast, broadcast == 1.0));
    gap["n=" + std::to_string(n)] = star - broadcast;
  }
  out.push_back(Record("ac10.norm_gap.persistent", kNormGap,
                       "star minus broadcast readout == 1 - 2/n (tends to 1)", gap,
                       gap["n=8"].get<double>() == 0.75 &&
                           gap["n=128"].get<double>() == 1.0 - 2.0 / 128));
  return out;
}

// --- criterion 11 -----------------------------------------------------------

Records AdjointDuality(const VerifyOptions& opt) {
  SplitMix64 rng(HashSeed({opt.seed, 11}));
  std::size_t mismatches = 0;
  double worst = 0.0;
  for (std::size_t c = 0; c < opt.adjoint_cases; ++c) {
    const std::size_t n = 2 + rng.Below(11);  // 2..12
    std::vector<double> m(n * n);
    for (double& x : m) x = (rng.Next() >> 63) ? 1.0 : -1.0;
    const WeightedOperator a(n, std::move(m));
    const double lhs = PqNorm(a, kInfinity, 1.0);
    const double rhs = PqNorm(Adjoint(a), kInfinity, 1.0);
    if (lhs != rhs) {
      ++mismatches;
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return {Record("ac11.adjoint.duality", kAdjointNorm,
                 "||A||_(inf->1) == ||A*||_(inf->1) exactly",
                 {{"cases", opt.adjoint_cases}, {"mismatches", mismatches},
                  {"worst", worst}},
                 mismatches == 0)};
}

struct Suite {
  std::string_view name;
  std::function<Records(const VerifyOptions&)> run;
};

const std::vector<Suite>& Registry() {
  static const std::vector<Suite> suites = {
      {"lp_oracle", LpOracle},     {"lp_metric", LpMetricProperties},
      {"norms", Norms},            {"discretize", DiscretizeBound},
      {"gplus_shift", GPlusShift}, {"star_limit", StarLimit},
      {"gplus_limit", GPlusLimit}, {"self_adjoint", SelfAdjoint},
      {"regularity", Regularity},  {"norm_gap", NormGap},
      {"adjoint", AdjointDuality},
  };
  return suites;
}

Records RunSuite(const Suite& suite, const VerifyOptions& opt) {
  const auto start = Clock::now();
  Records records = suite.run(opt);
  const double ms = MillisSince(start);
  const bool over_budget = ms > opt.time_guard_seconds * 1000.0;
  for (VerificationRecord& r : records) {
    r.ms = ms;
    if (over_budget) {
      r.skipped = true;
      r.warning = "suite exceeded the " + Fmt(opt.time_guard_seconds) +
                  " s time guard";
    }
  }
  return records;
}

}  // namespace

std::span<const std::string_view> Anchors() { return kAnchorList; }

std::vector<std::string> SuiteNames() {
  std::vector<std::string> names;
  for (const Suite& s : Registry()) names.emplace_back(s.name);
  return names;
}

std::vector<VerificationRecord> RunVerify(std::string_view suite,
                                          const VerifyOptions& options) {
  std::vector<const Suite*> selected;
  for (const Suite& s : Registry()) {
    if (suite == "all" || s.name == suite) selected.push_back(&s);
  }
  if (selected.empty()) {
    throw std::invalid_argument("unknown verification suite '" +
                                std::string(suite) + "'");
  }
  std::vector<Records> per_suite(selected.size());
  ParallelFor(selected.size(), [&](std::size_t i) {
    per_suite[i] = RunSuite(*selected[i], options);
  });
  Records out;
  for (Records& r : per_suite) {
    std::move(r.begin(), r.end(), std::back_inserter(out));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const VerificationRecord& a, const VerificationRecord& b) {
                     return a.id < b.id;
                   });
  return out;
}

}  // namespace actionconv
