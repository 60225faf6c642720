// Copyright 2026 The fdp-noise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: tradeoff curves, CNDs, discrete noise, audits and
// the figure datasets. Exit codes: 0 success, 1 invalid input, 2 an audit
// found a violation.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "fdp_noise/audit.h"
#include "fdp_noise/cauchy.h"
#include "fdp_noise/cnd.h"
#include "fdp_noise/discrete.h"
#include "fdp_noise/logconcave.h"
#include "fdp_noise/roc.h"
#include "fdp_noise/spec_json.h"
#include "fdp_noise/tradeoff.h"

namespace fdp_noise {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitViolation = 2;

// Raised inside command handlers; main turns it into exit code 1.
struct InvalidInput {
  std::string message;
};

template <typename T>
T OrDie(absl::StatusOr<T> value, const std::string& context) {
  if (!value.ok()) {
    throw InvalidInput{
        absl::StrCat(context, ": ", value.status().message())};
  }
  return *std::move(value);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput{absl::StrCat("cannot open ", path)};
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool LooksInline(const std::string& arg) {
  const size_t first = arg.find_first_not_of(" \t\r\n");
  return first != std::string::npos && arg[first] == '{';
}

// --spec and --noise take inline JSON or a path to a JSON file.
std::string JsonArgument(const std::string& arg, std::string* base_dir) {
  if (LooksInline(arg)) return arg;
  if (base_dir != nullptr) {
    *base_dir = std::filesystem::path(arg).parent_path().string();
  }
  return ReadFile(arg);
}

TradeoffFunction SpecArgument(const std::string& arg) {
  return OrDie(ParseTradeoffSpec(JsonArgument(arg, nullptr)), "--spec");
}

std::string Num(double v) { return absl::StrFormat("%.12g", v); }

// CSV with a header row and LF line endings.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header)
      : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw InvalidInput{absl::StrCat("cannot write ", path)};
    Row(header);
  }
  void Row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }
  void Values(const std::vector<double>& values) {
    std::vector<std::string> cells;
    for (double v : values) cells.push_back(Num(v));
    Row(cells);
  }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream out_;
};

int EmitReport(const AuditReport& report, bool json) {
  std::cout << (json ? report.ToJson(2) + "\n" : report.ToText(40));
  return report.passed() ? kExitOk : kExitViolation;
}

// ---- figures ----

std::string FigurePath(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / (name + ".csv")).string();
}

std::string Fig2(const std::string& dir) {
  CsvWriter csv(FigurePath(dir, "fig2"),
                {"eps", "tulap_half", "laplace_half", "tulap_quarter",
                 "laplace_quarter"});
  constexpr int kPoints = 200;
  for (int i = 1; i <= kPoints; ++i) {
    const double eps = 6.0 * i / kPoints;
    const ContinuousCnd tulap =
        OrDie(ConstructCnd(OrDie(MakeEpsDelta(eps, 0.0), "fig2")), "fig2");
    const double tulap_half = OrDie(Concentration(tulap, 1), "fig2");
    const double tulap_quarter = 1.0 - 2.0 * tulap.Cdf(-0.25);
    csv.Values({eps, tulap_half, -std::expm1(-eps * 0.5), tulap_quarter,
                -std::expm1(-eps * 0.25)});
  }
  return csv.path();
}

std::string Fig3(const std::string& dir) {
  const TradeoffFunction g1 = OrDie(MakeGdp(1.0), "fig3");
  const RocCurve gaussian =
      OrDie(ShiftRoc(OrDie(DiscreteGaussian(1.0), "fig3"), 1), "fig3");
  const RocCurve canonical =
      OrDie(ShiftRoc(OrDie(UniqueSens1(g1), "fig3").pmf, 1), "fig3");
  CsvWriter csv(FigurePath(dir, "fig3"),
                {"alpha", "G_1", "discrete_gaussian", "discrete_cnd"});
  constexpr int kPoints = 1001;
  for (int i = 0; i < kPoints; ++i) {
    const double alpha = static_cast<double>(i) / (kPoints - 1);
    csv.Values({alpha, g1(alpha), gaussian(alpha), canonical(alpha)});
  }
  return csv.path();
}

std::string Fig4(const std::string& dir) {
  const CauchyTradeoff cauchy = OrDie(MakeCauchyTradeoff(1.0), "fig4");
  const TradeoffFunction upper =
      OrDie(MakeEpsDelta(cauchy.eps_upper, 0.0), "fig4");
  const TradeoffFunction lower =
      OrDie(MakeEpsDelta(cauchy.eps_lower, 0.0), "fig4");
  CsvWriter csv(FigurePath(dir, "fig4"),
                {"alpha", "C_1", "f_epsU", "f_epsL"});
  constexpr int kPoints = 501;
  for (int i = 0; i < kPoints; ++i) {
    const double alpha = static_cast<double>(i) / (kPoints - 1);
    csv.Values({alpha, cauchy.curve(alpha), upper(alpha), lower(alpha)});
  }
  return csv.path();
}

std::string Fig5(const std::string& dir) {
  const ContinuousCnd cnd =
      OrDie(ConstructCnd(OrDie(MakeEpsDelta(1.0, 0.05), "fig5")), "fig5");
  const DiscreteCnd staircase = OrDie(RoundCnd(cnd, 6), "fig5");
  CsvWriter csv(FigurePath(dir, "fig5"), {"x", "pmf", "cdf"});
  const DiscretePmf& pmf = staircase.pmf;
  for (int64_t x = pmf.lo(); x <= pmf.hi(); ++x) {
    csv.Values({static_cast<double>(x), pmf.Mass(x), pmf.Cdf(x)});
  }
  return csv.path();
}

// ---- command registration ----

struct Options {
  std::string spec;
  std::string noise;
  std::string pmf_path;
  std::string out;
  double alpha = 0.0;
  double x = 0.0;
  double u = 0.5;
  double xmin = -5.0;
  double xmax = 5.0;
  double step = 0.01;
  int points = 99;
  int delta = 1;
  int tmax = 10;
  int64_t n = 0;
  uint64_t seed = 0;
  bool family = false;
  bool json = false;
};

void AddSpec(CLI::App* cmd, Options& o) {
  cmd->add_option("--spec", o.spec, "tradeoff spec: inline JSON or a file")
      ->required();
}

void AddJson(CLI::App* cmd, Options& o) {
  cmd->add_flag("--json", o.json, "print the report as JSON");
}

}  // namespace

int Run(int argc, char** argv) {
  CLI::App app{"f-DP noise toolkit", "fdp-noise"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  CLI::App* tradeoff = app.add_subcommand("tradeoff", "tradeoff functions");
  tradeoff->require_subcommand(1);
  {
    CLI::App* eval = tradeoff->add_subcommand("eval", "evaluate f(alpha)");
    AddSpec(eval, o);
    eval->add_option("--alpha", o.alpha, "specificity in [0, 1]")->required();
    eval->callback([&] {
      action = [&] {
        const TradeoffFunction f = SpecArgument(o.spec);
        std::cout << Num(OrDie(f.Evaluate(o.alpha), "--alpha")) << "\n";
        return kExitOk;
      };
    });
    CLI::App* summary =
        tradeoff->add_subcommand("summary", "fixed point, TV and eps_f");
    AddSpec(summary, o);
    summary->callback([&] {
      action = [&] {
        const TradeoffFunction f = SpecArgument(o.spec);
        const ScalarSummaries s = OrDie(Summarize(f), "--spec");
        std::cout << "quantity,value\n"
                  << "c_f," << Num(s.fixed_point) << "\n"
                  << "tv," << Num(s.total_variation) << "\n"
                  << "eps_f," << Num(s.eps_f) << "\n";
        return kExitOk;
      };
    });
  }

  CLI::App* cnd = app.add_subcommand("cnd", "continuous canonical noise");
  cnd->require_subcommand(1);
  {
    CLI::App* cdf = cnd->add_subcommand("cdf", "F(x)");
    AddSpec(cdf, o);
    cdf->add_option("--x", o.x, "point")->required();
    cdf->callback([&] {
      action = [&] {
        const ContinuousCnd c = OrDie(ConstructCnd(SpecArgument(o.spec)),
                                      "--spec");
        std::cout << Num(c.Cdf(o.x)) << "\n";
        return kExitOk;
      };
    });
    CLI::App* quantile = cnd->add_subcommand("quantile", "F^-1(u)");
    AddSpec(quantile, o);
    quantile->add_option("--u", o.u, "level in (0, 1)")->required();
    quantile->callback([&] {
      action = [&] {
        const ContinuousCnd c = OrDie(ConstructCnd(SpecArgument(o.spec)),
                                      "--spec");
        std::cout << Num(OrDie(c.Quantile(o.u), "--u")) << "\n";
        return kExitOk;
      };
    });
    CLI::App* sample = cnd->add_subcommand("sample", "seeded draws");
    AddSpec(sample, o);
    sample->add_option("--n", o.n, "number of draws")
        ->required()
        ->check(CLI::Range(int64_t{0}, int64_t{100000000}));
    sample->add_option("--seed", o.seed, "generator seed")->required();
    sample->add_option("--out", o.out, "CSV path (stdout when omitted)");
    sample->callback([&] {
      action = [&] {
        const ContinuousCnd c = OrDie(ConstructCnd(SpecArgument(o.spec)),
                                      "--spec");
        const std::vector<double> draws =
            SampleCnd(c, o.seed, static_cast<size_t>(o.n));
        if (o.out.empty()) {
          std::cout << "sample\n";
          for (double d : draws) std::cout << Num(d) << "\n";
        } else {
          CsvWriter csv(o.out, {"sample"});
          for (double d : draws) csv.Values({d});
        }
        return kExitOk;
      };
    });
    CLI::App* table = cnd->add_subcommand("table", "(x, F(x)) grid as CSV");
    AddSpec(table, o);
    table->add_option("--xmin", o.xmin)->required();
    table->add_option("--xmax", o.xmax)->required();
    table->add_option("--step", o.step)->required();
    table->add_option("--out", o.out, "CSV path")->required();
    table->callback([&] {
      action = [&] {
        if (!(o.step > 0.0) || !(o.xmax >= o.xmin)) {
          throw InvalidInput{"need --step > 0 and --xmax >= --xmin"};
        }
        const ContinuousCnd c = OrDie(ConstructCnd(SpecArgument(o.spec)),
                                      "--spec");
        CsvWriter csv(o.out, {"x", "F"});
        const int64_t count =
            static_cast<int64_t>(std::floor((o.xmax - o.xmin) / o.step + 1e-9));
        for (int64_t i = 0; i <= count; ++i) {
          const double x = o.xmin + o.step * static_cast<double>(i);
          csv.Values({x, c.Cdf(x)});
        }
        std::cout << csv.path() << "\n";
        return kExitOk;
      };
    });
    CLI::App* qtable =
        cnd->add_subcommand("qtable", "(u, F^-1(u)) grid as CSV");
    AddSpec(qtable, o);
    qtable->add_option("--points", o.points, "interior levels u = i/(n+1)")
        ->check(CLI::Range(1, 10000000));
    qtable->add_option("--out", o.out, "CSV path")->required();
    qtable->callback([&] {
      action = [&] {
        const ContinuousCnd c = OrDie(ConstructCnd(SpecArgument(o.spec)),
                                      "--spec");
        CsvWriter csv(o.out, {"u", "quantile"});
        for (int i = 1; i <= o.points; ++i) {
          const double u = static_cast<double>(i) / (o.points + 1);
          csv.Values({u, *c.Quantile(u)});
        }
        std::cout << csv.path() << "\n";
        return kExitOk;
      };
    });
  }

  CLI::App* discrete = app.add_subcommand("discrete", "integer noise");
  discrete->require_subcommand(1);
  {
    CLI::App* pmf = discrete->add_subcommand(
        "pmf", "round(delta * N) for the CND N of f, as CSV");
    AddSpec(pmf, o);
    pmf->add_option("--delta", o.delta, "sensitivity")
        ->check(CLI::Range(1, 1000000));
    pmf->add_option("--out", o.out, "CSV path")->required();
    pmf->callback([&] {
      action = [&] {
        const ContinuousCnd c = OrDie(ConstructCnd(SpecArgument(o.spec)),
                                      "--spec");
        const DiscreteCnd d = OrDie(RoundCnd(c, o.delta), "--delta");
        CsvWriter csv(o.out, {"x", "pmf", "cdf"});
        for (int64_t x = d.pmf.lo(); x <= d.pmf.hi(); ++x) {
          csv.Values({static_cast<double>(x), d.pmf.Mass(x), d.pmf.Cdf(x)});
        }
        std::cout << csv.path() << "\n";
        return kExitOk;
      };
    });
    CLI::App* verify = discrete->add_subcommand(
        "verify", "check a pmf against the discrete CND properties");
    verify->add_option("--pmf", o.pmf_path, "pmf JSON {lo, mass}: inline or file")
        ->required();
    AddSpec(verify, o);
    verify->add_option("--delta", o.delta, "sensitivity")
        ->check(CLI::Range(1, 1000000));
    AddJson(verify, o);
    verify->callback([&] {
      action = [&] {
        DiscretePmf p =
            OrDie(ParsePmfJson(JsonArgument(o.pmf_path, nullptr)), "--pmf");
        const DiscreteCnd d{std::move(p), SpecArgument(o.spec), o.delta};
        return EmitReport(VerifyDiscreteCnd(d), o.json);
      };
    });
  }

  CLI::App* audit = app.add_subcommand("audit", "bound audits");
  audit->require_subcommand(1);
  {
    CLI::App* anti = audit->add_subcommand(
        "anti", "window masses against the anti-concentration bound");
    anti->add_option("--noise", o.noise, "noise JSON: inline or file")
        ->required();
    AddSpec(anti, o);
    anti->add_option("--tmax", o.tmax, "largest window length")
        ->check(CLI::Range(1, 100000));
    AddJson(anti, o);
    anti->callback([&] {
      action = [&] {
        std::string base;
        const NoiseSpec noise =
            OrDie(ParseNoiseJson(JsonArgument(o.noise, &base), base),
                  "--noise");
        return EmitReport(AuditNoise(noise, SpecArgument(o.spec), o.tmax),
                          o.json);
      };
    });
    CLI::App* dominance = audit->add_subcommand(
        "dominance", "stochastic dominance of |N' - a| over |N|");
    dominance->add_option("--noise", o.noise, "noise JSON: inline or file")
        ->required();
    AddSpec(dominance, o);
    dominance->add_flag(
        "--family", o.family,
        "treat --spec as an infinitely divisible family (gdp or family kind) "
        "and compare against its log-concave CND");
    dominance->add_option("--tmax", o.tmax, "largest integer t (pmf rivals)")
        ->check(CLI::Range(0, 100000));
    AddJson(dominance, o);
    dominance->callback([&] {
      action = [&] {
        std::string base;
        const NoiseSpec noise =
            OrDie(ParseNoiseJson(JsonArgument(o.noise, &base), base),
                  "--noise");
        const std::string spec = JsonArgument(o.spec, nullptr);
        if (o.family) {
          const TradeoffFamily family =
              OrDie(ParseFamilySpec(spec), "--spec");
          const ContinuousCnd c =
              OrDie(ConstructLogConcaveCnd(family), "--spec");
          return EmitReport(DominanceAudit(c, noise.noise, {}, {}), o.json);
        }
        if (noise.noise.kind() != NoiseKind::kDiscretePmf) {
          throw InvalidInput{
              "--noise: continuous or sample rivals need --family"};
        }
        const TradeoffFunction f = OrDie(ParseTradeoffSpec(spec), "--spec");
        const DiscreteCnd d = OrDie(UniqueSens1(f), "--spec");
        const DiscretePmf& rival = *noise.noise.pmf();
        return EmitReport(
            DominanceAuditDiscrete(d, rival, rival.lo(), rival.hi(), o.tmax),
            o.json);
      };
    });
  }

  CLI::App* figures = app.add_subcommand("figures", "figure datasets");
  figures->require_subcommand(1);
  {
    const std::vector<std::pair<std::string,
                                std::function<std::string(const std::string&)>>>
        kFigures = {{"fig2", Fig2}, {"fig3", Fig3}, {"fig4", Fig4},
                    {"fig5", Fig5}};
    for (const auto& [name, emit] : kFigures) {
      CLI::App* fig = figures->add_subcommand(name, name + " dataset");
      fig->add_option("--out", o.out, "output directory")->required();
      fig->callback([&, emit = emit] {
        action = [&, emit] {
          std::cout << emit(o.out) << "\n";
          return kExitOk;
        };
      });
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << "\n" << app.help();
    return kExitInvalid;
  }
  if (!action) return kExitInvalid;
  try {
    return action();
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitInvalid;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace fdp_noise

int main(int argc, char** argv) { return fdp_noise::Run(argc, argv); }
