#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "graphene/scenarios.hpp"

namespace {

using graphene::DeformationProtocol;
using graphene::MaterialParams;
using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kToleranceFailure = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;
constexpr int kSchemaVersion = 1;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string param_set{"GGA"};
  std::string protocol{"uniaxial"};
  std::string model{"metric"};
  double theta_deg{0.0};
  std::vector<double> range;  ///< empty: 1..1.25, pure shear 1..1.2
  int steps{26};
  std::uint64_t seed{42};
  std::string out;
  std::string format;

  int samples{200};
  graphene::VerifyTolerances tol;

  int evals{100000};
  double min_ratio{1.2};

  std::vector<double> r_range{0.3, 1.2};
  double h0{0.34};
  double gamma{0.14};

  double beam_E{340.0};
  double beam_r_m{1.0};
  double beam_L{38.19};
  double beam_theta_w_deg{17.45};
  double beam_delta{1.0};

  double declination{300.0};
};

/// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::out | std::ios::trunc | std::ios::binary);
      if (!file_) throw IoError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  bool to_file() const { return file_.is_open(); }
  void close() {
    if (!file_.is_open()) return;
    file_.close();
    if (file_.fail()) throw IoError("write failed");
  }

 private:
  std::ofstream file_;
};

std::string num(double v) { return fmt::format("{:.10g}", v); }

double deg(double rad) { return rad * 180.0 / std::numbers::pi; }
double rad(double degrees) { return degrees * std::numbers::pi / 180.0; }

DeformationProtocol protocol_from(const Options& o) {
  const auto kind = graphene::parse_protocol(o.protocol);
  if (o.range.empty()) {
    const double end = kind == graphene::ProtocolKind::pure_shear ? 1.2 : 1.25;
    return {kind, rad(o.theta_deg), 1.0, end, o.steps};
  }
  if (o.range.size() != 2) throw std::invalid_argument("--range takes two values");
  return {kind, rad(o.theta_deg), o.range[0], o.range[1], o.steps};
}

std::string format_or(const Options& o, const std::string& fallback) { return o.format.empty() ? fallback : o.format; }

// ---------------------------------------------------------------- verify

json check_json(const std::string& suite, const graphene::CheckResult& c) {
  return {{"suite", suite},       {"name", c.name},           {"max_error", c.max_error},
          {"mean_error", c.mean_error}, {"tolerance", c.tolerance}, {"gated", c.gated},
          {"passed", c.passed()}};
}

int cmd_verify(const Options& o) {
  if (format_or(o, "json") != "json") throw std::invalid_argument("verify writes a json report only");
  const MaterialParams p = graphene::preset(o.param_set);
  json checks = json::array();
  bool passed = true;
  const std::pair<const char*, graphene::VerifyModel> suites[] = {{"metric", graphene::VerifyModel::metric},
                                                                  {"log", graphene::VerifyModel::log},
                                                                  {"bending", graphene::VerifyModel::bending}};
  for (const auto& [name, model] : suites) {
    const auto rep = graphene::verify_derivatives(model, p, o.samples, o.seed, o.tol);
    for (const auto& c : rep.checks) checks.push_back(check_json(name, c));
    passed = passed && rep.passed();
  }
  json report{{"schema_version", kSchemaVersion}, {"command", "verify"}, {"param_set", p.name},
              {"samples", o.samples},             {"seed", o.seed},      {"passed", passed},
              {"checks", checks}};
  Sink sink(o.out);
  sink.stream() << report.dump(2) << '\n';
  const bool to_file = sink.to_file();
  sink.close();
  if (to_file) std::cout << (passed ? "verify: all checks passed\n" : "verify: tolerance breach\n");
  return passed ? kOk : kToleranceFailure;
}

// ---------------------------------------------------------------- curve

int cmd_curve(const Options& o) {
  const MaterialParams p = graphene::preset(o.param_set);
  const DeformationProtocol proto = protocol_from(o);
  const graphene::Model model = graphene::parse_model(o.model);
  const auto pts = graphene::run_curve(proto, model, p);
  const std::string fmt_name = format_or(o, "csv");

  Sink sink(o.out);
  std::ostream& os = sink.stream();
  if (fmt_name == "csv") {
    os << "step,lambda_or_J,sigma11,sigma22,sigma12,W,model,param_set,theta_deg\n";
    for (const auto& q : pts)
      os << fmt::format("{},{},{},{},{},{},{},{},{}\n", q.step, num(q.stretch), num(q.sigma11), num(q.sigma22),
                        num(q.sigma12), num(q.W), graphene::to_string(model), p.name, num(o.theta_deg));
  } else if (fmt_name == "json") {
    json rows = json::array();
    for (const auto& q : pts)
      rows.push_back({{"step", q.step}, {"lambda_or_J", q.stretch}, {"sigma11", q.sigma11},
                      {"sigma22", q.sigma22}, {"sigma12", q.sigma12}, {"W", q.W}});
    json report{{"schema_version", kSchemaVersion}, {"command", "curve"}, {"protocol", o.protocol},
                {"model", graphene::to_string(model)}, {"param_set", p.name}, {"theta_deg", o.theta_deg},
                {"points", rows}};
    os << report.dump(2) << '\n';
  } else {
    throw std::invalid_argument("unknown format '" + fmt_name + "'");
  }
  const bool to_file = sink.to_file();
  sink.close();

  const graphene::CurvePoint* peak = &pts.front();
  for (const auto& q : pts)
    if (q.sigma11 > peak->sigma11) peak = &q;
  std::ostream& summary = to_file ? std::cout : std::cerr;
  summary << fmt::format("peak sigma11 = {} N/m at {} = {}\n", num(peak->sigma11),
                         proto.kind == graphene::ProtocolKind::dilatation ? "J" : "lambda", num(peak->stretch));
  return kOk;
}

// ---------------------------------------------------------------- compare

struct PublishedRow {
  double published11, published22;
  double limit11, limit22;
};

std::optional<PublishedRow> published_row(graphene::ProtocolKind kind, double theta_deg, const std::string& set) {
  const double m = std::fmod(std::fmod(theta_deg, 60.0) + 60.0, 60.0);
  if (kind == graphene::ProtocolKind::uniaxial && set == "GGA") {
    if (std::abs(m) < 1e-9 || std::abs(m - 60.0) < 1e-9) return PublishedRow{0.019, 0.199, 0.05, 0.4};
    if (std::abs(m - 30.0) < 1e-9) return PublishedRow{0.019, 0.194, 0.05, 0.4};
  }
  if (kind == graphene::ProtocolKind::pure_shear) {
    if (set == "GGA") return PublishedRow{0.35, 0.42, 0.8, 0.9};
    if (set == "LDA") return PublishedRow{0.12, 0.22, 0.4, 0.5};
  }
  return std::nullopt;
}

int cmd_compare(const Options& o) {
  const MaterialParams p = graphene::preset(o.param_set);
  const DeformationProtocol proto = protocol_from(o);
  const auto cmp = graphene::compare_models(proto, p);
  const auto row = published_row(proto.kind, o.theta_deg, p.name);
  const double m11 = 100.0 * cmp.max_rel_sigma11, m22 = 100.0 * cmp.max_rel_sigma22;
  const bool within = !row || (m11 <= row->limit11 && m22 <= row->limit22);

  Sink sink(o.out);
  std::ostream& os = sink.stream();
  if (format_or(o, "text") == "json") {
    json report{{"schema_version", kSchemaVersion}, {"command", "compare"}, {"protocol", o.protocol},
                {"param_set", p.name}, {"theta_deg", o.theta_deg},
                {"range", {proto.start, proto.end}},
                {"measured_percent", {{"sigma11", m11}, {"sigma22", m22}, {"sigma12", 100.0 * cmp.max_rel_sigma12}}}};
    if (row) {
      report["published_percent"] = {{"sigma11", row->published11}, {"sigma22", row->published22}};
      report["limit_percent"] = {{"sigma11", row->limit11}, {"sigma22", row->limit22}};
    }
    report["within_limits"] = within;
    os << report.dump(2) << '\n';
  } else {
    os << fmt::format("{:<10}{:>14}{:>10}{:>10}\n", "", "sigma11 [%]", "sigma22", "sigma12");
    os << fmt::format("{:<10}{:>14.4f}{:>10.4f}{:>10.4f}\n", "measured", m11, m22, 100.0 * cmp.max_rel_sigma12);
    if (row) {
      os << fmt::format("{:<10}{:>14.3f}{:>10.3f}{:>10}\n", "published", row->published11, row->published22, "-");
      os << fmt::format("{:<10}{:>14.3f}{:>10.3f}{:>10}\n", "limit", row->limit11, row->limit22, "-");
    }
  }
  sink.close();
  return within ? kOk : kToleranceFailure;
}

// ---------------------------------------------------------------- bench

int cmd_bench(const Options& o) {
  const MaterialParams p = graphene::preset(o.param_set);
  const auto r = graphene::benchmark_models(p, o.evals, o.seed);
  const bool ok = r.consistency_passed && r.ratio_full >= o.min_ratio;
  json report{{"schema_version", kSchemaVersion},
              {"command", "bench"},
              {"param_set", p.name},
              {"n_evals", r.n_evals},
              {"seed", r.seed},
              {"consistency", {{"max_rel", r.consistency_max_rel}, {"limit", r.consistency_limit},
                               {"passed", r.consistency_passed}}},
              {"seconds", {{"calibration", r.calibration_s}, {"metric_stress", r.metric_stress_s},
                           {"log_stress", r.log_stress_s}, {"metric_stress_tangent", r.metric_full_s},
                           {"log_stress_tangent", r.log_full_s}}},
              {"ratio_stress", r.ratio_stress},
              {"ratio_stress_tangent", r.ratio_full},
              {"published_ratio", r.published_ratio},
              {"min_ratio", o.min_ratio},
              {"environment", r.environment},
              {"passed", ok}};
  Sink sink(o.out);
  sink.stream() << report.dump(2) << '\n';
  sink.close();
  return ok ? kOk : kToleranceFailure;
}

// ---------------------------------------------------------------- contact / beam / cone

int cmd_contact(const Options& o) {
  if (o.r_range.size() != 2) throw std::invalid_argument("--range takes two values");
  if (o.steps < 2) throw std::invalid_argument("contact sweep needs steps >= 2");
  const graphene::ContactParams cp{o.h0, o.gamma};
  Sink sink(o.out);
  std::ostream& os = sink.stream();
  os << "r,psi,traction\n";
  for (int i = 0; i < o.steps; ++i) {
    const double r = o.r_range[0] + (o.r_range[1] - o.r_range[0]) * i / (o.steps - 1);
    const auto c = graphene::contact_potential(r, cp);
    os << fmt::format("{},{},{}\n", num(r), num(c.psi), num(c.traction));
  }
  sink.close();
  return kOk;
}

int cmd_beam(const Options& o) {
  const graphene::BeamParams b{o.beam_E, o.beam_r_m, o.beam_L, rad(o.beam_theta_w_deg)};
  const auto f = graphene::beam_force(b, o.beam_delta);
  Sink sink(o.out);
  sink.stream() << fmt::format("F_w = {} nN\nF_A = {} nN\n", num(f.F_w), num(f.F_A));
  sink.close();
  return kOk;
}

int cmd_cone(const Options& o) {
  const double a = graphene::apex_angle(o.declination);
  Sink sink(o.out);
  sink.stream() << fmt::format("{:.2f}\n", a);
  sink.close();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Graphene membrane constitutive models: verification, curves and calculators"};
  app.set_config("--config", "", "TOML or INI file mirroring the flags");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--param-set", o.param_set, "GGA or LDA")->check(CLI::IsMember({"GGA", "LDA"}, CLI::ignore_case));
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--format", o.format, "csv | json | text");
  };
  const auto add_protocol = [&](CLI::App* sub) {
    sub->add_option("--protocol", o.protocol, "dilatation | uniaxial | pure-shear");
    sub->add_option("--theta-deg", o.theta_deg, "pull direction from armchair, degrees");
    sub->add_option("--range", o.range, "start end of the stretch (or J) sweep; default 1 1.25, pure shear 1 1.2")->expected(2);
    sub->add_option("--steps", o.steps, "number of sweep points")->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify", "finite-difference verification of all analytic derivatives");
  add_common(verify);
  verify->add_option("--samples", o.samples, "random states per model")->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--tol-stress", o.tol.stress, "stress vs FD(energy)");
  verify->add_option("--tol-tangent", o.tol.tangent, "tangent vs FD(stress)");
  verify->add_option("--tol-symmetry", o.tol.symmetry, "major symmetry");
  verify->add_option("--tol-bending-stress", o.tol.bending_stress, "bending stress and moment vs FD(energy)");
  verify->add_option("--tol-bending-tangent", o.tol.bending_tangent, "bending tangents vs FD");

  auto* curve = app.add_subcommand("curve", "homogeneous stress-stretch curve");
  add_common(curve);
  add_protocol(curve);
  curve->add_option("--model", o.model, "metric | log");

  auto* compare = app.add_subcommand("compare", "metric vs log model stress difference");
  add_common(compare);
  add_protocol(compare);

  auto* bench = app.add_subcommand("bench", "metric vs log model throughput");
  add_common(bench);
  bench->add_option("--evals", o.evals, "evaluations per timed path (>= 10000)");
  bench->add_option("--seed", o.seed, "random seed");
  bench->add_option("--min-ratio", o.min_ratio, "required stress+tangent speedup");

  auto* contact = app.add_subcommand("contact", "half-space contact potential sweep");
  contact->add_option("--out", o.out, "output file (default stdout)");
  contact->add_option("--range", o.r_range, "r start end, nm")->expected(2);
  contact->add_option("--steps", o.steps, "number of points")->check(CLI::PositiveNumber);
  contact->add_option("--h0", o.h0, "equilibrium distance, nm");
  contact->add_option("--gamma", o.gamma, "adhesion energy, N/m");

  auto* beam = app.add_subcommand("beam", "Euler-Bernoulli wall and axial forces");
  beam->add_option("--out", o.out, "output file (default stdout)");
  beam->add_option("--E", o.beam_E, "2D modulus, N/m");
  beam->add_option("--r-m", o.beam_r_m, "mean radius, nm");
  beam->add_option("--L", o.beam_L, "length, nm");
  beam->add_option("--theta-w-deg", o.beam_theta_w_deg, "wall angle, degrees");
  beam->add_option("--delta", o.beam_delta, "axial displacement, nm");

  auto* cone = app.add_subcommand("cone", "nanocone apex angle from the disclination angle");
  cone->add_option("--out", o.out, "output file (default stdout)");
  cone->add_option("declination", o.declination, "60, 120, 180, 240 or 300 degrees")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (o.param_set == "gga") o.param_set = "GGA";
  if (o.param_set == "lda") o.param_set = "LDA";

  try {
    if (*verify) return cmd_verify(o);
    if (*curve) return cmd_curve(o);
    if (*compare) return cmd_compare(o);
    if (*bench) return cmd_bench(o);
    if (*contact) return cmd_contact(o);
    if (*beam) return cmd_beam(o);
    if (*cone) return cmd_cone(o);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
