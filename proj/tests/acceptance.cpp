// Acceptance gate: one PASS/FAIL line per criterion. With an argument, runs
// only the criterion with that id. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "entpow/errors.hpp"
#include "entpow/experiments.hpp"
#include "entpow/gates.hpp"
#include "entpow/measures.hpp"
#include "entpow/random.hpp"

using namespace entpow;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SamplingPlan plan(std::uint64_t samples, std::uint64_t seed = 1) {
  SamplingPlan p;
  p.seed = seed;
  p.samples = samples;
  return p;
}

// Shared by the first two criteria.
const ExperimentReport& dw_report(double* runtime = nullptr) {
  static double elapsed = 0.0;
  static const ExperimentReport report = [] {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = dw_distribution(plan(100000));
    elapsed = seconds_since(t0);
    return r;
  }();
  if (runtime) *runtime = elapsed;
  return report;
}

Outcome mean_residual_tangle() {
  double runtime = 0.0;
  const auto& r = dw_report(&runtime);
  const double mean = r.scalar("mean_dw");
  return {std::abs(mean - 1.0 / 3.0) <= 0.01 && runtime < 120.0,
          fmt("mean d_W = %.5f +- %.5f (target 1/3 +- 0.01), %.1f s single-threaded", mean,
              r.scalar("mean_dw_stderr"), runtime)};
}

Outcome ckw_inequality() {
  const auto& r = dw_report();
  const double lo = r.scalar("min_dw_raw"), hi = r.scalar("max_dw_raw");
  return {lo >= -1e-9 && hi <= 1.0 + 1e-9 && r.histogram().total() == 100000,
          fmt("1e5 states, d_W range [%.3e, %.6f]", lo, hi)};
}

Outcome widths_vs_party_count() {
  const auto t0 = std::chrono::steady_clock::now();
  MultiqubitOptions coarse;
  MultiqubitOptions fine;
  fine.bins = kFineDeltaEBins;
  const double w2 = multiqubit_delta_e(2, plan(100000), coarse).scalar("width");
  const double w3 = multiqubit_delta_e(3, plan(100000), coarse).scalar("width");
  const double w4 = multiqubit_delta_e(4, plan(100000), fine).scalar("width");
  const double runtime = seconds_since(t0);
  const bool ok = std::abs(w2 - 0.437) <= 0.03 && std::abs(w3 - 0.196) <= 0.03 && w4 < 0.02 && w2 > w3 &&
                  w3 > w4 && runtime < 600.0;
  return {ok, fmt("W(n=2) = %.4f, W(n=3) = %.4f, W(n=4) = %.4f (2001 bins), %.1f s", w2, w3, w4, runtime)};
}

Outcome gate_equivalence() {
  const auto eq = verify_local_equivalence();
  const auto a = delta_e_distribution(GateSpec::parse("cnot"), plan(100000, 1));
  const auto b = delta_e_distribution(GateSpec::canonical(pi / 4, 0, 0), plan(100000, 2));
  const auto cmp = compare_histograms(a.histogram(), b.histogram());
  return {eq.equal && eq.residual < 1e-12 && cmp.agree(3.0),
          fmt("identity residual %.2e; sup density diff %.4f vs 3 x SE %.4f (ratio %.2f)", eq.residual,
              cmp.sup_difference, 3.0 * cmp.combined_stderr, cmp.ratio())};
}

Outcome entangling_power_shape() {
  const std::vector<double> xs{0.0, 0.05, 0.1, 0.15, 0.2, 0.6, 0.7, pi / 4};
  const auto cn = perturbation_sweep(SweepBase::kCnot, xs, plan(400000));
  const auto p8 = perturbation_sweep(SweepBase::kPi8, xs, plan(400000));

  double best_z = -1e300, best_x = 0.0;
  for (std::size_t k = 1; k < xs.size() && xs[k] <= 0.2; ++k) {
    const double z = cn[k].scalar("delta_vs_base") / cn[k].scalar("delta_vs_base_stderr");
    if (z > best_z) best_z = z, best_x = xs[k];
  }
  const double end_delta = cn.back().scalar("delta_vs_base");
  const double end_z = end_delta / cn.back().scalar("delta_vs_base_stderr");

  double p8_z = -1e300, p8_x = 0.0;
  for (std::size_t k = 1; k < xs.size() && xs[k] <= 0.2; ++k) {
    const double z = p8[k].scalar("delta_vs_base") / p8[k].scalar("delta_vs_base_stderr");
    if (z > p8_z) p8_z = z, p8_x = xs[k];
  }
  const bool p8_first_up = p8[1].scalar("delta_vs_base") > 0.0;

  const double e_id = entangling_power(GateSpec::parse("identity"), plan(100000)).scalar("epsilon_p");
  const double e_swap = entangling_power(GateSpec::parse("swap"), plan(100000)).scalar("epsilon_p");

  const bool ok = best_z > 3.0 && end_z < -3.0 && p8_z > 3.0 && p8_first_up && e_id == 0.0 && e_swap == 0.0;
  return {ok, fmt("cnot bump z = %.1f at x = %.2f; x = pi/4 delta %.4f (z = %.0f); pi8 rise z = %.1f at x = %.2f; "
                  "eps(I) = %g, eps(SWAP) = %g",
                  best_z, best_x, end_delta, end_z, p8_z, p8_x, e_id, e_swap)};
}

Outcome haar_calibration() {
  const auto r = random_pair_distribution(2, plan(100000));
  const double m = r.scalar("mean_e");
  const double page = 1.0 / (3.0 * std::log(2.0));
  return {std::abs(m - page) <= 0.003, fmt("mean E = %.5f (Page %.5f, tolerance 0.003)", m, page)};
}

Outcome qudit_widths() {
  std::vector<double> ns, ws;
  bool decreasing = true;
  for (std::size_t na = 2; na <= 6; ++na) {
    const double w = random_pair_distribution(na, plan(100000)).scalar("width");
    if (!ws.empty() && !(w < ws.back())) decreasing = false;
    ns.push_back(static_cast<double>(na));
    ws.push_back(w);
  }
  const auto fit = power_law_fit(ns, ws);
  return {decreasing && fit.alpha > 0.0 && fit.r_squared >= 0.9,
          fmt("W = %.4f %.4f %.4f %.4f %.4f; alpha = %.3f, r^2 = %.4f", ws[0], ws[1], ws[2], ws[3], ws[4], fit.alpha,
              fit.r_squared)};
}

Outcome mixed_state_conservation() {
  std::string detail;
  bool ok = true;
  for (auto metric : {MetricKind::kBures, MetricKind::kHilbertSchmidt}) {
    // Throws InvariantViolation on purity drift or a region-I state leaving PPT.
    const auto r = cnot_mixed_distance(metric, plan(10000));
    const double i1 = r.histogram("region_I").integral();
    const double i2 = r.histogram("region_II").integral();
    const double drift = r.scalar("max_purity_drift");
    ok = ok && drift <= 1e-12 && std::abs(i1 - 1.0) <= 1e-9 && std::abs(i2 - 1.0) <= 1e-9 &&
         r.histogram("all").total() == 10000;
    detail += fmt("%s: drift %.1e, integrals %.12f / %.12f, region I %.3f; ", std::string(to_string(metric)).c_str(),
                  drift, i1, i2, r.scalar("fraction_region_I"));
  }
  return {ok, detail + "all region-I states PPT after CNOT"};
}

Outcome measure_cross_checks() {
  RngStream rng(1, 0);
  double eof_err = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const auto psi = haar_pure_state(FactoredDims{2, 2}, rng);
    eof_err = std::max(eof_err, std::abs(entanglement_of_formation(psi.projector()).value -
                                         pure_state_entanglement(psi).value));
  }
  const PureState bell{{1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0)}, {2, 2}};
  auto werner = [&](double p) {
    ComplexMatrix rho = bell.projector() * Complex(p);
    rho += ComplexMatrix::identity(4) * Complex((1.0 - p) / 4.0);
    return rho;
  };
  double werner_err = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double p = k / 49.0;
    werner_err = std::max(werner_err, std::abs(concurrence(werner(p)) - std::max(0.0, (3 * p - 1) / 2)));
  }
  const FactoredDims d{2, 2};
  const bool below = is_ppt(werner(1.0 / 3.0 - 1e-9), d);
  const bool above = !is_ppt(werner(1.0 / 3.0 + 1e-9), d);
  return {eof_err <= 1e-8 && werner_err <= 1e-9 && below && above,
          fmt("EoF vs entropy max error %.2e; Werner concurrence max error %.2e; PPT at 1/3-1e-9: %s, at 1/3+1e-9: %s",
              eof_err, werner_err, below ? "yes" : "no", above ? "no" : "yes")};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "entpow_acceptance_det";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::size_t files = 0, mismatched = 0;
  std::string failed;
  for (const auto& id : cli::experiment_ids()) {
    std::vector<std::string> names;
    for (const char* run : {"a", "b"}) {
      cli::RunConfig cfg;
      cfg.experiment = id;
      cfg.samples = id == "fig2" ? 500 : 3000;
      cfg.bins_n4 = 401;
      cfg.qubits = 4;
      cfg.seed = 2024;
      cfg.workers = 2;
      cfg.chunk_size = 700;
      cfg.out = dir / (id + "_" + run);
      if (cli::run(cfg) != cli::kExitOk) {
        failed += id + " ";
        break;
      }
    }
    const auto manifest = nlohmann::json::parse(slurp(dir / (id + "_a.json")));
    for (const auto& f : manifest["files"]) {
      const std::string a = f.get<std::string>();
      const std::string b = id + "_b" + a.substr(id.size() + 2);
      ++files;
      if (slurp(dir / a) != slurp(dir / b) || slurp(dir / a).empty()) ++mismatched;
    }
  }
  fs::remove_all(dir);
  return {failed.empty() && mismatched == 0 && files > 0,
          fmt("%zu experiments, %zu CSV files compared, %zu differ%s%s", cli::experiment_ids().size(), files,
              mismatched, failed.empty() ? "" : "; failed runs: ", failed.c_str())};
}

}  // namespace

struct Criterion {
  std::string id;
  std::string name;
  std::function<Outcome()> check;
};

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {"residual_tangle", "mean residual tangle", mean_residual_tangle},
      {"ckw", "CKW inequality", ckw_inequality},
      {"party_widths", "widths vs party count", widths_vs_party_count},
      {"gate_equivalence", "gate equivalence", gate_equivalence},
      {"entangling_power", "entangling-power shape", entangling_power_shape},
      {"haar_calibration", "Haar sampler calibration", haar_calibration},
      {"qudit_widths", "qudit widths", qudit_widths},
      {"mixed_conservation", "mixed-state conservation", mixed_state_conservation},
      {"measures", "measure cross-checks", measure_cross_checks},
      {"determinism", "determinism", determinism},
  };
  std::vector<Criterion> criteria;
  for (const auto& c : all)
    if (argc < 2 || c.id == argv[1]) criteria.push_back(c);
  if (criteria.empty()) {
    std::fprintf(stderr, "unknown criterion '%s'\n", argv[1]);
    return 1;
  }
  int failures = 0;
  for (const auto& [id, name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s  %-26s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
