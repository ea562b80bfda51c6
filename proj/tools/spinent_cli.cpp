// spinent: negativity of spin singlets after spin-momentum coupling.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spinent/config.hpp"
#include "spinent/discrete.hpp"
#include "spinent/error.hpp"
#include "spinent/report.hpp"
#include "spinent/sweep.hpp"

using namespace spinent;
using namespace spinent::cli;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

/// Config file, then --set, then the per-parameter flags.
struct ParamSources {
  std::string config;
  std::vector<std::string> assignments;
  std::map<std::string, std::optional<double>> flags;

  void attach(CLI::App* app, const std::vector<std::string>& names) {
    app->add_option("--config", config, "key=value parameter file")->check(CLI::ExistingFile);
    app->add_option("--set", assignments, "override a parameter, key=value (repeatable)");
    for (const auto& n : names) flags[n];
    for (auto& [n, v] : flags) app->add_option("--" + n, v, "parameter " + n);
  }

  ParamMap collect() const {
    ParamMap out;
    if (!config.empty()) out = load_config(config);
    for (const auto& a : assignments) {
      auto [k, v] = parse_assignment(a);
      out[k] = v;
    }
    for (const auto& [n, v] : flags)
      if (v) out[n] = *v;
    return out;
  }

  bool any() const {
    if (!config.empty() || !assignments.empty()) return true;
    for (const auto& [n, v] : flags)
      if (v) return true;
    return false;
  }
};

void print_params(std::ostream& out, const std::string& heading, const ParamMap& m) {
  out << "[" << heading << "]\n";
  for (const auto& [k, v] : m) out << k << " = " << format_number(v) << "\n";
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_assignment("x=" + item).second);
  if (out.empty()) throw UsageError("empty list");
  return out;
}

int write_sweep(const SweepSpec& spec) {
  const auto rows = run_sweep(spec);
  if (spec.output.empty() || spec.output == "-") {
    write_csv(std::cout, spec, rows);
  } else {
    std::ofstream f(spec.output);
    if (!f) throw UsageError("cannot write " + spec.output);
    write_csv(f, spec, rows);
  }
  for (const auto& r : rows)
    for (const auto& v : r.values)
      if (!v.ok) {
        std::cerr << "spinent: some points failed; see the status column\n";
        return kExitNumerical;
      }
  return 0;
}

/// Out-of-range parameters from the command line are usage errors.
template <class Params>
Params validated(Params p) {
  try {
    p.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return p;
}

PhotonPath parse_path(const std::string& s) {
  if (s == "approx") return PhotonPath::Approx;
  if (s == "full") return PhotonPath::Full;
  throw UsageError("photon path must be approx or full, got '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin-spin entanglement of singlet pairs after spin-momentum coupling"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(0, 1);
  bool show_config = false;
  app.add_flag("--show-config", show_config, "print every default parameter and exit");

  // discrete
  auto* discrete_cmd = app.add_subcommand("discrete", "negativity of n uniformly weighted modes");
  std::string angles_text, weights_text;
  bool a_only = false;
  discrete_cmd->add_option("--angles", angles_text, "comma-separated rotation angles (rad)")
      ->required();
  discrete_cmd->add_option("--weights", weights_text, "comma-separated mode weights (sum 1)");
  discrete_cmd->add_flag("--a-only", a_only, "rotate only particle A");

  // fermion
  auto* fermion_cmd = app.add_subcommand("fermion", "fermion crossing a magnetic slab");
  ParamSources fermion_src;
  fermion_src.attach(fermion_cmd, fermion_param_names());
  bool after_trace = false;
  fermion_cmd->add_flag("--after-trace", after_trace,
                        "normalise the post-selected state after integrating");

  // photon
  auto* photon_cmd = app.add_subcommand("photon", "photon crossing a magnetised medium");
  ParamSources photon_src;
  photon_src.attach(photon_cmd, photon_param_names());
  std::string photon_path_text = "both";
  photon_cmd->add_option("--path", photon_path_text, "approx, full or both")
      ->check(CLI::IsMember({"approx", "full", "both"}));

  // figures
  auto* figures_cmd = app.add_subcommand("figures", "CSV sweep for a figure preset");
  std::string figure;
  std::string output;
  std::size_t points = 200;
  unsigned workers = 0;
  std::string figure_path = "approx";
  std::vector<std::string> figure_sets;
  figures_cmd->add_option("name", figure, "preset")
      ->required()
      ->check(CLI::IsMember(figure_names()));
  figures_cmd->add_option("-o,--output", output, "output file (default stdout)");
  figures_cmd->add_option("--points", points, "grid points")->check(CLI::Range(2, 100000));
  figures_cmd->add_option("--workers", workers, "parallel workers (0: all cores)");
  figures_cmd->add_option("--path", figure_path, "photon negativity: approx or full")
      ->check(CLI::IsMember({"approx", "full"}));
  figures_cmd->add_option("--set", figure_sets, "override a fixed parameter, key=value");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV sweep of any model parameter");
  std::string model_text, swept;
  double start = 0.0, stop = 1.0;
  ParamSources sweep_src;
  sweep_cmd->add_option("--model", model_text, "discrete-surface, fermion-field, ...")->required();
  sweep_cmd->add_option("--swept", swept, "parameter to sweep (model default if omitted)");
  sweep_cmd->add_option("--start", start, "grid start")->required();
  sweep_cmd->add_option("--stop", stop, "grid stop")->required();
  sweep_cmd->add_option("--points", points, "grid points");
  sweep_cmd->add_option("-o,--output", output, "output file (default stdout)");
  sweep_cmd->add_option("--workers", workers, "parallel workers (0: all cores)");
  sweep_cmd->add_option("--path", figure_path, "photon negativity: approx or full")
      ->check(CLI::IsMember({"approx", "full"}));
  sweep_cmd->add_option("--config", sweep_src.config, "key=value file of fixed parameters")
      ->check(CLI::ExistingFile);
  sweep_cmd->add_option("--set", sweep_src.assignments, "fixed parameter, key=value");

  // nogo
  auto* nogo_cmd = app.add_subcommand("nogo", "Bob's reduced state with and without post-selection");
  ParamSources nogo_src;
  nogo_src.attach(nogo_cmd, fermion_param_names());

  auto* selftest_cmd = app.add_subcommand("selftest", "closed forms against the density-matrix route");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (show_config) {
      print_params(std::cout, "fermion", to_map(fermion::FermionBarrierParams{}));
      print_params(std::cout, "photon", to_map(photon::PhotonMediumParams{}));
      return 0;
    }
    if (*discrete_cmd) {
      const auto angles = parse_list(angles_text);
      const auto profile = discrete::AngleProfile::from_angles(angles);
      const auto weights = weights_text.empty() ? discrete::MomentumWeights::uniform(angles.size())
                                                : discrete::MomentumWeights{parse_list(weights_text)};
      const auto rot = a_only ? discrete::Rotation::ParticleAOnly : discrete::Rotation::BothParticles;
      std::cout << "N (density-matrix route) = "
                << format_number(discrete::negativity_oracle(profile, weights, rot)) << "\n";
      if (weights_text.empty() && !a_only)
        std::cout << "N (closed form)          = "
                  << format_number(discrete::negativity_uniform(angles)) << "\n";
      std::cout << "partial-transpose spectrum:";
      for (double e : discrete::pt_spectrum_oracle(profile, weights, rot))
        std::cout << " " << format_number(e);
      std::cout << "\n";
    } else if (*fermion_cmd) {
      const auto p = validated(cli::apply(fermion::FermionBarrierParams{}, fermion_src.collect()));
      const auto n = fermion::negativity_fermion(p);
      std::cout << "N = " << format_number(n.value) << "  (error estimate "
                << format_number(n.error_estimate) << ")\n";
      const auto st = fermion::postselected_state(
          p, after_trace ? fermion::Postselection::AfterTrace : fermion::Postselection::PerMomentum);
      std::cout << "post-selected spin state (basis uu, ud, du, dd):\n";
      const auto& m = st.rho.matrix();
      for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c)
          std::cout << "  " << format_number(m(r, c).real()) << (m(r, c).imag() < 0 ? "-" : "+")
                    << format_number(std::abs(m(r, c).imag())) << "i";
        std::cout << "\n";
      }
    } else if (*photon_cmd) {
      const auto p = validated(cli::apply(photon::PhotonMediumParams{}, photon_src.collect()));
      if (photon_path_text != "full") {
        const auto n = photon::negativity_photon_approx(p);
        std::cout << "N (near-resonance phase) = " << format_number(n.value) << "  (error estimate "
                  << format_number(n.error_estimate) << ")\n";
      }
      if (photon_path_text != "approx") {
        const auto n = photon::negativity_photon_full(p);
        std::cout << "N (full dispersion)      = " << format_number(n.value) << "  (error estimate "
                  << format_number(n.error_estimate) << ")\n";
      }
    } else if (*figures_cmd) {
      auto spec = figure_preset(figure, points);
      spec.output = output;
      spec.workers = workers;
      spec.photon_path = parse_path(figure_path);
      for (const auto& a : figure_sets) {
        auto [k, v] = parse_assignment(a);
        spec.fixed[k] = v;
      }
      return write_sweep(spec);
    } else if (*sweep_cmd) {
      const auto model = parse_model(model_text);
      if (!model) throw UsageError("unknown model '" + model_text + "'");
      SweepSpec spec;
      spec.model = *model;
      spec.swept = swept;
      spec.grid = {start, stop, points};
      spec.fixed = sweep_src.collect();
      spec.output = output;
      spec.workers = workers;
      spec.photon_path = parse_path(figure_path);
      return write_sweep(spec);
    } else if (*nogo_cmd) {
      const auto sets = nogo_src.any()
                            ? std::vector{validated(cli::apply(fermion::FermionBarrierParams{}, nogo_src.collect()))}
                            : default_nogo_sets();
      std::cout << run_nogo_report(sets);
    } else if (*selftest_cmd) {
      return run_selftest(std::cout) ? 0 : kExitNumerical;
    } else {
      std::cout << app.help();
    }
  } catch (const UsageError& e) {
    std::cerr << "spinent: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "spinent: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
