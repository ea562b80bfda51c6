#pragma once
// Parameter sweeps over the negativity models and their CSV rendering.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinent/config.hpp"

namespace spinent::cli {

enum class Model {
  DiscreteSurface,  // cos^2(theta1 - theta2) over a square grid
  FermionField,
  FermionLength,
  PhotonField,
  PhotonWidth,
  PhotonResonance,
};

std::string_view model_name(Model m);
std::optional<Model> parse_model(std::string_view name);

/// Which photon negativity a photon-* sweep evaluates.
enum class PhotonPath { Approx, Full };

struct Grid {
  double start = 0.0;
  double stop = 1.0;
  std::size_t points = 200;

  double at(std::size_t i) const;
};

/// One curve of a sweep: the fixed parameters plus these overrides.
struct Series {
  std::string label;
  ParamMap overrides;
};

struct SweepSpec {
  Model model = Model::FermionField;
  std::string swept;  // parameter name; "theta" for the discrete surface
  Grid grid;
  ParamMap fixed;
  std::vector<Series> series;  // empty means a single unnamed series
  PhotonPath photon_path = PhotonPath::Approx;
  std::string output;  // file path; empty or "-" for standard output
  std::string title;
  unsigned workers = 0;  // 0: hardware concurrency

  /// Throws UsageError when points < 2, start >= stop, the swept parameter
  /// is unknown for the model or also fixed, or a fixed key is unknown.
  void validate() const;
};

struct PointValue {
  double negativity = 0.0;
  double error_estimate = 0.0;
  bool ok = true;
  std::string message;  // failure description when !ok
};

struct SweepRow {
  std::vector<double> coords;     // swept value(s)
  std::vector<PointValue> values;  // one per series
};

/// Evaluates every grid point (in parallel) and returns rows in grid order.
/// A numerical failure at one point flags that row and the sweep continues.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

void write_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRow>& rows);

/// fig1, fig3, fig4, fig5, fig6, fig7 with the published figure parameters.
SweepSpec figure_preset(std::string_view name, std::size_t points = 200);
std::vector<std::string> figure_names();

}  // namespace spinent::cli
