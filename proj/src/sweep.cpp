#include "spinent/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <numbers>
#include <ostream>
#include <thread>

#include "spinent/discrete.hpp"
#include "spinent/error.hpp"

namespace spinent::cli {

namespace {

struct ModelInfo {
  Model model;
  std::string_view name;
  std::string_view default_swept;
};

constexpr ModelInfo kModels[] = {
    {Model::DiscreteSurface, "discrete-surface", "theta"},
    {Model::FermionField, "fermion-field", "gB0"},
    {Model::FermionLength, "fermion-length", "L"},
    {Model::PhotonField, "photon-field", "btildeL"},
    {Model::PhotonWidth, "photon-width", "sigma"},
    {Model::PhotonResonance, "photon-resonance", "w0"},
};

const ModelInfo& info(Model m) {
  for (const auto& i : kModels)
    if (i.model == m) return i;
  throw UsageError("unknown model");
}

bool is_fermion(Model m) { return m == Model::FermionField || m == Model::FermionLength; }
bool is_photon(Model m) {
  return m == Model::PhotonField || m == Model::PhotonWidth || m == Model::PhotonResonance;
}

std::vector<std::string> param_names(Model m) {
  if (is_fermion(m)) return fermion_param_names();
  if (is_photon(m)) return photon_param_names();
  return {};
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string swept_name(const SweepSpec& spec) {
  return spec.swept.empty() ? std::string(info(spec.model).default_swept) : spec.swept;
}

std::string sanitise(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

PointValue evaluate(const SweepSpec& spec, const Series& series, std::span<const double> coords) {
  PointValue v;
  try {
    if (spec.model == Model::DiscreteSurface) {
      v.negativity = discrete::negativity_bimodal(coords[0], coords[1]);
      return v;
    }
    ParamMap values = spec.fixed;
    for (const auto& [k, x] : series.overrides) values[k] = x;
    values[swept_name(spec)] = coords[0];
    Estimate e;
    if (is_fermion(spec.model)) {
      e = fermion::negativity_fermion(cli::apply(fermion::FermionBarrierParams{}, values));
    } else if (spec.photon_path == PhotonPath::Full) {
      e = photon::negativity_photon_full(cli::apply(photon::PhotonMediumParams{}, values));
    } else {
      e = photon::negativity_photon_approx(cli::apply(photon::PhotonMediumParams{}, values));
    }
    v.negativity = e.value;
    v.error_estimate = e.error_estimate;
  } catch (const std::exception& ex) {
    v.ok = false;
    v.message = ex.what();
  }
  return v;
}

}  // namespace

std::string_view model_name(Model m) { return info(m).name; }

std::optional<Model> parse_model(std::string_view name) {
  for (const auto& i : kModels)
    if (i.name == name) return i.model;
  return std::nullopt;
}

double Grid::at(std::size_t i) const {
  if (i + 1 == points) return stop;
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(points - 1);
}

void SweepSpec::validate() const {
  if (grid.points < 2) throw UsageError("sweep grid needs at least 2 points");
  if (!(grid.start < grid.stop)) throw UsageError("sweep grid start must be below stop");
  const auto swept_param = swept_name(*this);
  if (model == Model::DiscreteSurface) {
    if (swept_param != "theta")
      throw UsageError("discrete-surface sweeps 'theta' (both angles), not '" + swept_param + "'");
    if (!fixed.empty()) throw UsageError("discrete-surface takes no fixed parameters");
    return;
  }
  const auto names = param_names(model);
  if (!contains(names, swept_param))
    throw UsageError("'" + swept_param + "' is not a parameter of " +
                     std::string(model_name(model)));
  if (fixed.count(swept_param))
    throw UsageError("swept parameter '" + swept_param + "' is also fixed");
  for (const auto& [k, _] : fixed)
    if (!contains(names, k)) throw UsageError("unknown fixed parameter '" + k + "'");
  for (const auto& s : series)
    for (const auto& [k, _] : s.overrides) {
      if (k == swept_param)
        throw UsageError("series '" + s.label + "' overrides the swept parameter");
      if (!contains(names, k)) throw UsageError("unknown series parameter '" + k + "'");
    }
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::vector<Series> series =
      spec.series.empty() ? std::vector<Series>{Series{}} : spec.series;

  std::vector<SweepRow> rows;
  if (spec.model == Model::DiscreteSurface) {
    for (std::size_t i = 0; i < spec.grid.points; ++i)
      for (std::size_t j = 0; j < spec.grid.points; ++j)
        rows.push_back({{spec.grid.at(i), spec.grid.at(j)}, {}});
  } else {
    for (std::size_t i = 0; i < spec.grid.points; ++i) rows.push_back({{spec.grid.at(i)}, {}});
  }
  for (auto& r : rows) r.values.resize(series.size());

  const std::size_t tasks = rows.size() * series.size();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks; t = next++) {
      auto& row = rows[t / series.size()];
      row.values[t % series.size()] = evaluate(spec, series[t % series.size()], row.coords);
    }
  };
  unsigned n = spec.workers ? spec.workers : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, tasks));
  std::vector<std::jthread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  return rows;
}

void write_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  const auto swept_param = swept_name(spec);
  out << "# spinent " << kVersion << "\n";
  if (!spec.title.empty()) out << "# " << spec.title << "\n";
  out << "# model=" << model_name(spec.model) << " swept=" << swept_param
      << " start=" << format_number(spec.grid.start) << " stop=" << format_number(spec.grid.stop)
      << " points=" << spec.grid.points << "\n";
  out << "# units: natural units (hbar = c = 1); figure quantities are plain numbers\n";
  if (is_photon(spec.model))
    out << "# photon path: " << (spec.photon_path == PhotonPath::Full ? "full" : "approx") << "\n";
  if (spec.model != Model::DiscreteSurface) {
    ParamMap shown = is_fermion(spec.model) ? to_map(fermion::FermionBarrierParams{})
                                            : to_map(photon::PhotonMediumParams{});
    for (const auto& [k, v] : spec.fixed) shown[k] = v;
    shown.erase(swept_param);
    out << "# fixed:";
    for (const auto& [k, v] : shown) out << " " << k << "=" << format_number(v);
    out << "\n";
  }
  for (const auto& s : spec.series) {
    out << "# series " << s.label << ":";
    for (const auto& [k, v] : s.overrides) out << " " << k << "=" << format_number(v);
    out << "\n";
  }

  if (spec.model == Model::DiscreteSurface)
    out << "theta1,theta2";
  else
    out << swept_param;
  if (spec.series.empty()) {
    out << ",N,err";
  } else {
    for (const auto& s : spec.series) out << ",N_" << s.label << ",err_" << s.label;
  }
  out << ",status\n";

  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.coords.size(); ++c)
      out << (c ? "," : "") << format_number(row.coords[c]);
    std::string status = "ok";
    for (std::size_t k = 0; k < row.values.size(); ++k) {
      const auto& v = row.values[k];
      if (v.ok) {
        out << "," << format_number(v.negativity) << "," << format_number(v.error_estimate);
      } else {
        out << ",nan,nan";
        status = "fail: " + sanitise(v.message);
      }
    }
    out << "," << status << "\n";
  }
}

std::vector<std::string> figure_names() {
  return {"fig1", "fig3", "fig4", "fig5", "fig6", "fig7"};
}

SweepSpec figure_preset(std::string_view name, std::size_t points) {
  SweepSpec s;
  s.grid.points = points;
  if (name == "fig1") {
    s.model = Model::DiscreteSurface;
    s.swept = "theta";
    s.grid.start = 0.0;
    s.grid.stop = std::numbers::pi;
    s.title = "negativity cos^2(theta1 - theta2) of the bimodal model";
  } else if (name == "fig3") {
    s.model = Model::FermionField;
    s.swept = "gB0";
    s.grid.start = 0.0;
    s.grid.stop = 1.0;
    s.fixed = {{"m", 100.0}, {"p0", 10.0}, {"L", 3.0}};
    s.series = {{"sigma1", {{"sigma", 1.0}}}, {"sigma2", {{"sigma", 2.0}}}, {"sigma3", {{"sigma", 3.0}}}};
    s.title = "fermion negativity versus gamma B0";
  } else if (name == "fig4") {
    s.model = Model::FermionLength;
    s.swept = "L";
    s.grid.start = 0.0;
    s.grid.stop = 10.0;
    s.fixed = {{"m", 100.0}, {"p0", 10.0}, {"gB0", 0.2}, {"sigma", 2.0}};
    s.title = "fermion negativity versus slab length";
  } else if (name == "fig5") {
    s.model = Model::PhotonField;
    s.swept = "btildeL";
    s.grid.start = 0.0;
    s.grid.stop = 10.0;
    s.fixed = {{"p0", 10.0}, {"sigma", 2.0}, {"w0", 10.0}};
    s.title = "photon negativity versus B~L";
  } else if (name == "fig6") {
    s.model = Model::PhotonWidth;
    s.swept = "sigma";
    s.grid.start = 0.05;
    s.grid.stop = 5.0;
    s.fixed = {{"p0", 10.0}, {"btildeL", 4.0}, {"w0", 10.0}};
    s.title = "photon negativity versus frequency width";
  } else if (name == "fig7") {
    s.model = Model::PhotonResonance;
    s.swept = "w0";
    s.grid.start = 5.0;
    s.grid.stop = 15.0;
    s.fixed = {{"p0", 10.0}, {"btildeL", 2.0}};
    s.series = {{"sigma0.5", {{"sigma", 0.5}}}, {"sigma1", {{"sigma", 1.0}}}, {"sigma2", {{"sigma", 2.0}}}};
    s.title = "photon negativity versus resonance frequency";
  } else {
    throw UsageError("unknown figure preset '" + std::string(name) + "'");
  }
  return s;
}

}  // namespace spinent::cli
