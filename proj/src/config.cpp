#include "spinent/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>

namespace spinent::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, const std::string& key) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw UsageError("value for '" + key + "' is not a number: '" + text + "'");
  }
  return v;
}

template <class Params>
using Field = std::pair<const char*, double Params::*>;

const std::vector<Field<fermion::FermionBarrierParams>>& fermion_fields() {
  using P = fermion::FermionBarrierParams;
  static const std::vector<Field<P>> f = {{"m", &P::m},         {"p0", &P::p0},
                                          {"sigma", &P::sigma}, {"L", &P::L},
                                          {"gB0", &P::gB0},     {"quad_tol", &P::quad_tol}};
  return f;
}

const std::vector<Field<photon::PhotonMediumParams>>& photon_fields() {
  using P = photon::PhotonMediumParams;
  static const std::vector<Field<P>> f = {
      {"p0", &P::p0}, {"sigma", &P::sigma},     {"w0", &P::w0},
      {"wc", &P::wc}, {"plasma", &P::plasma},   {"L", &P::L},
      {"btildeL", &P::btildeL}, {"quad_tol", &P::quad_tol}};
  return f;
}

template <class Params>
std::vector<std::string> names_of(const std::vector<Field<Params>>& fields) {
  std::vector<std::string> out;
  for (const auto& [name, _] : fields) out.emplace_back(name);
  return out;
}

template <class Params>
ParamMap map_of(const Params& p, const std::vector<Field<Params>>& fields) {
  ParamMap m;
  for (const auto& [name, member] : fields) m[name] = p.*member;
  return m;
}

template <class Params>
Params apply_to(Params base, const ParamMap& values, const std::vector<Field<Params>>& fields,
                const char* model) {
  for (const auto& [key, value] : values) {
    bool found = false;
    for (const auto& [name, member] : fields) {
      if (key == name) {
        base.*member = value;
        found = true;
        break;
      }
    }
    if (!found) throw UsageError("unknown " + std::string(model) + " parameter '" + key + "'");
  }
  return base;
}

}  // namespace

std::pair<std::string, double> parse_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw UsageError("expected key=value, got '" + text + "'");
  const auto key = trim(text.substr(0, eq));
  if (key.empty()) throw UsageError("empty key in '" + text + "'");
  return {key, parse_number(trim(text.substr(eq + 1)), key)};
}

ParamMap parse_config(std::istream& in) {
  ParamMap out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      auto [k, v] = parse_assignment(line);
      out[k] = v;
    } catch (const UsageError& e) {
      throw UsageError("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

ParamMap load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path.string());
  return parse_config(in);
}

std::vector<std::string> fermion_param_names() { return names_of(fermion_fields()); }
std::vector<std::string> photon_param_names() { return names_of(photon_fields()); }

ParamMap to_map(const fermion::FermionBarrierParams& p) { return map_of(p, fermion_fields()); }
ParamMap to_map(const photon::PhotonMediumParams& p) { return map_of(p, photon_fields()); }

fermion::FermionBarrierParams apply(fermion::FermionBarrierParams base, const ParamMap& values) {
  return apply_to(base, values, fermion_fields(), "fermion");
}

photon::PhotonMediumParams apply(photon::PhotonMediumParams base, const ParamMap& values) {
  return apply_to(base, values, photon_fields(), "photon");
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15e", x);
  return buf;
}

}  // namespace spinent::cli
