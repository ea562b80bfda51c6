#pragma once
// Named numeric parameters: key=value config files and conversion to the
// model parameter structs.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinent/fermion.hpp"
#include "spinent/photon.hpp"

namespace spinent::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Bad command line, sweep description or config file (exit code 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ParamMap = std::map<std::string, double>;

/// Parses `key = value` lines; blank lines and `#` comments are ignored.
ParamMap parse_config(std::istream& in);
ParamMap load_config(const std::filesystem::path& path);

/// Parses "key=value" (as given to --set).
std::pair<std::string, double> parse_assignment(const std::string& text);

std::vector<std::string> fermion_param_names();
std::vector<std::string> photon_param_names();

ParamMap to_map(const fermion::FermionBarrierParams& p);
ParamMap to_map(const photon::PhotonMediumParams& p);

/// Starts from `base` and applies every entry of `values`; unknown keys
/// raise UsageError.
fermion::FermionBarrierParams apply(fermion::FermionBarrierParams base, const ParamMap& values);
photon::PhotonMediumParams apply(photon::PhotonMediumParams base, const ParamMap& values);

/// Scientific notation with 16 significant digits.
std::string format_number(double x);

}  // namespace spinent::cli
