#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcorr/teleport.hpp"

namespace qcorr::cli {

enum class Model { kJC, kDephasing };

/// Sweep description read from a key = value config file.
///
/// Time axis: gamma_t for the JC model, xi = t / (2 tau) for the dephasing
/// model. Grid order in the output is purity, alpha, tau, time.
struct Scenario {
  Model model = Model::kJC;
  std::vector<double> purity;
  std::vector<double> alpha;
  std::vector<double> time;
  double coupling = 1.0;
  std::vector<double> tau{1.0};
  bool lqu = true;
  bool lqfi = true;
  bool coherence = true;
  int brute_force_directions = 0;  // 0 disables the brute-force columns
  bool teleport = false;
  QuadratureSpec quadrature;
  bool closed_forms = false;
  double input_theta;  // input state of the conformance teleport rows
  double input_phi;
  std::string output;  // empty: standard output
  std::string ledger;  // empty: no ledger
};

/// Parses "pi/4", "2*pi/3", "pi", "0.25", "-1e-3". Throws InvalidInput.
double parse_number(std::string_view text);

/// Throws InvalidInput with a message naming the offending line.
Scenario parse_scenario(std::istream& in);
Scenario load_scenario(const std::string& path);

const char* to_string(Model m);

}  // namespace qcorr::cli
