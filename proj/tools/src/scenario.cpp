#include "qcorr_cli/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>

#include "qcorr/errors.hpp"

namespace qcorr::cli {
namespace {

constexpr int kMaxGridPoints = 1000000;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double plain_number(std::string_view s) {
  const std::string t = trim(s);
  double value = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size() || !std::isfinite(value)) {
    throw InvalidInput("not a number: '" + t + "'");
  }
  return value;
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    out.push_back(trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<double> number_list(std::string_view s) {
  std::vector<double> out;
  for (const std::string& item : split_list(s)) out.push_back(parse_number(item));
  return out;
}

bool on_off(const std::string& v) {
  if (v == "on" || v == "true" || v == "yes") return true;
  if (v == "off" || v == "false" || v == "no") return false;
  throw InvalidInput("expected on/off, got '" + v + "'");
}

int integer(const std::string& v) {
  const double d = plain_number(v);
  if (d != std::floor(d) || std::abs(d) > 1e9) throw InvalidInput("expected an integer, got '" + v + "'");
  return static_cast<int>(d);
}

std::vector<double> time_grid(double start, double stop, double step) {
  if (!(step > 0.0) || stop < start) throw InvalidInput("time grid needs step > 0 and stop >= start");
  const double span = (stop - start) / step;
  const long n = std::lround(std::floor(span + 1e-9)) + 1;
  if (n > kMaxGridPoints) throw InvalidInput("time grid is too large");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

void check_all(const std::vector<double>& v, const char* key, double lo, double hi) {
  if (v.empty()) throw InvalidInput(std::string(key) + ": empty list");
  for (double x : v) {
    if (x < lo || x > hi) throw InvalidInput(std::string(key) + ": value out of range");
  }
}

}  // namespace

const char* to_string(Model m) { return m == Model::kJC ? "jc" : "dephasing"; }

double parse_number(std::string_view text) {
  std::string t = trim(text);
  const auto at = t.find("pi");
  if (at == std::string::npos) return plain_number(t);

  double coefficient = 1.0;
  std::string head = trim(std::string_view(t).substr(0, at));
  if (!head.empty()) {
    if (head == "-") {
      coefficient = -1.0;
    } else {
      if (head.back() != '*') throw InvalidInput("malformed angle literal '" + t + "'");
      head.pop_back();
      coefficient = plain_number(head);
    }
  }
  double divisor = 1.0;
  const std::string tail = trim(std::string_view(t).substr(at + 2));
  if (!tail.empty()) {
    if (tail.front() != '/') throw InvalidInput("malformed angle literal '" + t + "'");
    divisor = plain_number(std::string_view(tail).substr(1));
    if (divisor == 0.0) throw InvalidInput("division by zero in '" + t + "'");
  }
  return coefficient * std::numbers::pi / divisor;
}

Scenario parse_scenario(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw InvalidInput("line " + std::to_string(number) + ": expected key = value");
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string value = trim(std::string_view(t).substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw InvalidInput("line " + std::to_string(number) + ": empty key or value");
    }
    if (!kv.emplace(key, value).second) throw InvalidInput("line " + std::to_string(number) + ": duplicate key " + key);
  }

  Scenario s;
  s.input_theta = std::numbers::pi / 3.0;
  s.input_phi = std::numbers::pi / 5.0;
  std::optional<double> start, stop, step;

  for (const auto& [key, value] : kv) {
    try {
      if (key == "model") {
        if (value == "jc") {
          s.model = Model::kJC;
        } else if (value == "dephasing") {
          s.model = Model::kDephasing;
        } else {
          throw InvalidInput("unknown model '" + value + "'");
        }
      } else if (key == "purity") {
        s.purity = number_list(value);
      } else if (key == "alpha") {
        s.alpha = number_list(value);
      } else if (key == "time.values") {
        s.time = number_list(value);
      } else if (key == "time.start") {
        start = parse_number(value);
      } else if (key == "time.stop") {
        stop = parse_number(value);
      } else if (key == "time.step") {
        step = parse_number(value);
      } else if (key == "coupling") {
        s.coupling = parse_number(value);
      } else if (key == "tau") {
        s.tau = number_list(value);
      } else if (key == "quantifiers") {
        s.lqu = s.lqfi = s.coherence = false;
        for (const std::string& q : split_list(value)) {
          if (q == "lqu") {
            s.lqu = true;
          } else if (q == "lqfi") {
            s.lqfi = true;
          } else if (q == "coherence") {
            s.coherence = true;
          } else if (q != "none") {
            throw InvalidInput("unknown quantifier '" + q + "'");
          }
        }
      } else if (key == "brute_force.directions") {
        s.brute_force_directions = integer(value);
      } else if (key == "teleport") {
        s.teleport = on_off(value);
      } else if (key == "quadrature.theta") {
        s.quadrature.theta_nodes = integer(value);
      } else if (key == "quadrature.phi") {
        s.quadrature.phi_nodes = integer(value);
      } else if (key == "closed_forms") {
        s.closed_forms = on_off(value);
      } else if (key == "input.theta") {
        s.input_theta = parse_number(value);
      } else if (key == "input.phi") {
        s.input_phi = parse_number(value);
      } else if (key == "output") {
        s.output = value;
      } else if (key == "ledger") {
        s.ledger = value;
      } else {
        throw InvalidInput("unknown key");
      }
    } catch (const InvalidInput& e) {
      throw InvalidInput(key + ": " + e.what());
    }
  }

  if (!kv.contains("model")) throw InvalidInput("model: missing");
  if (!s.time.empty() && (start || stop || step)) {
    throw InvalidInput("time: give either time.values or time.start/stop/step");
  }
  if (s.time.empty()) {
    if (!start || !stop || !step) throw InvalidInput("time: missing time.start, time.stop or time.step");
    s.time = time_grid(*start, *stop, *step);
  }
  check_all(s.purity, "purity", 0.0, 1.0);
  check_all(s.alpha, "alpha", 0.0, std::numbers::pi / 2.0 + 1e-12);
  check_all(s.time, "time", 0.0, 1e9);
  if (s.model == Model::kDephasing) {
    if (!(s.coupling > 0.0)) throw InvalidInput("coupling: must be positive");
    check_all(s.tau, "tau", 1e-300, 1e9);
  } else if (kv.contains("tau") || kv.contains("coupling")) {
    throw InvalidInput("tau/coupling: only valid for the dephasing model");
  }
  if (s.brute_force_directions != 0 && s.brute_force_directions < 1000) {
    throw InvalidInput("brute_force.directions: must be 0 or at least 1000");
  }
  if (s.quadrature.theta_nodes < 64 || s.quadrature.phi_nodes < 64) {
    throw InvalidInput("quadrature: at least 64 nodes per axis");
  }
  if (s.input_theta < 0.0 || s.input_theta > std::numbers::pi || s.input_phi < 0.0 ||
      s.input_phi > 2.0 * std::numbers::pi) {
    throw InvalidInput("input: theta in [0, pi], phi in [0, 2 pi]");
  }
  if (s.model == Model::kJC) s.tau = {0.0};
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config '" + path + "'");
  return parse_scenario(in);
}

}  // namespace qcorr::cli
