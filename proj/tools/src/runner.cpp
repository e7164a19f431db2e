#include "qcorr_cli/runner.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "qcorr/closed_forms.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/format.hpp"
#include "qcorr/quantifiers.hpp"

namespace qcorr::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct GridPoint {
  double purity;
  double alpha;
  double tau;
  double time;
};

std::vector<GridPoint> grid(const Scenario& s) {
  std::vector<GridPoint> out;
  out.reserve(s.purity.size() * s.alpha.size() * s.tau.size() * s.time.size());
  for (double purity : s.purity) {
    for (double alpha : s.alpha) {
      for (double tau : s.tau) {
        for (double time : s.time) out.push_back({purity, alpha, tau, time});
      }
    }
  }
  return out;
}

JCParams jc_params(const GridPoint& g) { return {{g.purity, g.alpha}, g.time}; }

DephasingParams dephasing_params(const Scenario& s, const GridPoint& g) {
  return {{g.purity, g.alpha}, s.coupling, g.tau, 2.0 * g.tau * g.time};
}

std::string deviation(double closed, double generic) {
  if (!std::isfinite(closed) || !std::isfinite(generic)) return {};
  return format_number(std::abs(closed - generic));
}

std::string evaluate_row(const Scenario& s, const GridPoint& g) {
  std::vector<std::string> cells;
  cells.emplace_back(to_string(s.model));
  cells.push_back(format_number(g.purity));
  cells.push_back(format_number(g.alpha));

  std::optional<DensityMatrix4> rho;
  double closed_lqu = kNaN, closed_lqfi = kNaN, closed_qc = kNaN, closed_fav = kNaN;
  const InputPureState input{s.input_theta, s.input_phi};
  if (s.model == Model::kJC) {
    const JCParams p = jc_params(g);
    cells.push_back(format_number(g.time));
    rho = jc_state(p);
    if (s.closed_forms) {
      const JCClosedForms cf = jc_closed_forms(p);
      closed_lqu = cf.lqu;
      closed_lqfi = cf.lqfi;
      closed_qc = cf.coherence;
      if (s.teleport) closed_fav = jc_fav_closed(p, input).f_av;
    }
  } else {
    const DephasingParams p = dephasing_params(s, g);
    cells.push_back(format_number(s.coupling));
    cells.push_back(format_number(g.tau));
    cells.push_back(format_number(g.time));
    cells.push_back(format_number(p.t));
    rho = dephasing_state(p);
    if (s.closed_forms) {
      const DephasingClosedForms cf = dephasing_closed_forms(p);
      closed_lqu = cf.lqu;
      closed_lqfi = cf.lqfi;
      closed_qc = cf.coherence;
      if (s.teleport) closed_fav = dephasing_fav_closed(p, input).f_av;
    }
  }
  cells.emplace_back("generic");

  double lqu = kNaN, lqfi = kNaN, qc = kNaN, fav = kNaN;
  if (s.lqu) cells.push_back(format_number(lqu = lqu_generic(*rho).value));
  if (s.lqfi) cells.push_back(format_number(lqfi = lqfi_generic(*rho).value));
  if (s.coherence) cells.push_back(format_number(qc = coherence_jsd(*rho).value));
  if (s.brute_force_directions > 0) {
    cells.push_back(format_number(lqu_brute_force(*rho, s.brute_force_directions).value));
    cells.push_back(format_number(lqfi_brute_force(*rho, s.brute_force_directions).value));
  }
  if (s.teleport) cells.push_back(format_number(fav = fidelity_average(build_channel(*rho), s.quadrature)));
  if (s.closed_forms) {
    if (s.lqu) cells.push_back(deviation(closed_lqu, lqu));
    if (s.lqfi) cells.push_back(deviation(closed_lqfi, lqfi));
    if (s.coherence) cells.push_back(deviation(closed_qc, qc));
    if (s.teleport) cells.push_back(deviation(closed_fav, fav));
  }

  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) row += ',';
    row += cells[i];
  }
  return row;
}

}  // namespace

std::vector<std::string> csv_header(const Scenario& s) {
  std::vector<std::string> h{"model", "purity", "alpha"};
  if (s.model == Model::kJC) {
    h.emplace_back("gamma_t");
  } else {
    h.insert(h.end(), {"coupling", "tau", "xi", "t"});
  }
  h.emplace_back("method");
  if (s.lqu) h.emplace_back("lqu");
  if (s.lqfi) h.emplace_back("lqfi");
  if (s.coherence) h.emplace_back("coherence");
  if (s.brute_force_directions > 0) h.insert(h.end(), {"lqu_brute_force", "lqfi_brute_force"});
  if (s.teleport) h.emplace_back("f_av");
  if (s.closed_forms) {
    if (s.lqu) h.emplace_back("lqu_closed_form_dev");
    if (s.lqfi) h.emplace_back("lqfi_closed_form_dev");
    if (s.coherence) h.emplace_back("coherence_closed_form_dev");
    if (s.teleport) h.emplace_back("f_av_closed_form_dev");
  }
  return h;
}

RunResult run_scenario(const Scenario& s, std::ostream& out, int jobs) {
  const std::vector<GridPoint> points = grid(s);
  std::vector<std::string> rows(points.size());
  std::vector<std::string> errors(points.size());
  std::vector<char> failed(points.size(), 0);

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        rows[i] = evaluate_row(s, points[i]);
      } catch (const std::exception& e) {
        failed[i] = 1;
        errors[i] = e.what();
      }
    }
  };
  const int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(points.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  const std::vector<std::string> header = csv_header(s);
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  RunResult result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (failed[i]) {
      out << "# error: grid point " << i << ": " << errors[i] << '\n';
      result.error = errors[i];
      break;
    }
    out << rows[i] << '\n';
    ++result.rows;
  }
  out.flush();
  return result;
}

std::vector<ConformanceRow> conformance_rows(const Scenario& s) {
  std::vector<ConformanceRow> rows;
  const InputPureState input{s.input_theta, s.input_phi};
  const auto append = [&](std::vector<ConformanceRow> more) {
    rows.insert(rows.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  for (const GridPoint& g : grid(s)) {
    if (s.model == Model::kJC) {
      append(jc_conformance(jc_params(g)));
      if (s.teleport) append(jc_teleport_conformance(jc_params(g), input, s.quadrature));
    } else {
      append(dephasing_conformance(dephasing_params(s, g)));
      if (s.teleport) append(dephasing_teleport_conformance(dephasing_params(s, g), input, s.quadrature));
    }
  }
  return rows;
}

std::string conformance_document(const std::vector<ConformanceRow>& rows) {
  std::size_t match = 0, mismatch = 0, undefined = 0;
  for (const ConformanceRow& r : rows) {
    switch (r.verdict()) {
      case Verdict::kMatch:
        ++match;
        break;
      case Verdict::kMismatch:
        ++mismatch;
        break;
      case Verdict::kUndefined:
        ++undefined;
        break;
    }
  }
  std::ostringstream out;
  out << "# Closed-form conformance\n\n"
      << "Each row evaluates one closed-form expression for the Jaynes-Cummings (`jc`) or the\n"
      << "dephasing model and compares it with the value obtained by the generic numerical\n"
      << "pipeline. `match` means an absolute deviation of at most 1e-8, `undefined` means the\n"
      << "closed form is not a finite number at that point (square root of a negative\n"
      << "argument, division by zero).\n\n"
      << "Conventions:\n\n"
      << "- `jc` state entries (`state.*`) compare the entries with the white-noise part held at\n"
      << "  (1 - purity)/4 against the unitary oracle (two qubits and a three-level cavity).\n"
      << "  All other `jc` and `jc-teleport` quantities are compared on that same frozen-noise\n"
      << "  state, so they test the algebra of the expressions rather than the state itself.\n"
      << "- `dephasing` state entries compare against the Kraus channel on qubit A.\n"
      << "- `eigenvalue_desc.k` lists both spectra in descending order.\n"
      << "- `eigvec_ratio.minus/plus` is the ratio <00|psi>/<11|psi> of the eigenvectors of the\n"
      << "  {|00>, |11>} block for its lower/upper eigenvalue. `factor1` replaces the factor 16\n"
      << "  under the square root by 1.\n"
      << "- In the Fisher sums, pairs whose eigenvalues add up to less than 1e-12 contribute 0.\n"
      << "- `skew_aux.Sigma` is compared with 16 det of the {|00>, |11>} block and\n"
      << "  `skew_aux.Theta` with -4 W11^2 (W11 from the generic pipeline).\n"
      << "- `coherence_aux.varpi` and `coherence_aux.Delta` are compared with (4 g)^2, where g\n"
      << "  is the eigenvalue gap of the {|00>, |11>} block of (rho + rho_d)/2 and of rho.\n"
      << "- Logarithms in closed forms are natural logarithms; 0 log 0 = 0. The `jc` coherence\n"
      << "  expression divides by 2 ln 2 and is therefore in bits, like the generic value.\n"
      << "- Teleport output entries: `@ij` names the matrix position, `.re`/`.im` the part.\n\n"
      << "Rows: " << rows.size() << " (match " << match << ", mismatch " << mismatch << ", undefined "
      << undefined << ").\n\n"
      << to_markdown(rows);
  return out.str();
}

}  // namespace qcorr::cli
