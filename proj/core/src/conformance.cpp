#include "qcorr/conformance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "qcorr/closed_forms.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/format.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/quantifiers.hpp"

namespace qcorr {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kLabelDigits = 10;

std::optional<DensityMatrix4> try_state(const Matrix4c& m) {
  if (!validate(m).passed) return std::nullopt;
  return DensityMatrix4::from_matrix(m);
}

std::string jc_point(const JCParams& p) {
  return "purity=" + format_number(p.state.purity, kLabelDigits) + "; alpha=" +
         format_number(p.state.alpha, kLabelDigits) + "; gamma_t=" + format_number(p.gamma_t, kLabelDigits);
}

std::string dephasing_point(const DephasingParams& p) {
  return "purity=" + format_number(p.state.purity, kLabelDigits) + "; alpha=" +
         format_number(p.state.alpha, kLabelDigits) + "; a=" + format_number(p.coupling, kLabelDigits) +
         "; tau=" + format_number(p.tau, kLabelDigits) + "; xi=" + format_number(p.xi(), kLabelDigits);
}

std::string input_suffix(const InputPureState& s) {
  return "; theta=" + format_number(s.theta, kLabelDigits) + "; phi=" + format_number(s.phi, kLabelDigits);
}

// Descending spectrum of the 4x4 state.
Eigen::Vector4d sorted_spectrum(const Matrix4c& m) { return linalg::eig_hermitian(m).values; }

std::array<double, 4> sorted_desc(std::array<double, 4> v) {
  std::sort(v.begin(), v.end(), [](double a, double b) { return a > b; });
  return v;
}

// Eigenvectors of the outer block [[m00, m03], [m30, m33]]: amplitude ratio
// <00|psi>/<11|psi> for the lower and the upper eigenvalue.
std::pair<double, double> outer_block_ratios(const Matrix4c& m) {
  MatrixXc block(2, 2);
  block << m(k00, k00), m(k00, k11), m(k11, k00), m(k11, k11);
  const linalg::EigenSystem es = linalg::eig_hermitian(block);
  const auto ratio = [&](int col) {
    const Complex top = es.vectors(0, col);
    const Complex bottom = es.vectors(1, col);
    return std::abs(bottom) < 1e-14 ? kNaN : (top / bottom).real();
  };
  return {ratio(1), ratio(0)};
}

// Eigenvalues of the outer block, ascending.
std::pair<double, double> outer_block_values(const Matrix4c& m) {
  MatrixXc block(2, 2);
  block << m(k00, k00), m(k00, k11), m(k11, k00), m(k11, k11);
  const linalg::EigenSystem es = linalg::eig_hermitian(block);
  return {es.values(1), es.values(0)};
}

class RowSink {
 public:
  RowSink(std::string model, std::string point) : model_(std::move(model)), point_(std::move(point)) {}
  void add(std::string quantity, double closed, double generic) {
    rows_.push_back({model_, point_, std::move(quantity), closed, generic});
  }
  void add_complex(const std::string& quantity, Complex closed, Complex generic) {
    add(quantity + ".re", closed.real(), generic.real());
    add(quantity + ".im", closed.imag(), generic.imag());
  }
  std::vector<ConformanceRow> take() { return std::move(rows_); }

 private:
  std::string model_;
  std::string point_;
  std::vector<ConformanceRow> rows_;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_double(const std::string& s) {
  double value = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw InvalidInput("conformance table: cannot parse number '" + s + "'");
  }
  return value;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kMatch:
      return "match";
    case Verdict::kMismatch:
      return "mismatch";
    case Verdict::kUndefined:
      return "undefined";
  }
  return "unknown";
}

double ConformanceRow::abs_dev() const {
  if (!std::isfinite(closed_form) || !std::isfinite(generic)) return kNaN;
  return std::abs(closed_form - generic);
}

Verdict ConformanceRow::verdict() const {
  const double d = abs_dev();
  if (std::isnan(d)) return Verdict::kUndefined;
  return d <= kConformanceMatchTol ? Verdict::kMatch : Verdict::kMismatch;
}

std::string to_markdown(const std::vector<ConformanceRow>& rows) {
  std::ostringstream out;
  out << "| model | point | quantity | closed_form_value | generic_value | abs_dev | verdict |\n";
  out << "|---|---|---|---|---|---|---|\n";
  for (const ConformanceRow& r : rows) {
    out << "| " << r.model << " | " << r.point << " | " << r.quantity << " | " << format_number(r.closed_form)
        << " | " << format_number(r.generic) << " | " << format_number(r.abs_dev()) << " | "
        << to_string(r.verdict()) << " |\n";
  }
  return out.str();
}

std::vector<ConformanceRow> parse_markdown(std::string_view text) {
  std::vector<ConformanceRow> rows;
  bool in_table = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    const std::string t = trim(line);
    if (t.empty() || t.front() != '|') {
      in_table = false;
      continue;
    }
    std::vector<std::string> cells;
    std::size_t start = 1;
    while (start < t.size()) {
      const std::size_t bar = t.find('|', start);
      if (bar == std::string::npos) break;
      cells.push_back(trim(std::string_view(t).substr(start, bar - start)));
      start = bar + 1;
    }
    if (cells.size() == 7 && cells[0] == "model") {
      in_table = true;
      continue;
    }
    if (!in_table || (!cells.empty() && cells[0].starts_with("---"))) continue;
    if (cells.size() != 7) throw InvalidInput("conformance table: expected 7 cells in '" + t + "'");
    rows.push_back({cells[0], cells[1], cells[2], parse_double(cells[3]), parse_double(cells[4])});
  }
  return rows;
}

std::vector<ConformanceRow> jc_conformance(const JCParams& p) {
  RowSink sink("jc", jc_point(p));
  const JCStateElements frozen = jc_elements_frozen_noise(p);
  const Matrix4c oracle = jc_unitary_oracle(p).matrix();
  sink.add("state.u", frozen.u, oracle(k00, k00).real());
  sink.add("state.v", frozen.v, oracle(k11, k11).real());
  sink.add("state.w", frozen.w, oracle(k00, k11).real());
  sink.add("state.z", frozen.z, oracle(k01, k10).real());
  sink.add("state.y", frozen.y, oracle(k01, k01).real());

  const JCClosedForms cf = jc_closed_forms(p);
  const Matrix4c m = x_state_matrix(frozen);
  const std::optional<DensityMatrix4> rho = try_state(m);

  CorrelationMatrix3 w = CorrelationMatrix3::Constant(kNaN);
  CorrelationMatrix3 f = CorrelationMatrix3::Constant(kNaN);
  double lqu = kNaN, lqfi = kNaN, qc = kNaN;
  if (rho) {
    w = skew_correlation_matrix(*rho);
    f = fisher_correlation_matrix(*rho);
    lqu = lqu_generic(*rho).value;
    lqfi = lqfi_generic(*rho).value;
    qc = coherence_jsd(*rho).value;
  }
  sink.add("skew_matrix.11", cf.w11, w(0, 0));
  sink.add("skew_matrix.22", cf.w22, w(1, 1));
  sink.add("skew_matrix.33", cf.w33, w(2, 2));
  sink.add("lqu", cf.lqu, lqu);

  const Eigen::Vector4d spec = sorted_spectrum(m);
  const std::array<double, 4> closed_spec = sorted_desc(cf.eta);
  for (int k = 0; k < 4; ++k) {
    sink.add("eigenvalue_desc." + std::to_string(k + 1), closed_spec[static_cast<std::size_t>(k)], spec(k));
  }
  const auto [ratio_low, ratio_high] = outer_block_ratios(m);
  sink.add("eigvec_ratio.minus", cf.chi_minus, ratio_low);
  sink.add("eigvec_ratio.plus", cf.chi_plus, ratio_high);
  sink.add("eigvec_ratio.minus.factor1", cf.chi_minus_alt, ratio_low);
  sink.add("eigvec_ratio.plus.factor1", cf.chi_plus_alt, ratio_high);

  sink.add("fisher_matrix.11", cf.m11, f(0, 0));
  sink.add("fisher_matrix.22", cf.m22, f(1, 1));
  sink.add("fisher_matrix.33", cf.m33, f(2, 2));
  sink.add("lqfi", cf.lqfi, lqfi);
  sink.add("coherence", cf.coherence, qc);
  return sink.take();
}

std::vector<ConformanceRow> dephasing_conformance(const DephasingParams& p) {
  RowSink sink("dephasing", dephasing_point(p));
  const DephasingStateElements e = dephasing_elements(p);
  const auto kraus = dephasing_kraus_two_qubit(p.coupling, p.tau, p.t);
  const Matrix4c m = apply_kraus(werner_like(p.state).matrix(), kraus);
  sink.add("state.A", e.A, m(k00, k00).real());
  sink.add("state.B", e.B, m(k11, k11).real());
  sink.add("state.C", e.C, m(k00, k11).real());
  sink.add("state.D", e.D, m(k01, k01).real());

  const DephasingClosedForms cf = dephasing_closed_forms(p);
  const DensityMatrix4 rho = dephasing_state(p);
  const CorrelationMatrix3 w = skew_correlation_matrix(rho);
  const CorrelationMatrix3 f = fisher_correlation_matrix(rho);

  const Eigen::Vector4d spec = sorted_spectrum(rho.matrix());
  const std::array<double, 4> closed_spec = sorted_desc(cf.lambda);
  for (int k = 0; k < 4; ++k) {
    sink.add("eigenvalue_desc." + std::to_string(k + 1), closed_spec[static_cast<std::size_t>(k)], spec(k));
  }
  const auto [ratio_low, ratio_high] = outer_block_ratios(rho.matrix());
  sink.add("eigvec_ratio.minus", cf.eps_minus, ratio_low);
  sink.add("eigvec_ratio.plus", cf.eps_plus, ratio_high);
  sink.add("fisher_matrix.11", cf.m11, f(0, 0));
  sink.add("fisher_matrix.22", cf.m22, f(1, 1));
  sink.add("fisher_matrix.33", cf.m33, f(2, 2));
  sink.add("lqfi", cf.lqfi, lqfi_generic(rho).value);

  // Sigma is 16 det of the outer block; Theta is -4 W11^2 for this family.
  const auto [low, high] = outer_block_values(rho.matrix());
  sink.add("skew_aux.Sigma", cf.sigma, 16.0 * low * high);
  sink.add("skew_aux.Theta", cf.theta, -4.0 * w(0, 0) * w(0, 0));
  sink.add("skew_matrix.11", cf.w11, w(0, 0));
  sink.add("skew_matrix.22", cf.w22, w(1, 1));
  sink.add("skew_matrix.33", cf.w33, w(2, 2));
  sink.add("lqu", cf.lqu, lqu_generic(rho).value);

  // varpi and Delta enter the coherence through (2 + 2 purity -/+ sqrt(varpi))/4
  // and (1 + purity -/+ sqrt(Delta))/4; their reference values are the squared
  // gaps that make those arguments the outer-block eigenvalues of
  // (rho + rho_d)/2 and of rho.
  const Matrix4c diag = rho.matrix().diagonal().asDiagonal();
  const auto [mid_low, mid_high] = outer_block_values(0.5 * (rho.matrix() + diag));
  sink.add("coherence_aux.varpi", cf.varpi, std::pow(4.0 * (mid_high - mid_low), 2));
  sink.add("coherence_aux.Delta", cf.delta, std::pow(4.0 * (high - low), 2));
  sink.add("coherence", cf.coherence, coherence_jsd(rho).value);
  return sink.take();
}

std::vector<ConformanceRow> jc_teleport_conformance(const JCParams& p, const InputPureState& s,
                                                    const QuadratureSpec& spec) {
  RowSink sink("jc-teleport", jc_point(p) + input_suffix(s));
  const JCOutputElements out = jc_output_closed(p, s);
  const ClosedFidelity cf = jc_fav_closed(p, s);
  const std::optional<DensityMatrix4> rho = try_state(x_state_matrix(jc_elements_frozen_noise(p)));

  Matrix4c generic = Matrix4c::Constant(Complex(kNaN, kNaN));
  double fidelity = kNaN, f_av = kNaN;
  if (rho) {
    const TeleportChannel ch = build_channel(*rho);
    generic = twirl(ch.p, input_state(s).matrix());
    fidelity = fidelity_pointwise(ch, s);
    f_av = fidelity_average(ch, spec);
  }
  sink.add("output.kappa@00", out.kappa, generic(k00, k00).real());
  sink.add("output.kappa@11", out.kappa, generic(k11, k11).real());
  sink.add("output.vartheta", out.vartheta, generic(k00, k11).real());
  sink.add("output.chi", out.chi, generic(k01, k01).real());
  sink.add("output.zeta", out.zeta, generic(k10, k10).real());
  sink.add_complex("output.Delta", out.delta, generic(k01, k10));
  sink.add_complex("output.Theta", out.big_theta, generic(k10, k01));
  sink.add("fidelity", cf.f, fidelity);
  sink.add("average_fidelity", cf.f_av, f_av);
  return sink.take();
}

std::vector<ConformanceRow> dephasing_teleport_conformance(const DephasingParams& p, const InputPureState& s,
                                                           const QuadratureSpec& spec) {
  RowSink sink("dephasing-teleport", dephasing_point(p) + input_suffix(s));
  const DephasingOutputElements out = dephasing_output_closed(p, s);
  const ClosedFidelity cf = dephasing_fav_closed(p, s);
  const TeleportChannel ch = build_channel(dephasing_state(p));
  const Matrix4c generic = twirl(ch.p, input_state(s).matrix());
  sink.add("output.varpi@00", out.varpi, generic(k00, k00).real());
  sink.add("output.varpi@11", out.varpi, generic(k11, k11).real());
  sink.add_complex("output.Sigma@10,01", out.sigma, generic(k10, k01));
  sink.add_complex("output.Sigma@01,10", out.sigma, generic(k01, k10));
  sink.add("output.Upsilon@01", out.upsilon, generic(k01, k01).real());
  sink.add("output.Upsilon@10", out.upsilon, generic(k10, k10).real());
  sink.add("fidelity", cf.f, fidelity_pointwise(ch, s));
  sink.add("average_fidelity", cf.f_av, fidelity_average(ch, spec));
  return sink.take();
}

}  // namespace qcorr
