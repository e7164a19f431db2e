#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qcorr/dynamics.hpp"
#include "qcorr/states.hpp"
#include "qcorr/teleport.hpp"

namespace qcorr {

enum class Verdict { kMatch, kMismatch, kUndefined };

const char* to_string(Verdict v);

/// Closed form and generic value agree when within this absolute distance.
inline constexpr double kConformanceMatchTol = 1e-8;

struct ConformanceRow {
  std::string model;     // "jc", "dephasing", "jc-teleport", "dephasing-teleport"
  std::string point;     // parameter point, "key=value" pairs separated by "; "
  std::string quantity;  // descriptive quantity name
  double closed_form = 0.0;
  double generic = 0.0;

  /// NaN when either value is not finite.
  double abs_dev() const;
  Verdict verdict() const;
};

/// Markdown table with columns model | point | quantity | closed_form_value |
/// generic_value | abs_dev | verdict.
std::string to_markdown(const std::vector<ConformanceRow>& rows);

/// Reads back the table rows of to_markdown() output; other lines are ignored.
/// Throws InvalidInput on a malformed table row.
std::vector<ConformanceRow> parse_markdown(std::string_view text);

/// State entries (frozen-noise variant against the unitary oracle) and every
/// quantifier closed form against the generic pipeline on the frozen-noise
/// state.
std::vector<ConformanceRow> jc_conformance(const JCParams& p);

/// State entries against the Kraus path and every quantifier closed form
/// against the generic pipeline on the dephased state.
std::vector<ConformanceRow> dephasing_conformance(const DephasingParams& p);

/// Output-state entries, fidelity and average fidelity of the JC resource.
std::vector<ConformanceRow> jc_teleport_conformance(const JCParams& p, const InputPureState& s,
                                                    const QuadratureSpec& spec = {});

std::vector<ConformanceRow> dephasing_teleport_conformance(const DephasingParams& p, const InputPureState& s,
                                                           const QuadratureSpec& spec = {});

}  // namespace qcorr
