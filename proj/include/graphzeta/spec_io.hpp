#pragma once

#include "graphzeta/digraph.hpp"
#include "graphzeta/errors.hpp"
#include "graphzeta/matrix.hpp"
#include "graphzeta/rational.hpp"
#include "graphzeta/rational_function.hpp"
#include "graphzeta/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace graphzeta {

/// Parses a weight expression: a polynomial in q with exact rational
/// coefficients, e.g. "1", "-3/2", "1 - q", "(1-q)^2 * 3/4".  Floating-point
/// notation is rejected.  Throws ParseError with a position message.
QPoly parse_weight_expression(const std::string& text);

/// Adjustments applied on top of the document (CLI flags).
struct ParseOverrides {
  std::optional<Preset> preset;
  std::optional<Rational> eval_q;
};

/// A fully resolved input instance.  Exactly one of scheme_q / scheme_qq is
/// meaningful, selected by `symbolic`.
struct ParsedInput {
  Digraph digraph;
  std::optional<Graph> graph;          ///< present when the document used "edges"
  std::vector<std::string> vertex_names;
  Preset preset = Preset::General;
  bool symbolic = false;               ///< weights live in Q(q)
  std::optional<Rational> q_value;     ///< BARTHOLDI evaluated at this q
  WeightScheme<Rational> scheme_q;
  WeightScheme<QRat> scheme_qq;
  /// tau of the forward/backward arc per ordered vertex pair (edges form,
  /// numeric mode only); feeds the weighted classical forms.
  std::optional<Matrix<Rational>> edge_tau;
  std::string scheme_label;
};

/// Parses and validates a JSON instance document.  Throws ParseError on any
/// structural, reference, or weight problem.
ParsedInput parse_spec(const std::string& text, const ParseOverrides& overrides = {});

/// Canonical serialization (resolved weights written out explicitly);
/// parse .. serialize .. parse is the identity on canonical documents.
std::string serialize_spec(const ParsedInput& input);

std::optional<Preset> preset_from_name(const std::string& name);

} // namespace graphzeta
