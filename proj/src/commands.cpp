#include "graphzeta/commands.hpp"

#include "graphzeta/textio.hpp"
#include "graphzeta/zeta.hpp"

#include "json.hpp"

#include <utility>
#include <vector>

namespace graphzeta {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_poly(const UniPoly<Rational>& p) { return format_poly(p, 't'); }
std::string fmt_poly(const UniPoly<QRat>& p) { return format_poly(p, 't', 'q'); }

template <FieldScalar K>
std::vector<std::string> coeff_strings(const std::vector<K>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const K& v : values) out.push_back(coeff_string(v));
  return out;
}

template <FieldScalar K>
std::string joined_row(const std::vector<K>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += coeff_string(values[i]);
  }
  return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

/// Gate for commands whose reduced-path reading requires the transfer matrix
/// to vanish on inverse pairs.
template <FieldScalar K>
void require_reduced_adjacency(const Digraph& d, const WeightScheme<K>& w,
                               const std::string& label) {
  if (check_adjacency_condition(d, edge_matrix(d, w)) != AdjacencyLevel::ReducedAdjacency)
    throw RejectedCombinationError(
        "scheme " + label +
        " is not of reduced adjacency type; its determinant does not describe reduced paths");
}

template <FieldScalar K>
CommandResult poly_result(const char* key, const UniPoly<K>& p, const std::string& label,
                          const CommandConfig& cfg) {
  const std::size_t count = static_cast<std::size_t>(std::max(p.degree(), 0)) + 1;
  switch (cfg.format) {
    case OutputFormat::Human:
      return {kExitOk, fmt_poly(p) + "\n"};
    case OutputFormat::Coeffs:
      return {kExitOk, joined_row(padded_coeffs(p, count)) + "\n"};
    case OutputFormat::Json: {
      ordered_json j;
      j["scheme"] = label;
      j[key] = coeff_strings(padded_coeffs(p, count));
      return {kExitOk, dump(j)};
    }
  }
  return {kExitOk, ""};
}

template <FieldScalar K>
CommandResult do_hashimoto(const Digraph& d, const WeightScheme<K>& w,
                           const std::string& label, const CommandConfig& cfg) {
  if (cfg.reduced) require_reduced_adjacency(d, w, label);
  return poly_result("hashimoto", hashimoto_polynomial(d, w), label, cfg);
}

template <FieldScalar K>
CommandResult do_ihara(const Digraph& d, const WeightScheme<K>& w, const std::string& label,
                       const CommandConfig& cfg) {
  return poly_result("ihara", ihara_polynomial(d, w), label, cfg);
}

template <FieldScalar K>
CommandResult do_verify(const Digraph& d, const WeightScheme<K>& w, const std::string& label,
                        const CommandConfig& cfg) {
  ZetaReport<K> report = verify_main_theorem(d, w);
  const std::size_t count =
      static_cast<std::size_t>(std::max({report.hashimoto.degree(), report.ihara.degree(), 0})) + 1;
  const char* verdict = report.match ? "MATCH" : "MISMATCH";
  const int exit_code = report.match ? kExitOk : kExitMismatch;
  switch (cfg.format) {
    case OutputFormat::Human:
      return {exit_code, "scheme: " + label + "\nhashimoto: " + fmt_poly(report.hashimoto) +
                             "\nihara: " + fmt_poly(report.ihara) + "\n" + verdict + "\n"};
    case OutputFormat::Coeffs:
      return {exit_code, "hashimoto: " + joined_row(padded_coeffs(report.hashimoto, count)) +
                             "\nihara: " + joined_row(padded_coeffs(report.ihara, count)) + "\n" +
                             verdict + "\n"};
    case OutputFormat::Json: {
      ordered_json j;
      j["scheme"] = label;
      j["T"] = count - 1;
      j["hashimoto"] = coeff_strings(padded_coeffs(report.hashimoto, count));
      j["ihara"] = coeff_strings(padded_coeffs(report.ihara, count));
      j["match"] = report.match;
      return {exit_code, dump(j)};
    }
  }
  return {exit_code, ""};
}

template <FieldScalar K>
CommandResult do_series(const Digraph& d, const WeightScheme<K>& w, const std::string& label,
                        const CommandConfig& cfg) {
  const std::size_t T = static_cast<std::size_t>(cfg.truncation);
  PathEnumOptions opts{cfg.reduced, cfg.max_paths};
  if (cfg.reduced) require_reduced_adjacency(d, w, label);
  TruncatedSeries<K> exp_series = exp_expression_truncated(d, w, T, opts);
  TruncatedSeries<K> euler_series = euler_expression_truncated(d, w, T, opts);
  TruncatedSeries<K> hashimoto_series =
      series_inverse(TruncatedSeries<K>::from_poly(hashimoto_polynomial(d, w), T));
  const bool agree = exp_series == euler_series && euler_series == hashimoto_series;
  const char* verdict = agree ? "AGREE" : "DISAGREE";
  const int exit_code = agree ? kExitOk : kExitMismatch;
  switch (cfg.format) {
    case OutputFormat::Human:
    case OutputFormat::Coeffs:
      return {exit_code, "exp: " + joined_row(exp_series.coeffs()) +
                             "\neuler: " + joined_row(euler_series.coeffs()) +
                             "\nhashimoto_inverse: " + joined_row(hashimoto_series.coeffs()) +
                             "\n" + verdict + "\n"};
    case OutputFormat::Json: {
      ordered_json j;
      j["scheme"] = label;
      j["T"] = T;
      j["exp"] = coeff_strings(exp_series.coeffs());
      j["euler"] = coeff_strings(euler_series.coeffs());
      j["hashimoto_inverse"] = coeff_strings(hashimoto_series.coeffs());
      j["match"] = agree;
      return {exit_code, dump(j)};
    }
  }
  return {exit_code, ""};
}

template <FieldScalar K>
CommandResult do_nm(const Digraph& d, const WeightScheme<K>& w, const std::string& label,
                    const CommandConfig& cfg) {
  PathEnumOptions opts{cfg.reduced, cfg.max_paths};
  std::vector<K> values;
  for (int m = 1; m <= cfg.truncation; ++m) values.push_back(n_m(d, w, m, opts));
  switch (cfg.format) {
    case OutputFormat::Human: {
      std::string out;
      for (std::size_t i = 0; i < values.size(); ++i)
        out += "N_" + std::to_string(i + 1) + " = " + coeff_string(values[i]) + "\n";
      return {kExitOk, out};
    }
    case OutputFormat::Coeffs:
      return {kExitOk, joined_row(values) + "\n"};
    case OutputFormat::Json: {
      ordered_json j;
      j["scheme"] = label;
      j["T"] = cfg.truncation;
      j["nm"] = coeff_strings(values);
      return {kExitOk, dump(j)};
    }
  }
  return {kExitOk, ""};
}

CommandResult do_classical(const ParsedInput& input, const CommandConfig& cfg) {
  if (!input.graph)
    throw std::invalid_argument(
        "classical needs an 'edges' document (the closed forms are stated for graphs)");
  const Graph& g = *input.graph;
  switch (input.preset) {
    case Preset::Ihara:
      return poly_result("classical", bass_ihara_classical(g), input.scheme_label, cfg);
    case Preset::MizunoSato:
      if (!input.edge_tau)
        throw std::invalid_argument("classical MIZUNO_SATO needs numeric weights");
      return poly_result("classical", mizuno_sato_classical(g, *input.edge_tau),
                         input.scheme_label, cfg);
    case Preset::Sato:
      if (!input.edge_tau)
        throw std::invalid_argument("classical SATO needs numeric weights");
      return poly_result("classical", sato_classical(g, *input.edge_tau), input.scheme_label,
                         cfg);
    case Preset::BowenLanford:
      if (!input.edge_tau)
        throw std::invalid_argument("classical BOWEN_LANFORD needs numeric weights");
      return poly_result("classical", det_identity_minus_t(*input.edge_tau),
                         input.scheme_label, cfg);
    case Preset::Bartholdi: {
      UniPoly<QRat> p = bartholdi_classical(g);
      if (input.q_value)
        return poly_result("classical", evaluate_q(p, *input.q_value), input.scheme_label, cfg);
      return poly_result("classical", p, input.scheme_label, cfg);
    }
    case Preset::General:
      throw std::invalid_argument("no classical closed form is defined for GENERAL");
  }
  throw std::invalid_argument("unknown preset");
}

std::string render_word(const std::vector<int>& word, int alphabet) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (alphabet > 9 && i) out += '.';
    out += std::to_string(word[i] + 1);
  }
  return out;
}

template <FieldScalar K>
CommandResult dispatch(const Digraph& d, const WeightScheme<K>& w, const std::string& label,
                       const CommandConfig& cfg) {
  switch (cfg.command) {
    case Command::Hashimoto: return do_hashimoto(d, w, label, cfg);
    case Command::Ihara: return do_ihara(d, w, label, cfg);
    case Command::Verify: return do_verify(d, w, label, cfg);
    case Command::Series: return do_series(d, w, label, cfg);
    case Command::Nm: return do_nm(d, w, label, cfg);
    default: throw std::invalid_argument("command not valid here");
  }
}

} // namespace

CommandResult run_lyndon(const CommandConfig& cfg) {
  try {
    auto words = lyndon_words(cfg.alphabet, cfg.truncation);
    if (cfg.format == OutputFormat::Json) {
      ordered_json j;
      j["n"] = cfg.alphabet;
      j["T"] = cfg.truncation;
      ordered_json list = ordered_json::array();
      for (const auto& w : words) {
        ordered_json item = ordered_json::array();
        for (int letter : w) item.push_back(letter + 1);
        list.push_back(item);
      }
      j["words"] = list;
      return {kExitOk, dump(j)};
    }
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i) out += "; ";
      out += render_word(words[i], cfg.alphabet);
    }
    out += "\n";
    return {kExitOk, out};
  } catch (const std::invalid_argument& e) {
    return {kExitUsage, std::string("error: ") + e.what() + "\n"};
  }
}

CommandResult run_command(const CommandConfig& cfg, const ParsedInput& input) {
  try {
    if (cfg.command == Command::Lyndon) return run_lyndon(cfg);
    if (cfg.reduced && cfg.command != Command::Hashimoto && cfg.command != Command::Series &&
        cfg.command != Command::Nm)
      throw RejectedCombinationError("--reduced only applies to hashimoto, series and nm");
    if (cfg.truncation < 0) throw std::invalid_argument("-T must be nonnegative");
    if (cfg.command == Command::Classical) return do_classical(input, cfg);
    if (input.symbolic)
      return dispatch(input.digraph, input.scheme_qq, input.scheme_label, cfg);
    return dispatch(input.digraph, input.scheme_q, input.scheme_label, cfg);
  } catch (const ResourceLimitError& e) {
    return {kExitResource, std::string("error: ") + e.what() + "\n"};
  } catch (const RejectedCombinationError& e) {
    return {kExitRejected, std::string("error: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return {kExitUsage, std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kExitUsage, std::string("error: ") + e.what() + "\n"};
  } catch (const std::domain_error& e) {
    return {kExitUsage, std::string("error: ") + e.what() + "\n"};
  }
}

} // namespace graphzeta
