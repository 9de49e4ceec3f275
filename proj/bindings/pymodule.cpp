#include "graphzeta/spec_io.hpp"
#include "graphzeta/textio.hpp"
#include "graphzeta/zeta.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace graphzeta;

namespace {

std::string poly_text(const ParsedInput& input, const UniPoly<Rational>& p) {
  (void)input;
  return format_poly(p, 't');
}
std::string poly_text(const ParsedInput& input, const UniPoly<QRat>& p) {
  (void)input;
  return format_poly(p, 't', 'q');
}

template <FieldScalar K>
std::vector<std::string> series_strings(const TruncatedSeries<K>& s) {
  std::vector<std::string> out;
  out.reserve(s.order() + 1);
  for (std::size_t i = 0; i <= s.order(); ++i) out.push_back(coeff_string(s.coeff(i)));
  return out;
}

/// Applies fn to the instance's digraph + scheme in whichever coefficient
/// field the instance lives in.
template <class Fn>
auto with_scheme(const ParsedInput& input, Fn&& fn) {
  if (input.symbolic) return fn(input.digraph, input.scheme_qq);
  return fn(input.digraph, input.scheme_q);
}

ParsedInput parse_text(const std::string& text) { return parse_spec(text); }

ParsedInput parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

py::dict verify_dict(const ParsedInput& input) {
  return with_scheme(input, [&](const Digraph& d, const auto& w) {
    auto report = verify_main_theorem(d, w);
    py::dict out;
    out["hashimoto"] = poly_text(input, report.hashimoto);
    out["ihara"] = poly_text(input, report.ihara);
    out["match"] = report.match;
    out["scheme"] = input.scheme_label;
    return out;
  });
}

py::dict series_dict(const ParsedInput& input, int T, std::uint64_t max_paths, bool reduced) {
  if (T < 0) throw std::invalid_argument("T must be nonnegative");
  return with_scheme(input, [&](const Digraph& d, const auto& w) {
    PathEnumOptions opts{reduced, max_paths};
    auto exp_series = exp_expression_truncated(d, w, static_cast<std::size_t>(T), opts);
    auto euler_series = euler_expression_truncated(d, w, static_cast<std::size_t>(T), opts);
    auto hashimoto_series = series_inverse(
        decltype(exp_series)::from_poly(hashimoto_polynomial(d, w), static_cast<std::size_t>(T)));
    py::dict out;
    out["exp"] = series_strings(exp_series);
    out["euler"] = series_strings(euler_series);
    out["hashimoto_inverse"] = series_strings(hashimoto_series);
    out["match"] = exp_series == euler_series && euler_series == hashimoto_series;
    out["scheme"] = input.scheme_label;
    return out;
  });
}

std::vector<std::string> nm_list(const ParsedInput& input, int T, std::uint64_t max_paths,
                                 bool reduced) {
  return with_scheme(input, [&](const Digraph& d, const auto& w) {
    PathEnumOptions opts{reduced, max_paths};
    std::vector<std::string> out;
    for (int m = 1; m <= T; ++m) out.push_back(coeff_string(n_m(d, w, m, opts)));
    return out;
  });
}

py::dict phi_dict(const ParsedInput& input) {
  PhiPartition phi = phi_partition(input.digraph);
  auto names = [&](const std::vector<std::pair<int, int>>& pairs) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [u, v] : pairs)
      out.emplace_back(input.vertex_names[static_cast<std::size_t>(u)],
                       input.vertex_names[static_cast<std::size_t>(v)]);
    return out;
  };
  py::dict out;
  out["loop"] = names(phi.loop_pairs);
  out["one_way"] = names(phi.one_way);
  out["two_way"] = names(phi.two_way);
  return out;
}

std::string classical_text(const ParsedInput& input) {
  if (!input.graph)
    throw std::invalid_argument("classical needs an 'edges' document");
  const Graph& g = *input.graph;
  switch (input.preset) {
    case Preset::Ihara: return format_poly(bass_ihara_classical(g), 't');
    case Preset::MizunoSato:
      if (!input.edge_tau) throw std::invalid_argument("needs numeric weights");
      return format_poly(mizuno_sato_classical(g, *input.edge_tau), 't');
    case Preset::Sato:
      if (!input.edge_tau) throw std::invalid_argument("needs numeric weights");
      return format_poly(sato_classical(g, *input.edge_tau), 't');
    case Preset::BowenLanford:
      if (!input.edge_tau) throw std::invalid_argument("needs numeric weights");
      return format_poly(det_identity_minus_t(*input.edge_tau), 't');
    case Preset::Bartholdi: {
      UniPoly<QRat> p = bartholdi_classical(g);
      if (input.q_value) return format_poly(evaluate_q(p, *input.q_value), 't');
      return format_poly(p, 't', 'q');
    }
    case Preset::General:
      throw std::invalid_argument("no classical closed form is defined for GENERAL");
  }
  throw std::invalid_argument("unknown preset");
}

std::vector<std::vector<int>> lyndon_one_based(int n, int maxlen) {
  auto words = lyndon_words(n, maxlen);
  for (auto& w : words)
    for (int& letter : w) ++letter;
  return words;
}

} // namespace

PYBIND11_MODULE(graphzeta, m) {
  m.doc() = "exact zeta expressions of weighted digraphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<RejectedCombinationError>(m, "RejectedCombinationError",
                                                   PyExc_RuntimeError);

  py::class_<ParsedInput>(m, "Instance")
      .def_property_readonly("vertex_count",
                             [](const ParsedInput& i) { return i.digraph.vertex_count(); })
      .def_property_readonly("arc_count",
                             [](const ParsedInput& i) { return i.digraph.arc_count(); })
      .def_property_readonly("scheme", [](const ParsedInput& i) { return i.scheme_label; })
      .def_property_readonly("symbolic", [](const ParsedInput& i) { return i.symbolic; })
      .def("phi_partition", &phi_dict, "supported pairs split into loop/one-way/two-way")
      .def("__repr__", [](const ParsedInput& i) {
        return "<graphzeta.Instance |V|=" + std::to_string(i.digraph.vertex_count()) +
               " |A|=" + std::to_string(i.digraph.arc_count()) + " scheme=" + i.scheme_label +
               ">";
      });

  m.def("parse_text", &parse_text, py::arg("text"), "parse an instance document from a string");
  m.def("parse_file", &parse_file, py::arg("path"), "parse an instance document from a file");
  m.def(
      "hashimoto",
      [](const ParsedInput& i) {
        return with_scheme(
            i, [&](const Digraph& d, const auto& w) { return poly_text(i, hashimoto_polynomial(d, w)); });
      },
      py::arg("instance"), "arc-side determinant polynomial, canonical text");
  m.def(
      "ihara",
      [](const ParsedInput& i) {
        return with_scheme(
            i, [&](const Digraph& d, const auto& w) { return poly_text(i, ihara_polynomial(d, w)); });
      },
      py::arg("instance"), "vertex-side expression polynomial, canonical text");
  m.def("verify", &verify_dict, py::arg("instance"),
        "compute both sides of the main identity and compare them exactly");
  m.def("series", &series_dict, py::arg("instance"), py::arg("T") = 10,
        py::arg("max_paths") = std::uint64_t{10'000'000}, py::arg("reduced") = false,
        "exp/euler/determinant-inverse series coefficients to order T");
  m.def("nm", &nm_list, py::arg("instance"), py::arg("T"),
        py::arg("max_paths") = std::uint64_t{10'000'000}, py::arg("reduced") = false,
        "weighted closed-path counts N_1..N_T");
  m.def("classical", &classical_text, py::arg("instance"),
        "classical closed form for an edges document");
  m.def("lyndon_words", &lyndon_one_based, py::arg("n"), py::arg("maxlen"),
        "Lyndon words over {1..n} up to the given length, lexicographic");
}
