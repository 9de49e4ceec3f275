#include "graphzeta/spec_io.hpp"

#include "graphzeta/textio.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <utility>

namespace graphzeta {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Weight expressions
// ---------------------------------------------------------------------------

namespace {

/// Recursive-descent parser for polynomials in q over Q.  '/' only appears
/// inside rational literals ("3/4"); there is no division operator, which
/// keeps every parse inside Q[q].
class WeightParser {
public:
  explicit WeightParser(const std::string& text) : s_(text) {}

  QPoly parse() {
    QPoly p = expression();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

private:
  QPoly expression() {
    QPoly p = term();
    while (true) {
      skip_space();
      if (consume('+'))
        p += term();
      else if (consume('-'))
        p -= term();
      else
        return p;
    }
  }

  QPoly term() {
    QPoly p = factor();
    while (true) {
      skip_space();
      if (consume('*'))
        p *= factor();
      else
        return p;
    }
  }

  QPoly factor() {
    QPoly base = atom();
    skip_space();
    if (!consume('^')) return base;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a nonnegative integer");
    unsigned e = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
    return base.pow(e);
  }

  QPoly atom() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      QPoly p = expression();
      skip_space();
      if (!consume(')')) fail("missing ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == 'q') {
      ++pos_;
      return QPoly::variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return QPoly(number());
    fail(std::string("unexpected character '") + c + "'");
  }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
      fail("floating-point literals are not accepted; use exact rationals like 3/4");
    std::string text = s_.substr(start, pos_ - start);
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (dstart == pos_) fail("missing denominator digits");
      text += "/" + s_.substr(dstart, pos_ - dstart);
    }
    auto r = Rational::parse(text);
    if (!r) fail("malformed rational '" + text + "'");
    return *r;
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError("weight expression '" + s_ + "': " + message + " at position " +
                     std::to_string(pos_));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

} // namespace

QPoly parse_weight_expression(const std::string& text) { return WeightParser(text).parse(); }

std::optional<Preset> preset_from_name(const std::string& name) {
  if (name == "GENERAL") return Preset::General;
  if (name == "IHARA") return Preset::Ihara;
  if (name == "BOWEN_LANFORD") return Preset::BowenLanford;
  if (name == "MIZUNO_SATO") return Preset::MizunoSato;
  if (name == "SATO") return Preset::Sato;
  if (name == "BARTHOLDI") return Preset::Bartholdi;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Document parsing
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key)) fail(where + ": unknown key '" + key + "'");
  }
}

std::string get_string(const json& obj, const std::string& where, const std::string& key) {
  if (!obj.contains(key)) fail(where + ": missing '" + key + "'");
  if (!obj[key].is_string()) fail(where + ": '" + key + "' must be a string");
  return obj[key].get<std::string>();
}

/// Weight fields must be strings; bare JSON numbers are rejected so that
/// floating-point values can never slip in silently.
std::optional<QPoly> get_weight(const json& obj, const std::string& where,
                                const std::string& key) {
  if (!obj.contains(key)) return std::nullopt;
  if (!obj[key].is_string())
    fail(where + ": '" + key + "' must be a string holding an exact rational or q-polynomial");
  try {
    return parse_weight_expression(obj[key].get<std::string>());
  } catch (const ParseError& e) {
    fail(where + ": " + e.what());
  }
}

struct RawArc {
  int tail = 0;
  int head = 0;
  std::optional<QPoly> tau;
  std::optional<QPoly> upsilon;
};

const QPoly kOne{Rational(1)};
const QPoly kZero{};
const QPoly kOneMinusQ{std::vector<Rational>{Rational(1), Rational(-1)}};

/// Applies the preset's constraints to one arc's provided weights; returns the
/// resolved (tau, upsilon) as q-polynomials.  For evaluated BARTHOLDI runs the
/// upsilon constraint is checked against the evaluated constant 1 - q.
std::pair<QPoly, QPoly> resolve_weights(Preset preset, const RawArc& arc,
                                        const std::string& where,
                                        const std::optional<Rational>& eval_q) {
  auto reject = [&](const char* what, const QPoly& required) {
    fail(where + ": " + what + " contradicts the preset (must be " +
         format_poly(required, 'q') + ")");
  };
  switch (preset) {
    case Preset::General:
      return {arc.tau.value_or(kOne), arc.upsilon.value_or(kOne)};
    case Preset::Ihara:
      if (arc.tau && *arc.tau != kOne) reject("tau", kOne);
      if (arc.upsilon && *arc.upsilon != kOne) reject("upsilon", kOne);
      return {kOne, kOne};
    case Preset::BowenLanford:
      if (arc.upsilon && *arc.upsilon != kZero) reject("upsilon", kZero);
      return {arc.tau.value_or(kOne), kZero};
    case Preset::MizunoSato: {
      if (arc.tau && arc.upsilon && *arc.tau != *arc.upsilon)
        fail(where + ": MIZUNO_SATO requires tau == upsilon");
      QPoly w = arc.tau ? *arc.tau : arc.upsilon.value_or(kOne);
      return {w, w};
    }
    case Preset::Sato:
      if (arc.upsilon && *arc.upsilon != kOne) reject("upsilon", kOne);
      return {arc.tau.value_or(kOne), kOne};
    case Preset::Bartholdi: {
      QPoly expected = eval_q ? QPoly(Rational(1) - *eval_q) : kOneMinusQ;
      if (arc.tau && *arc.tau != kOne) reject("tau", kOne);
      if (arc.upsilon && *arc.upsilon != expected) reject("upsilon", expected);
      return {kOne, expected};
    }
  }
  fail(where + ": unknown preset");
}

} // namespace

ParsedInput parse_spec(const std::string& text, const ParseOverrides& overrides) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document must be a JSON object");
  require_keys(doc, "document", {"version", "vertices", "scheme", "arcs", "edges"});

  if (doc.contains("version")) {
    if (!doc["version"].is_number_integer() || doc["version"].get<int>() != 1)
      fail("document: unsupported version (expected 1)");
  }

  // Vertices.
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    fail("document: 'vertices' must be an array of names");
  std::vector<std::string> names;
  std::map<std::string, int> index_of;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) fail("vertices: entries must be strings");
    std::string name = v.get<std::string>();
    if (name.empty()) fail("vertices: names must be non-empty");
    if (index_of.count(name)) fail("vertices: duplicate name '" + name + "'");
    index_of[name] = static_cast<int>(names.size());
    names.push_back(name);
  }
  auto vertex = [&](const std::string& name, const std::string& where) {
    auto it = index_of.find(name);
    if (it == index_of.end()) fail(where + ": unknown vertex '" + name + "'");
    return it->second;
  };

  // Scheme.
  Preset preset = Preset::General;
  std::optional<Rational> doc_q;
  if (doc.contains("scheme")) {
    const json& s = doc["scheme"];
    if (!s.is_object()) fail("scheme: must be an object");
    require_keys(s, "scheme", {"preset", "q"});
    if (s.contains("preset")) {
      std::string name = get_string(s, "scheme", "preset");
      auto p = preset_from_name(name);
      if (!p) fail("scheme: unknown preset '" + name + "'");
      preset = *p;
    }
    if (s.contains("q")) {
      std::string qtext = get_string(s, "scheme", "q");
      auto q = Rational::parse(qtext);
      if (!q) fail("scheme: malformed rational q '" + qtext + "'");
      doc_q = *q;
    }
  }
  if (overrides.preset) preset = *overrides.preset;
  std::optional<Rational> eval_q = overrides.eval_q ? overrides.eval_q : doc_q;
  if (eval_q && preset != Preset::Bartholdi)
    fail("q evaluation only applies to the BARTHOLDI preset");

  // Arcs / edges.
  const bool has_arcs = doc.contains("arcs");
  const bool has_edges = doc.contains("edges");
  if (has_arcs == has_edges)
    fail("document: exactly one of 'arcs' or 'edges' is required");

  std::vector<RawArc> raw;
  std::vector<Arc> arcs;
  std::optional<Graph> graph;
  std::vector<std::pair<int, int>> edge_list;

  if (has_arcs) {
    if (!doc["arcs"].is_array()) fail("document: 'arcs' must be an array");
    int index = 0;
    for (const auto& a : doc["arcs"]) {
      std::string where = "arcs[" + std::to_string(index) + "]";
      if (!a.is_object()) fail(where + ": must be an object");
      require_keys(a, where, {"id", "tail", "head", "tau", "upsilon"});
      if (a.contains("id")) {
        if (!a["id"].is_number_integer() || a["id"].get<int>() != index)
          fail(where + ": 'id' must equal the arc's position " + std::to_string(index));
      }
      RawArc r;
      r.tail = vertex(get_string(a, where, "tail"), where);
      r.head = vertex(get_string(a, where, "head"), where);
      r.tau = get_weight(a, where, "tau");
      r.upsilon = get_weight(a, where, "upsilon");
      raw.push_back(r);
      arcs.push_back({r.tail, r.head});
      ++index;
    }
  } else {
    if (!doc["edges"].is_array()) fail("document: 'edges' must be an array");
    int index = 0;
    for (const auto& e : doc["edges"]) {
      std::string where = "edges[" + std::to_string(index) + "]";
      if (!e.is_object()) fail(where + ": must be an object");
      require_keys(e, where, {"ends", "tau", "upsilon", "tau_rev", "upsilon_rev"});
      if (!e.contains("ends") || !e["ends"].is_array() || e["ends"].size() != 2 ||
          !e["ends"][0].is_string() || !e["ends"][1].is_string())
        fail(where + ": 'ends' must be a pair of vertex names");
      int u = vertex(e["ends"][0].get<std::string>(), where);
      int v = vertex(e["ends"][1].get<std::string>(), where);
      RawArc fwd;
      fwd.tail = u;
      fwd.head = v;
      fwd.tau = get_weight(e, where, "tau");
      fwd.upsilon = get_weight(e, where, "upsilon");
      if (u == v) {
        if (e.contains("tau_rev") || e.contains("upsilon_rev"))
          fail(where + ": a loop has no reverse arc");
        raw.push_back(fwd);
        arcs.push_back({u, u});
      } else {
        RawArc rev;
        rev.tail = v;
        rev.head = u;
        rev.tau = get_weight(e, where, "tau_rev");
        rev.upsilon = get_weight(e, where, "upsilon_rev");
        if (!rev.tau) rev.tau = fwd.tau;
        if (!rev.upsilon) rev.upsilon = fwd.upsilon;
        raw.push_back(fwd);
        raw.push_back(rev);
        arcs.push_back({u, v});
        arcs.push_back({v, u});
      }
      edge_list.emplace_back(u, v);
      ++index;
    }
    graph = Graph(static_cast<int>(names.size()), edge_list);
  }

  // Resolve weights under the preset.
  bool literal_q = false;
  for (const RawArc& r : raw)
    if ((r.tau && r.tau->degree() > 0) || (r.upsilon && r.upsilon->degree() > 0))
      literal_q = true;
  if (literal_q && eval_q)
    fail("weights contain a literal q; that cannot be combined with q evaluation");
  std::vector<QPoly> tau, upsilon;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::string where = (has_arcs ? "arcs[" : "resolved arcs[") + std::to_string(i) + "]";
    auto [t, u] = resolve_weights(preset, raw[i], where, eval_q);
    tau.push_back(std::move(t));
    upsilon.push_back(std::move(u));
  }

  ParsedInput input;
  input.digraph = Digraph(static_cast<int>(names.size()), std::move(arcs));
  input.graph = std::move(graph);
  input.vertex_names = std::move(names);
  input.preset = preset;
  input.q_value = eval_q;
  input.symbolic = (literal_q || preset == Preset::Bartholdi) && !eval_q;

  if (input.symbolic) {
    input.scheme_qq.preset = preset;
    for (std::size_t i = 0; i < tau.size(); ++i) {
      input.scheme_qq.tau.emplace_back(tau[i]);
      input.scheme_qq.upsilon.emplace_back(upsilon[i]);
    }
    input.scheme_label = preset_name(preset);
  } else {
    Rational q = eval_q.value_or(Rational(0));
    input.scheme_q.preset = preset;
    for (std::size_t i = 0; i < tau.size(); ++i) {
      input.scheme_q.tau.push_back(tau[i].eval(q));
      input.scheme_q.upsilon.push_back(upsilon[i].eval(q));
    }
    input.scheme_label = preset_name(preset);
    if (eval_q) input.scheme_label += "(q=" + eval_q->to_string() + ")";
  }

  // Forward-arc tau matrix for the weighted classical forms.
  if (input.graph && !input.symbolic) {
    const std::size_t n = input.vertex_names.size();
    Matrix<Rational> w(n, n);
    for (int a = 0; a < input.digraph.arc_count(); ++a)
      w(static_cast<std::size_t>(input.digraph.tail(a)),
        static_cast<std::size_t>(input.digraph.head(a))) +=
          input.scheme_q.tau[static_cast<std::size_t>(a)];
    input.edge_tau = std::move(w);
  }
  return input;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {

std::string weight_text(bool symbolic, const ParsedInput& input, std::size_t arc,
                        bool upsilon) {
  if (symbolic) {
    const QRat& w = upsilon ? input.scheme_qq.upsilon[arc] : input.scheme_qq.tau[arc];
    return format_ratfunc(w, 'q');
  }
  const Rational& w = upsilon ? input.scheme_q.upsilon[arc] : input.scheme_q.tau[arc];
  return w.to_string();
}

} // namespace

std::string serialize_spec(const ParsedInput& input) {
  ordered_json doc;
  doc["version"] = 1;
  doc["vertices"] = input.vertex_names;
  ordered_json scheme;
  scheme["preset"] = preset_name(input.preset);
  if (input.q_value) scheme["q"] = input.q_value->to_string();
  doc["scheme"] = scheme;

  if (input.graph) {
    ordered_json edges = ordered_json::array();
    std::size_t arc = 0;
    for (const auto& [u, v] : input.graph->edges) {
      // Ends come from the forward arc, which preserves the document's
      // orientation; the stored edge pair is endpoint-normalized.
      ordered_json e;
      int tail = input.digraph.tail(static_cast<int>(arc));
      int head = input.digraph.head(static_cast<int>(arc));
      e["ends"] = {input.vertex_names[static_cast<std::size_t>(tail)],
                   input.vertex_names[static_cast<std::size_t>(head)]};
      e["tau"] = weight_text(input.symbolic, input, arc, false);
      e["upsilon"] = weight_text(input.symbolic, input, arc, true);
      if (u != v) {
        e["tau_rev"] = weight_text(input.symbolic, input, arc + 1, false);
        e["upsilon_rev"] = weight_text(input.symbolic, input, arc + 1, true);
        arc += 2;
      } else {
        arc += 1;
      }
      edges.push_back(e);
    }
    doc["edges"] = edges;
  } else {
    ordered_json arcs = ordered_json::array();
    for (int a = 0; a < input.digraph.arc_count(); ++a) {
      ordered_json entry;
      entry["tail"] = input.vertex_names[static_cast<std::size_t>(input.digraph.tail(a))];
      entry["head"] = input.vertex_names[static_cast<std::size_t>(input.digraph.head(a))];
      entry["tau"] = weight_text(input.symbolic, input, static_cast<std::size_t>(a), false);
      entry["upsilon"] = weight_text(input.symbolic, input, static_cast<std::size_t>(a), true);
      arcs.push_back(entry);
    }
    doc["arcs"] = arcs;
  }
  return doc.dump(2) + "\n";
}

} // namespace graphzeta
