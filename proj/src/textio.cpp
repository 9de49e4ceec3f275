#include "graphzeta/textio.hpp"

#include <cstddef>

namespace graphzeta {

namespace {

std::string power_text(char var, std::size_t i) {
  if (i == 0) return "";
  if (i == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(i);
}

/// One rendered term and whether it should be joined with '-' (sign already
/// stripped from the text).
struct Term {
  std::string text;
  bool negative = false;
};

Term rational_term(const Rational& c, char var, std::size_t i) {
  Rational mag = c.sign() < 0 ? -c : c;
  std::string pow = power_text(var, i);
  if (pow.empty()) return {mag.to_string(), c.sign() < 0};
  if (mag.is_one()) return {pow, c.sign() < 0};
  return {mag.to_string() + "*" + pow, c.sign() < 0};
}

std::string join_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0)
      out += terms[i].negative ? "-" : "";
    else
      out += terms[i].negative ? " - " : " + ";
    out += terms[i].text;
  }
  return out;
}

/// True when the coefficient is a plain element of Q inside Q(q).
bool is_plain_rational(const QRat& c) {
  return c.den().is_one() && c.num().degree() <= 0;
}

} // namespace

std::string format_poly(const UniPoly<Rational>& p, char var) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(p.degree(), 0)); ++i) {
    Rational c = p.coeff(i);
    if (c.is_zero()) continue;
    terms.push_back(rational_term(c, var, i));
  }
  return join_terms(terms);
}

std::string format_ratfunc(const QRat& f, char var) {
  if (f.den().is_one()) return format_poly(f.num(), var);
  return "(" + format_poly(f.num(), var) + ")/(" + format_poly(f.den(), var) + ")";
}

std::string format_poly(const UniPoly<QRat>& p, char tvar, char qvar) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(p.degree(), 0)); ++i) {
    QRat c = p.coeff(i);
    if (c.is_zero()) continue;
    if (is_plain_rational(c)) {
      terms.push_back(rational_term(c.num().coeff(0), tvar, i));
      continue;
    }
    // Symbolic coefficient: single q-monomials keep their sign, anything
    // larger is parenthesized and joined positively.
    std::string pow = power_text(tvar, i);
    bool monomial = c.den().is_one() && [&] {
      int nonzero = 0;
      for (const Rational& x : c.num().coeffs())
        if (!x.is_zero()) ++nonzero;
      return nonzero == 1;
    }();
    if (monomial) {
      std::size_t deg = static_cast<std::size_t>(c.num().degree());
      Rational lead = c.num().leading();
      Rational mag = lead.sign() < 0 ? -lead : lead;
      std::string body = mag.is_one() ? power_text(qvar, deg)
                                      : mag.to_string() + "*" + power_text(qvar, deg);
      if (!pow.empty()) body += "*" + pow;
      terms.push_back({body, lead.sign() < 0});
    } else {
      std::string body = "(" + format_ratfunc(c, qvar) + ")";
      if (!pow.empty()) body += "*" + pow;
      terms.push_back({body, false});
    }
  }
  return join_terms(terms);
}

std::string coeff_string(const Rational& c) { return c.to_string(); }

std::string coeff_string(const QRat& c) { return format_ratfunc(c, 'q'); }

std::string coeff_row(const std::vector<Rational>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ',';
    out += coeff_string(coeffs[i]);
  }
  return out;
}

std::string coeff_row(const std::vector<QRat>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ',';
    out += coeff_string(coeffs[i]);
  }
  return out;
}

} // namespace graphzeta
