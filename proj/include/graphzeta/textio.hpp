#pragma once

#include "graphzeta/polynomial.hpp"
#include "graphzeta/rational.hpp"
#include "graphzeta/rational_function.hpp"

#include <string>
#include <vector>

namespace graphzeta {

/// Canonical human-readable rendering: ascending powers, zero terms skipped,
/// unit coefficients folded into the variable, e.g. "1 - 2*t^2 + t^4".
std::string format_poly(const UniPoly<Rational>& p, char var);

/// Rendering over Q(q): symbolic coefficients are parenthesized, e.g.
/// "1 + (1 - q)*t - q*t^2".  tvar is the outer variable, qvar the inner.
std::string format_poly(const UniPoly<QRat>& p, char tvar, char qvar = 'q');

/// "num" when the denominator is trivial, otherwise "(num)/(den)".
std::string format_ratfunc(const QRat& f, char var);

/// Exact coefficient string: "p" / "p/q" over Q, polynomial or ratio text
/// over Q(q).  These strings are what the machine-readable output carries.
std::string coeff_string(const Rational& c);
std::string coeff_string(const QRat& c);

/// Comma-joined coefficient row c0,c1,...,cT.
std::string coeff_row(const std::vector<Rational>& coeffs);
std::string coeff_row(const std::vector<QRat>& coeffs);

/// Ascending coefficient list of p padded with zeros up to `count` entries.
template <FieldScalar K>
std::vector<K> padded_coeffs(const UniPoly<K>& p, std::size_t count) {
  std::vector<K> c;
  c.reserve(count);
  for (std::size_t i = 0; i < count; ++i) c.push_back(p.coeff(i));
  return c;
}

} // namespace graphzeta
