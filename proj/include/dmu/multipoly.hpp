#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dmu/rational.hpp"

namespace dmu {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order: higher total degree first, then lex on exponents.
struct GrLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Q with named variables.
///
/// The variable list is kept sorted by name (letters, then numeric suffix) so
/// two polynomials over the same names have identical layouts. Binary
/// operations extend both operands to the union of their variables. Zero
/// coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rational, GrLexGreater>;

  MultiPoly() = default;
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& c);                  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(std::string_view name);
  static MultiPoly monomial(const Rational& c, const std::vector<std::pair<std::string, unsigned>>& powers);

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the empty monomial.
  Rational constant_term() const;
  std::size_t term_count() const { return terms_.size(); }

  unsigned degree_in(std::string_view var) const;
  unsigned min_degree_in(std::string_view var) const;
  unsigned total_degree() const;
  /// Lowest total degree of any term; 0 for the zero polynomial.
  unsigned min_total_degree() const;
  bool depends_on(std::string_view var) const;
  /// Variables with a positive exponent somewhere, in canonical order.
  std::vector<std::string> support() const;

  /// Coefficient of var^k, as a polynomial in the remaining variables.
  MultiPoly coefficient_in(std::string_view var, unsigned k) const;
  /// Coefficients of var^0 .. var^deg.
  std::vector<MultiPoly> coefficients_in(std::string_view var) const;

  MultiPoly derivative(std::string_view var) const;
  MultiPoly substitute(std::string_view var, const MultiPoly& value) const;
  MultiPoly pow(unsigned e) const;
  /// Total evaluation; throws std::invalid_argument if a variable is unbound.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  /// Drops variables that no term uses.
  MultiPoly trimmed() const;

  /// gcd of the integer-cleared coefficients with the sign of the leading
  /// term, so primitive() has coprime integer coefficients and a positive
  /// leading coefficient.
  Rational content() const;
  MultiPoly primitive() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator-(const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Canonical graded-lex rendering, e.g. "-4*b1^3 - 27*b2^2".
  std::string to_string() const;
  /// Content factored out: "-1 * (4*b1^3 + 27*b2^2)".
  std::string to_cleared_string() const;

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

 private:
  void extend_to(const std::vector<std::string>& vars);
  std::ptrdiff_t index_of(std::string_view var) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

/// Canonical variable order: alphabetic prefix, then numeric suffix.
bool variable_less(std::string_view a, std::string_view b);

/// a / b when b divides a exactly; throws Error(InexactDivision) otherwise.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Greatest common divisor over Q, normalized to be primitive with a positive
/// leading coefficient; gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Pseudo-remainder of a by b with respect to var.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::string_view var);

}  // namespace dmu
