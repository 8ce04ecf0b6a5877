#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dmu/core.hpp"
#include "dmu/multipoly.hpp"

namespace dmu {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
MultiPoly determinant(PolyMatrix m);

/// Sylvester matrix of f and g in var: deg(g) shifted rows of f's
/// coefficients followed by deg(f) shifted rows of g's.
PolyMatrix sylvester_matrix(const MultiPoly& f, const MultiPoly& g, std::string_view var);

/// det of the Sylvester matrix, so Res(X - a, X - b) = a - b.
/// Throws Error(ZeroLeadingCoefficient) if f or g is the zero polynomial.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::string_view var);

inline constexpr unsigned kMinDeflatedDegree = 2;
inline constexpr unsigned kMaxDeflatedDegree = 6;

/// X^m + b1 X^(m-2) + ... + b_(m-1).
MultiPoly deflated_polynomial(unsigned m, std::string_view var = "X");

/// (-1)^(m(m-1)/2) Res(p, p') for the deflated polynomial of degree m, in
/// b1 .. b_(m-1). Throws Error(UnsupportedDegree) outside [2, 6].
MultiPoly deflated_discriminant(unsigned m);

/// Set of weighted degrees of the terms under wt(b_k) = k + 1; a single
/// element means weighted homogeneous.
std::set<unsigned> weighted_degrees(const MultiPoly& p);

/// True iff g is nonzero and shares no factor with all of its partials at
/// once, i.e. g has no repeated irreducible factor.
bool is_squarefree(const MultiPoly& g);

enum class ChartVerdict { Transversal, Tangential, EmptyIntersection };

std::string_view to_string(ChartVerdict v);

/// Chart j of the blow-up of the b-origin: b_j = t, b_i = t c_i otherwise,
/// D = t^mu * D~ with t not dividing D~, g = D~ at t = 0.
struct ChartReport {
  std::size_t chart_index = 0;
  unsigned exceptional_multiplicity = 0;
  MultiPoly restriction;
  bool squarefree = false;
  ChartVerdict verdict = ChartVerdict::EmptyIntersection;
};

/// D is a polynomial in b1 .. b_k where k is the largest b-index present;
/// requires 1 <= j <= k.
ChartReport blowup_chart(const MultiPoly& d, std::size_t j);

enum class Transversality { Transversal, NonTransversal };

std::string_view to_string(Transversality t);

struct TransversalityReport {
  unsigned m = 0;
  MultiPoly discriminant;
  std::vector<ChartReport> charts;
  Transversality verdict = Transversality::Transversal;
};

/// NonTransversal iff some chart of deflated_discriminant(m) is Tangential.
TransversalityReport transversality(unsigned m);

/// Symbolic certificate for a pair, assembled from every discriminant factor
/// of every Luna local model.
struct PairCertificate {
  Transversality verdict = Transversality::Transversal;
  std::vector<unsigned> degrees;             // distinct factor degrees, ascending
  std::vector<unsigned> tangential_degrees;  // those reported NonTransversal
  std::size_t swap_points = 0;               // verdict is pre-quotient there
};

/// Caches one report per degree so a catalog sweep computes each
/// discriminant once. Not safe for concurrent use; give each thread its own.
class TransversalityCertifier {
 public:
  const TransversalityReport& report(unsigned m);
  PairCertificate certify(const DMPair& p);

 private:
  std::map<unsigned, TransversalityReport> cache_;
};

PairCertificate certify_pair(const DMPair& p);

}  // namespace dmu
