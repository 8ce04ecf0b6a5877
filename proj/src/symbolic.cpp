#include "dmu/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

#include "dmu/error.hpp"
#include "dmu/git_stability.hpp"

namespace dmu {

namespace {

std::string b_name(std::size_t k) { return "b" + std::to_string(k); }
std::string c_name(std::size_t k) { return "c" + std::to_string(k); }

/// k for a variable named b<k>, 0 otherwise.
std::size_t b_index(const std::string& v) {
  if (v.size() < 2 || v[0] != 'b') return 0;
  if (!std::all_of(v.begin() + 1, v.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) return 0;
  return static_cast<std::size_t>(std::stoul(v.substr(1)));
}

}  // namespace

MultiPoly determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly(1);
  int sign = 1;
  MultiPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return MultiPoly(0);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = MultiPoly(0);
    }
    prev = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

PolyMatrix sylvester_matrix(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
  const auto fc = f.coefficients_in(var);
  const auto gc = g.coefficients_in(var);
  const std::size_t p = fc.size() - 1, q = gc.size() - 1, n = p + q;
  PolyMatrix s(n, std::vector<MultiPoly>(n));
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t k = 0; k <= p; ++k) s[r][r + k] = fc[p - k];
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t k = 0; k <= q; ++k) s[q + r][r + k] = gc[q - k];
  return s;
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroLeadingCoefficient, "resultant of the zero polynomial");
  return determinant(sylvester_matrix(f, g, var)).trimmed();
}

MultiPoly deflated_polynomial(unsigned m, std::string_view var) {
  const MultiPoly x = MultiPoly::variable(var);
  MultiPoly p = x.pow(m);
  for (unsigned k = 1; k + 1 <= m; ++k) p += MultiPoly::variable(b_name(k)) * x.pow(m - 1 - k);
  return p;
}

MultiPoly deflated_discriminant(unsigned m) {
  if (m < kMinDeflatedDegree || m > kMaxDeflatedDegree)
    throw Error(ErrorCode::UnsupportedDegree, "deflated degree " + std::to_string(m) + " outside [2, 6]");
  const MultiPoly p = deflated_polynomial(m);
  const MultiPoly res = resultant(p, p.derivative("X"), "X");
  return (m * (m - 1) / 2) % 2 == 1 ? -res : res;
}

std::set<unsigned> weighted_degrees(const MultiPoly& p) {
  std::set<unsigned> out;
  const auto& vars = p.variables();
  for (const auto& [e, c] : p.terms()) {
    unsigned d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const auto k = b_index(vars[i]);
      if (k == 0 && e[i] > 0) throw std::invalid_argument("weighted degree needs b-variables, got " + vars[i]);
      d += e[i] * static_cast<unsigned>(k + 1);
    }
    out.insert(d);
  }
  return out;
}

bool is_squarefree(const MultiPoly& g) {
  if (g.is_zero()) return false;
  if (g.is_constant()) return true;
  MultiPoly h = g;
  for (const auto& v : g.support()) {
    h = gcd(h, g.derivative(v));
    if (h.is_constant()) return true;
  }
  return h.is_constant();
}

std::string_view to_string(ChartVerdict v) {
  switch (v) {
    case ChartVerdict::Transversal: return "transversal";
    case ChartVerdict::Tangential: return "tangential";
    case ChartVerdict::EmptyIntersection: return "empty_intersection";
  }
  return "?";
}

ChartReport blowup_chart(const MultiPoly& d, std::size_t j) {
  std::size_t k = 0;
  for (const auto& v : d.variables()) k = std::max(k, b_index(v));
  if (j < 1 || j > k) throw std::invalid_argument("chart index " + std::to_string(j) + " outside [1, " + std::to_string(k) + "]");
  const MultiPoly t = MultiPoly::variable("t");
  MultiPoly e = d;
  for (std::size_t i = 1; i <= k; ++i)
    e = e.substitute(b_name(i), i == j ? t : t * MultiPoly::variable(c_name(i)));
  ChartReport r;
  r.chart_index = j;
  r.exceptional_multiplicity = e.min_degree_in("t");
  const MultiPoly reduced = divide_exact(e, t.pow(r.exceptional_multiplicity));
  r.restriction = reduced.substitute("t", MultiPoly(0));
  r.squarefree = is_squarefree(r.restriction);
  if (r.restriction.is_zero())
    r.verdict = ChartVerdict::Tangential;
  else if (r.restriction.is_constant())
    r.verdict = ChartVerdict::EmptyIntersection;
  else
    r.verdict = r.squarefree ? ChartVerdict::Transversal : ChartVerdict::Tangential;
  return r;
}

std::string_view to_string(Transversality t) {
  return t == Transversality::Transversal ? "transversal" : "non_transversal";
}

TransversalityReport transversality(unsigned m) {
  TransversalityReport rep;
  rep.m = m;
  rep.discriminant = deflated_discriminant(m);
  for (std::size_t j = 1; j + 1 <= m; ++j) {
    rep.charts.push_back(blowup_chart(rep.discriminant, j));
    if (rep.charts.back().verdict == ChartVerdict::Tangential) rep.verdict = Transversality::NonTransversal;
  }
  return rep;
}

const TransversalityReport& TransversalityCertifier::report(unsigned m) {
  auto it = cache_.find(m);
  if (it == cache_.end()) it = cache_.emplace(m, transversality(m)).first;
  return it->second;
}

PairCertificate TransversalityCertifier::certify(const DMPair& p) {
  PairCertificate cert;
  std::set<unsigned> degrees;
  for (const auto& q : polystable_points(p)) {
    const LocalModel lm = luna_local_model(p, q);
    if (lm.swap_identified) ++cert.swap_points;
    for (auto m : lm.disc_factors) degrees.insert(static_cast<unsigned>(m));
  }
  for (auto m : degrees) {
    cert.degrees.push_back(m);
    if (report(m).verdict == Transversality::NonTransversal) {
      cert.tangential_degrees.push_back(m);
      cert.verdict = Transversality::NonTransversal;
    }
  }
  return cert;
}

PairCertificate certify_pair(const DMPair& p) {
  TransversalityCertifier c;
  return c.certify(p);
}

}  // namespace dmu
