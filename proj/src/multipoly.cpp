#include "dmu/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dmu/error.hpp"

namespace dmu {

namespace {

unsigned total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

std::pair<std::string_view, std::string_view> split_name(std::string_view s) {
  std::size_t k = s.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
  return {s.substr(0, k), s.substr(k)};
}

std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                 [](const std::string& x, const std::string& y) { return variable_less(x, y); });
  return out;
}

void add_term(MultiPoly::Terms& terms, const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

}  // namespace

bool variable_less(std::string_view a, std::string_view b) {
  const auto [pa, na] = split_name(a);
  const auto [pb, nb] = split_name(b);
  if (pa != pb) return pa < pb;
  if (na.size() != nb.size()) return na.size() < nb.size();
  return na < nb;
}

bool GrLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned ta = total(a), tb = total(b);
  if (ta != tb) return ta > tb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::variable(std::string_view name) {
  MultiPoly p;
  p.vars_.emplace_back(name);
  p.terms_.emplace(Exponents{1}, Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(const Rational& c, const std::vector<std::pair<std::string, unsigned>>& powers) {
  MultiPoly p(c);
  for (const auto& [name, e] : powers) p *= variable(name).pow(e);
  return p;
}

void MultiPoly::extend_to(const std::vector<std::string>& vars) {
  if (vars == vars_) return;
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i)
    where[i] = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), vars_[i]) - vars.begin());
  Terms out;
  for (const auto& [e, c] : terms_) {
    Exponents f(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
    out.emplace(std::move(f), c);
  }
  vars_ = vars;
  terms_ = std::move(out);
}

std::ptrdiff_t MultiPoly::index_of(std::string_view var) const {
  const auto it = std::find(vars_.begin(), vars_.end(), var);
  return it == vars_.end() ? -1 : it - vars_.begin();
}

bool MultiPoly::is_constant() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return total(t.first) == 0; });
}

Rational MultiPoly::constant_term() const {
  for (const auto& [e, c] : terms_)
    if (total(e) == 0) return c;
  return Rational(0);
}

unsigned MultiPoly::degree_in(std::string_view var) const {
  const auto k = index_of(var);
  unsigned d = 0;
  if (k < 0) return 0;
  for (const auto& t : terms_) d = std::max(d, t.first[static_cast<std::size_t>(k)]);
  return d;
}

unsigned MultiPoly::min_degree_in(std::string_view var) const {
  const auto k = index_of(var);
  if (k < 0 || terms_.empty()) return 0;
  unsigned d = ~0u;
  for (const auto& t : terms_) d = std::min(d, t.first[static_cast<std::size_t>(k)]);
  return d;
}

unsigned MultiPoly::total_degree() const { return terms_.empty() ? 0 : total(terms_.begin()->first); }

unsigned MultiPoly::min_total_degree() const { return terms_.empty() ? 0 : total(terms_.rbegin()->first); }

bool MultiPoly::depends_on(std::string_view var) const { return degree_in(var) > 0; }

std::vector<std::string> MultiPoly::support() const {
  std::vector<std::string> out;
  for (const auto& v : vars_)
    if (depends_on(v)) out.push_back(v);
  return out;
}

MultiPoly MultiPoly::coefficient_in(std::string_view var, unsigned k) const {
  const auto idx = index_of(var);
  MultiPoly out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    const unsigned have = idx < 0 ? 0 : e[static_cast<std::size_t>(idx)];
    if (have != k) continue;
    Exponents f = e;
    if (idx >= 0) f[static_cast<std::size_t>(idx)] = 0;
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::string_view var) const {
  std::vector<MultiPoly> out;
  const unsigned d = degree_in(var);
  for (unsigned k = 0; k <= d; ++k) out.push_back(coefficient_in(var, k));
  return out;
}

MultiPoly MultiPoly::derivative(std::string_view var) const {
  const auto idx = index_of(var);
  MultiPoly out;
  out.vars_ = vars_;
  if (idx < 0) return out;
  const auto k = static_cast<std::size_t>(idx);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents f = e;
    --f[k];
    add_term(out.terms_, f, c * Rational(static_cast<long>(e[k])));
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::string_view var, const MultiPoly& value) const {
  const auto idx = index_of(var);
  if (idx < 0) return *this;
  const auto k = static_cast<std::size_t>(idx);
  std::vector<MultiPoly> powers{MultiPoly(1)};
  MultiPoly out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[k]) powers.push_back(powers.back() * value);
    MultiPoly rest;
    rest.vars_ = vars_;
    Exponents f = e;
    f[k] = 0;
    rest.terms_.emplace(std::move(f), c);
    out += rest * powers[e[k]];
  }
  return out.trimmed();
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& values) const {
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const auto it = values.find(vars_[i]);
      if (it == values.end()) throw std::invalid_argument("unbound variable " + vars_[i]);
      term *= it->second.pow(e[i]);
    }
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::trimmed() const {
  std::vector<std::string> keep;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[i] > 0; })) {
      keep.push_back(vars_[i]);
      idx.push_back(i);
    }
  }
  if (keep.size() == vars_.size()) return *this;
  MultiPoly out;
  out.vars_ = std::move(keep);
  for (const auto& [e, c] : terms_) {
    Exponents f;
    for (auto i : idx) f.push_back(e[i]);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return Rational(0);
  mpz_class num = 0, den = 1;
  for (const auto& [e, c] : terms_) {
    num = dmu::gcd(num, c.numerator());
    den = dmu::lcm(den, c.denominator());
  }
  Rational r(num, den);
  return terms_.begin()->second.sign() < 0 ? -r : r;
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return *this;
  return *this * MultiPoly(content().inverse());
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  MultiPoly rhs = o;
  const auto vars = merged(vars_, o.vars_);
  extend_to(vars);
  rhs.extend_to(vars);
  for (const auto& [e, c] : rhs.terms_) add_term(terms_, e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  MultiPoly rhs = o;
  const auto vars = merged(vars_, o.vars_);
  extend_to(vars);
  rhs.extend_to(vars);
  Terms out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e(vars.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(out, e, ca * cb);
    }
  }
  terms_ = std::move(out);
  return *this;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out = a;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  const MultiPoly x = a.trimmed(), y = b.trimmed();
  return x.vars_ == y.vars_ && x.terms_ == y.terms_;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const Rational mag = first ? c : c.abs();
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mono << (any ? "*" : "") << vars_[i];
      if (e[i] > 1) mono << '^' << e[i];
      any = true;
    }
    if (!any)
      os << mag;
    else if (mag == Rational(1))
      os << mono.str();
    else if (mag == Rational(-1))
      os << '-' << mono.str();
    else
      os << mag << '*' << mono.str();
    first = false;
  }
  return os.str();
}

std::string MultiPoly::to_cleared_string() const {
  if (terms_.empty()) return "0";
  const Rational c = content();
  const MultiPoly p = primitive();
  if (p.is_constant()) return c.to_string();
  if (c == Rational(1)) return p.to_string();
  return c.to_string() + " * (" + p.to_string() + ")";
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InexactDivision, "division by zero polynomial");
  // Adding an empty product aligns both operands on the union of variables.
  MultiPoly r = a, q, d = b;
  d += r * MultiPoly(0);
  r += d * MultiPoly(0);
  const auto& [lb, cb] = *d.terms().begin();
  while (!r.is_zero()) {
    const auto& [lr, cr] = *r.terms().begin();
    Exponents e(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      if (lr[i] < lb[i]) throw Error(ErrorCode::InexactDivision, a.to_string() + " / " + b.to_string());
      e[i] = lr[i] - lb[i];
    }
    std::vector<std::pair<std::string, unsigned>> powers;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) powers.emplace_back(r.variables()[i], e[i]);
    const MultiPoly m = MultiPoly::monomial(cr / cb, powers);
    q += m;
    r -= m * d;
  }
  return q.trimmed();
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::string_view var) {
  const unsigned db = b.degree_in(var);
  const MultiPoly lb = b.coefficient_in(var, db);
  const MultiPoly x = MultiPoly::variable(var);
  MultiPoly r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const unsigned dr = r.degree_in(var);
    r = lb * r - r.coefficient_in(var, dr) * x.pow(dr - db) * b;
  }
  return r.trimmed();
}

namespace {

MultiPoly content_in(const MultiPoly& p, std::string_view var) {
  MultiPoly g;
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return MultiPoly(1);
  }
  return g;
}

MultiPoly primitive_in(const MultiPoly& p, std::string_view var) {
  return p.is_zero() ? p : divide_exact(p, content_in(p, var));
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.primitive().trimmed();
  if (b.is_zero()) return a.primitive().trimmed();
  auto vars = merged(a.support(), b.support());
  if (vars.empty()) return MultiPoly(1);
  const std::string x = vars.front();
  const MultiPoly ca = content_in(a, x), cb = content_in(b, x);
  const MultiPoly c = gcd(ca, cb);
  MultiPoly f = divide_exact(a, ca), g = divide_exact(b, cb);
  if (f.degree_in(x) < g.degree_in(x)) std::swap(f, g);
  // Primitive polynomial remainder sequence in x over Q[other variables].
  while (!g.is_zero()) {
    MultiPoly r = pseudo_remainder(f, g, x);
    f = std::move(g);
    g = primitive_in(r, x);
  }
  const MultiPoly h = f.degree_in(x) == 0 ? MultiPoly(1) : primitive_in(f, x);
  return (c * h).primitive().trimmed();
}

}  // namespace dmu
