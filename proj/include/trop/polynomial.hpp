#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "trop/simplex.hpp"

namespace trop {

/// Exponent vector; positional with respect to the ring's variable list.
using Monomial = std::vector<int>;

inline int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    m[i] = std::max(a[i], b[i]);
  return m;
}

inline IntVec toIntVec(const Monomial& m) {
  IntVec v;
  v.reserve(m.size());
  for (int e : m)
    v.emplace_back(e);
  return v;
}

/// Higher total degree first, then lexicographically larger first.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = degree(a), db = degree(b);
    if (da != db)
      return da > db;
    return a > b;
  }
};

inline bool isValidVariableName(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
    return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

inline void checkVariables(const std::vector<std::string>& vars) {
  if (vars.empty())
    throw Error(ErrorKind::Parse, "variable list is empty");
  std::set<std::string> seen;
  for (const std::string& v : vars) {
    if (!isValidVariableName(v))
      throw Error(ErrorKind::Parse, "invalid variable name '" + v + "'");
    if (!seen.insert(v).second)
      throw Error(ErrorKind::Parse, "duplicate variable name '" + v + "'");
  }
}

/// Multivariate polynomial over Q with named, ordered variables. Zero
/// coefficients are never stored; iteration is in graded lexicographic order,
/// largest monomial first.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Polynomial constant(std::vector<std::string> vars, const Rational& c) {
    Polynomial p(std::move(vars));
    p.addTerm(Monomial(p.vars_.size(), 0), c);
    return p;
  }

  static Polynomial variable(std::vector<std::string> vars, std::size_t index) {
    Polynomial p(std::move(vars));
    Monomial m(p.vars_.size(), 0);
    m.at(index) = 1;
    p.addTerm(m, 1);
    return p;
  }

  static Polynomial monomial(std::vector<std::string> vars, Monomial exps, const Rational& c = 1) {
    Polynomial p(std::move(vars));
    p.addTerm(std::move(exps), c);
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t numVariables() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t numTerms() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  bool isMonomial() const { return terms_.size() == 1; }

  void addTerm(Monomial m, const Rational& c) {
    if (m.size() != vars_.size())
      throw Error(ErrorKind::DimMismatch, "exponent vector of length " + std::to_string(m.size()) +
                                              " for " + std::to_string(vars_.size()) + " variables");
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  std::vector<Monomial> support() const {
    std::vector<Monomial> s;
    for (const auto& [m, c] : terms_)
      s.push_back(m);
    return s;
  }

  /// Total degree; -1 for the zero polynomial.
  int totalDegree() const { return terms_.empty() ? -1 : degree(terms_.begin()->first); }

  bool isHomogeneous() const {
    for (const auto& [m, c] : terms_)
      if (degree(m) != totalDegree())
        return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& [m, c] : p.terms_)
      c = -c;
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) {
    sameRing(o);
    for (const auto& [m, c] : o.terms_)
      addTerm(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    sameRing(o);
    for (const auto& [m, c] : o.terms_)
      addTerm(m, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.sameRing(b);
    Polynomial p(a.vars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(ma.size());
        for (std::size_t i = 0; i < m.size(); ++i)
          m[i] = ma[i] + mb[i];
        p.addTerm(std::move(m), ca * cb);
      }
    return p;
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& a) {
    Polynomial p(a.vars_);
    for (const auto& [m, c] : a.terms_)
      p.addTerm(m, s * c);
    return p;
  }

  Polynomial pow(int k) const {
    Polynomial result = constant(vars_, 1);
    for (int i = 0; i < k; ++i)
      result = result * *this;
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Canonical text form, e.g. "x^2 - 3/2*x*y + 1"; readable by parsePolynomial.
  std::string toString() const {
    if (terms_.empty())
      return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational a = abs(c);
      if (first)
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
          continue;
        if (!mono.empty())
          mono += "*";
        mono += vars_[i];
        if (m[i] > 1)
          mono += "^" + std::to_string(m[i]);
      }
      if (mono.empty())
        s += a.get_str();
      else if (a == 1)
        s += mono;
      else
        s += a.get_str() + "*" + mono;
    }
    return s;
  }

private:
  void sameRing(const Polynomial& o) const {
    if (o.vars_ != vars_)
      throw Error(ErrorKind::DimMismatch, "polynomials over different variable lists");
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// A finite generating set over a shared variable list.
inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.toString(); }

struct IdealSpec {
  std::vector<std::string> variables;
  std::vector<Polynomial> generators;

  IdealSpec() = default;
  IdealSpec(std::vector<std::string> vars, std::vector<Polynomial> gens)
      : variables(std::move(vars)), generators(std::move(gens)) {
    for (const Polynomial& g : generators)
      if (g.variables() != variables)
        throw Error(ErrorKind::DimMismatch, "generator over a different variable list");
  }

  std::size_t numVariables() const { return variables.size(); }

  bool isHomogeneous() const {
    return std::all_of(generators.begin(), generators.end(),
                       [](const Polynomial& g) { return g.isHomogeneous(); });
  }

  /// True when every generator is zero (or there are none).
  bool isZero() const {
    return std::all_of(generators.begin(), generators.end(),
                       [](const Polynomial& g) { return g.isZero(); });
  }
};

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class PolynomialParser {
public:
  PolynomialParser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  Polynomial parse() {
    skipSpace();
    if (pos_ == text_.size())
      throw ParseError(pos_, "empty polynomial");
    Polynomial p = expression();
    skipSpace();
    if (pos_ != text_.size()) {
      if (isIdentStart(peek()) || peek() == '(')
        throw ParseError(pos_, "implicit multiplication is not allowed here; use '*'");
      throw ParseError(pos_, std::string("unexpected character '") + peek() + "'");
    }
    return p;
  }

private:
  static bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
  static bool isIdentChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      skipSpace();
      char c = peek();
      if (c != '+' && c != '-')
        return acc;
      ++pos_;
      Polynomial rhs = term();
      if (c == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skipSpace();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        ++pos_;
        skipSpace();
        std::size_t at = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError(at, "division is only allowed by an integer literal");
        Integer d = integerLiteral();
        if (d == 0)
          throw ParseError(at, "division by zero");
        acc = Rational(1, 1) / Rational(d) * acc;
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    skipSpace();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    skipSpace();
    if (peek() != '^')
      return base;
    ++pos_;
    skipSpace();
    std::size_t at = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(at, "malformed exponent: expected a nonnegative integer");
    Integer e = integerLiteral();
    if (!e.fits_sint_p() || e > 10000)
      throw ParseError(at, "exponent too large");
    return base.pow(static_cast<int>(e.get_si()));
  }

  Polynomial primary() {
    skipSpace();
    const std::size_t at = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      skipSpace();
      if (peek() != ')')
        throw ParseError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer value = integerLiteral();
      Polynomial coeff = Polynomial::constant(vars_, Rational(value));
      // A coefficient may be juxtaposed with a variable: "2x" means 2*x.
      if (isIdentStart(peek()))
        return coeff * power();
      return coeff;
    }
    if (isIdentStart(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && isIdentChar(text_[pos_]))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end())
        throw ParseError(start, "unknown variable '" + name + "'");
      return Polynomial::variable(vars_, static_cast<std::size_t>(it - vars_.begin()));
    }
    if (c == '\0')
      throw ParseError(at, "unexpected end of input");
    throw ParseError(at, std::string("unexpected character '") + c + "'");
  }

  Integer integerLiteral() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (peek() == '.')
      throw ParseError(pos_, "non-integer literal");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parses integer/rational coefficients, + - * ^, parentheses and division by
/// integer literals; the result is fully expanded.
inline Polynomial parsePolynomial(std::string_view text, const std::vector<std::string>& vars) {
  checkVariables(vars);
  return detail::PolynomialParser(text, vars).parse();
}

/// Parses a comma-separated variable list such as "x, y,z".
inline std::vector<std::string> parseVariableList(std::string_view text) {
  std::vector<std::string> vars;
  std::string cur;
  auto flush = [&] {
    std::size_t b = cur.find_first_not_of(" \t");
    std::size_t e = cur.find_last_not_of(" \t");
    vars.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      cur += c;
  }
  flush();
  checkVariables(vars);
  return vars;
}

// ---------------------------------------------------------------------------
// Operations

/// Prepends a homogenizing variable (named "h" unless taken) and replaces
/// each generator g by h^deg(g) g(x/h).
inline IdealSpec homogenize(const IdealSpec& ideal) {
  std::string name = "h";
  for (int k = 0; std::find(ideal.variables.begin(), ideal.variables.end(), name) !=
                  ideal.variables.end();
       ++k)
    name = "h" + std::to_string(k);
  std::vector<std::string> vars{name};
  vars.insert(vars.end(), ideal.variables.begin(), ideal.variables.end());
  std::vector<Polynomial> gens;
  for (const Polynomial& g : ideal.generators) {
    Polynomial hg(vars);
    const int d = g.totalDegree();
    for (const auto& [m, c] : g.terms()) {
      Monomial e{d - degree(m)};
      e.insert(e.end(), m.begin(), m.end());
      hg.addTerm(std::move(e), c);
    }
    gens.push_back(std::move(hg));
  }
  return IdealSpec(std::move(vars), std::move(gens));
}

/// Sets variable `index` to 1 and removes it from the ring.
inline Polynomial dehomogenize(const Polynomial& f, std::size_t index = 0) {
  std::vector<std::string> vars = f.variables();
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(index));
  Polynomial p(vars);
  for (const auto& [m, c] : f.terms()) {
    Monomial e = m;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(index));
    p.addTerm(std::move(e), c);
  }
  return p;
}

/// Vertices of the convex hull of the support, in term order. A support point
/// is a vertex iff it is not a convex combination of the other points.
inline std::vector<Monomial> newtonPolytope(const Polynomial& f) {
  if (f.isZero())
    throw Error(ErrorKind::ZeroPolynomial, "Newton polytope of the zero polynomial");
  const std::vector<Monomial> pts = f.support();
  const std::size_t n = f.numVariables();
  std::vector<Monomial> vertices;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<IntVec> others;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == i)
        continue;
      IntVec lifted = toIntVec(pts[j]);
      lifted.emplace_back(1);
      others.push_back(std::move(lifted));
    }
    RatVec target(n + 1);
    for (std::size_t k = 0; k < n; ++k)
      target[k] = pts[i][k];
    target[n] = 1;
    if (!coneFeasible(IntegerMatrix::fromColumns(others, n + 1), IntegerMatrix(n + 1, 0), target))
      vertices.push_back(pts[i]);
  }
  return vertices;
}

/// Optimal value of w·u over the support (minimum or maximum).
inline Rational tropicalEvaluate(const Polynomial& f, const RatVec& w, Convention conv) {
  if (f.isZero())
    throw Error(ErrorKind::ZeroPolynomial, "tropicalization of the zero polynomial");
  if (w.size() != f.numVariables())
    throw Error(ErrorKind::DimMismatch, "weight vector of length " + std::to_string(w.size()) +
                                            " for " + std::to_string(f.numVariables()) +
                                            " variables");
  bool first = true;
  Rational best;
  for (const auto& [m, c] : f.terms()) {
    Rational v = dot(w, toIntVec(m));
    if (first || (conv == Convention::Min ? v < best : v > best))
      best = v;
    first = false;
  }
  return best;
}

/// Sum of the terms whose exponent attains the optimum of w·u.
inline Polynomial initialForm(const Polynomial& f, const RatVec& w, Convention conv) {
  Rational best = tropicalEvaluate(f, w, conv);
  Polynomial p(f.variables());
  for (const auto& [m, c] : f.terms())
    if (dot(w, toIntVec(m)) == best)
      p.addTerm(m, c);
  return p;
}

} // namespace trop
