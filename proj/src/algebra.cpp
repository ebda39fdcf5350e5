#include "pbmotz/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "pbmotz/combinatorics.hpp"
#include "pbmotz/errors.hpp"
#include "pbmotz/monoid.hpp"

namespace pbmotz {

Polynomial2 Polynomial2::constant(Int c) { return monomial(0, 0, std::move(c)); }

Polynomial2 Polynomial2::monomial(int i, int j, Int c) {
  Polynomial2 p;
  if (c != 0) p.terms_[{i, j}] = std::move(c);
  return p;
}

bool Polynomial2::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == std::pair<int, int>{0, 0} &&
         terms_.begin()->second == 1;
}

Polynomial2 Polynomial2::operator+(const Polynomial2& o) const {
  Polynomial2 out = *this;
  out += o;
  return out;
}

Polynomial2& Polynomial2::operator+=(const Polynomial2& o) {
  for (const auto& [exp, coeff] : o.terms_) {
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_.emplace(exp, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial2 Polynomial2::operator-() const {
  Polynomial2 out = *this;
  for (auto& [exp, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Polynomial2 Polynomial2::operator-(const Polynomial2& o) const {
  return *this + (-o);
}

Polynomial2 Polynomial2::operator*(const Polynomial2& o) const {
  Polynomial2 out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      const std::pair<int, int> exp{ea.first + eb.first, ea.second + eb.second};
      auto it = out.terms_.find(exp);
      if (it == out.terms_.end()) {
        out.terms_.emplace(exp, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Rational Polynomial2::eval(const Rational& x, const Rational& y) const {
  Rational total = 0;
  for (const auto& [exp, coeff] : terms_) {
    Rational term = Rational(coeff);
    for (int i = 0; i < exp.first; ++i) term *= x;
    for (int j = 0; j < exp.second; ++j) term *= y;
    total += term;
  }
  return total;
}

std::string Polynomial2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest powers first reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exp, coeff] = *it;
    Int c = coeff;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const bool has_vars = exp.first > 0 || exp.second > 0;
    if (c != 1 || !has_vars) os << c.str();
    if (exp.first > 0) {
      os << 'x';
      if (exp.first > 1) os << '^' << exp.first;
    }
    if (exp.second > 0) {
      os << 'y';
      if (exp.second > 1) os << '^' << exp.second;
    }
  }
  return os.str();
}

nlohmann::json Polynomial2::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [exp, coeff] : terms_) {
    out.push_back({exp.first, exp.second, coeff.str()});
  }
  return out;
}

Polynomial2 Polynomial2::from_json(const nlohmann::json& j) {
  Polynomial2 out;
  for (const auto& term : j) {
    const Int coeff(term.at(2).get<std::string>());
    out += monomial(term.at(0).get<int>(), term.at(1).get<int>(), coeff);
  }
  return out;
}

Polynomial2 twist(const Diagram& a, const Diagram& b) {
  const ProductResult pr = multiply(a, b);
  return Polynomial2::monomial(pr.loops, pr.paths);
}

AlgebraElement::AlgebraElement(Family f, int n) : family_(f), n_(n) {
  if (f != Family::PB && f != Family::M) {
    throw FamilyMismatchError("algebra elements live over PB or M");
  }
}

AlgebraElement AlgebraElement::basis(Family f, const Diagram& d) {
  AlgebraElement e(f, d.degree());
  e.add_term(d, Polynomial2::one());
  return e;
}

void AlgebraElement::add_term(const Diagram& d, const Polynomial2& coeff) {
  if (d.degree() != n_) throw DegreeMismatchError("term degree mismatch");
  if (family_ == Family::M && !is_planar(d)) {
    throw FamilyMismatchError("non-planar diagram in a Motzkin algebra element");
  }
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    if (!coeff.is_zero()) terms_.emplace(d, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (o.family_ != family_) throw FamilyMismatchError("family mismatch");
  if (o.n_ != n_) throw DegreeMismatchError("degree mismatch");
  AlgebraElement out = *this;
  for (const auto& [d, c] : o.terms_) out.add_term(d, c);
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  return *this + o.scaled(Polynomial2::constant(-1));
}

AlgebraElement AlgebraElement::scaled(const Polynomial2& c) const {
  AlgebraElement out(family_, n_);
  if (c.is_zero()) return out;
  for (const auto& [d, coeff] : terms_) out.add_term(d, coeff * c);
  return out;
}

AlgebraElement AlgebraElement::star_element() const {
  AlgebraElement out(family_, n_);
  for (const auto& [d, coeff] : terms_) out.add_term(star(d), coeff);
  return out;
}

AlgebraElement elem_mul(const AlgebraElement& u, const AlgebraElement& v) {
  if (u.family() != v.family()) throw FamilyMismatchError("family mismatch");
  if (u.degree() != v.degree()) throw DegreeMismatchError("degree mismatch");
  AlgebraElement out(u.family(), u.degree());
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      const ProductResult pr = multiply(a, b);
      out.add_term(pr.product,
                   ca * cb * Polynomial2::monomial(pr.loops, pr.paths));
    }
  }
  return out;
}

CellActionResult cell_action(const Diagram& a, const Diagram& beta) {
  if (a.degree() != beta.degree()) throw DegreeMismatchError("degree mismatch");
  if (!is_planar(a) || !is_planar(beta)) {
    throw FamilyMismatchError("the cell module is over the Motzkin monoid");
  }
  if (!is_projection(beta)) {
    throw NotAProjectionError("cell module basis vectors are projections");
  }
  const int r = rank_of(beta);
  CellActionResult out;
  const ProductResult ab = multiply(a, beta);
  if (rank_of(ab.product) < r) return out;  // zero
  out.coefficient = Polynomial2::monomial(ab.loops, ab.paths);
  out.result = ab.product * star(a);
  return out;
}

GramMatrix gram_matrix(int n, int r) {
  GramMatrix g;
  g.n = n;
  g.r = r;
  g.basis = projections(Family::M, n, r);
  const std::size_t k = g.basis.size();
  g.entries.assign(k, std::vector<Polynomial2>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const ProductResult pr = multiply(g.basis[i], g.basis[j]);
      if (rank_of(pr.product) == r) {
        g.entries[i][j] = Polynomial2::monomial(pr.loops, pr.paths);
      }
    }
  }
  return g;
}

namespace {

// Fraction-free (Bareiss) elimination; returns the rank of an integer
// matrix.
long integer_matrix_rank(std::vector<std::vector<Int>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  Int prev_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev_pivot;
      }
      m[i][col] = 0;
    }
    prev_pivot = m[rank][col];
    ++rank;
  }
  return static_cast<long>(rank);
}

}  // namespace

long rational_matrix_rank(std::vector<std::vector<Rational>> m) {
  // clear denominators row by row, then run fraction-free elimination
  std::vector<std::vector<Int>> ints(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    Int lcm = 1;
    for (const Rational& q : m[i]) {
      const Int d = boost::multiprecision::denominator(q);
      lcm = boost::multiprecision::lcm(lcm, d);
    }
    ints[i].reserve(m[i].size());
    for (const Rational& q : m[i]) {
      ints[i].push_back(boost::multiprecision::numerator(q) *
                        (lcm / boost::multiprecision::denominator(q)));
    }
  }
  return integer_matrix_rank(std::move(ints));
}

GramRank gram_rank_at(int n, int r, const Rational& x0, const Rational& y0) {
  const GramMatrix g = gram_matrix(n, r);
  std::vector<std::vector<Rational>> m(g.basis.size());
  for (std::size_t i = 0; i < g.basis.size(); ++i) {
    m[i].reserve(g.basis.size());
    for (std::size_t j = 0; j < g.basis.size(); ++j) {
      m[i].push_back(g.entries[i][j].eval(x0, y0));
    }
  }
  GramRank out;
  out.matrix_rank = rational_matrix_rank(std::move(m));
  out.radical_dim = static_cast<long>(g.basis.size()) - out.matrix_rank;
  out.dim_l = out.matrix_rank;
  return out;
}

bool semisimple_check(int n, const Rational& x0, const Rational& y0) {
  for (int r = 0; r <= n; ++r) {
    if (gram_rank_at(n, r, x0, y0).radical_dim != 0) return false;
  }
  return true;
}

}  // namespace pbmotz
