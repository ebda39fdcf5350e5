#ifndef PBMOTZ_ALGEBRA_HPP_
#define PBMOTZ_ALGEBRA_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pbmotz/bigint.hpp"
#include "pbmotz/diagram.hpp"
#include "pbmotz/family.hpp"

namespace pbmotz {

// Sparse bivariate polynomial in x, y with arbitrary-precision integer
// coefficients.  Zero coefficients are never stored, so equality is map
// equality.
class Polynomial2 {
 public:
  Polynomial2() = default;

  static Polynomial2 constant(Int c);
  static Polynomial2 one() { return constant(1); }
  static Polynomial2 monomial(int i, int j, Int c = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  Polynomial2 operator+(const Polynomial2& o) const;
  Polynomial2 operator-(const Polynomial2& o) const;
  Polynomial2 operator-() const;
  Polynomial2 operator*(const Polynomial2& o) const;
  Polynomial2& operator+=(const Polynomial2& o);

  bool operator==(const Polynomial2&) const = default;

  Rational eval(const Rational& x, const Rational& y) const;

  // Terms in lexicographic (i, j) order.
  const std::map<std::pair<int, int>, Int>& terms() const { return terms_; }

  // e.g. "x y^2 + 3", "0", "-2x^2"
  std::string to_string() const;
  // [[i, j, "coeff"], ...]
  nlohmann::json to_json() const;
  static Polynomial2 from_json(const nlohmann::json& j);

 private:
  std::map<std::pair<int, int>, Int> terms_;
};

// tau(a, b) = x^l y^p from the floating counts of the product graph.
Polynomial2 twist(const Diagram& a, const Diagram& b);

// A finite formal sum of diagrams of one family and degree with Polynomial2
// coefficients: an element of the twisted semigroup algebra.
class AlgebraElement {
 public:
  AlgebraElement(Family f, int n);
  static AlgebraElement basis(Family f, const Diagram& d);

  Family family() const { return family_; }
  int degree() const { return n_; }
  const std::map<Diagram, Polynomial2>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Diagram& d, const Polynomial2& coeff);

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement scaled(const Polynomial2& c) const;
  // the anti-involution: star each diagram, keep coefficients
  AlgebraElement star_element() const;

  bool operator==(const AlgebraElement&) const = default;

 private:
  Family family_;
  int n_;
  std::map<Diagram, Polynomial2> terms_;
};

// u * v = sum over basis pairs of tau(a, b) x^.. (a b); bilinear, associative.
AlgebraElement elem_mul(const AlgebraElement& u, const AlgebraElement& v);

// Action of a diagram on the cell module basis vector C_beta (beta a rank-r
// projection of M_n): tau(a, beta) C_{a beta a*} if rank(a beta) = r, else 0.
struct CellActionResult {
  Polynomial2 coefficient;           // zero polynomial when the rank drops
  std::optional<Diagram> result;     // the projection a beta a*, if nonzero
};

CellActionResult cell_action(const Diagram& a, const Diagram& beta);

// Gram matrix of the rank-r cell module of the twisted Motzkin algebra:
// entry (beta, gamma) over the projection basis P(D_r(M_n)) is
// x^l y^p for the floating counts of the product graph of (beta, gamma)
// when rank(beta gamma) = r, and 0 otherwise.  Symmetric.
struct GramMatrix {
  int n = 0;
  int r = 0;
  std::vector<Diagram> basis;                     // ascending projections
  std::vector<std::vector<Polynomial2>> entries;  // square, |basis|^2
};

GramMatrix gram_matrix(int n, int r);

struct GramRank {
  long matrix_rank = 0;
  long radical_dim = 0;
  long dim_l = 0;
};

// Rank of the Gram matrix specialised at exact rationals (x0, y0), computed
// by fraction-free elimination; radical_dim = m(n,r) - rank, dim_l = rank.
GramRank gram_rank_at(int n, int r, const Rational& x0, const Rational& y0);

// True iff every cell module of the twisted Motzkin algebra at (x0, y0) has
// zero radical.
bool semisimple_check(int n, const Rational& x0, const Rational& y0);

// Exact rank of a rational matrix (exposed for tests).
long rational_matrix_rank(std::vector<std::vector<Rational>> m);

}  // namespace pbmotz

#endif  // PBMOTZ_ALGEBRA_HPP_
