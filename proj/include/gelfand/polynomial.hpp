#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gelfand/rational.hpp"
#include "gelfand/weyl.hpp"

namespace gelfand {

/// Exponent vector of a monomial in x_1..x_n.
using MultiIndex = std::vector<int>;

int degree(const MultiIndex& exponents);

/// Graded lexicographic order: compare total degree, then exponents
/// lexicographically.
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored; terms are kept in graded-lex order.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Rational, GradedLexLess>;

  Polynomial() = default;
  explicit Polynomial(int n) : n_(n) {}

  static Polynomial zero(int n) { return Polynomial(n); }
  static Polynomial constant(int n, const Rational& c);
  static Polynomial monomial(MultiIndex exponents, Rational coeff = 1);
  static Polynomial variable(int n, int i);  // x_{i+1}, 0-based i

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const MultiIndex& exponents) const;
  int total_degree() const;  // -1 for the zero polynomial

  /// Largest monomial in graded-lex order; throws DomainError when zero.
  const MultiIndex& leading_monomial() const;
  const Rational& leading_coefficient() const;

  void add_term(const MultiIndex& exponents, const Rational& coeff);

  Polynomial& operator+=(const Polynomial& p);
  Polynomial& operator-=(const Polynomial& p);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial&) const = default;

  std::string to_string() const;

 private:
  int n_ = 0;
  TermMap terms_;
};

/// The algebra automorphism induced by (zeta,pi) . x_i = zeta_pi(i) x_pi(i).
Polynomial apply_group(const SignedPermutation& w, const Polynomial& p);

Polynomial partial_derivative(const Polynomial& p, int i);  // 0-based i

/// Sum of first partials over the given coordinates (the type-A lowering
/// operator restricted to a subset).
Polynomial derivative_sum(const Polynomial& p, const std::vector<int>& indices);

/// Laplacian restricted to the given coordinates (types B and D).
Polynomial laplacian(const Polynomial& p, const std::vector<int>& indices);

using PolyOperator = std::function<Polynomial(const Polynomial&)>;

/// The degree-lowering invariant operator of the group: sum of first
/// derivatives for type A, the Laplacian for types B and D.
PolyOperator lowering_operator(const GroupType& t);

/// Same operator restricted to the coordinates in I.
PolyOperator lowering_operator_restricted(const GroupType& t,
                                          const std::vector<int>& I);

/// Generalized Vandermonde determinant det[x_{i_q}^{alpha(i_p)}] over the
/// ordered subset I (0-based, strictly increasing). Computed as the signed
/// sum over permutations of I; zero iff alpha is non-injective on I.
Polynomial vandermonde(const MultiIndex& alpha, const std::vector<int>& I);

/// +1 / -1 depending on the parity of the permutation sorting alpha
/// increasingly along I; 0 when alpha is not injective on I.
int orientation(const MultiIndex& alpha, const std::vector<int>& I);

/// The three minimal exponent families on I: consecutive (0,1,2,...),
/// even (0,2,4,...) and odd (1,3,5,...), returned as full-length
/// multi-indices vanishing off I.
struct CanonicalFamilies {
  MultiIndex consecutive;
  MultiIndex even;
  MultiIndex odd;
};

CanonicalFamilies canonical_families(const std::vector<int>& I, int n);

}  // namespace gelfand
