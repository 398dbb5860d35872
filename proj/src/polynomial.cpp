#include "gelfand/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gelfand/errors.hpp"

namespace gelfand {

int degree(const MultiIndex& exponents) {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return a < b;
}

Polynomial Polynomial::constant(int n, const Rational& c) {
  Polynomial p(n);
  p.add_term(MultiIndex(n, 0), c);
  return p;
}

Polynomial Polynomial::monomial(MultiIndex exponents, Rational coeff) {
  Polynomial p(static_cast<int>(exponents.size()));
  p.add_term(exponents, coeff);
  return p;
}

Polynomial Polynomial::variable(int n, int i) {
  MultiIndex e(n, 0);
  e.at(i) = 1;
  return monomial(std::move(e));
}

Rational Polynomial::coefficient(const MultiIndex& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return degree(terms_.rbegin()->first);
}

const MultiIndex& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

void Polynomial::add_term(const MultiIndex& exponents, const Rational& coeff) {
  if (static_cast<int>(exponents.size()) != n_)
    throw UsageError("term has wrong number of variables");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& p) {
  if (n_ == 0 && terms_.empty()) n_ = p.n_;
  if (n_ != p.n_ && !(p.n_ == 0 && p.terms_.empty()))
    throw UsageError("polynomial arithmetic: variable count mismatch");
  for (const auto& [e, c] : p.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& p) {
  return *this += -p;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw UsageError("polynomial product: variable count mismatch");
  Polynomial r(a.n_);
  MultiIndex e(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Leading (largest) terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    const bool constant_term = degree(e) == 0;
    if (a != 1 || constant_term) os << a.get_str();
    bool any = a != 1 || constant_term;
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (any) os << '*';
      os << 'x' << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
      any = true;
    }
    first = false;
  }
  return os.str();
}

Polynomial apply_group(const SignedPermutation& w, const Polynomial& p) {
  if (w.n() != p.n()) throw UsageError("apply_group: size mismatch");
  Polynomial r(p.n());
  MultiIndex e(p.n());
  for (const auto& [exps, c] : p.terms()) {
    int sign = 1;
    for (int i = 0; i < p.n(); ++i) {
      e[w.perm[i]] = exps[i];
      if (w.signs[w.perm[i]] == -1 && exps[i] % 2 != 0) sign = -sign;
    }
    r.add_term(e, sign * c);
  }
  return r;
}

Polynomial partial_derivative(const Polynomial& p, int i) {
  if (i < 0 || i >= p.n()) throw UsageError("partial_derivative: index out of range");
  Polynomial r(p.n());
  for (const auto& [exps, c] : p.terms()) {
    if (exps[i] == 0) continue;
    MultiIndex e = exps;
    e[i] -= 1;
    r.add_term(e, c * exps[i]);
  }
  return r;
}

Polynomial derivative_sum(const Polynomial& p, const std::vector<int>& indices) {
  Polynomial r(p.n());
  for (int i : indices) r += partial_derivative(p, i);
  return r;
}

Polynomial laplacian(const Polynomial& p, const std::vector<int>& indices) {
  Polynomial r(p.n());
  for (int i : indices) r += partial_derivative(partial_derivative(p, i), i);
  return r;
}

PolyOperator lowering_operator(const GroupType& t) {
  validate(t);
  const GroupFamily fam = t.family;
  return [fam](const Polynomial& p) {
    std::vector<int> all(p.n());
    std::iota(all.begin(), all.end(), 0);
    return fam == GroupFamily::A ? derivative_sum(p, all) : laplacian(p, all);
  };
}

PolyOperator lowering_operator_restricted(const GroupType& t,
                                          const std::vector<int>& I) {
  validate(t);
  const GroupFamily fam = t.family;
  return [fam, I](const Polynomial& p) {
    return fam == GroupFamily::A ? derivative_sum(p, I) : laplacian(p, I);
  };
}

Polynomial vandermonde(const MultiIndex& alpha, const std::vector<int>& I) {
  const int n = static_cast<int>(alpha.size());
  if (I.empty()) throw UsageError("vandermonde: empty index set");
  if (!std::is_sorted(I.begin(), I.end()) ||
      std::adjacent_find(I.begin(), I.end()) != I.end())
    throw UsageError("vandermonde: index set must be strictly increasing");
  for (int i : I)
    if (i < 0 || i >= n) throw UsageError("vandermonde: index out of range");

  const int k = static_cast<int>(I.size());
  std::vector<int> pos(k);
  std::iota(pos.begin(), pos.end(), 0);
  Polynomial r(n);
  // sum over sigma in S(I) of sgn(sigma) x_{sigma(i_p)}^{alpha(i_p)}
  do {
    std::vector<int> as_perm(k);
    for (int p = 0; p < k; ++p) as_perm[p] = pos[p];
    MultiIndex e(n, 0);
    for (int p = 0; p < k; ++p) e[I[pos[p]]] += alpha[I[p]];
    r.add_term(e, permutation_sign(as_perm));
  } while (std::next_permutation(pos.begin(), pos.end()));
  return r;
}

int orientation(const MultiIndex& alpha, const std::vector<int>& I) {
  std::vector<int> values;
  values.reserve(I.size());
  for (int i : I) values.push_back(alpha.at(i));
  int inversions = 0;
  for (std::size_t a = 0; a < values.size(); ++a) {
    for (std::size_t b = a + 1; b < values.size(); ++b) {
      if (values[a] == values[b]) return 0;
      if (values[a] > values[b]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

CanonicalFamilies canonical_families(const std::vector<int>& I, int n) {
  if (I.empty()) throw UsageError("canonical_families: empty index set");
  CanonicalFamilies f;
  f.consecutive.assign(n, 0);
  f.even.assign(n, 0);
  f.odd.assign(n, 0);
  for (std::size_t j = 0; j < I.size(); ++j) {
    f.consecutive.at(I[j]) = static_cast<int>(j);
    f.even.at(I[j]) = 2 * static_cast<int>(j);
    f.odd.at(I[j]) = 2 * static_cast<int>(j) + 1;
  }
  return f;
}

}  // namespace gelfand
