#pragma once

#include <optional>
#include <vector>

#include "gelfand/polynomial.hpp"

namespace gelfand {

/// A finite-dimensional polynomial subspace in reduced row-echelon form.
/// Coordinates are the monomials actually supported, ordered graded-lex
/// descending (largest monomial = column 0), so serialized bases are
/// reproducible byte for byte. Pivot columns are strictly increasing and
/// there are no zero rows.
struct SubspaceBasis {
  int n = 0;
  std::vector<MultiIndex> monomials;
  std::vector<std::vector<Rational>> rows;

  std::size_t dimension() const { return rows.size(); }
  Polynomial row_polynomial(std::size_t r) const;
  std::vector<Polynomial> polynomials() const;

  bool operator==(const SubspaceBasis&) const = default;
};

/// Canonical basis of the span. Idempotent: echelonize of a basis's
/// polynomials returns an equal basis.
SubspaceBasis echelonize(const std::vector<Polynomial>& polys);

/// Exact subspace equality (canonical forms coincide).
bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b);

/// Coordinates of p in the basis, or nullopt when p is outside the span.
std::optional<std::vector<Rational>> coordinates_in(const SubspaceBasis& s,
                                                    const Polynomial& p);

bool contains(const SubspaceBasis& s, const Polynomial& p);

/// Basis of {v in s : op(v) = 0} for a linear operator.
SubspaceBasis operator_kernel(const PolyOperator& op, const SubspaceBasis& s);

/// Echelonized image {op(v) : v in s}.
SubspaceBasis operator_image(const PolyOperator& op, const SubspaceBasis& s);

/// Trace of apply_group(g, .) on s. Throws DomainError when s is not
/// g-stable (some basis image falls outside s).
Rational subspace_character(const SignedPermutation& g, const SubspaceBasis& s);

}  // namespace gelfand
