#include "gelfand/linalg.hpp"

#include <algorithm>
#include <map>

#include "gelfand/errors.hpp"

namespace gelfand {

namespace {

/// In-place reduced row echelon form. Pivot rows are chosen among the
/// candidates by fewest nonzero entries (ties: first) to keep intermediate
/// rows sparse; the final RREF is unique regardless.
void rref(std::vector<std::vector<Rational>>& m) {
  if (m.empty()) return;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t best = m.size();
    std::size_t best_nnz = 0;
    for (std::size_t r = row; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      std::size_t nnz = 0;
      for (const auto& v : m[r])
        if (v != 0) ++nnz;
      if (best == m.size() || nnz < best_nnz) {
        best = r;
        best_nnz = nnz;
      }
    }
    if (best == m.size()) continue;
    std::swap(m[row], m[best]);
    const Rational pivot = m[row][col];
    for (auto& v : m[row]) v /= pivot;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    ++row;
  }
  m.resize(row);
}

}  // namespace

Polynomial SubspaceBasis::row_polynomial(std::size_t r) const {
  Polynomial p(n);
  for (std::size_t c = 0; c < monomials.size(); ++c)
    p.add_term(monomials[c], rows.at(r)[c]);
  return p;
}

std::vector<Polynomial> SubspaceBasis::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) out.push_back(row_polynomial(r));
  return out;
}

SubspaceBasis echelonize(const std::vector<Polynomial>& polys) {
  SubspaceBasis s;
  std::map<MultiIndex, std::size_t, GradedLexLess> columns;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    if (s.n == 0) s.n = p.n();
    if (p.n() != s.n) throw UsageError("echelonize: variable count mismatch");
    for (const auto& [e, c] : p.terms()) columns.emplace(e, 0);
  }
  // Column 0 = largest monomial.
  s.monomials.reserve(columns.size());
  for (auto it = columns.rbegin(); it != columns.rend(); ++it)
    s.monomials.push_back(it->first);
  for (std::size_t c = 0; c < s.monomials.size(); ++c)
    columns[s.monomials[c]] = c;

  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    std::vector<Rational> row(s.monomials.size(), Rational(0));
    for (const auto& [e, c] : p.terms()) row[columns[e]] = c;
    s.rows.push_back(std::move(row));
  }
  rref(s.rows);

  // Drop columns that ended up unused (cancellation cannot create them, but
  // keep the invariant tight anyway).
  return s;
}

bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.dimension() != b.dimension()) return false;
  if (a.dimension() == 0) return true;
  if (a.n != b.n) return false;
  if (a.monomials == b.monomials) return a.rows == b.rows;
  // Different supports: align by re-echelonizing the union of coordinates.
  auto pa = a.polynomials();
  auto pb = b.polynomials();
  auto joint = pa;
  joint.insert(joint.end(), pb.begin(), pb.end());
  return echelonize(joint).dimension() == a.dimension();
}

std::optional<std::vector<Rational>> coordinates_in(const SubspaceBasis& s,
                                                    const Polynomial& p) {
  std::vector<Rational> coords(s.dimension(), Rational(0));
  Polynomial rem = p;
  // Rows are in RREF: eliminate each pivot monomial once, top to bottom.
  for (std::size_t r = 0; r < s.dimension(); ++r) {
    std::size_t pivot = 0;
    while (pivot < s.monomials.size() && s.rows[r][pivot] == 0) ++pivot;
    const Rational c = rem.coefficient(s.monomials[pivot]);
    if (c == 0) continue;
    coords[r] = c;
    rem -= c * s.row_polynomial(r);
  }
  if (!rem.is_zero()) return std::nullopt;
  return coords;
}

bool contains(const SubspaceBasis& s, const Polynomial& p) {
  return coordinates_in(s, p).has_value();
}

SubspaceBasis operator_kernel(const PolyOperator& op, const SubspaceBasis& s) {
  const auto basis = s.polynomials();
  const std::size_t d = basis.size();
  std::vector<Polynomial> images;
  images.reserve(d);
  std::map<MultiIndex, std::size_t, GradedLexLess> columns;
  for (const auto& b : basis) {
    images.push_back(op(b));
    for (const auto& [e, c] : images.back().terms()) columns.emplace(e, 0);
  }
  std::size_t cc = 0;
  for (auto& [e, idx] : columns) idx = cc++;

  // Row-reduce [images | I]; rows whose image part vanishes carry the
  // coefficient combinations spanning the kernel.
  std::vector<std::vector<Rational>> m(d,
      std::vector<Rational>(columns.size() + d, Rational(0)));
  for (std::size_t r = 0; r < d; ++r) {
    for (const auto& [e, c] : images[r].terms()) m[r][columns[e]] = c;
    m[r][columns.size() + r] = 1;
  }
  rref(m);
  std::vector<Polynomial> kernel;
  for (const auto& row : m) {
    bool image_zero = std::all_of(row.begin(), row.begin() + columns.size(),
                                  [](const Rational& v) { return v == 0; });
    if (!image_zero) continue;
    Polynomial v(s.n);
    for (std::size_t r = 0; r < d; ++r)
      if (row[columns.size() + r] != 0) v += row[columns.size() + r] * basis[r];
    kernel.push_back(std::move(v));
  }
  return echelonize(kernel);
}

SubspaceBasis operator_image(const PolyOperator& op, const SubspaceBasis& s) {
  std::vector<Polynomial> images;
  images.reserve(s.dimension());
  for (const auto& b : s.polynomials()) images.push_back(op(b));
  return echelonize(images);
}

Rational subspace_character(const SignedPermutation& g, const SubspaceBasis& s) {
  Rational trace(0);
  const auto basis = s.polynomials();
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const auto coords = coordinates_in(s, apply_group(g, basis[r]));
    if (!coords) throw DomainError("subspace_character: subspace is not stable");
    trace += (*coords)[r];
  }
  return trace;
}

}  // namespace gelfand
