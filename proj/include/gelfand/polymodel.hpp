#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gelfand/linalg.hpp"
#include "gelfand/model.hpp"
#include "gelfand/polynomial.hpp"

namespace gelfand {

/// tau = diagonal * positive * negative: the diagonal sign part supported on
/// L1, the product of positive 2-cycles (pairs in Q2) and the product of
/// negative 2-cycles (pairs in L2, signs -1 there). The factors commute.
struct CycleSplit {
  SignedPermutation diagonal;
  SignedPermutation positive;
  SignedPermutation negative;
};

CycleSplit cycle_split(const SignedPermutation& tau);

/// The 2-cycles of an involution, as increasing pairs with strictly
/// increasing first components, split by sign.
struct PairedOrdering {
  std::vector<std::pair<int, int>> l_pairs;  // pairs inside L2
  std::vector<std::pair<int, int>> q_pairs;  // pairs inside Q2
};

PairedOrdering paired_ordering(const SignedPermutation& tau);

/// The exponent vector attached to an involution: 1 on L1, 0 on Q1,
/// (4p-3, 4p-1) on the p-th negative pair, (4q-4, 4q-2) on the q-th
/// positive pair.
MultiIndex involution_exponents(const SignedPermutation& tau);

/// All permutations of `support` commuting with the restriction of `part`
/// (a fixed-point-free involution on support), returned as sign-free
/// full-size elements. Count is 2^r r! for r pairs.
std::vector<SignedPermutation> pair_centralizer(const SignedPermutation& part,
                                                const std::vector<int>& support);

/// Signed averaging: sum of sgn(kappa) kappa . p over kappa in K.
Polynomial antisymmetrize(const std::vector<SignedPermutation>& K,
                          const Polynomial& p);

/// The polynomial attached to an involution: the antisymmetrization of
/// x^{involution_exponents(tau)} over the product of the two pair
/// centralizers. Factors as (prod of L1 variables) * (det block on L2)
/// * (det block on Q2).
Polynomial involution_polynomial(const SignedPermutation& tau);

/// Type D, odd n: the polynomial of the dual basis representative.
Polynomial involution_polynomial_dual(const SignedPermutation& tau);

/// Echelonized span of the involution polynomials (dual variant for D).
/// Verifies that the span is stable under the group generators.
SubspaceBasis model_image(const GroupType& t, bool dual = false);

/// Exponent-value relabeling equivalence: a bijection of value sets carrying
/// one exponent vector to the other, parity-preserving for types B and D.
bool w_equivalent(const MultiIndex& alpha, const MultiIndex& beta,
                  const GroupType& t);

/// A multiset of exponents (canonical representative: weakly increasing).
struct OrbitClass {
  std::vector<int> sorted_exponents;

  int sum() const;
  int even_count() const;
  int odd_count() const;
  bool operator==(const OrbitClass&) const = default;
  auto operator<=>(const OrbitClass&) const = default;
};

/// True iff no equivalent orbit has a smaller exponent sum. For types B and
/// D this is the parity-preserving relabeling notion; the extra type-D
/// branch condition (more even than odd exponents) applies to the orbit
/// lists below, not here.
bool is_w_minimal(const OrbitClass& gamma, const GroupType& t);

/// All minimal orbits, sorted by (sum, lexicographic). For type D these are
/// the type-B minimal orbits with more even than odd exponents.
std::vector<OrbitClass> minimal_orbits(const GroupType& t);

/// Kernel of the lowering operator inside the span of the orbit monomials.
/// Requires gamma minimal (type-D branch condition included).
SubspaceBasis orbit_harmonics(const OrbitClass& gamma, const GroupType& t);

/// Direct sum of orbit_harmonics over all minimal orbits.
SubspaceBasis polynomial_model(const GroupType& t);

/// Iterated lowering: levels[k] = kernel of the operator inside its k-th
/// image of s; total = echelonized sum of all levels.
struct TelescopeResult {
  std::vector<SubspaceBasis> levels;
  SubspaceBasis total;

  std::vector<std::size_t> level_dimensions() const;
};

TelescopeResult telescope(const SubspaceBasis& s, const GroupType& t);

/// Checks that the basis assignment e_tau -> P_tau intertwines the group
/// action: for every generator w and every basis involution tau,
/// sign(w.e_tau) * P_{target} must equal w . P_tau.
struct EquivarianceReport {
  GroupType group;
  bool dual = false;
  std::size_t checks = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

EquivarianceReport verify_equivariance(const GroupType& t, bool dual = false);

/// The involution assembled blockwise from a minimal orbit representative;
/// its polynomial lowers to a nonzero element of the orbit's harmonic space.
SignedPermutation orbit_involution(const OrbitClass& gamma, const GroupType& t);

/// Extends a permutation of I to I u J by acting on J's positions the same
/// way: result(j_k) = j_l whenever pi(i_k) = i_l. `pi_of_I` lists images
/// within I positionally (pi(i_k) = pi_of_I[k]).
SignedPermutation double_permutation(const std::vector<int>& I,
                                     const std::vector<int>& J,
                                     const std::vector<int>& pi_of_I, int n);

}  // namespace gelfand
