#pragma once

#include <map>
#include <string>
#include <vector>

#include "gelfand/rational.hpp"
#include "gelfand/weyl.hpp"

namespace gelfand {

/// Element of the involution-indexed module: finitely supported rational
/// combination of basis symbols indexed by involutions. Keys are kept in
/// canonical (signs, perm) order; zero coefficients are never stored.
using ModelVector = std::map<SignedPermutation, Rational>;

ModelVector basis_vector(const SignedPermutation& tau);
void add_scaled(ModelVector& v, const SignedPermutation& tau, const Rational& c);

/// Result of acting on a single basis symbol: a sign and the target index.
struct SignedIndex {
  int sign = 1;
  SignedPermutation target;
};

/// w . e_tau = sign * e_{eta tau eta^{-1}} where eta is w's permutation part.
/// The sign is the closed-form product over the index partition of tau:
/// epsilon factors at the images of the linear indices, and a wedge-reorder
/// factor (-1) for every pair whose order eta reverses.
SignedIndex act_on_basis(const SignedPermutation& w, const SignedPermutation& tau);

/// Linear extension of act_on_basis; support size is preserved.
ModelVector act(const SignedPermutation& w, const ModelVector& v);

/// The invariant symmetric bilinear form making the basis orthonormal.
Rational invariant_form(const ModelVector& u, const ModelVector& v);

/// Character of the module: chi(g) = sum of the action signs over the basis
/// indices fixed by conjugation with g's permutation part. Values are
/// integers. For dual = true (type D, odd n) the basis is the dual choice
/// set inside the ambient type-B involutions.
class ModelCharacter {
 public:
  ModelCharacter(const GroupType& t, bool dual = false);

  long operator()(const SignedPermutation& g) const;
  const std::vector<SignedPermutation>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }

 private:
  std::vector<SignedPermutation> basis_;
};

/// (1/|W|) sum over the group of chi(g)^2, computed class by class.
/// Equals the number of irreducible constituents counted with squared
/// multiplicities; an exact rational (integral here).
Rational self_intertwiner_number(const GroupType& t, bool dual = false);

struct GelfandReport {
  bool gelfand = false;
  std::size_t dim = 0;             // dimension of the module
  Rational self_intertwiner = 0;   // sum of squared multiplicities
  std::size_t classes = 0;         // number of conjugacy classes
};

/// True iff the module is multiplicity-free with every irreducible present,
/// decided by self_intertwiner == #classes.
GelfandReport is_gelfand_model(const GroupType& t, bool dual = false);

enum class OrbitKind { trivial, cyclic, linear, polar };

struct OrbitClassification {
  std::vector<int> orbit;  // 0-based indices, sorted
  OrbitKind kind = OrbitKind::trivial;
};

std::string to_string(OrbitKind k);

/// Orbits of the subgroup generated by the permutation parts of tau and mu,
/// classified per the basis-element factor structure. Requires both
/// involutions fully linear (L1 u L2 = all) or both fully quadratic.
std::vector<OrbitClassification> orbit_classify(const SignedPermutation& tau,
                                                const SignedPermutation& mu);

enum class WitnessKind { separating, matching };

struct SignWitness {
  WitnessKind kind = WitnessKind::matching;
  SignedPermutation sigma;  // an involution of S_n, embedded sign-free
};

/// Finds an involution sigma of S_n with either
///   separating: sigma e_tau = +-e_tau and sigma e_mu = -+e_mu (opposite), or
///   matching:   sigma e_tau = +-e_mu.
/// Tries the constructive orbit walk first, then brute force; the returned
/// witness is always re-verified by direct action.
SignWitness find_sign_witness(const SignedPermutation& tau,
                              const SignedPermutation& mu);

/// For type D with odd n: the representative with more quadratic than linear
/// indices, i.e. tau itself or its negation. Throws UsageError on even n
/// (a tie would be possible) and DomainError when tau is not in W(D_n).
SignedPermutation dual_basis_choice(const SignedPermutation& tau);

/// The dual basis index set {dual_basis_choice(tau) : tau involution in
/// W(D_n)}, sorted canonically.
std::vector<SignedPermutation> dual_basis_set(int n);

/// Verifies that e_mu -> e_{-mu} intertwines the W(D_n)-action on the
/// S_n-orbit module of tau (generator by generator, basis by basis).
bool dual_isomorphism_check(const SignedPermutation& tau);

}  // namespace gelfand
