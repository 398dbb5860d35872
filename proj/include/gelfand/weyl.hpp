#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gelfand/errors.hpp"

namespace gelfand {

/// Which of the three signed-permutation groups is active.
///   A: permutations of n coordinates, all signs +1 (S_n)
///   B: all signed permutations (order 2^n n!)
///   D: signed permutations whose sign product is +1 (order 2^(n-1) n!)
enum class GroupFamily : std::uint8_t { A, B, D };

struct GroupType {
  GroupFamily family = GroupFamily::A;
  int n = 1;
};

char family_letter(GroupFamily f);
GroupFamily family_from_letter(char c);

/// Throws UsageError unless n >= 1 (n >= 2 for family D).
void validate(const GroupType& t);

/// Largest n accepted by the exhaustive enumerations below.
inline constexpr int kMaxEnumerationRank = 8;

unsigned long long group_order(const GroupType& t);

/// An element (zeta, pi) of the full signed permutation group.
/// Internally 0-based: perm[i] is the image of coordinate i, signs[i] in
/// {+1,-1}. External (JSON) encodings are 1-based.
struct SignedPermutation {
  std::vector<int> signs;
  std::vector<int> perm;

  SignedPermutation() = default;
  SignedPermutation(std::vector<int> signs_in, std::vector<int> perm_in);

  int n() const { return static_cast<int>(perm.size()); }

  static SignedPermutation identity(int n);
  bool is_identity() const;

  bool operator==(const SignedPermutation&) const = default;
  /// Canonical order: lexicographic on (signs, perm).
  std::strong_ordering operator<=>(const SignedPermutation& other) const;

  /// One-line window notation, e.g. "[2 -1 3]" maps 1 to 2, 2 to -1, 3 to 3.
  std::string to_string() const;
};

/// Group law fixed by the left action on coordinates:
/// (compose(u,v)) . x = u . (v . x) where (zeta,pi) . e_j = zeta_pi(j) e_pi(j).
SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v);

SignedPermutation inverse(const SignedPermutation& u);

bool is_involution(const SignedPermutation& u);

/// Conjugation (I,eta) u (I,eta)^{-1} by a plain permutation eta.
SignedPermutation conjugate_by_perm(const SignedPermutation& u,
                                    const std::vector<int>& eta);

bool is_member(const SignedPermutation& u, const GroupType& t);

/// All elements of the group, sorted in canonical order.
std::vector<SignedPermutation> enumerate_group(const GroupType& t);

/// All u with u*u = identity (identity included), sorted canonically.
/// Constructed directly from involutive permutations and compatible signs,
/// independent of enumerate_group.
std::vector<SignedPermutation> enumerate_involutions(const GroupType& t);

/// The four-way split of {1..n} attached to an element (0-based indices):
///   L1: fixed by pi, sign -1        L2: moved by pi, sign at image -1
///   Q1: fixed by pi, sign +1        Q2: moved by pi, sign at image +1
struct IndexPartition {
  std::vector<int> L1, L2, Q1, Q2;
};

IndexPartition index_partition(const SignedPermutation& u);

/// (zeta, pi) -> (-zeta, pi). Swaps the L- and Q-parts of the partition.
SignedPermutation negate(const SignedPermutation& u);

/// The S_n-conjugacy orbit of an involution, sorted canonically.
std::vector<SignedPermutation> sn_orbit(const SignedPermutation& tau);

struct ConjugacyClassTable {
  std::vector<std::vector<SignedPermutation>> classes;
  std::vector<std::size_t> sizes;
};

/// Brute-force partition of the whole group into conjugacy classes.
/// Classes are ordered by their canonically smallest representative.
ConjugacyClassTable conjugacy_classes(const GroupType& t);

/// A generating set: adjacent transpositions, plus a single sign flip for B,
/// plus a double sign flip for D.
std::vector<SignedPermutation> generators(const GroupType& t);

/// Parity of the permutation part (+1 even, -1 odd).
int permutation_sign(const std::vector<int>& perm);

}  // namespace gelfand
