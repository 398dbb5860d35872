#pragma once

// Test-only symbolic model of the basis elements: a product of commuting
// letters x_k, x_a^x_b (wedge of two degree-1 letters) and x_a^2^x_b^2
// (wedge of two squared letters), with a rational coefficient. Each wedge
// anticommutes internally, so canonical form keeps the smaller index first
// and flips the coefficient on a swap. Transforming letter by letter gives
// an oracle for the closed-form action sign, independent of the library's
// implementation.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "gelfand/rational.hpp"
#include "gelfand/weyl.hpp"

namespace gelfand::testing {

struct FormalBasisElement {
  std::multiset<int> linear;                    // letters x_k
  std::vector<std::pair<int, int>> wedge1;      // letters x_a ^ x_b
  std::vector<std::pair<int, int>> wedge2;      // letters x_a^2 ^ x_b^2
  Rational coeff = 1;

  void canonicalize() {
    auto fix = [this](std::vector<std::pair<int, int>>& wedges) {
      for (auto& [a, b] : wedges) {
        if (a > b) {
          std::swap(a, b);
          coeff = -coeff;
        }
      }
      std::sort(wedges.begin(), wedges.end());
    };
    fix(wedge1);
    fix(wedge2);
  }

  static FormalBasisElement of(const SignedPermutation& tau) {
    FormalBasisElement e;
    const IndexPartition part = index_partition(tau);
    for (int k : part.L1) e.linear.insert(k);
    for (int m : part.L2)
      if (m < tau.perm[m]) e.wedge1.emplace_back(m, tau.perm[m]);
    for (int l : part.Q2)
      if (l < tau.perm[l]) e.wedge2.emplace_back(l, tau.perm[l]);
    e.canonicalize();
    return e;
  }

  FormalBasisElement transformed(const SignedPermutation& w) const {
    FormalBasisElement out;
    out.coeff = coeff;
    for (int k : linear) {
      out.linear.insert(w.perm[k]);
      out.coeff *= w.signs[w.perm[k]];
    }
    for (const auto& [a, b] : wedge1) {
      out.wedge1.emplace_back(w.perm[a], w.perm[b]);
      out.coeff *= w.signs[w.perm[a]] * w.signs[w.perm[b]];
    }
    for (const auto& [a, b] : wedge2)
      out.wedge2.emplace_back(w.perm[a], w.perm[b]);  // squares absorb signs
    out.canonicalize();
    return out;
  }

  bool same_letters(const FormalBasisElement& other) const {
    return linear == other.linear && wedge1 == other.wedge1 &&
           wedge2 == other.wedge2;
  }
};

}  // namespace gelfand::testing
