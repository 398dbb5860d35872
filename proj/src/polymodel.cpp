#include "gelfand/polymodel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gelfand/errors.hpp"

namespace gelfand {

CycleSplit cycle_split(const SignedPermutation& tau) {
  if (!is_involution(tau)) throw DomainError("cycle_split: not an involution");
  const int n = tau.n();
  const IndexPartition part = index_partition(tau);
  CycleSplit split;
  split.diagonal = SignedPermutation::identity(n);
  split.positive = SignedPermutation::identity(n);
  split.negative = SignedPermutation::identity(n);
  for (int i : part.L1) split.diagonal.signs[i] = -1;
  for (int i : part.Q2) split.positive.perm[i] = tau.perm[i];
  for (int i : part.L2) {
    split.negative.perm[i] = tau.perm[i];
    split.negative.signs[i] = -1;
  }
  return split;
}

PairedOrdering paired_ordering(const SignedPermutation& tau) {
  if (!is_involution(tau)) throw DomainError("paired_ordering: not an involution");
  const IndexPartition part = index_partition(tau);
  PairedOrdering po;
  for (int i : part.L2)
    if (i < tau.perm[i]) po.l_pairs.emplace_back(i, tau.perm[i]);
  for (int i : part.Q2)
    if (i < tau.perm[i]) po.q_pairs.emplace_back(i, tau.perm[i]);
  // IndexPartition lists indices increasingly, so first components are
  // already strictly increasing.
  return po;
}

MultiIndex involution_exponents(const SignedPermutation& tau) {
  const IndexPartition part = index_partition(tau);
  const PairedOrdering po = paired_ordering(tau);
  MultiIndex alpha(tau.n(), 0);
  for (int i : part.L1) alpha[i] = 1;
  for (std::size_t p = 0; p < po.l_pairs.size(); ++p) {
    alpha[po.l_pairs[p].first] = static_cast<int>(4 * (p + 1)) - 3;
    alpha[po.l_pairs[p].second] = static_cast<int>(4 * (p + 1)) - 1;
  }
  for (std::size_t q = 0; q < po.q_pairs.size(); ++q) {
    alpha[po.q_pairs[q].first] = static_cast<int>(4 * (q + 1)) - 4;
    alpha[po.q_pairs[q].second] = static_cast<int>(4 * (q + 1)) - 2;
  }
  return alpha;
}

std::vector<SignedPermutation> pair_centralizer(const SignedPermutation& part,
                                                const std::vector<int>& support) {
  const int n = part.n();
  for (int i : support) {
    if (i < 0 || i >= n) throw UsageError("pair_centralizer: index out of range");
    const int j = part.perm[i];
    if (j == i || std::find(support.begin(), support.end(), j) == support.end())
      throw DomainError(
          "pair_centralizer: restriction must be a fixed-point-free involution "
          "on the support");
  }
  std::vector<int> sorted = support;
  std::sort(sorted.begin(), sorted.end());
  std::vector<SignedPermutation> out;
  std::vector<int> images = sorted;
  do {
    SignedPermutation w = SignedPermutation::identity(n);
    for (std::size_t k = 0; k < sorted.size(); ++k) w.perm[sorted[k]] = images[k];
    bool commutes = true;
    for (int i : sorted) {
      if (w.perm[part.perm[i]] != part.perm[w.perm[i]]) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.push_back(std::move(w));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Polynomial antisymmetrize(const std::vector<SignedPermutation>& K,
                          const Polynomial& p) {
  Polynomial sum(p.n());
  for (const auto& kappa : K) {
    const int s = permutation_sign(kappa.perm);
    sum += Rational(s) * apply_group(kappa, p);
  }
  return sum;
}

Polynomial involution_polynomial(const SignedPermutation& tau) {
  if (!is_involution(tau))
    throw DomainError("involution_polynomial: not an involution");
  const int n = tau.n();
  const IndexPartition part = index_partition(tau);
  const CycleSplit split = cycle_split(tau);
  const auto theta_neg = part.L2.empty()
      ? std::vector<SignedPermutation>{SignedPermutation::identity(n)}
      : pair_centralizer(split.negative, part.L2);
  const auto theta_pos = part.Q2.empty()
      ? std::vector<SignedPermutation>{SignedPermutation::identity(n)}
      : pair_centralizer(split.positive, part.Q2);
  std::vector<SignedPermutation> product;
  product.reserve(theta_neg.size() * theta_pos.size());
  for (const auto& a : theta_pos)
    for (const auto& b : theta_neg) product.push_back(compose(a, b));
  return antisymmetrize(product, Polynomial::monomial(involution_exponents(tau)));
}

Polynomial involution_polynomial_dual(const SignedPermutation& tau) {
  return involution_polynomial(dual_basis_choice(tau));
}

namespace {

std::vector<SignedPermutation> model_basis(const GroupType& t, bool dual) {
  validate(t);
  if (dual) {
    if (t.family != GroupFamily::D)
      throw UsageError("dual model is defined for type D only");
    return dual_basis_set(t.n);
  }
  return enumerate_involutions(t);
}

}  // namespace

SubspaceBasis model_image(const GroupType& t, bool dual) {
  const auto basis = model_basis(t, dual);
  std::vector<Polynomial> polys;
  polys.reserve(basis.size());
  for (const auto& tau : basis) polys.push_back(involution_polynomial(tau));
  SubspaceBasis span = echelonize(polys);
  for (const auto& w : generators(t)) {
    for (const auto& p : polys) {
      if (!contains(span, apply_group(w, p)))
        throw InternalError("model image span is not group-stable");
    }
  }
  return span;
}

bool w_equivalent(const MultiIndex& alpha, const MultiIndex& beta,
                  const GroupType& t) {
  if (alpha.size() != beta.size())
    throw UsageError("w_equivalent: size mismatch");
  std::map<int, int> value_map;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    auto [it, inserted] = value_map.emplace(alpha[i], beta[i]);
    if (!inserted && it->second != beta[i]) return false;
  }
  std::set<int> targets;
  for (const auto& [v, u] : value_map) {
    if (!targets.insert(u).second) return false;  // not injective
    if (t.family != GroupFamily::A && (v % 2) != (u % 2)) return false;
  }
  return true;
}

int OrbitClass::sum() const {
  return std::accumulate(sorted_exponents.begin(), sorted_exponents.end(), 0);
}

int OrbitClass::even_count() const {
  return static_cast<int>(std::count_if(sorted_exponents.begin(),
                                        sorted_exponents.end(),
                                        [](int v) { return v % 2 == 0; }));
}

int OrbitClass::odd_count() const {
  return static_cast<int>(sorted_exponents.size()) - even_count();
}

namespace {

/// Smallest exponent sum reachable by relabeling values: high-multiplicity
/// values take the small labels, per parity class for types B and D.
int minimal_equivalent_sum(const OrbitClass& gamma, const GroupType& t) {
  std::map<int, int> mult;
  for (int v : gamma.sorted_exponents) ++mult[v];
  auto chain_sum = [](std::vector<int> mults, int start) {
    std::sort(mults.rbegin(), mults.rend());
    int sum = 0;
    int label = start;
    for (int m : mults) {
      sum += m * label;
      label += 2;
    }
    return sum;
  };
  if (t.family == GroupFamily::A) {
    std::vector<int> mults;
    for (const auto& [v, m] : mult) mults.push_back(m);
    std::sort(mults.rbegin(), mults.rend());
    int sum = 0;
    int label = 0;
    for (int m : mults) sum += m * label++;
    return sum;
  }
  std::vector<int> even_mults, odd_mults;
  for (const auto& [v, m] : mult)
    (v % 2 == 0 ? even_mults : odd_mults).push_back(m);
  return chain_sum(even_mults, 0) + chain_sum(odd_mults, 1);
}

/// Partitions of n as weakly decreasing positive parts.
std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Exponent multiset with label chain start..start+2.. and the given
/// multiplicities (weakly decreasing).
void append_chain(std::vector<int>& exps, const std::vector<int>& mults,
                  int start, int step) {
  int label = start;
  for (int m : mults) {
    exps.insert(exps.end(), m, label);
    label += step;
  }
}

}  // namespace

bool is_w_minimal(const OrbitClass& gamma, const GroupType& t) {
  validate(t);
  return gamma.sum() == minimal_equivalent_sum(gamma, t);
}

std::vector<OrbitClass> minimal_orbits(const GroupType& t) {
  validate(t);
  if (t.n > kMaxEnumerationRank)
    throw CapacityError("minimal_orbits limited to n <= " +
                        std::to_string(kMaxEnumerationRank));
  std::vector<OrbitClass> out;
  if (t.family == GroupFamily::A) {
    for (const auto& lambda : partitions(t.n)) {
      OrbitClass g;
      append_chain(g.sorted_exponents, lambda, 0, 1);
      std::sort(g.sorted_exponents.begin(), g.sorted_exponents.end());
      out.push_back(std::move(g));
    }
  } else {
    for (int k = 0; k <= t.n; ++k) {
      const auto even_parts = partitions(k);
      const auto odd_parts = partitions(t.n - k);
      for (const auto& ep : even_parts) {
        for (const auto& op : odd_parts) {
          OrbitClass g;
          append_chain(g.sorted_exponents, ep, 0, 2);
          append_chain(g.sorted_exponents, op, 1, 2);
          std::sort(g.sorted_exponents.begin(), g.sorted_exponents.end());
          if (t.family == GroupFamily::D && g.even_count() <= g.odd_count())
            continue;
          out.push_back(std::move(g));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const OrbitClass& a, const OrbitClass& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return a.sorted_exponents < b.sorted_exponents;
  });
  return out;
}

namespace {

void require_minimal(const OrbitClass& gamma, const GroupType& t) {
  bool ok = is_w_minimal(gamma, t);
  if (ok && t.family == GroupFamily::D)
    ok = gamma.even_count() > gamma.odd_count();
  if (!ok) throw DomainError("orbit is not minimal for the group");
}

}  // namespace

SubspaceBasis orbit_harmonics(const OrbitClass& gamma, const GroupType& t) {
  require_minimal(gamma, t);
  std::vector<int> exps = gamma.sorted_exponents;
  std::vector<Polynomial> monomials;
  do {
    monomials.push_back(Polynomial::monomial(exps));
  } while (std::next_permutation(exps.begin(), exps.end()));
  return operator_kernel(lowering_operator(t), echelonize(monomials));
}

SubspaceBasis polynomial_model(const GroupType& t) {
  std::vector<Polynomial> all;
  for (const auto& gamma : minimal_orbits(t)) {
    for (const auto& p : orbit_harmonics(gamma, t).polynomials())
      all.push_back(p);
  }
  return echelonize(all);
}

std::vector<std::size_t> TelescopeResult::level_dimensions() const {
  std::vector<std::size_t> dims;
  dims.reserve(levels.size());
  for (const auto& l : levels) dims.push_back(l.dimension());
  return dims;
}

TelescopeResult telescope(const SubspaceBasis& s, const GroupType& t) {
  const PolyOperator op = lowering_operator(t);
  TelescopeResult result;
  SubspaceBasis current = s;
  std::vector<Polynomial> accumulated;
  while (current.dimension() > 0) {
    SubspaceBasis level = operator_kernel(op, current);
    for (const auto& p : level.polynomials()) accumulated.push_back(p);
    result.levels.push_back(std::move(level));
    current = operator_image(op, current);
  }
  result.total = echelonize(accumulated);
  return result;
}

EquivarianceReport verify_equivariance(const GroupType& t, bool dual) {
  EquivarianceReport report;
  report.group = t;
  report.dual = dual;
  const auto basis = model_basis(t, dual);
  std::map<SignedPermutation, Polynomial> polys;
  for (const auto& tau : basis) polys.emplace(tau, involution_polynomial(tau));
  for (const auto& w : generators(t)) {
    for (const auto& tau : basis) {
      const SignedIndex si = act_on_basis(w, tau);
      auto it = polys.find(si.target);
      if (it == polys.end()) {
        // The basis set must be closed under conjugation.
        it = polys.emplace(si.target, involution_polynomial(si.target)).first;
      }
      const Polynomial lhs = Rational(si.sign) * it->second;
      const Polynomial rhs = apply_group(w, polys.at(tau));
      ++report.checks;
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "w=" << w.to_string() << " tau=" << tau.to_string();
        report.violations.push_back(os.str());
      }
    }
  }
  return report;
}

SignedPermutation orbit_involution(const OrbitClass& gamma, const GroupType& t) {
  require_minimal(gamma, t);
  const int n = static_cast<int>(gamma.sorted_exponents.size());
  const std::vector<int>& alpha = gamma.sorted_exponents;

  // Greedy maximal blocks: repeatedly take one index of each distinct value
  // (per parity class for B and D); on each block the values then form a
  // consecutive, even or odd chain.
  std::map<int, std::vector<int>> buckets;  // value -> indices (increasing)
  for (int i = 0; i < n; ++i) buckets[alpha[i]].push_back(i);
  std::vector<std::vector<int>> blocks;
  auto drain = [&blocks](std::map<int, std::vector<int>>& b) {
    while (!b.empty()) {
      std::vector<int> block;
      for (auto it = b.begin(); it != b.end();) {
        block.push_back(it->second.front());
        it->second.erase(it->second.begin());
        it = it->second.empty() ? b.erase(it) : std::next(it);
      }
      std::sort(block.begin(), block.end());
      blocks.push_back(std::move(block));
    }
  };
  if (t.family == GroupFamily::A) {
    drain(buckets);
  } else {
    std::map<int, std::vector<int>> evens, odds;
    for (auto& [v, idx] : buckets) (v % 2 == 0 ? evens : odds)[v] = idx;
    drain(evens);
    drain(odds);
  }

  SignedPermutation tau = SignedPermutation::identity(n);
  for (const auto& block : blocks) {
    const int m = static_cast<int>(block.size());
    const bool odd_values =
        t.family != GroupFamily::A && alpha[block.front()] % 2 != 0;
    const int paired = m % 2 == 0 ? m : m - 1;
    for (int k = 0; k + 1 < paired; k += 2) {
      tau.perm[block[k]] = block[k + 1];
      tau.perm[block[k + 1]] = block[k];
    }
    if (odd_values)
      for (int i : block) tau.signs[i] = -1;
  }
  if (!is_involution(tau))
    throw InternalError("orbit_involution produced a non-involution");
  return tau;
}

SignedPermutation double_permutation(const std::vector<int>& I,
                                     const std::vector<int>& J,
                                     const std::vector<int>& pi_of_I, int n) {
  if (I.size() != J.size() || I.size() != pi_of_I.size())
    throw UsageError("double_permutation: size mismatch");
  SignedPermutation w = SignedPermutation::identity(n);
  std::map<int, std::size_t> position;  // i_k -> k
  for (std::size_t k = 0; k < I.size(); ++k) position[I[k]] = k;
  for (std::size_t k = 0; k < I.size(); ++k) {
    const std::size_t l = position.at(pi_of_I[k]);
    w.perm[I[k]] = I[l];
    w.perm[J[k]] = J[l];
  }
  SignedPermutation check(w.signs, w.perm);  // validates bijectivity
  return w;
}

}  // namespace gelfand
