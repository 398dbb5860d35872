#include "gelfand/model.hpp"

#include <algorithm>
#include <set>

#include "gelfand/errors.hpp"

namespace gelfand {

ModelVector basis_vector(const SignedPermutation& tau) {
  if (!is_involution(tau)) throw DomainError("basis_vector: not an involution");
  return {{tau, Rational(1)}};
}

void add_scaled(ModelVector& v, const SignedPermutation& tau, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = v.emplace(tau, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

SignedIndex act_on_basis(const SignedPermutation& w, const SignedPermutation& tau) {
  if (w.n() != tau.n()) throw UsageError("act_on_basis: size mismatch");
  if (!is_involution(tau)) throw DomainError("act_on_basis: not an involution");
  const auto& eps = w.signs;
  const auto& eta = w.perm;
  int sign = 1;
  for (int i = 0; i < tau.n(); ++i) {
    const int j = tau.perm[i];
    if (j == i) {
      if (tau.signs[i] == -1) sign *= eps[eta[i]];  // linear letter x_i
    } else if (i < j) {
      if (tau.signs[j] == -1) {
        // wedge of two degree-1 letters: signs act, reorder flips
        sign *= eps[eta[i]] * eps[eta[j]];
        if (eta[i] > eta[j]) sign = -sign;
      } else {
        // wedge of two squared letters: signs cancel, reorder flips
        if (eta[i] > eta[j]) sign = -sign;
      }
    }
  }
  return {sign, conjugate_by_perm(tau, eta)};
}

ModelVector act(const SignedPermutation& w, const ModelVector& v) {
  ModelVector out;
  for (const auto& [tau, c] : v) {
    const SignedIndex si = act_on_basis(w, tau);
    add_scaled(out, si.target, si.sign * c);
  }
  return out;
}

Rational invariant_form(const ModelVector& u, const ModelVector& v) {
  Rational sum(0);
  const ModelVector& small = u.size() <= v.size() ? u : v;
  const ModelVector& large = u.size() <= v.size() ? v : u;
  for (const auto& [tau, c] : small) {
    auto it = large.find(tau);
    if (it != large.end()) sum += c * it->second;
  }
  return sum;
}

ModelCharacter::ModelCharacter(const GroupType& t, bool dual) {
  validate(t);
  if (dual) {
    if (t.family != GroupFamily::D)
      throw UsageError("dual model is defined for type D only");
    basis_ = dual_basis_set(t.n);
  } else {
    basis_ = enumerate_involutions(t);
  }
}

long ModelCharacter::operator()(const SignedPermutation& g) const {
  long chi = 0;
  for (const auto& tau : basis_) {
    if (conjugate_by_perm(tau, g.perm) != tau) continue;
    chi += act_on_basis(g, tau).sign;
  }
  return chi;
}

Rational self_intertwiner_number(const GroupType& t, bool dual) {
  const ModelCharacter chi(t, dual);
  const ConjugacyClassTable table = conjugacy_classes(t);
  Rational sum(0);
  for (std::size_t k = 0; k < table.classes.size(); ++k) {
    const long v = chi(table.classes[k].front());
    sum += Rational(static_cast<long>(table.sizes[k])) * v * v;
  }
  return sum / Rational(static_cast<long>(group_order(t)));
}

GelfandReport is_gelfand_model(const GroupType& t, bool dual) {
  GelfandReport report;
  const ModelCharacter chi(t, dual);
  report.dim = chi.dimension();
  report.self_intertwiner = self_intertwiner_number(t, dual);
  report.classes = conjugacy_classes(t).classes.size();
  report.gelfand =
      report.self_intertwiner == Rational(static_cast<long>(report.classes));
  return report;
}

std::string to_string(OrbitKind k) {
  switch (k) {
    case OrbitKind::trivial: return "trivial";
    case OrbitKind::cyclic: return "cyclic";
    case OrbitKind::linear: return "linear";
    case OrbitKind::polar: return "polar";
  }
  throw InternalError("unknown orbit kind");
}

namespace {

bool full_linear_support(const IndexPartition& p) {
  return p.Q1.empty() && p.Q2.empty();
}

bool full_quadratic_support(const IndexPartition& p) {
  return p.L1.empty() && p.L2.empty();
}

struct PairSupport {
  std::vector<bool> fixed_tau, fixed_mu;  // true = one-letter index (L1/Q1)
};

/// The classification works identically in the full-L and full-Q cases; only
/// which partition sets play the "fixed" role differs.
PairSupport support_roles(const SignedPermutation& tau, const SignedPermutation& mu) {
  const auto pt = index_partition(tau);
  const auto pm = index_partition(mu);
  const int n = tau.n();
  if (!((full_linear_support(pt) && full_linear_support(pm)) ||
        (full_quadratic_support(pt) && full_quadratic_support(pm))))
    throw DomainError(
        "witness machinery requires both involutions fully linear or fully "
        "quadratic");
  PairSupport s;
  s.fixed_tau.assign(n, false);
  s.fixed_mu.assign(n, false);
  for (int i = 0; i < n; ++i) {
    if (tau.perm[i] == i) s.fixed_tau[i] = true;
    if (mu.perm[i] == i) s.fixed_mu[i] = true;
  }
  return s;
}

}  // namespace

std::vector<OrbitClassification> orbit_classify(const SignedPermutation& tau,
                                                const SignedPermutation& mu) {
  if (!is_involution(tau) || !is_involution(mu))
    throw DomainError("orbit_classify: arguments must be involutions");
  if (tau.n() != mu.n()) throw UsageError("orbit_classify: size mismatch");
  const PairSupport roles = support_roles(tau, mu);
  const int n = tau.n();

  std::vector<OrbitClassification> out;
  std::vector<bool> seen(n, false);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit{start};
    seen[start] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (int next : {tau.perm[orbit[k]], mu.perm[orbit[k]]}) {
        if (!seen[next]) {
          seen[next] = true;
          orbit.push_back(next);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    OrbitClassification oc;
    oc.orbit = orbit;
    const bool any_fixed_tau = std::any_of(orbit.begin(), orbit.end(),
        [&](int i) { return roles.fixed_tau[i]; });
    const bool any_fixed_mu = std::any_of(orbit.begin(), orbit.end(),
        [&](int i) { return roles.fixed_mu[i]; });
    if (!any_fixed_tau && !any_fixed_mu)
      oc.kind = OrbitKind::cyclic;
    else if (std::all_of(orbit.begin(), orbit.end(), [&](int i) {
               return roles.fixed_tau[i] && roles.fixed_mu[i];
             }))
      oc.kind = OrbitKind::trivial;
    else
      oc.kind = orbit.size() % 2 == 0 ? OrbitKind::polar : OrbitKind::linear;
    out.push_back(std::move(oc));
  }
  return out;
}

namespace {

/// Alternating walk along the orbit: apply `first`, then `second`, then
/// `first`, ... starting at `start`, until the sequence stops being new.
std::vector<int> alternating_walk(int start, const std::vector<int>& first,
                                  const std::vector<int>& second) {
  std::vector<int> seq{start};
  std::set<int> seen{start};
  int step = 0;
  for (;;) {
    const std::vector<int>& f = (step % 2 == 0) ? first : second;
    const int next = f[seq.back()];
    if (seen.count(next)) break;
    seq.push_back(next);
    seen.insert(next);
    ++step;
  }
  return seq;
}

/// sigma mapping seq[j] <-> seq[k-1-j] (the fold), identity elsewhere.
void fold_into(std::vector<int>& sigma, const std::vector<int>& seq) {
  const std::size_t k = seq.size();
  for (std::size_t j = 0; j < k; ++j) sigma[seq[j]] = seq[k - 1 - j];
}

/// sigma fixing seq[0] and reversing the rest (cyclic orbits).
void reverse_tail_into(std::vector<int>& sigma, const std::vector<int>& seq) {
  const std::size_t k = seq.size();
  sigma[seq[0]] = seq[0];
  for (std::size_t j = 1; j < k; ++j) sigma[seq[j]] = seq[k - j];
}

SignedPermutation sign_free(std::vector<int> perm) {
  SignedPermutation s;
  s.signs.assign(perm.size(), 1);
  s.perm = std::move(perm);
  return s;
}

/// Walk origin for a linear orbit: an index fixed by one involution and
/// moved by the other; the moving involution is applied first.
std::vector<int> linear_walk(const std::vector<int>& orbit,
                             const SignedPermutation& tau,
                             const SignedPermutation& mu) {
  for (int i : orbit) {
    if (tau.perm[i] == i && mu.perm[i] != i)
      return alternating_walk(i, mu.perm, tau.perm);
  }
  for (int i : orbit) {
    if (mu.perm[i] == i && tau.perm[i] != i)
      return alternating_walk(i, tau.perm, mu.perm);
  }
  throw InternalError("linear orbit without a one-sided fixed point");
}

bool verify_separating(const SignedPermutation& sigma, const SignedPermutation& tau,
                       const SignedPermutation& mu) {
  const SignedIndex a = act_on_basis(sigma, tau);
  const SignedIndex b = act_on_basis(sigma, mu);
  return a.target == tau && b.target == mu && a.sign == -b.sign;
}

bool verify_matching(const SignedPermutation& sigma, const SignedPermutation& tau,
                     const SignedPermutation& mu) {
  return act_on_basis(sigma, tau).target == mu;
}

}  // namespace

SignWitness find_sign_witness(const SignedPermutation& tau,
                              const SignedPermutation& mu) {
  const int n = tau.n();
  const auto orbits = orbit_classify(tau, mu);  // validates preconditions

  // Constructive path, following the orbit taxonomy.
  const bool has_polar = std::any_of(orbits.begin(), orbits.end(),
      [](const auto& oc) { return oc.kind == OrbitKind::polar; });
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i;
  if (has_polar) {
    for (const auto& oc : orbits) {
      if (oc.kind != OrbitKind::polar) continue;
      fold_into(sigma, linear_walk(oc.orbit, tau, mu));
      break;  // identity on every other orbit
    }
    const SignedPermutation w = sign_free(sigma);
    if (verify_separating(w, tau, mu))
      return {WitnessKind::separating, w};
  } else {
    for (const auto& oc : orbits) {
      switch (oc.kind) {
        case OrbitKind::trivial:
          break;
        case OrbitKind::cyclic:
          reverse_tail_into(sigma,
              alternating_walk(*std::min_element(oc.orbit.begin(), oc.orbit.end()),
                               mu.perm, tau.perm));
          break;
        case OrbitKind::linear:
          fold_into(sigma, linear_walk(oc.orbit, tau, mu));
          break;
        case OrbitKind::polar:
          break;
      }
    }
    const SignedPermutation w = sign_free(sigma);
    if (verify_matching(w, tau, mu)) return {WitnessKind::matching, w};
  }

  // Fallback: brute force over all involutions of S_n.
  const auto candidates =
      enumerate_involutions(GroupType{GroupFamily::A, n});
  for (const auto& w : candidates)
    if (verify_separating(w, tau, mu)) return {WitnessKind::separating, w};
  for (const auto& w : candidates)
    if (verify_matching(w, tau, mu)) return {WitnessKind::matching, w};
  throw InternalError("no sign witness exists; this contradicts the theory");
}

SignedPermutation dual_basis_choice(const SignedPermutation& tau) {
  const int n = tau.n();
  if (n % 2 == 0)
    throw UsageError("dual basis is defined for odd rank only");
  if (!is_involution(tau) || !is_member(tau, GroupType{GroupFamily::D, n}))
    throw DomainError("dual_basis_choice: expected an involution of W(D_n)");
  const IndexPartition p = index_partition(tau);
  const std::size_t linear = p.L1.size() + p.L2.size();
  const std::size_t quadratic = p.Q1.size() + p.Q2.size();
  return quadratic > linear ? tau : negate(tau);
}

std::vector<SignedPermutation> dual_basis_set(int n) {
  std::vector<SignedPermutation> out;
  for (const auto& tau : enumerate_involutions(GroupType{GroupFamily::D, n}))
    out.push_back(dual_basis_choice(tau));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw InternalError("dual basis choice collided");
  return out;
}

bool dual_isomorphism_check(const SignedPermutation& tau) {
  const int n = tau.n();
  const GroupType d{GroupFamily::D, n};
  if (!is_involution(tau) || !is_member(tau, d))
    throw DomainError("dual_isomorphism_check: expected an involution of W(D_n)");
  const auto orbit = sn_orbit(tau);
  for (const auto& w : generators(d)) {
    for (const auto& mu : orbit) {
      // theta(e_mu) = e_{-mu}; compare w.theta(e_mu) with theta(w.e_mu)
      const SignedIndex lhs = act_on_basis(w, negate(mu));
      const SignedIndex rhs = act_on_basis(w, mu);
      if (lhs.sign != rhs.sign || lhs.target != negate(rhs.target)) return false;
    }
  }
  return true;
}

}  // namespace gelfand
