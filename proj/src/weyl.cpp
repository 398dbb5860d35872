#include "gelfand/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gelfand {

char family_letter(GroupFamily f) {
  switch (f) {
    case GroupFamily::A: return 'A';
    case GroupFamily::B: return 'B';
    case GroupFamily::D: return 'D';
  }
  throw InternalError("unknown group family");
}

GroupFamily family_from_letter(char c) {
  switch (c) {
    case 'A': return GroupFamily::A;
    case 'B': return GroupFamily::B;
    case 'D': return GroupFamily::D;
    default: throw UsageError(std::string("unknown group type '") + c + "'");
  }
}

void validate(const GroupType& t) {
  if (t.n < 1) throw UsageError("group rank must be at least 1");
  if (t.family == GroupFamily::D && t.n < 2)
    throw UsageError("type D requires n >= 2");
}

unsigned long long group_order(const GroupType& t) {
  validate(t);
  unsigned long long fact = 1;
  for (int i = 2; i <= t.n; ++i) fact *= static_cast<unsigned long long>(i);
  switch (t.family) {
    case GroupFamily::A: return fact;
    case GroupFamily::B: return fact << t.n;
    case GroupFamily::D: return fact << (t.n - 1);
  }
  throw InternalError("unknown group family");
}

SignedPermutation::SignedPermutation(std::vector<int> signs_in,
                                     std::vector<int> perm_in)
    : signs(std::move(signs_in)), perm(std::move(perm_in)) {
  if (signs.size() != perm.size())
    throw UsageError("signs and permutation must have the same length");
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (perm[i] < 0 || perm[i] >= n || seen[perm[i]])
      throw UsageError("permutation is not a bijection");
    seen[perm[i]] = true;
    if (signs[i] != 1 && signs[i] != -1)
      throw UsageError("signs must be +1 or -1");
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation u;
  u.signs.assign(n, 1);
  u.perm.resize(n);
  std::iota(u.perm.begin(), u.perm.end(), 0);
  return u;
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (signs[i] != 1 || perm[i] != i) return false;
  return true;
}

std::strong_ordering SignedPermutation::operator<=>(
    const SignedPermutation& other) const {
  if (auto c = signs <=> other.signs; c != 0) return c;
  return perm <=> other.perm;
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n(); ++i) {
    if (i) os << ' ';
    os << signs[perm[i]] * (perm[i] + 1);
  }
  os << ']';
  return os.str();
}

SignedPermutation compose(const SignedPermutation& u,
                          const SignedPermutation& v) {
  if (u.n() != v.n()) throw UsageError("compose: size mismatch");
  const int n = u.n();
  SignedPermutation r;
  r.perm.resize(n);
  r.signs.resize(n);
  // r = (xi, eta.pi) with xi_i = eps_i * zeta_{eta^{-1}(i)}, u=(eps,eta), v=(zeta,pi)
  std::vector<int> eta_inv(n);
  for (int i = 0; i < n; ++i) eta_inv[u.perm[i]] = i;
  for (int i = 0; i < n; ++i) {
    r.perm[i] = u.perm[v.perm[i]];
    r.signs[i] = u.signs[i] * v.signs[eta_inv[i]];
  }
  return r;
}

SignedPermutation inverse(const SignedPermutation& u) {
  const int n = u.n();
  SignedPermutation r;
  r.perm.resize(n);
  r.signs.resize(n);
  for (int i = 0; i < n; ++i) r.perm[u.perm[i]] = i;
  for (int i = 0; i < n; ++i) r.signs[r.perm[i]] = u.signs[i];
  return r;
}

bool is_involution(const SignedPermutation& u) {
  const int n = u.n();
  for (int i = 0; i < n; ++i) {
    if (u.perm[u.perm[i]] != i) return false;
    if (u.signs[i] * u.signs[u.perm[i]] != 1) return false;
  }
  return true;
}

SignedPermutation conjugate_by_perm(const SignedPermutation& u,
                                    const std::vector<int>& eta) {
  const int n = u.n();
  if (static_cast<int>(eta.size()) != n)
    throw UsageError("conjugate_by_perm: size mismatch");
  SignedPermutation r;
  r.perm.resize(n);
  r.signs.resize(n);
  for (int i = 0; i < n; ++i) {
    r.perm[eta[i]] = eta[u.perm[i]];
    r.signs[eta[i]] = u.signs[i];
  }
  return r;
}

bool is_member(const SignedPermutation& u, const GroupType& t) {
  validate(t);
  if (u.n() != t.n) throw UsageError("is_member: size mismatch");
  switch (t.family) {
    case GroupFamily::B: return true;
    case GroupFamily::A:
      return std::all_of(u.signs.begin(), u.signs.end(),
                         [](int s) { return s == 1; });
    case GroupFamily::D: {
      int prod = 1;
      for (int s : u.signs) prod *= s;
      return prod == 1;
    }
  }
  throw InternalError("unknown group family");
}

namespace {

void check_capacity(const GroupType& t) {
  validate(t);
  if (t.n > kMaxEnumerationRank)
    throw CapacityError("enumeration limited to n <= " +
                        std::to_string(kMaxEnumerationRank));
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// All involutive permutations of {0..n-1}, identity included.
void involutive_perms(int n, std::vector<std::vector<int>>& out) {
  std::vector<int> p(n, -1);
  // Recursive pairing: the first unassigned point is fixed or paired.
  auto rec = [&](auto&& self, int start) -> void {
    int i = start;
    while (i < n && p[i] != -1) ++i;
    if (i == n) {
      out.push_back(p);
      return;
    }
    p[i] = i;
    self(self, i + 1);
    p[i] = -1;
    for (int j = i + 1; j < n; ++j) {
      if (p[j] != -1) continue;
      p[i] = j;
      p[j] = i;
      self(self, i + 1);
      p[i] = p[j] = -1;
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<SignedPermutation> enumerate_group(const GroupType& t) {
  check_capacity(t);
  const int n = t.n;
  std::vector<SignedPermutation> out;
  out.reserve(group_order(t));
  for (const auto& p : all_permutations(n)) {
    if (t.family == GroupFamily::A) {
      SignedPermutation u;
      u.signs.assign(n, 1);
      u.perm = p;
      out.push_back(std::move(u));
      continue;
    }
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      SignedPermutation u;
      u.perm = p;
      u.signs.resize(n);
      int prod = 1;
      for (int i = 0; i < n; ++i) {
        u.signs[i] = (mask >> i) & 1 ? -1 : 1;
        prod *= u.signs[i];
      }
      if (t.family == GroupFamily::D && prod != 1) continue;
      out.push_back(std::move(u));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedPermutation> enumerate_involutions(const GroupType& t) {
  check_capacity(t);
  const int n = t.n;
  std::vector<std::vector<int>> perms;
  involutive_perms(n, perms);
  std::vector<SignedPermutation> out;
  for (const auto& p : perms) {
    // Signs must satisfy zeta_i = zeta_{pi(i)}: free on fixed points, equal
    // within each 2-cycle.
    std::vector<int> sites;  // one representative per cycle
    for (int i = 0; i < n; ++i)
      if (p[i] == i || i < p[i]) sites.push_back(i);
    const int k = static_cast<int>(sites.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      SignedPermutation u;
      u.perm = p;
      u.signs.assign(n, 1);
      for (int j = 0; j < k; ++j) {
        if ((mask >> j) & 1) {
          u.signs[sites[j]] = -1;
          u.signs[p[sites[j]]] = -1;
        }
      }
      if (!is_member(u, t)) continue;
      out.push_back(std::move(u));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IndexPartition index_partition(const SignedPermutation& u) {
  IndexPartition part;
  for (int i = 0; i < u.n(); ++i) {
    if (u.perm[i] == i)
      (u.signs[i] == -1 ? part.L1 : part.Q1).push_back(i);
    else
      (u.signs[u.perm[i]] == -1 ? part.L2 : part.Q2).push_back(i);
  }
  return part;
}

SignedPermutation negate(const SignedPermutation& u) {
  SignedPermutation r = u;
  for (int& s : r.signs) s = -s;
  return r;
}

std::vector<SignedPermutation> sn_orbit(const SignedPermutation& tau) {
  if (!is_involution(tau)) throw DomainError("sn_orbit: not an involution");
  std::set<SignedPermutation> seen;
  for (const auto& eta : all_permutations(tau.n()))
    seen.insert(conjugate_by_perm(tau, eta));
  return {seen.begin(), seen.end()};
}

ConjugacyClassTable conjugacy_classes(const GroupType& t) {
  const auto elements = enumerate_group(t);
  ConjugacyClassTable table;
  std::set<SignedPermutation> assigned;
  for (const auto& g : elements) {
    if (assigned.count(g)) continue;
    std::set<SignedPermutation> cls;
    for (const auto& h : elements)
      cls.insert(compose(h, compose(g, inverse(h))));
    table.classes.emplace_back(cls.begin(), cls.end());
    table.sizes.push_back(cls.size());
    assigned.insert(cls.begin(), cls.end());
  }
  return table;
}

std::vector<SignedPermutation> generators(const GroupType& t) {
  validate(t);
  const int n = t.n;
  std::vector<SignedPermutation> gens;
  for (int i = 0; i + 1 < n; ++i) {
    SignedPermutation s = SignedPermutation::identity(n);
    std::swap(s.perm[i], s.perm[i + 1]);
    gens.push_back(std::move(s));
  }
  if (t.family == GroupFamily::B) {
    SignedPermutation s = SignedPermutation::identity(n);
    s.signs[0] = -1;
    gens.push_back(std::move(s));
  } else if (t.family == GroupFamily::D) {
    SignedPermutation s = SignedPermutation::identity(n);
    s.signs[0] = s.signs[1] = -1;
    gens.push_back(std::move(s));
  }
  return gens;
}

int permutation_sign(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace gelfand
