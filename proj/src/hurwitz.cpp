#include "tropic/hurwitz.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tropic/errors.hpp"

namespace tropic::hurwitz {

Partition Partition::of(std::vector<std::int64_t> parts) {
  for (auto p : parts)
    if (p < 1) throw domain_error("partition with non-positive part");
  std::sort(parts.rbegin(), parts.rend());
  Partition mu;
  mu.parts = std::move(parts);
  return mu;
}

std::int64_t Partition::sum() const {
  return std::accumulate(parts.begin(), parts.end(), std::int64_t(0));
}

bool Partition::trivial() const {
  return std::all_of(parts.begin(), parts.end(), [](std::int64_t p) { return p == 1; });
}

bool Partition::tame(std::int64_t char_p) const {
  if (char_p == 0) return true;
  return std::all_of(parts.begin(), parts.end(),
                     [char_p](std::int64_t p) { return p % char_p != 0; });
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ")";
  return os.str();
}

std::int64_t factorial(std::int64_t n) {
  std::int64_t f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t compute_R(const Query& q) {
  std::int64_t s = (std::int64_t)q.profiles.size();
  std::int64_t lsum = 0;
  for (auto& mu : q.profiles) lsum += mu.length();
  return q.d * (2 - 2 * q.g) + 2 * q.gprime - 2 - s * q.d + lsum;
}

namespace {

using Perm = std::vector<int>;

Perm identity_perm(int d) {
  Perm p(d);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// apply a then b
Perm mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = (int)i;
  return r;
}

bool is_identity(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != (int)i) return false;
  return true;
}

std::vector<std::int64_t> cycle_type(const Perm& a) {
  std::vector<char> seen(a.size(), 0);
  std::vector<std::int64_t> type;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    std::int64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = 1;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

int cycle_count(const Perm& a) {
  std::vector<char> seen(a.size(), 0);
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (std::size_t j = i; !seen[j]; j = a[j]) seen[j] = 1;
  }
  return c;
}

int sign_of(const Perm& a) {
  return ((int)a.size() - cycle_count(a)) % 2 == 0 ? 1 : -1;
}

std::vector<Perm> all_perms(int d) {
  std::vector<Perm> out;
  Perm p = identity_perm(d);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Perm> conjugacy_class(int d, const std::vector<std::int64_t>& type) {
  std::vector<Perm> out;
  Perm p = identity_perm(d);
  do {
    if (cycle_type(p) == type) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct DSU {
  std::vector<int> parent;
  explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Enumerator {
  int d;
  std::int64_t g;
  std::vector<std::vector<Perm>> sigma_classes;
  std::int64_t ntau;
  const Budget& budget;
  bool parity_shortcut;

  std::vector<Perm> sd;    // full S_d, lex order (built lazily for g >= 1)
  std::vector<Perm> taus;  // transpositions, lex order
  std::vector<Perm> factors;
  std::vector<Perm> prefix;  // prefix[i] = product of factors[0..i-1]
  std::int64_t nodes = 0;
  std::int64_t count = 0;
  std::vector<Perm> first_witness;

  Enumerator(const Query& q, std::int64_t ntau_, const Budget& b, bool ps)
      : d((int)q.d), g(q.g), ntau(ntau_), budget(b), parity_shortcut(ps) {
    for (auto& mu : q.profiles) sigma_classes.push_back(conjugacy_class(d, mu.parts));
    if (g >= 1) sd = all_perms(d);
    Perm p = identity_perm(d);
    do {
      if (cycle_count(p) == d - 1) taus.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    prefix.push_back(identity_perm(d));
  }

  bool transitive() const {
    if (d == 1) return true;
    DSU dsu(d);
    for (auto& f : factors)
      for (int i = 0; i < d; ++i) dsu.unite(i, f[i]);
    int root = dsu.find(0);
    for (int i = 1; i < d; ++i)
      if (dsu.find(i) != root) return false;
    return true;
  }

  void leaf() {
    if (!is_identity(prefix.back())) return;
    if (!transitive()) return;
    if (count == 0) first_witness = factors;
    ++count;
  }

  void tick() {
    if (++nodes > budget.max_nodes)
      throw resource_error("enumeration budget exceeded (" + std::to_string(budget.max_nodes) +
                           " nodes)");
  }

  void push(const Perm& f) {
    factors.push_back(f);
    prefix.push_back(mul(prefix.back(), f));
  }
  void pop() {
    factors.pop_back();
    prefix.pop_back();
  }

  // commutator pair blocks, then sigma blocks, then transpositions;
  // prefix.back() is always the running product of the word so far
  void run_pairs(std::int64_t i) {
    if (i == g) {
      run_sigmas(0);
      return;
    }
    for (auto& a : sd) {
      tick();
      for (auto& b : sd) {
        tick();
        Perm comm = mul(mul(a, b), mul(inverse(a), inverse(b)));
        factors.push_back(a);
        factors.push_back(b);
        prefix.push_back(mul(prefix.back(), comm));
        run_pairs(i + 1);
        prefix.pop_back();
        factors.pop_back();
        factors.pop_back();
      }
    }
  }

  void run_sigmas(std::size_t i) {
    if (i == sigma_classes.size()) {
      run_taus(0);
      return;
    }
    // the last factor overall is determined by the product relation
    if (ntau == 0 && i + 1 == sigma_classes.size()) {
      tick();
      Perm needed = inverse(prefix.back());
      if (cycle_type(needed) == cycle_type(sigma_classes[i].front())) {
        push(needed);
        leaf();
        pop();
      }
      return;
    }
    for (auto& s : sigma_classes[i]) {
      tick();
      push(s);
      run_sigmas(i + 1);
      pop();
    }
  }

  void run_taus(std::int64_t i) {
    std::int64_t remaining = ntau - i;
    const Perm& p = prefix.back();
    // p^{-1} must be a product of `remaining` transpositions
    std::int64_t need = d - cycle_count(p);
    if (need > remaining) return;
    if (parity_shortcut && (remaining - need) % 2 != 0) return;
    if (remaining == 0) {
      leaf();
      return;
    }
    if (remaining == 1) {
      tick();
      Perm needed = inverse(p);
      if (cycle_count(needed) == d - 1) {
        push(needed);
        leaf();
        pop();
      }
      return;
    }
    for (auto& t : taus) {
      tick();
      push(t);
      run_taus(i + 1);
      pop();
    }
  }

  void run() {
    if (parity_shortcut) {
      int s = 1;
      for (auto& cls : sigma_classes) {
        if (cls.empty()) return;  // impossible type (cannot happen for partitions of d)
        s *= sign_of(cls.front());
      }
      if (ntau % 2 != 0) s = -s;
      if (s != 1) return;  // parity obstruction: count stays zero
    }
    run_pairs(0);
  }
};

}  // namespace

Result count_tuples(const Query& q, std::int64_t num_transpositions, const Budget& budget,
                    bool parity_shortcut) {
  if (q.d < 1) throw domain_error("degree must be positive");
  if (q.d > budget.max_degree)
    throw resource_error("degree " + std::to_string(q.d) + " exceeds budget bound " +
                         std::to_string(budget.max_degree));
  for (auto& mu : q.profiles)
    if (mu.sum() != q.d)
      throw domain_error("profile " + mu.str() + " is not a partition of " + std::to_string(q.d));
  if (num_transpositions < 0) throw domain_error("negative number of transpositions");
  std::int64_t nfactors = 2 * q.g + (std::int64_t)q.profiles.size() + num_transpositions;
  if (nfactors > budget.max_factors)
    throw resource_error("factor count " + std::to_string(nfactors) + " exceeds budget bound " +
                         std::to_string(budget.max_factors));

  Enumerator en(q, num_transpositions, budget, parity_shortcut);
  en.run();
  Result out;
  out.raw_count = en.count;
  out.value = Rational(en.count, factorial(q.d));
  if (en.count > 0) {
    out.witness = en.first_witness;
    for (std::int64_t i = 1; i <= q.g; ++i) {
      out.witness_roles.push_back("a" + std::to_string(i));
      out.witness_roles.push_back("b" + std::to_string(i));
    }
    for (std::size_t i = 1; i <= q.profiles.size(); ++i)
      out.witness_roles.push_back("sigma" + std::to_string(i));
    for (std::int64_t i = 1; i <= num_transpositions; ++i)
      out.witness_roles.push_back("tau" + std::to_string(i));
  }
  return out;
}

Result hurwitz_number(const Query& q, const Budget& budget) {
  std::int64_t R = compute_R(q);
  if (R < 0) throw domain_error("undefined: R = " + std::to_string(R) + " is negative");
  return count_tuples(q, R, budget);
}

Ternary profile_set_nonempty(const Query& q, std::int64_t char_p, const Budget& budget) {
  for (auto& mu : q.profiles)
    if (!mu.tame(char_p))
      throw domain_error("wild ramification out of scope: profile " + mu.str() +
                         " in characteristic " + std::to_string(char_p));
  bool all_trivial = std::all_of(q.profiles.begin(), q.profiles.end(),
                                 [](const Partition& mu) { return mu.trivial(); });
  if (all_trivial && compute_R(q) >= 0) return Ternary::yes;
  if (q.g == 0 && q.gprime == 0 && q.profiles.size() == 2 &&
      q.profiles[0].parts == std::vector<std::int64_t>{q.d} && q.profiles[0] == q.profiles[1])
    return Ternary::yes;  // the z -> z^d covering
  if (char_p == 0 || char_p > q.d) {
    if (compute_R(q) < 0) return Ternary::no;
    return hurwitz_number(q, budget).raw_count != 0 ? Ternary::yes : Ternary::no;
  }
  return Ternary::unknown;
}

MinimalGenus minimal_source_genus(std::int64_t d, std::int64_t g,
                                  const std::vector<Partition>& profiles, std::int64_t char_p,
                                  const Budget& budget) {
  if (char_p != 0 && char_p <= d)
    throw domain_error("minimal source genus requires characteristic 0 or > d");
  for (auto& mu : profiles)
    if (!mu.tame(char_p)) throw domain_error("wild ramification out of scope");

  std::int64_t deficiency = 0;  // sum (d - l(mu_i))
  for (auto& mu : profiles) deficiency += d - mu.length();
  MinimalGenus out;
  out.upper_bound =
      g == 0 ? 1 + deficiency : 1 + (g - 1) * d + (deficiency + 1) / 2;
  if (out.upper_bound < 0) out.upper_bound = 0;

  for (std::int64_t gp = 0; gp <= out.upper_bound; ++gp) {
    Query q{d, g, gp, profiles};
    if (compute_R(q) < 0) continue;
    Result r = hurwitz_number(q, budget);
    if (r.raw_count != 0) {
      out.gprime = gp;
      out.witness = std::move(r);
      return out;
    }
  }
  throw domain_error("no source genus within the constructive bound; inconsistent query");
}

PaddedProfiles pad_profiles(std::int64_t d, std::int64_t gprime,
                            const std::vector<Partition>& profiles, std::int64_t char_p,
                            const Budget& budget) {
  for (auto& mu : profiles)
    if (!mu.tame(char_p)) throw domain_error("wild ramification out of scope");
  PaddedProfiles out;
  if (profiles.size() == 1 && profiles[0].parts == std::vector<std::int64_t>{d} &&
      (char_p == 0 || d % char_p != 0)) {
    // cyclic Z/d monodromy realizes (d) over genus 0 for every source genus
    out.dprime = d;
    out.profiles = profiles;
    out.cyclic_shortcut = true;
    return out;
  }
  if (char_p != 0 && char_p <= d)
    throw domain_error("profile padding requires characteristic 0 or > d");
  for (std::int64_t dp = d; dp <= budget.max_degree; ++dp) {
    std::vector<Partition> padded;
    for (auto& mu : profiles) {
      std::vector<std::int64_t> parts = mu.parts;
      for (std::int64_t k = 0; k < dp - d; ++k) parts.push_back(1);
      padded.push_back(Partition::of(std::move(parts)));
    }
    Query q{dp, 0, gprime, padded};
    if (compute_R(q) < 0) continue;
    Result r = hurwitz_number(q, budget);
    if (r.raw_count != 0) {
      out.dprime = dp;
      out.profiles = std::move(padded);
      out.witness = std::move(r);
      return out;
    }
  }
  throw resource_error("no padded degree within budget bound " +
                       std::to_string(budget.max_degree));
}

}  // namespace tropic::hurwitz
