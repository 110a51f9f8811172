#ifndef TROPIC_HURWITZ_HPP
#define TROPIC_HURWITZ_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropic/errors.hpp"
#include "tropic/rational.hpp"

namespace tropic::hurwitz {

struct Partition {
  std::vector<std::int64_t> parts;  // non-increasing, positive

  static Partition of(std::vector<std::int64_t> parts);
  std::int64_t sum() const;
  std::int64_t length() const { return (std::int64_t)parts.size(); }
  bool trivial() const;  // all parts equal to 1
  bool tame(std::int64_t char_p) const;
  std::string str() const;
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
};

struct Query {
  std::int64_t d = 1;       // degree
  std::int64_t g = 0;       // target genus
  std::int64_t gprime = 0;  // source genus
  std::vector<Partition> profiles;
};

struct Budget {
  std::int64_t max_degree = 6;
  std::int64_t max_factors = 10;
  std::int64_t max_nodes = 50000000;
};

// R = d(2-2g) + 2g' - 2 - sd + sum l(mu_i); may be negative.
std::int64_t compute_R(const Query& q);

struct Result {
  Rational value;               // raw_count / d!
  std::int64_t raw_count = 0;   // transitive tuples
  // first tuple in lexicographic enumeration order, one permutation per
  // factor in one-line notation; empty when the count is zero
  std::vector<std::vector<int>> witness;
  std::vector<std::string> witness_roles;
};

// Number of tuples (a_1,b_1,...,a_g,b_g, s_1..s_s, t_1..t_R) in S_d with
// prod [a_i,b_i] s_1...s_s t_1...t_R = 1, s_i of cycle type mu_i, t_j
// transpositions, generating a transitive subgroup.  `num_transpositions`
// is explicit so the parity-vanishing property is testable directly.
Result count_tuples(const Query& q, std::int64_t num_transpositions, const Budget& budget,
                    bool parity_shortcut = true);

// H^d_{g',g}(mu_1,...,mu_s) as an exact rational.  Throws domain_error when
// R < 0 and resource_error when a budget is exceeded.
Result hurwitz_number(const Query& q, const Budget& budget = {});

enum class Ternary { yes, no, unknown };

// Non-emptiness of the covering set over an algebraically closed field of
// the given characteristic.  Shortcuts (all-trivial profiles, the z -> z^d
// family) apply in any characteristic; otherwise Hurwitz-number vanishing
// decides for char 0 or char > d, and the answer is unknown for
// 0 < char <= d.
Ternary profile_set_nonempty(const Query& q, std::int64_t char_p, const Budget& budget = {});

struct MinimalGenus {
  std::int64_t gprime = 0;
  std::int64_t upper_bound = 0;  // the constructive bound on the least g'
  Result witness;
};

MinimalGenus minimal_source_genus(std::int64_t d, std::int64_t g,
                                  const std::vector<Partition>& profiles, std::int64_t char_p,
                                  const Budget& budget = {});

struct PaddedProfiles {
  std::int64_t dprime = 0;
  std::vector<Partition> profiles;
  std::optional<Result> witness;  // absent when the cyclic shortcut applies
  bool cyclic_shortcut = false;
};

// Smallest d' >= d such that the profiles padded with d'-d extra 1s give a
// nonempty covering set over a genus-0 target.
PaddedProfiles pad_profiles(std::int64_t d, std::int64_t gprime,
                            const std::vector<Partition>& profiles, std::int64_t char_p,
                            const Budget& budget = {});

std::int64_t factorial(std::int64_t n);

}  // namespace tropic::hurwitz

#endif
