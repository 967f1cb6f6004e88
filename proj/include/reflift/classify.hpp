#pragma once

// Classification predicates for the infinite series, free actions on the
// arrangement, and the permutation-group constructions (affine Frobenius
// groups, Cayley embeddings) used to produce liftable odd-order subgroups.

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "reflift/monomial.hpp"

namespace reflift {

// ---------------------------------------------------------------------------
// Bieberbach and odd-order lifting property

/// r = 1, or r = 2 and d >= 2, or r = 2, d = 1 and e a power of two.
bool is_bieberbach_series(const GroupDescriptor& desc);

/// No nonidentity element passes the structural lifting test.
bool bieberbach_bruteforce(const GroupDescriptor& desc, std::size_t guard = kDefaultGuard);

/// Exceptional groups G_4..G_37 whose quotient is Bieberbach (stored data).
const std::set<std::string>& exceptional_bieberbach_list();

/// Every odd-order element lifts: r = 1 with d a power of two; r = 2 with d = 1;
/// otherwise de a power of two.
bool has_odd_lift_property(const GroupDescriptor& desc);
bool has_odd_lift_property_bruteforce(const GroupDescriptor& desc, std::size_t guard = kDefaultGuard);

bool is_power_of_two(std::uint64_t n);

// ---------------------------------------------------------------------------
// Permutation groups

/// 0-based image list of a permutation of {0..n-1}.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation compose(const Permutation& a, const Permutation& b);  // apply b, then a
Permutation inverse(const Permutation& p);
/// Lengths of all cycles (fixed points included), sorted ascending.
std::vector<int> cycle_type(const Permutation& p);
bool is_permutation(const Permutation& p);

class PermutationGroup {
 public:
  static PermutationGroup closure(int degree, std::span<const Permutation> gens, std::size_t max_size = kDefaultGuard);
  /// Throws InvariantViolation unless closed with identity.
  static PermutationGroup from_elements(int degree, std::vector<Permutation> elements);
  static PermutationGroup trivial(int degree);

  int degree() const { return degree_; }
  std::span<const Permutation> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Permutation& p) const;
  std::size_t index_of(const Permutation& p) const;

 private:
  PermutationGroup(int degree, std::vector<Permutation> sorted) : degree_(degree), elements_(std::move(sorted)) {}

  int degree_ = 1;
  std::vector<Permutation> elements_;
};

/// Permutation group as a subgroup of G(1,1,n) = S_n.
Subgroup as_symmetric_subgroup(const PermutationGroup& g);
/// Underlying permutations of a subgroup of G(1,1,n).
PermutationGroup as_permutation_group(const Subgroup& g);

/// Cycle type k^{n/k} or 1^1 k^{(n-1)/k} with k odd; the identity qualifies.
bool in_F_n(const Permutation& p, int n);

/// No nonidentity element preserves a 2-subset {i,j}.
bool free_action_symmetric(const PermutationGroup& g);

/// Every element lies in F_n.
bool all_in_F_n(const PermutationGroup& g);

// ---------------------------------------------------------------------------
// Infinite series

/// All cycles of sigma_w share one odd length k and every cycle product is 1.
bool in_F_deer(const MonomialElement& w);

/// No nonidentity element stabilises any hyperplane.
bool free_action_general(const Subgroup& g);

bool all_in_F_deer(const Subgroup& g);

// ---------------------------------------------------------------------------
// Affine Frobenius groups Z/p x| Z/q acting on Z/p

struct FrobeniusSpec {
  int p = 7;
  int q = 3;
  int m = 2;

  /// Throws std::invalid_argument unless p is an odd prime, q is odd and
  /// divides p-1, and m has multiplicative order q mod p.
  void validate() const;
  /// Smallest m >= 2 of multiplicative order q mod p.
  static FrobeniusSpec with_smallest_multiplier(int p, int q);
};

struct FrobeniusElementCheck {
  Permutation perm;
  bool in_kernel = false;
  int order = 1;
  int fixed_points = 0;
  int cycles_of_order_length = 0;  // cycles of length == order
  bool matches_prediction = false;
};

struct FrobeniusAction {
  FrobeniusSpec spec;
  PermutationGroup group;
  std::vector<FrobeniusElementCheck> checks;  // aligned with group.elements()
  bool faithful = false;
  bool kernel_fixed_point_free = false;
  bool complement_single_fixed_point = false;
  bool cycle_structure_ok = false;
};

/// {x -> m^j x + b mod p}; element checks compare each permutation with the
/// predicted decomposition ([G:H]/k cycles in the kernel, one fixed point and
/// ([G:H]-1)/k cycles otherwise).
FrobeniusAction frobenius_coset_action(const FrobeniusSpec& spec);

/// Left-translation action on the sorted element list.
PermutationGroup cayley_embedding(const PermutationGroup& g, std::size_t guard = 5000);
PermutationGroup cayley_embedding(const Subgroup& g, std::size_t guard = 5000);

}  // namespace reflift
