#pragma once

// Exact arithmetic in the monomial reflection groups G(de,e,r).
//
// An element w is stored as a permutation sigma of {0..r-1} and exponents a_i
// modulo de, acting by w(e_i) = zeta^{a_i} e_{sigma(i)} with zeta = exp(2 pi i/de).
// Roots of unity are never materialised as complex numbers.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reflift/errors.hpp"

namespace reflift {

/// Names G(de,e,r) by the triple (d, e, r).  S_n is G(1,1,n).
struct GroupDescriptor {
  int d = 1;
  int e = 1;
  int r = 1;

  /// Validates d, e, r >= 1.
  static GroupDescriptor make(int d, int e, int r);
  static GroupDescriptor symmetric(int n) { return make(1, 1, n); }

  int de() const { return d * e; }

  /// (de)^r r! / e; throws GuardExceeded if it does not fit in 64 bits.
  std::uint64_t order() const;

  friend auto operator<=>(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// "G(de,e,r)", with de written first.
std::string to_string(const GroupDescriptor& desc);

/// Accepts "G(de,e,r)" and "S(n)"; d is recovered as de/e.
GroupDescriptor parse_descriptor(std::string_view text);

class MonomialElement {
 public:
  /// Indices are 0-based.  Exponents are reduced mod de; the sum must be
  /// divisible by e and sigma must be a permutation of {0..r-1}.
  MonomialElement(GroupDescriptor desc, std::vector<int> sigma, std::vector<int> exponents);

  static MonomialElement identity(const GroupDescriptor& desc);

  const GroupDescriptor& descriptor() const { return desc_; }
  int rank() const { return desc_.r; }

  int image(int i) const { return sigma_[static_cast<std::size_t>(i)]; }
  int exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
  std::span<const int> permutation() const { return sigma_; }
  std::span<const int> exponents() const { return exps_; }

  bool is_identity() const;
  bool is_diagonal() const;

  friend bool operator==(const MonomialElement&, const MonomialElement&) = default;
  friend auto operator<=>(const MonomialElement&, const MonomialElement&) = default;

 private:
  struct Unchecked {};
  MonomialElement(Unchecked, GroupDescriptor desc, std::vector<int> sigma, std::vector<int> exps)
      : desc_(desc), sigma_(std::move(sigma)), exps_(std::move(exps)) {}

  friend MonomialElement compose(const MonomialElement&, const MonomialElement&);
  friend MonomialElement inverse(const MonomialElement&);

  GroupDescriptor desc_;
  std::vector<int> sigma_;
  std::vector<int> exps_;
};

MonomialElement identity(const GroupDescriptor& desc);

/// u o v: apply v, then u.  Throws DescriptorMismatch across groups.
MonomialElement compose(const MonomialElement& u, const MonomialElement& v);
inline MonomialElement operator*(const MonomialElement& u, const MonomialElement& v) {
  return compose(u, v);
}

MonomialElement inverse(const MonomialElement& w);

/// w^n by repeated squaring; negative n allowed.
MonomialElement power(const MonomialElement& w, std::int64_t n);

/// One cycle (i_1, ..., i_alpha) of sigma with i_{k+1} = sigma(i_k), together
/// with the exponent of the cycle product a_{i_1} + ... + a_{i_alpha} mod de.
struct CycleData {
  std::vector<int> support;
  int product_exponent = 0;

  std::size_t length() const { return support.size(); }
  friend bool operator==(const CycleData&, const CycleData&) = default;
};

/// Cycles ordered by their smallest index, each starting at that index.
/// Fixed points appear as length-1 cycles.
std::vector<CycleData> cycles(const MonomialElement& w);

/// Multiplicative order of zeta_n^k.
int root_order(int k, int n);

/// lcm over cycles of (length * root_order(product_exponent)).
std::uint64_t order(const MonomialElement& w);

/// "perm=[2,1,3];exp=[1,2,0]" with 1-based images.
std::string to_string(const MonomialElement& w);
MonomialElement parse_element(const GroupDescriptor& desc, std::string_view text);

/// Elements separated by ';' or whitespace, each of the form "perm=[..];exp=[..]".
std::vector<MonomialElement> parse_element_list(const GroupDescriptor& desc, std::string_view text);

/// s_i = (i,i+1) for i < r-1; t = diag(zeta^e,1,..) when d >= 2;
/// s_1' : e_1 -> zeta e_2, e_2 -> zeta^{-1} e_1 when e >= 2 and r >= 2.
std::vector<MonomialElement> standard_generators(const GroupDescriptor& desc);

/// A finite subgroup, stored as its sorted element list (identity first).
class Subgroup {
 public:
  /// Breadth-first closure; throws GuardExceeded past max_size.
  static Subgroup closure(const GroupDescriptor& desc, std::span<const MonomialElement> gens,
                          std::size_t max_size = kDefaultGuard);
  static Subgroup trivial(const GroupDescriptor& desc);
  /// Throws InvariantViolation unless the set is closed and contains the identity.
  static Subgroup from_elements(const GroupDescriptor& desc, std::vector<MonomialElement> elements);

  const GroupDescriptor& descriptor() const { return desc_; }
  std::span<const MonomialElement> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const MonomialElement& w) const;
  /// Position of w in elements(); throws DescriptorMismatch if absent.
  std::size_t index_of(const MonomialElement& w) const;

 private:
  Subgroup(GroupDescriptor desc, std::vector<MonomialElement> sorted)
      : desc_(desc), elements_(std::move(sorted)) {}

  GroupDescriptor desc_;
  std::vector<MonomialElement> elements_;
};

/// Calls fn on every element of G(desc) exactly once.
void for_each_element(const GroupDescriptor& desc,
                      const std::function<void(const MonomialElement&)>& fn,
                      std::size_t guard = kDefaultGuard);

/// All elements of G(desc) in generation order (permutations lexicographic,
/// then exponent vectors).  Throws GuardExceeded when order() > guard.
std::vector<MonomialElement> enumerate(const GroupDescriptor& desc, std::size_t guard = kDefaultGuard);

/// Elements commuting with every standard generator.
Subgroup center(const GroupDescriptor& desc, std::size_t guard = kDefaultGuard);

/// True iff w commutes with every standard generator of its group.
bool is_central(const MonomialElement& w);

}  // namespace reflift
