#pragma once

// Reflection arrangement of G(de,e,r) and the action of the group on it.
//
//   Swap(i,j,t):  z_i = zeta^t z_j   (i < j, t mod de), normal e_i - zeta^{-t} e_j
//   Coord(i):     z_i = 0            (only when d >= 2),  normal e_i
//
// Canonical order: all Swap hyperplanes lexicographically by (i,j,t), then
// Coord by i.  Lattice vectors and reports are indexed by this order.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "reflift/monomial.hpp"

namespace reflift {

struct Hyperplane {
  enum class Kind : std::uint8_t { Swap = 0, Coord = 1 };

  Kind kind = Kind::Swap;
  int i = 0;
  int j = 0;
  int t = 0;

  static Hyperplane coord(int i) { return {Kind::Coord, i, 0, 0}; }
  /// Normalises to i < j: Swap(j,i,t) becomes Swap(i,j,-t mod de).
  static Hyperplane swap(int i, int j, int t, int de);

  bool is_coord() const { return kind == Kind::Coord; }

  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

/// "H[i,j;t]" or "H[i]", indices 1-based.
std::string to_string(const Hyperplane& h);
Hyperplane parse_hyperplane(std::string_view text);

/// zeta_{2de}^exponent: an eigenvalue on a line H^perp.  Elements of U_de sit
/// at even exponents; -1 is exponent de.
struct ScalarRoot {
  int exponent = 0;
  int modulus = 2;

  bool is_one() const { return exponent == 0; }
  friend bool operator==(const ScalarRoot&, const ScalarRoot&) = default;
};

class Arrangement {
 public:
  explicit Arrangement(const GroupDescriptor& desc);

  const GroupDescriptor& descriptor() const { return desc_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const Hyperplane& operator[](std::size_t k) const { return hyperplanes_[k]; }

  bool contains(const Hyperplane& h) const;
  /// Position in canonical order; throws DescriptorMismatch if h is not in the arrangement.
  std::size_t index_of(const Hyperplane& h) const;

  /// image[k] = index_of(act(w, hyperplanes()[k])).
  std::vector<std::size_t> permutation_of(const MonomialElement& w) const;

 private:
  GroupDescriptor desc_;
  std::vector<Hyperplane> hyperplanes_;
};

/// de*r(r-1)/2 Swap hyperplanes followed by r Coord hyperplanes when d >= 2.
std::vector<Hyperplane> hyperplanes(const GroupDescriptor& desc);

Hyperplane act(const MonomialElement& w, const Hyperplane& h);
bool stabilizes(const MonomialElement& w, const Hyperplane& h);

/// Eigenvalue of w on H^perp.  Requires stabilizes(w, h); throws
/// std::invalid_argument otherwise.
ScalarRoot scalar_on_normal(const MonomialElement& w, const Hyperplane& h);

/// w in C_H: w stabilizes H and fixes H^perp pointwise.
bool in_parabolic(const MonomialElement& w, const Hyperplane& h);

/// Orbits of the subgroup on the arrangement, as sorted lists of canonical
/// indices; orbits are ordered by their smallest index.
std::vector<std::vector<std::size_t>> orbits(const Subgroup& g, const Arrangement& arr);
std::vector<std::vector<std::size_t>> orbits(const Subgroup& g);

/// Only the identity fixes every hyperplane.  Throws std::invalid_argument on
/// an empty arrangement.
bool acts_faithfully_on_arrangement(const Subgroup& g);

}  // namespace reflift
