#pragma once

// The permutation module Z^A over the arrangement, the split extension
// Z^A x| G for liftable G, and integer 1-cocycles G -> Z^A.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "reflift/arrangement.hpp"
#include "reflift/intlinalg.hpp"
#include "reflift/monomial.hpp"

namespace reflift {

/// Coefficients indexed by the arrangement's canonical hyperplane order.
using LatticeVector = std::vector<std::int64_t>;

LatticeVector zero_vector(const Arrangement& arr);
LatticeVector basis_vector(const Arrangement& arr, const Hyperplane& h);
LatticeVector add(const LatticeVector& a, const LatticeVector& b);
LatticeVector subtract(const LatticeVector& a, const LatticeVector& b);
LatticeVector negate(const LatticeVector& a);
bool is_zero(const LatticeVector& v);

/// g.v: the coefficient of v at H moves to g(H).
LatticeVector permute_vector(const Arrangement& arr, const MonomialElement& g, const LatticeVector& v);

struct SemidirectElement {
  LatticeVector v;
  MonomialElement g;

  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

/// (v,g)(w,h) = (v + g.w, gh).
SemidirectElement semidirect_compose(const Arrangement& arr, const SemidirectElement& a, const SemidirectElement& b);
SemidirectElement semidirect_inverse(const Arrangement& arr, const SemidirectElement& a);
SemidirectElement semidirect_identity(const Arrangement& arr);

/// v + g.v + ... + g^{n-1}.v for n = order(g).
LatticeVector orbit_sum(const Arrangement& arr, const MonomialElement& g, const LatticeVector& v);

/// order(g) when the orbit sum of v vanishes, nullopt (infinite) otherwise.
std::optional<std::uint64_t> semidirect_order(const Arrangement& arr, const SemidirectElement& x);

/// A map G -> Z^A stored on every element, aligned with Subgroup::elements().
struct Cocycle {
  std::vector<LatticeVector> values;

  friend bool operator==(const Cocycle&, const Cocycle&) = default;
};

Cocycle zero_cocycle(const Subgroup& g, const Arrangement& arr);

/// c(gh) = c(g) + g.c(h) for every pair.
bool is_cocycle(const Cocycle& c, const Subgroup& g, const Arrangement& arr);

/// g -> x - g.x.
Cocycle coboundary(const LatticeVector& x, const Subgroup& g, const Arrangement& arr);

/// Stacked system (I - P_g) x = c(g) over all g in G, factored once.
class CocycleSolver {
 public:
  CocycleSolver(const Subgroup& g, const Arrangement& arr);

  /// Some x with c = coboundary(x).  Throws std::invalid_argument if c is not
  /// a cocycle and InvariantViolation if no integral solution exists.
  LatticeVector trivialize(const Cocycle& c) const;

  /// Rank of the stacked matrix; |A| - rank is the rank of the fixed lattice.
  std::size_t stacked_rank() const { return system_.rank(); }

 private:
  const Subgroup* group_;
  const Arrangement* arr_;
  IntegerSystem system_;
};

LatticeVector trivialize_cocycle(const Cocycle& c, const Subgroup& g, const Arrangement& arr);

/// Rank of {x : g.x = x for all g}, from the stacked system.  Throws
/// InvariantViolation if it differs from the number of orbits.
std::size_t fixed_lattice_rank(const Subgroup& g, const Arrangement& arr);

/// s(g) for g in G, aligned with Subgroup::elements().
using Splitting = std::vector<SemidirectElement>;

/// g -> (0, g).
Splitting canonical_splitting(const Subgroup& g, const Arrangement& arr);

/// g -> (x,1) s(g) (x,1)^{-1}.
Splitting conjugate_splitting(const Splitting& s, const LatticeVector& x, const Arrangement& arr);

/// True iff s is a homomorphism G -> Z^A x| G that is a section of the projection.
bool is_splitting(const Splitting& s, const Subgroup& g, const Arrangement& arr);

/// x with (x,1) s1(g) (x,1)^{-1} = s2(g) for all g.  Throws
/// std::invalid_argument if either input is not a splitting.
LatticeVector conjugate_complement(const Splitting& s1, const Splitting& s2, const Subgroup& g,
                                   const Arrangement& arr);

}  // namespace reflift
