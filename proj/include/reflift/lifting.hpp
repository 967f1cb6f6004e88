#pragma once

// Decides whether an element or subgroup of G(de,e,r) lifts to a finite-order
// subgroup of B/[P,P].
//
// Two independent routes:
//   * structural: for every hyperplane H, every member of the (cyclic) subgroup
//     that stabilises H must fix the normal line H^perp pointwise;
//   * combinatorial: odd order plus conditions on the cycle products of w.
// They must agree on every element; the scan module checks that group-wide.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "reflift/arrangement.hpp"
#include "reflift/monomial.hpp"

namespace reflift {

enum class LiftMethod { Oracle, Fast };

std::string_view to_string(LiftMethod m);

/// (H, l) with w^l in N_H but not in C_H.  For subgroup reports the offending
/// subgroup element is recorded and the power is 1.
struct Witness {
  Hyperplane hyperplane;
  std::uint64_t power = 1;
  std::optional<MonomialElement> element;
};

struct LiftReport {
  std::string subject;
  bool lifts = true;
  std::optional<Witness> witness;
  LiftMethod method = LiftMethod::Oracle;
};

/// Scans <w> against the arrangement; the witness is the first violation in
/// (hyperplane order, power) order.
LiftReport element_lifts_oracle(const MonomialElement& w, const Arrangement& arr);
LiftReport element_lifts_oracle(const MonomialElement& w);

/// Cycle-product criterion for the infinite series.  No hyperplane is touched.
bool element_lifts_fast(const MonomialElement& w);

/// Fast verdict wrapped as a report.  When the verdict is negative the witness
/// is located by a stabiliser scan; if none exists the two routes disagree and
/// InvariantViolation is thrown.
LiftReport element_lifts_fast_report(const MonomialElement& w, const Arrangement& arr);

/// N_H cap G inside C_H for every H.
LiftReport subgroup_lifts(const Subgroup& g, const Arrangement& arr);
LiftReport subgroup_lifts(const Subgroup& g);

/// Every element of G lifts individually.
bool subgroup_lifts_local(const Subgroup& g, const Arrangement& arr);
bool subgroup_lifts_local(const Subgroup& g);

enum class Obstruction { EvenOrder, CentralPower };

std::string_view to_string(Obstruction o);

/// Cheap sufficient conditions for non-lifting: even order, or a proper power
/// that is central and nontrivial.
std::optional<Obstruction> obstruction_shortcuts(const MonomialElement& w);

/// Verifies that a witness really exhibits w^l in N_H \ C_H.
bool witness_is_valid(const MonomialElement& w, const Witness& witness);

}  // namespace reflift
