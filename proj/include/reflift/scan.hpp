#pragma once

// Group-wide brute-force scans.  Each kernel has an OpenMP version and a
// serial reference with identical output; results are written per element
// and reduced in element order, so the parallel scan is deterministic.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "reflift/arrangement.hpp"
#include "reflift/monomial.hpp"

namespace reflift {

enum class Execution { Serial, Parallel };

struct ElementVerdict {
  std::uint64_t order = 1;
  bool oracle = false;
  bool fast = false;

  friend bool operator==(const ElementVerdict&, const ElementVerdict&) = default;
};

std::vector<ElementVerdict> scan_elements(std::span<const MonomialElement> elements, const Arrangement& arr,
                                          Execution exec = Execution::Parallel);

struct GroupScan {
  GroupDescriptor desc;
  std::size_t elements = 0;
  std::size_t oracle_lifting = 0;      // includes the identity
  std::size_t mismatches = 0;          // oracle != fast
  std::size_t even_order_lifting = 0;  // must stay 0
  std::size_t odd_order_rejected = 0;  // odd-order elements the oracle rejects
  std::optional<MonomialElement> first_mismatch;
  std::optional<MonomialElement> first_odd_rejected;
  std::optional<MonomialElement> first_nontrivial_lifting;

  friend bool operator==(const GroupScan&, const GroupScan&) = default;
};

/// Enumerates G(desc) and runs both lifting routes on every element.
GroupScan scan_group(const GroupDescriptor& desc, Execution exec = Execution::Parallel,
                     std::size_t guard = kDefaultGuard);

}  // namespace reflift
