#include "reflift/scan.hpp"

#include "reflift/lifting.hpp"

namespace reflift {

namespace {

ElementVerdict verdict(const MonomialElement& w, const Arrangement& arr) {
  return {order(w), element_lifts_oracle(w, arr).lifts, element_lifts_fast(w)};
}

}  // namespace

std::vector<ElementVerdict> scan_elements(std::span<const MonomialElement> elements, const Arrangement& arr,
                                          Execution exec) {
  std::vector<ElementVerdict> out(elements.size());
  const auto n = static_cast<std::int64_t>(elements.size());
  if (exec == Execution::Serial) {
    for (std::int64_t k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = verdict(elements[static_cast<std::size_t>(k)], arr);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(k)] = verdict(elements[static_cast<std::size_t>(k)], arr);
  }
  return out;
}

GroupScan scan_group(const GroupDescriptor& desc, Execution exec, std::size_t guard) {
  const auto elements = enumerate(desc, guard);
  const Arrangement arr(desc);
  const auto verdicts = scan_elements(elements, arr, exec);

  GroupScan s;
  s.desc = desc;
  s.elements = elements.size();
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const auto& v = verdicts[k];
    if (v.oracle) ++s.oracle_lifting;
    if (v.oracle != v.fast) {
      ++s.mismatches;
      if (!s.first_mismatch) s.first_mismatch = elements[k];
    }
    if (v.oracle && v.order % 2 == 0) ++s.even_order_lifting;
    if (!v.oracle && v.order % 2 == 1) {
      ++s.odd_order_rejected;
      if (!s.first_odd_rejected) s.first_odd_rejected = elements[k];
    }
    if (v.oracle && !elements[k].is_identity() && !s.first_nontrivial_lifting) {
      s.first_nontrivial_lifting = elements[k];
    }
  }
  return s;
}

}  // namespace reflift
