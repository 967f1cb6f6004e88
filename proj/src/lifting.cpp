#include "reflift/lifting.hpp"

namespace reflift {

std::string_view to_string(LiftMethod m) { return m == LiftMethod::Oracle ? "oracle" : "fast"; }

std::string_view to_string(Obstruction o) {
  return o == Obstruction::EvenOrder ? "even-order" : "central-power";
}

LiftReport element_lifts_oracle(const MonomialElement& w, const Arrangement& arr) {
  if (w.descriptor() != arr.descriptor()) throw DescriptorMismatch("element and arrangement differ");
  LiftReport report{to_string(w), true, std::nullopt, LiftMethod::Oracle};
  const auto n = order(w);
  std::vector<MonomialElement> powers;
  powers.reserve(n);
  auto p = w;
  for (std::uint64_t l = 1; l <= n; ++l) {
    powers.push_back(p);
    p = compose(p, w);
  }
  for (const auto& h : arr.hyperplanes()) {
    for (std::uint64_t l = 1; l <= n; ++l) {
      const auto& wl = powers[l - 1];
      if (stabilizes(wl, h) && !scalar_on_normal(wl, h).is_one()) {
        report.lifts = false;
        report.witness = Witness{h, l, std::nullopt};
        return report;
      }
    }
  }
  return report;
}

LiftReport element_lifts_oracle(const MonomialElement& w) {
  return element_lifts_oracle(w, Arrangement(w.descriptor()));
}

bool element_lifts_fast(const MonomialElement& w) {
  const auto& desc = w.descriptor();
  const int de = desc.de();
  if (desc.r == 1) return w.is_identity();
  if (order(w) % 2 == 0) return false;
  const auto cs = cycles(w);
  if (desc.d >= 2 || !w.is_diagonal()) {
    for (const auto& c : cs) {
      if (c.product_exponent != 0) return false;
    }
    return true;
  }
  // d = 1, diagonal: ord(a_i - a_j) must be a multiple of ord(a_i) and ord(a_j).
  for (int i = 0; i < desc.r; ++i) {
    for (int j = 0; j < desc.r; ++j) {
      if (i == j) continue;
      const int diff = root_order(w.exponent(i) - w.exponent(j), de);
      if (diff % root_order(w.exponent(i), de) != 0 || diff % root_order(w.exponent(j), de) != 0) return false;
    }
  }
  return true;
}

LiftReport element_lifts_fast_report(const MonomialElement& w, const Arrangement& arr) {
  LiftReport report{to_string(w), element_lifts_fast(w), std::nullopt, LiftMethod::Fast};
  if (!report.lifts) {
    auto located = element_lifts_oracle(w, arr);
    if (located.lifts) {
      throw InvariantViolation("fast criterion rejects " + to_string(w) + " in " + to_string(w.descriptor()) +
                               " but no stabiliser violation exists");
    }
    report.witness = located.witness;
  }
  return report;
}

LiftReport subgroup_lifts(const Subgroup& g, const Arrangement& arr) {
  if (g.descriptor() != arr.descriptor()) throw DescriptorMismatch("subgroup and arrangement differ");
  LiftReport report{"subgroup of order " + std::to_string(g.size()) + " in " + to_string(g.descriptor()), true,
                    std::nullopt, LiftMethod::Oracle};
  for (const auto& h : arr.hyperplanes()) {
    for (const auto& x : g.elements()) {
      if (stabilizes(x, h) && !scalar_on_normal(x, h).is_one()) {
        report.lifts = false;
        report.witness = Witness{h, 1, x};
        return report;
      }
    }
  }
  return report;
}

LiftReport subgroup_lifts(const Subgroup& g) { return subgroup_lifts(g, Arrangement(g.descriptor())); }

bool subgroup_lifts_local(const Subgroup& g, const Arrangement& arr) {
  for (const auto& x : g.elements()) {
    if (!element_lifts_oracle(x, arr).lifts) return false;
  }
  return true;
}

bool subgroup_lifts_local(const Subgroup& g) { return subgroup_lifts_local(g, Arrangement(g.descriptor())); }

std::optional<Obstruction> obstruction_shortcuts(const MonomialElement& w) {
  const auto n = order(w);
  if (n % 2 == 0) return Obstruction::EvenOrder;
  auto p = w;
  for (std::uint64_t k = 1; k < n; ++k) {
    if (!p.is_identity() && is_central(p)) return Obstruction::CentralPower;
    p = compose(p, w);
  }
  return std::nullopt;
}

bool witness_is_valid(const MonomialElement& w, const Witness& witness) {
  const auto x = witness.element ? *witness.element : power(w, static_cast<std::int64_t>(witness.power));
  const Arrangement arr(x.descriptor());
  if (!arr.contains(witness.hyperplane)) return false;
  return stabilizes(x, witness.hyperplane) && !in_parabolic(x, witness.hyperplane);
}

}  // namespace reflift
