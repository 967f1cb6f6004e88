#include "reflift/classify.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "reflift/arrangement.hpp"
#include "reflift/lifting.hpp"
#include "reflift/scan.hpp"

namespace reflift {

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

bool is_bieberbach_series(const GroupDescriptor& desc) {
  if (desc.r == 1) return true;
  if (desc.r != 2) return false;
  return desc.d >= 2 || is_power_of_two(static_cast<std::uint64_t>(desc.e));
}

bool bieberbach_bruteforce(const GroupDescriptor& desc, std::size_t guard) {
  return scan_group(desc, Execution::Parallel, guard).oracle_lifting == 1;
}

const std::set<std::string>& exceptional_bieberbach_list() {
  static const std::set<std::string> list{"G_4",  "G_5",  "G_6",  "G_7",  "G_10", "G_11",
                                          "G_14", "G_15", "G_18", "G_19", "G_25", "G_26"};
  return list;
}

bool has_odd_lift_property(const GroupDescriptor& desc) {
  if (desc.r == 1) return is_power_of_two(static_cast<std::uint64_t>(desc.d));
  if (desc.r == 2 && desc.d == 1) return true;
  return is_power_of_two(static_cast<std::uint64_t>(desc.de()));
}

bool has_odd_lift_property_bruteforce(const GroupDescriptor& desc, std::size_t guard) {
  return scan_group(desc, Execution::Parallel, guard).odd_order_rejected == 0;
}

// ---------------------------------------------------------------------------

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DescriptorMismatch("compose: permutations of different degree");
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lengths;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (auto i = s; !seen[i]; i = static_cast<std::size_t>(p[i])) {
      seen[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

PermutationGroup PermutationGroup::closure(int degree, std::span<const Permutation> gens, std::size_t max_size) {
  for (const auto& g : gens) {
    if (g.size() != static_cast<std::size_t>(degree) || !is_permutation(g)) {
      throw DescriptorMismatch("closure: generator is not a permutation of degree " + std::to_string(degree));
    }
  }
  std::set<Permutation> seen;
  std::deque<Permutation> frontier;
  auto add = [&](Permutation p) {
    if (seen.insert(p).second) {
      if (seen.size() > max_size) {
        throw GuardExceeded("permutation group closure exceeds " + std::to_string(max_size) + " elements");
      }
      frontier.push_back(std::move(p));
    }
  };
  add(identity_permutation(degree));
  while (!frontier.empty()) {
    auto x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) add(compose(x, g));
  }
  return PermutationGroup(degree, std::vector<Permutation>(seen.begin(), seen.end()));
}

PermutationGroup PermutationGroup::from_elements(int degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermutationGroup g(degree, std::move(elements));
  if (g.elements_.empty() || g.elements_.front() != identity_permutation(degree)) {
    throw InvariantViolation("permutation group lacks the identity");
  }
  for (const auto& x : g.elements_) {
    if (x.size() != static_cast<std::size_t>(degree) || !is_permutation(x)) {
      throw DescriptorMismatch("permutation group element has wrong degree");
    }
    for (const auto& y : g.elements_) {
      if (!g.contains(compose(x, y))) throw InvariantViolation("permutation group not closed");
    }
  }
  return g;
}

PermutationGroup PermutationGroup::trivial(int degree) {
  return PermutationGroup(degree, {identity_permutation(degree)});
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermutationGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) throw DescriptorMismatch("permutation not in group");
  return static_cast<std::size_t>(it - elements_.begin());
}

Subgroup as_symmetric_subgroup(const PermutationGroup& g) {
  const auto desc = GroupDescriptor::symmetric(g.degree());
  std::vector<MonomialElement> elements;
  elements.reserve(g.size());
  for (const auto& p : g.elements()) {
    elements.emplace_back(desc, p, std::vector<int>(p.size(), 0));
  }
  return Subgroup::from_elements(desc, std::move(elements));
}

PermutationGroup as_permutation_group(const Subgroup& g) {
  const auto& desc = g.descriptor();
  if (desc.d != 1 || desc.e != 1) throw DescriptorMismatch("as_permutation_group needs a subgroup of G(1,1,n)");
  std::vector<Permutation> perms;
  for (const auto& w : g.elements()) perms.emplace_back(w.permutation().begin(), w.permutation().end());
  return PermutationGroup::from_elements(desc.r, std::move(perms));
}

bool in_F_n(const Permutation& p, int n) {
  if (p.size() != static_cast<std::size_t>(n) || !is_permutation(p)) {
    throw DescriptorMismatch("in_F_n: not a permutation of degree " + std::to_string(n));
  }
  const auto type = cycle_type(p);
  int fixed = 0;
  int k = 0;
  int count = 0;
  for (int len : type) {
    if (len == 1) {
      ++fixed;
      continue;
    }
    if (k == 0) k = len;
    if (len != k) return false;
    ++count;
  }
  if (k == 0) return true;  // identity
  if (k % 2 == 0) return false;
  return (fixed == 0 && count * k == n) || (fixed == 1 && count * k == n - 1);
}

bool free_action_symmetric(const PermutationGroup& g) {
  const int n = g.degree();
  for (const auto& p : g.elements()) {
    if (p == identity_permutation(n)) continue;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const int pi = p[static_cast<std::size_t>(i)], pj = p[static_cast<std::size_t>(j)];
        if ((pi == i && pj == j) || (pi == j && pj == i)) return false;
      }
    }
  }
  return true;
}

bool all_in_F_n(const PermutationGroup& g) {
  return std::all_of(g.elements().begin(), g.elements().end(),
                     [&](const Permutation& p) { return in_F_n(p, g.degree()); });
}

bool in_F_deer(const MonomialElement& w) {
  std::size_t k = 0;
  for (const auto& c : cycles(w)) {
    if (c.product_exponent != 0) return false;
    if (k == 0) k = c.length();
    if (c.length() != k) return false;
  }
  return k % 2 == 1;
}

bool free_action_general(const Subgroup& g) {
  const Arrangement arr(g.descriptor());
  for (const auto& w : g.elements()) {
    if (w.is_identity()) continue;
    for (const auto& h : arr.hyperplanes()) {
      if (stabilizes(w, h)) return false;
    }
  }
  return true;
}

bool all_in_F_deer(const Subgroup& g) {
  return std::all_of(g.elements().begin(), g.elements().end(), [](const MonomialElement& w) { return in_F_deer(w); });
}

// ---------------------------------------------------------------------------

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int k = 2; k * k <= p; ++k) {
    if (p % k == 0) return false;
  }
  return true;
}

int mult_order(int m, int p) {
  m %= p;
  if (m == 0) return 0;
  int x = m, k = 1;
  while (x != 1) {
    x = static_cast<int>(static_cast<std::int64_t>(x) * m % p);
    ++k;
  }
  return k;
}

}  // namespace

void FrobeniusSpec::validate() const {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("Frobenius kernel size p must be an odd prime");
  if (q < 1 || q % 2 == 0 || (p - 1) % q != 0) {
    throw std::invalid_argument("Frobenius complement size q must be odd and divide p-1");
  }
  if (mult_order(m, p) != q) throw std::invalid_argument("multiplier m must have order q mod p");
}

FrobeniusSpec FrobeniusSpec::with_smallest_multiplier(int p, int q) {
  FrobeniusSpec s{p, q, 1};
  if (p >= 3 && is_prime(p) && q >= 1) {
    for (int m = 1; m < p; ++m) {
      if (mult_order(m, p) == q) {
        s.m = m;
        break;
      }
    }
  }
  s.validate();
  return s;
}

FrobeniusAction frobenius_coset_action(const FrobeniusSpec& spec) {
  spec.validate();
  const int p = spec.p;
  std::vector<Permutation> perms;
  std::vector<bool> kernel_flags;
  int mj = 1;
  for (int j = 0; j < spec.q; ++j) {
    for (int b = 0; b < p; ++b) {
      Permutation perm(static_cast<std::size_t>(p));
      for (int x = 0; x < p; ++x) perm[static_cast<std::size_t>(x)] = (mj * x + b) % p;
      perms.push_back(std::move(perm));
      kernel_flags.push_back(j == 0);
    }
    mj = mj * spec.m % p;
  }

  FrobeniusAction out{spec, PermutationGroup::from_elements(p, perms), {}, false, true, true, true};
  out.faithful = out.group.size() == perms.size();
  out.checks.resize(out.group.size());
  for (std::size_t k = 0; k < perms.size(); ++k) {
    auto& c = out.checks[out.group.index_of(perms[k])];
    c.perm = perms[k];
    c.in_kernel = kernel_flags[k];
    const auto type = cycle_type(perms[k]);
    c.order = std::accumulate(type.begin(), type.end(), 1, [](int a, int b) { return std::lcm(a, b); });
    c.fixed_points = static_cast<int>(std::count(type.begin(), type.end(), 1));
    c.cycles_of_order_length = static_cast<int>(std::count(type.begin(), type.end(), c.order));
    const bool identity = c.order == 1;
    const int nontrivial_cycles = static_cast<int>(type.size()) - c.fixed_points;
    if (identity) {
      c.matches_prediction = c.fixed_points == p;
    } else if (c.in_kernel) {
      c.matches_prediction = c.fixed_points == 0 && nontrivial_cycles == p / c.order && p % c.order == 0 &&
                             c.cycles_of_order_length == nontrivial_cycles;
      out.kernel_fixed_point_free = out.kernel_fixed_point_free && c.fixed_points == 0;
    } else {
      c.matches_prediction = c.fixed_points == 1 && (p - 1) % c.order == 0 &&
                             nontrivial_cycles == (p - 1) / c.order && c.cycles_of_order_length == nontrivial_cycles;
      out.complement_single_fixed_point = out.complement_single_fixed_point && c.fixed_points == 1;
    }
    out.cycle_structure_ok = out.cycle_structure_ok && c.matches_prediction;
  }
  return out;
}

PermutationGroup cayley_embedding(const PermutationGroup& g, std::size_t guard) {
  if (g.size() > guard) throw GuardExceeded("Cayley embedding: group larger than " + std::to_string(guard));
  const auto n = static_cast<int>(g.size());
  std::vector<Permutation> images;
  images.reserve(g.size());
  for (const auto& x : g.elements()) {
    Permutation perm(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
      perm[k] = static_cast<int>(g.index_of(compose(x, g.elements()[k])));
    }
    images.push_back(std::move(perm));
  }
  return PermutationGroup::from_elements(n, std::move(images));
}

PermutationGroup cayley_embedding(const Subgroup& g, std::size_t guard) {
  if (g.size() > guard) throw GuardExceeded("Cayley embedding: group larger than " + std::to_string(guard));
  const auto n = static_cast<int>(g.size());
  std::vector<Permutation> images;
  images.reserve(g.size());
  for (const auto& x : g.elements()) {
    Permutation perm(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
      perm[k] = static_cast<int>(g.index_of(compose(x, g.elements()[k])));
    }
    images.push_back(std::move(perm));
  }
  return PermutationGroup::from_elements(n, std::move(images));
}

}  // namespace reflift
