#include "reflift/lattice.hpp"

#include <stdexcept>

namespace reflift {

namespace {

void check_length(const Arrangement& arr, const LatticeVector& v) {
  if (v.size() != arr.size()) {
    throw DescriptorMismatch("lattice vector of length " + std::to_string(v.size()) + " for an arrangement of " +
                             std::to_string(arr.size()) + " hyperplanes");
  }
}

void check_group(const Subgroup& g, const Arrangement& arr) {
  if (g.descriptor() != arr.descriptor()) throw DescriptorMismatch("subgroup and arrangement differ");
}

}  // namespace

LatticeVector zero_vector(const Arrangement& arr) { return LatticeVector(arr.size(), 0); }

LatticeVector basis_vector(const Arrangement& arr, const Hyperplane& h) {
  auto v = zero_vector(arr);
  v[arr.index_of(h)] = 1;
  return v;
}

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw DescriptorMismatch("lattice vectors of different length");
  LatticeVector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = checked_add(a[k], b[k]);
  return out;
}

LatticeVector negate(const LatticeVector& a) {
  LatticeVector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = checked_mul(a[k], -1);
  return out;
}

LatticeVector subtract(const LatticeVector& a, const LatticeVector& b) { return add(a, negate(b)); }

bool is_zero(const LatticeVector& v) {
  for (auto x : v) {
    if (x != 0) return false;
  }
  return true;
}

LatticeVector permute_vector(const Arrangement& arr, const MonomialElement& g, const LatticeVector& v) {
  check_length(arr, v);
  const auto image = arr.permutation_of(g);
  LatticeVector out(v.size(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) out[image[k]] = v[k];
  return out;
}

SemidirectElement semidirect_compose(const Arrangement& arr, const SemidirectElement& a, const SemidirectElement& b) {
  return {add(a.v, permute_vector(arr, a.g, b.v)), compose(a.g, b.g)};
}

SemidirectElement semidirect_inverse(const Arrangement& arr, const SemidirectElement& a) {
  auto gi = inverse(a.g);
  return {negate(permute_vector(arr, gi, a.v)), gi};
}

SemidirectElement semidirect_identity(const Arrangement& arr) {
  return {zero_vector(arr), MonomialElement::identity(arr.descriptor())};
}

LatticeVector orbit_sum(const Arrangement& arr, const MonomialElement& g, const LatticeVector& v) {
  check_length(arr, v);
  const auto n = order(g);
  auto sum = zero_vector(arr);
  auto term = v;
  for (std::uint64_t k = 0; k < n; ++k) {
    sum = add(sum, term);
    term = permute_vector(arr, g, term);
  }
  return sum;
}

std::optional<std::uint64_t> semidirect_order(const Arrangement& arr, const SemidirectElement& x) {
  if (!is_zero(orbit_sum(arr, x.g, x.v))) return std::nullopt;
  return order(x.g);
}

Cocycle zero_cocycle(const Subgroup& g, const Arrangement& arr) {
  check_group(g, arr);
  return {std::vector<LatticeVector>(g.size(), zero_vector(arr))};
}

bool is_cocycle(const Cocycle& c, const Subgroup& g, const Arrangement& arr) {
  check_group(g, arr);
  if (c.values.size() != g.size()) return false;
  for (const auto& v : c.values) {
    if (v.size() != arr.size()) return false;
  }
  const auto elems = g.elements();
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      const auto ab = g.index_of(compose(elems[a], elems[b]));
      if (c.values[ab] != add(c.values[a], permute_vector(arr, elems[a], c.values[b]))) return false;
    }
  }
  return true;
}

Cocycle coboundary(const LatticeVector& x, const Subgroup& g, const Arrangement& arr) {
  check_group(g, arr);
  check_length(arr, x);
  Cocycle c;
  c.values.reserve(g.size());
  for (const auto& w : g.elements()) c.values.push_back(subtract(x, permute_vector(arr, w, x)));
  return c;
}

namespace {

IntegerSystem stacked_system(const Subgroup& g, const Arrangement& arr) {
  check_group(g, arr);
  const std::size_t n = arr.size();
  std::vector<std::int64_t> coeffs(g.size() * n * n, 0);
  std::size_t block = 0;
  for (const auto& w : g.elements()) {
    // Row image[k] of (I - P_w): +1 at column image[k], -1 at column k.
    const auto image = arr.permutation_of(w);
    auto* base = coeffs.data() + block * n * n;
    for (std::size_t k = 0; k < n; ++k) {
      base[image[k] * n + image[k]] += 1;
      base[image[k] * n + k] -= 1;
    }
    ++block;
  }
  return IntegerSystem(g.size() * n, n, coeffs);
}

}  // namespace

CocycleSolver::CocycleSolver(const Subgroup& g, const Arrangement& arr)
    : group_(&g), arr_(&arr), system_(stacked_system(g, arr)) {}

LatticeVector CocycleSolver::trivialize(const Cocycle& c) const {
  if (!is_cocycle(c, *group_, *arr_)) throw std::invalid_argument("trivialize_cocycle: input is not a cocycle");
  std::vector<std::int64_t> rhs;
  rhs.reserve(system_.rows());
  for (const auto& v : c.values) rhs.insert(rhs.end(), v.begin(), v.end());
  auto x = system_.solve(rhs);
  if (!x) {
    throw InvariantViolation("no integral solution for a 1-cocycle into the permutation module of " +
                             to_string(arr_->descriptor()));
  }
  return *x;
}

LatticeVector trivialize_cocycle(const Cocycle& c, const Subgroup& g, const Arrangement& arr) {
  return CocycleSolver(g, arr).trivialize(c);
}

std::size_t fixed_lattice_rank(const Subgroup& g, const Arrangement& arr) {
  const CocycleSolver solver(g, arr);
  const auto rank = arr.size() - solver.stacked_rank();
  const auto orbit_count = orbits(g, arr).size();
  if (rank != orbit_count) {
    throw InvariantViolation("fixed lattice rank " + std::to_string(rank) + " differs from orbit count " +
                             std::to_string(orbit_count));
  }
  return rank;
}

Splitting canonical_splitting(const Subgroup& g, const Arrangement& arr) {
  check_group(g, arr);
  Splitting s;
  for (const auto& w : g.elements()) s.push_back({zero_vector(arr), w});
  return s;
}

Splitting conjugate_splitting(const Splitting& s, const LatticeVector& x, const Arrangement& arr) {
  const SemidirectElement shift{x, MonomialElement::identity(arr.descriptor())};
  const auto shift_inv = semidirect_inverse(arr, shift);
  Splitting out;
  out.reserve(s.size());
  for (const auto& y : s) out.push_back(semidirect_compose(arr, semidirect_compose(arr, shift, y), shift_inv));
  return out;
}

bool is_splitting(const Splitting& s, const Subgroup& g, const Arrangement& arr) {
  check_group(g, arr);
  if (s.size() != g.size()) return false;
  const auto elems = g.elements();
  for (std::size_t a = 0; a < elems.size(); ++a) {
    if (s[a].g != elems[a] || s[a].v.size() != arr.size()) return false;
  }
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      const auto ab = g.index_of(compose(elems[a], elems[b]));
      if (semidirect_compose(arr, s[a], s[b]) != s[ab]) return false;
    }
  }
  return true;
}

LatticeVector conjugate_complement(const Splitting& s1, const Splitting& s2, const Subgroup& g,
                                   const Arrangement& arr) {
  if (!is_splitting(s1, g, arr) || !is_splitting(s2, g, arr)) {
    throw std::invalid_argument("conjugate_complement: inputs must be splitting homomorphisms");
  }
  Cocycle diff;
  for (std::size_t a = 0; a < g.size(); ++a) diff.values.push_back(subtract(s2[a].v, s1[a].v));
  auto x = trivialize_cocycle(diff, g, arr);
  if (conjugate_splitting(s1, x, arr) != s2) {
    throw InvariantViolation("conjugate_complement: recovered vector does not conjugate s1 to s2");
  }
  return x;
}

}  // namespace reflift
