#include "reflift/arrangement.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <regex>

namespace reflift {

namespace {

int mod(int a, int n) {
  int m = a % n;
  return m < 0 ? m + n : m;
}

void check_member(const GroupDescriptor& desc, const Hyperplane& h) {
  if (h.is_coord()) {
    if (desc.d < 2) {
      throw DescriptorMismatch("coordinate hyperplane " + to_string(h) + " is not in the arrangement of " +
                               to_string(desc) + " (d = 1)");
    }
    if (h.i < 0 || h.i >= desc.r) throw DescriptorMismatch("hyperplane index out of range: " + to_string(h));
    return;
  }
  if (h.i < 0 || h.j <= h.i || h.j >= desc.r || h.t < 0 || h.t >= desc.de()) {
    throw DescriptorMismatch("hyperplane " + to_string(h) + " is not in the arrangement of " + to_string(desc));
  }
}

std::size_t pair_index(int i, int j, int r) {
  // Lexicographic rank of (i,j), i < j, among pairs of {0..r-1}.
  const auto ii = static_cast<std::size_t>(i);
  const auto rr = static_cast<std::size_t>(r);
  return ii * (2 * rr - ii - 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

}  // namespace

Hyperplane Hyperplane::swap(int i, int j, int t, int de) {
  if (i == j) throw std::invalid_argument("Swap hyperplane needs i != j");
  if (i > j) return {Kind::Swap, j, i, mod(-t, de)};
  return {Kind::Swap, i, j, mod(t, de)};
}

std::string to_string(const Hyperplane& h) {
  if (h.is_coord()) return "H[" + std::to_string(h.i + 1) + "]";
  return "H[" + std::to_string(h.i + 1) + "," + std::to_string(h.j + 1) + ";" + std::to_string(h.t) + "]";
}

Hyperplane parse_hyperplane(std::string_view text) {
  static const std::regex swap_re(R"(^\s*H\[\s*(\d+)\s*,\s*(\d+)\s*;\s*(\d+)\s*\]\s*$)");
  static const std::regex coord_re(R"(^\s*H\[\s*(\d+)\s*\]\s*$)");
  std::string s(text);
  std::smatch m;
  auto num = [](const std::ssub_match& sm) {
    int v = 0;
    auto str = sm.str();
    auto [p, ec] = std::from_chars(str.data(), str.data() + str.size(), v);
    if (ec != std::errc{}) throw ParseError("hyperplane index out of range: " + str);
    return v;
  };
  if (std::regex_match(s, m, coord_re)) {
    int i = num(m[1]);
    if (i < 1) throw ParseError("hyperplane indices are 1-based: " + s);
    return Hyperplane::coord(i - 1);
  }
  if (std::regex_match(s, m, swap_re)) {
    int i = num(m[1]), j = num(m[2]), t = num(m[3]);
    if (i < 1 || j < 1) throw ParseError("hyperplane indices are 1-based: " + s);
    if (i >= j) throw ParseError("hyperplane text must have i < j: " + s);
    return {Hyperplane::Kind::Swap, i - 1, j - 1, t};
  }
  throw ParseError("bad hyperplane '" + s + "' (expected H[i,j;t] or H[i])");
}

std::vector<Hyperplane> hyperplanes(const GroupDescriptor& desc) {
  std::vector<Hyperplane> out;
  const int de = desc.de();
  for (int i = 0; i < desc.r; ++i) {
    for (int j = i + 1; j < desc.r; ++j) {
      for (int t = 0; t < de; ++t) out.push_back({Hyperplane::Kind::Swap, i, j, t});
    }
  }
  if (desc.d >= 2) {
    for (int i = 0; i < desc.r; ++i) out.push_back(Hyperplane::coord(i));
  }
  return out;
}

Arrangement::Arrangement(const GroupDescriptor& desc) : desc_(desc), hyperplanes_(reflift::hyperplanes(desc)) {}

bool Arrangement::contains(const Hyperplane& h) const {
  try {
    check_member(desc_, h);
  } catch (const DescriptorMismatch&) {
    return false;
  }
  return true;
}

std::size_t Arrangement::index_of(const Hyperplane& h) const {
  check_member(desc_, h);
  const auto de = static_cast<std::size_t>(desc_.de());
  if (h.is_coord()) {
    const auto r = static_cast<std::size_t>(desc_.r);
    return de * r * (r - 1) / 2 + static_cast<std::size_t>(h.i);
  }
  return de * pair_index(h.i, h.j, desc_.r) + static_cast<std::size_t>(h.t);
}

std::vector<std::size_t> Arrangement::permutation_of(const MonomialElement& w) const {
  std::vector<std::size_t> image(hyperplanes_.size());
  for (std::size_t k = 0; k < hyperplanes_.size(); ++k) image[k] = index_of(act(w, hyperplanes_[k]));
  return image;
}

Hyperplane act(const MonomialElement& w, const Hyperplane& h) {
  check_member(w.descriptor(), h);
  if (h.is_coord()) return Hyperplane::coord(w.image(h.i));
  return Hyperplane::swap(w.image(h.i), w.image(h.j), h.t + w.exponent(h.i) - w.exponent(h.j),
                          w.descriptor().de());
}

bool stabilizes(const MonomialElement& w, const Hyperplane& h) { return act(w, h) == h; }

ScalarRoot scalar_on_normal(const MonomialElement& w, const Hyperplane& h) {
  if (!stabilizes(w, h)) {
    throw std::invalid_argument("scalar_on_normal: " + to_string(w) + " does not stabilize " + to_string(h));
  }
  const int de = w.descriptor().de();
  const int m = 2 * de;
  if (h.is_coord()) return {mod(2 * w.exponent(h.i), m), m};
  if (w.image(h.i) == h.i) {
    // sigma fixes i and j; stabilising forces a_i = a_j.
    return {mod(2 * w.exponent(h.i), m), m};
  }
  // sigma exchanges i and j: w(e_i - zeta^{-t} e_j) = -zeta^{t + a_i} (e_i - zeta^{-t} e_j).
  return {mod(de + 2 * (h.t + w.exponent(h.i)), m), m};
}

bool in_parabolic(const MonomialElement& w, const Hyperplane& h) {
  return stabilizes(w, h) && scalar_on_normal(w, h).is_one();
}

std::vector<std::vector<std::size_t>> orbits(const Subgroup& g, const Arrangement& arr) {
  if (g.descriptor() != arr.descriptor()) throw DescriptorMismatch("orbits: subgroup and arrangement differ");
  const std::size_t n = arr.size();
  // Union-find over hyperplane indices, joined along each element's action.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& w : g.elements()) {
    auto image = arr.permutation_of(w);
    for (std::size_t k = 0; k < n; ++k) {
      auto a = find(k), b = find(image[k]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    auto root = find(k);
    if (slot[root] == n) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(k);
  }
  return out;
}

std::vector<std::vector<std::size_t>> orbits(const Subgroup& g) { return orbits(g, Arrangement(g.descriptor())); }

bool acts_faithfully_on_arrangement(const Subgroup& g) {
  const Arrangement arr(g.descriptor());
  if (arr.size() == 0) {
    throw std::invalid_argument("acts_faithfully_on_arrangement: empty arrangement for " +
                                to_string(g.descriptor()));
  }
  for (const auto& w : g.elements()) {
    if (w.is_identity()) continue;
    bool fixes_all = true;
    for (const auto& h : arr.hyperplanes()) {
      if (!stabilizes(w, h)) {
        fixes_all = false;
        break;
      }
    }
    if (fixes_all) return false;
  }
  return true;
}

}  // namespace reflift
