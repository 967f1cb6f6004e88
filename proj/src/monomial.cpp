#include "reflift/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace reflift {

namespace {

int mod(std::int64_t a, int n) {
  auto m = static_cast<int>(a % n);
  return m < 0 ? m + n : m;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto item = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw ParseError("bad integer '" + std::string(item) + "' in " + std::string(what));
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join(std::span<const int> xs, int offset) {
  std::string s = "[";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(xs[k] + offset);
  }
  return s + "]";
}

}  // namespace

GroupDescriptor GroupDescriptor::make(int d, int e, int r) {
  if (d < 1 || e < 1 || r < 1) {
    throw std::invalid_argument("G(de,e,r) needs d, e, r >= 1");
  }
  return GroupDescriptor{d, e, r};
}

std::uint64_t GroupDescriptor::order() const {
  std::uint64_t n = 1;
  auto mul = [&](std::uint64_t f) {
    if (__builtin_mul_overflow(n, f, &n)) throw GuardExceeded("group order overflows 64 bits");
  };
  for (int k = 0; k < r; ++k) mul(static_cast<std::uint64_t>(de()));
  for (int k = 2; k <= r; ++k) mul(static_cast<std::uint64_t>(k));
  return n / static_cast<std::uint64_t>(e);
}

std::string to_string(const GroupDescriptor& desc) {
  return "G(" + std::to_string(desc.de()) + "," + std::to_string(desc.e) + "," +
         std::to_string(desc.r) + ")";
}

GroupDescriptor parse_descriptor(std::string_view text) {
  auto s = trim(text);
  auto fail = [&]() -> GroupDescriptor {
    throw ParseError("bad group descriptor '" + std::string(text) + "' (expected G(de,e,r) or S(n))");
  };
  if (s.size() < 4 || s.back() != ')' || s[1] != '(') return fail();
  auto body = s.substr(2, s.size() - 3);
  std::vector<int> nums;
  try {
    nums = parse_int_list(body, "descriptor");
  } catch (const ParseError&) {
    return fail();
  }
  if (s[0] == 'S' && nums.size() == 1) {
    if (nums[0] < 1) return fail();
    return GroupDescriptor::symmetric(nums[0]);
  }
  if (s[0] != 'G' || nums.size() != 3) return fail();
  int de = nums[0], e = nums[1], r = nums[2];
  if (de < 1 || e < 1 || r < 1) return fail();
  if (de % e != 0) {
    throw ParseError("bad group descriptor '" + std::string(text) + "': e must divide de");
  }
  return GroupDescriptor::make(de / e, e, r);
}

MonomialElement::MonomialElement(GroupDescriptor desc, std::vector<int> sigma, std::vector<int> exponents)
    : desc_(desc), sigma_(std::move(sigma)), exps_(std::move(exponents)) {
  const auto r = static_cast<std::size_t>(desc_.r);
  if (sigma_.size() != r || exps_.size() != r) {
    throw DescriptorMismatch("element length does not match rank of " + to_string(desc_));
  }
  std::vector<bool> seen(r, false);
  for (int s : sigma_) {
    if (s < 0 || static_cast<std::size_t>(s) >= r || seen[static_cast<std::size_t>(s)]) {
      throw DescriptorMismatch("not a permutation of {1.." + std::to_string(r) + "}");
    }
    seen[static_cast<std::size_t>(s)] = true;
  }
  std::int64_t sum = 0;
  for (auto& a : exps_) {
    a = mod(a, desc_.de());
    sum += a;
  }
  if (sum % desc_.e != 0) {
    throw DescriptorMismatch("exponent sum not divisible by e=" + std::to_string(desc_.e) + " in " +
                             to_string(desc_));
  }
}

MonomialElement MonomialElement::identity(const GroupDescriptor& desc) {
  std::vector<int> sigma(static_cast<std::size_t>(desc.r));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> exps(sigma.size(), 0);
  return MonomialElement(Unchecked{}, desc, std::move(sigma), std::move(exps));
}

MonomialElement identity(const GroupDescriptor& desc) { return MonomialElement::identity(desc); }

bool MonomialElement::is_identity() const {
  for (std::size_t i = 0; i < sigma_.size(); ++i) {
    if (sigma_[i] != static_cast<int>(i) || exps_[i] != 0) return false;
  }
  return true;
}

bool MonomialElement::is_diagonal() const {
  for (std::size_t i = 0; i < sigma_.size(); ++i) {
    if (sigma_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

MonomialElement compose(const MonomialElement& u, const MonomialElement& v) {
  if (u.desc_ != v.desc_) {
    throw DescriptorMismatch("compose: " + to_string(u.desc_) + " vs " + to_string(v.desc_));
  }
  const auto r = u.sigma_.size();
  const int de = u.desc_.de();
  std::vector<int> sigma(r), exps(r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto vi = static_cast<std::size_t>(v.sigma_[i]);
    sigma[i] = u.sigma_[vi];
    const int a = v.exps_[i] + u.exps_[vi];
    exps[i] = a >= de ? a - de : a;
  }
  return MonomialElement(MonomialElement::Unchecked{}, u.desc_, std::move(sigma), std::move(exps));
}

MonomialElement inverse(const MonomialElement& w) {
  const auto r = w.sigma_.size();
  const int de = w.desc_.de();
  std::vector<int> sigma(r), exps(r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto si = static_cast<std::size_t>(w.sigma_[i]);
    sigma[si] = static_cast<int>(i);
    exps[si] = w.exps_[i] == 0 ? 0 : de - w.exps_[i];
  }
  return MonomialElement(MonomialElement::Unchecked{}, w.desc_, std::move(sigma), std::move(exps));
}

MonomialElement power(const MonomialElement& w, std::int64_t n) {
  auto base = n < 0 ? inverse(w) : w;
  // |INT64_MIN| does not fit; go through unsigned.
  auto k = n < 0 ? ~static_cast<std::uint64_t>(n) + 1 : static_cast<std::uint64_t>(n);
  auto result = MonomialElement::identity(w.descriptor());
  while (k) {
    if (k & 1) result = compose(result, base);
    k >>= 1;
    if (k) base = compose(base, base);
  }
  return result;
}

std::vector<CycleData> cycles(const MonomialElement& w) {
  const int r = w.rank();
  const int de = w.descriptor().de();
  std::vector<bool> seen(static_cast<std::size_t>(r), false);
  std::vector<CycleData> out;
  for (int start = 0; start < r; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    CycleData c;
    int i = start;
    int sum = 0;
    do {
      seen[static_cast<std::size_t>(i)] = true;
      c.support.push_back(i);
      sum = (sum + w.exponent(i)) % de;
      i = w.image(i);
    } while (i != start);
    c.product_exponent = sum;
    out.push_back(std::move(c));
  }
  return out;
}

int root_order(int k, int n) { return n / std::gcd(mod(k, n), n); }

std::uint64_t order(const MonomialElement& w) {
  std::uint64_t result = 1;
  for (const auto& c : cycles(w)) {
    auto len = static_cast<std::uint64_t>(c.length()) *
               static_cast<std::uint64_t>(root_order(c.product_exponent, w.descriptor().de()));
    result = std::lcm(result, len);
  }
  return result;
}

std::string to_string(const MonomialElement& w) {
  return "perm=" + join(w.permutation(), 1) + ";exp=" + join(w.exponents(), 0);
}

MonomialElement parse_element(const GroupDescriptor& desc, std::string_view text) {
  static const std::regex re(R"(^\s*perm\s*=\s*\[([^\]]*)\]\s*;\s*exp\s*=\s*\[([^\]]*)\]\s*$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, re)) {
    throw ParseError("bad element '" + std::string(text) + "' (expected perm=[..];exp=[..])");
  }
  auto perm = parse_int_list(m[1].str(), "perm");
  auto exps = parse_int_list(m[2].str(), "exp");
  for (auto& p : perm) --p;
  try {
    return MonomialElement(desc, std::move(perm), std::move(exps));
  } catch (const DescriptorMismatch& ex) {
    throw ParseError("bad element '" + std::string(text) + "': " + ex.what());
  }
}

std::vector<MonomialElement> parse_element_list(const GroupDescriptor& desc, std::string_view text) {
  static const std::regex re(R"(perm\s*=\s*\[[^\]]*\]\s*;\s*exp\s*=\s*\[[^\]]*\])");
  std::vector<MonomialElement> out;
  std::string rest;
  auto begin = text.begin();
  for (std::regex_iterator<std::string_view::const_iterator> it(text.begin(), text.end(), re), end; it != end;
       ++it) {
    rest.append(begin, (*it)[0].first);
    begin = (*it)[0].second;
    out.push_back(parse_element(desc, (*it)[0].str()));
  }
  rest.append(begin, text.end());
  for (char ch : rest) {
    if (ch != ';' && ch != '|' && !std::isspace(static_cast<unsigned char>(ch))) {
      throw ParseError("unexpected text in element list: '" + rest + "'");
    }
  }
  if (out.empty()) throw ParseError("empty element list");
  return out;
}

std::vector<MonomialElement> standard_generators(const GroupDescriptor& desc) {
  const int r = desc.r;
  const int de = desc.de();
  std::vector<MonomialElement> gens;
  std::vector<int> zero(static_cast<std::size_t>(r), 0);
  std::vector<int> id(static_cast<std::size_t>(r));
  std::iota(id.begin(), id.end(), 0);
  for (int i = 0; i + 1 < r; ++i) {
    auto sigma = id;
    std::swap(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(i) + 1]);
    gens.emplace_back(desc, std::move(sigma), zero);
  }
  if (desc.d >= 2) {
    auto exps = zero;
    exps[0] = desc.e;
    gens.emplace_back(desc, id, std::move(exps));
  }
  if (desc.e >= 2 && r >= 2) {
    auto sigma = id;
    std::swap(sigma[0], sigma[1]);
    auto exps = zero;
    exps[0] = 1;
    exps[1] = de - 1;
    gens.emplace_back(desc, std::move(sigma), std::move(exps));
  }
  return gens;
}

Subgroup Subgroup::closure(const GroupDescriptor& desc, std::span<const MonomialElement> gens,
                           std::size_t max_size) {
  for (const auto& g : gens) {
    if (g.descriptor() != desc) {
      throw DescriptorMismatch("closure: generator from " + to_string(g.descriptor()) + " in " + to_string(desc));
    }
  }
  std::set<MonomialElement> seen;
  std::deque<MonomialElement> frontier;
  auto add = [&](MonomialElement w) {
    if (seen.insert(w).second) {
      if (seen.size() > max_size) {
        throw GuardExceeded("subgroup closure exceeds " + std::to_string(max_size) + " elements");
      }
      frontier.push_back(std::move(w));
    }
  };
  add(MonomialElement::identity(desc));
  while (!frontier.empty()) {
    auto w = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) add(compose(w, g));
  }
  return Subgroup(desc, std::vector<MonomialElement>(seen.begin(), seen.end()));
}

Subgroup Subgroup::trivial(const GroupDescriptor& desc) {
  return Subgroup(desc, {MonomialElement::identity(desc)});
}

Subgroup Subgroup::from_elements(const GroupDescriptor& desc, std::vector<MonomialElement> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup g(desc, std::move(elements));
  if (g.elements_.empty() || !g.elements_.front().is_identity()) {
    throw InvariantViolation("subgroup element set lacks the identity");
  }
  for (const auto& x : g.elements_) {
    if (x.descriptor() != desc) throw DescriptorMismatch("subgroup element from another group");
    if (!g.contains(inverse(x))) throw InvariantViolation("subgroup element set not closed under inverse");
    for (const auto& y : g.elements_) {
      if (!g.contains(compose(x, y))) throw InvariantViolation("subgroup element set not closed under composition");
    }
  }
  return g;
}

bool Subgroup::contains(const MonomialElement& w) const {
  return std::binary_search(elements_.begin(), elements_.end(), w);
}

std::size_t Subgroup::index_of(const MonomialElement& w) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), w);
  if (it == elements_.end() || *it != w) throw DescriptorMismatch("element not in subgroup: " + to_string(w));
  return static_cast<std::size_t>(it - elements_.begin());
}

void for_each_element(const GroupDescriptor& desc, const std::function<void(const MonomialElement&)>& fn,
                      std::size_t guard) {
  if (desc.order() > guard) {
    throw GuardExceeded(to_string(desc) + " has " + std::to_string(desc.order()) +
                        " elements, above the enumeration guard " + std::to_string(guard));
  }
  const auto r = static_cast<std::size_t>(desc.r);
  const int de = desc.de();
  std::vector<int> sigma(r);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    // Free choice of a_0..a_{r-2}; a_{r-1} ranges over the d values fixing the sum mod e.
    std::vector<int> exps(r, 0);
    while (true) {
      int partial = 0;
      for (std::size_t i = 0; i + 1 < r; ++i) partial += exps[i];
      const int first_last = mod(-partial, desc.e);
      for (int last = first_last; last < de; last += desc.e) {
        exps[r - 1] = last;
        fn(MonomialElement(desc, sigma, exps));
      }
      std::size_t k = 0;
      while (k + 1 < r && ++exps[k] == de) exps[k++] = 0;
      if (k + 1 >= r) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

std::vector<MonomialElement> enumerate(const GroupDescriptor& desc, std::size_t guard) {
  std::vector<MonomialElement> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(desc.order(), guard)));
  for_each_element(desc, [&](const MonomialElement& w) { out.push_back(w); }, guard);
  return out;
}

bool is_central(const MonomialElement& w) {
  for (const auto& g : standard_generators(w.descriptor())) {
    if (compose(w, g) != compose(g, w)) return false;
  }
  return true;
}

Subgroup center(const GroupDescriptor& desc, std::size_t guard) {
  const auto gens = standard_generators(desc);
  std::vector<MonomialElement> z;
  for_each_element(
      desc,
      [&](const MonomialElement& w) {
        for (const auto& g : gens) {
          if (compose(w, g) != compose(g, w)) return;
        }
        z.push_back(w);
      },
      guard);
  return Subgroup::from_elements(desc, std::move(z));
}

}  // namespace reflift
