#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "reflift/arrangement.hpp"

using namespace reflift;

namespace {

GroupDescriptor G(const char* s) { return parse_descriptor(s); }
MonomialElement el(const GroupDescriptor& d, const char* s) { return parse_element(d, s); }
Hyperplane H(const char* s) { return parse_hyperplane(s); }

Subgroup cyclic(const MonomialElement& w) {
  const std::vector<MonomialElement> gens{w};
  return Subgroup::closure(w.descriptor(), gens);
}

const char* const kGrid[] = {"S(2)",     "S(3)",     "S(4)",     "S(5)",     "G(2,1,2)", "G(2,1,3)",
                             "G(2,2,3)", "G(3,3,2)", "G(3,3,3)", "G(4,2,2)", "G(4,4,2)", "G(6,3,2)",
                             "G(6,6,2)", "G(3,1,2)", "G(5,5,2)"};

}  // namespace

TEST_CASE("hyperplane counts") {
  CHECK(hyperplanes(G("S(3)")).size() == 3);
  CHECK(hyperplanes(G("G(2,1,2)")).size() == 4);
  const auto h332 = hyperplanes(G("G(3,3,2)"));
  CHECK(h332.size() == 3);
  for (const auto& h : h332) CHECK_FALSE(h.is_coord());
  CHECK(hyperplanes(G("G(3,3,1)")).empty());
  CHECK(hyperplanes(G("G(2,1,1)")).size() == 1);
  for (const auto* name : kGrid) {
    const auto d = G(name);
    const auto n = static_cast<std::size_t>(d.de() * d.r * (d.r - 1) / 2 + (d.d >= 2 ? d.r : 0));
    CHECK(hyperplanes(d).size() == n);
  }
}

TEST_CASE("canonical order and index lookup") {
  const Arrangement arr(G("G(4,2,3)"));
  for (std::size_t k = 0; k < arr.size(); ++k) {
    CHECK(arr.index_of(arr[k]) == k);
    if (k) CHECK(arr[k - 1] < arr[k]);
  }
  CHECK(arr.hyperplanes().back() == Hyperplane::coord(2));
  CHECK_THROWS_AS(Arrangement(G("S(3)")).index_of(Hyperplane::coord(0)), DescriptorMismatch);
  CHECK_FALSE(Arrangement(G("S(3)")).contains(Hyperplane{Hyperplane::Kind::Swap, 0, 1, 1}));
}

TEST_CASE("hyperplane text") {
  CHECK(to_string(Hyperplane::swap(0, 1, 2, 3)) == "H[1,2;2]");
  CHECK(to_string(Hyperplane::coord(2)) == "H[3]");
  CHECK(Hyperplane::swap(1, 0, 1, 3) == Hyperplane::swap(0, 1, 2, 3));
  for (const auto& h : hyperplanes(G("G(6,3,3)"))) CHECK(parse_hyperplane(to_string(h)) == h);
  CHECK_THROWS_AS(H("H[2,1;0]"), ParseError);
  CHECK_THROWS_AS(H("H[0]"), ParseError);
  CHECK_THROWS_AS(H("H(1,2;0)"), ParseError);
}

TEST_CASE("act") {
  const auto s3 = G("S(3)");
  CHECK(act(el(s3, "perm=[2,1,3];exp=[0,0,0]"), H("H[1,3;0]")) == H("H[2,3;0]"));
  for (const auto& h : hyperplanes(G("G(6,3,2)"))) CHECK(act(identity(G("G(6,3,2)")), h) == h);
  CHECK(act(el(G("G(3,3,2)"), "perm=[1,2];exp=[1,2]"), H("H[1,2;0]")) == H("H[1,2;2]"));
  CHECK_THROWS_AS(act(identity(s3), Hyperplane::coord(0)), DescriptorMismatch);
}

TEST_CASE("act matches the geometric image of the hyperplane") {
  std::mt19937_64 rng(17);
  for (const auto* name : {"G(6,3,2)", "G(4,2,3)", "G(3,3,3)", "G(2,1,3)"}) {
    const auto d = G(name);
    for (const auto& w : enumerate(d)) {
      const auto m = oracle::matrix_of(w);
      for (const auto& h : hyperplanes(d)) {
        const auto z = oracle::point_on(h, d.r, d.de(), rng);
        const auto img = act(w, h);
        REQUIRE(std::abs(oracle::equation(img, oracle::apply(m, z), d.de())) < 1e-9);
      }
    }
  }
}

TEST_CASE("act is a left action") {
  for (const auto* name : {"G(6,3,2)", "G(2,2,3)", "S(4)"}) {
    const auto d = G(name);
    const auto all = enumerate(d);
    for (std::size_t a = 0; a < all.size(); a += 3) {
      for (std::size_t b = 0; b < all.size(); b += 5) {
        for (const auto& h : hyperplanes(d)) {
          REQUIRE(act(compose(all[a], all[b]), h) == act(all[a], act(all[b], h)));
        }
      }
    }
  }
}

TEST_CASE("stabilizes") {
  const auto s3 = G("S(3)");
  CHECK(stabilizes(el(s3, "perm=[2,1,3];exp=[0,0,0]"), H("H[1,2;0]")));
  CHECK_FALSE(stabilizes(el(s3, "perm=[2,3,1];exp=[0,0,0]"), H("H[1,2;0]")));
  for (const auto& h : hyperplanes(G("G(4,2,2)"))) CHECK(stabilizes(identity(G("G(4,2,2)")), h));
}

TEST_CASE("scalar on the normal line") {
  const auto b2 = G("G(2,1,2)");
  CHECK(scalar_on_normal(el(b2, "perm=[1,2];exp=[1,1]"), H("H[1]")) == ScalarRoot{2, 4});  // -1
  CHECK(scalar_on_normal(identity(b2), H("H[1,2;1]")).is_one());
  CHECK(scalar_on_normal(el(G("S(2)"), "perm=[2,1];exp=[0,0]"), H("H[1,2;0]")) == ScalarRoot{1, 2});  // -1
  CHECK_THROWS_AS(scalar_on_normal(el(G("S(3)"), "perm=[2,3,1];exp=[0,0,0]"), H("H[1,2;0]")),
                  std::invalid_argument);
}

TEST_CASE("scalar matches the eigenvalue of the matrix on the normal") {
  for (const auto* name : kGrid) {
    const auto d = G(name);
    for (const auto& w : enumerate(d)) {
      const auto m = oracle::matrix_of(w);
      for (const auto& h : hyperplanes(d)) {
        if (!stabilizes(w, h)) continue;
        const auto s = scalar_on_normal(w, h);
        const auto n = oracle::normal_of(h, d.r, d.de());
        const auto wn = oracle::apply(m, n);
        const auto lambda = oracle::root(s.exponent, s.modulus);
        for (std::size_t k = 0; k < n.size(); ++k) REQUIRE(std::abs(wn[k] - lambda * n[k]) < 1e-9);
      }
    }
  }
}

TEST_CASE("scalar is multiplicative along powers") {
  for (const auto* name : {"G(6,3,2)", "G(4,2,2)", "G(3,3,3)", "S(5)"}) {
    const auto d = G(name);
    for (const auto& w : enumerate(d)) {
      for (const auto& h : hyperplanes(d)) {
        if (!stabilizes(w, h)) continue;
        const auto s = scalar_on_normal(w, h);
        for (int n = 2; n <= 6; ++n) {
          const auto wn = power(w, n);
          REQUIRE(stabilizes(wn, h));
          CHECK(scalar_on_normal(wn, h).exponent == (s.exponent * n) % s.modulus);
        }
      }
    }
  }
}

TEST_CASE("parabolic membership") {
  const auto s3 = G("S(3)");
  CHECK_FALSE(in_parabolic(el(s3, "perm=[2,1,3];exp=[0,0,0]"), H("H[1,2;0]")));
  for (const auto& h : hyperplanes(G("G(6,3,2)"))) CHECK(in_parabolic(identity(G("G(6,3,2)")), h));
  CHECK(in_parabolic(el(G("S(5)"), "perm=[1,2,4,5,3];exp=[0,0,0,0,0]"), H("H[1,2;0]")));
  for (const auto& w : enumerate(G("G(4,2,2)"))) {
    for (const auto& h : hyperplanes(w.descriptor())) {
      if (in_parabolic(w, h)) CHECK(stabilizes(w, h));
    }
  }
}

TEST_CASE("orbits") {
  const auto s3 = G("S(3)");
  const auto c3 = cyclic(el(s3, "perm=[2,3,1];exp=[0,0,0]"));
  const auto o = orbits(c3);
  REQUIRE(o.size() == 1);
  CHECK(o[0].size() == 3);
  CHECK(orbits(Subgroup::trivial(G("G(4,2,2)"))).size() == 6);

  const auto d332 = G("G(3,3,2)");
  const auto od = orbits(cyclic(el(d332, "perm=[1,2];exp=[1,2]")));
  REQUIRE(od.size() == 1);
  CHECK(od[0] == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("faithful action on the arrangement") {
  const auto b2 = G("G(2,1,2)");
  CHECK_FALSE(acts_faithfully_on_arrangement(cyclic(el(b2, "perm=[1,2];exp=[1,1]"))));
  CHECK(acts_faithfully_on_arrangement(Subgroup::trivial(b2)));
  CHECK(acts_faithfully_on_arrangement(cyclic(el(G("S(3)"), "perm=[2,3,1];exp=[0,0,0]"))));
  CHECK_THROWS_AS(acts_faithfully_on_arrangement(Subgroup::trivial(G("S(1)"))), std::invalid_argument);

  // Faithful iff the subgroup meets the centre trivially, on all cyclic subgroups.
  for (const auto* name : kGrid) {
    const auto d = G(name);
    const auto z = center(d);
    for (const auto& w : enumerate(d)) {
      const auto g = cyclic(w);
      bool meets = false;
      for (const auto& x : g.elements()) meets = meets || (!x.is_identity() && z.contains(x));
      CHECK(acts_faithfully_on_arrangement(g) == !meets);
    }
  }
}
