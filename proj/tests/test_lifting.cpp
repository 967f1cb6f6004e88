#include <random>

#include "doctest.h"
#include "reflift/lifting.hpp"

using namespace reflift;

namespace {

GroupDescriptor G(const char* s) { return parse_descriptor(s); }
MonomialElement el(const GroupDescriptor& d, const char* s) { return parse_element(d, s); }

Subgroup generated(const GroupDescriptor& d, std::vector<MonomialElement> gens) {
  return Subgroup::closure(d, gens);
}

MonomialElement diag(const GroupDescriptor& d, std::vector<int> exps) {
  std::vector<int> sigma(exps.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = static_cast<int>(i);
  return MonomialElement(d, sigma, exps);
}

const char* const kGrid[] = {"S(2)",     "S(3)",     "S(4)",     "S(5)",     "S(6)",     "G(2,1,2)",
                             "G(2,1,3)", "G(2,2,3)", "G(2,2,4)", "G(3,3,2)", "G(3,3,3)", "G(4,2,2)",
                             "G(4,4,2)", "G(6,3,2)", "G(6,6,2)", "G(3,1,2)", "G(5,5,2)"};

}  // namespace

TEST_CASE("element examples") {
  const auto d332 = G("G(3,3,2)");
  const auto dj = el(d332, "perm=[1,2];exp=[1,2]");
  CHECK(element_lifts_oracle(dj).lifts);
  CHECK(element_lifts_fast(dj));
  CHECK_FALSE(element_lifts_oracle(dj).witness.has_value());

  const auto s4 = G("S(4)");
  for (const auto& w : enumerate(s4)) {
    if (order(w) != 2) continue;
    const auto rep = element_lifts_oracle(w);
    CHECK_FALSE(rep.lifts);
    REQUIRE(rep.witness.has_value());
    CHECK(witness_is_valid(w, *rep.witness));
  }
  const auto t12 = el(s4, "perm=[2,1,3,4];exp=[0,0,0,0]");
  const auto rep = element_lifts_oracle(t12);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->hyperplane == parse_hyperplane("H[1,2;0]"));
  CHECK(rep.witness->power == 1);

  CHECK(element_lifts_oracle(identity(G("G(6,3,3)"))).lifts);
  CHECK(element_lifts_fast(identity(G("G(6,3,3)"))));
}

TEST_CASE("fast criterion examples") {
  for (int q : {3, 5, 7, 9}) {
    const auto d = GroupDescriptor::make(1, q, 3);
    const auto w = diag(d, {1, q - 1, 0});
    CHECK(element_lifts_fast(w));
    CHECK(element_lifts_oracle(w).lifts);
  }
  const auto d442 = G("G(4,4,2)");
  CHECK_FALSE(element_lifts_fast(el(d442, "perm=[1,2];exp=[1,3]")));
  CHECK_FALSE(element_lifts_oracle(el(d442, "perm=[1,2];exp=[1,3]")).lifts);
  CHECK(element_lifts_fast(el(G("S(4)"), "perm=[2,3,1,4];exp=[0,0,0,0]")));

  // d = 1 diagonal branch: diag(zeta^3, zeta^6) in G(9,9,2); the difference has
  // order 3, a multiple of both orders (3 and 3).
  CHECK(element_lifts_fast(el(G("G(9,9,2)"), "perm=[1,2];exp=[3,6]")));
  // diag(zeta, zeta, zeta^3) in G(5,5,3): a_1 - a_2 = 0 has order 1, not a multiple of 5.
  CHECK_FALSE(element_lifts_fast(el(G("G(5,5,3)"), "perm=[1,2,3];exp=[1,1,3]")));
  CHECK_FALSE(element_lifts_oracle(el(G("G(5,5,3)"), "perm=[1,2,3];exp=[1,1,3]")).lifts);

  // r = 1 with d >= 2: only the identity lifts.
  const auto d21 = G("G(3,1,1)");
  CHECK_FALSE(element_lifts_fast(el(d21, "perm=[1];exp=[1]")));
  CHECK_FALSE(element_lifts_oracle(el(d21, "perm=[1];exp=[1]")).lifts);
}

TEST_CASE("fast report locates a valid witness") {
  for (const auto* name : {"G(6,3,2)", "G(4,2,2)", "S(5)"}) {
    const auto d = G(name);
    const Arrangement arr(d);
    for (const auto& w : enumerate(d)) {
      const auto rep = element_lifts_fast_report(w, arr);
      CHECK(rep.method == LiftMethod::Fast);
      CHECK(rep.lifts == element_lifts_oracle(w, arr).lifts);
      if (!rep.lifts) {
        REQUIRE(rep.witness.has_value());
        CHECK(witness_is_valid(w, *rep.witness));
      }
    }
  }
}

TEST_CASE("oracle and fast agree on larger groups") {
  for (const auto* name : {"G(6,2,3)", "G(9,9,2)", "G(15,15,2)", "G(3,1,3)", "G(5,5,3)", "G(7,7,2)"}) {
    const auto d = G(name);
    const Arrangement arr(d);
    for (const auto& w : enumerate(d)) REQUIRE(element_lifts_oracle(w, arr).lifts == element_lifts_fast(w));
  }
}

TEST_CASE("witness is the first violation") {
  for (const auto* name : {"G(4,2,2)", "G(6,6,2)", "S(4)"}) {
    const auto d = G(name);
    const Arrangement arr(d);
    for (const auto& w : enumerate(d)) {
      const auto rep = element_lifts_oracle(w, arr);
      if (rep.lifts) continue;
      const auto& wit = *rep.witness;
      CHECK(witness_is_valid(w, wit));
      // No violation on an earlier hyperplane, nor at a smaller power on the same one.
      for (const auto& h : arr.hyperplanes()) {
        for (std::uint64_t l = 1; l <= order(w); ++l) {
          if (h > wit.hyperplane || (h == wit.hyperplane && l >= wit.power)) continue;
          CHECK_FALSE(witness_is_valid(w, Witness{h, l, std::nullopt}));
        }
      }
    }
  }
}

TEST_CASE("subgroup examples") {
  const auto s3 = G("S(3)");
  CHECK(subgroup_lifts(generated(s3, {el(s3, "perm=[2,3,1];exp=[0,0,0]")})).lifts);
  const auto bad = subgroup_lifts(generated(s3, {el(s3, "perm=[2,1,3];exp=[0,0,0]")}));
  CHECK_FALSE(bad.lifts);
  REQUIRE(bad.witness.has_value());
  REQUIRE(bad.witness->element.has_value());
  CHECK(*bad.witness->element == el(s3, "perm=[2,1,3];exp=[0,0,0]"));
  CHECK(subgroup_lifts(Subgroup::trivial(s3)).lifts);

  const auto d332 = G("G(3,3,2)");
  CHECK(subgroup_lifts_local(generated(d332, {el(d332, "perm=[1,2];exp=[1,2]")})));
  const auto b2 = G("G(2,1,2)");
  CHECK_FALSE(subgroup_lifts_local(generated(b2, {el(b2, "perm=[1,2];exp=[1,1]")})));
  CHECK(subgroup_lifts_local(Subgroup::trivial(b2)));
  CHECK_THROWS_AS(subgroup_lifts(Subgroup::trivial(b2), Arrangement(s3)), DescriptorMismatch);
}

TEST_CASE("local and global lifting agree") {
  std::mt19937_64 rng(29);
  for (const auto* name : kGrid) {
    const auto d = G(name);
    const Arrangement arr(d);
    const auto all = enumerate(d);
    for (const auto& w : all) {
      const auto g = generated(d, {w});
      CHECK(subgroup_lifts(g, arr).lifts == subgroup_lifts_local(g, arr));
    }
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int k = 0; k < 30; ++k) {
      const auto g = generated(d, {all[pick(rng)], all[pick(rng)]});
      const bool global = subgroup_lifts(g, arr).lifts;
      CHECK(global == subgroup_lifts_local(g, arr));
      if (global) {
        CHECK(g.size() % 2 == 1);
        const auto z = center(d);
        for (const auto& x : g.elements()) CHECK((x.is_identity() || !z.contains(x)));
      }
    }
  }
}

TEST_CASE("obstruction shortcuts") {
  CHECK(obstruction_shortcuts(el(G("S(3)"), "perm=[2,1,3];exp=[0,0,0]")) == Obstruction::EvenOrder);
  const auto d662 = G("G(6,6,2)");
  const auto w = el(d662, "perm=[1,2];exp=[1,5]");
  CHECK(order(w) == 6);
  CHECK(power(w, 3) == el(d662, "perm=[1,2];exp=[3,3]"));
  CHECK(obstruction_shortcuts(w) == Obstruction::EvenOrder);
  CHECK_FALSE(obstruction_shortcuts(el(G("G(3,3,2)"), "perm=[1,2];exp=[1,2]")).has_value());
  CHECK_FALSE(obstruction_shortcuts(identity(G("S(3)"))).has_value());

  // An odd-order element with a nontrivial central proper power: diag(zeta, zeta) in G(9,1,2)
  // cubes to the central scalar zeta^3.
  const auto d912 = G("G(9,1,2)");
  const auto c = el(d912, "perm=[1,2];exp=[1,1]");
  CHECK(order(c) == 9);
  CHECK(obstruction_shortcuts(c) == Obstruction::CentralPower);
  CHECK_FALSE(element_lifts_oracle(c).lifts);

  // Soundness: any reported obstruction really blocks lifting.
  for (const auto* name : {"G(6,3,2)", "G(9,1,2)", "G(3,3,3)", "G(6,6,2)", "S(5)", "G(2,2,4)"}) {
    const auto d = G(name);
    const Arrangement arr(d);
    for (const auto& x : enumerate(d)) {
      if (obstruction_shortcuts(x)) REQUIRE_FALSE(element_lifts_oracle(x, arr).lifts);
    }
  }
}

TEST_CASE("powers of a liftable element lift") {
  for (const auto* name : {"G(6,3,2)", "G(3,3,3)", "S(6)"}) {
    const auto d = G(name);
    const Arrangement arr(d);
    for (const auto& w : enumerate(d)) {
      if (!element_lifts_oracle(w, arr).lifts) continue;
      for (std::int64_t k = 2; k <= 4; ++k) CHECK(element_lifts_oracle(power(w, k), arr).lifts);
    }
  }
}

TEST_CASE("lifting is stable under padding") {
  for (int n = 2; n <= 5; ++n) {
    const auto small = GroupDescriptor::symmetric(n);
    const auto big = GroupDescriptor::symmetric(n + 1);
    for (const auto& w : enumerate(small)) {
      if (!element_lifts_oracle(w).lifts) continue;
      std::vector<int> sigma(w.permutation().begin(), w.permutation().end());
      sigma.push_back(n);
      const MonomialElement padded(big, sigma, std::vector<int>(static_cast<std::size_t>(n + 1), 0));
      CHECK(element_lifts_oracle(padded).lifts);
    }
  }
}
