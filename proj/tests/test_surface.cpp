#include <doctest.h>

#include "k3orb/surface.hpp"
#include "oracles.hpp"

using namespace k3orb;

namespace {

AdeConfig copies(const DuValType& t, int k) { return AdeConfig(std::vector<DuValType>(k, t)); }

std::vector<Decoration> kummer() {
  return std::vector<Decoration>(4, {KodairaType::IStar(0), {"t1", "t2", "t3", "t4"}});
}

Decoration keep_only(const char* label, const std::string& kept) {
  const auto t = KodairaType::parse(label);
  Decoration d{t, {}};
  for (const auto& c : fiber_data(t).components) {
    if (c.id != kept) d.removed.push_back(c.id);
  }
  return d;
}

const Decoration kTails{KodairaType::IStar(0), {"t1", "t2", "t3", "t4"}};

}  // namespace

TEST_CASE("orbifold Euler number examples") {
  CHECK(orbifold_euler_number(AdeConfig{}) == 24);
  CHECK(orbifold_euler_number(copies(DuValType::A(1), 16)) == 0);
  AdeConfig mixed({DuValType::A(5), DuValType::A(2), DuValType::A(1)});
  mixed.merge(copies(DuValType::A(2), 3));
  mixed.merge(copies(DuValType::A(1), 4));
  CHECK(orbifold_euler_number(mixed) == 0);
  AdeConfig five({DuValType::A(4), DuValType::A(4)});
  five.merge(copies(DuValType::A(2), 3));
  five.merge(copies(DuValType::A(1), 4));
  CHECK(orbifold_euler_number(five) == make_rational(2, 5));
  CHECK(orbifold_euler_number(copies(DuValType::E(8), 3)) < 0);
}

TEST_CASE("rank gate") {
  const auto g15 = theorem_b_gate(copies(DuValType::A(1), 15));
  CHECK(g15.r == 15);
  CHECK(g15.passes);
  CHECK(orbifold_euler_number(copies(DuValType::A(1), 15)) == make_rational(3, 2));
  const auto g16 = theorem_b_gate(copies(DuValType::A(1), 16));
  CHECK(g16.r == 16);
  CHECK_FALSE(g16.passes);
  const auto g0 = theorem_b_gate(AdeConfig{});
  CHECK(g0.r == 0);
  CHECK(g0.passes);
}

TEST_CASE("Kummer configuration") {
  const auto r = analyze({kummer(), std::nullopt});
  CHECK(r.r == 16);
  CHECK(r.multiplicities == std::vector{2, 2, 2, 2});
  CHECK(r.classification->kind == OrbifoldKind::Euclidean);
  CHECK(r.e_orb == 0);
  REQUIRE(r.verdict);
  CHECK(r.verdict->kind == VerdictKind::TorusCover);
  CHECK(r.verdict->signature == OrbifoldSignature({2, 2, 2, 2}));
  CHECK(r.euclidean_e_orb_zero == true);
  CHECK_FALSE(r.gate.passes);
}

TEST_CASE("cross-module fixtures") {
  const auto e632 = analyze({std::vector{keep_only("II*", "c6"), keep_only("IV*", "z"), kTails}, std::nullopt});
  CHECK(e632.signature == OrbifoldSignature({2, 3, 6}));
  CHECK(e632.classification->kind == OrbifoldKind::Euclidean);
  CHECK(e632.e_orb == 0);
  CHECK(e632.r == 18);
  CHECK(e632.verdict->kind == VerdictKind::TorusCover);

  const auto e442 = analyze({std::vector{keep_only("III*", "c4"), keep_only("III*", "c4"), kTails}, std::nullopt});
  CHECK(e442.signature == OrbifoldSignature({2, 4, 4}));
  CHECK(e442.classification->kind == OrbifoldKind::Euclidean);
  CHECK(e442.e_orb == 0);
  CHECK(e442.r == 18);

  const auto s532 = analyze({std::vector{keep_only("II*", "c5"), keep_only("IV*", "z"), kTails}, std::nullopt});
  CHECK(s532.multiplicities == std::vector{5, 3, 2});
  CHECK(*s532.classification == OrbifoldClass{OrbifoldKind::SphericalOrBad, 60});
  CHECK(s532.e_orb == make_rational(2, 5));
  CHECK(s532.r == 18);
  CHECK(s532.exceptional.to_string() == "2A4+3A2+4A1");
  CHECK(s532.verdict->kind == VerdictKind::FiniteFundamentalGroup);
  CHECK(s532.verdict->orbifold_order == 60);
}

TEST_CASE("bare configurations") {
  const auto smooth = analyze({AdeConfig{}, std::nullopt});
  CHECK(smooth.r == 0);
  CHECK(smooth.e_orb == 24);
  CHECK(smooth.verdict->kind == VerdictKind::FiniteFundamentalGroup);
  CHECK(smooth.gate_consistent == true);

  const auto sixteen = analyze({copies(DuValType::A(1), 16), std::nullopt});
  CHECK_FALSE(sixteen.verdict.has_value());
  CHECK_FALSE(sixteen.fibered);

  MonodromyRep rep{{Mat2::Identity()}, {}};
  CHECK_THROWS_AS(analyze({AdeConfig{}, rep}), Error);
}

TEST_CASE("monodromy cross-check is attached only for a trivial orbifold") {
  const MonodromyRep minus{std::vector<Mat2>(4, -Mat2::Identity()), {}};
  const auto with_cones = analyze({kummer(), minus});
  REQUIRE(with_cones.monodromy);
  CHECK_FALSE(with_cones.monodromy->attached);

  std::vector<Decoration> bare(4, {KodairaType::IStar(0), {}});
  const auto trivial = analyze({bare, minus});
  REQUIRE(trivial.monodromy);
  CHECK(trivial.monodromy->attached);
  CHECK(trivial.monodromy->quotient->invariant_factors == std::vector<BigInt>{2, 2});
  CHECK(trivial.monodromy->differs_from_simply_connected);
  CHECK(trivial.verdict->candidate_abelian_quotient == trivial.monodromy->quotient);

  // Wrong length or a conflicting declaration are input errors.
  CHECK_THROWS_AS(analyze({bare, MonodromyRep{{-Mat2::Identity(), -Mat2::Identity()}, {}}}), Error);
  MonodromyRep declared = minus;
  declared.declared = {KodairaType::IStar(0), KodairaType::IStar(0), KodairaType::IStar(0),
                       KodairaType::parse("II")};
  CHECK_THROWS_AS(analyze({bare, declared}), Error);
}

TEST_CASE("validation errors propagate") {
  std::vector<Decoration> short_sum(3, kTails);
  CHECK_THROWS_AS(analyze({short_sum, std::nullopt}), Error);
}

TEST_CASE("sweep matches direct enumeration for small budgets") {
  for (int budget : {1, 2, 3, 4, 5, 6, 7, 8}) {
    CAPTURE(budget);
    const auto sweep = sweep_fibrations(budget);
    const auto brute = oracle::brute_sweep(budget);
    CHECK(to_decimal(sweep.total_instances) == std::to_string(brute.total));
    for (auto kind : {OrbifoldKind::SphericalOrBad, OrbifoldKind::Euclidean, OrbifoldKind::Hyperbolic}) {
      const auto it = sweep.instances.find(kind);
      const std::uint64_t got = it == sweep.instances.end() ? 0 : static_cast<std::uint64_t>(it->second);
      const auto want = brute.instances.count(kind) ? brute.instances.at(kind) : 0;
      CHECK(got == want);
    }
    CHECK(sweep.min_e_orb == brute.min_e_orb);
    std::set<std::tuple<std::vector<int>, int, Rational>> euclid, hyper;
    for (const auto& s : sweep.euclidean) euclid.emplace(s.signature.orders(), s.r, s.e_orb);
    for (const auto& s : sweep.hyperbolic) hyper.emplace(s.signature.orders(), s.r, s.e_orb);
    CHECK(euclid == brute.euclidean);
    CHECK(hyper == brute.hyperbolic);
  }
}

TEST_CASE("sweep rejects budgets out of range") {
  CHECK_THROWS_AS(sweep_fibrations(0), Error);
  CHECK_THROWS_AS(sweep_fibrations(61), Error);
}

TEST_CASE("to_decimal") {
  CHECK(to_decimal(0) == "0");
  CHECK(to_decimal(static_cast<unsigned __int128>(1) << 64) == "18446744073709551616");
}
