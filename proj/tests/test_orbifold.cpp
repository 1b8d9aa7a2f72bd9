#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "k3orb/orbifold.hpp"

using namespace k3orb;

TEST_CASE("signature normalization") {
  CHECK(OrbifoldSignature({5, 1, 2, 3, 1}).orders() == std::vector{2, 3, 5});
  CHECK(OrbifoldSignature::parse("2,3,5") == OrbifoldSignature({5, 3, 2}));
  CHECK(OrbifoldSignature::parse("").cone_count() == 0);
  CHECK(OrbifoldSignature({3, 2, 2}).to_string() == "2,2,3");
  CHECK_THROWS_AS(OrbifoldSignature({0, 2}), Error);
  for (const char* bad : {"2,,3", "2,x", "-2", "2,3,", ",2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(OrbifoldSignature::parse(bad), Error);
  }
}

TEST_CASE("orbifold Euler characteristic") {
  CHECK(orbifold_euler_characteristic(OrbifoldSignature{}) == 2);
  CHECK(orbifold_euler_characteristic(OrbifoldSignature({2, 3, 5})) == make_rational(1, 30));
  CHECK(orbifold_euler_characteristic(OrbifoldSignature({2, 2, 2, 2})) == 0);
  CHECK(orbifold_euler_characteristic(OrbifoldSignature({2, 3, 7})) == make_rational(-1, 42));
}

TEST_CASE("classification examples") {
  CHECK(classify(OrbifoldSignature({2, 3, 5})) == OrbifoldClass{OrbifoldKind::SphericalOrBad, 60});
  CHECK(classify(OrbifoldSignature({2, 2, 2, 2})).kind == OrbifoldKind::Euclidean);
  CHECK(classify(OrbifoldSignature({2, 3, 7})).kind == OrbifoldKind::Hyperbolic);
  CHECK(classify(OrbifoldSignature({4, 6})) == OrbifoldClass{OrbifoldKind::SphericalOrBad, 2});
  CHECK(classify(OrbifoldSignature({7})) == OrbifoldClass{OrbifoldKind::SphericalOrBad, 1});
  CHECK(classify(OrbifoldSignature{}) == OrbifoldClass{OrbifoldKind::SphericalOrBad, 1});
  CHECK(classify(OrbifoldSignature({2, 2, 9})) == OrbifoldClass{OrbifoldKind::SphericalOrBad, 18});
  for (auto s : {std::vector{2, 3, 6}, std::vector{2, 4, 4}, std::vector{3, 3, 3}}) {
    CHECK(classify(OrbifoldSignature(s)).kind == OrbifoldKind::Euclidean);
  }
  CHECK(classify(OrbifoldSignature({2, 2, 2, 3})).kind == OrbifoldKind::Hyperbolic);
  CHECK(classify(OrbifoldSignature({2, 2, 2, 2, 2})).kind == OrbifoldKind::Hyperbolic);
}

TEST_CASE("Euclidean signatures are exactly the four classical ones") {
  std::set<std::vector<int>> euclidean;
  std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& s, int start) {
    if (!s.empty() && classify(OrbifoldSignature(s)).kind == OrbifoldKind::Euclidean) {
      euclidean.insert(s);
    }
    if (s.size() == 5) return;
    for (int m = start; m <= 12; ++m) {
      s.push_back(m);
      rec(s, m);
      s.pop_back();
    }
  };
  std::vector<int> s;
  rec(s, 2);
  CHECK(euclidean == std::set<std::vector<int>>{{2, 3, 6}, {2, 4, 4}, {3, 3, 3}, {2, 2, 2, 2}});
}

TEST_CASE("classification ignores order and unit entries") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> s(std::uniform_int_distribution<int>(0, 5)(rng));
    for (auto& v : s) v = std::uniform_int_distribution<int>(2, 9)(rng);
    auto t = s;
    std::shuffle(t.begin(), t.end(), rng);
    t.insert(t.begin() + static_cast<long>(std::uniform_int_distribution<std::size_t>(0, t.size())(rng)), 1);
    CHECK(classify(OrbifoldSignature(s)) == classify(OrbifoldSignature(t)));
    CHECK(orbifold_euler_characteristic(OrbifoldSignature(s)) ==
          orbifold_euler_characteristic(OrbifoldSignature(t)));
  }
}

TEST_CASE("chi decreases strictly when a cone order grows") {
  for (int a = 2; a <= 7; ++a) {
    for (int b = a; b <= 7; ++b) {
      for (int c = b; c <= 7; ++c) {
        const auto base = orbifold_euler_characteristic(OrbifoldSignature({a, b, c}));
        CHECK(orbifold_euler_characteristic(OrbifoldSignature({a + 1, b, c})) < base);
        CHECK(orbifold_euler_characteristic(OrbifoldSignature({a, b, c + 1})) < base);
        CHECK(orbifold_euler_characteristic(OrbifoldSignature({a, b, c, 2})) < base);
      }
    }
  }
}

TEST_CASE("coset enumeration examples") {
  CHECK(group_order_oracle(OrbifoldSignature({2, 3, 3})) == 12);
  CHECK(group_order_oracle(OrbifoldSignature{}) == 1);
  CHECK(group_order_oracle(OrbifoldSignature({5})) == 1);
  CHECK(group_order_oracle(OrbifoldSignature({4, 6})) == 2);
  CHECK_FALSE(group_order_oracle(OrbifoldSignature({2, 3, 6}), 10000).has_value());
  CHECK_FALSE(group_order_oracle(OrbifoldSignature({2, 2, 2, 2}), 5000).has_value());
  CHECK_FALSE(group_order_oracle(OrbifoldSignature({2, 3, 7}), 5000).has_value());
}

TEST_CASE("coset enumeration on classical presentations") {
  // Z/6 as <a | a^6>
  CHECK(enumerate_cosets(1, {{0, 0, 0, 0, 0, 0}}, 100) == 6);
  // S3 as <a, b | a^2, b^3, (ab)^2>
  CHECK(enumerate_cosets(2, {{0, 0}, {2, 2, 2}, {0, 2, 0, 2}}, 100) == 6);
  // Quaternion group <a, b | a^4, a^2 b^-2, a b a b^-1>
  CHECK(enumerate_cosets(2, {{0, 0, 0, 0}, {0, 0, 3, 3}, {0, 2, 0, 3}}, 100) == 8);
  // Z^2 does not close
  CHECK_FALSE(enumerate_cosets(2, {{0, 2, 1, 3}}, 2000).has_value());
}

TEST_CASE("coset enumeration matches the classification on small grids") {
  for (int a = 2; a <= 6; ++a) {
    for (int b = a; b <= 6; ++b) {
      const OrbifoldSignature two({a, b});
      CHECK(group_order_oracle(two) == classify(two).order);
      for (int c = b; c <= 6; ++c) {
        const OrbifoldSignature s({a, b, c});
        const auto cls = classify(s);
        if (cls.kind == OrbifoldKind::SphericalOrBad) {
          CAPTURE(s.to_string());
          CHECK(group_order_oracle(s) == cls.order);
        }
      }
    }
  }
}
