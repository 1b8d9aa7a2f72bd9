#include <doctest.h>

#include <random>

#include "k3orb/dynkin.hpp"
#include "k3orb/lattice.hpp"
#include "oracles.hpp"

using namespace k3orb;

namespace {

std::vector<DuValType> all_types_up_to(int max_rank) {
  std::vector<DuValType> out;
  for (int n = 1; n <= max_rank; ++n) {
    for (const auto& t : types_of_rank(n)) out.push_back(t);
  }
  return out;
}

SimpleGraph diagram(const DuValType& t) {
  SimpleGraph g{t.rank(), dynkin_edges(t)};
  return g;
}

}  // namespace

TEST_CASE("du_val_data table") {
  auto a1 = du_val_data(DuValType::A(1));
  CHECK(a1.rank == 1);
  CHECK(a1.delta == 2);
  CHECK(a1.cartan_det == 2);

  auto d4 = du_val_data(DuValType::D(4));
  CHECK(d4.rank == 4);
  CHECK(d4.delta == 8);
  CHECK(d4.cartan_det == 4);

  auto e8 = du_val_data(DuValType::E(8));
  CHECK(e8.rank == 8);
  CHECK(e8.delta == 120);
  CHECK(e8.cartan_det == 1);

  CHECK(du_val_data(DuValType::E(6)).delta == 24);
  CHECK(du_val_data(DuValType::E(7)).delta == 48);
  CHECK(du_val_data(DuValType::E(6)).cartan_det == 3);
  CHECK(du_val_data(DuValType::E(7)).cartan_det == 2);
  CHECK(du_val_data(DuValType::D(9)).delta == 28);
}

TEST_CASE("delta agrees with the order of the binary polyhedral group") {
  for (const auto& t : all_types_up_to(12)) {
    CAPTURE(t.label());
    const auto order = oracle::binary_polyhedral_order(t);
    REQUIRE(order);
    CHECK(static_cast<std::int64_t>(*order) == du_val_data(t).delta);
  }
}

TEST_CASE("malformed types are rejected") {
  CHECK_THROWS_AS(DuValType::D(3), Error);
  CHECK_THROWS_AS(DuValType::E(9), Error);
  CHECK_THROWS_AS(DuValType::E(5), Error);
  CHECK_THROWS_AS(DuValType::A(0), Error);
  for (const char* bad : {"D3", "E9", "A0", "a1", "A", "B2", "A-1", "A01", "A1x", ""}) {
    CAPTURE(bad);
    try {
      DuValType::parse(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidType);
    }
  }
  CHECK(DuValType::parse("A12") == DuValType::A(12));
  CHECK(DuValType::parse("E7").label() == "E7");
}

TEST_CASE("local Euler contributions") {
  CHECK(local_euler_contribution(DuValType::A(1)) == make_rational(3, 2));
  CHECK(local_euler_contribution(DuValType::E(8)) == make_rational(1079, 120));
  CHECK(local_euler_contribution(DuValType::A(2)) == make_rational(8, 3));
}

TEST_CASE("contribution is at most 3n/2 with equality only for A1") {
  for (const auto& t : all_types_up_to(50)) {
    CAPTURE(t.label());
    const Rational c = local_euler_contribution(t);
    const Rational cap = make_rational(3 * t.rank(), 2);
    CHECK(c <= cap);
    CHECK((c == cap) == (t == DuValType::A(1)));
  }
}

TEST_CASE("recognize_ade examples") {
  CHECK(recognize_ade({1, {}}) == std::vector{DuValType::A(1)});
  CHECK(recognize_ade({3, {{0, 1}, {1, 2}}}) == std::vector{DuValType::A(3)});
  const auto star = recognize_ade({4, {{0, 1}, {0, 2}, {0, 3}}});
  REQUIRE(star == std::vector{DuValType::D(4)});
  CHECK(determinant<std::int64_t>(cartan_matrix(star[0])) == 4);
}

TEST_CASE("recognize_ade rejects affine and wild diagrams") {
  auto rejects = [](SimpleGraph g) {
    try {
      recognize_ade(g);
      return false;
    } catch (const Error& e) {
      return e.code() == ErrorCode::NotAde;
    }
  };
  CHECK(rejects({3, {{0, 1}, {1, 2}, {2, 0}}}));                            // cycle
  CHECK(rejects({5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}}));                    // degree 4
  CHECK(rejects({6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {0, 5}}}));    // cycle plus branch
  CHECK(rejects({6, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 5}}}));            // two branch points
  CHECK(rejects({7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}}}));    // affine E6
  CHECK(rejects({9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}}}));  // affine E8
  CHECK(rejects({2, {{0, 0}}}));
  CHECK(rejects({2, {{0, 1}, {1, 0}}}));
}

TEST_CASE("recognition round-trips every Dynkin diagram and its Cartan matrix") {
  for (const auto& t : all_types_up_to(20)) {
    CAPTURE(t.label());
    const auto found = recognize_ade(diagram(t));
    REQUIRE(found.size() == 1);
    CHECK(found[0] == t);
    const auto c = cartan_matrix(t);
    CHECK(determinant<std::int64_t>(c) == du_val_data(t).cartan_det);
    // Positive definite: every leading principal minor is positive.
    for (Eigen::Index k = 1; k <= c.rows(); ++k) {
      CHECK(determinant<std::int64_t>(c.topLeftCorner(k, k)) > 0);
    }
  }
}

TEST_CASE("relabeled disjoint unions are recognized componentwise") {
  std::mt19937 rng(11);
  const auto types = all_types_up_to(9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<DuValType> picked;
    SimpleGraph g;
    for (int k = std::uniform_int_distribution<int>(1, 4)(rng); k > 0; --k) {
      const auto t = types[std::uniform_int_distribution<std::size_t>(0, types.size() - 1)(rng)];
      picked.push_back(t);
      for (auto [a, b] : dynkin_edges(t)) g.edges.emplace_back(a + g.vertex_count, b + g.vertex_count);
      g.vertex_count += t.rank();
    }
    std::vector<int> perm(g.vertex_count);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& [a, b] : g.edges) {
      a = perm[a];
      b = perm[b];
    }
    auto found = recognize_ade(g);
    std::sort(found.begin(), found.end());
    std::sort(picked.begin(), picked.end());
    CHECK(found == picked);

    std::vector<std::uint64_t> nbr(g.vertex_count, 0);
    for (auto [a, b] : g.edges) {
      nbr[a] |= std::uint64_t{1} << b;
      nbr[b] |= std::uint64_t{1} << a;
    }
    std::vector<DuValType> masked;
    REQUIRE(recognize_ade_mask(nbr, (std::uint64_t{1} << g.vertex_count) - 1, masked));
    std::sort(masked.begin(), masked.end());
    CHECK(masked == picked);
  }
}

TEST_CASE("both recognizers agree on random small graphs") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 9)(rng);
    SimpleGraph g{n, {}};
    std::vector<std::uint64_t> nbr(n, 0);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
          g.edges.emplace_back(a, b);
          nbr[a] |= std::uint64_t{1} << b;
          nbr[b] |= std::uint64_t{1} << a;
        }
      }
    }
    std::optional<std::vector<DuValType>> listed;
    try {
      listed = recognize_ade(g);
      std::sort(listed->begin(), listed->end());
    } catch (const Error&) {
    }
    std::vector<DuValType> masked;
    const bool ok = recognize_ade_mask(nbr, (std::uint64_t{1} << n) - 1, masked);
    REQUIRE(ok == listed.has_value());
    if (ok) {
      std::sort(masked.begin(), masked.end());
      CHECK(masked == *listed);
    }
  }
}

TEST_CASE("AdeConfig formatting and rank") {
  AdeConfig c({DuValType::A(1), DuValType::A(4), DuValType::A(2), DuValType::A(4), DuValType::E(6)});
  CHECK(c.rank() == 17);
  CHECK(c.to_string() == "E6+2A4+A2+A1");
  CHECK(AdeConfig{}.to_string() == "0");
  CHECK(AdeConfig{}.rank() == 0);
}
