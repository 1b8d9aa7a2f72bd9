#include <doctest.h>

#include "k3orb/kodaira.hpp"
#include "k3orb/pi1.hpp"
#include "oracles.hpp"

using namespace k3orb;

namespace {

std::vector<KodairaType> all_fibers(int max_index) {
  std::vector<KodairaType> out;
  for (int n = 1; n <= max_index; ++n) out.push_back(KodairaType::I(n));
  for (int n = 0; n <= max_index; ++n) out.push_back(KodairaType::IStar(n));
  for (auto f : {KodairaFamily::II, KodairaFamily::III, KodairaFamily::IV, KodairaFamily::IVStar,
                 KodairaFamily::IIIStar, KodairaFamily::IIStar}) {
    out.emplace_back(f);
  }
  return out;
}

Mat2 power(const Mat2& t, int k) {
  Mat2 p = Mat2::Identity();
  for (int i = 0; i < k; ++i) p = p * t;
  return p;
}

int order_by_powering(const Mat2& t) {
  for (int k = 1; k <= 12; ++k) {
    if (power(t, k) == Mat2::Identity()) return k;
  }
  return 0;
}

}  // namespace

TEST_CASE("labels parse and print") {
  for (const char* label : {"I1", "I3", "II", "III", "IV", "I*0", "I*4", "IV*", "III*", "II*", "I12"}) {
    CHECK(KodairaType::parse(label).label() == label);
  }
  CHECK(KodairaType::parse("I*", 2) == KodairaType::IStar(2));
  CHECK(KodairaType::parse("I", 5) == KodairaType::I(5));
  for (const char* bad : {"I0", "I", "I*", "V", "II*1", "i1", "I-2", "IV**", ""}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(KodairaType::parse(bad), Error);
  }
}

TEST_CASE("Euler numbers") {
  CHECK(KodairaType::I(7).euler_number() == 7);
  CHECK(KodairaType::parse("II").euler_number() == 2);
  CHECK(KodairaType::parse("III").euler_number() == 3);
  CHECK(KodairaType::parse("IV").euler_number() == 4);
  CHECK(KodairaType::IStar(3).euler_number() == 9);
  CHECK(KodairaType::parse("IV*").euler_number() == 8);
  CHECK(KodairaType::parse("III*").euler_number() == 9);
  CHECK(KodairaType::parse("II*").euler_number() == 10);
}

TEST_CASE("fiber_data examples") {
  const auto i0s = fiber_data(KodairaType::IStar(0));
  CHECK(i0s.euler == 6);
  CHECK(i0s.multiplicities() == std::vector{1, 1, 1, 1, 2});
  CHECK(i0s.monodromy == -Mat2::Identity());
  CHECK(power(i0s.monodromy, 2) == Mat2::Identity());

  const auto i3 = fiber_data(KodairaType::I(3));
  CHECK(i3.euler == 3);
  CHECK(i3.multiplicities() == std::vector{1, 1, 1});
  CHECK(i3.dual_graph.size() == 3);
  CHECK(i3.monodromy == (Mat2() << 1, 3, 0, 1).finished());
  CHECK(i3.monodromy.trace() == 2);
  const Mat2 nil = i3.monodromy - Mat2::Identity();
  CHECK(nil * nil == Mat2::Zero());

  const auto e8 = fiber_data(KodairaType::parse("II*"));
  CHECK(e8.euler == 10);
  CHECK(e8.multiplicities() == std::vector{1, 2, 3, 4, 5, 6, 4, 2, 3});
  CHECK(e8.monodromy.trace() == 1);
  CHECK(power(e8.monodromy, 6) == Mat2::Identity());
}

TEST_CASE("multiplicity vector spans the kernel of the intersection form") {
  for (const auto& t : all_fibers(12)) {
    CAPTURE(t.label());
    const auto f = fiber_data(t);
    const auto m = intersection_matrix(f);
    Vector<std::int64_t> mult(static_cast<Eigen::Index>(f.components.size()));
    for (std::size_t i = 0; i < f.components.size(); ++i) mult[i] = f.components[i].multiplicity;
    CHECK((m * mult).isZero());
    CHECK(f.euler == t.euler_number());
    CHECK(f.monodromy(0, 0) * f.monodromy(1, 1) - f.monodromy(0, 1) * f.monodromy(1, 0) == 1);
  }
}

TEST_CASE("monodromy traces and orders") {
  for (int n = 1; n <= 12; ++n) {
    const auto f = fiber_data(KodairaType::I(n));
    CHECK(f.monodromy.trace() == 2);
    CHECK(f.monodromy != Mat2::Identity());
    CHECK(order_by_powering(f.monodromy) == 0);
    CHECK(fiber_data(KodairaType::IStar(n)).monodromy.trace() == -2);
  }
  // The IV* representative has trace -1, hence order 3 (its class is the
  // inverse of IV's).
  const std::vector<std::pair<const char*, int>> orders = {
      {"II", 6}, {"III", 4}, {"IV", 3}, {"I*0", 2}, {"IV*", 3}, {"III*", 4}, {"II*", 6}};
  for (auto [label, order] : orders) {
    CAPTURE(label);
    const auto f = fiber_data(KodairaType::parse(label));
    CHECK(order_by_powering(f.monodromy) == order);
    CHECK(multiplicative_order(f.monodromy) == order);
  }
}

TEST_CASE("validate_decoration examples") {
  const auto tails = validate_decoration({KodairaType::IStar(0), {"t1", "t2", "t3", "t4"}});
  CHECK(tails.kept_gcd == 2);
  CHECK(tails.removed.to_string() == "4A1");

  const auto e8 = validate_decoration(
      {KodairaType::parse("II*"), {"c1", "c2", "c3", "c4", "c5", "c7", "c8", "b1"}});
  CHECK(e8.kept_gcd == 6);
  CHECK(e8.removed == AdeConfig({DuValType::A(5), DuValType::A(2), DuValType::A(1)}));

  auto code_of = [](const Decoration& d) {
    try {
      validate_decoration(d);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  CHECK(code_of({KodairaType::I(1), {"c0"}}) == ErrorCode::FullSupportRemoved);
  CHECK(code_of({KodairaType::parse("III"), {"c0", "c1"}}) == ErrorCode::FullSupportRemoved);
  CHECK(code_of({KodairaType::I(2), {"c0", "c1"}}) == ErrorCode::FullSupportRemoved);
  CHECK(code_of({KodairaType::I(3), {"c7"}}) == ErrorCode::UnknownComponent);
  CHECK(code_of({KodairaType::IStar(0), {"t1", "t1"}}) == ErrorCode::InvalidInput);

  // Type IV: any two components form an A2.
  const auto iv = validate_decoration({KodairaType::parse("IV"), {"c0", "c2"}});
  CHECK(iv.removed.to_string() == "A2");
  CHECK(iv.kept_gcd == 1);
}

TEST_CASE("double edges block removal of both ends") {
  const auto f = fiber_data(KodairaType::parse("III"));
  CHECK(evaluate_removed_mask(f, 0b01).has_value());
  CHECK(evaluate_removed_mask(f, 0b10).has_value());
  const auto i2 = fiber_data(KodairaType::I(2));
  CHECK(evaluate_removed_mask(i2, 0b01)->removed.to_string() == "A1");
}

TEST_CASE("every proper subset without double edges is ADE") {
  for (const auto& t : all_fibers(9)) {
    const auto f = fiber_data(t);
    const auto n = f.components.size();
    if (n > 10) continue;
    CAPTURE(t.label());
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
      bool double_edge = false;
      for (const auto& e : f.dual_graph) {
        if (e.weight != 1 && (mask >> e.a & 1) && (mask >> e.b & 1)) double_edge = true;
      }
      if (double_edge) continue;
      CHECK(evaluate_removed_mask(f, mask).has_value());
    }
  }
}

TEST_CASE("empty decoration keeps gcd 1") {
  for (const auto& t : all_fibers(12)) {
    CAPTURE(t.label());
    const auto o = validate_decoration({t, {}});
    CHECK(o.kept_gcd == 1);
    CHECK(o.removed.empty());
  }
}

TEST_CASE("outcome classes match an exhaustive scan of all subsets") {
  for (const auto& t : fiber_types_up_to(13)) {
    CAPTURE(t.label());
    std::set<std::pair<int, std::string>> got;
    for (const auto& c : decoration_outcomes(t)) {
      got.emplace(c.outcome.kept_gcd, c.outcome.removed.to_string());
      CHECK(validate_decoration({t, c.representative}) == c.outcome);
    }
    CHECK(got.size() == decoration_outcomes(t).size());
    CHECK(got == oracle::outcome_labels(t));
  }
}

TEST_CASE("validate_k3_fibration") {
  std::vector<Decoration> kummer(4, {KodairaType::IStar(0), {"t1", "t2", "t3", "t4"}});
  const auto v = validate_k3_fibration(kummer);
  CHECK(v.euler_sum == 24);
  CHECK(v.r() == 16);
  CHECK(v.multiplicities == std::vector{2, 2, 2, 2});

  std::vector<Decoration> nodal(24, {KodairaType::I(1), {}});
  const auto w = validate_k3_fibration(nodal);
  CHECK(w.r() == 0);
  CHECK(w.multiplicities.empty());

  std::vector<Decoration> three(3, {KodairaType::parse("II*"), {}});
  try {
    validate_k3_fibration(three);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EulerSumMismatch);
    CHECK(std::string(e.what()).find("30") != std::string::npos);
  }
}

TEST_CASE("fiber type list is complete for a budget") {
  const auto types = fiber_types_up_to(24);
  // I1..I24, II, III, IV, I*0..I*18, IV*, III*, II*
  CHECK(types.size() == 24 + 3 + 19 + 3);
  for (const auto& t : types) CHECK(t.euler_number() <= 24);
}
