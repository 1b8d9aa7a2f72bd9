#include "k3orb/kodaira.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

namespace k3orb {

KodairaType::KodairaType(KodairaFamily family, int n) : family_(family), n_(n) {
  if (family == KodairaFamily::I && n < 1) {
    throw Error(ErrorCode::InvalidType, "invalid Kodaira type I" + std::to_string(n));
  }
  if (family == KodairaFamily::IStar && n < 0) {
    throw Error(ErrorCode::InvalidType, "invalid Kodaira type I*" + std::to_string(n));
  }
  if (family != KodairaFamily::I && family != KodairaFamily::IStar) n_ = 0;
}

namespace {

int parse_index(std::string_view digits, std::string_view label) {
  int n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() ||
      (digits.size() > 1 && digits.front() == '0')) {
    throw Error(ErrorCode::InvalidType, "invalid Kodaira label '" + std::string(label) + "'");
  }
  return n;
}

}  // namespace

KodairaType KodairaType::parse(std::string_view label) {
  if (label == "II") return {KodairaFamily::II};
  if (label == "III") return {KodairaFamily::III};
  if (label == "IV") return {KodairaFamily::IV};
  if (label == "IV*") return {KodairaFamily::IVStar};
  if (label == "III*") return {KodairaFamily::IIIStar};
  if (label == "II*") return {KodairaFamily::IIStar};
  if (label.starts_with("I*")) return IStar(parse_index(label.substr(2), label));
  if (label.starts_with("I")) return I(parse_index(label.substr(1), label));
  throw Error(ErrorCode::InvalidType, "invalid Kodaira label '" + std::string(label) + "'");
}

KodairaType KodairaType::parse(std::string_view family_label, int n) {
  if (family_label == "I") return I(n);
  if (family_label == "I*") return IStar(n);
  throw Error(ErrorCode::InvalidType,
              "Kodaira family '" + std::string(family_label) + "' takes no index");
}

std::string KodairaType::label() const {
  switch (family_) {
    case KodairaFamily::I: return "I" + std::to_string(n_);
    case KodairaFamily::II: return "II";
    case KodairaFamily::III: return "III";
    case KodairaFamily::IV: return "IV";
    case KodairaFamily::IStar: return "I*" + std::to_string(n_);
    case KodairaFamily::IVStar: return "IV*";
    case KodairaFamily::IIIStar: return "III*";
    case KodairaFamily::IIStar: return "II*";
  }
  return {};
}

int KodairaType::euler_number() const {
  switch (family_) {
    case KodairaFamily::I: return n_;
    case KodairaFamily::II: return 2;
    case KodairaFamily::III: return 3;
    case KodairaFamily::IV: return 4;
    case KodairaFamily::IStar: return n_ + 6;
    case KodairaFamily::IVStar: return 8;
    case KodairaFamily::IIIStar: return 9;
    case KodairaFamily::IIStar: return 10;
  }
  return 0;
}

std::optional<int> FiberData::component_index(std::string_view id) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].id == id) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::vector<int> FiberData::multiplicities() const {
  std::vector<int> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.multiplicity);
  return out;
}

namespace {

Mat2 mat2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  Mat2 m;
  m << a, b, c, d;
  return m;
}

struct FiberBuilder {
  FiberData data;

  int add(std::string id, int multiplicity) {
    data.components.push_back({std::move(id), multiplicity});
    return static_cast<int>(data.components.size()) - 1;
  }
  void link(int a, int b, int weight = 1) { data.dual_graph.push_back({a, b, weight}); }
};

}  // namespace

FiberData fiber_data(const KodairaType& t) {
  FiberBuilder f{FiberData{t, {}, {}, Mat2::Identity(), t.euler_number()}};
  const int n = t.index();
  switch (t.family()) {
    case KodairaFamily::I: {
      for (int i = 0; i < n; ++i) f.add("c" + std::to_string(i), 1);
      if (n == 2) {
        f.link(0, 1, 2);
      } else if (n >= 3) {
        for (int i = 0; i < n; ++i) f.link(i, (i + 1) % n);
      }
      f.data.monodromy = mat2(1, n, 0, 1);
      break;
    }
    case KodairaFamily::II:
      f.add("c0", 1);
      f.data.monodromy = mat2(1, 1, -1, 0);
      break;
    case KodairaFamily::III:
      f.add("c0", 1);
      f.add("c1", 1);
      f.link(0, 1, 2);
      f.data.monodromy = mat2(0, 1, -1, 0);
      break;
    case KodairaFamily::IV:
      f.add("c0", 1);
      f.add("c1", 1);
      f.add("c2", 1);
      f.link(0, 1);
      f.link(0, 2);
      f.link(1, 2);
      f.data.monodromy = mat2(0, 1, -1, -1);
      break;
    case KodairaFamily::IStar: {
      for (int i = 1; i <= 4; ++i) f.add("t" + std::to_string(i), 1);
      for (int i = 0; i <= n; ++i) f.add("c" + std::to_string(i), 2);
      const int first = 4;
      const int last = 4 + n;
      for (int i = first; i < last; ++i) f.link(i, i + 1);
      f.link(0, first);
      f.link(1, first);
      f.link(2, last);
      f.link(3, last);
      f.data.monodromy = mat2(-1, -n, 0, -1);
      break;
    }
    case KodairaFamily::IVStar: {
      const char* arms[] = {"a", "b", "d"};
      std::vector<int> inner;
      for (const char* arm : arms) {
        const int outer = f.add(std::string(arm) + "1", 1);
        inner.push_back(f.add(std::string(arm) + "2", 2));
        f.link(outer, inner.back());
      }
      const int z = f.add("z", 3);
      for (int v : inner) f.link(v, z);
      f.data.monodromy = mat2(-1, -1, 1, 0);
      break;
    }
    case KodairaFamily::IIIStar: {
      const int mult[] = {1, 2, 3, 4, 3, 2, 1};
      for (int i = 0; i < 7; ++i) f.add("c" + std::to_string(i + 1), mult[i]);
      for (int i = 0; i + 1 < 7; ++i) f.link(i, i + 1);
      const int b1 = f.add("b1", 2);
      f.link(3, b1);
      f.data.monodromy = mat2(0, -1, 1, 0);
      break;
    }
    case KodairaFamily::IIStar: {
      const int mult[] = {1, 2, 3, 4, 5, 6, 4, 2};
      for (int i = 0; i < 8; ++i) f.add("c" + std::to_string(i + 1), mult[i]);
      for (int i = 0; i + 1 < 8; ++i) f.link(i, i + 1);
      const int b1 = f.add("b1", 3);
      f.link(5, b1);
      f.data.monodromy = mat2(0, -1, 1, 1);
      break;
    }
  }
  return f.data;
}

Matrix<std::int64_t> intersection_matrix(const FiberData& fiber) {
  const auto n = static_cast<Eigen::Index>(fiber.components.size());
  Matrix<std::int64_t> m = Matrix<std::int64_t>::Zero(n, n);
  const bool irreducible =
      fiber.type == KodairaType::I(1) || fiber.type.family() == KodairaFamily::II;
  if (!irreducible) m.diagonal().setConstant(-2);
  for (const auto& e : fiber.dual_graph) {
    m(e.a, e.b) += e.weight;
    m(e.b, e.a) += e.weight;
  }
  return m;
}

std::optional<DecorationOutcome> evaluate_removed_mask(const FiberData& fiber,
                                                        std::uint64_t removed_mask) {
  const int n = static_cast<int>(fiber.components.size());
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if ((removed_mask & ~all) != 0 || removed_mask == all) return std::nullopt;

  std::uint64_t neighbors[64] = {};
  for (const auto& e : fiber.dual_graph) {
    const std::uint64_t a = std::uint64_t{1} << e.a;
    const std::uint64_t b = std::uint64_t{1} << e.b;
    // Two curves meeting with intersection number >= 2 cannot both be
    // exceptional curves of a Du Val point.
    if (e.weight != 1 && (removed_mask & a) && (removed_mask & b)) return std::nullopt;
    neighbors[e.a] |= b;
    neighbors[e.b] |= a;
  }

  int g = 0;
  for (int i = 0; i < n; ++i) {
    if (!(removed_mask & (std::uint64_t{1} << i))) g = std::gcd(g, fiber.components[i].multiplicity);
  }
  std::vector<DuValType> types;
  if (!recognize_ade_mask(std::span(neighbors, n), removed_mask, types)) return std::nullopt;
  return DecorationOutcome{g, AdeConfig(std::move(types))};
}

DecorationOutcome validate_decoration(const Decoration& d) {
  const auto fiber = fiber_data(d.fiber);
  const int n = static_cast<int>(fiber.components.size());
  std::uint64_t mask = 0;
  for (const auto& id : d.removed) {
    const auto idx = fiber.component_index(id);
    if (!idx) {
      throw Error(ErrorCode::UnknownComponent,
                  "fiber " + d.fiber.label() + " has no component '" + id + "'");
    }
    const std::uint64_t bit = std::uint64_t{1} << *idx;
    if (mask & bit) {
      throw Error(ErrorCode::InvalidInput,
                  "component '" + id + "' listed twice in fiber " + d.fiber.label());
    }
    mask |= bit;
  }
  if (std::popcount(mask) == n) {
    throw Error(ErrorCode::FullSupportRemoved,
                "removed set is the whole support of fiber " + d.fiber.label());
  }
  if (n > 64) {
    throw Error(ErrorCode::InvalidInput, "fiber " + d.fiber.label() + " is too large");
  }
  auto outcome = evaluate_removed_mask(fiber, mask);
  if (!outcome) {
    throw Error(ErrorCode::NotAdeRemovedSet,
                "removed components of fiber " + d.fiber.label() + " do not form an ADE diagram");
  }
  return *outcome;
}

ValidatedFibration validate_k3_fibration(std::span<const Decoration> fibers, int euler_budget) {
  ValidatedFibration out;
  for (const auto& d : fibers) {
    auto outcome = validate_decoration(d);
    out.euler_sum += d.fiber.euler_number();
    if (!d.removed.empty()) {
      out.multiplicities.push_back(outcome.kept_gcd);
      out.exceptional.merge(outcome.removed);
    }
    out.outcomes.push_back(std::move(outcome));
  }
  if (out.euler_sum != euler_budget) {
    throw Error(ErrorCode::EulerSumMismatch,
                "fiber Euler numbers sum to " + std::to_string(out.euler_sum) + ", expected " +
                    std::to_string(euler_budget));
  }
  return out;
}

namespace {

// Canonical rotation of a removed mask on an n-cycle: the smallest rotation.
std::uint64_t min_rotation(std::uint64_t mask, int n) {
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::uint64_t best = mask;
  std::uint64_t m = mask;
  for (int s = 1; s < n; ++s) {
    m = ((m >> 1) | ((m & 1) << (n - 1))) & all;
    best = std::min(best, m);
  }
  return best;
}

}  // namespace

std::vector<OutcomeClass> decoration_outcomes(const KodairaType& t) {
  const auto fiber = fiber_data(t);
  const int n = static_cast<int>(fiber.components.size());
  const bool cyclic = t.family() == KodairaFamily::I && n >= 3;
  std::vector<OutcomeClass> out;
  std::set<std::pair<int, std::string>> seen;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    // Every cycle decoration is a rotation of one whose highest component is
    // kept; skipping the rest leaves the outcome set unchanged.
    if (cyclic && (mask >> (n - 1)) != 0) continue;
    auto outcome = evaluate_removed_mask(fiber, mask);
    if (!outcome) continue;
    if (!seen.emplace(outcome->kept_gcd, outcome->removed.to_string()).second) continue;
    std::vector<std::string> ids;
    const std::uint64_t canonical = cyclic ? min_rotation(mask, n) : mask;
    for (int i = 0; i < n; ++i) {
      if (canonical & (std::uint64_t{1} << i)) ids.push_back(fiber.components[i].id);
    }
    out.push_back({std::move(*outcome), std::move(ids)});
  }
  return out;
}

std::vector<KodairaType> fiber_types_up_to(int max_euler) {
  std::vector<KodairaType> out;
  for (int n = 1; n <= max_euler; ++n) out.push_back(KodairaType::I(n));
  for (auto family : {KodairaFamily::II, KodairaFamily::III, KodairaFamily::IV}) {
    if (KodairaType(family).euler_number() <= max_euler) out.emplace_back(family);
  }
  for (int n = 0; n + 6 <= max_euler; ++n) out.push_back(KodairaType::IStar(n));
  for (auto family : {KodairaFamily::IVStar, KodairaFamily::IIIStar, KodairaFamily::IIStar}) {
    if (KodairaType(family).euler_number() <= max_euler) out.emplace_back(family);
  }
  return out;
}

}  // namespace k3orb
