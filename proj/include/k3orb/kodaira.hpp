#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "k3orb/dynkin.hpp"
#include "k3orb/numeric.hpp"

namespace k3orb {

enum class KodairaFamily : std::uint8_t { I, II, III, IV, IStar, IVStar, IIIStar, IIStar };

/// Kodaira singular fiber type. I_n needs n >= 1, I*_n needs n >= 0; the other
/// families carry no index.
class KodairaType {
 public:
  KodairaType(KodairaFamily family, int n = 0);

  static KodairaType I(int n) { return {KodairaFamily::I, n}; }
  static KodairaType IStar(int n) { return {KodairaFamily::IStar, n}; }

  /// "I1", "I3", "II", "III", "IV", "I*0", "I*4", "IV*", "III*", "II*".
  static KodairaType parse(std::string_view label);
  /// Family label "I" or "I*" plus a separate index.
  static KodairaType parse(std::string_view family_label, int n);

  KodairaFamily family() const noexcept { return family_; }
  int index() const noexcept { return n_; }
  std::string label() const;
  /// Topological Euler number of the fiber.
  int euler_number() const;

  auto operator<=>(const KodairaType&) const = default;

 private:
  KodairaFamily family_;
  int n_;
};

struct FiberComponent {
  std::string id;
  int multiplicity;
};

struct FiberEdge {
  int a;
  int b;
  int weight;  // intersection number of the two components
};

struct FiberData {
  KodairaType type;
  std::vector<FiberComponent> components;
  std::vector<FiberEdge> dual_graph;
  Mat2 monodromy;
  int euler;

  std::optional<int> component_index(std::string_view id) const;
  std::vector<int> multiplicities() const;
};

/// Canonical table entry for a fiber type.
FiberData fiber_data(const KodairaType& t);

/// Intersection matrix of the fiber components: -2 on the diagonal (0 for the
/// irreducible singular fibers I_1 and II), edge weights off the diagonal.
Matrix<std::int64_t> intersection_matrix(const FiberData& fiber);

struct Decoration {
  KodairaType fiber;
  std::vector<std::string> removed;  // component ids forming the exceptional set
};

struct DecorationOutcome {
  int kept_gcd;       // gcd of multiplicities of the components left in place
  AdeConfig removed;  // Dynkin type of the removed components

  bool operator==(const DecorationOutcome&) const = default;
};

/// Throws Error with code UnknownComponent, FullSupportRemoved or
/// NotAdeRemovedSet.
DecorationOutcome validate_decoration(const Decoration& d);

/// Same checks on a bitmask over the components of `fiber` (bit i = component
/// i removed). Returns nullopt instead of throwing.
std::optional<DecorationOutcome> evaluate_removed_mask(const FiberData& fiber,
                                                        std::uint64_t removed_mask);

struct ValidatedFibration {
  std::vector<DecorationOutcome> outcomes;  // in input order
  std::vector<int> multiplicities;          // m_j of decorated fibers, input order
  AdeConfig exceptional;                    // union of removed configurations
  int euler_sum = 0;

  int r() const { return exceptional.rank(); }
};

/// Validates every decoration and the Euler budget sum e = 24
/// (Error(EulerSumMismatch) otherwise).
ValidatedFibration validate_k3_fibration(std::span<const Decoration> fibers,
                                         int euler_budget = 24);

struct OutcomeClass {
  DecorationOutcome outcome;
  std::vector<std::string> representative;  // one removed set realizing it
};

/// All distinct (kept gcd, removed Dynkin type) outcomes over every
/// admissible removed set, including the empty one. Ordered by the smallest
/// realizing subset mask (for I_n, up to rotation).
std::vector<OutcomeClass> decoration_outcomes(const KodairaType& t);

/// Every fiber type with Euler number at most `max_euler`, in a fixed order.
std::vector<KodairaType> fiber_types_up_to(int max_euler);

}  // namespace k3orb
