#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "k3orb/kodaira.hpp"
#include "k3orb/numeric.hpp"

namespace k3orb {

/// Ordered local monodromies T_1..T_k around the singular fibers, with an
/// optional declared fiber type per entry.
struct MonodromyRep {
  std::vector<Mat2> matrices;
  std::vector<std::optional<KodairaType>> declared;  // empty or same length
};

/// Conjugacy buckets of SL(2,Z) elements distinguishable by trace and order.
enum class MonodromyBucket {
  Trivial,            // identity (smooth fiber)
  Unipotent,          // trace 2, not the identity: I_n
  NegativeUnipotent,  // trace -2: I*_n (I*_0 = -identity)
  Order6,             // trace 1: II or II*
  Order4,             // trace 0: III or III*
  Order3,             // trace -1: IV or IV*
  Unrecognized,       // |trace| > 2
};

std::string_view to_string(MonodromyBucket b);

MonodromyBucket kodaira_class_of(const Mat2& t);

/// Bucket a fiber type's monodromy falls into.
MonodromyBucket bucket_of(const KodairaType& t);

/// Smallest k >= 1 with t^k = identity, if t has finite order.
std::optional<int> multiplicative_order(const Mat2& t);

/// Checks det = 1, the ordered product is the identity, and each declared
/// type matches the trace/order bucket of its matrix (for I_n and I*_n also
/// the index, via the content of T - I resp. T + I).
/// Throws Error(DetNotOne | ProductNotIdentity | ClassMismatch); indices in
/// messages are 1-based.
void validate_representation(const MonodromyRep& rep);

/// Finitely generated abelian group by invariant factors d_1 | d_2 | ...,
/// 0 denoting a free factor (zeros last, units dropped).
struct AbelianGroup {
  std::vector<BigInt> invariant_factors;

  bool is_trivial() const { return invariant_factors.empty(); }
  bool is_finite() const;
  /// "trivial", "Z/2 x Z/2", "Z^2", "Z/3 x Z".
  std::string to_string() const;
  bool operator==(const AbelianGroup&) const = default;
};

/// Z^2 modulo the column span of (I - T_j) for j in `subset` (0-based).
AbelianGroup coinvariant_quotient(const MonodromyRep& rep, std::span<const std::size_t> subset);

/// Same over every entry of the representation.
AbelianGroup coinvariant_quotient(const MonodromyRep& rep);

}  // namespace k3orb
