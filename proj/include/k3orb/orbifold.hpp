#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k3orb/numeric.hpp"

namespace k3orb {

/// Cone-point orders of a genus-0 orbifold. Entries equal to 1 are dropped and
/// the rest kept sorted ascending.
class OrbifoldSignature {
 public:
  OrbifoldSignature() = default;
  /// Throws Error(InvalidInput) for entries < 1.
  explicit OrbifoldSignature(std::vector<int> orders);
  /// Parses "2,3,5"; the empty string is the unbranched sphere.
  static OrbifoldSignature parse(std::string_view text);

  const std::vector<int>& orders() const noexcept { return orders_; }
  std::size_t cone_count() const noexcept { return orders_.size(); }
  std::string to_string() const;

  bool operator==(const OrbifoldSignature&) const = default;

 private:
  std::vector<int> orders_;
};

/// 2 - sum (1 - 1/m_j).
Rational orbifold_euler_characteristic(const OrbifoldSignature& s);

enum class OrbifoldKind { SphericalOrBad, Euclidean, Hyperbolic };

struct OrbifoldClass {
  OrbifoldKind kind;
  std::optional<std::int64_t> order;  // group order, SphericalOrBad only

  bool operator==(const OrbifoldClass&) const = default;
};

std::string_view to_string(OrbifoldKind kind);

/// Trichotomy of the orbifold fundamental group
/// <g_1..g_k | g_j^{m_j}, g_1...g_k>. Finite cases carry the group order.
OrbifoldClass classify(const OrbifoldSignature& s);

/// Order of <g_1..g_k | g_j^{m_j}, g_1...g_k> by coset enumeration over the
/// trivial subgroup, or nullopt if more than `limit` cosets get defined.
std::optional<std::int64_t> group_order_oracle(const OrbifoldSignature& s,
                                               std::int64_t limit = 10000);

/// Coset enumeration for an arbitrary presentation: generator g has table
/// columns 2g (g) and 2g+1 (g^-1); relators are words over those columns.
std::optional<std::int64_t> enumerate_cosets(int generators,
                                             const std::vector<std::vector<int>>& relators,
                                             std::int64_t limit);

}  // namespace k3orb
