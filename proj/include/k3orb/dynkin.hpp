#pragma once

#include <compare>
#include <span>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k3orb/numeric.hpp"

namespace k3orb {

enum class AdeKind : std::uint8_t { A, D, E };

/// A Du Val (rational double point) type: A_n (n >= 1), D_n (n >= 4), E_6/7/8.
class DuValType {
 public:
  /// Throws Error(InvalidType) for labels outside the ADE series.
  DuValType(AdeKind kind, int n);

  static DuValType A(int n) { return {AdeKind::A, n}; }
  static DuValType D(int n) { return {AdeKind::D, n}; }
  static DuValType E(int n) { return {AdeKind::E, n}; }

  /// Parses "A1", "A12", "D4", "E6" (case-sensitive, no separators).
  static DuValType parse(std::string_view label);

  AdeKind kind() const noexcept { return kind_; }
  int rank() const noexcept { return n_; }
  std::string label() const;

  auto operator<=>(const DuValType&) const = default;

 private:
  AdeKind kind_;
  int n_;
};

struct DuValData {
  int rank;
  std::int64_t delta;       // order of the binary polyhedral group
  std::int64_t cartan_det;  // determinant of the Cartan matrix
};

DuValData du_val_data(const DuValType& t);

/// n + 1 - 1/delta: the amount the point removes from e = 24 when passing to
/// the orbifold Euler number.
Rational local_euler_contribution(const DuValType& t);

/// Cartan matrix (2 on the diagonal, -1 on edges) in the vertex order of
/// `dynkin_edges`.
Matrix<std::int64_t> cartan_matrix(const DuValType& t);

/// Edges of the Dynkin diagram on vertices 0..n-1. A_n is the path; D_n is the
/// path 0..n-2 with vertex n-1 attached to n-3; E_n is the path 0..n-2 with
/// vertex n-1 attached to 2.
std::vector<std::pair<int, int>> dynkin_edges(const DuValType& t);

/// Multiset of Du Val types, kept sorted.
class AdeConfig {
 public:
  AdeConfig() = default;
  explicit AdeConfig(std::vector<DuValType> entries);

  void add(const DuValType& t);
  void merge(const AdeConfig& other);

  const std::vector<DuValType>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Total rank r = number of exceptional curves.
  int rank() const;
  /// Compact form such as "2A4+3A2+4A1"; "0" for the empty configuration.
  std::string to_string() const;

  bool operator==(const AdeConfig&) const = default;

 private:
  std::vector<DuValType> entries_;
};

/// Simple undirected graph on vertices 0..n-1.
struct SimpleGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Classifies each connected component of `g` as a finite ADE diagram.
/// Throws Error(NotAde) naming the first offending component.
std::vector<DuValType> recognize_ade(const SimpleGraph& g);

/// Bitmask variant for graphs on at most 64 vertices without multiple edges:
/// neighbors[v] is the adjacency mask of v. Appends the types of the
/// components of the subgraph induced on `vertices` to `out` and returns
/// false as soon as one component is not ADE.
bool recognize_ade_mask(std::span<const std::uint64_t> neighbors, std::uint64_t vertices,
                        std::vector<DuValType>& out);

/// All Du Val types of rank exactly n.
std::vector<DuValType> types_of_rank(int n);

}  // namespace k3orb
