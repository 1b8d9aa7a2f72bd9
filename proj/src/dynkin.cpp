#include "k3orb/dynkin.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace k3orb {

DuValType::DuValType(AdeKind kind, int n) : kind_(kind), n_(n) {
  const bool ok = (kind == AdeKind::A && n >= 1) || (kind == AdeKind::D && n >= 4) ||
                  (kind == AdeKind::E && n >= 6 && n <= 8);
  if (!ok) {
    const char letter = kind == AdeKind::A ? 'A' : kind == AdeKind::D ? 'D' : 'E';
    throw Error(ErrorCode::InvalidType,
                "invalid Du Val type " + std::string(1, letter) + std::to_string(n));
  }
}

DuValType DuValType::parse(std::string_view label) {
  if (label.size() < 2) {
    throw Error(ErrorCode::InvalidType, "invalid Du Val label '" + std::string(label) + "'");
  }
  AdeKind kind;
  switch (label.front()) {
    case 'A': kind = AdeKind::A; break;
    case 'D': kind = AdeKind::D; break;
    case 'E': kind = AdeKind::E; break;
    default:
      throw Error(ErrorCode::InvalidType, "invalid Du Val label '" + std::string(label) + "'");
  }
  const auto digits = label.substr(1);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.front() == '0') {
    throw Error(ErrorCode::InvalidType, "invalid Du Val label '" + std::string(label) + "'");
  }
  return DuValType(kind, n);
}

std::string DuValType::label() const {
  const char letter = kind_ == AdeKind::A ? 'A' : kind_ == AdeKind::D ? 'D' : 'E';
  return std::string(1, letter) + std::to_string(n_);
}

DuValData du_val_data(const DuValType& t) {
  const int n = t.rank();
  switch (t.kind()) {
    case AdeKind::A: return {n, n + 1, n + 1};
    case AdeKind::D: return {n, 4 * (n - 2), 4};
    case AdeKind::E:
      switch (n) {
        case 6: return {6, 24, 3};
        case 7: return {7, 48, 2};
        default: return {8, 120, 1};
      }
  }
  return {};  // unreachable
}

Rational local_euler_contribution(const DuValType& t) {
  const auto data = du_val_data(t);
  return Rational(data.rank + 1) - make_rational(1, data.delta);
}

std::vector<std::pair<int, int>> dynkin_edges(const DuValType& t) {
  const int n = t.rank();
  std::vector<std::pair<int, int>> edges;
  const int path_end = t.kind() == AdeKind::A ? n : n - 1;
  for (int v = 0; v + 1 < path_end; ++v) edges.emplace_back(v, v + 1);
  if (t.kind() == AdeKind::D) edges.emplace_back(n - 3, n - 1);
  if (t.kind() == AdeKind::E) edges.emplace_back(2, n - 1);
  return edges;
}

Matrix<std::int64_t> cartan_matrix(const DuValType& t) {
  const int n = t.rank();
  Matrix<std::int64_t> c = Matrix<std::int64_t>::Zero(n, n);
  c.diagonal().setConstant(2);
  for (const auto& [a, b] : dynkin_edges(t)) {
    c(a, b) = -1;
    c(b, a) = -1;
  }
  return c;
}

AdeConfig::AdeConfig(std::vector<DuValType> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

void AdeConfig::add(const DuValType& t) {
  entries_.insert(std::lower_bound(entries_.begin(), entries_.end(), t, std::greater<>()), t);
}

void AdeConfig::merge(const AdeConfig& other) {
  std::vector<DuValType> out;
  out.reserve(entries_.size() + other.entries_.size());
  std::merge(entries_.begin(), entries_.end(), other.entries_.begin(), other.entries_.end(),
             std::back_inserter(out), std::greater<>());
  entries_ = std::move(out);
}

int AdeConfig::rank() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0,
                         [](int acc, const DuValType& t) { return acc + t.rank(); });
}

std::string AdeConfig::to_string() const {
  if (entries_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < entries_.size();) {
    std::size_t j = i;
    while (j < entries_.size() && entries_[j] == entries_[i]) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i);
    out += entries_[i].label();
    i = j;
  }
  return out;
}

namespace {

[[noreturn]] void reject(int component_root, const std::string& reason) {
  throw Error(ErrorCode::NotAde, "component containing vertex " + std::to_string(component_root) +
                                     " is not ADE: " + reason);
}

// Walks from `start` away from `from` along a path; returns the number of
// vertices on the arm (including `start`).
int arm_length(const std::vector<std::vector<int>>& adj, int from, int start) {
  int length = 1;
  int prev = from;
  int cur = start;
  while (adj[cur].size() == 2) {
    const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
    ++length;
  }
  return length;
}

}  // namespace

std::vector<DuValType> recognize_ade(const SimpleGraph& g) {
  const int n = g.vertex_count;
  std::vector<std::vector<int>> adj(n);
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(ErrorCode::InvalidInput, "edge endpoint out of range");
    }
    if (a == b) reject(a, "self-loop");
    if (a > b) std::swap(a, b);
    if (!seen.emplace(a, b).second) reject(a, "multiple edge");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  std::vector<int> component(n, -1);
  std::vector<DuValType> result;
  for (int root = 0; root < n; ++root) {
    if (component[root] != -1) continue;
    std::vector<int> members{root};
    component[root] = root;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int w : adj[members[i]]) {
        if (component[w] == -1) {
          component[w] = root;
          members.push_back(w);
        }
      }
    }
    const int size = static_cast<int>(members.size());
    int degree_sum = 0;
    std::vector<int> branch;
    for (int v : members) {
      const int d = static_cast<int>(adj[v].size());
      degree_sum += d;
      if (d >= 4) reject(root, "vertex of degree " + std::to_string(d));
      if (d == 3) branch.push_back(v);
    }
    if (degree_sum / 2 != size - 1) reject(root, "contains a cycle");
    if (branch.empty()) {
      result.push_back(DuValType::A(size));
      continue;
    }
    if (branch.size() > 1) reject(root, "two branch vertices");
    const int center = branch.front();
    std::vector<int> arms;
    for (int w : adj[center]) arms.push_back(arm_length(adj, center, w));
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
      result.push_back(DuValType::D(size));
    } else if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) {
      result.push_back(DuValType::E(size));
    } else {
      reject(root, "arm lengths " + std::to_string(arms[0]) + "," + std::to_string(arms[1]) + "," +
                       std::to_string(arms[2]));
    }
  }
  return result;
}

std::vector<DuValType> types_of_rank(int n) {
  std::vector<DuValType> out;
  if (n >= 1) out.push_back(DuValType::A(n));
  if (n >= 4) out.push_back(DuValType::D(n));
  if (n >= 6 && n <= 8) out.push_back(DuValType::E(n));
  return out;
}

bool recognize_ade_mask(std::span<const std::uint64_t> neighbors, std::uint64_t vertices,
                        std::vector<DuValType>& out) {
  std::uint64_t remaining = vertices;
  while (remaining != 0) {
    std::uint64_t comp = remaining & (~remaining + 1);
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t grown = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
        grown |= neighbors[std::countr_zero(f)];
      }
      grown &= vertices & ~comp;
      comp |= grown;
      frontier = grown;
    }
    remaining &= ~comp;

    const int size = std::popcount(comp);
    int degree_sum = 0;
    int branch = -1;
    for (std::uint64_t c = comp; c != 0; c &= c - 1) {
      const int v = std::countr_zero(c);
      const int d = std::popcount(neighbors[v] & comp);
      degree_sum += d;
      if (d >= 4) return false;
      if (d == 3) {
        if (branch != -1) return false;
        branch = v;
      }
    }
    if (degree_sum / 2 != size - 1) return false;
    if (branch == -1) {
      out.push_back(DuValType::A(size));
      continue;
    }
    int arms[3];
    int k = 0;
    for (std::uint64_t adj = neighbors[branch] & comp; adj != 0; adj &= adj - 1) {
      int prev = branch;
      int cur = std::countr_zero(adj);
      int length = 1;
      for (;;) {
        const std::uint64_t next = neighbors[cur] & comp & ~(std::uint64_t{1} << prev);
        if (std::popcount(next) != 1) break;
        prev = cur;
        cur = std::countr_zero(next);
        ++length;
      }
      arms[k++] = length;
    }
    std::sort(arms, arms + 3);
    if (arms[0] == 1 && arms[1] == 1) {
      out.push_back(DuValType::D(size));
    } else if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) {
      out.push_back(DuValType::E(size));
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace k3orb
