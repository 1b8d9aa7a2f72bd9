#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <unordered_map>

#include "k3orb/surface.hpp"

namespace k3orb {

std::string to_decimal(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

namespace {

using u128 = unsigned __int128;

constexpr int kMinCone = 2;
constexpr int kMaxCone = 17;  // 16 nibbles of cone counts

// Additive summary of a partial configuration. Cone counts are packed one
// nibble per order; inv is sum 1/delta scaled by a common denominator.
struct Key {
  std::uint64_t cones = 0;
  int r = 0;
  int points = 0;
  std::int64_t inv = 0;

  bool operator==(const Key&) const = default;
  auto operator<=>(const Key&) const = default;
  Key operator+(const Key& o) const {
    return {cones + o.cones, r + o.r, points + o.points, inv + o.inv};
  }
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::uint64_t h = k.cones * 0x9E3779B97F4A7C15ull;
    h ^= (static_cast<std::uint64_t>(k.r) << 32 | static_cast<std::uint32_t>(k.points)) +
         0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(k.inv) * 0xC2B2AE3D27D4EB4Full + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Witness chains share their prefixes.
struct WitnessNode {
  std::uint16_t type;
  std::uint16_t outcome;
  std::shared_ptr<const WitnessNode> parent;
};
using Witness = std::shared_ptr<const WitnessNode>;

struct Entry {
  Key key;
  u128 count;
  Witness witness;
};

// Multisets of copies of a single fiber type: key delta, count, and the
// outcome indices of one representative multiset.
struct Bundle {
  Key key;
  u128 count;
  std::vector<std::uint16_t> outcomes;
};

struct Accumulator {
  u128 count = 0;
  std::uint64_t seq = ~std::uint64_t{0};
  std::size_t source = 0;
};

u128 checked_mul(u128 a, u128 b) {
  if (a != 0 && b > ~u128{0} / a) throw std::overflow_error("sweep count overflow");
  return a * b;
}

std::vector<int> unpack_cones(std::uint64_t cones) {
  std::vector<int> out;
  for (int m = kMinCone; m <= kMaxCone; ++m) {
    const int c = static_cast<int>((cones >> (4 * (m - kMinCone))) & 0xF);
    out.insert(out.end(), c, m);
  }
  return out;
}

}  // namespace

SweepReport sweep_fibrations(int euler_sum) {
  if (euler_sum < 1 || euler_sum > 60) {
    throw Error(ErrorCode::InvalidInput, "euler sum must lie in [1, 60]");
  }
  SweepReport report;
  report.euler_sum = euler_sum;

  const auto types = fiber_types_up_to(euler_sum);
  std::vector<std::vector<OutcomeClass>> outcomes;
  std::int64_t denom = 1;
  for (const auto& t : types) {
    outcomes.push_back(decoration_outcomes(t));
    for (const auto& o : outcomes.back()) {
      for (const auto& d : o.outcome.removed.entries()) {
        denom = std::lcm(denom, du_val_data(d).delta);
        if (denom > (std::int64_t{1} << 50)) throw std::overflow_error("sweep denominator overflow");
      }
    }
    report.outcome_classes += outcomes.back().size();
  }
  report.fiber_types = types.size();

  std::vector<std::vector<Key>> deltas(types.size());
  for (std::size_t ti = 0; ti < types.size(); ++ti) {
    for (const auto& o : outcomes[ti]) {
      Key k;
      const int m = o.outcome.kept_gcd;
      if (!o.outcome.removed.empty() && m >= kMinCone) {
        if (m > kMaxCone) throw std::overflow_error("cone order out of packing range");
        k.cones = std::uint64_t{1} << (4 * (m - kMinCone));
      }
      k.r = o.outcome.removed.rank();
      k.points = static_cast<int>(o.outcome.removed.size());
      for (const auto& d : o.outcome.removed.entries()) k.inv += denom / du_val_data(d).delta;
      deltas[ti].push_back(k);
    }
  }

  std::vector<std::vector<Entry>> levels(euler_sum + 1);
  levels[0].push_back({Key{}, 1, nullptr});

  for (std::size_t ti = 0; ti < types.size(); ++ti) {
    const int e = types[ti].euler_number();
    const int max_copies = euler_sum / e;

    // bundles[k]: multisets of k outcomes of this type, each outcome pass
    // allowing repeats, so every multiset is produced exactly once.
    std::vector<std::map<Key, Bundle>> bundles(max_copies + 1);
    bundles[0].emplace(Key{}, Bundle{Key{}, 1, {}});
    for (std::size_t oi = 0; oi < deltas[ti].size(); ++oi) {
      for (int k = 0; k < max_copies; ++k) {
        for (const auto& [key, b] : bundles[k]) {
          const Key next = key + deltas[ti][oi];
          auto [it, fresh] = bundles[k + 1].try_emplace(next);
          if (fresh) {
            it->second.key = next;
            it->second.outcomes = b.outcomes;
            it->second.outcomes.push_back(static_cast<std::uint16_t>(oi));
          }
          it->second.count += b.count;
        }
      }
    }

    std::vector<std::vector<Entry>> next(euler_sum + 1);
    for (int target = 0; target <= euler_sum; ++target) {
      std::unordered_map<Key, Accumulator, KeyHash> acc;
      std::uint64_t seq = 0;
      std::vector<std::pair<const Entry*, const Bundle*>> origins;
      for (int k = 0; k <= max_copies && k * e <= target; ++k) {
        const auto& source = levels[target - k * e];
        for (const auto& [bkey, bundle] : bundles[k]) {
          for (const auto& entry : source) {
            Accumulator& a = acc[entry.key + bkey];
            a.count += checked_mul(entry.count, bundle.count);
            if (seq < a.seq) {
              a.seq = seq;
              a.source = origins.size();
              origins.emplace_back(&entry, &bundle);
            }
            ++seq;
          }
        }
      }
      auto& out = next[target];
      out.reserve(acc.size());
      for (const auto& [key, a] : acc) {
        const auto [entry, bundle] = origins[a.source];
        Witness w = entry->witness;
        for (auto oi : bundle->outcomes) {
          w = std::make_shared<const WitnessNode>(
              WitnessNode{static_cast<std::uint16_t>(ti), oi, std::move(w)});
        }
        out.push_back({key, a.count, std::move(w)});
      }
      std::sort(out.begin(), out.end(),
                [](const Entry& x, const Entry& y) { return x.key < y.key; });
    }
    levels = std::move(next);
  }

  bool first = true;
  for (const auto& entry : levels[euler_sum]) {
    const OrbifoldSignature sig(unpack_cones(entry.key.cones));
    const auto cls = classify(sig);
    const Rational e_orb = Rational(euler_sum - entry.key.r - entry.key.points) +
                           Rational(BigInt(entry.key.inv), BigInt(denom));
    report.instances[cls.kind] += entry.count;
    report.states[cls.kind] += 1;
    report.total_instances += entry.count;
    if (first || e_orb < report.min_e_orb) report.min_e_orb = e_orb;
    first = false;

    if (entry.key.r <= 15 && cls.kind != OrbifoldKind::SphericalOrBad) ++report.gate_violations;
    if (cls.kind == OrbifoldKind::Euclidean && (entry.key.r < 16 || e_orb != 0)) {
      ++report.euclidean_violations;
    }
    if (cls.kind == OrbifoldKind::Hyperbolic) ++report.hyperbolic_states;

    if (cls.kind != OrbifoldKind::SphericalOrBad) {
      SweepState state{sig, entry.key.r, e_orb, cls, entry.count, {}};
      for (const WitnessNode* n = entry.witness.get(); n != nullptr; n = n->parent.get()) {
        const auto& cls_rep = outcomes[n->type][n->outcome];
        state.witness.push_back({types[n->type], cls_rep.representative});
      }
      std::reverse(state.witness.begin(), state.witness.end());
      (cls.kind == OrbifoldKind::Euclidean ? report.euclidean : report.hyperbolic)
          .push_back(std::move(state));
    }
  }
  auto order = [](const SweepState& a, const SweepState& b) {
    if (a.signature.orders() != b.signature.orders()) {
      return a.signature.orders() < b.signature.orders();
    }
    if (a.r != b.r) return a.r < b.r;
    return a.e_orb < b.e_orb;
  };
  std::sort(report.euclidean.begin(), report.euclidean.end(), order);
  std::sort(report.hyperbolic.begin(), report.hyperbolic.end(), order);
  return report;
}

}  // namespace k3orb
