#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "k3orb/dynkin.hpp"
#include "k3orb/kodaira.hpp"
#include "k3orb/numeric.hpp"
#include "k3orb/orbifold.hpp"
#include "k3orb/pi1.hpp"

namespace k3orb {

/// Orbifold Euler number 24 - sum (n_k + 1 - 1/delta_k). Not clamped: a
/// negative value means the configuration cannot live on a K3.
Rational orbifold_euler_number(const AdeConfig& c);

struct RankGate {
  int r;
  bool passes;  // r <= 15
};

/// r <= 15 forces a finite fundamental group. A passing configuration must
/// have orbifold Euler number >= 3/2; std::logic_error otherwise.
RankGate theorem_b_gate(const AdeConfig& c);

struct NormalK3Input {
  std::variant<AdeConfig, std::vector<Decoration>> data;
  std::optional<MonodromyRep> monodromy;
};

enum class VerdictKind { FiniteFundamentalGroup, TorusCover, UnrealizableHyperbolic };

std::string_view to_string(VerdictKind kind);

struct Verdict {
  VerdictKind kind;
  std::optional<std::int64_t> orbifold_order;           // finite case, when known
  std::optional<AbelianGroup> candidate_abelian_quotient;  // trivial-orbifold case
  OrbifoldSignature signature;
};

struct FiberReport {
  std::string kodaira;
  std::vector<std::string> removed;
  int kept_gcd;
  std::string removed_type;
};

struct MonodromyCheck {
  bool attached = false;                // quotient computed (trivial orbifold)
  std::optional<AbelianGroup> quotient;
  bool differs_from_simply_connected = false;
};

struct Report {
  bool fibered = false;
  AdeConfig exceptional;
  int r = 0;
  Rational e_orb;
  RankGate gate{};

  // fibered inputs only
  std::vector<FiberReport> fibers;
  std::vector<int> multiplicities;  // m_j of decorated fibers, input order
  OrbifoldSignature signature;
  std::optional<OrbifoldClass> classification;
  std::optional<Rational> chi;
  std::optional<MonodromyCheck> monodromy;

  std::optional<Verdict> verdict;  // absent for bare inputs with r >= 16
  std::optional<bool> gate_consistent;
  std::optional<bool> euclidean_e_orb_zero;
};

/// Full pipeline. Validation failures propagate as Error; a hyperbolic base
/// orbifold is reported as a verdict, not an error.
Report analyze(const NormalK3Input& input);

/// Result of sweeping every multiset of decorated singular fibers whose
/// Euler numbers add up to `euler_sum`. Decorations are taken up to their
/// outcome class (kept gcd, removed Dynkin type), which is all the
/// classification depends on.
struct SweepState {
  OrbifoldSignature signature;
  int r;
  Rational e_orb;
  OrbifoldClass classification;
  unsigned __int128 count;  // instances realizing this state
  std::vector<Decoration> witness;  // one instance, fibers in type order
};

struct SweepReport {
  int euler_sum = 24;
  std::size_t fiber_types = 0;
  std::size_t outcome_classes = 0;
  std::map<OrbifoldKind, unsigned __int128> instances;  // per classification
  std::map<OrbifoldKind, std::size_t> states;           // distinct (signature, r, e_orb)
  unsigned __int128 total_instances = 0;
  Rational min_e_orb;
  std::size_t hyperbolic_states = 0;
  std::size_t euclidean_violations = 0;  // Euclidean with r < 16 or e_orb != 0
  std::size_t gate_violations = 0;  // r <= 15 but not finite
  std::vector<SweepState> euclidean;     // every Euclidean state, sorted
  std::vector<SweepState> hyperbolic;    // every Hyperbolic state, sorted

  bool consistent() const {
    return hyperbolic_states == 0 && euclidean_violations == 0 && gate_violations == 0;
  }
};

SweepReport sweep_fibrations(int euler_sum = 24);

std::string to_decimal(unsigned __int128 v);

}  // namespace k3orb
