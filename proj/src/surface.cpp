#include "k3orb/surface.hpp"

#include <stdexcept>

namespace k3orb {

Rational orbifold_euler_number(const AdeConfig& c) {
  Rational e(24);
  for (const auto& t : c.entries()) e -= local_euler_contribution(t);
  return e;
}

RankGate theorem_b_gate(const AdeConfig& c) {
  RankGate gate{c.rank(), c.rank() <= 15};
  if (gate.passes && orbifold_euler_number(c) < make_rational(3, 2)) {
    throw std::logic_error("configuration " + c.to_string() +
                           " has r <= 15 but orbifold Euler number below 3/2");
  }
  return gate;
}

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::FiniteFundamentalGroup: return "FiniteFundamentalGroup";
    case VerdictKind::TorusCover: return "TorusCover";
    case VerdictKind::UnrealizableHyperbolic: return "UnrealizableHyperbolic";
  }
  return "";
}

namespace {

Report analyze_bare(const AdeConfig& config) {
  Report report;
  report.exceptional = config;
  report.r = config.rank();
  report.e_orb = orbifold_euler_number(config);
  report.gate = theorem_b_gate(config);
  if (report.gate.passes) {
    report.verdict = Verdict{VerdictKind::FiniteFundamentalGroup, std::nullopt, std::nullopt, {}};
    report.gate_consistent = true;
  }
  return report;
}

MonodromyCheck check_monodromy(const MonodromyRep& given, const std::vector<Decoration>& fibers,
                               const OrbifoldClass& cls) {
  if (given.matrices.size() != fibers.size()) {
    throw Error(ErrorCode::InvalidInput,
                "monodromy has " + std::to_string(given.matrices.size()) + " matrices for " +
                    std::to_string(fibers.size()) + " fibers");
  }
  MonodromyRep rep = given;
  rep.declared.resize(rep.matrices.size());
  for (std::size_t j = 0; j < fibers.size(); ++j) {
    if (!rep.declared[j]) {
      rep.declared[j] = fibers[j].fiber;
    } else if (*rep.declared[j] != fibers[j].fiber) {
      throw Error(ErrorCode::ClassMismatch,
                  "monodromy " + std::to_string(j + 1) + " is declared " +
                      rep.declared[j]->label() + " but fiber " + std::to_string(j + 1) + " is " +
                      fibers[j].fiber.label());
    }
  }
  validate_representation(rep);

  MonodromyCheck check;
  if (cls.kind == OrbifoldKind::SphericalOrBad && cls.order == 1) {
    check.attached = true;
    check.quotient = coinvariant_quotient(rep);
    check.differs_from_simply_connected = !check.quotient->is_trivial();
  }
  return check;
}

Report analyze_fibered(const std::vector<Decoration>& fibers,
                       const std::optional<MonodromyRep>& monodromy) {
  const auto validated = validate_k3_fibration(fibers);
  Report report = analyze_bare(validated.exceptional);
  report.fibered = true;
  report.verdict.reset();
  for (std::size_t j = 0; j < fibers.size(); ++j) {
    report.fibers.push_back({fibers[j].fiber.label(), fibers[j].removed,
                             validated.outcomes[j].kept_gcd,
                             validated.outcomes[j].removed.to_string()});
  }
  report.multiplicities = validated.multiplicities;
  report.signature = OrbifoldSignature(validated.multiplicities);
  const auto cls = classify(report.signature);
  report.classification = cls;
  report.chi = orbifold_euler_characteristic(report.signature);

  Verdict verdict{VerdictKind::FiniteFundamentalGroup, std::nullopt, std::nullopt,
                  report.signature};
  switch (cls.kind) {
    case OrbifoldKind::SphericalOrBad: verdict.orbifold_order = cls.order; break;
    case OrbifoldKind::Euclidean: verdict.kind = VerdictKind::TorusCover; break;
    case OrbifoldKind::Hyperbolic: verdict.kind = VerdictKind::UnrealizableHyperbolic; break;
  }
  if (monodromy) {
    report.monodromy = check_monodromy(*monodromy, fibers, cls);
    if (report.monodromy->attached) verdict.candidate_abelian_quotient = report.monodromy->quotient;
  }
  report.verdict = verdict;

  if (report.gate.passes) {
    report.gate_consistent = verdict.kind == VerdictKind::FiniteFundamentalGroup;
  }
  if (cls.kind == OrbifoldKind::Euclidean) report.euclidean_e_orb_zero = report.e_orb == 0;
  return report;
}

}  // namespace

Report analyze(const NormalK3Input& input) {
  if (const auto* config = std::get_if<AdeConfig>(&input.data)) {
    if (input.monodromy) {
      throw Error(ErrorCode::InvalidInput, "monodromy requires a fibration input");
    }
    return analyze_bare(*config);
  }
  return analyze_fibered(std::get<std::vector<Decoration>>(input.data), input.monodromy);
}

}  // namespace k3orb
