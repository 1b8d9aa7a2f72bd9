// Command-line front end: one input file describes one surface; `enumerate`
// is the batch mode.

#include <CLI11.hpp>

#include <iostream>
#include <numeric>
#include <sstream>

#include "k3orb/config_io.hpp"

namespace {

using namespace k3orb;
using io::Json;

constexpr int kOk = 0;
constexpr int kInvalidInput = 1;
constexpr int kExhausted = 2;

struct Options {
  bool json = false;
  std::string file;
  std::string signature;
  std::int64_t bound = 50;
  std::int64_t oracle_limit = 0;
  std::string subset;
  int euler_sum = 24;
  std::size_t max_report = 10;
  std::string label;
  bool info = false;
};

void emit(const Json& j) { std::cout << io::canonical_dump(j); }

std::string signature_text(const OrbifoldSignature& s) { return "(" + s.to_string() + ")"; }

std::string class_text(const OrbifoldClass& c) {
  if (c.kind == OrbifoldKind::SphericalOrBad) {
    return "SphericalOrBad(order " + std::to_string(*c.order) + ")";
  }
  return std::string(to_string(c.kind));
}

int exit_for(const Report& r) {
  const bool inconsistent = (r.gate_consistent && !*r.gate_consistent) ||
                            (r.euclidean_e_orb_zero && !*r.euclidean_e_orb_zero);
  return inconsistent ? kExhausted : kOk;
}

int run_analyze(const Options& o) {
  const auto input = io::parse_config(io::parse_json(io::read_file(o.file), o.file));
  const auto report = analyze(input);
  if (o.json) {
    emit(io::to_json(report));
    return exit_for(report);
  }
  std::cout << "r = " << report.r << "\n"
            << "exceptional = " << report.exceptional.to_string() << "\n"
            << "e_orb = " << to_display_string(report.e_orb) << "\n"
            << "rank gate (r <= 15): " << (report.gate.passes ? "passes" : "fails") << "\n";
  if (report.fibered) {
    std::cout << "multiplicities = (";
    for (std::size_t i = 0; i < report.multiplicities.size(); ++i) {
      std::cout << (i ? "," : "") << report.multiplicities[i];
    }
    std::cout << ")\n"
              << "signature = " << signature_text(report.signature) << "\n"
              << "classification = " << class_text(*report.classification)
              << ", chi = " << to_display_string(*report.chi) << "\n";
    if (report.monodromy && report.monodromy->quotient) {
      std::cout << "coinvariant quotient = " << report.monodromy->quotient->to_string();
      if (report.monodromy->differs_from_simply_connected) {
        std::cout << " (differs from the simply connected expectation)";
      }
      std::cout << "\n";
    }
  }
  std::cout << "verdict = "
            << (report.verdict ? std::string(to_string(report.verdict->kind)) : "undetermined")
            << "\n";
  return exit_for(report);
}

int run_euler(const Options& o) {
  const auto input = io::parse_config(io::parse_json(io::read_file(o.file), o.file));
  AdeConfig config;
  if (const auto* bare = std::get_if<AdeConfig>(&input.data)) {
    config = *bare;
  } else {
    config = validate_k3_fibration(std::get<std::vector<Decoration>>(input.data)).exceptional;
  }
  const Rational e = orbifold_euler_number(config);
  if (o.json) {
    emit({{"exceptional", config.to_string()}, {"r", config.rank()}, {"e_orb", to_fraction_string(e)}});
  } else {
    std::cout << "e_orb = " << to_display_string(e) << " (r = " << config.rank() << ", "
              << config.to_string() << ")\n";
  }
  return kOk;
}

int run_orbifold(const Options& o) {
  const auto sig = OrbifoldSignature::parse(o.signature);
  const auto cls = classify(sig);
  const auto chi = orbifold_euler_characteristic(sig);
  std::optional<std::int64_t> oracle;
  if (o.oracle_limit > 0) oracle = group_order_oracle(sig, o.oracle_limit);
  if (o.json) {
    Json j = {{"signature", io::to_json(sig)},
              {"classification", io::to_json(cls)},
              {"chi", to_fraction_string(chi)}};
    if (o.oracle_limit > 0) j["oracle_order"] = oracle ? Json(*oracle) : Json("Inconclusive");
    emit(j);
  } else {
    std::cout << class_text(cls) << ", chi = " << to_display_string(chi) << "\n";
    if (o.oracle_limit > 0) {
      std::cout << "coset enumeration: "
                << (oracle ? std::to_string(*oracle) : std::string("Inconclusive")) << "\n";
    }
  }
  return kOk;
}

int run_snf(const Options& o) {
  const IntMatrix a = io::parse_matrix(io::read_file(o.file)).cast<BigInt>();
  const auto snf = smith_normal_form<BigInt>(a);
  if (o.json) {
    emit({{"U", io::matrix_to_json<BigInt>(snf.U)},
          {"D", io::matrix_to_json<BigInt>(snf.D)},
          {"V", io::matrix_to_json<BigInt>(snf.V)},
          {"rank", snf.rank()}});
  } else {
    std::cout << "invariant factors:";
    for (const auto& d : snf.diagonal()) std::cout << " " << d;
    std::cout << "\nD =\n" << snf.D << "\nU =\n" << snf.U << "\nV =\n" << snf.V << "\n";
  }
  return kOk;
}

int run_isotropic(const Options& o) {
  const IntegerGram g(io::parse_matrix(io::read_file(o.file)));
  const auto report = meyer_gate(g, o.bound);
  if (o.json) {
    emit(io::to_json(report));
  } else if (report.vector) {
    std::cout << "isotropic vector:";
    for (Eigen::Index i = 0; i < report.vector->size(); ++i) std::cout << " " << (*report.vector)[i];
    std::cout << "\n";
  } else {
    std::cout << "Exhausted within bound " << o.bound;
    if (report.status == MeyerStatus::HypothesesHoldButExhausted) {
      std::cout << " (warning: indefinite of rank >= 5, raise the bound)";
    }
    std::cout << "\n";
  }
  return report.vector ? kOk : kExhausted;
}

int run_k3(const Options& o) {
  const auto g = k3_gram();
  const auto sig = signature(g);
  if (o.json) {
    emit({{"dim", g.dim()},
          {"even", g.is_even()},
          {"det", g.det().str()},
          {"signature", {sig.positive, sig.negative, sig.null}},
          {"gram", io::matrix_to_json<std::int64_t>(g.matrix())}});
  } else {
    std::cout << "dim " << g.dim() << ", " << (g.is_even() ? "even" : "odd") << ", det " << g.det()
              << ", signature (" << sig.positive << "," << sig.negative << ")\n";
  }
  return kOk;
}

int run_kodaira(const Options& o) {
  const auto f = fiber_data(KodairaType::parse(o.label));
  if (o.json) {
    emit(io::to_json(f));
    return kOk;
  }
  std::cout << f.type.label() << ": euler " << f.euler << ", monodromy [[" << f.monodromy(0, 0) << ","
            << f.monodromy(0, 1) << "],[" << f.monodromy(1, 0) << "," << f.monodromy(1, 1) << "]]\n"
            << "components:";
  for (const auto& c : f.components) std::cout << " " << c.id << ":" << c.multiplicity;
  std::cout << "\nedges:";
  for (const auto& e : f.dual_graph) {
    std::cout << " " << f.components[e.a].id << "-" << f.components[e.b].id;
    if (e.weight != 1) std::cout << "(x" << e.weight << ")";
  }
  std::cout << "\n";
  return kOk;
}

std::vector<std::size_t> parse_subset(const std::string& text, std::size_t size) {
  std::vector<std::size_t> out;
  if (text.empty()) {
    out.resize(size);
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
  }
  // "--subset none" selects the empty subset.
  if (text == "none") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 1) {
      throw Error(ErrorCode::InvalidInput, "--subset: bad index '" + item + "'");
    }
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

int run_quotient(const Options& o) {
  const auto rep = io::parse_representation(io::parse_json(io::read_file(o.file), o.file));
  validate_representation(rep);
  const auto subset = parse_subset(o.subset, rep.matrices.size());
  const auto q = coinvariant_quotient(rep, subset);
  // The trivial-orbifold argument expects the full quotient to be trivial.
  const bool full = subset.size() == rep.matrices.size();
  const bool differs = full && !q.is_trivial();
  if (o.json) {
    Json j = io::to_json(q);
    j["subset"] = Json::array();
    for (auto s : subset) j["subset"].push_back(s + 1);
    j["differs_from_simply_connected"] = differs;
    emit(j);
  } else {
    std::cout << "quotient = " << q.to_string();
    if (differs) std::cout << " (differs from the simply connected expectation)";
    std::cout << "\n";
  }
  return kOk;
}

int run_enumerate(const Options& o) {
  const auto report = sweep_fibrations(o.euler_sum);
  if (o.json) {
    emit(io::to_json(report, o.max_report));
  } else {
    std::cout << "euler sum " << report.euler_sum << ": " << report.fiber_types << " fiber types, "
              << report.outcome_classes << " decoration classes, "
              << to_decimal(report.total_instances) << " instances\n";
    for (auto kind : {OrbifoldKind::SphericalOrBad, OrbifoldKind::Euclidean, OrbifoldKind::Hyperbolic}) {
      const auto it = report.instances.find(kind);
      const auto st = report.states.find(kind);
      std::cout << "  " << to_string(kind) << ": "
                << to_decimal(it == report.instances.end() ? 0 : it->second) << " instances, "
                << (st == report.states.end() ? 0 : st->second) << " states\n";
    }
    std::cout << "minimum e_orb = " << to_display_string(report.min_e_orb) << "\n";
    for (std::size_t i = 0; i < report.euclidean.size() && i < o.max_report; ++i) {
      const auto& s = report.euclidean[i];
      std::cout << "  Euclidean " << signature_text(s.signature) << " r = " << s.r
                << " e_orb = " << to_display_string(s.e_orb) << " :";
      for (const auto& d : s.witness) {
        if (d.removed.empty()) continue;
        std::cout << " " << d.fiber.label() << "{";
        for (std::size_t k = 0; k < d.removed.size(); ++k) std::cout << (k ? "," : "") << d.removed[k];
        std::cout << "}";
      }
      std::cout << "\n";
    }
    std::cout << (report.consistent() ? "consistent" : "INCONSISTENT") << ": "
              << report.hyperbolic_states << " hyperbolic, " << report.euclidean_violations
              << " euclidean violations, " << report.gate_violations
              << " rank gate violations\n";
  }
  return report.consistent() ? kOk : kExhausted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental groups of smooth loci of normal K3 surfaces"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit canonical JSON");

  int (*handler)(const Options&) = nullptr;
  auto sub = [&](CLI::App* s, int (*h)(const Options&)) {
    s->fallthrough();
    s->callback([&handler, h] { handler = h; });
    return s;
  };

  auto* analyze_cmd = sub(app.add_subcommand("analyze", "Full pipeline report"), run_analyze);
  analyze_cmd->add_option("file", o.file, "Configuration file")->required();

  auto* euler_cmd = sub(app.add_subcommand("euler", "Orbifold Euler number"), run_euler);
  euler_cmd->add_option("file", o.file, "Configuration file")->required();

  auto* orb_cmd = sub(app.add_subcommand("orbifold", "Classify a base orbifold"), run_orbifold);
  orb_cmd->add_option("--signature", o.signature, "Cone orders, e.g. 2,3,5")->required();
  orb_cmd->add_option("--oracle-limit", o.oracle_limit, "Also run coset enumeration up to N cosets");

  auto* lattice_cmd = app.add_subcommand("lattice", "Integer lattice tools");
  lattice_cmd->require_subcommand(1);
  lattice_cmd->fallthrough();
  auto* snf_cmd = sub(lattice_cmd->add_subcommand("snf", "Smith normal form"), run_snf);
  snf_cmd->add_option("file", o.file, "Matrix file")->required();
  auto* iso_cmd = sub(lattice_cmd->add_subcommand("isotropic", "Bounded isotropic search"), run_isotropic);
  iso_cmd->add_option("file", o.file, "Gram matrix file")->required();
  iso_cmd->add_option("--bound", o.bound, "Coordinate bound")->check(CLI::Range(1, 1'000'000));
  auto* k3_cmd = sub(lattice_cmd->add_subcommand("k3", "The K3 lattice"), run_k3);
  k3_cmd->add_flag("--info", o.info, "Print invariants");

  auto* kod_cmd = app.add_subcommand("kodaira", "Kodaira fiber tables");
  kod_cmd->require_subcommand(1);
  kod_cmd->fallthrough();
  auto* info_cmd = sub(kod_cmd->add_subcommand("info", "Fiber data for a label"), run_kodaira);
  info_cmd->add_option("label", o.label, "Fiber label, e.g. I*0")->required();

  auto* pi1_cmd = app.add_subcommand("pi1", "Monodromy computations");
  pi1_cmd->require_subcommand(1);
  pi1_cmd->fallthrough();
  auto* quot_cmd = sub(pi1_cmd->add_subcommand("quotient", "Z^2 modulo images of I - T_j"), run_quotient);
  quot_cmd->add_option("file", o.file, "Representation file")->required();
  quot_cmd->add_option("--subset", o.subset, "1-based indices, e.g. 1,2,3 (or 'none')");

  auto* enum_cmd = sub(app.add_subcommand("enumerate", "Sweep all decorated fibrations"), run_enumerate);
  enum_cmd->add_option("--euler-sum", o.euler_sum, "Euler number budget")->check(CLI::Range(1, 60));
  enum_cmd->add_option("--max-report", o.max_report, "Maximum listed euclidean/hyperbolic states");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    return handler(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExhausted;
  }
}
