#include "k3orb/config_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace k3orb::io {

namespace {

[[noreturn]] void fail(std::string_view field, const std::string& message) {
  throw Error(ErrorCode::InvalidInput, std::string(field) + ": " + message);
}

// Re-throws library errors with the JSON field prefixed.
template <typename F>
auto at_field(std::string_view field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), std::string(field) + ": " + e.what());
  }
}

void require_keys(const Json& j, std::string_view field, std::set<std::string> allowed) {
  if (!j.is_object()) fail(field, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) fail(field, "unknown key '" + key + "'");
  }
}

std::int64_t get_integer(const Json& j, std::string_view field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  return j.get<std::int64_t>();
}

Mat2 get_mat2(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) fail(field, "expected a 2x2 integer matrix");
  Mat2 m;
  for (int i = 0; i < 2; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != 2) fail(field, "expected a 2x2 integer matrix");
    for (int k = 0; k < 2; ++k) {
      m(i, k) = get_integer(row[k], field + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
  }
  return m;
}

std::string rational(const Rational& q) { return to_fraction_string(q); }

Json json_of(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Json json_of(std::int64_t v) { return v; }

Json vector_json(const Vector<std::int64_t>& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(what, std::string("malformed JSON (") + e.what() + ")");
  }
}

MonodromyRep parse_representation(const Json& j, std::string_view field) {
  if (!j.is_array()) fail(field, "expected a list of 2x2 matrices");
  MonodromyRep rep;
  bool any_declared = false;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string item = std::string(field) + "[" + std::to_string(i) + "]";
    const Json& entry = j[i];
    if (entry.is_object()) {
      require_keys(entry, item, {"matrix", "declared"});
      if (!entry.contains("matrix")) fail(item, "missing key 'matrix'");
      rep.matrices.push_back(get_mat2(entry["matrix"], item + ".matrix"));
      if (entry.contains("declared")) {
        if (!entry["declared"].is_string()) fail(item + ".declared", "expected a Kodaira label");
        rep.declared.push_back(at_field(item + ".declared", [&] {
          return KodairaType::parse(entry["declared"].get<std::string>());
        }));
        any_declared = true;
      } else {
        rep.declared.emplace_back();
      }
    } else {
      rep.matrices.push_back(get_mat2(entry, item));
      rep.declared.emplace_back();
    }
  }
  if (!any_declared) rep.declared.clear();
  return rep;
}

NormalK3Input parse_config(const Json& j) {
  require_keys(j, "config", {"singularities", "fibration", "monodromy"});
  const bool bare = j.contains("singularities");
  const bool fibered = j.contains("fibration");
  if (bare == fibered) fail("config", "exactly one of 'singularities' or 'fibration' is required");

  NormalK3Input input;
  if (bare) {
    const Json& list = j["singularities"];
    if (!list.is_array()) fail("singularities", "expected a list of Dynkin labels");
    std::vector<DuValType> entries;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string field = "singularities[" + std::to_string(i) + "]";
      if (!list[i].is_string()) fail(field, "expected a Dynkin label");
      entries.push_back(at_field(field, [&] { return DuValType::parse(list[i].get<std::string>()); }));
    }
    input.data = AdeConfig(std::move(entries));
  } else {
    const Json& fib = j["fibration"];
    require_keys(fib, "fibration", {"fibers"});
    if (!fib.contains("fibers") || !fib["fibers"].is_array()) {
      fail("fibration.fibers", "expected a list of fibers");
    }
    std::vector<Decoration> fibers;
    const Json& list = fib["fibers"];
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string field = "fibration.fibers[" + std::to_string(i) + "]";
      const Json& f = list[i];
      require_keys(f, field, {"kodaira", "n", "removed"});
      if (!f.contains("kodaira") || !f["kodaira"].is_string()) {
        fail(field + ".kodaira", "expected a Kodaira label");
      }
      const std::string label = f["kodaira"].get<std::string>();
      std::optional<std::int64_t> n;
      if (f.contains("n")) n = get_integer(f["n"], field + ".n");
      Decoration d{at_field(field + ".kodaira",
                            [&] {
                              return n ? KodairaType::parse(label, static_cast<int>(*n))
                                       : KodairaType::parse(label);
                            }),
                   {}};
      if (f.contains("removed")) {
        const Json& removed = f["removed"];
        if (!removed.is_array()) fail(field + ".removed", "expected a list of component ids");
        for (std::size_t k = 0; k < removed.size(); ++k) {
          if (!removed[k].is_string()) {
            fail(field + ".removed[" + std::to_string(k) + "]", "expected a component id");
          }
          d.removed.push_back(removed[k].get<std::string>());
        }
      }
      at_field(field + ".removed", [&] { return validate_decoration(d); });
      fibers.push_back(std::move(d));
    }
    input.data = std::move(fibers);
  }
  if (j.contains("monodromy")) input.monodromy = parse_representation(j["monodromy"]);
  return input;
}

Matrix<std::int64_t> parse_matrix(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) return Matrix<std::int64_t>(0, 0);
  std::vector<std::vector<std::int64_t>> rows;
  if (text[start] == '[') {
    const Json j = parse_json(text, "matrix");
    if (!j.is_array()) fail("matrix", "expected an array of rows");
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string field = "matrix[" + std::to_string(i) + "]";
      if (!j[i].is_array()) fail(field, "expected an array of integers");
      rows.emplace_back();
      for (std::size_t k = 0; k < j[i].size(); ++k) {
        rows.back().push_back(get_integer(j[i][k], field + "[" + std::to_string(k) + "]"));
      }
    }
  } else {
    std::istringstream lines{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      std::istringstream cells(line);
      std::vector<std::int64_t> row;
      std::string cell;
      while (cells >> cell) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
          v = std::stoll(cell, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != cell.size() || used == 0) {
          fail("matrix line " + std::to_string(lineno), "'" + cell + "' is not an integer");
        }
        row.push_back(v);
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto cols = n == 0 ? 0 : static_cast<Eigen::Index>(rows.front().size());
  Matrix<std::int64_t> m(n, cols);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != cols) {
      fail("matrix row " + std::to_string(i + 1), "row lengths differ");
    }
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = rows[i][k];
  }
  return m;
}

template <typename Scalar>
Json matrix_to_json(const Matrix<Scalar>& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(json_of(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

template Json matrix_to_json<std::int64_t>(const Matrix<std::int64_t>&);
template Json matrix_to_json<BigInt>(const Matrix<BigInt>&);

Json to_json(const AbelianGroup& g) {
  Json factors = Json::array();
  for (const auto& d : g.invariant_factors) factors.push_back(json_of(d));
  return {{"invariant_factors", factors}, {"group", g.to_string()}, {"trivial", g.is_trivial()}};
}

Json to_json(const OrbifoldSignature& s) { return s.orders(); }

Json to_json(const OrbifoldClass& c) {
  Json j = {{"kind", std::string(to_string(c.kind))}};
  j["order"] = c.order ? Json(*c.order) : Json(nullptr);
  return j;
}

Json to_json(const MeyerReport& r) {
  Json j;
  j["signature"] = {r.sig.positive, r.sig.negative, r.sig.null};
  j["hypotheses_hold"] = r.hypotheses_hold;
  switch (r.status) {
    case MeyerStatus::Found: j["status"] = "Found"; break;
    case MeyerStatus::HypothesesHoldButExhausted: j["status"] = "HypothesesHoldButExhausted"; break;
    case MeyerStatus::Exhausted: j["status"] = "Exhausted"; break;
  }
  j["vector"] = r.vector ? vector_json(*r.vector) : Json(nullptr);
  return j;
}

Json to_json(const FiberData& f) {
  Json comps = Json::array();
  for (const auto& c : f.components) comps.push_back({{"id", c.id}, {"multiplicity", c.multiplicity}});
  Json edges = Json::array();
  for (const auto& e : f.dual_graph) {
    edges.push_back({{"a", f.components[e.a].id}, {"b", f.components[e.b].id}, {"weight", e.weight}});
  }
  return {{"label", f.type.label()},
          {"euler", f.euler},
          {"components", comps},
          {"dual_graph", edges},
          {"monodromy", matrix_to_json<std::int64_t>(f.monodromy)}};
}

Json to_json(const Report& report) {
  Json j;
  j["input"] = report.fibered ? "fibration" : "singularities";
  j["r"] = report.r;
  j["e_orb"] = rational(report.e_orb);
  j["exceptional"] = report.exceptional.to_string();
  j["rank_gate"] = {{"r", report.gate.r}, {"passes", report.gate.passes}};
  j["verdict"] = report.verdict ? Json(std::string(to_string(report.verdict->kind))) : Json(nullptr);

  Json checks;
  checks["gate_consistent"] =
      report.gate_consistent ? Json(*report.gate_consistent) : Json(nullptr);
  checks["euclidean_e_orb_zero"] =
      report.euclidean_e_orb_zero ? Json(*report.euclidean_e_orb_zero) : Json(nullptr);
  j["checks"] = checks;

  if (report.verdict) {
    Json v;
    v["orbifold_order"] =
        report.verdict->orbifold_order ? Json(*report.verdict->orbifold_order) : Json(nullptr);
    v["candidate_abelian_quotient"] = report.verdict->candidate_abelian_quotient
                                          ? to_json(*report.verdict->candidate_abelian_quotient)
                                          : Json(nullptr);
    v["signature"] = to_json(report.verdict->signature);
    j["verdict_details"] = v;
  }

  if (report.fibered) {
    Json fibers = Json::array();
    for (const auto& f : report.fibers) {
      fibers.push_back({{"kodaira", f.kodaira},
                        {"removed", f.removed},
                        {"m", f.kept_gcd},
                        {"removed_type", f.removed_type}});
    }
    j["fibers"] = fibers;
    j["multiplicities"] = report.multiplicities;
    j["signature"] = to_json(report.signature);
    j["classification"] = to_json(*report.classification);
    j["chi"] = rational(*report.chi);
    if (report.monodromy) {
      Json m;
      m["validated"] = true;
      m["quotient_attached"] = report.monodromy->attached;
      m["quotient"] = report.monodromy->quotient ? to_json(*report.monodromy->quotient) : Json(nullptr);
      m["differs_from_simply_connected"] = report.monodromy->differs_from_simply_connected;
      j["monodromy"] = m;
    }
  }
  return j;
}

Json to_json(const SweepReport& report, std::size_t max_report) {
  Json j;
  j["euler_sum"] = report.euler_sum;
  j["fiber_types"] = report.fiber_types;
  j["outcome_classes"] = report.outcome_classes;
  j["total_instances"] = to_decimal(report.total_instances);
  Json instances, states;
  for (auto kind : {OrbifoldKind::SphericalOrBad, OrbifoldKind::Euclidean, OrbifoldKind::Hyperbolic}) {
    const std::string name(to_string(kind));
    const auto it = report.instances.find(kind);
    instances[name] = to_decimal(it == report.instances.end() ? 0 : it->second);
    const auto st = report.states.find(kind);
    states[name] = st == report.states.end() ? 0 : st->second;
  }
  j["instances"] = instances;
  j["states"] = states;
  j["min_e_orb"] = rational(report.min_e_orb);
  j["violations"] = {{"hyperbolic", report.hyperbolic_states},
                     {"euclidean", report.euclidean_violations},
                     {"rank_gate", report.gate_violations}};
  j["consistent"] = report.consistent();

  auto list = [&](const std::vector<SweepState>& states_list) {
    Json out = Json::array();
    for (std::size_t i = 0; i < states_list.size() && i < max_report; ++i) {
      const auto& s = states_list[i];
      Json witness = Json::array();
      for (const auto& d : s.witness) {
        witness.push_back({{"kodaira", d.fiber.label()}, {"removed", d.removed}});
      }
      out.push_back({{"signature", to_json(s.signature)},
                     {"r", s.r},
                     {"e_orb", rational(s.e_orb)},
                     {"instances", to_decimal(s.count)},
                     {"witness", witness}});
    }
    return out;
  };
  j["euclidean"] = list(report.euclidean);
  j["hyperbolic"] = list(report.hyperbolic);
  return j;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace k3orb::io
