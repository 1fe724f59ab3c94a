#include "monofol/json_io.hpp"

#include <fstream>

#include "monofol/errors.hpp"

namespace monofol {

json rat_to_json(const Rat& q) { return rat_to_string(q); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw ParseError("expected a rational (\"p/q\" string or integer), got " + j.dump());
}

json subspace_to_json(const Subspace& v) {
  json basis = json::array();
  for (const Vec& row : v.basis_rows()) {
    json r = json::array();
    for (const Rat& q : row) r.push_back(rat_to_json(q));
    basis.push_back(std::move(r));
  }
  return json{{"ambient", v.ambient()}, {"basis", std::move(basis)}};
}

json presentation_to_json(const Presentation& p) {
  json divisor = json::array();
  for (int i : p.divisor) divisor.push_back(i + 1);
  json basis = json::array();
  for (const Vec& row : p.subspace.basis_rows()) {
    json r = json::array();
    for (const Rat& q : row) r.push_back(rat_to_json(q));
    basis.push_back(std::move(r));
  }
  return json{{"n", p.n},
              {"divisor", std::move(divisor)},
              {"basis", std::move(basis)},
              {"history", p.history}};
}

json change_to_json(const MonomialChange& change) {
  json shifts = json::array();
  for (const auto& [i, value] : change.shifts)
    shifts.push_back(json{{"index", i + 1}, {"value", rat_to_json(value)}});
  json multipliers = json::array();
  for (const auto& [k, exps] : change.multipliers) {
    json entry = json::array();
    for (const auto& [i, mu] : exps)
      entry.push_back(json{{"index", i + 1}, {"value", rat_to_json(mu)}});
    multipliers.push_back(json{{"index", k + 1}, {"exponents", std::move(entry)}});
  }
  return json{{"shifts", std::move(shifts)}, {"multipliers", std::move(multipliers)}};
}

json localize_to_json(const LocalizeResult& result) {
  json out{{"presentation", presentation_to_json(result.presentation)}};
  out["change"] = result.change ? change_to_json(*result.change) : json(nullptr);
  return out;
}

json atlas_to_json(const std::vector<std::pair<int, Presentation>>& charts) {
  json out = json::array();
  for (const auto& [j, p] : charts)
    out.push_back(json{{"chart", j + 1}, {"presentation", presentation_to_json(p)}});
  return out;
}

json validation_to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const ValidationIssue& issue : report.issues)
    violations.push_back(
        json{{"code", validation_code_name(issue.code)}, {"message", issue.message}});
  return json{{"ok", report.ok()}, {"violations", std::move(violations)}};
}

json verify_to_json(const VerifyReport& report) {
  json checks = json::array();
  for (const CheckResult& c : report.checks)
    checks.push_back(json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return json{{"ok", report.ok()}, {"checks", std::move(checks)}};
}

json field_to_json(const VectorField& w) {
  json out = json::array();
  for (int i = 0; i < w.vars(); ++i) {
    for (const auto& [e, c] : w.component(i).terms()) {
      json exps = json::array();
      for (std::int64_t k : e) exps.push_back(k);
      out.push_back(json{
          {"coeff", rat_to_json(c)}, {"exponents", std::move(exps)}, {"component", i + 1}});
    }
  }
  return out;
}

LoadedPresentation presentation_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("presentation must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("presentation needs an integer field \"n\"");
  long n_raw = j["n"].get<long>();
  if (n_raw < 0 || n_raw > 64) throw ParseError("n out of supported range 0..64");
  int n = static_cast<int>(n_raw);

  IndexSet divisor;
  if (j.contains("divisor")) {
    if (!j["divisor"].is_array()) throw ParseError("\"divisor\" must be an array");
    for (const json& e : j["divisor"]) {
      if (!e.is_number_integer()) throw ParseError("divisor entries must be integers");
      divisor.insert(static_cast<int>(e.get<long>()) - 1);
    }
  }

  std::vector<Vec> rows;
  if (j.contains("basis")) {
    if (!j["basis"].is_array()) throw ParseError("\"basis\" must be an array of rows");
    for (const json& r : j["basis"]) {
      if (!r.is_array() || static_cast<int>(r.size()) != n)
        throw ParseError("basis rows must have length n");
      Vec row;
      for (const json& e : r) row.push_back(rat_from_json(e));
      rows.push_back(std::move(row));
    }
  }

  std::vector<std::string> history;
  if (j.contains("history")) {
    if (!j["history"].is_array()) throw ParseError("\"history\" must be an array of strings");
    for (const json& e : j["history"]) {
      if (!e.is_string()) throw ParseError("history entries must be strings");
      history.push_back(e.get<std::string>());
    }
  }

  LoadedPresentation loaded;
  loaded.value.n = n;
  loaded.value.divisor = std::move(divisor);
  loaded.value.subspace = Subspace::from_rows(n, rows);
  loaded.value.history = std::move(history);

  if (loaded.value.subspace.basis().row_list() != rows)
    loaded.issues.add(ValidationCode::NonCanonicalBasis,
                      "basis rows are not the canonical reduced echelon basis");
  return loaded;
}

LoadedPresentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return presentation_from_json(j);
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace monofol
