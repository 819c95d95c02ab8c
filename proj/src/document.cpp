#include "galog/document.hpp"

#include <cstdio>

#include <json.hpp>

#include "galog/expr.hpp"

namespace galog {

namespace {

std::string short_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

nlohmann::json coeff_array(const Multivector& m) {
  nlohmann::json a = nlohmann::json::array();
  for (double v : m.c) a.push_back(v);
  return a;
}

nlohmann::json branch_json(const BranchParams& b) {
  nlohmann::json j;
  j["c1p"] = b.c1_plus;
  j["c1m"] = b.c1_minus;
  j["c2p"] = b.c2_plus;
  j["c2m"] = b.c2_minus;
  if (b.free_vector)
    j["free_vec"] = {(*b.free_vector)[0], (*b.free_vector)[1], (*b.free_vector)[2]};
  else
    j["free_vec"] = nullptr;
  if (b.free_bivector)
    j["free_biv"] = {(*b.free_bivector)[0], (*b.free_bivector)[1], (*b.free_bivector)[2]};
  else
    j["free_biv"] = nullptr;
  return j;
}

nlohmann::json family_json(const FreeFamily& f) {
  nlohmann::json j;
  j["discrete"] = nlohmann::json::array();
  for (const auto& g : f.discrete)
    j["discrete"].push_back({{"constant", g.constant}, {"generator", coeff_array(g.generator)}});
  j["continuous"] = nlohmann::json::array();
  for (const auto& s : f.continuous)
    j["continuous"].push_back(
        {{"kind", s.kind == ContinuousSlot::Kind::unit_vector ? "unit_vector" : "unit_bivector"},
         {"constant", s.constant},
         {"factor", coeff_array(s.factor)}});
  return j;
}

}  // namespace

ResultDocument ResultDocument::from_log(Signature sig, std::string op, const Multivector& input,
                                        const BranchParams& b, const LogResult& r) {
  ResultDocument d;
  d.algebra = sig;
  d.op = std::move(op);
  d.input = input;
  d.branch = b;
  d.exists = r.exists;
  if (r.exists) d.value = r.value;
  else d.value = ExtendedMultivector(Multivector(sig));
  d.case_row = to_string(r.row);
  d.family = r.family;
  d.reason = r.reason;
  return d;
}

ResultDocument ResultDocument::from_value(Signature sig, std::string op,
                                          const Multivector& input, const BranchParams& b,
                                          const Multivector& v) {
  ResultDocument d;
  d.algebra = sig;
  d.op = std::move(op);
  d.input = input;
  d.branch = b;
  d.exists = true;
  d.value = ExtendedMultivector(v);
  return d;
}

std::string ResultDocument::to_json() const {
  nlohmann::json j;
  j["algebra"] = to_string(algebra);
  j["op"] = op;
  j["input"] = coeff_array(input);
  j["branch"] = branch_json(branch);
  nlohmann::json outcome;
  outcome["exists"] = exists;
  outcome["coeffs"] = coeff_array(value.fin);
  outcome["lambda_coeffs"] = coeff_array(value.lam);
  outcome["case_row"] = case_row;
  outcome["free_family"] = family_json(family);
  if (!reason.empty()) outcome["reason"] = reason;
  if (converged) outcome["converged"] = *converged;
  if (terms) outcome["terms"] = *terms;
  j["outcome"] = outcome;
  if (residual) j["residual"] = *residual;
  return j.dump();
}

std::string ResultDocument::to_text() const {
  std::string s;
  s += op + " [" + to_string(algebra) + "] " + format_mv(input) + "\n";
  if (!exists) {
    s += "  result: does not exist (" + reason + ")\n";
    if (!case_row.empty()) s += "  case row: " + case_row + "\n";
    return s;
  }
  s += "  result: " + format_extended(value) + "\n";
  if (!case_row.empty()) s += "  case row: " + case_row + "\n";
  for (const auto& g : family.discrete)
    s += "  free " + g.constant + ": " + format_mv(g.generator) + "\n";
  for (const auto& c : family.continuous)
    s += std::string("  free ") +
         (c.kind == ContinuousSlot::Kind::unit_vector ? "unit vector" : "unit bivector") +
         " slot on " + c.constant + ": factor " + format_mv(c.factor) + "\n";
  if (converged) s += std::string("  converged: ") + (*converged ? "yes" : "no") + "\n";
  if (terms) s += "  terms: " + std::to_string(*terms) + "\n";
  if (residual) s += "  roundtrip residual: " + short_double(*residual) + "\n";
  return s;
}

int ResultDocument::exit_code() const {
  if (!exists) return kExitNonExistent;
  if (value.has_lambda()) return kExitSingular;
  return kExitOk;
}

}  // namespace galog
