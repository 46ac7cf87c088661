#include "heckenil/report.hpp"

namespace heckenil {

json degree_to_json(const DegreeValue& d) {
  if (d.is_neg_inf()) return json("-inf");
  return json(d.value());
}

DegreeValue degree_from_json(const json& j) {
  if (j.is_string()) return DegreeValue::neg_inf();
  return DegreeValue::of(j.get<int64_t>());
}

std::string rigor_name(CongruenceReport::Rigor r) {
  switch (r) {
    case CongruenceReport::Rigor::ExactBasis: return "EXACT_BASIS";
    case CongruenceReport::Rigor::Truncated: return "TRUNCATED";
    case CongruenceReport::Rigor::Arithmetic: return "ARITHMETIC";
  }
  return "?";
}

json CongruenceReport::to_json() const {
  json j;
  j["family"] = family;
  j["params"] = params;
  j["checked"] = checked;
  j["failures"] = failures;
  j["precision_used"] = precision_used;
  j["rigor"] = rigor_name(rigor);
  j["pass"] = pass();
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

json NilpotencyReport::to_json() const {
  json j;
  j["p"] = p;
  j["ell"] = ell;
  j["space"] = basis_name(BasisTag{space, p});
  j["k"] = k;
  j["index"] = index;
  json traj = json::array();
  for (const auto& d : degree_trajectory) traj.push_back(degree_to_json(d));
  j["trajectory"] = traj;
  return j;
}

}  // namespace heckenil
