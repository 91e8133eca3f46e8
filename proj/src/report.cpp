#include "ugk/report.hpp"

namespace ugk::report {

nlohmann::json envelope(const std::string& command, const std::string& input) {
  return {{"schema", kSchema}, {"command", command}, {"input", input}};
}

nlohmann::json diagnostics(const Ultragraph& g, const std::vector<Diagnostic>& ds) {
  auto out = nlohmann::json::array();
  for (const auto& d : ds) {
    nlohmann::json j{{"kind", to_string(d.kind)}, {"message", d.message}};
    j["vertex"] = d.vertex ? nlohmann::json(*d.vertex) : nlohmann::json(nullptr);
    j["edge"] = d.edge ? nlohmann::json(g.edge_name(*d.edge)) : nlohmann::json(nullptr);
    out.push_back(std::move(j));
  }
  return out;
}

nlohmann::json emitters(const Ultragraph& g) {
  auto out = nlohmann::json::array();
  for (std::size_t k = 0; k < g.mie_sets().size(); ++k)
    out.push_back({{"name", Ultragraph::mie_name(static_cast<int>(k))},
                   {"set", g.mie_sets()[k].to_string()},
                   {"canonical", g.mie_sets()[k].to_json()}});
  return out;
}

nlohmann::json conditions(const std::vector<ConditionReport>& rs) {
  auto out = nlohmann::json::array();
  for (const auto& r : rs) out.push_back(r.to_json());
  return out;
}

nlohmann::json witness(const Ultragraph& g, const Witness& w) {
  auto rows = nlohmann::json::array();
  for (const auto& z : w.element.rows()) rows.push_back(to_string(g, z));
  return {{"word", w.word}, {"rows", rows}, {"notes", w.notes}, {"verification", w.verification}};
}

nlohmann::json diff(const oracle::DiffReport& r) {
  return {{"trials", r.trials}, {"checks", r.checks}, {"divergences", r.divergences},
          {"unwitnessed", r.unwitnessed}, {"samples", r.samples}};
}

}  // namespace ugk::report
