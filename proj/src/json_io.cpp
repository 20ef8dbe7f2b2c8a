#include "chainrr/json_io.hpp"

namespace chainrr {

void to_json(nlohmann::json& j, const ChainContext& ctx) {
  j = nlohmann::json{{"n", ctx.n()}, {"y", ctx.y()}};
}

void to_json(nlohmann::json& j, const Transformation& t) {
  j = nlohmann::json{{"n", t.ctx().n()}, {"y", t.ctx().y()}, {"images", t.images()}};
}

void to_json(nlohmann::json& j, const Partition& p) {
  j = nlohmann::json::array();
  for (const auto& block : p.blocks()) {
    j.push_back(block);
  }
}

void to_json(nlohmann::json& j, const GeneratingSet& g) {
  nlohmann::json elements = nlohmann::json::array();
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    elements.push_back({{"label", g.labels[i]}, {"images", g.elements[i].images()}});
  }
  j = nlohmann::json{{"ctx", g.ctx}, {"elements", std::move(elements)}};
}

void to_json(nlohmann::json& j, const MinRelgenReport& r) {
  j = nlohmann::json{
      {"verdict", r.verdict},
      {"failed_condition", r.failed_condition.empty() ? nlohmann::json() : nlohmann::json(r.failed_condition)},
      {"witness", r.witness.empty() ? nlohmann::json() : nlohmann::json(r.witness)},
  };
}

void to_json(nlohmann::json& j, const Word& w) {
  j = nlohmann::json::array();
  for (const auto& f : w.factors) {
    nlohmann::json factor{{"tag", to_string(f.tag)}, {"images", f.map.images()}};
    if (f.tag == FactorTag::EtaPower) {
      factor["power"] = f.power;
    }
    j.push_back(std::move(factor));
  }
}

void to_json(nlohmann::json& j, const VerifyRow& row) {
  j = nlohmann::json{
      {"n", row.n},
      {"m", row.m},
      {"y", row.y},
      {"check", row.check},
      {"method", row.method},
      {"formula_value", row.formula_value},
      {"brute_value", row.brute_value},
      {"universe_size", row.universe_size},
      {"millis", row.millis},
      {"status", row.status},
      {"note", row.note},
  };
}

void to_json(nlohmann::json& j, const VerificationReport& report) {
  j = nlohmann::json{
      {"scope", report.scope},
      {"n_max", report.n_max},
      {"all_pass", report.all_pass()},
      {"rows", report.rows},
  };
}

}  // namespace chainrr
