#pragma once

// JSON forms for the CLI and reports.  Field names are part of the external
// interface: contexts serialize as {"n": ..., "y": [...]}, transformations
// carry "images", words are arrays of {"tag", "images"[, "power"]}.

#include <json.hpp>

#include "chainrr/chain.hpp"
#include "chainrr/factorize.hpp"
#include "chainrr/generators.hpp"
#include "chainrr/partition.hpp"
#include "chainrr/verify.hpp"

namespace chainrr {

void to_json(nlohmann::json& j, const ChainContext& ctx);
void to_json(nlohmann::json& j, const Transformation& t);
void to_json(nlohmann::json& j, const Partition& p);
void to_json(nlohmann::json& j, const GeneratingSet& g);
void to_json(nlohmann::json& j, const MinRelgenReport& r);
void to_json(nlohmann::json& j, const Word& w);
void to_json(nlohmann::json& j, const VerifyRow& row);
void to_json(nlohmann::json& j, const VerificationReport& report);

}  // namespace chainrr
