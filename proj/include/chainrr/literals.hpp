#pragma once

// Text forms used by the CLI and reports: context literals like
// "n=4 Y=2,3", image lists like "[2,3,2,2]", and partition literals like
// "1,4|2,3" (blocks by minimum, elements ascending).

#include <string>
#include <vector>

#include "chainrr/chain.hpp"
#include "chainrr/partition.hpp"

namespace chainrr {

ChainContext parse_chain_context(const std::string& text);
std::string format_chain_context(const ChainContext& ctx);

std::vector<int> parse_image_list(const std::string& text);
std::string format_image_list(const std::vector<int>& images);
Transformation parse_transformation(const ChainContext& ctx, const std::string& text);
std::string format_transformation(const Transformation& t);

Partition parse_partition(int n, const std::string& text);
std::string format_partition(const Partition& p);

std::string format_y(const std::vector<int>& y);  // "2,3"

}  // namespace chainrr
