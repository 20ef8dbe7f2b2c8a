#include "chainrr/literals.hpp"

#include <cctype>
#include <sstream>

namespace chainrr {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

int parse_int(const std::string& s, const std::string& what) {
  const std::string t = strip(s);
  if (t.empty()) {
    fail(ErrorKind::ParseError, "empty " + what);
  }
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(t, &pos);
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "bad " + what + " '" + t + "'");
  }
  if (pos != t.size()) {
    fail(ErrorKind::ParseError, "trailing characters in " + what + " '" + t + "'");
  }
  return value;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(strip(s));
  while (std::getline(in, item, ',')) {
    out.push_back(parse_int(item, what));
  }
  if (out.empty()) {
    fail(ErrorKind::ParseError, "empty " + what + " list");
  }
  return out;
}

}  // namespace

ChainContext parse_chain_context(const std::string& text) {
  // Expected shape: n=<int> Y=<comma list>
  const std::string t = strip(text);
  auto n_pos = t.find("n=");
  auto y_pos = t.find("Y=");
  if (y_pos == std::string::npos) {
    y_pos = t.find("y=");
  }
  if (n_pos != 0 || y_pos == std::string::npos) {
    fail(ErrorKind::ParseError, "context literal must look like 'n=4 Y=2,3', got '" + t + "'");
  }
  int n = parse_int(t.substr(2, y_pos - 2), "chain size");
  auto y = parse_int_list(t.substr(y_pos + 2), "Y value");
  return ChainContext(n, std::move(y));
}

std::string format_chain_context(const ChainContext& ctx) {
  return "n=" + std::to_string(ctx.n()) + " Y=" + format_y(ctx.y());
}

std::vector<int> parse_image_list(const std::string& text) {
  const std::string t = strip(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    fail(ErrorKind::ParseError, "image list must look like '[2,3,2,2]', got '" + t + "'");
  }
  return parse_int_list(t.substr(1, t.size() - 2), "image");
}

std::string format_image_list(const std::vector<int>& images) {
  std::string out = "[";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images[i]);
  }
  return out + "]";
}

Transformation parse_transformation(const ChainContext& ctx, const std::string& text) {
  return Transformation(ctx, parse_image_list(text));
}

std::string format_transformation(const Transformation& t) {
  return format_image_list(t.images());
}

Partition parse_partition(int n, const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::string block;
  std::istringstream in(strip(text));
  while (std::getline(in, block, '|')) {
    blocks.push_back(parse_int_list(block, "partition element"));
  }
  if (blocks.empty()) {
    fail(ErrorKind::ParseError, "empty partition literal");
  }
  return Partition::from_blocks(n, blocks);
}

std::string format_partition(const Partition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    if (!out.empty()) out += '|';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(block[i]);
    }
  }
  return out;
}

std::string format_y(const std::vector<int>& y) {
  std::string out;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(y[i]);
  }
  return out;
}

}  // namespace chainrr
