#include "hspec.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace recurselab {

std::int64_t HSpec::lookup(std::int64_t x, std::int64_t y, std::int64_t z) const {
  auto it = entries.find(Triple{x, y, z});
  if (it != entries.end()) return it->second;
  switch (def) {
    case Default::Zero:
      return 0;
    case Default::One:
      return 1;
    case Default::ParityX:
      // 1 iff x even; note (x % 2) is -1 for negative odd x
      return x % 2 == 0 ? 1 : 0;
    case Default::Poly2xy:
      return 2 * x * y - 4 * x + y + z - 1;
    case Default::BoundedContrived: {
      if (x == 1 && y == 1 && z == 4) return 4;
      if (x == 3 && y == 3 && z == 3) return 2;
      if (x == 2 && y == 3) return 1;
      std::int64_t m = std::max({x, y, z});
      if (m >= 3) return 3;
      return m;
    }
    case Default::TakY:
      return y;
    case Default::GabrielZ:
      return z;
    case Default::IdX:
      return x;
  }
  throw std::logic_error("HSpec: unknown default rule");
}

namespace {
constexpr std::pair<HSpec::Default, const char*> kNames[] = {
    {HSpec::Default::Zero, "zero"},
    {HSpec::Default::One, "one"},
    {HSpec::Default::ParityX, "parity-x"},
    {HSpec::Default::Poly2xy, "poly2xy"},
    {HSpec::Default::BoundedContrived, "bounded-contrived"},
    {HSpec::Default::TakY, "tak-y"},
    {HSpec::Default::GabrielZ, "gabriel-z"},
    {HSpec::Default::IdX, "id-x"},
};
}  // namespace

const char* HSpec::default_name(Default d) {
  for (auto [k, name] : kNames)
    if (k == d) return name;
  return "?";
}

HSpec::Default HSpec::parse_default(const std::string& name) {
  for (auto [k, n] : kNames)
    if (name == n) return k;
  throw std::invalid_argument("HSpec: unknown default rule '" + name + "'");
}

HSpec HSpec::parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("HSpec: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("default"))
    throw std::invalid_argument("HSpec: expected an object with a 'default' field");
  HSpec h;
  h.def = parse_default(j.at("default").get<std::string>());
  if (j.contains("entries")) {
    const auto& rows = j.at("entries");
    if (!rows.is_array())
      throw std::invalid_argument("HSpec: 'entries' must be a list");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      if (!row.is_array() || row.size() != 4 ||
          !std::all_of(row.begin(), row.end(),
                       [](const nlohmann::json& v) { return v.is_number_integer(); })) {
        std::ostringstream msg;
        msg << "HSpec: entry " << i << " must be a row of 4 integers [x, y, z, value]";
        throw std::invalid_argument(msg.str());
      }
      h.entries[Triple{row[0].get<std::int64_t>(), row[1].get<std::int64_t>(),
                       row[2].get<std::int64_t>()}] = row[3].get<std::int64_t>();
    }
  }
  return h;
}

HSpec HSpec::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("HSpec: cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

}  // namespace recurselab
