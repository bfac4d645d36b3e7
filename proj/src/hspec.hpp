#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace recurselab {

using Triple = std::array<std::int64_t, 3>;

// Finite-table-plus-default description of an auxiliary function h(x, y, z)
// for the generalized v_h scheme: explicit entries win, otherwise the named
// default rule applies.
struct HSpec {
  enum class Default {
    Zero,
    One,
    ParityX,           // 1 iff x even
    Poly2xy,           // 2xy - 4x + y + z - 1
    BoundedContrived,  // piecewise table capped by max(x, y, z)
    TakY,              // y
    GabrielZ,          // z
    IdX,               // x
  };

  std::map<Triple, std::int64_t> entries;
  Default def = Default::Zero;

  std::int64_t lookup(std::int64_t x, std::int64_t y, std::int64_t z) const;

  static const char* default_name(Default d);
  static Default parse_default(const std::string& name);  // throws on unknown

  // File format: JSON object with a "default" rule name and an optional
  // "entries" list of [x, y, z, value] rows.
  static HSpec load(const std::string& path);
  static HSpec parse_json(const std::string& text);

  bool operator==(const HSpec&) const = default;
};

}  // namespace recurselab
