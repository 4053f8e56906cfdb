#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cct {

/// Wire value: Boolean 0/1 plus the "unknown" value used by three-valued
/// circuits.
enum class TriValue : std::uint8_t { Zero = 0, One = 1, Star = 2 };

inline constexpr TriValue tri_zero = TriValue::Zero;
inline constexpr TriValue tri_one = TriValue::One;
inline constexpr TriValue tri_star = TriValue::Star;

/// Strong Kleene conjunction: 0 if either side is 0, 1 if both are 1,
/// unknown otherwise.
constexpr TriValue tri_and(TriValue p, TriValue q) {
  if (p == TriValue::Zero || q == TriValue::Zero) return TriValue::Zero;
  if (p == TriValue::One && q == TriValue::One) return TriValue::One;
  return TriValue::Star;
}

/// Strong Kleene disjunction: 1 if either side is 1, 0 if both are 0.
constexpr TriValue tri_or(TriValue p, TriValue q) {
  if (p == TriValue::One || q == TriValue::One) return TriValue::One;
  if (p == TriValue::Zero && q == TriValue::Zero) return TriValue::Zero;
  return TriValue::Star;
}

constexpr bool is_boolean(TriValue v) { return v != TriValue::Star; }

/// true when `v` agrees with `u` on every position where `u` is Boolean,
/// i.e. `v` may only resolve unknowns of `u`.
constexpr bool refines(TriValue v, TriValue u) {
  return u == TriValue::Star || v == u;
}

constexpr TriValue tri_not(TriValue v) {
  if (v == TriValue::Zero) return TriValue::One;
  if (v == TriValue::One) return TriValue::Zero;
  return TriValue::Star;
}

constexpr char tri_char(TriValue v) {
  return v == TriValue::Zero ? '0' : v == TriValue::One ? '1' : '*';
}

inline TriValue tri_from_char(char c) {
  switch (c) {
    case '0': return TriValue::Zero;
    case '1': return TriValue::One;
    case '*': return TriValue::Star;
    default: throw std::invalid_argument(std::string("bad value symbol '") + c + "'");
  }
}

inline std::string tri_string(const std::vector<TriValue>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += tri_char(vs[i]);
  }
  return s;
}

}  // namespace cct
