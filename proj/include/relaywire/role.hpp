#pragma once

#include <cstdint>
#include <string_view>

#include "relaywire/errors.hpp"

namespace relaywire {

// Side A (sender) masks its share with M; side B (receiver) masks with N.
enum class Role : std::uint8_t {
  sender = 1,
  receiver = 2,
};

inline Role peer_of(Role r) {
  return r == Role::sender ? Role::receiver : Role::sender;
}

inline std::uint8_t role_byte(Role r) { return static_cast<std::uint8_t>(r); }

inline Role role_from_byte(std::uint8_t b) {
  if (b != 1 && b != 2) throw DecodeError("invalid role byte");
  return static_cast<Role>(b);
}

inline std::string_view role_name(Role r) {
  return r == Role::sender ? "sender" : "receiver";
}

}  // namespace relaywire
