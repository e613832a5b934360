#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace flexsr {

struct Ipv4Addr {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const Ipv4Addr&) const = default;

  static Ipv4Addr parse(std::string_view text);
  std::string str() const;
};

struct Ipv4Prefix {
  Ipv4Addr network;
  std::uint8_t length = 32;

  constexpr auto operator<=>(const Ipv4Prefix&) const = default;

  /// Host bits are cleared; "20.10.4.7/24" becomes 20.10.4.0/24.
  static Ipv4Prefix parse(std::string_view text);
  std::string str() const;

  std::uint32_t mask() const {
    return length == 0 ? 0u : ~std::uint32_t{0} << (32 - length);
  }
  bool contains(Ipv4Addr addr) const {
    return (addr.value & mask()) == network.value;
  }
  /// network + offset; no range check against the prefix length.
  Ipv4Addr host(std::uint32_t offset) const {
    return Ipv4Addr{network.value + offset};
  }
};

}  // namespace flexsr
