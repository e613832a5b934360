#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace flexsr {

/// Router number. R1..R4 in the reference scenario are 1..4.
struct NodeId {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const NodeId&) const = default;
};

std::string to_string(NodeId id);
/// Accepts "R3" or "3".
NodeId parse_node_id(std::string_view text);

/// Algorithm number: 0 is the default IGP algorithm, 128..255 are flexible algorithms.
using AlgoId = unsigned;
using Label = std::uint32_t;

inline constexpr AlgoId kDefaultAlgo = 0;
inline constexpr AlgoId kFirstFlexAlgo = 128;
inline constexpr AlgoId kLastFlexAlgo = 255;

constexpr bool is_flex_algo(AlgoId algo) {
  return algo >= kFirstFlexAlgo && algo <= kLastFlexAlgo;
}
constexpr bool is_valid_algo(AlgoId algo) {
  return algo == kDefaultAlgo || is_flex_algo(algo);
}

enum class ErrorCode {
  DuplicateNode,
  DuplicateLink,
  UnknownNode,
  SelfLoop,
  UnknownColor,
  DuplicateColor,
  UnknownLink,
  InvalidDelay,
  InvalidArgument,
  MalformedTlv,
  SidSpaceExceeded,
  NoPath,
  NoRoute,
  UnboundColor,
  DuplicateVrf,
  DuplicateRd,
  NotAttached,
  InactiveAlgo,
  ForwardingLoop,
  IdSpaceExhausted,
  UnknownTargetColor,
  UnknownAlgo,
  UnknownVrf,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the simulator; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace flexsr

template <>
struct std::hash<flexsr::NodeId> {
  std::size_t operator()(flexsr::NodeId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
