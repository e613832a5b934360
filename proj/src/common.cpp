#include "flexsr/common.hpp"

#include <charconv>

#include "flexsr/ipv4.hpp"

namespace flexsr {

std::string to_string(NodeId id) { return "R" + std::to_string(id.value); }

NodeId parse_node_id(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == 'R' || digits.front() == 'r')) {
    digits.remove_prefix(1);
  }
  std::uint32_t value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() ||
      value == 0) {
    fail(ErrorCode::InvalidArgument,
         "invalid node id '" + std::string(text) + "'");
  }
  return NodeId{value};
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::DuplicateLink: return "DuplicateLink";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownColor: return "UnknownColor";
    case ErrorCode::DuplicateColor: return "DuplicateColor";
    case ErrorCode::UnknownLink: return "UnknownLink";
    case ErrorCode::InvalidDelay: return "InvalidDelay";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MalformedTlv: return "MalformedTlv";
    case ErrorCode::SidSpaceExceeded: return "SidSpaceExceeded";
    case ErrorCode::NoPath: return "NoPath";
    case ErrorCode::NoRoute: return "NoRoute";
    case ErrorCode::UnboundColor: return "UnboundColor";
    case ErrorCode::DuplicateVrf: return "DuplicateVrf";
    case ErrorCode::DuplicateRd: return "DuplicateRd";
    case ErrorCode::NotAttached: return "NotAttached";
    case ErrorCode::InactiveAlgo: return "InactiveAlgo";
    case ErrorCode::ForwardingLoop: return "ForwardingLoop";
    case ErrorCode::IdSpaceExhausted: return "IdSpaceExhausted";
    case ErrorCode::UnknownTargetColor: return "UnknownTargetColor";
    case ErrorCode::UnknownAlgo: return "UnknownAlgo";
    case ErrorCode::UnknownVrf: return "UnknownVrf";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

namespace {

bool parse_octets(std::string_view text, std::uint32_t& out) {
  std::uint32_t value = 0;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (int i = 0; i < 4; ++i) {
    unsigned octet = 0;
    auto [next, ec] = std::from_chars(p, end, octet);
    if (ec != std::errc{} || next == p || octet > 255) return false;
    value = (value << 8) | octet;
    p = next;
    if (i < 3) {
      if (p == end || *p != '.') return false;
      ++p;
    }
  }
  if (p != end) return false;
  out = value;
  return true;
}

}  // namespace

Ipv4Addr Ipv4Addr::parse(std::string_view text) {
  std::uint32_t value = 0;
  if (!parse_octets(text, value)) {
    fail(ErrorCode::InvalidArgument,
         "invalid IPv4 address '" + std::string(text) + "'");
  }
  return Ipv4Addr{value};
}

std::string Ipv4Addr::str() const {
  return std::to_string(value >> 24) + "." + std::to_string((value >> 16) & 0xff) +
         "." + std::to_string((value >> 8) & 0xff) + "." +
         std::to_string(value & 0xff);
}

Ipv4Prefix Ipv4Prefix::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    fail(ErrorCode::InvalidArgument,
         "invalid IPv4 prefix '" + std::string(text) + "'");
  }
  Ipv4Addr addr = Ipv4Addr::parse(text.substr(0, slash));
  auto len_text = text.substr(slash + 1);
  unsigned len = 0;
  auto [ptr, ec] =
      std::from_chars(len_text.data(), len_text.data() + len_text.size(), len);
  if (len_text.empty() || ec != std::errc{} ||
      ptr != len_text.data() + len_text.size() || len > 32) {
    fail(ErrorCode::InvalidArgument,
         "invalid IPv4 prefix length in '" + std::string(text) + "'");
  }
  Ipv4Prefix prefix{addr, static_cast<std::uint8_t>(len)};
  prefix.network.value &= prefix.mask();
  return prefix;
}

std::string Ipv4Prefix::str() const {
  return network.str() + "/" + std::to_string(length);
}

}  // namespace flexsr
