#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "flexsr/common.hpp"
#include "flexsr/topology.hpp"

namespace flexsr {

enum class MetricType : std::uint8_t { Igp = 0, TeDefault = 1, MinDelay = 2 };
enum class ConstraintOp : std::uint8_t { ExcludeAny = 1, IncludeAny = 2, IncludeAll = 3 };

/// Controller/CLI spellings: "igp", "te-metric", "delay".
std::string_view to_string(MetricType metric);
MetricType parse_metric_type(std::string_view text);
/// "exclude-any", "include-any", "include-all".
std::string_view to_string(ConstraintOp op);
ConstraintOp parse_constraint_op(std::string_view text);

inline constexpr std::size_t kMaxConstraintColors = 10;

/// Constraint as carried on the wire: colours already resolved to a mask.
struct Constraint {
  ConstraintOp op = ConstraintOp::ExcludeAny;
  AdminGroup mask;

  bool operator==(const Constraint&) const = default;
  auto operator<=>(const Constraint&) const = default;
};

/// Constraint as written by a human, by colour name.
struct ColorConstraint {
  ConstraintOp op = ConstraintOp::ExcludeAny;
  std::set<std::string> colors;

  bool operator==(const ColorConstraint&) const = default;
};

/// Flexible Algorithm Definition. calc_type 1 is stored but computed like 0.
struct Fad {
  AlgoId algo = kFirstFlexAlgo;
  std::uint8_t calc_type = 0;
  MetricType metric = MetricType::Igp;
  std::vector<Constraint> constraints;

  bool operator==(const Fad&) const = default;
};

/// Resolves colour names and enforces the 1..10 colour cap. Throws UnknownColor or
/// ValidationError.
std::vector<Constraint> resolve_constraints(const AffinityMap& affinity,
                                            const std::vector<ColorConstraint>& constraints);

std::vector<ColorConstraint> describe_constraints(const AffinityMap& affinity,
                                                  const std::vector<Constraint>& constraints);

}  // namespace flexsr
