#include "flexsr/fad.hpp"

namespace flexsr {

std::string_view to_string(MetricType metric) {
  switch (metric) {
    case MetricType::Igp: return "igp";
    case MetricType::TeDefault: return "te-metric";
    case MetricType::MinDelay: return "delay";
  }
  return "?";
}

MetricType parse_metric_type(std::string_view text) {
  if (text == "igp") return MetricType::Igp;
  if (text == "te-metric" || text == "te") return MetricType::TeDefault;
  if (text == "delay") return MetricType::MinDelay;
  fail(ErrorCode::InvalidArgument, "unknown metric type '" + std::string(text) + "'");
}

std::string_view to_string(ConstraintOp op) {
  switch (op) {
    case ConstraintOp::ExcludeAny: return "exclude-any";
    case ConstraintOp::IncludeAny: return "include-any";
    case ConstraintOp::IncludeAll: return "include-all";
  }
  return "?";
}

ConstraintOp parse_constraint_op(std::string_view text) {
  if (text == "exclude-any") return ConstraintOp::ExcludeAny;
  if (text == "include-any") return ConstraintOp::IncludeAny;
  if (text == "include-all") return ConstraintOp::IncludeAll;
  fail(ErrorCode::InvalidArgument, "unknown admin-group op '" + std::string(text) + "'");
}

std::vector<Constraint> resolve_constraints(const AffinityMap& affinity,
                                            const std::vector<ColorConstraint>& constraints) {
  std::vector<Constraint> out;
  out.reserve(constraints.size());
  for (const auto& c : constraints) {
    if (c.colors.empty() || c.colors.size() > kMaxConstraintColors) {
      fail(ErrorCode::ValidationError,
           std::string(to_string(c.op)) + " takes 1 to 10 colours, got " +
               std::to_string(c.colors.size()));
    }
    out.push_back({c.op, resolve_admin_group(affinity, c.colors)});
  }
  return out;
}

std::vector<ColorConstraint> describe_constraints(const AffinityMap& affinity,
                                                  const std::vector<Constraint>& constraints) {
  std::vector<ColorConstraint> out;
  for (const auto& c : constraints) {
    auto names = affinity.colors_of(c.mask);
    out.push_back({c.op, {names.begin(), names.end()}});
  }
  return out;
}

}  // namespace flexsr
