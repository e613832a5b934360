#pragma once

#include <functional>

#include <gtest/gtest.h>

#include "flexsr/common.hpp"
#include "flexsr/scenario.hpp"

namespace flexsr::testing {

inline void expect_code(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

/// Fresh copy of the reference scenario; parsed once per process.
inline Simulator paper() {
  static const Simulator loaded = load_scenario(paper_scenario_text());
  return loaded;
}

inline AdjacencyId link(unsigned a, unsigned b) { return {{a}, {b}}; }

}  // namespace flexsr::testing
