#pragma once

#include <vector>

#include "schemeforge/error.hpp"

namespace testsupport {

// True iff f() throws schemeforge::error with exactly the given code.
template <typename F>
bool throws_code(schemeforge::errc want, F&& f) {
  try {
    f();
  } catch (const schemeforge::error& e) {
    return e.code == want;
  } catch (...) {
    return false;
  }
  return false;
}

using int_sets = std::vector<std::vector<int>>;

}  // namespace testsupport
