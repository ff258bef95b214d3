#pragma once

#include <doctest.h>

#include <functional>

#include "majlat/errors.hpp"

namespace majlat::testing {

// Runs fn, which must throw a majlat::Error, and returns its code.
inline errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a majlat::Error");
  return errc::io_error;
}

}  // namespace majlat::testing
