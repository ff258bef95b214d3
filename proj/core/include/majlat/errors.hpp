#pragma once

#include <stdexcept>
#include <string>

namespace majlat {

/// Library error conditions. Each maps to one failure mode of the public API.
enum class errc {
  empty_input,
  negative_mass,
  not_normalized,
  invalid_partition,
  out_of_domain,
  unsupported_order,
  empty_list,
  not_comonotone,
  not_rational,
  parse_error,
  io_error,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw Error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace majlat
