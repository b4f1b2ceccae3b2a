#pragma once

#include <stdexcept>
#include <string>

namespace jobshop {

enum class Errc {
  malformed_header,
  row_arity,
  machine_index_out_of_range,
  duplicate_machine_in_route,
  negative_processing_time,
  unknown_instance,
  count_mismatch,
  too_large,
  empty_eligible_set,
  index_out_of_range,
  odd_population,
  swarming_disabled,
  missing_reference,
  invalid_parameter,
  io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace jobshop
