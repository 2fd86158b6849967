#pragma once

#include <stdexcept>
#include <string>

namespace abranch {

// Error categories; every throwing path in the library uses one of these
// so callers (and tests) can tell failure modes apart without string matching.
enum class Errc {
  file_not_found,
  io_failure,
  pnm_bad_magic,
  pnm_bad_header,
  pnm_bad_maxval,
  pnm_truncated,
  bad_argument,
  channel_out_of_range,
  frame_too_small,
  empty_input,
  manifest_empty,
  manifest_bad_line,
  manifest_missing_frame,
  csv_schema,
  csv_incomplete,
  csv_non_monotone,
  catalog_empty,
  unknown_branch,
  level_out_of_range,
  category_out_of_range,
  window_no_samples,
  protocol_violation,
  responder_error,
  timeout,
  connect_failed,
  fixture_invalid,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace abranch
