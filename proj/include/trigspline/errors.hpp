#pragma once

#include <stdexcept>
#include <string>

namespace trigspline {

// Error categories; kept in one-to-one correspondence with the ts_status
// codes of the C API (see trigspline.h).
enum class errc {
  invalid_argument = 1,
  invalid_grid,
  parse_error,
  sampling_error,
  order_out_of_range,
  incompatible,
  convergence_failure,
  degenerate_factor,
  nonconvergent_derivative,
  invalid_state,
  invalid_filter,
  quadrature_error,
  io_error,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace trigspline
