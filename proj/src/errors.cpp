#include "trigspline/errors.hpp"

namespace trigspline {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_argument: return "invalid-argument";
    case errc::invalid_grid: return "invalid-grid";
    case errc::parse_error: return "parse-error";
    case errc::sampling_error: return "sampling-error";
    case errc::order_out_of_range: return "order-out-of-range";
    case errc::incompatible: return "incompatible";
    case errc::convergence_failure: return "convergence-failure";
    case errc::degenerate_factor: return "degenerate-factor";
    case errc::nonconvergent_derivative: return "nonconvergent-derivative";
    case errc::invalid_state: return "invalid-state";
    case errc::invalid_filter: return "invalid-filter";
    case errc::quadrature_error: return "quadrature-error";
    case errc::io_error: return "io-error";
  }
  return "unknown";
}

}  // namespace trigspline
