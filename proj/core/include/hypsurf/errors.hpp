#pragma once

#include <stdexcept>
#include <string>

namespace hypsurf {

enum class errc {
    domain_error,
    not_hyperbolic,
    not_parabolic,
    not_simple,
    not_free,
    fixes_infinity,
    non_positive_length,
    negative_length,
    inadmissible_traces,
    index_out_of_range,
    no_cusp,
    empty_ball,
    no_hyperbolic_class,
    degenerate_region,
    cusped_boundary,
    precondition_violated,
    assertion_failed,
    parse_error,
    io_error,
};

/// Single exception type for the whole library; `code` tells the failure kind apart.
class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace hypsurf
