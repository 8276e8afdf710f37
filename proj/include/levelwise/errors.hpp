#ifndef LEVELWISE_ERRORS_HPP
#define LEVELWISE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace levelwise {

// Error conditions surfaced by the library. Each maps to one failure mode of
// the public API; the CLI translates them to exit codes.
enum class errc {
    empty_degrees,
    root_count_not_one_or_two,
    root_degree_too_small,
    internal_degree_too_small,
    order_overflow,
    dimension_too_large,
    index_out_of_range,
    wrong_root_count,
    non_positive_tolerance,
    multiplicity_mismatch,
    not_symmetric,
    no_convergence,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

const char* errc_name(errc code) noexcept;

} // namespace levelwise

#endif
