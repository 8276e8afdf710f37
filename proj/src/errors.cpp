#include "levelwise/errors.hpp"

namespace levelwise {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::empty_degrees: return "EmptyDegrees";
        case errc::root_count_not_one_or_two: return "RootCountNotOneOrTwo";
        case errc::root_degree_too_small: return "RootDegreeTooSmall";
        case errc::internal_degree_too_small: return "InternalDegreeTooSmall";
        case errc::order_overflow: return "OrderOverflow";
        case errc::dimension_too_large: return "DimensionTooLarge";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::wrong_root_count: return "WrongRootCount";
        case errc::non_positive_tolerance: return "NonPositiveTolerance";
        case errc::multiplicity_mismatch: return "MultiplicityMismatch";
        case errc::not_symmetric: return "NotSymmetric";
        case errc::no_convergence: return "NoConvergence";
    }
    return "UnknownError";
}

} // namespace levelwise
