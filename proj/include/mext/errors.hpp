#pragma once

#include <stdexcept>
#include <string>

namespace mext {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed files, arguments or schemas (CLI exit code 2).
struct input_error : error {
    using error::error;
};

struct invalid_ring_error : error {
    using error::error;
};
struct not_modular_error : error {
    using error::error;
};
struct integrality_error : error {
    using error::error;
};
struct anomalous_gauss_sum_error : error {
    using error::error;
};
struct inconsistent_data_error : error {
    using error::error;
};
struct not_condensable_error : error {
    using error::error;
};
struct underdetermined_condensation_error : error {
    using error::error;
};
struct base_mismatch_error : error {
    using error::error;
};
struct size_bound_error : error {
    using error::error;
};

} // namespace mext
