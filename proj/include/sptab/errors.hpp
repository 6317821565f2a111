#pragma once

#include <stdexcept>
#include <string>

namespace sptab {

// Base class for every domain error; all of these map to CLI exit code 1.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : error {
    using error::error;
};

struct not_admissible : error {
    int column_index;  // 1-based, 0 when unknown
    int break_value;
    not_admissible(const std::string& what, int col = 0, int z = 0)
        : error(what), column_index(col), break_value(z) {}
};

struct split_impossible : error {
    using error::error;
};

struct not_coadmissible : error {
    using error::error;
};

struct invalid_tableau : error {
    using error::error;
};

struct slide_error : error {
    using error::error;
};

struct weight_not_in_orbit : error {
    using error::error;
};

struct invalid_shape : error {
    using error::error;
};

struct not_a_permutation : error {
    using error::error;
};

struct malformed_biword : error {
    using error::error;
};

// Raised when two implementations that must agree do not; maps to CLI
// exit code 2.
struct verification_mismatch : std::runtime_error {
    explicit verification_mismatch(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sptab
