#ifndef RTK_ERRORS_HPP
#define RTK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rtk {

// Base class so callers can catch everything the library throws in one place.
struct rtk_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : rtk_error {
    division_by_zero() : rtk_error("division by zero") {}
};

struct non_unit_constant_term : rtk_error {
    non_unit_constant_term() : rtk_error("constant term is not a unit") {}
};

struct nonzero_inner_constant : rtk_error {
    nonzero_inner_constant() : rtk_error("inner series has nonzero constant term") {}
};

struct bad_low_order : rtk_error {
    bad_low_order() : rtk_error("series must have f(0)=0 and unit linear coefficient") {}
};

struct constant_term_not_one : rtk_error {
    constant_term_not_one() : rtk_error("constant term must be 1") {}
};

struct insufficient_order : rtk_error {
    explicit insufficient_order(const std::string& what = "not enough known coefficients")
        : rtk_error(what) {}
};

struct insufficient_terms : rtk_error {
    insufficient_terms() : rtk_error("not enough sequence terms") {}
};

struct cf_breakdown : rtk_error {
    explicit cf_breakdown(int level)
        : rtk_error("continued fraction breakdown (zero pivot) at level " + std::to_string(level)) {}
};

struct not_square : rtk_error {
    not_square() : rtk_error("matrix is not square") {}
};

struct index_out_of_range : rtk_error {
    index_out_of_range() : rtk_error("index out of range") {}
};

struct dimension_mismatch : rtk_error {
    dimension_mismatch() : rtk_error("matrix dimensions do not match") {}
};

struct not_lower_triangular : rtk_error {
    not_lower_triangular() : rtk_error("matrix is not lower triangular") {}
};

struct not_unit_diagonal : rtk_error {
    not_unit_diagonal() : rtk_error("matrix is not lower triangular with unit diagonal") {}
};

struct duplicate_nodes : rtk_error {
    duplicate_nodes() : rtk_error("interpolation nodes must be pairwise distinct") {}
};

struct kind_mismatch : rtk_error {
    kind_mismatch() : rtk_error("Riordan arrays have different kinds") {}
};

struct parse_error : rtk_error {
    explicit parse_error(const std::string& what) : rtk_error("parse error: " + what) {}
};

struct unknown_experiment : rtk_error {
    explicit unknown_experiment(const std::string& name)
        : rtk_error("unknown experiment: " + name) {}
};

struct unknown_sequence : rtk_error {
    explicit unknown_sequence(const std::string& id)
        : rtk_error("unknown sequence: " + id) {}
};

struct network_disabled : rtk_error {
    network_disabled() : rtk_error("network fetch is disabled (pass --online to enable)") {}
};

struct network_failure : rtk_error {
    explicit network_failure(const std::string& what) : rtk_error("network failure: " + what) {}
};

} // namespace rtk

#endif
