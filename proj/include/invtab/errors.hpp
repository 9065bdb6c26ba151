#pragma once

#include <stdexcept>
#include <string>

namespace invtab {

// Error tiers map 1:1 onto CLI exit codes: input_error -> 1,
// family_error -> 2, internal_error -> 3.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed user input (bad grid, bad syntax).
struct input_error : error {
    using error::error;
};
struct shape_error : input_error {
    using input_error::input_error;
};
struct row_violation : input_error {
    using input_error::input_error;
};
struct skipped_value : input_error {
    using input_error::input_error;
};
struct parse_error : input_error {
    using input_error::input_error;
};

// Structurally valid input outside an operation's domain.
struct family_error : error {
    using error::error;
};
struct size_mismatch : family_error {
    using family_error::family_error;
};
struct empty_family : family_error {
    using family_error::family_error;
};
struct unsupported : family_error {
    using family_error::family_error;
};
struct wrong_inversion_count : family_error {
    using family_error::family_error;
};
struct shape_mismatch : family_error {
    using family_error::family_error;
};
struct domain_error : family_error {
    using family_error::family_error;
};

// A broken invariant inside the library itself.
struct internal_error : error {
    using error::error;
};

inline void require_internal(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

}  // namespace invtab
