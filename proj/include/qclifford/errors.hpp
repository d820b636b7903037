#pragma once

#include <stdexcept>
#include <string>

namespace qcl {

// Error categories aligned with the CLI exit codes (see README):
//   input_error             -> exit 2 (malformed graphs, bad arguments, cap violations)
//   connectivity_error      -> exit 3 (operation requires a connected graph)
//   spin_precondition_error -> exit 4 (spin pipeline needs all-black unit labels, <= 20 vertices)
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct connectivity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct spin_precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qcl
