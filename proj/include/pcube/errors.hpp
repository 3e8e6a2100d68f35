#pragma once
#include <stdexcept>

namespace pcube {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct unsolvable_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct unsupported_spec_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct budget_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pcube
