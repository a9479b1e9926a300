#pragma once

#include <stdexcept>
#include <string>

namespace tritree {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TRITREE_ERROR(name)                   \
    class name : public error {               \
    public:                                   \
        using error::error;                   \
    }

TRITREE_ERROR(invalid_path);
TRITREE_ERROR(out_of_range);
TRITREE_ERROR(depth_cap);
TRITREE_ERROR(negative_input);
TRITREE_ERROR(index_mismatch);
TRITREE_ERROR(missing_weight);
TRITREE_ERROR(nonzero_negative_part);
TRITREE_ERROR(empty_terminal);
TRITREE_ERROR(engine_unavailable);
TRITREE_ERROR(parse_error);

#undef TRITREE_ERROR

}  // namespace tritree
