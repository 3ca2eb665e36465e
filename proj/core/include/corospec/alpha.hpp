#pragma once

#include <stdexcept>
#include <string>

namespace corospec {

// Convex-combination weight of the degree matrix in alpha*D + (1-alpha)*A.
class Alpha {
public:
    explicit Alpha(double value) : value_(value) {
        if (!(value >= 0.0 && value <= 1.0))
            throw std::invalid_argument("alpha must lie in [0,1], got " +
                                        std::to_string(value));
    }

    double value() const { return value_; }

private:
    double value_;
};

} // namespace corospec
