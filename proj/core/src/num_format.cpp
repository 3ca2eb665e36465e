#include "corospec/num_format.hpp"

#include <cstdio>
#include <cstdlib>

namespace corospec {

double round_significant(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return std::strtod(buf, nullptr);
}

} // namespace corospec
