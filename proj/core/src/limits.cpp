#include "snakechar/limits.hpp"

#include <cstdlib>

namespace snakechar {

Limits limits_from_env() {
    Limits limits;
    if (const char* raw = std::getenv("SNAKECHAR_MAX_TUPLES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(raw, &end, 10);
        if (end != raw && *end == '\0' && v > 0) limits.max_tuples = v;
    }
    return limits;
}

}  // namespace snakechar
