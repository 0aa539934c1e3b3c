/* limits.hpp -- size caps for enumeration-backed operations */

#ifndef POSHUFFLE_LIMITS_HPP
#define POSHUFFLE_LIMITS_HPP

#include <cstddef>

namespace poshuffle {

// Enumeration-backed operations take a Limits value and raise SizeLimitError
// instead of silently doing unbounded work. max_traces bounds the number of
// linear extensions visited and the size of any computed language.
struct Limits {
    std::size_t max_traces = 100000;
};

} // namespace poshuffle

#endif
