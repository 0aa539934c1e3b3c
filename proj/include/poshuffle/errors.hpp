/* errors.hpp -- exception types shared across the library */

#ifndef POSHUFFLE_ERRORS_HPP
#define POSHUFFLE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace poshuffle {

// Base for all input-level failures. The CLI maps these to exit code 2,
// except SizeLimitError which maps to exit code 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A relation that was supposed to be a partial order contains a cycle.
struct CycleError : Error {
    using Error::Error;
};

// An event id was referenced but never declared.
struct UnknownEventError : Error {
    using Error::Error;
};

// An event id was declared more than once.
struct DuplicateEventError : Error {
    using Error::Error;
};

// A configured cap (trace count, search size, ...) was exceeded.
struct SizeLimitError : Error {
    using Error::Error;
};

// Operand count, trajectory symbol, or label out of range.
struct ArityError : Error {
    using Error::Error;
};

// A trajectory word's symbol counts do not match the operand word lengths.
// Carries the 1-based index of the first offending operand.
struct DoesNotFitError : Error {
    explicit DoesNotFitError(int operand_index)
        : Error("trajectory does not fit operand " + std::to_string(operand_index)),
          operand_index(operand_index) {}
    int operand_index;
};

// A trace handed to a per-trace operation is not in the poset's language.
struct TraceNotInLanguageError : Error {
    using Error::Error;
};

// Order extraction requires a nonempty language.
struct EmptyLanguageError : Error {
    using Error::Error;
};

// Order extraction requires every trace to be a permutation of one event set.
struct NonUniformLanguageError : Error {
    using Error::Error;
};

// Shuffle operands must have pairwise disjoint event sets.
struct DisjointnessError : Error {
    using Error::Error;
};

// Input text is not well-formed JSON. Carries a 1-based position.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what), line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

// Well-formed JSON that violates the document schema.
struct SchemaError : Error {
    using Error::Error;
};

} // namespace poshuffle

#endif
