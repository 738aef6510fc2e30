#ifndef XBAND_ERRORS_HPP
#define XBAND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xband {

/* Error taxonomy. InputError covers everything a caller handed us (files,
 * configs, symbols); InternalError covers broken invariants on our side.
 * BandExceededError is not really an error but a retry signal: the live
 * antidiagonal window outgrew the allocated buffers. */

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownSymbol : InputError {
    explicit UnknownSymbol(char c)
        : InputError(std::string("symbol not in scoring alphabet: '") + c + "'"), symbol(c) {}
    char symbol;
};

struct OutOfRange : InputError {
    using InputError::InputError;
};

struct SeedOutOfBounds : InputError {
    using InputError::InputError;
};

struct DanglingReference : InputError {
    using InputError::InputError;
};

struct TaskTooLarge : InputError {
    TaskTooLarge(int task, const std::string& msg) : InputError(msg), task_id(task) {}
    int task_id;
};

struct ZeroTime : InputError {
    using InputError::InputError;
};

/* Parser errors, each naming the offending location where one exists. */
struct MissingHeader : InputError {
    using InputError::InputError;
};
struct EmptyRecord : InputError {
    using InputError::InputError;
};
struct InvalidSymbol : InputError {
    InvalidSymbol(size_t ln, const std::string& msg) : InputError(msg), line(ln) {}
    size_t line;
};
struct MalformedLine : InputError {
    MalformedLine(size_t ln, const std::string& msg) : InputError(msg), line(ln) {}
    size_t line;
};
struct NegativeIndex : InputError {
    using InputError::InputError;
};
struct BadHeader : InputError {
    using InputError::InputError;
};
struct IndexOutOfDeclaredShape : InputError {
    using InputError::InputError;
};
struct NonSquare : InputError {
    using InputError::InputError;
};
struct MissingEntry : InputError {
    using InputError::InputError;
};

/* Raised by the banded kernel when the live window would need more than
 * delta_b cells. observed_spread is the spread that did not fit; cells is
 * the work done up to the abort (used as cost by the measured simulator).
 * side is 'L'/'R' once the failure is attributed to one half of a seed
 * extension, '?' for a bare kernel call. */
struct BandExceededError : std::runtime_error {
    BandExceededError(int spread, long long done)
        : std::runtime_error("antidiagonal spread " + std::to_string(spread) +
                             " exceeds allocated band"),
          observed_spread(spread), cells(done) {}
    int observed_spread;
    long long cells;
    char side = '?';
};

}  // namespace xband

#endif
