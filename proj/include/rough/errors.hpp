#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rough {

// Malformed or inconsistent user input: bad table files, unknown attribute
// or object names, exceeded enumeration bounds. The CLI maps this to exit
// code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Syntax error in formula text. offset is the 0-based byte position of the
// offending token (or end of input).
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t at)
        : std::runtime_error(what + " at offset " + std::to_string(at)), offset(at) {}

    std::size_t offset;
};

}  // namespace rough
