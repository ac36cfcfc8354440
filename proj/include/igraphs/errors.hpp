#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace igraphs {

// Thrown when an input graph exceeds the supported search size.
struct too_large_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on malformed or out-of-range serialized documents.
// `position` is the byte offset of the failure, 0 when unknown.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what, std::size_t byte = 0)
        : std::runtime_error(what), position(byte) {}
    std::size_t position;
};

// Thrown when a verified construction fails its own post-check.
struct construction_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace igraphs
