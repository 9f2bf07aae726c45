#pragma once

#include <stdexcept>
#include <string>

namespace hsr {

// Error taxonomy. Every throwing contract in the library maps onto one of
// these; the CLI translates them into process exit codes.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error("shape error: " + msg) {}
};

struct IndexError : std::runtime_error {
    explicit IndexError(const std::string& msg) : std::runtime_error("index error: " + msg) {}
};

struct StateError : std::runtime_error {
    explicit StateError(const std::string& msg) : std::runtime_error("state error: " + msg) {}
};

// Malformed on-disk data. Carries the byte offset where parsing failed.
struct FormatError : std::runtime_error {
    long long offset;
    FormatError(const std::string& msg, long long byte_offset)
        : std::runtime_error("format error at byte " + std::to_string(byte_offset) + ": " + msg),
          offset(byte_offset) {}
};

struct ParamError : std::runtime_error {
    explicit ParamError(const std::string& msg) : std::runtime_error("parameter error: " + msg) {}
};

struct TaxonomyError : std::runtime_error {
    explicit TaxonomyError(const std::string& msg) : std::runtime_error("taxonomy error: " + msg) {}
};

// Checkpoint does not match the model that tries to load it.
struct CheckpointError : std::runtime_error {
    explicit CheckpointError(const std::string& msg) : std::runtime_error("checkpoint error: " + msg) {}
};

}  // namespace hsr
