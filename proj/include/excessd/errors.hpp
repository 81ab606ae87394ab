#pragma once

#include <stdexcept>
#include <string>

namespace excessd {

/// Input data or configuration violates a documented contract.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A model could not be estimated for one or more series.
class EstimationError : public std::runtime_error {
public:
    explicit EstimationError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem-level failure (missing file, unwritable output).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace excessd
