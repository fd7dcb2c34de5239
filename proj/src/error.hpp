// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sublat {

enum class ErrorKind {
    InvalidArgument,
    UniverseTooLarge,
    EmptySubset,
    SizeMismatch,
    UnknownLabel,
    MalformedConstraint,
    UnterminatedJob,
    UnknownCommand,
    Syntax,
    NotALattice,
    CyclicCovers,
    NotTranscribed,
    CatalogIncomplete,
    TooLarge,
};

const char* error_kind_name(ErrorKind kind) noexcept;

/// Every failure in the library surfaces as an Error. Parse errors carry a
/// 1-based line/column; other errors leave both at zero.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::size_t line = 0, std::size_t column = 0);

    ErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    ErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace sublat
