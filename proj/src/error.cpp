// SPDX-License-Identifier: Apache-2.0
#include "error.hpp"

namespace sublat {

namespace {

std::string decorate(const std::string& message, std::size_t line, std::size_t column)
{
    if (line == 0)
        return message;
    std::string out = "line " + std::to_string(line);
    if (column != 0)
        out += ", column " + std::to_string(column);
    return out + ": " + message;
}

}  // namespace

const char* error_kind_name(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::MalformedConstraint: return "MalformedConstraint";
    case ErrorKind::UnterminatedJob: return "UnterminatedJob";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
    case ErrorKind::Syntax: return "Syntax";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::CyclicCovers: return "CyclicCovers";
    case ErrorKind::NotTranscribed: return "NotTranscribed";
    case ErrorKind::CatalogIncomplete: return "CatalogIncomplete";
    case ErrorKind::TooLarge: return "TooLarge";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(decorate(message, line, column)), kind_(kind), line_(line), column_(column)
{
}

}  // namespace sublat
