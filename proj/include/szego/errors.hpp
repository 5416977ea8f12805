#pragma once

#include <stdexcept>
#include <string>

namespace szego {

// Invalid symbol or argument (alpha out of range, bad roots, duplicate angles).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Series length too short for the declared tail model.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularPointError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotPositiveDefinite : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ContractionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace szego
