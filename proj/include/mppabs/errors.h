#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mppabs {

// Argument outside the mathematical domain of a formula (f <= 0, f_low >= f_high, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A named input field failed validation.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// Misuse of an API, e.g. evaluating an empty element chain.
class UsageError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The reflection coefficient denominator vanished exactly.
class SingularConfigurationError : public std::runtime_error {
public:
    explicit SingularConfigurationError(double frequency_hz)
        : std::runtime_error("singular configuration at " + std::to_string(frequency_hz) + " Hz"),
          frequency_hz_(frequency_hz) {}

    double frequency_hz() const noexcept { return frequency_hz_; }

private:
    double frequency_hz_;
};

} // namespace mppabs
