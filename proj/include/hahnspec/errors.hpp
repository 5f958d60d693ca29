#pragma once

#include <stdexcept>
#include <string>

namespace hahnspec {

// Sup-type functionals divide by the prefix length; an empty sequence has none.
class EmptyInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// alpha = 1 makes the shifted main diagonal vanish, so forward substitution
// and the closed-form inverse entries are undefined.
class SingularShiftError : public std::domain_error {
public:
    SingularShiftError()
        : std::domain_error("singular shift: 1 - alpha = 0") {}
    using std::domain_error::domain_error;
};

// Goldberg state A2 (surjective with a discontinuous inverse) cannot occur for
// a bounded operator on a Banach space.
class ImpossibleStateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, const std::string& message)
        : std::invalid_argument("config error [" + field + "]: " + message),
          field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

class IoError : public std::runtime_error {
public:
    IoError(std::string path, const std::string& message)
        : std::runtime_error("io error [" + path + "]: " + message),
          path_(std::move(path)) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

} // namespace hahnspec
