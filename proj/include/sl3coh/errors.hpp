#pragma once

#include <stdexcept>
#include <string>

namespace sl3coh {

// Base of every error raised by the library. name() is the stable identifier
// printed by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

struct InvalidPrime : Error {
    explicit InvalidPrime(const std::string& w) : Error("InvalidPrime", w) {}
};
struct DomainError : Error {
    explicit DomainError(const std::string& w) : Error("DomainError", w) {}
};
struct NotAModuleCharacter : Error {
    explicit NotAModuleCharacter(const std::string& w) : Error("NotAModuleCharacter", w) {}
};
struct OutsideSupportedFamily : Error {
    explicit OutsideSupportedFamily(const std::string& w) : Error("OutsideSupportedFamily", w) {}
};
struct ArithmeticOverflow : Error {
    explicit ArithmeticOverflow(const std::string& w) : Error("ArithmeticOverflow", w) {}
};

} // namespace sl3coh
