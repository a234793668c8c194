#pragma once

#include <stdexcept>
#include <string>

namespace vdcq {

struct NotSquarefree : std::domain_error {
    explicit NotSquarefree(const std::string& msg) : std::domain_error(msg) {}
};

struct NotCoprime : std::domain_error {
    explicit NotCoprime(const std::string& msg) : std::domain_error(msg) {}
};

struct BadFactor : std::domain_error {
    explicit BadFactor(const std::string& msg) : std::domain_error(msg) {}
};

struct NotPrimitive : std::domain_error {
    explicit NotPrimitive(const std::string& msg) : std::domain_error(msg) {}
};

struct OutOfRange : std::domain_error {
    explicit OutOfRange(const std::string& msg) : std::domain_error(msg) {}
};

struct LengthExceedsModulus : std::domain_error {
    explicit LengthExceedsModulus(const std::string& msg) : std::domain_error(msg) {}
};

struct BadWord : std::domain_error {
    explicit BadWord(const std::string& msg) : std::domain_error(msg) {}
};

struct Degenerate : std::domain_error {
    explicit Degenerate(const std::string& msg) : std::domain_error(msg) {}
};

}  // namespace vdcq
