#ifndef GRAPHLIM_ERROR_HPP
#define GRAPHLIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace graphlim {

enum class ErrorCode {
    invalid_argument,   // bad parameter, violated precondition
    parse_error,        // malformed input document (message carries line number)
    budget_exceeded,    // enumeration would exceed the configured budget
    domain_error,       // e.g. log of a hard-core zero homomorphism sum
    generation_failed,  // e.g. configuration model ran out of retries
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace graphlim

#endif
