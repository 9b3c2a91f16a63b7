#pragma once

#include <stdexcept>
#include <string>

namespace moorekit {

enum class ErrorKind {
    out_of_range,
    self_loop,
    edge_arc_conflict,
    invalid_argument,
    invalid_diameter,
    unsupported_k,
    not_prime,
    empty_out_neighborhood,
    precondition_violated,
    order_mismatch,
    budget_exceeded,
    unreachable,
    syntax_error,
    invariant_violation,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::out_of_range: return "out of range";
        case ErrorKind::self_loop: return "self loop";
        case ErrorKind::edge_arc_conflict: return "edge/arc conflict";
        case ErrorKind::invalid_argument: return "invalid argument";
        case ErrorKind::invalid_diameter: return "invalid diameter";
        case ErrorKind::unsupported_k: return "unsupported diameter";
        case ErrorKind::not_prime: return "not prime";
        case ErrorKind::empty_out_neighborhood: return "empty out-neighborhood";
        case ErrorKind::precondition_violated: return "precondition violated";
        case ErrorKind::order_mismatch: return "order mismatch";
        case ErrorKind::budget_exceeded: return "budget exceeded";
        case ErrorKind::unreachable: return "unreachable";
        case ErrorKind::syntax_error: return "syntax error";
        case ErrorKind::invariant_violation: return "invariant violation";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace moorekit
