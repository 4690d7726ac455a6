#ifndef DCC_ERRORS_HPP
#define DCC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcc {

// Thrown when an operation would have to enumerate more than 4^cap codewords.
// required_exponent() is the smallest cap exponent that would admit the call.
class cap_exceeded : public std::runtime_error {
  public:
    cap_exceeded(std::size_t required_exponent, std::size_t cap_exponent)
        : std::runtime_error("enumeration needs 4^" + std::to_string(required_exponent) +
                             " codewords, cap is 4^" + std::to_string(cap_exponent)),
          required_exponent_(required_exponent) {}

    std::size_t required_exponent() const noexcept { return required_exponent_; }

  private:
    std::size_t required_exponent_;
};

// Generator-triple validation failures for double cyclic codes.
enum class build_violation {
    b_not_divisor,   // b does not divide x^m - 1
    a_not_divisor,   // a does not divide x^n - 1
    degree_bound,    // deg(l) >= deg(b) with l nonzero
    compatibility,   // b does not divide l * (x^n - 1) / a
};

std::string to_string(build_violation v);

class build_error : public std::invalid_argument {
  public:
    explicit build_error(build_violation v) : std::invalid_argument(to_string(v)), violation_(v) {}

    build_violation violation() const noexcept { return violation_; }

  private:
    build_violation violation_;
};

}  // namespace dcc

#endif
