#ifndef DCC_POLY_HPP
#define DCC_POLY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcc/f4.hpp"

namespace dcc {

// Polynomial over GF(4).  Coefficients are little-endian (index i holds the
// x^i coefficient) and kept normalized: no trailing zeros, the zero
// polynomial is the empty sequence.  degree() of the zero polynomial is
// nullopt, standing in for minus infinity.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<F4> coeffs) : c_(std::move(coeffs)) { normalize(); }
    explicit Poly(F4 constant) { if (!constant.is_zero()) c_.push_back(constant); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(F4::one()); }
    static Poly x() { return monomial(1); }
    static Poly monomial(std::size_t k, F4 coeff = F4::one());
    // x^n - 1 (equal to x^n + 1 in characteristic two).
    static Poly xn_minus_1(std::size_t n);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == F4::one(); }
    bool is_monic() const { return !c_.empty() && c_.back() == F4::one(); }

    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }

    const std::vector<F4>& coeffs() const { return c_; }
    F4 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F4::zero(); }
    F4 constant_term() const { return coeff(0); }
    F4 leading() const;

    // Coefficients padded with zeros up to len entries; requires deg < len.
    std::vector<F4> to_vector(std::size_t len) const;

    friend Poly operator+(const Poly& f, const Poly& g);
    friend Poly operator-(const Poly& f, const Poly& g) { return f + g; }
    friend Poly operator*(const Poly& f, const Poly& g);
    friend Poly operator*(F4 s, const Poly& f);
    Poly& operator+=(const Poly& g) { *this = *this + g; return *this; }
    Poly& operator*=(const Poly& g) { *this = *this * g; return *this; }

    Poly make_monic() const;

    friend bool operator==(const Poly& f, const Poly& g) = default;

    // "1,g,0,1" (little-endian comma list); the zero polynomial is "0".
    std::string to_string() const;
    // Human form with descending powers, e.g. "x^3+g*x+1".
    std::string to_human() const;
    // Accepts either the comma list or the human form ("1+g*x+x^3").
    static Poly from_string(const std::string& text);

  private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F4> c_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

// f = q*g + r with deg r < deg g; the zero divisor is a domain error.
DivMod divmod(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);

bool divides(const Poly& d, const Poly& f);

// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& f, const Poly& g);

// x^deg(f) * f(1/x): the coefficient sequence reversed, then normalized.
// The zero polynomial is a domain error.
Poly reciprocal(const Poly& f);

// Reduction in F4[x]/(x^n - 1): coefficient i folds onto i mod n.
Poly mod_xn_minus_1(const Poly& f, std::size_t n);
// x * f mod x^n - 1, the cyclic right-shift of the length-n coefficient vector.
Poly shift_mod(const Poly& f, std::size_t n);

// Catalog order: degree first (zero polynomial least), then lexicographic on
// the coefficient sequence.
bool poly_order_less(const Poly& f, const Poly& g);

struct Factorization {
    std::size_t n = 0;  // of x^n - 1
    std::vector<std::pair<Poly, int>> factors;  // (monic irreducible, multiplicity)

    Poly product() const;
    std::string to_string() const;  // "(x+1)^2(x^2+x+1)" style
};

inline constexpr std::size_t default_factor_bound = 30;

// Exact factorization of x^n - 1 over GF(4); 1 <= n <= bound.
Factorization factor_xn_minus_1(std::size_t n, std::size_t bound = default_factor_bound);

// All monic divisors of x^n - 1, sorted by (degree, coefficient sequence).
std::vector<Poly> divisors_of_xn_minus_1(std::size_t n, std::size_t bound = default_factor_bound);

}  // namespace dcc

#endif
