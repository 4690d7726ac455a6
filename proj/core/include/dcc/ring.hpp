#ifndef DCC_RING_HPP
#define DCC_RING_HPP

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

#include "dcc/f4.hpp"

namespace dcc {

// Element a + v*b of the 16-element ring F4 + vF4 with v^2 = v.
// The ring splits as (1+v)F4 (+) vF4: evaluating at v=0 gives a, at v=1
// gives a+b, and an element is a unit exactly when both evaluations are
// nonzero.
class R {
  public:
    constexpr R() = default;
    constexpr R(F4 a, F4 b) : a_(a), b_(b) {}

    static constexpr R zero() { return R(); }
    static constexpr R one() { return R(F4::one(), F4::zero()); }
    static constexpr R v() { return R(F4::zero(), F4::one()); }

    constexpr F4 a() const { return a_; }
    constexpr F4 b() const { return b_; }
    constexpr bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    friend constexpr R operator+(R x, R y) { return R(x.a_ + y.a_, x.b_ + y.b_); }
    friend constexpr R operator-(R x, R y) { return x + y; }

    // (a1 + v b1)(a2 + v b2) = a1 a2 + v (a1 b2 + a2 b1 + b1 b2), using v^2 = v.
    friend constexpr R operator*(R x, R y) {
        return R(x.a_ * y.a_, x.a_ * y.b_ + y.a_ * x.b_ + x.b_ * y.b_);
    }

    constexpr R& operator+=(R y) { a_ += y.a_; b_ += y.b_; return *this; }

    constexpr bool is_unit() const { return !a_.is_zero() && !(a_ + b_).is_zero(); }

    // Watson-Crick complement on ring elements: x + 1.
    constexpr R complement() const { return R(a_ + F4::one(), b_); }

    // Gray map a + v*b -> (a+b, a).
    constexpr std::pair<F4, F4> gray() const { return {a_ + b_, a_}; }

    // CRT coordinates (v=0 component, v=1 component).
    constexpr std::pair<F4, F4> crt_split() const { return {a_, a_ + b_}; }

    // Inverse of crt_split: (1+v)c1 + v*c2.
    static constexpr R crt_join(F4 c1, F4 c2) { return R(c1, c1 + c2); }

    friend constexpr bool operator==(R x, R y) = default;
    friend constexpr auto operator<=>(R x, R y) = default;

    static constexpr std::array<R, 16> all() {
        std::array<R, 16> out{};
        for (std::uint8_t i = 0; i < 16; ++i) out[i] = R(F4(i & 3u), F4(i >> 2));
        return out;
    }

    // Text form "a+v*b" over the symbol alphabet, e.g. "g+v*1".
    std::string to_string() const {
        std::string s;
        s += a_.symbol();
        s += "+v*";
        s += b_.symbol();
        return s;
    }

    static R from_string(const std::string& s) {
        if (s.size() != 5 || s[1] != '+' || s[2] != 'v' || s[3] != '*')
            throw std::invalid_argument("ring element must have the form a+v*b: " + s);
        return R(F4::from_symbol(s[0]), F4::from_symbol(s[4]));
    }

  private:
    F4 a_;
    F4 b_;
};

}  // namespace dcc

#endif
