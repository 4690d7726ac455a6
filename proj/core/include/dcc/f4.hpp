#ifndef DCC_F4_HPP
#define DCC_F4_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dcc {

// Element of GF(4) = {0, 1, g, h} where g is a root of x^2 + x + 1 and
// h = g + 1 = g^2.  Stored as two bits: bit 0 is the unit coefficient,
// bit 1 the g coefficient.  Addition is XOR (characteristic two),
// multiplication a 16-entry table.
class F4 {
  public:
    constexpr F4() = default;
    constexpr explicit F4(std::uint8_t bits) : bits_(static_cast<std::uint8_t>(bits & 3u)) {}

    static constexpr F4 zero() { return F4(0); }
    static constexpr F4 one() { return F4(1); }
    static constexpr F4 g() { return F4(2); }
    static constexpr F4 h() { return F4(3); }

    constexpr std::uint8_t bits() const { return bits_; }
    constexpr bool is_zero() const { return bits_ == 0; }

    friend constexpr F4 operator+(F4 x, F4 y) { return F4(static_cast<std::uint8_t>(x.bits_ ^ y.bits_)); }
    friend constexpr F4 operator-(F4 x, F4 y) { return x + y; }

    friend constexpr F4 operator*(F4 x, F4 y) { return F4(mul_table[x.bits_][y.bits_]); }

    constexpr F4& operator+=(F4 y) { bits_ ^= y.bits_; return *this; }
    constexpr F4& operator*=(F4 y) { bits_ = mul_table[bits_][y.bits_]; return *this; }

    // Multiplicative inverse; the zero element has none.
    F4 inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero in GF(4)");
        return F4(inv_table[bits_]);
    }

    friend constexpr bool operator==(F4 x, F4 y) = default;
    friend constexpr auto operator<=>(F4 x, F4 y) = default;

    static constexpr std::array<F4, 4> all() { return {F4(0), F4(1), F4(2), F4(3)}; }

    // Single-character text form: "0", "1", "g", "h".
    constexpr char symbol() const { return symbols[bits_]; }

    static F4 from_symbol(char c) {
        switch (c) {
            case '0': return zero();
            case '1': return one();
            case 'g': return g();
            case 'h': return h();
            default: throw std::invalid_argument(std::string("not a GF(4) symbol: ") + c);
        }
    }

  private:
    static constexpr char symbols[4] = {'0', '1', 'g', 'h'};

    // g*g = h, g*h = 1, h*h = g.
    static constexpr std::uint8_t mul_table[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},
        {0, 3, 1, 2},
    };
    static constexpr std::uint8_t inv_table[4] = {0, 1, 3, 2};

    std::uint8_t bits_ = 0;
};

}  // namespace dcc

#endif
