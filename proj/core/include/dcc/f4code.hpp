#ifndef DCC_F4CODE_HPP
#define DCC_F4CODE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dcc/errors.hpp"
#include "dcc/f4.hpp"
#include "dcc/poly.hpp"

namespace dcc {

inline constexpr std::size_t default_cap_exponent = 12;  // enumeration cap 4^12

// Codeword of a double cyclic code: an m-block and an n-block over GF(4).
struct DoubleWord {
    std::vector<F4> left;
    std::vector<F4> right;

    static DoubleWord zeros(std::size_t m, std::size_t n) {
        return {std::vector<F4>(m, F4::zero()), std::vector<F4>(n, F4::zero())};
    }
    static DoubleWord all_ones(std::size_t m, std::size_t n) {
        return {std::vector<F4>(m, F4::one()), std::vector<F4>(n, F4::one())};
    }

    bool is_zero() const;

    friend bool operator==(const DoubleWord&, const DoubleWord&) = default;
};

DoubleWord operator+(const DoubleWord& x, const DoubleWord& y);
std::size_t hamming_weight(const DoubleWord& w);

// Simultaneous cyclic right-shift of both blocks.
DoubleWord double_shift(const DoubleWord& w);
// Coordinate reversal within each block.
DoubleWord reverse_word(const DoubleWord& w);

// Compact key for hash sets: one symbol character per coordinate.
std::string packed(const DoubleWord& w);

// Double cyclic code over GF(4) of length (m, n), generated by
// (b | 0) and (l | a) with b | x^m - 1, a | x^n - 1, deg l < deg b and
// b | l * (x^n - 1) / a.  Immutable once built; the minimal generating
// set and a reduced basis for membership tests are precomputed.
class F4Code {
  public:
    // nullopt when (m, n, b, l, a) is a valid generator triple, otherwise the
    // first violated condition.  b and a are taken up to scalar factors.
    static std::optional<build_violation> validate(std::size_t m, std::size_t n, const Poly& b,
                                                   const Poly& l, const Poly& a);

    // Throws build_error on invalid triples.  With normalize_l, l is replaced
    // by l mod b before validation.
    F4Code(std::size_t m, std::size_t n, Poly b, Poly l, Poly a, bool normalize_l = false);

    std::size_t m() const { return m_; }
    std::size_t n() const { return n_; }
    const Poly& b() const { return b_; }
    const Poly& l() const { return l_; }
    const Poly& a() const { return a_; }

    // (m - deg b) + (n - deg a), the exponent of the code size 4^k.
    std::size_t span_exponent() const { return span_exponent_; }
    std::size_t rank() const { return pivots_.size(); }
    unsigned long long cardinality() const;
    bool is_zero_code() const { return rank() == 0; }

    // Minimal generating set: the first m - deg b shifts of (b | 0) followed
    // by the first n - deg a shifts of (l | a).
    const std::vector<DoubleWord>& generating_set() const { return generators_; }

    bool contains(const DoubleWord& w) const;

    // Every codeword exactly once; throws cap_exceeded when the span is
    // larger than 4^cap_exponent.
    void for_each_codeword(std::size_t cap_exponent,
                           const std::function<void(const DoubleWord&)>& fn) const;
    std::vector<DoubleWord> codewords(std::size_t cap_exponent) const;

  private:
    std::size_t m_;
    std::size_t n_;
    Poly b_;
    Poly l_;
    Poly a_;
    std::size_t span_exponent_;
    std::vector<DoubleWord> generators_;
    std::vector<std::vector<F4>> basis_rows_;  // reduced row echelon form
    std::vector<std::size_t> pivots_;
};

// Enumerated reverse-closure check, independent of the criterion and of the
// rank-based membership path.
bool reverse_closed_bruteforce(const F4Code& code, std::size_t cap_exponent = default_cap_exponent);

enum class CriterionResult { reversible, not_reversible, hypothesis_not_met };

// Reversibility test on the generator polynomials: requires
// m - deg l >= n - deg a, then checks b = b*, a = a* and
// b | x^(m-n+deg a-deg l) l* - l.  l = 0 meets the hypothesis and satisfies
// the third condition vacuously.
CriterionResult reversibility_criterion(const F4Code& code);

struct ReversibilityVerdict {
    bool reversible;
    bool by_criterion;  // false when decided by enumeration fallback
};

// Criterion when its hypothesis holds, enumeration fallback otherwise.
ReversibilityVerdict decide_reversible(const F4Code& code,
                                       std::size_t cap_exponent = default_cap_exponent);

// Minimum Hamming distance (= minimum nonzero weight); the zero code has
// none and raises std::domain_error.
std::size_t min_distance(const F4Code& code, std::size_t cap_exponent = default_cap_exponent);

// Coefficients of the Hamming weight enumerator, index = weight, length
// m + n + 1; coefficients sum to the code size.
std::vector<unsigned long long> weight_enumerator(const F4Code& code,
                                                  std::size_t cap_exponent = default_cap_exponent);

struct Projections {
    Poly left;   // generator of the projection onto the m-block
    Poly right;  // generator of the projection onto the n-block
};

Projections projections(const F4Code& code);

// Whether the code is the direct product of its two projections.
bool is_separable(const F4Code& code);

// Closure of an explicit word set under the simultaneous shift.
bool double_shift_closed(const std::vector<DoubleWord>& words);

}  // namespace dcc

#endif
