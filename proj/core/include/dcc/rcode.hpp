#ifndef DCC_RCODE_HPP
#define DCC_RCODE_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dcc/f4code.hpp"
#include "dcc/ring.hpp"

namespace dcc {

// Codeword over R = F4 + vF4: an m-block and an n-block.
struct RWord {
    std::vector<R> left;
    std::vector<R> right;

    static RWord zeros(std::size_t m, std::size_t n) {
        return {std::vector<R>(m, R::zero()), std::vector<R>(n, R::zero())};
    }
    static RWord all_ones(std::size_t m, std::size_t n) {
        return {std::vector<R>(m, R::one()), std::vector<R>(n, R::one())};
    }

    bool is_zero() const;

    friend bool operator==(const RWord&, const RWord&) = default;
};

RWord operator+(const RWord& x, const RWord& y);
// Number of nonzero R-symbols.
std::size_t hamming_weight(const RWord& w);

RWord double_shift(const RWord& w);
RWord word_reverse(const RWord& w);
RWord word_complement(const RWord& w);
// Watson-Crick complement: complement of the reverse.
RWord word_wcc(const RWord& w);

std::string packed(const RWord& w);

// Coordinatewise CRT coordinates: (v=0 word, v=1 word).
std::pair<DoubleWord, DoubleWord> word_split(const RWord& w);
RWord word_join(const DoubleWord& w1, const DoubleWord& w2);

// Double cyclic code over R, stored as its CRT component pair
// (1+v)C1 (+) vC2.  All classification routes through the components.
class RCode {
  public:
    RCode(F4Code c1, F4Code c2);  // throws std::invalid_argument on length mismatch

    const F4Code& c1() const { return c1_; }
    const F4Code& c2() const { return c2_; }
    std::size_t m() const { return c1_.m(); }
    std::size_t n() const { return c1_.n(); }

    std::size_t span_exponent() const { return c1_.span_exponent() + c2_.span_exponent(); }
    unsigned long long cardinality() const;

    bool contains(const RWord& w) const;

    void for_each_codeword(std::size_t cap_exponent,
                           const std::function<void(const RWord&)>& fn) const;
    std::vector<RWord> codewords(std::size_t cap_exponent) const;

    // Generator pair over R, little-endian coefficient vectors:
    // ((1+v)b1 + v b2 | 0) and ((1+v)l1 + v l2 | (1+v)a1 + v a2).
    struct GeneratorPair {
        std::vector<R> left;
        std::vector<R> right;
    };
    std::pair<GeneratorPair, GeneratorPair> combined_generators() const;

  private:
    F4Code c1_;
    F4Code c2_;
};

// Closure of an explicit word set under the simultaneous shift.
bool double_shift_closed(const std::vector<RWord>& words);
// The same check on the enumerated code.
bool r_double_shift_closed(const RCode& code, std::size_t cap_exponent = default_cap_exponent);

// Enumerated closure oracles on the joined code.
bool reverse_closed_bruteforce(const RCode& code, std::size_t cap_exponent = default_cap_exponent);
bool wcc_closed_bruteforce(const RCode& code, std::size_t cap_exponent = default_cap_exponent);

struct RReversibilityVerdict {
    bool reversible;
    bool by_criterion;  // both components decided by the polynomial criterion
};

// Reversible iff both components are reversible.
RReversibilityVerdict decide_reversible(const RCode& code,
                                        std::size_t cap_exponent = default_cap_exponent);
bool r_is_reversible(const RCode& code, std::size_t cap_exponent = default_cap_exponent);

// Reversible-complement iff reversible and the all-ones word is in the code.
bool r_is_reverse_complement(const RCode& code, std::size_t cap_exponent = default_cap_exponent);

// Minimum Hamming distance over R-symbols; undefined for the zero code.
std::size_t r_min_distance(const RCode& code, std::size_t cap_exponent = default_cap_exponent);

}  // namespace dcc

#endif
