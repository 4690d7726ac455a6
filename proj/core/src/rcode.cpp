#include "dcc/rcode.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace dcc {

bool RWord::is_zero() const {
    auto zero = [](R x) { return x.is_zero(); };
    return std::all_of(left.begin(), left.end(), zero) &&
           std::all_of(right.begin(), right.end(), zero);
}

RWord operator+(const RWord& x, const RWord& y) {
    if (x.left.size() != y.left.size() || x.right.size() != y.right.size())
        throw std::invalid_argument("R-word length mismatch");
    RWord out = x;
    for (std::size_t i = 0; i < out.left.size(); ++i) out.left[i] += y.left[i];
    for (std::size_t i = 0; i < out.right.size(); ++i) out.right[i] += y.right[i];
    return out;
}

std::size_t hamming_weight(const RWord& w) {
    std::size_t count = 0;
    for (R x : w.left) count += !x.is_zero();
    for (R x : w.right) count += !x.is_zero();
    return count;
}

namespace {

std::vector<R> rotate_right(const std::vector<R>& v) {
    if (v.empty()) return v;
    std::vector<R> out(v.size());
    out[0] = v.back();
    std::copy(v.begin(), v.end() - 1, out.begin() + 1);
    return out;
}

}  // namespace

RWord double_shift(const RWord& w) { return {rotate_right(w.left), rotate_right(w.right)}; }

RWord word_reverse(const RWord& w) {
    RWord out = w;
    std::reverse(out.left.begin(), out.left.end());
    std::reverse(out.right.begin(), out.right.end());
    return out;
}

RWord word_complement(const RWord& w) {
    RWord out = w;
    for (R& x : out.left) x = x.complement();
    for (R& x : out.right) x = x.complement();
    return out;
}

RWord word_wcc(const RWord& w) { return word_complement(word_reverse(w)); }

std::string packed(const RWord& w) {
    std::string key;
    key.reserve(2 * (w.left.size() + w.right.size()));
    auto append = [&](R x) {
        key += x.a().symbol();
        key += x.b().symbol();
    };
    for (R x : w.left) append(x);
    for (R x : w.right) append(x);
    return key;
}

std::pair<DoubleWord, DoubleWord> word_split(const RWord& w) {
    DoubleWord w1, w2;
    w1.left.reserve(w.left.size());
    w2.left.reserve(w.left.size());
    w1.right.reserve(w.right.size());
    w2.right.reserve(w.right.size());
    for (R x : w.left) {
        const auto [c1, c2] = x.crt_split();
        w1.left.push_back(c1);
        w2.left.push_back(c2);
    }
    for (R x : w.right) {
        const auto [c1, c2] = x.crt_split();
        w1.right.push_back(c1);
        w2.right.push_back(c2);
    }
    return {std::move(w1), std::move(w2)};
}

RWord word_join(const DoubleWord& w1, const DoubleWord& w2) {
    if (w1.left.size() != w2.left.size() || w1.right.size() != w2.right.size())
        throw std::invalid_argument("component word length mismatch");
    RWord out;
    out.left.reserve(w1.left.size());
    out.right.reserve(w1.right.size());
    for (std::size_t i = 0; i < w1.left.size(); ++i)
        out.left.push_back(R::crt_join(w1.left[i], w2.left[i]));
    for (std::size_t i = 0; i < w1.right.size(); ++i)
        out.right.push_back(R::crt_join(w1.right[i], w2.right[i]));
    return out;
}

RCode::RCode(F4Code c1, F4Code c2) : c1_(std::move(c1)), c2_(std::move(c2)) {
    if (c1_.m() != c2_.m() || c1_.n() != c2_.n())
        throw std::invalid_argument("component codes must share the length pair (m, n)");
}

unsigned long long RCode::cardinality() const {
    if (span_exponent() > 31) throw std::overflow_error("code size exceeds 64-bit range");
    return c1_.cardinality() * c2_.cardinality();
}

bool RCode::contains(const RWord& w) const {
    const auto [w1, w2] = word_split(w);
    return c1_.contains(w1) && c2_.contains(w2);
}

void RCode::for_each_codeword(std::size_t cap_exponent,
                              const std::function<void(const RWord&)>& fn) const {
    if (span_exponent() > cap_exponent) throw cap_exceeded(span_exponent(), cap_exponent);
    const std::vector<DoubleWord> first = c1_.codewords(cap_exponent);
    c2_.for_each_codeword(cap_exponent, [&](const DoubleWord& w2) {
        for (const DoubleWord& w1 : first) fn(word_join(w1, w2));
    });
}

std::vector<RWord> RCode::codewords(std::size_t cap_exponent) const {
    std::vector<RWord> out;
    for_each_codeword(cap_exponent, [&](const RWord& w) { out.push_back(w); });
    return out;
}

namespace {

std::vector<R> join_coefficients(const Poly& f1, const Poly& f2) {
    const std::size_t len = std::max(f1.coeffs().size(), f2.coeffs().size());
    std::vector<R> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) out.push_back(R::crt_join(f1.coeff(i), f2.coeff(i)));
    return out;
}

}  // namespace

std::pair<RCode::GeneratorPair, RCode::GeneratorPair> RCode::combined_generators() const {
    GeneratorPair first{join_coefficients(c1_.b(), c2_.b()), {}};
    GeneratorPair second{join_coefficients(c1_.l(), c2_.l()),
                         join_coefficients(c1_.a(), c2_.a())};
    return {std::move(first), std::move(second)};
}

bool double_shift_closed(const std::vector<RWord>& words) {
    std::unordered_set<std::string> keys;
    for (const RWord& w : words) keys.insert(packed(w));
    for (const RWord& w : words)
        if (!keys.contains(packed(double_shift(w)))) return false;
    return true;
}

bool r_double_shift_closed(const RCode& code, std::size_t cap_exponent) {
    return double_shift_closed(code.codewords(cap_exponent));
}

namespace {

bool closed_under(const RCode& code, std::size_t cap_exponent, RWord (*op)(const RWord&)) {
    std::unordered_set<std::string> words;
    code.for_each_codeword(cap_exponent, [&](const RWord& w) { words.insert(packed(w)); });
    bool closed = true;
    code.for_each_codeword(cap_exponent, [&](const RWord& w) {
        if (closed && !words.contains(packed(op(w)))) closed = false;
    });
    return closed;
}

}  // namespace

bool reverse_closed_bruteforce(const RCode& code, std::size_t cap_exponent) {
    return closed_under(code, cap_exponent, word_reverse);
}

bool wcc_closed_bruteforce(const RCode& code, std::size_t cap_exponent) {
    return closed_under(code, cap_exponent, word_wcc);
}

RReversibilityVerdict decide_reversible(const RCode& code, std::size_t cap_exponent) {
    const ReversibilityVerdict v1 = decide_reversible(code.c1(), cap_exponent);
    const ReversibilityVerdict v2 = decide_reversible(code.c2(), cap_exponent);
    return {v1.reversible && v2.reversible, v1.by_criterion && v2.by_criterion};
}

bool r_is_reversible(const RCode& code, std::size_t cap_exponent) {
    return decide_reversible(code, cap_exponent).reversible;
}

bool r_is_reverse_complement(const RCode& code, std::size_t cap_exponent) {
    if (!r_is_reversible(code, cap_exponent)) return false;
    const DoubleWord ones = DoubleWord::all_ones(code.m(), code.n());
    return code.c1().contains(ones) && code.c2().contains(ones);
}

std::size_t r_min_distance(const RCode& code, std::size_t cap_exponent) {
    if (code.span_exponent() == 0)
        throw std::domain_error("minimum distance is undefined for the zero code");
    std::size_t best = code.m() + code.n() + 1;
    code.for_each_codeword(cap_exponent, [&](const RWord& w) {
        const std::size_t weight = hamming_weight(w);
        if (weight > 0 && weight < best) best = weight;
    });
    return best;
}

}  // namespace dcc
