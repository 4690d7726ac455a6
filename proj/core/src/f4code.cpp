#include "dcc/f4code.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "dcc/linalg.hpp"

namespace dcc {

bool DoubleWord::is_zero() const {
    auto zero = [](F4 x) { return x.is_zero(); };
    return std::all_of(left.begin(), left.end(), zero) &&
           std::all_of(right.begin(), right.end(), zero);
}

DoubleWord operator+(const DoubleWord& x, const DoubleWord& y) {
    if (x.left.size() != y.left.size() || x.right.size() != y.right.size())
        throw std::invalid_argument("double word length mismatch");
    DoubleWord out = x;
    for (std::size_t i = 0; i < out.left.size(); ++i) out.left[i] += y.left[i];
    for (std::size_t i = 0; i < out.right.size(); ++i) out.right[i] += y.right[i];
    return out;
}

std::size_t hamming_weight(const DoubleWord& w) {
    std::size_t count = 0;
    for (F4 x : w.left) count += !x.is_zero();
    for (F4 x : w.right) count += !x.is_zero();
    return count;
}

namespace {

std::vector<F4> rotate_right(const std::vector<F4>& v) {
    if (v.empty()) return v;
    std::vector<F4> out(v.size());
    out[0] = v.back();
    std::copy(v.begin(), v.end() - 1, out.begin() + 1);
    return out;
}

}  // namespace

DoubleWord double_shift(const DoubleWord& w) {
    return {rotate_right(w.left), rotate_right(w.right)};
}

DoubleWord reverse_word(const DoubleWord& w) {
    DoubleWord out = w;
    std::reverse(out.left.begin(), out.left.end());
    std::reverse(out.right.begin(), out.right.end());
    return out;
}

std::string packed(const DoubleWord& w) {
    std::string key;
    key.reserve(w.left.size() + w.right.size());
    for (F4 x : w.left) key += x.symbol();
    for (F4 x : w.right) key += x.symbol();
    return key;
}

std::string to_string(build_violation v) {
    switch (v) {
        case build_violation::b_not_divisor: return "b does not divide x^m-1";
        case build_violation::a_not_divisor: return "a does not divide x^n-1";
        case build_violation::degree_bound: return "deg(l) must be less than deg(b)";
        case build_violation::compatibility: return "b does not divide l*(x^n-1)/a";
    }
    return "unknown violation";
}

std::optional<build_violation> F4Code::validate(std::size_t m, std::size_t n, const Poly& b,
                                                const Poly& l, const Poly& a) {
    if (m == 0 || n == 0) throw std::invalid_argument("lengths must be positive");
    const Poly bm = b.make_monic();
    const Poly am = a.make_monic();
    if (bm.is_zero() || !divides(bm, Poly::xn_minus_1(m))) return build_violation::b_not_divisor;
    if (am.is_zero() || !divides(am, Poly::xn_minus_1(n))) return build_violation::a_not_divisor;
    if (!l.is_zero() && *l.degree() >= *bm.degree()) return build_violation::degree_bound;
    if (!divides(bm, l * (Poly::xn_minus_1(n) / am))) return build_violation::compatibility;
    return std::nullopt;
}

F4Code::F4Code(std::size_t m, std::size_t n, Poly b, Poly l, Poly a, bool normalize_l)
    : m_(m), n_(n), b_(b.make_monic()), l_(std::move(l)), a_(a.make_monic()) {
    if (normalize_l && !b_.is_zero()) l_ = l_ % b_;
    if (auto violation = validate(m_, n_, b_, l_, a_)) throw build_error(*violation);

    span_exponent_ = (m_ - *b_.degree()) + (n_ - *a_.degree());

    // S1: shifts of (b | 0); empty when b = x^m - 1.
    Poly left = mod_xn_minus_1(b_, m_);
    for (std::size_t i = 0; i + *b_.degree() < m_; ++i) {
        generators_.push_back({left.to_vector(m_), std::vector<F4>(n_, F4::zero())});
        left = shift_mod(left, m_);
    }
    // S2: shifts of (l | a); empty when a = x^n - 1.
    Poly l_part = mod_xn_minus_1(l_, m_);
    Poly a_part = mod_xn_minus_1(a_, n_);
    for (std::size_t i = 0; i + *a_.degree() < n_; ++i) {
        generators_.push_back({l_part.to_vector(m_), a_part.to_vector(n_)});
        l_part = shift_mod(l_part, m_);
        a_part = shift_mod(a_part, n_);
    }

    F4Matrix mat(generators_.size(), m_ + n_);
    for (std::size_t r = 0; r < generators_.size(); ++r) {
        for (std::size_t c = 0; c < m_; ++c) mat.at(r, c) = generators_[r].left[c];
        for (std::size_t c = 0; c < n_; ++c) mat.at(r, m_ + c) = generators_[r].right[c];
    }
    pivots_ = mat.rref();
    basis_rows_.resize(pivots_.size());
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        basis_rows_[r].resize(m_ + n_);
        for (std::size_t c = 0; c < m_ + n_; ++c) basis_rows_[r][c] = mat.at(r, c);
    }
}

unsigned long long F4Code::cardinality() const {
    if (rank() > 31) throw std::overflow_error("code size exceeds 64-bit range");
    return 1ull << (2 * rank());
}

bool F4Code::contains(const DoubleWord& w) const {
    if (w.left.size() != m_ || w.right.size() != n_)
        throw std::invalid_argument("word length does not match the code");
    std::vector<F4> vec(m_ + n_);
    std::copy(w.left.begin(), w.left.end(), vec.begin());
    std::copy(w.right.begin(), w.right.end(), vec.begin() + m_);
    for (std::size_t r = 0; r < basis_rows_.size(); ++r) {
        const F4 factor = vec[pivots_[r]];
        if (factor.is_zero()) continue;
        for (std::size_t c = 0; c < vec.size(); ++c) vec[c] += factor * basis_rows_[r][c];
    }
    return std::all_of(vec.begin(), vec.end(), [](F4 x) { return x.is_zero(); });
}

void F4Code::for_each_codeword(std::size_t cap_exponent,
                               const std::function<void(const DoubleWord&)>& fn) const {
    if (span_exponent_ > cap_exponent) throw cap_exceeded(span_exponent_, cap_exponent);

    const bool independent = rank() == generators_.size();
    std::unordered_set<std::string> seen;
    DoubleWord current = DoubleWord::zeros(m_, n_);

    auto emit = [&](const DoubleWord& w) {
        if (independent || seen.insert(packed(w)).second) fn(w);
    };

    // Depth-first over scalar choices for each generator, updating in place.
    auto recurse = [&](auto&& self, std::size_t level) -> void {
        if (level == generators_.size()) {
            emit(current);
            return;
        }
        for (F4 scalar : F4::all()) {
            DoubleWord saved;
            if (!scalar.is_zero()) {
                saved = current;
                const DoubleWord& gen = generators_[level];
                for (std::size_t i = 0; i < m_; ++i) current.left[i] += scalar * gen.left[i];
                for (std::size_t i = 0; i < n_; ++i) current.right[i] += scalar * gen.right[i];
            }
            self(self, level + 1);
            if (!scalar.is_zero()) current = std::move(saved);
        }
    };
    recurse(recurse, 0);
}

std::vector<DoubleWord> F4Code::codewords(std::size_t cap_exponent) const {
    std::vector<DoubleWord> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for_each_codeword(cap_exponent, [&](const DoubleWord& w) { out.push_back(w); });
    return out;
}

bool reverse_closed_bruteforce(const F4Code& code, std::size_t cap_exponent) {
    std::unordered_set<std::string> words;
    code.for_each_codeword(cap_exponent, [&](const DoubleWord& w) { words.insert(packed(w)); });
    bool closed = true;
    code.for_each_codeword(cap_exponent, [&](const DoubleWord& w) {
        if (closed && !words.contains(packed(reverse_word(w)))) closed = false;
    });
    return closed;
}

CriterionResult reversibility_criterion(const F4Code& code) {
    const Poly& b = code.b();
    const Poly& l = code.l();
    const Poly& a = code.a();
    const auto m = static_cast<long long>(code.m());
    const auto n = static_cast<long long>(code.n());
    const auto deg_a = static_cast<long long>(*a.degree());

    if (!l.is_zero()) {
        const auto deg_l = static_cast<long long>(*l.degree());
        if (m - deg_l < n - deg_a) return CriterionResult::hypothesis_not_met;
    }
    if (reciprocal(b) != b) return CriterionResult::not_reversible;
    if (reciprocal(a) != a) return CriterionResult::not_reversible;
    if (!l.is_zero()) {
        const auto deg_l = static_cast<long long>(*l.degree());
        const auto exponent = static_cast<std::size_t>(m - n + deg_a - deg_l);
        const Poly difference = Poly::monomial(exponent) * reciprocal(l) - l;
        if (!divides(b, difference)) return CriterionResult::not_reversible;
    }
    return CriterionResult::reversible;
}

ReversibilityVerdict decide_reversible(const F4Code& code, std::size_t cap_exponent) {
    switch (reversibility_criterion(code)) {
        case CriterionResult::reversible: return {true, true};
        case CriterionResult::not_reversible: return {false, true};
        case CriterionResult::hypothesis_not_met: break;
    }
    return {reverse_closed_bruteforce(code, cap_exponent), false};
}

std::size_t min_distance(const F4Code& code, std::size_t cap_exponent) {
    if (code.is_zero_code())
        throw std::domain_error("minimum distance is undefined for the zero code");
    std::size_t best = code.m() + code.n() + 1;
    code.for_each_codeword(cap_exponent, [&](const DoubleWord& w) {
        const std::size_t weight = hamming_weight(w);
        if (weight > 0 && weight < best) best = weight;
    });
    return best;
}

std::vector<unsigned long long> weight_enumerator(const F4Code& code, std::size_t cap_exponent) {
    std::vector<unsigned long long> counts(code.m() + code.n() + 1, 0);
    code.for_each_codeword(cap_exponent,
                           [&](const DoubleWord& w) { ++counts[hamming_weight(w)]; });
    return counts;
}

Projections projections(const F4Code& code) {
    // The m-block projection is the cyclic code generated by gcd(b, l); the
    // n-block projection is generated by a.
    return {gcd(code.b(), code.l()), code.a()};
}

bool is_separable(const F4Code& code) {
    const Projections proj = projections(code);
    const std::size_t product_exponent =
        (code.m() - *proj.left.degree()) + (code.n() - *proj.right.degree());
    return product_exponent == code.span_exponent();
}

bool double_shift_closed(const std::vector<DoubleWord>& words) {
    std::unordered_set<std::string> keys;
    for (const DoubleWord& w : words) keys.insert(packed(w));
    for (const DoubleWord& w : words)
        if (!keys.contains(packed(double_shift(w)))) return false;
    return true;
}

}  // namespace dcc
