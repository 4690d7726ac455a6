#include "dcc/poly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "dcc/linalg.hpp"

namespace dcc {

Poly Poly::monomial(std::size_t k, F4 coeff) {
    if (coeff.is_zero()) return Poly();
    std::vector<F4> c(k + 1, F4::zero());
    c[k] = coeff;
    return Poly(std::move(c));
}

Poly Poly::xn_minus_1(std::size_t n) {
    std::vector<F4> c(n + 1, F4::zero());
    c[0] = F4::one();
    c[n] = F4::one();
    return Poly(std::move(c));
}

F4 Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

std::vector<F4> Poly::to_vector(std::size_t len) const {
    if (c_.size() > len) throw std::invalid_argument("polynomial degree exceeds vector length");
    std::vector<F4> out(len, F4::zero());
    std::copy(c_.begin(), c_.end(), out.begin());
    return out;
}

Poly operator+(const Poly& f, const Poly& g) {
    std::vector<F4> c(std::max(f.c_.size(), g.c_.size()), F4::zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) + g.coeff(i);
    return Poly(std::move(c));
}

Poly operator*(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly();
    std::vector<F4> c(f.c_.size() + g.c_.size() - 1, F4::zero());
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
        if (f.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.c_.size(); ++j) c[i + j] += f.c_[i] * g.c_[j];
    }
    return Poly(std::move(c));
}

Poly operator*(F4 s, const Poly& f) {
    std::vector<F4> c(f.c_);
    for (F4& ci : c) ci *= s;
    return Poly(std::move(c));
}

Poly Poly::make_monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
}

DivMod divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    const std::size_t dg = *g.degree();
    std::vector<F4> rem(f.coeffs());
    std::vector<F4> quot(rem.size() > dg ? rem.size() - dg : 0, F4::zero());
    const F4 lead_inv = g.leading().inverse();
    for (std::size_t i = rem.size(); i-- > dg;) {
        if (rem[i].is_zero()) continue;
        const F4 factor = rem[i] * lead_inv;
        quot[i - dg] = factor;
        for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] += factor * g.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).quotient; }
Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).remainder; }

bool divides(const Poly& d, const Poly& f) {
    if (d.is_zero()) return f.is_zero();
    return divmod(f, d).remainder.is_zero();
}

Poly gcd(const Poly& f, const Poly& g) {
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.make_monic();
}

Poly reciprocal(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("reciprocal of the zero polynomial");
    std::vector<F4> c(f.coeffs());
    std::reverse(c.begin(), c.end());
    return Poly(std::move(c));
}

Poly mod_xn_minus_1(const Poly& f, std::size_t n) {
    if (n == 0) throw std::invalid_argument("modulus length must be positive");
    std::vector<F4> c(n, F4::zero());
    const auto& fc = f.coeffs();
    for (std::size_t i = 0; i < fc.size(); ++i) c[i % n] += fc[i];
    return Poly(std::move(c));
}

Poly shift_mod(const Poly& f, std::size_t n) {
    return mod_xn_minus_1(Poly::x() * f, n);
}

bool poly_order_less(const Poly& f, const Poly& g) {
    if (f.degree() != g.degree()) return f.degree() < g.degree();  // nullopt sorts first
    const auto& fc = f.coeffs();
    const auto& gc = g.coeffs();
    for (std::size_t i = 0; i < fc.size(); ++i)
        if (fc[i] != gc[i]) return fc[i] < gc[i];
    return false;
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ',';
        out += c_[i].symbol();
    }
    return out;
}

std::string Poly::to_human() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const F4 ci = c_[i];
        if (ci.is_zero()) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += ci.symbol();
        } else {
            if (ci != F4::one()) {
                out += ci.symbol();
                out += '*';
            }
            out += 'x';
            if (i > 1) out += '^' + std::to_string(i);
        }
    }
    return out;
}

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\t') out += c;
    return out;
}

// One term of the human form: "g", "g*x", "x", "x^3", "g*x^3".
Poly parse_term(const std::string& term) {
    if (term.empty()) throw std::invalid_argument("empty polynomial term");
    F4 coeff = F4::one();
    std::size_t pos = 0;
    if (term[0] != 'x') {
        coeff = F4::from_symbol(term[0]);
        pos = 1;
        if (pos < term.size() && term[pos] == '*') ++pos;
        if (pos == term.size()) return Poly(coeff);
    }
    if (pos >= term.size() || term[pos] != 'x')
        throw std::invalid_argument("malformed polynomial term: " + term);
    ++pos;
    std::size_t power = 1;
    if (pos < term.size()) {
        if (term[pos] != '^') throw std::invalid_argument("malformed polynomial term: " + term);
        const std::string exp = term.substr(pos + 1);
        if (exp.empty() || exp.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed exponent in term: " + term);
        power = std::stoul(exp);
    }
    return Poly::monomial(power, coeff);
}

}  // namespace

Poly Poly::from_string(const std::string& text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty polynomial text");
    if (s.find('x') == std::string::npos) {
        // comma list (single symbols are a one-element list)
        std::vector<F4> c;
        std::size_t start = 0;
        while (start <= s.size()) {
            const std::size_t comma = s.find(',', start);
            const std::string tok = s.substr(start, comma == std::string::npos ? comma : comma - start);
            if (tok.size() != 1) throw std::invalid_argument("malformed coefficient list: " + text);
            c.push_back(F4::from_symbol(tok[0]));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return Poly(std::move(c));
    }
    // human form; '-' and '+' coincide in characteristic two
    Poly out;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= s.size(); ++i) {
        if (i == s.size() || ((s[i] == '+' || s[i] == '-') && s[i - 1] != '^')) {
            out += parse_term(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

Poly Factorization::product() const {
    Poly out = Poly::one();
    for (const auto& [factor, multiplicity] : factors)
        for (int i = 0; i < multiplicity; ++i) out *= factor;
    return out;
}

std::string Factorization::to_string() const {
    std::string out;
    for (const auto& [factor, multiplicity] : factors) {
        out += '(' + factor.to_human() + ')';
        if (multiplicity > 1) out += '^' + std::to_string(multiplicity);
    }
    return out;
}

namespace {

// Distinct monic irreducible factors of a squarefree monic f, by Berlekamp's
// algorithm.  Over GF(4) the splitting step can try all four constants, so
// the whole procedure is deterministic.
std::vector<Poly> berlekamp_squarefree(const Poly& f) {
    const std::size_t d = *f.degree();
    if (d == 1) return {f};

    // Column i of Q is x^(4i) mod f; the fixed space of the Frobenius
    // q-power map is the null space of Q - I.
    const Poly x4 = Poly::monomial(4) % f;
    F4Matrix frobenius(d, d);
    Poly power = Poly::one();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t row = 0; row < d; ++row) frobenius.at(row, i) = power.coeff(row);
        frobenius.at(i, i) += F4::one();  // subtract the identity
        power = (power * x4) % f;
    }
    const std::vector<std::vector<F4>> basis = frobenius.null_space();
    const std::size_t factor_count = basis.size();

    std::vector<Poly> factors = {f};
    while (factors.size() < factor_count) {
        const std::size_t before = factors.size();
        for (const auto& vec : basis) {
            const Poly splitter{std::vector<F4>(vec)};
            for (F4 c : F4::all()) {
                std::vector<Poly> next;
                for (const Poly& g : factors) {
                    if (*g.degree() == 1) {
                        next.push_back(g);
                        continue;
                    }
                    const Poly h = gcd(g, splitter + Poly(c));
                    if (h.is_one() || h == g) {
                        next.push_back(g);
                    } else {
                        next.push_back(h);
                        next.push_back((g / h).make_monic());
                    }
                }
                factors = std::move(next);
                if (factors.size() == factor_count) break;
            }
            if (factors.size() == factor_count) break;
        }
        assert(factors.size() > before && "Berlekamp basis must split further");
        if (factors.size() == before) break;
    }
    return factors;
}

}  // namespace

Factorization factor_xn_minus_1(std::size_t n, std::size_t bound) {
    if (n == 0 || n > bound)
        throw std::invalid_argument("factorization length must satisfy 1 <= n <= " + std::to_string(bound));

    // x^(2^e * n') - 1 = (x^n' - 1)^(2^e) in characteristic two.
    int multiplicity = 1;
    std::size_t odd = n;
    while (odd % 2 == 0) {
        odd /= 2;
        multiplicity *= 2;
    }

    std::vector<Poly> irreducibles = berlekamp_squarefree(Poly::xn_minus_1(odd));
    std::sort(irreducibles.begin(), irreducibles.end(), poly_order_less);

    Factorization out;
    out.n = n;
    for (Poly& p : irreducibles) out.factors.emplace_back(std::move(p), multiplicity);
    return out;
}

std::vector<Poly> divisors_of_xn_minus_1(std::size_t n, std::size_t bound) {
    const Factorization fac = factor_xn_minus_1(n, bound);
    std::vector<Poly> divisors = {Poly::one()};
    for (const auto& [factor, multiplicity] : fac.factors) {
        std::vector<Poly> extended;
        extended.reserve(divisors.size() * (multiplicity + 1));
        for (const Poly& d : divisors) {
            Poly power = d;
            extended.push_back(power);
            for (int e = 1; e <= multiplicity; ++e) {
                power *= factor;
                extended.push_back(power);
            }
        }
        divisors = std::move(extended);
    }
    std::sort(divisors.begin(), divisors.end(), poly_order_less);
    return divisors;
}

}  // namespace dcc
