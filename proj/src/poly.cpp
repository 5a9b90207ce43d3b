#include "msym/poly.hpp"

#include <algorithm>

namespace msym {

Polynomial Polynomial::constant(const Ring& ring, std::size_t arity, const Coeff& c) {
    Polynomial p(ring, arity);
    p.add_term(Monomial(arity), c);
    return p;
}

Polynomial Polynomial::from_monomial(const Ring& ring, const Monomial& mu, const Coeff& c) {
    Polynomial p(ring, mu.arity());
    p.add_term(mu, c);
    return p;
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t arity, std::size_t i) {
    if (i < 1 || i > arity)
        throw Error("variable index out of range: y" + std::to_string(i) + " with arity " +
                    std::to_string(arity));
    Multidegree d(arity, 0);
    d[i - 1] = 1;
    return from_monomial(ring, Monomial(d), Coeff::one(ring));
}

bool Polynomial::has_constant_term() const {
    return terms_.count(Monomial(arity_)) != 0;
}

Coeff Polynomial::coefficient(const Monomial& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Coeff::zero(ring_) : it->second;
}

std::uint32_t Polynomial::total_degree() const {
    if (terms_.empty()) throw Error("degree of zero polynomial is undefined");
    return terms_.begin()->first.total_degree();
}

const std::pair<const Monomial, Coeff>& Polynomial::leading_term() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial is undefined");
    return *terms_.begin();
}

void Polynomial::add_term(const Monomial& mu, const Coeff& c) {
    if (mu.arity() != arity_) throw Error("monomial arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mu, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& rhs) const {
    if (!(ring_ == rhs.ring_)) throw Error("polynomial ring mismatch");
    if (arity_ != rhs.arity_) throw Error("polynomial arity mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    check_compatible(rhs);
    Polynomial out = *this;
    for (const auto& [mu, c] : rhs.terms_) out.add_term(mu, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    check_compatible(rhs);
    Polynomial out = *this;
    for (const auto& [mu, c] : rhs.terms_) out.add_term(mu, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    check_compatible(rhs);
    Polynomial out(ring_, arity_);
    for (const auto& [mu, c] : terms_)
        for (const auto& [nu, d] : rhs.terms_) out.add_term(mu * nu, c * d);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_, arity_);
    for (const auto& [mu, c] : terms_) out.terms_.emplace(mu, -c);
    return out;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
    Polynomial out(ring_, arity_);
    if (c.is_zero()) return out;
    for (const auto& [mu, d] : terms_) out.add_term(mu, c * d);
    return out;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
    Polynomial out = constant(ring_, arity_, Coeff::one(ring_));
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1u) out = out * base;
        base = base * base;
        k >>= 1u;
    }
    return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    if (!(ring_ == rhs.ring_) || arity_ != rhs.arity_) return false;
    if (terms_.size() != rhs.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = rhs.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (!(it->first == jt->first) || !(it->second == jt->second)) return false;
    }
    return true;
}

Polynomial Polynomial::eval_at(const std::vector<Polynomial>& args) const {
    if (args.size() != arity_)
        throw Error("substitution needs " + std::to_string(arity_) + " arguments, got " +
                    std::to_string(args.size()));
    if (arity_ == 0) {
        // Constants only; nothing to substitute but we still need a target shape.
        throw Error("substitution into a polynomial of arity 0 is undefined");
    }
    const Ring& tr = args[0].ring();
    std::size_t ta = args[0].arity();
    for (const auto& a : args) {
        if (!(a.ring() == tr) || a.arity() != ta)
            throw Error("substitution arguments must share one ring and arity");
    }
    Polynomial out(tr, ta);
    for (const auto& [mu, c] : terms_) {
        Polynomial term = Polynomial::constant(tr, ta, coerce(c, tr));
        for (std::size_t i = 0; i < arity_; ++i) {
            std::uint32_t e = mu.exponent(i);
            if (e > 0) term = term * args[i].pow(e);
        }
        out = out + term;
    }
    return out;
}

Polynomial Polynomial::permute_variables(const std::vector<std::size_t>& perm) const {
    if (perm.size() != arity_) throw Error("permutation size mismatch");
    Polynomial out(ring_, arity_);
    for (const auto& [mu, c] : terms_) {
        Multidegree d(arity_, 0);
        for (std::size_t i = 0; i < arity_; ++i) {
            if (perm[i] >= arity_) throw Error("permutation entry out of range");
            d[perm[i]] = mu.exponent(i);
        }
        out.add_term(Monomial(d), c);
    }
    return out;
}

bool Polynomial::is_symmetric() const {
    // Adjacent transpositions generate S_arity.
    for (std::size_t i = 0; i + 1 < arity_; ++i) {
        std::vector<std::size_t> perm(arity_);
        for (std::size_t j = 0; j < arity_; ++j) perm[j] = j;
        std::swap(perm[i], perm[i + 1]);
        if (!(permute_variables(perm) == *this)) return false;
    }
    return true;
}

Polynomial elementary_symmetric(const Ring& ring, std::size_t n, std::uint32_t k) {
    if (k > n) return Polynomial::zero(ring, n);
    if (k == 0) return Polynomial::constant(ring, n, Coeff::one(ring));
    // DP over prod_i (1 + x_i t), tracking t-coefficients up to degree k.
    std::vector<Polynomial> coeffs(k + 1, Polynomial::zero(ring, n));
    coeffs[0] = Polynomial::constant(ring, n, Coeff::one(ring));
    for (std::size_t i = 1; i <= n; ++i) {
        Polynomial xi = Polynomial::variable(ring, n, i);
        for (std::size_t d = std::min<std::size_t>(k, i); d >= 1; --d)
            coeffs[d] = coeffs[d] + coeffs[d - 1] * xi;
    }
    return coeffs[k];
}

Polynomial power_sum(const Ring& ring, std::size_t n, std::uint32_t k) {
    if (k == 0) return Polynomial::constant(ring, n, Coeff::from_int(ring, static_cast<long>(n)));
    Polynomial out = Polynomial::zero(ring, n);
    for (std::size_t i = 1; i <= n; ++i) out = out + Polynomial::variable(ring, n, i).pow(k);
    return out;
}

}  // namespace msym
