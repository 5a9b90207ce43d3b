#include "msym/genpoly.hpp"

namespace msym {

GenSymbol::GenSymbol(std::uint32_t i, Monomial monomial) : index(i), mu(std::move(monomial))
{
    if (index == 0)
        throw Error("generator index must be positive");
    if (mu.is_constant())
        throw Error("generator monomial must have positive degree");
}

Multidegree GenSymbol::multidegree() const
{
    Multidegree a = mu.multidegree();
    for (auto& x : a)
        x *= index;
    return a;
}

int cmp_print(const GenSymbol& a, const GenSymbol& b)
{
    if (a.index != b.index)
        return a.index > b.index ? -1 : 1;
    return cmp(a.mu, b.mu);
}

void GenMonomial::mul_symbol(const GenSymbol& s, std::uint32_t exp)
{
    if (s.mu.arity() != arity_)
        throw Error("generator symbol arity mismatch");
    if (exp == 0)
        return;
    factors_[s] += exp;
}

GenMonomial GenMonomial::operator*(const GenMonomial& rhs) const
{
    if (arity_ != rhs.arity_)
        throw Error("arity mismatch in generator product");
    GenMonomial out = *this;
    for (const auto& [s, e] : rhs.factors_)
        out.factors_[s] += e;
    return out;
}

Multidegree GenMonomial::multidegree() const
{
    Multidegree a(arity_, 0);
    for (const auto& [s, e] : factors_) {
        const Multidegree d = s.multidegree();
        for (std::size_t i = 0; i < arity_; ++i)
            a[i] += e * d[i];
    }
    return a;
}

std::uint64_t GenMonomial::factor_count() const
{
    std::uint64_t c = 0;
    for (const auto& [s, e] : factors_)
        c += e;
    return c;
}

GenMonomial GenMonomial::with_arity(std::size_t new_arity) const
{
    GenMonomial out(new_arity);
    for (const auto& [s, e] : factors_)
        out.factors_.emplace(GenSymbol(s.index, s.mu.with_arity(new_arity)), e);
    return out;
}

int cmp(const GenMonomial& a, const GenMonomial& b)
{
    if (a.arity() != b.arity())
        throw Error("arity mismatch in generator comparison");
    int c = cmp_graded_lex(a.multidegree(), b.multidegree());
    if (c != 0)
        return c;
    const std::uint64_t fa = a.factor_count(), fb = b.factor_count();
    if (fa != fb)
        return fa < fb ? -1 : 1;
    auto it = a.factors().begin();
    auto jt = b.factors().begin();
    for (; it != a.factors().end() && jt != b.factors().end(); ++it, ++jt) {
        const int d = cmp_print(it->first, jt->first);
        if (d != 0)
            return d < 0 ? 1 : -1;  // earlier symbol -> greater term
        if (it->second != jt->second)
            return it->second > jt->second ? 1 : -1;
    }
    if (it != a.factors().end())
        return 1;
    if (jt != b.factors().end())
        return -1;
    return 0;
}

GeneratorPoly GeneratorPoly::zero(const Ring& ring, std::size_t arity)
{
    return GeneratorPoly(ring, arity);
}

GeneratorPoly GeneratorPoly::one(const Ring& ring, std::size_t arity)
{
    GeneratorPoly g(ring, arity);
    g.add_term(GenMonomial(arity), Coeff::one(ring));
    return g;
}

GeneratorPoly GeneratorPoly::from_symbol(const Ring& ring, const GenSymbol& s)
{
    GeneratorPoly g(ring, s.mu.arity());
    GenMonomial mono(s.mu.arity());
    mono.mul_symbol(s, 1);
    g.add_term(mono, Coeff::one(ring));
    return g;
}

void GeneratorPoly::add_term(const GenMonomial& mu, const Coeff& c)
{
    if (mu.arity() != arity_)
        throw Error("generator monomial arity mismatch");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(mu, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void GeneratorPoly::check_compatible(const GeneratorPoly& rhs) const
{
    if (ring_ != rhs.ring_)
        throw Error("coefficient ring mismatch: " + ring_.name() + " vs " + rhs.ring_.name());
    if (arity_ != rhs.arity_)
        throw Error("arity mismatch in generator arithmetic");
}

GeneratorPoly GeneratorPoly::operator+(const GeneratorPoly& rhs) const
{
    check_compatible(rhs);
    GeneratorPoly out = *this;
    for (const auto& [mu, c] : rhs.terms_)
        out.add_term(mu, c);
    return out;
}

GeneratorPoly GeneratorPoly::operator-(const GeneratorPoly& rhs) const
{
    check_compatible(rhs);
    GeneratorPoly out = *this;
    for (const auto& [mu, c] : rhs.terms_)
        out.add_term(mu, -c);
    return out;
}

GeneratorPoly GeneratorPoly::operator*(const GeneratorPoly& rhs) const
{
    check_compatible(rhs);
    GeneratorPoly out(ring_, arity_);
    out.rational_form_ = rational_form_ || rhs.rational_form_;
    for (const auto& [mu, c] : terms_)
        for (const auto& [nu, d] : rhs.terms_)
            out.add_term(mu * nu, c * d);
    return out;
}

GeneratorPoly GeneratorPoly::operator-() const
{
    GeneratorPoly out(ring_, arity_);
    out.rational_form_ = rational_form_;
    for (const auto& [mu, c] : terms_)
        out.terms_.emplace(mu, -c);
    return out;
}

GeneratorPoly GeneratorPoly::scaled(const Coeff& c) const
{
    GeneratorPoly out(ring_, arity_);
    out.rational_form_ = rational_form_;
    if (c.is_zero())
        return out;
    for (const auto& [mu, d] : terms_)
        out.add_term(mu, c * d);
    return out;
}

GeneratorPoly GeneratorPoly::with_ring(const Ring& target) const
{
    GeneratorPoly out(target, arity_);
    out.rational_form_ = rational_form_;
    for (const auto& [mu, c] : terms_)
        out.add_term(mu, coerce(c, target));
    return out;
}

GeneratorPoly GeneratorPoly::with_arity(std::size_t new_arity) const
{
    GeneratorPoly out(ring_, new_arity);
    out.rational_form_ = rational_form_;
    for (const auto& [mu, c] : terms_)
        out.terms_.emplace(mu.with_arity(new_arity), c);
    return out;
}

bool GeneratorPoly::operator==(const GeneratorPoly& rhs) const
{
    if (ring_ != rhs.ring_ || arity_ != rhs.arity_ || terms_.size() != rhs.terms_.size())
        return false;
    auto it = terms_.begin();
    auto jt = rhs.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (!(it->first == jt->first) || !(it->second == jt->second))
            return false;
    }
    return true;
}

ConcretePoly eval_generator_poly(const GeneratorPoly& g, std::size_t n)
{
    const Ring& ring = g.ring();
    const std::size_t m = g.arity();
    ConcretePoly out(ring, n, m);
    for (const auto& [mono, c] : g.terms()) {
        ConcretePoly term = ConcretePoly::constant(ring, n, m, c);
        for (const auto& [s, e] : mono.factors()) {
            Polynomial arg = Polynomial::from_monomial(ring, s.mu, Coeff::one(ring));
            ConcretePoly value = elementary_tuple(ring, m, n, {arg}, {s.index});
            for (std::uint32_t t = 0; t < e; ++t)
                term = term * value;
        }
        out = out + term;
    }
    return out;
}

MultiSymElement eval_generator_poly_abstract(const GeneratorPoly& g, const Ring& ring)
{
    const std::size_t m = g.arity();
    MultiSymElement out(ring, m);
    for (const auto& [mono, c] : g.terms()) {
        MultiSymElement term = MultiSymElement::unit(ring, m).scaled(coerce(c, ring));
        for (const auto& [s, e] : mono.factors()) {
            MultiSymElement value =
                MultiSymElement::basis(ring, OrbitIndex::single(s.mu, s.index));
            for (std::uint32_t t = 0; t < e; ++t)
                term = multiply(term, value);
        }
        out = out + term;
    }
    return out;
}

}  // namespace msym
