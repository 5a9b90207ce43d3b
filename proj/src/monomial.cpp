#include "msym/monomial.hpp"

namespace msym {

int cmp_graded_lex(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b)
{
    if (a.size() != b.size())
        throw Error("arity mismatch in monomial comparison");
    const std::uint32_t da = total_of(a), db = total_of(b);
    if (da != db)
        return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

bool Monomial::is_primitive() const
{
    std::uint32_t g = 0;
    for (std::uint32_t e : exp_)
        g = std::gcd(g, e);
    return g == 1;
}

Monomial Monomial::operator*(const Monomial& rhs) const
{
    if (arity() != rhs.arity())
        throw Error("arity mismatch in monomial product");
    Multidegree e(exp_);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] += rhs.exp_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::pow(std::uint32_t k) const
{
    Multidegree e(exp_);
    for (auto& x : e)
        x *= k;
    return Monomial(std::move(e));
}

Monomial Monomial::with_arity(std::size_t new_arity) const
{
    Multidegree e(exp_);
    for (std::size_t i = new_arity; i < e.size(); ++i) {
        if (e[i] != 0)
            throw Error("cannot shrink monomial arity below a used variable");
    }
    e.resize(new_arity, 0);
    return Monomial(std::move(e));
}

std::pair<Monomial, std::uint32_t> primitive_root(const Monomial& mu)
{
    if (mu.is_constant())
        throw Error("constant monomial has no primitive root");
    std::uint32_t g = 0;
    for (std::uint32_t e : mu.multidegree())
        g = std::gcd(g, e);
    Multidegree e(mu.multidegree());
    for (auto& x : e)
        x /= g;
    return {Monomial(std::move(e)), g};
}

}  // namespace msym
