// Rewriting orbit-basis elements into the generators e_{i,mu}: singleton
// indices go through the plethysm table, multi-support indices through the
// split-largest recursion, with every correction term strictly smaller.
#include <mutex>
#include <shared_mutex>

#include "msym/genpoly.hpp"
#include "msym/symfun.hpp"

namespace msym {

namespace {

std::size_t min_arity(const OrbitIndex& alpha)
{
    std::size_t top = 0;
    for (const auto& [mu, c] : alpha.entries()) {
        for (std::size_t i = mu.arity(); i > top; --i) {
            if (mu.exponent(i - 1) > 0) {
                top = i;
                break;
            }
        }
    }
    return top;
}

struct KeyLess {
    bool operator()(const OrbitIndex& a, const OrbitIndex& b) const
    {
        if (a.arity() != b.arity())
            return a.arity() < b.arity();
        return cmp(a, b) < 0;
    }
};

std::map<OrbitIndex, GeneratorPoly, KeyLess>& rewrite_cache()
{
    static std::map<OrbitIndex, GeneratorPoly, KeyLess> cache;
    return cache;
}

std::shared_mutex& rewrite_mutex()
{
    static std::shared_mutex mu;
    return mu;
}

// e_alpha for singleton support {mu: k}: a plain symbol when mu is
// primitive, otherwise P_{k,j} with e_i -> e_{i,nu} for mu = nu^j.
GeneratorPoly rewrite_singleton(const Monomial& mu, std::uint32_t k)
{
    const Ring z = Ring::integers();
    auto [nu, j] = primitive_root(mu);
    if (j == 1)
        return GeneratorPoly::from_symbol(z, GenSymbol(k, mu));
    ElemPoly table = plethysm_P(k, j);
    GeneratorPoly out(z, mu.arity());
    for (const auto& [emono, c] : table.terms()) {
        GenMonomial mono(mu.arity());
        for (std::uint32_t i = 1; i <= emono.max_symbol(); ++i) {
            const std::uint32_t e = emono.exponent_of(i);
            if (e > 0)
                mono.mul_symbol(GenSymbol(i, nu), e);
        }
        out.add_term(mono, c);
    }
    return out;
}

GeneratorPoly rewrite_impl(const OrbitIndex& alpha);

GeneratorPoly rewrite_normalized(const OrbitIndex& alpha)
{
    {
        std::shared_lock lock(rewrite_mutex());
        auto it = rewrite_cache().find(alpha);
        if (it != rewrite_cache().end())
            return it->second;
    }
    GeneratorPoly result = rewrite_impl(alpha);
    std::unique_lock lock(rewrite_mutex());
    auto [it, inserted] = rewrite_cache().emplace(alpha, std::move(result));
    return it->second;
}

GeneratorPoly rewrite_impl(const OrbitIndex& alpha)
{
    const Ring z = Ring::integers();
    const std::size_t m = alpha.arity();
    if (alpha.is_unit())
        return GeneratorPoly::one(z, m);
    if (alpha.support_size() == 1) {
        const auto& [mu, k] = *alpha.entries().begin();
        return rewrite_singleton(mu, k);
    }
    // Split off the largest support monomial f1.
    const auto& [f1, k1] = *alpha.entries().begin();
    const OrbitIndex head = OrbitIndex::single(f1, k1);
    const OrbitIndex rest = alpha.without(f1);
    const ZCombo& combo = basis_product(head, rest);

    GeneratorPoly out = rewrite_singleton(f1, k1) * rewrite_normalized(rest);
    bool saw_alpha = false;
    for (const auto& [gamma, c] : combo) {
        if (gamma == alpha) {
            if (c != 1)
                throw Error("internal error: split product has alpha-coefficient != 1");
            saw_alpha = true;
            continue;
        }
        if (gamma.size() >= alpha.size())
            throw Error("internal error: correction term does not shrink");
        out = out - rewrite_normalized(gamma).scaled(Coeff::from_integer(z, c));
    }
    if (!saw_alpha)
        throw Error("internal error: split product lost the alpha term");
    return out;
}

}  // namespace

GeneratorPoly rewrite_to_generators(const OrbitIndex& alpha)
{
    const std::size_t m = alpha.arity();
    const std::size_t small = min_arity(alpha);
    GeneratorPoly g = rewrite_normalized(alpha.with_arity(small));
    return small == m ? g : g.with_arity(m);
}

bool rewrite_cached(const OrbitIndex& alpha)
{
    std::shared_lock lock(rewrite_mutex());
    return rewrite_cache().count(alpha.with_arity(min_arity(alpha))) != 0;
}

void rewrite_cache_insert(const OrbitIndex& alpha, const GeneratorPoly& value)
{
    const std::size_t small = min_arity(alpha);
    std::unique_lock lock(rewrite_mutex());
    rewrite_cache().emplace(alpha.with_arity(small), value.with_arity(small));
}

std::vector<OrbitIndex> rewrite_cache_keys()
{
    std::shared_lock lock(rewrite_mutex());
    std::vector<OrbitIndex> keys;
    keys.reserve(rewrite_cache().size());
    for (const auto& [key, value] : rewrite_cache())
        keys.push_back(key);
    return keys;
}

namespace {

// e_k as a rational polynomial in the symbols e_{1, nu^i} (p_i -> e_{1,nu^i})
// via k e_k = sum_{i=1..k} (-1)^{i-1} p_i e_{k-i}.
GeneratorPoly e_in_p_symbols(std::uint32_t k, const Monomial& nu, const Ring& ring)
{
    const std::size_t m = nu.arity();
    std::vector<GeneratorPoly> e;  // e[j] = e_j in the p-symbols
    e.push_back(GeneratorPoly::one(ring, m));
    for (std::uint32_t j = 1; j <= k; ++j) {
        GeneratorPoly acc(ring, m);
        int sign = 1;
        for (std::uint32_t i = 1; i <= j; ++i) {
            GeneratorPoly p_i =
                GeneratorPoly::from_symbol(ring, GenSymbol(1, nu.pow(i)));
            GeneratorPoly piece = p_i * e[j - i];
            acc = (sign > 0) ? acc + piece : acc - piece;
            sign = -sign;
        }
        e.push_back(acc.scaled(Coeff::from_fraction(ring, 1, j)));
    }
    GeneratorPoly out = e[k];
    out.set_rational_form(true);
    return out;
}

}  // namespace

GeneratorPoly rational_rewrite_to_e1(const OrbitIndex& alpha, const Ring& ring)
{
    if (!ring.contains_rationals())
        throw Error("requires rational coefficients");
    const std::size_t m = alpha.arity();
    GeneratorPoly g = rewrite_to_generators(alpha).with_ring(ring);
    GeneratorPoly out(ring, m);
    out.set_rational_form(true);
    for (const auto& [mono, c] : g.terms()) {
        GeneratorPoly term = GeneratorPoly::one(ring, m).scaled(c);
        term.set_rational_form(true);
        for (const auto& [s, e] : mono.factors()) {
            const GeneratorPoly sub = e_in_p_symbols(s.index, s.mu, ring);
            for (std::uint32_t t = 0; t < e; ++t)
                term = term * sub;
        }
        out = out + term;
    }
    out.set_rational_form(true);
    return out;
}

}  // namespace msym
