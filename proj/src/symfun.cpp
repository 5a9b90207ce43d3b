#include "msym/symfun.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

#include "msym/concrete.hpp"
#include "msym/orbit.hpp"

namespace msym {

EMonomial::EMonomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps))
{
    while (!exps_.empty() && exps_.back() == 0)
        exps_.pop_back();
}

EMonomial EMonomial::symbol(std::uint32_t i, std::uint32_t exp)
{
    if (i == 0)
        throw Error("symbol index must be positive");
    std::vector<std::uint32_t> e(i, 0);
    e[i - 1] = exp;
    return EMonomial(std::move(e));
}

std::uint32_t EMonomial::exponent_of(std::uint32_t i) const
{
    return (i >= 1 && i <= exps_.size()) ? exps_[i - 1] : 0;
}

std::uint64_t EMonomial::weight() const
{
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        w += static_cast<std::uint64_t>(i + 1) * exps_[i];
    return w;
}

std::uint64_t EMonomial::factor_count() const
{
    std::uint64_t c = 0;
    for (std::uint32_t e : exps_)
        c += e;
    return c;
}

EMonomial EMonomial::operator*(const EMonomial& rhs) const
{
    std::vector<std::uint32_t> e(std::max(exps_.size(), rhs.exps_.size()), 0);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        e[i] += exps_[i];
    for (std::size_t i = 0; i < rhs.exps_.size(); ++i)
        e[i] += rhs.exps_[i];
    return EMonomial(std::move(e));
}

int cmp(const EMonomial& a, const EMonomial& b)
{
    const std::uint64_t wa = a.weight(), wb = b.weight();
    if (wa != wb)
        return wa < wb ? -1 : 1;
    const std::uint64_t ca = a.factor_count(), cb = b.factor_count();
    if (ca != cb)
        return ca < cb ? -1 : 1;
    // Reverse lex: scan from the highest symbol down; the monomial with the
    // smaller exponent at the first difference is the larger one.
    const std::size_t top = std::max(a.exps().size(), b.exps().size());
    for (std::size_t i = top; i > 0; --i) {
        const std::uint32_t ea = i <= a.exps().size() ? a.exps()[i - 1] : 0;
        const std::uint32_t eb = i <= b.exps().size() ? b.exps()[i - 1] : 0;
        if (ea != eb)
            return ea < eb ? 1 : -1;
    }
    return 0;
}

ElemPoly ElemPoly::one(const Ring& ring)
{
    ElemPoly p(ring);
    p.add_term(EMonomial(), Coeff::one(ring));
    return p;
}

ElemPoly ElemPoly::symbol(const Ring& ring, std::uint32_t i)
{
    ElemPoly p(ring);
    p.add_term(EMonomial::symbol(i), Coeff::one(ring));
    return p;
}

std::uint32_t ElemPoly::max_symbol() const
{
    std::uint32_t top = 0;
    for (const auto& [mu, c] : terms_)
        top = std::max(top, mu.max_symbol());
    return top;
}

void ElemPoly::add_term(const EMonomial& mu, const Coeff& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(mu, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void ElemPoly::check_compatible(const ElemPoly& rhs) const
{
    if (ring_ != rhs.ring_)
        throw Error("coefficient ring mismatch: " + ring_.name() + " vs " + rhs.ring_.name());
}

ElemPoly ElemPoly::operator+(const ElemPoly& rhs) const
{
    check_compatible(rhs);
    ElemPoly out = *this;
    for (const auto& [mu, c] : rhs.terms_)
        out.add_term(mu, c);
    return out;
}

ElemPoly ElemPoly::operator-(const ElemPoly& rhs) const
{
    check_compatible(rhs);
    ElemPoly out = *this;
    for (const auto& [mu, c] : rhs.terms_)
        out.add_term(mu, -c);
    return out;
}

ElemPoly ElemPoly::operator*(const ElemPoly& rhs) const
{
    check_compatible(rhs);
    ElemPoly out(ring_);
    for (const auto& [mu, c] : terms_)
        for (const auto& [nu, d] : rhs.terms_)
            out.add_term(mu * nu, c * d);
    return out;
}

ElemPoly ElemPoly::operator-() const
{
    ElemPoly out(ring_);
    for (const auto& [mu, c] : terms_)
        out.terms_.emplace(mu, -c);
    return out;
}

ElemPoly ElemPoly::scaled(const Coeff& c) const
{
    ElemPoly out(ring_);
    if (c.is_zero())
        return out;
    for (const auto& [mu, d] : terms_)
        out.add_term(mu, c * d);
    return out;
}

ElemPoly ElemPoly::pow(std::uint32_t k) const
{
    ElemPoly out = one(ring_);
    ElemPoly base = *this;
    while (k > 0) {
        if (k & 1u)
            out = out * base;
        base = base * base;
        k >>= 1u;
    }
    return out;
}

bool ElemPoly::operator==(const ElemPoly& rhs) const
{
    if (ring_ != rhs.ring_ || terms_.size() != rhs.terms_.size())
        return false;
    auto it = terms_.begin();
    auto jt = rhs.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (!(it->first == jt->first) || !(it->second == jt->second))
            return false;
    }
    return true;
}

Polynomial ElemPoly::eval_concrete(std::size_t N) const
{
    // e_i is the orbit-basis element E{y1:i} of A(N,1), so the whole
    // evaluation can run on the memoized structure constants, with one
    // final expansion over the N slots.  Orders of magnitude faster than
    // multiplying out elementary_symmetric polynomials directly.
    const Monomial y1 = Monomial(Multidegree{1});
    MultiSymElement acc = MultiSymElement::zero(ring_, 1);
    for (const auto& [mu, c] : terms_) {
        MultiSymElement term = MultiSymElement::unit(ring_, 1);
        for (std::uint32_t i = 1; i <= mu.max_symbol(); ++i) {
            const MultiSymElement ei = MultiSymElement::basis(ring_, OrbitIndex::single(y1, i));
            for (std::uint32_t rep = 0; rep < mu.exponent_of(i); ++rep)
                term = project_n(multiply(term, ei), N);
        }
        acc = acc + term.scaled(c);
    }
    Polynomial out(ring_, N);
    for (const auto& [alpha, c] : acc.terms()) {
        const ConcretePoly expanded = orbit_sum(ring_, alpha, N);
        for (const auto& [sm, cc] : expanded.terms()) {
            Multidegree d(N, 0);
            for (std::size_t j = 1; j <= N; ++j)
                d[j - 1] = sm.exponent(1, j);
            out.add_term(Monomial(d), c * cc);
        }
    }
    return out;
}

Polynomial ElemPoly::eval_at(const std::vector<Polynomial>& args) const
{
    const std::uint32_t top = max_symbol();
    if (args.size() < top)
        throw Error("substitution needs values for e_1..e_" + std::to_string(top));
    if (args.empty())
        throw Error("substitution needs at least one argument to fix the target ring");
    const Ring& tr = args[0].ring();
    const std::size_t ta = args[0].arity();
    for (const auto& a : args) {
        if (a.ring() != tr || a.arity() != ta)
            throw Error("substitution arguments must share one ring and arity");
    }
    Polynomial out(tr, ta);
    for (const auto& [mu, c] : terms_) {
        Polynomial term = Polynomial::constant(tr, ta, coerce(c, tr));
        for (std::uint32_t i = 1; i <= mu.max_symbol(); ++i) {
            const std::uint32_t e = mu.exponent_of(i);
            if (e > 0)
                term = term * args[i - 1].pow(e);
        }
        out = out + term;
    }
    return out;
}

ElemPoly with_ring(const ElemPoly& p, const Ring& target)
{
    ElemPoly out(target);
    for (const auto& [mu, c] : p.terms())
        out.add_term(mu, coerce(c, target));
    return out;
}

ElemPoly newton_p_in_e(const Ring& ring, std::uint32_t k)
{
    if (k == 0)
        throw Error("power sum index must be positive");
    std::vector<ElemPoly> p;  // p[j] = p_{j+1}
    for (std::uint32_t j = 1; j <= k; ++j) {
        ElemPoly acc(ring);
        int sign = 1;
        for (std::uint32_t i = 1; i < j; ++i) {
            ElemPoly piece = ElemPoly::symbol(ring, i) * p[j - i - 1];
            acc = (sign > 0) ? acc + piece : acc - piece;
            sign = -sign;
        }
        ElemPoly tail = ElemPoly::symbol(ring, j).scaled(Coeff::from_int(ring, j));
        acc = (sign > 0) ? acc + tail : acc - tail;
        p.push_back(acc);
    }
    return p[k - 1];
}

ElemPoly sym_to_elementary(const Polynomial& w)
{
    if (!w.is_symmetric())
        throw Error("not symmetric");
    const std::size_t N = w.arity();
    const Ring& ring = w.ring();
    ElemPoly out(ring);
    Polynomial rest = w;
    while (!rest.is_zero()) {
        const auto& [lead, c] = rest.leading_term();
        // Symmetry puts the leading exponent in partition shape.
        EMonomial candidate;
        {
            std::vector<std::uint32_t> exps;
            for (std::size_t i = 0; i + 1 < N; ++i) {
                if (lead.exponent(i) < lead.exponent(i + 1))
                    throw Error("leading exponent is not a partition");
            }
            for (std::size_t i = 0; i < N; ++i) {
                const std::uint32_t step =
                    lead.exponent(i) - (i + 1 < N ? lead.exponent(i + 1) : 0);
                if (step > 0) {
                    if (exps.size() < i + 1)
                        exps.resize(i + 1, 0);
                    exps[i] = step;
                }
            }
            candidate = EMonomial(std::move(exps));
        }
        if (lead.is_constant()) {
            out.add_term(EMonomial(), c);
            rest = rest - Polynomial::constant(ring, N, c);
            continue;
        }
        ElemPoly single(ring);
        single.add_term(candidate, Coeff::one(ring));
        out.add_term(candidate, c);
        rest = rest - single.eval_concrete(N).scaled(c);
    }
    return out;
}

namespace {

std::map<std::pair<std::uint32_t, std::uint32_t>, ElemPoly>& plethysm_cache()
{
    static std::map<std::pair<std::uint32_t, std::uint32_t>, ElemPoly> cache;
    return cache;
}

std::shared_mutex& plethysm_mutex()
{
    static std::shared_mutex mu;
    return mu;
}

}  // namespace

bool plethysm_cached(std::uint32_t h, std::uint32_t k)
{
    std::shared_lock lock(plethysm_mutex());
    return plethysm_cache().count({h, k}) != 0;
}

void plethysm_cache_insert(std::uint32_t h, std::uint32_t k, const ElemPoly& value)
{
    std::unique_lock lock(plethysm_mutex());
    plethysm_cache().emplace(std::make_pair(h, k), value);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> plethysm_cache_keys()
{
    std::shared_lock lock(plethysm_mutex());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> keys;
    keys.reserve(plethysm_cache().size());
    for (const auto& [key, value] : plethysm_cache())
        keys.push_back(key);
    return keys;
}

ElemPoly plethysm_P(std::uint32_t h, std::uint32_t k)
{
    if (h == 0 || k == 0)
        throw Error("plethysm indices must be positive");
    {
        std::shared_lock lock(plethysm_mutex());
        auto it = plethysm_cache().find({h, k});
        if (it != plethysm_cache().end())
            return it->second;
    }
    const Ring z = Ring::integers();
    const std::size_t N = static_cast<std::size_t>(h) * k;
    // e_h(x_1^k, ..., x_N^k), then reduce to the e-basis.
    std::vector<Polynomial> powers;
    powers.reserve(N);
    for (std::size_t i = 1; i <= N; ++i)
        powers.push_back(Polynomial::variable(z, N, i).pow(k));
    Polynomial witness = elementary_symmetric(z, N, h).eval_at(powers);
    ElemPoly result = sym_to_elementary(witness);
    plethysm_cache_insert(h, k, result);
    return result;
}

ElemPoly truncate_to_n(const ElemPoly& p, std::size_t n)
{
    ElemPoly out(p.ring());
    for (const auto& [mu, c] : p.terms()) {
        if (mu.max_symbol() <= n)
            out.add_term(mu, c);
    }
    return out;
}

}  // namespace msym
