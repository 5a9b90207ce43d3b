#include "msym/concrete.hpp"

#include <algorithm>

namespace msym {

SlotMonomial::SlotMonomial(std::size_t slots, std::size_t families,
                           std::vector<std::uint32_t> exponents)
    : n_(slots), m_(families), exp_(std::move(exponents))
{
    if (exp_.size() != n_ * m_)
        throw Error("slot monomial exponent vector has wrong length");
}

std::uint32_t SlotMonomial::exponent(std::size_t i, std::size_t j) const
{
    if (i < 1 || i > m_ || j < 1 || j > n_)
        throw Error("variable x" + std::to_string(i) + "(" + std::to_string(j) +
                    ") out of range");
    return exp_[(j - 1) * m_ + (i - 1)];
}

void SlotMonomial::set_exponent(std::size_t i, std::size_t j, std::uint32_t e)
{
    if (i < 1 || i > m_ || j < 1 || j > n_)
        throw Error("variable x" + std::to_string(i) + "(" + std::to_string(j) +
                    ") out of range");
    exp_[(j - 1) * m_ + (i - 1)] = e;
}

Multidegree SlotMonomial::multidegree() const
{
    Multidegree a(m_, 0);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t i = 0; i < m_; ++i)
            a[i] += exp_[j * m_ + i];
    return a;
}

Monomial SlotMonomial::slot_part(std::size_t j) const
{
    Multidegree e(m_, 0);
    for (std::size_t i = 0; i < m_; ++i)
        e[i] = exp_[(j - 1) * m_ + i];
    return Monomial(std::move(e));
}

SlotMonomial SlotMonomial::operator*(const SlotMonomial& rhs) const
{
    if (n_ != rhs.n_ || m_ != rhs.m_)
        throw Error("shape mismatch in slot monomial product");
    std::vector<std::uint32_t> e(exp_);
    for (std::size_t t = 0; t < e.size(); ++t)
        e[t] += rhs.exp_[t];
    return SlotMonomial(n_, m_, std::move(e));
}

int cmp(const SlotMonomial& a, const SlotMonomial& b)
{
    if (a.slots() != b.slots() || a.families() != b.families())
        throw Error("shape mismatch in slot monomial comparison");
    return cmp_graded_lex(a.exponents(), b.exponents());
}

ConcretePoly ConcretePoly::zero(const Ring& ring, std::size_t slots, std::size_t families)
{
    return ConcretePoly(ring, slots, families);
}

ConcretePoly ConcretePoly::constant(const Ring& ring, std::size_t slots, std::size_t families,
                                    const Coeff& c)
{
    ConcretePoly p(ring, slots, families);
    p.add_term(SlotMonomial(slots, families), c);
    return p;
}

Coeff ConcretePoly::coefficient(const SlotMonomial& mu) const
{
    auto it = terms_.find(mu);
    return it == terms_.end() ? Coeff::zero(ring_) : it->second;
}

std::uint32_t ConcretePoly::total_degree() const
{
    if (terms_.empty())
        throw Error("degree of zero polynomial is undefined");
    return terms_.begin()->first.total_degree();
}

void ConcretePoly::add_term(const SlotMonomial& mu, const Coeff& c)
{
    if (mu.slots() != n_ || mu.families() != m_)
        throw Error("slot monomial shape mismatch");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(mu, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void ConcretePoly::check_compatible(const ConcretePoly& rhs) const
{
    if (ring_ != rhs.ring_)
        throw Error("coefficient ring mismatch: " + ring_.name() + " vs " + rhs.ring_.name());
    if (n_ != rhs.n_ || m_ != rhs.m_)
        throw Error("shape mismatch in concrete arithmetic");
}

ConcretePoly ConcretePoly::operator+(const ConcretePoly& rhs) const
{
    check_compatible(rhs);
    ConcretePoly out = *this;
    for (const auto& [mu, c] : rhs.terms_)
        out.add_term(mu, c);
    return out;
}

ConcretePoly ConcretePoly::operator-(const ConcretePoly& rhs) const
{
    check_compatible(rhs);
    ConcretePoly out = *this;
    for (const auto& [mu, c] : rhs.terms_)
        out.add_term(mu, -c);
    return out;
}

ConcretePoly ConcretePoly::operator*(const ConcretePoly& rhs) const
{
    check_compatible(rhs);
    ConcretePoly out(ring_, n_, m_);
    for (const auto& [mu, c] : terms_)
        for (const auto& [nu, d] : rhs.terms_)
            out.add_term(mu * nu, c * d);
    return out;
}

ConcretePoly ConcretePoly::operator-() const
{
    ConcretePoly out(ring_, n_, m_);
    for (const auto& [mu, c] : terms_)
        out.terms_.emplace(mu, -c);
    return out;
}

ConcretePoly ConcretePoly::scaled(const Coeff& c) const
{
    ConcretePoly out(ring_, n_, m_);
    if (c.is_zero())
        return out;
    for (const auto& [mu, d] : terms_)
        out.add_term(mu, c * d);
    return out;
}

bool ConcretePoly::operator==(const ConcretePoly& rhs) const
{
    if (ring_ != rhs.ring_ || n_ != rhs.n_ || m_ != rhs.m_ || terms_.size() != rhs.terms_.size())
        return false;
    auto it = terms_.begin();
    auto jt = rhs.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (!(it->first == jt->first) || !(it->second == jt->second))
            return false;
    }
    return true;
}

ConcretePoly substitute_slot(const Polynomial& f, std::size_t j, std::size_t n)
{
    if (j < 1 || j > n)
        throw Error("slot " + std::to_string(j) + " out of range 1.." + std::to_string(n));
    const std::size_t m = f.arity();
    ConcretePoly out(f.ring(), n, m);
    for (const auto& [mu, c] : f.terms()) {
        SlotMonomial s(n, m);
        for (std::size_t i = 1; i <= m; ++i)
            s.set_exponent(i, j, mu.exponent(i - 1));
        out.add_term(s, c);
    }
    return out;
}

ConcretePoly apply_permutation(const ConcretePoly& p, const std::vector<std::size_t>& sigma)
{
    const std::size_t n = p.slots(), m = p.families();
    if (sigma.size() != n)
        throw Error("permutation must list images of all " + std::to_string(n) + " slots");
    std::vector<bool> seen(n, false);
    for (std::size_t v : sigma) {
        if (v < 1 || v > n || seen[v - 1])
            throw Error("not a permutation of 1.." + std::to_string(n));
        seen[v - 1] = true;
    }
    ConcretePoly out(p.ring(), n, m);
    for (const auto& [mu, c] : p.terms()) {
        SlotMonomial s(n, m);
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 1; i <= m; ++i)
                s.set_exponent(i, sigma[j - 1], mu.exponent(i, j));
        out.add_term(s, c);
    }
    return out;
}

bool is_invariant(const ConcretePoly& p)
{
    const std::size_t n = p.slots();
    for (std::size_t j = 1; j + 1 <= n; ++j) {
        std::vector<std::size_t> sigma(n);
        for (std::size_t t = 0; t < n; ++t)
            sigma[t] = t + 1;
        std::swap(sigma[j - 1], sigma[j]);
        if (!(apply_permutation(p, sigma) == p))
            return false;
    }
    return true;
}

ConcretePoly elementary_tuple(const Ring& ring, std::size_t m, std::size_t n,
                              const std::vector<Polynomial>& fs,
                              const std::vector<std::uint32_t>& alphas)
{
    if (fs.size() != alphas.size())
        throw Error("argument and multiplicity lists differ in length");
    std::uint64_t total = 0;
    for (std::uint32_t a : alphas)
        total += a;
    if (total > n)
        return ConcretePoly::zero(ring, n, m);
    for (const auto& f : fs) {
        if (f.arity() != m)
            throw Error("argument arity mismatch");
        if (f.ring() != ring)
            throw Error("coefficient ring mismatch: " + f.ring().name() + " vs " + ring.name());
    }
    const std::size_t k = fs.size();
    // DP over slots on the t-exponent lattice boxed by alphas.
    std::map<std::vector<std::uint32_t>, ConcretePoly> state;
    state.emplace(std::vector<std::uint32_t>(k, 0), ConcretePoly::constant(ring, n, m, Coeff::one(ring)));
    for (std::size_t slot = 1; slot <= n; ++slot) {
        std::vector<ConcretePoly> fslot;
        fslot.reserve(k);
        for (const auto& f : fs)
            fslot.push_back(substitute_slot(f, slot, n));
        std::map<std::vector<std::uint32_t>, ConcretePoly> next = state;
        for (const auto& [v, poly] : state) {
            for (std::size_t j = 0; j < k; ++j) {
                if (v[j] == alphas[j])
                    continue;
                std::vector<std::uint32_t> w = v;
                ++w[j];
                ConcretePoly inc = poly * fslot[j];
                auto it = next.find(w);
                if (it == next.end())
                    next.emplace(std::move(w), std::move(inc));
                else
                    it->second = it->second + inc;
            }
        }
        state = std::move(next);
    }
    auto it = state.find(alphas);
    return it == state.end() ? ConcretePoly::zero(ring, n, m) : it->second;
}

namespace {

// Assign each support monomial to a set of distinct free slots; every
// complete assignment contributes one monomial term with coefficient 1.
void orbit_dfs(const Ring& ring, const std::vector<std::pair<Monomial, std::uint32_t>>& support,
               std::size_t pos, std::vector<bool>& used, std::size_t n, SlotMonomial& acc,
               ConcretePoly& out)
{
    if (pos == support.size()) {
        out.add_term(acc, Coeff::one(ring));
        return;
    }
    const auto& [mu, mult] = support[pos];
    const std::size_t m = acc.families();
    std::vector<std::size_t> free_slots;
    for (std::size_t j = 1; j <= n; ++j)
        if (!used[j - 1])
            free_slots.push_back(j);
    if (free_slots.size() < mult)
        return;
    std::vector<std::size_t> pick;
    auto place = [&](std::size_t j, bool on) {
        used[j - 1] = on;
        for (std::size_t i = 1; i <= m; ++i) {
            const std::uint32_t e = mu.exponent(i - 1);
            acc.set_exponent(i, j, on ? acc.exponent(i, j) + e : acc.exponent(i, j) - e);
        }
    };
    auto choose = [&](auto&& self, std::size_t start) -> void {
        if (pick.size() == mult) {
            orbit_dfs(ring, support, pos + 1, used, n, acc, out);
            return;
        }
        for (std::size_t t = start; t + (mult - pick.size()) <= free_slots.size(); ++t) {
            pick.push_back(free_slots[t]);
            place(free_slots[t], true);
            self(self, t + 1);
            place(free_slots[t], false);
            pick.pop_back();
        }
    };
    choose(choose, 0);
}

}  // namespace

ConcretePoly orbit_sum(const Ring& ring, const OrbitIndex& alpha, std::size_t n)
{
    const std::size_t m = alpha.arity();
    if (alpha.size() > n)
        return ConcretePoly::zero(ring, n, m);
    std::vector<std::pair<Monomial, std::uint32_t>> support(alpha.entries().begin(),
                                                            alpha.entries().end());
    ConcretePoly out(ring, n, m);
    std::vector<bool> used(n, false);
    SlotMonomial acc(n, m);
    orbit_dfs(ring, support, 0, used, n, acc, out);
    return out;
}

MultiSymElement to_orbit_basis(const ConcretePoly& p)
{
    if (!is_invariant(p))
        throw Error("not S_n-invariant");
    const std::size_t n = p.slots(), m = p.families();
    MultiSymElement coords(p.ring(), m);
    ConcretePoly rest = p;
    while (!rest.is_zero()) {
        const auto& [lead, c] = *rest.terms().begin();
        OrbitIndex alpha(m);
        for (std::size_t j = 1; j <= n; ++j) {
            Monomial part = lead.slot_part(j);
            if (!part.is_constant())
                alpha.add(part, 1);
        }
        coords.add_term(alpha, c);
        rest = rest - orbit_sum(p.ring(), alpha, n).scaled(c);
    }
    return coords;
}

ConcretePoly project_slots(const ConcretePoly& p, std::size_t n_prime)
{
    const std::size_t n = p.slots(), m = p.families();
    if (n_prime > n)
        throw Error("projection target exceeds slot count");
    ConcretePoly out(p.ring(), n_prime, m);
    for (const auto& [mu, c] : p.terms()) {
        bool survives = true;
        for (std::size_t j = n_prime + 1; j <= n && survives; ++j) {
            if (!mu.slot_part(j).is_constant())
                survives = false;
        }
        if (!survives)
            continue;
        SlotMonomial s(n_prime, m);
        for (std::size_t j = 1; j <= n_prime; ++j)
            for (std::size_t i = 1; i <= m; ++i)
                s.set_exponent(i, j, mu.exponent(i, j));
        out.add_term(s, c);
    }
    return out;
}

}  // namespace msym
