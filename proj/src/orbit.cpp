#include "msym/orbit.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

namespace msym {

OrbitIndex OrbitIndex::single(const Monomial& mu, std::uint32_t mult)
{
    OrbitIndex a(mu.arity());
    a.add(mu, mult);
    return a;
}

void OrbitIndex::add(const Monomial& mu, std::uint32_t mult)
{
    if (mu.arity() != arity_)
        throw Error("monomial arity mismatch in orbit index");
    if (mu.is_constant())
        throw Error("orbit index keys must have positive degree");
    if (mult == 0)
        throw Error("orbit index multiplicities must be positive");
    entries_[mu] += mult;
}

std::uint32_t OrbitIndex::multiplicity(const Monomial& mu) const
{
    auto it = entries_.find(mu);
    return it == entries_.end() ? 0 : it->second;
}

OrbitIndex OrbitIndex::without(const Monomial& mu) const
{
    OrbitIndex out(arity_);
    for (const auto& [nu, c] : entries_) {
        if (!(nu == mu))
            out.entries_.emplace(nu, c);
    }
    return out;
}

std::uint64_t OrbitIndex::size() const
{
    std::uint64_t s = 0;
    for (const auto& [mu, c] : entries_)
        s += c;
    return s;
}

Multidegree OrbitIndex::multidegree() const
{
    Multidegree a(arity_, 0);
    for (const auto& [mu, c] : entries_) {
        for (std::size_t i = 0; i < arity_; ++i)
            a[i] += c * mu.exponent(i);
    }
    return a;
}

std::uint32_t OrbitIndex::total_degree() const
{
    return total_of(multidegree());
}

OrbitIndex OrbitIndex::with_arity(std::size_t new_arity) const
{
    OrbitIndex out(new_arity);
    for (const auto& [mu, c] : entries_)
        out.entries_.emplace(mu.with_arity(new_arity), c);
    return out;
}

int cmp(const OrbitIndex& a, const OrbitIndex& b)
{
    if (a.arity() != b.arity())
        throw Error("arity mismatch in orbit index comparison");
    int c = cmp_graded_lex(a.multidegree(), b.multidegree());
    if (c != 0)
        return c;
    auto it = a.entries().begin();
    auto jt = b.entries().begin();
    for (; it != a.entries().end() && jt != b.entries().end(); ++it, ++jt) {
        int d = cmp(it->first, jt->first);
        if (d != 0)
            return d;
        if (it->second != jt->second)
            return it->second < jt->second ? -1 : 1;
    }
    if (it != a.entries().end())
        return 1;
    if (jt != b.entries().end())
        return -1;
    return 0;
}

MultiSymElement MultiSymElement::zero(const Ring& ring, std::size_t arity)
{
    return MultiSymElement(ring, arity);
}

MultiSymElement MultiSymElement::unit(const Ring& ring, std::size_t arity)
{
    MultiSymElement x(ring, arity);
    x.add_term(OrbitIndex(arity), Coeff::one(ring));
    return x;
}

MultiSymElement MultiSymElement::basis(const Ring& ring, const OrbitIndex& alpha)
{
    MultiSymElement x(ring, alpha.arity());
    x.add_term(alpha, Coeff::one(ring));
    return x;
}

Coeff MultiSymElement::coefficient(const OrbitIndex& alpha) const
{
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Coeff::zero(ring_) : it->second;
}

void MultiSymElement::add_term(const OrbitIndex& alpha, const Coeff& c)
{
    if (alpha.arity() != arity_)
        throw Error("orbit index arity mismatch");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void MultiSymElement::check_compatible(const MultiSymElement& rhs) const
{
    if (ring_ != rhs.ring_)
        throw Error("coefficient ring mismatch: " + ring_.name() + " vs " + rhs.ring_.name());
    if (arity_ != rhs.arity_)
        throw Error("arity mismatch in multisymmetric arithmetic");
}

MultiSymElement MultiSymElement::operator+(const MultiSymElement& rhs) const
{
    check_compatible(rhs);
    MultiSymElement out = *this;
    for (const auto& [alpha, c] : rhs.terms_)
        out.add_term(alpha, c);
    return out;
}

MultiSymElement MultiSymElement::operator-(const MultiSymElement& rhs) const
{
    check_compatible(rhs);
    MultiSymElement out = *this;
    for (const auto& [alpha, c] : rhs.terms_)
        out.add_term(alpha, -c);
    return out;
}

MultiSymElement MultiSymElement::operator*(const MultiSymElement& rhs) const
{
    return multiply(*this, rhs);
}

MultiSymElement MultiSymElement::operator-() const
{
    MultiSymElement out(ring_, arity_);
    for (const auto& [alpha, c] : terms_)
        out.terms_.emplace(alpha, -c);
    return out;
}

MultiSymElement MultiSymElement::scaled(const Coeff& c) const
{
    MultiSymElement out(ring_, arity_);
    if (c.is_zero())
        return out;
    for (const auto& [alpha, d] : terms_)
        out.add_term(alpha, c * d);
    return out;
}

bool MultiSymElement::operator==(const MultiSymElement& rhs) const
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

std::pair<mpz_class, OrbitIndex> canonicalize(std::size_t arity, const TaggedTuple& tuple)
{
    // Group equal monomials; the iterated two-entry merge of parts
    // (a_1,...,a_r) contributes (a_1+...+a_r)!/(a_1! ... a_r!).
    std::map<Monomial, std::vector<std::uint32_t>, MonomialGreater> groups;
    for (const auto& [mu, mult] : tuple) {
        if (mult == 0)
            throw Error("tuple multiplicities must be positive");
        groups[mu].push_back(mult);
    }
    mpz_class coeff = 1;
    OrbitIndex alpha(arity);
    for (const auto& [mu, parts] : groups) {
        std::uint32_t total = 0;
        mpz_class numer = 1;
        for (std::uint32_t part : parts) {
            for (std::uint32_t j = 1; j <= part; ++j) {
                ++total;
                numer *= total;        // running (total)!/(prefix factorials)
                mpz_class den(j);
                numer /= den;          // exact at every step (binomial growth)
            }
        }
        coeff *= numer;
        alpha.add(mu, total);
    }
    return {coeff, alpha};
}

namespace {

struct PairKey {
    OrbitIndex a;
    OrbitIndex b;
    bool operator<(const PairKey& rhs) const
    {
        if (a.arity() != rhs.a.arity())
            return a.arity() < rhs.a.arity();
        int c = cmp(a, rhs.a);
        if (c != 0)
            return c < 0;
        return cmp(b, rhs.b) < 0;
    }
};

std::map<PairKey, ZCombo>& product_cache()
{
    static std::map<PairKey, ZCombo> cache;
    return cache;
}

std::shared_mutex& product_cache_mutex()
{
    static std::shared_mutex mu;
    return mu;
}

// Enumerate the inner k x h block of gamma by DFS in row-major order;
// the margins determine the border entries gamma_{i0}, gamma_{0j}.
void gamma_dfs(const std::vector<std::pair<Monomial, std::uint32_t>>& fs,
               const std::vector<std::pair<Monomial, std::uint32_t>>& gs,
               std::vector<std::uint32_t>& inner, std::vector<std::uint32_t>& col_used,
               std::size_t pos, std::uint32_t row_used, std::size_t arity, ZCombo& out)
{
    const std::size_t k = fs.size(), h = gs.size();
    const std::size_t i = pos / h, j = pos % h;
    if (pos == k * h) {
        TaggedTuple tuple;
        for (std::size_t r = 0; r < k; ++r) {
            std::uint32_t used = 0;
            for (std::size_t c = 0; c < h; ++c)
                used += inner[r * h + c];
            if (fs[r].second - used > 0)
                tuple.emplace_back(fs[r].first, fs[r].second - used);
        }
        for (std::size_t c = 0; c < h; ++c) {
            if (gs[c].second - col_used[c] > 0)
                tuple.emplace_back(gs[c].first, gs[c].second - col_used[c]);
        }
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < h; ++c) {
                if (inner[r * h + c] > 0)
                    tuple.emplace_back(fs[r].first * gs[c].first, inner[r * h + c]);
            }
        }
        auto [coeff, gamma] = canonicalize(arity, tuple);
        auto [it, inserted] = out.emplace(gamma, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                out.erase(it);
        }
        return;
    }
    const std::uint32_t row_cap = fs[i].second - row_used;
    const std::uint32_t col_cap = gs[j].second - col_used[j];
    const std::uint32_t cap = std::min(row_cap, col_cap);
    for (std::uint32_t v = 0; v <= cap; ++v) {
        inner[pos] = v;
        col_used[j] += v;
        const bool row_end = (j + 1 == h);
        gamma_dfs(fs, gs, inner, col_used, pos + 1, row_end ? 0 : row_used + v, arity, out);
        col_used[j] -= v;
        inner[pos] = 0;
    }
}

ZCombo compute_basis_product(const OrbitIndex& alpha, const OrbitIndex& beta)
{
    const std::size_t arity = alpha.arity();
    std::vector<std::pair<Monomial, std::uint32_t>> fs(alpha.entries().begin(),
                                                       alpha.entries().end());
    std::vector<std::pair<Monomial, std::uint32_t>> gs(beta.entries().begin(),
                                                       beta.entries().end());
    ZCombo out;
    if (fs.empty() || gs.empty()) {
        // One factor is the unit.
        const OrbitIndex& other = fs.empty() ? beta : alpha;
        out.emplace(other, mpz_class(1));
        return out;
    }
    std::vector<std::uint32_t> inner(fs.size() * gs.size(), 0);
    std::vector<std::uint32_t> col_used(gs.size(), 0);
    gamma_dfs(fs, gs, inner, col_used, 0, 0, arity, out);
    return out;
}

}  // namespace

const ZCombo& basis_product(const OrbitIndex& alpha, const OrbitIndex& beta)
{
    if (alpha.arity() != beta.arity())
        throw Error("arity mismatch in basis product");
    const bool swapped = cmp(alpha, beta) > 0;
    PairKey key{swapped ? beta : alpha, swapped ? alpha : beta};
    {
        std::shared_lock lock(product_cache_mutex());
        auto it = product_cache().find(key);
        if (it != product_cache().end())
            return it->second;
    }
    ZCombo combo = compute_basis_product(key.a, key.b);
    std::unique_lock lock(product_cache_mutex());
    auto [it, inserted] = product_cache().emplace(std::move(key), std::move(combo));
    return it->second;
}

MultiSymElement multiply(const MultiSymElement& x, const MultiSymElement& y)
{
    if (x.ring() != y.ring())
        throw Error("coefficient ring mismatch: " + x.ring().name() + " vs " + y.ring().name());
    if (x.arity() != y.arity())
        throw Error("arity mismatch in multisymmetric product");
    MultiSymElement out(x.ring(), x.arity());
    for (const auto& [alpha, c] : x.terms()) {
        for (const auto& [beta, d] : y.terms()) {
            const Coeff cd = c * d;
            for (const auto& [gamma, z] : basis_product(alpha, beta))
                out.add_term(gamma, cd * Coeff::from_integer(x.ring(), z));
        }
    }
    return out;
}

MultiSymElement project_n(const MultiSymElement& x, std::uint64_t n)
{
    MultiSymElement out(x.ring(), x.arity());
    for (const auto& [alpha, c] : x.terms()) {
        if (alpha.size() <= n)
            out.add_term(alpha, c);
    }
    return out;
}

namespace {

void basis_dfs(const std::vector<Monomial>& candidates, std::size_t pos, Multidegree& remaining,
               std::uint64_t cap_left, OrbitIndex& partial, std::vector<OrbitIndex>& out)
{
    if (total_of(remaining) == 0) {
        out.push_back(partial);
        return;
    }
    if (pos == candidates.size())
        return;
    const Monomial& mu = candidates[pos];
    // Maximum multiplicity of mu that fits in the remaining multidegree.
    std::uint32_t max_mult = 0;
    {
        std::uint32_t bound = std::numeric_limits<std::uint32_t>::max();
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            if (mu.exponent(i) > 0)
                bound = std::min(bound, remaining[i] / mu.exponent(i));
        }
        max_mult = bound;
    }
    if (cap_left < max_mult)
        max_mult = static_cast<std::uint32_t>(cap_left);
    for (std::uint32_t c = max_mult;; --c) {
        if (c > 0) {
            for (std::size_t i = 0; i < remaining.size(); ++i)
                remaining[i] -= c * mu.exponent(i);
            partial.add(mu, c);
        }
        basis_dfs(candidates, pos + 1, remaining, cap_left - c, partial, out);
        if (c > 0) {
            partial = partial.without(mu);
            for (std::size_t i = 0; i < remaining.size(); ++i)
                remaining[i] += c * mu.exponent(i);
        }
        if (c == 0)
            break;
    }
}

}  // namespace

std::vector<OrbitIndex> enumerate_basis(const Multidegree& a, std::uint64_t n_cap)
{
    const std::size_t m = a.size();
    std::vector<Monomial> candidates;
    // All positive-degree monomials with multidegree <= a componentwise.
    Multidegree e(m, 0);
    while (true) {
        if (total_of(e) > 0)
            candidates.emplace_back(e);
        std::size_t i = 0;
        while (i < m && e[i] == a[i]) {
            e[i] = 0;
            ++i;
        }
        if (i == m)
            break;
        ++e[i];
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Monomial& x, const Monomial& y) { return cmp(x, y) > 0; });
    std::vector<OrbitIndex> out;
    Multidegree remaining = a;
    OrbitIndex partial(m);
    basis_dfs(candidates, 0, remaining, n_cap, partial, out);
    std::sort(out.begin(), out.end(),
              [](const OrbitIndex& x, const OrbitIndex& y) { return cmp(x, y) > 0; });
    return out;
}

namespace {

void expand_dfs(const std::vector<std::pair<Monomial, Coeff>>& support, std::size_t pos,
                std::uint32_t left, OrbitIndex& partial, const Coeff& scale, MultiSymElement& out)
{
    if (pos == support.size()) {
        if (left == 0)
            out.add_term(partial, scale);
        return;
    }
    if (pos + 1 == support.size()) {
        // Last monomial takes whatever is left.
        if (left == 0) {
            out.add_term(partial, scale);
            return;
        }
        Coeff next = scale;
        for (std::uint32_t j = 0; j < left; ++j)
            next = next * support[pos].second;
        OrbitIndex full = partial;
        full.add(support[pos].first, left);
        out.add_term(full, next);
        return;
    }
    Coeff next = scale;
    for (std::uint32_t c = 0; c <= left; ++c) {
        if (c == 0) {
            expand_dfs(support, pos + 1, left, partial, next, out);
        } else {
            next = next * support[pos].second;
            OrbitIndex with = partial;
            with.add(support[pos].first, c);
            expand_dfs(support, pos + 1, left - c, with, next, out);
        }
    }
}

}  // namespace

MultiSymElement expand_e_k_of(const Polynomial& f, std::uint32_t k)
{
    if (f.has_constant_term())
        throw Error("e_k argument must have zero constant term");
    const Ring& ring = f.ring();
    const std::size_t m = f.arity();
    if (k == 0)
        return MultiSymElement::unit(ring, m);
    std::vector<std::pair<Monomial, Coeff>> support(f.terms().begin(), f.terms().end());
    MultiSymElement out(ring, m);
    OrbitIndex partial(m);
    if (support.empty())
        return out;  // e_k(0) = 0 for k >= 1
    expand_dfs(support, 0, k, partial, Coeff::one(ring), out);
    return out;
}

}  // namespace msym
