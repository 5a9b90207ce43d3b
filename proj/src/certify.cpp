#include "msym/certify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "json.hpp"
#include "msym/concrete.hpp"

namespace msym {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

const Ring& q_ring()
{
    static const Ring q = Ring::rationals();
    return q;
}

}  // namespace

Budget Budget::seconds(double s)
{
    Budget b;
    b.limited_ = true;
    b.deadline_ = Clock::now() + std::chrono::microseconds(static_cast<long long>(s * 1e6));
    return b;
}

void Budget::check(const std::string& where) const
{
    if (limited_ && Clock::now() > deadline_)
        throw BudgetExceeded("time budget exceeded during " + where);
}

void RankCertificate::put(const std::string& key, std::uint64_t value)
{
    data.emplace_back(key, std::to_string(value));
}

void RankCertificate::put(const std::string& key, const std::string& value)
{
    data.emplace_back(key, value);
}

std::string multidegree_text(const Multidegree& a)
{
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(a[i]);
    }
    out += ")";
    return out;
}

std::string RankCertificate::line() const
{
    std::string out = suite;
    if (has_n)
        out += " n=" + std::to_string(n);
    out += " m=" + std::to_string(m);
    out += " a=" + multidegree_text(a);
    out += " ring=" + ring_name;
    for (const auto& [k, v] : data)
        out += " " + k + "=" + v;
    out += pass ? " : pass" : " : FAIL";
    if (!note.empty())
        out += "  [" + note + "]";
    return out;
}

std::string RankCertificate::to_json() const
{
    nlohmann::ordered_json j;
    j["kind"] = "certificate";
    j["suite"] = suite;
    if (has_n)
        j["n"] = std::to_string(n);
    j["m"] = std::to_string(m);
    nlohmann::ordered_json ja = nlohmann::ordered_json::array();
    for (std::uint32_t v : a)
        ja.push_back(std::to_string(v));
    j["a"] = ja;
    j["ring"] = ring_name;
    nlohmann::ordered_json jd = nlohmann::ordered_json::object();
    for (const auto& [k, v] : data)
        jd[k] = v;
    j["data"] = jd;
    j["pass"] = pass;
    if (!note.empty())
        j["note"] = note;
    j["wall_ms"] = std::to_string(wall_ms);
    return j.dump();
}

std::vector<Multidegree> multidegrees_up_to(std::size_t m, std::uint32_t maxdeg)
{
    std::vector<Multidegree> out;
    Multidegree a(m, 0);
    while (true) {
        const std::uint32_t t = total_of(a);
        if (t >= 1 && t <= maxdeg)
            out.push_back(a);
        // Odometer with per-digit bound maxdeg.
        std::size_t i = m;
        while (i > 0) {
            if (a[i - 1] < maxdeg) {
                ++a[i - 1];
                break;
            }
            a[i - 1] = 0;
            --i;
        }
        if (i == 0)
            break;
    }
    std::stable_sort(out.begin(), out.end(), [](const Multidegree& x, const Multidegree& y) {
        if (total_of(x) != total_of(y))
            return total_of(x) < total_of(y);
        return x < y;
    });
    return out;
}

std::vector<Monomial> monomials_in_box(const Multidegree& cap, std::uint32_t lo, std::uint32_t hi)
{
    std::vector<Monomial> out;
    const std::size_t m = cap.size();
    Multidegree e(m, 0);
    while (true) {
        const std::uint32_t t = total_of(e);
        if (t >= lo && t <= hi)
            out.emplace_back(e);
        std::size_t i = m;
        while (i > 0) {
            if (e[i - 1] < cap[i - 1]) {
                ++e[i - 1];
                break;
            }
            e[i - 1] = 0;
            --i;
        }
        if (i == 0)
            break;
    }
    return out;
}

namespace {

// Subtract b from a componentwise; caller guarantees b <= a.
Multidegree minus(const Multidegree& a, const Multidegree& b)
{
    Multidegree out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

bool is_zero_deg(const Multidegree& a)
{
    return total_of(a) == 0;
}

Multidegree scaled_deg(const Multidegree& a, std::uint32_t k)
{
    Multidegree out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] * k;
    return out;
}

// DFS over a fixed symbol list, assigning exponents so the multidegrees sum
// to `a` exactly.
void c_monomial_dfs(const std::vector<GenSymbol>& symbols, std::size_t at, Multidegree& remaining,
                    GenMonomial& acc, std::vector<GenMonomial>& out)
{
    if (at == symbols.size()) {
        if (is_zero_deg(remaining))
            out.push_back(acc);
        return;
    }
    const Multidegree d = symbols[at].multidegree();
    // exponent 0 first, then as many copies as fit
    c_monomial_dfs(symbols, at + 1, remaining, acc, out);
    GenMonomial saved = acc;
    Multidegree rem = remaining;
    std::uint32_t c = 0;
    while (leq_componentwise(d, rem)) {
        rem = minus(rem, d);
        ++c;
        GenMonomial next = saved;
        next.mul_symbol(symbols[at], c);
        remaining.swap(rem);
        acc = next;
        c_monomial_dfs(symbols, at + 1, remaining, acc, out);
        remaining.swap(rem);
    }
    acc = saved;
}

}  // namespace

std::vector<GenMonomial> c_monomial_basis(std::size_t m, const Multidegree& a)
{
    std::vector<GenSymbol> symbols;
    for (const Monomial& mu : monomials_in_box(a, 1, total_of(a))) {
        if (!mu.is_primitive())
            continue;
        for (std::uint32_t i = 1; leq_componentwise(scaled_deg(mu.multidegree(), i), a); ++i)
            symbols.emplace_back(i, mu);
    }
    std::vector<GenMonomial> out;
    Multidegree remaining = a;
    GenMonomial acc(m);
    c_monomial_dfs(symbols, 0, remaining, acc, out);
    std::sort(out.begin(), out.end(),
              [](const GenMonomial& x, const GenMonomial& y) { return cmp(x, y) > 0; });
    return out;
}

// ---- concrete-side helpers --------------------------------------------------

namespace {

using SlotIndex = std::map<SlotMonomial, std::size_t, SlotMonomialGreater>;

// All monomials of A(n,m) with multidegree a: one composition of a_i over the
// n slots per family.
std::vector<SlotMonomial> slot_monomials_of(std::size_t n, std::size_t m, const Multidegree& a)
{
    std::vector<SlotMonomial> out;
    SlotMonomial acc(n, m);
    // odometer over (family, slot) exponents is overkill; recurse per family
    const std::function<void(std::size_t)> go = [&](std::size_t fam) {
        if (fam > m) {
            out.push_back(acc);
            return;
        }
        // compositions of a[fam-1] into n parts
        std::vector<std::uint32_t> part(n, 0);
        const std::uint32_t tot = a[fam - 1];
        const std::function<void(std::size_t, std::uint32_t)> comp = [&](std::size_t j,
                                                                         std::uint32_t left) {
            if (j == n) {
                if (left == 0) {
                    for (std::size_t t = 1; t <= n; ++t)
                        acc.set_exponent(fam, t, part[t - 1]);
                    go(fam + 1);
                    for (std::size_t t = 1; t <= n; ++t)
                        acc.set_exponent(fam, t, 0);
                }
                return;
            }
            for (std::uint32_t v = 0; v <= left; ++v) {
                part[j] = v;
                comp(j + 1, left - v);
            }
            part[j] = 0;
        };
        comp(0, tot);
    };
    go(1);
    return out;
}

SlotMonomial permute_slots(const SlotMonomial& e, const std::vector<std::size_t>& sigma)
{
    SlotMonomial out(e.slots(), e.families());
    for (std::size_t i = 1; i <= e.families(); ++i)
        for (std::size_t j = 1; j <= e.slots(); ++j)
            out.set_exponent(i, sigma[j - 1], e.exponent(i, j));
    return out;
}

std::vector<Coeff> concrete_row(const ConcretePoly& p, const SlotIndex& index, const Ring& field)
{
    std::vector<Coeff> row(index.size(), Coeff::zero(field));
    for (const auto& [mu, c] : p.terms()) {
        const auto it = index.find(mu);
        if (it == index.end())
            throw Error("internal error: monomial outside the indexed degree piece");
        row[it->second] = row[it->second] + coerce(c, field);
    }
    return row;
}

using OrbitColIndex = std::map<OrbitIndex, std::size_t, OrbitIndexGreater>;

// With `project` the element may carry terms outside the indexed piece
// (they are dropped); otherwise such terms are an internal error.
std::vector<Coeff> orbit_row(const MultiSymElement& x, const OrbitColIndex& index,
                             const Ring& field, bool project = false)
{
    std::vector<Coeff> row(index.size(), Coeff::zero(field));
    for (const auto& [alpha, c] : x.terms()) {
        const auto it = index.find(alpha);
        if (it == index.end()) {
            if (project)
                continue;
            throw Error("internal error: orbit index outside the indexed degree piece");
        }
        row[it->second] = row[it->second] + coerce(c, field);
    }
    return row;
}

GeneratorPoly monomial_poly(const GenMonomial& b, const Ring& ring)
{
    GeneratorPoly g(ring, b.arity());
    g.add_term(b, Coeff::one(ring));
    return g;
}

}  // namespace

// ---- certifiers -------------------------------------------------------------

RankCertificate certify_basis(std::size_t n, std::size_t m, const Multidegree& a,
                              const Budget& budget)
{
    const auto t0 = Clock::now();
    RankCertificate cert;
    cert.suite = "basis";
    cert.n = n;
    cert.m = m;
    cert.a = a;
    cert.ring_name = "q";

    const auto basis = enumerate_basis(a, n);
    const auto cols = slot_monomials_of(n, m, a);
    SlotIndex index;
    for (const auto& mu : cols)
        index.emplace(mu, index.size());

    // Invariant subspace: span of symmetrized monomials.
    RowEchelon sym_span(q_ring(), cols.size());
    std::vector<std::size_t> sigma(n);
    for (const auto& e : cols) {
        budget.check("basis symmetrization");
        std::vector<Coeff> row(cols.size(), Coeff::zero(q_ring()));
        for (std::size_t j = 0; j < n; ++j)
            sigma[j] = j + 1;
        do {
            const auto it = index.find(permute_slots(e, sigma));
            row[it->second] = row[it->second] + Coeff::one(q_ring());
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        sym_span.insert(std::move(row));
    }

    // Orbit sums must be independent and exactly fill that subspace.
    RowEchelon orbit_span(q_ring(), cols.size());
    std::size_t orbit_rank = 0;
    for (const auto& alpha : basis) {
        budget.check("basis orbit sums");
        if (orbit_span.insert(concrete_row(orbit_sum(q_ring(), alpha, n), index, q_ring())))
            ++orbit_rank;
    }

    cert.put("basis_count", basis.size());
    cert.put("invariant_rank", sym_span.rank());
    cert.put("orbitsum_rank", orbit_rank);
    cert.pass = basis.size() == sym_span.rank() && orbit_rank == basis.size();
    cert.wall_ms = ms_since(t0);
    return cert;
}

RankCertificate certify_product(std::size_t n, std::size_t m, const Multidegree& a,
                                const Budget& budget)
{
    const auto t0 = Clock::now();
    RankCertificate cert;
    cert.suite = "product";
    cert.n = n;
    cert.m = m;
    cert.a = a;
    cert.ring_name = "z";

    const Ring z = Ring::integers();
    std::uint64_t pairs = 0;
    cert.pass = true;
    for (const auto& d : multidegrees_up_to(m, total_of(a))) {
        if (!leq_componentwise(d, a))
            continue;
        const Multidegree rest = minus(a, d);
        if (is_zero_deg(rest))
            continue;
        if (rest < d)
            continue;  // each unordered split once
        const auto alphas = enumerate_basis(d, n);
        const auto betas = enumerate_basis(rest, n);
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            budget.check("product cases");
            const std::size_t j0 = (d == rest) ? i : 0;
            for (std::size_t j = j0; j < betas.size(); ++j) {
                const auto lhs = project_n(
                    multiply(MultiSymElement::basis(z, alphas[i]), MultiSymElement::basis(z, betas[j])),
                    n);
                const auto rhs =
                    to_orbit_basis(orbit_sum(z, alphas[i], n) * orbit_sum(z, betas[j], n));
                ++pairs;
                if (!(lhs == rhs) && cert.pass) {
                    cert.pass = false;
                    cert.note = "mismatch at alpha/beta pair " + std::to_string(pairs);
                }
            }
        }
    }
    cert.put("pairs", pairs);
    cert.wall_ms = ms_since(t0);
    return cert;
}

RankCertificate certify_rewrite(std::size_t n, std::size_t m, const Multidegree& a,
                                const Budget& budget)
{
    const auto t0 = Clock::now();
    RankCertificate cert;
    cert.suite = "rewrite";
    cert.n = n;
    cert.m = m;
    cert.a = a;
    cert.ring_name = "z";

    const Ring z = Ring::integers();
    std::uint64_t cases = 0;
    cert.pass = true;
    for (const auto& alpha : enumerate_basis(a, kNoCap)) {
        budget.check("rewrite cases");
        const GeneratorPoly g = rewrite_to_generators(alpha);
        for (const auto& [mono, c] : g.terms()) {
            if (mono.multidegree() != a)
                throw Error("internal error: rewrite output is not homogeneous of the input multidegree");
        }
        ++cases;
        if (!(eval_generator_poly(g, n) == orbit_sum(z, alpha, n)) && cert.pass) {
            cert.pass = false;
            cert.note = "mismatch at case " + std::to_string(cases);
        }
    }
    cert.put("cases", cases);
    cert.wall_ms = ms_since(t0);
    return cert;
}

RankCertificate certify_relation_span(std::size_t n, std::size_t m, const Multidegree& a,
                                      std::uint32_t k, const Budget& budget)
{
    const auto t0 = Clock::now();
    RankCertificate cert;
    cert.suite = "relations";
    cert.n = n;
    cert.m = m;
    cert.a = a;
    cert.ring_name = "q";
    cert.put("k", static_cast<std::uint64_t>(k));

    std::vector<OrbitIndex> v;
    for (const auto& alpha : enumerate_basis(a, k))
        if (alpha.size() == k)
            v.push_back(alpha);
    if (v.empty()) {
        cert.put("v_dim", static_cast<std::uint64_t>(0));
        cert.put("span_rank", static_cast<std::uint64_t>(0));
        cert.put("probes", static_cast<std::uint64_t>(0));
        cert.put("escalation", static_cast<std::uint64_t>(0));
        cert.pass = true;
        cert.wall_ms = ms_since(t0);
        return cert;
    }
    OrbitColIndex index;
    for (const auto& alpha : v)
        index.emplace(alpha, index.size());

    // Probe arguments f live on the monomials that can appear in a relevant
    // alpha: degree small enough to leave room for k-1 more factors.
    const std::uint32_t room = total_of(a) - (k - 1);
    const std::vector<Monomial> universe = monomials_in_box(a, 1, room);

    RowEchelon span(q_ring(), v.size());
    std::uint64_t probes = 0;
    std::uint32_t level = 1;
    bool done = false;
    for (std::uint32_t c = 1; c <= k && !done; ++c) {
        level = c;
        std::vector<std::uint32_t> lam(universe.size(), 0);
        while (true) {
            // odometer over {0..c}^universe
            std::size_t i = universe.size();
            while (i > 0) {
                if (lam[i - 1] < c) {
                    ++lam[i - 1];
                    break;
                }
                lam[i - 1] = 0;
                --i;
            }
            if (i == 0)
                break;
            // levels partition by maximum entry
            const std::uint32_t mx = *std::max_element(lam.begin(), lam.end());
            if (mx != c && c > 1)
                continue;
            if ((probes & 0xff) == 0)
                budget.check("relation span probes");
            Polynomial f(q_ring(), m);
            for (std::size_t t = 0; t < universe.size(); ++t)
                if (lam[t] != 0)
                    f.add_term(universe[t], Coeff::from_int(q_ring(), lam[t]));
            ++probes;
            if (span.insert(orbit_row(expand_e_k_of(f, k), index, q_ring(), true)) &&
                span.rank() == v.size()) {
                done = true;
                break;
            }
        }
    }
    cert.put("v_dim", v.size());
    cert.put("span_rank", span.rank());
    cert.put("probes", probes);
    cert.put("escalation", static_cast<std::uint64_t>(level));
    cert.pass = span.rank() == v.size();
    cert.wall_ms = ms_since(t0);
    return cert;
}

RankCertificate certify_presentation(std::size_t n, std::size_t m, const Multidegree& a,
                                     const Ring& ring, const Budget& budget)
{
    const auto t0 = Clock::now();
    if (!ring.is_field())
        throw Error("presentation certification needs a field, got " + ring.name());
    RankCertificate cert;
    cert.suite = "presentation";
    cert.n = n;
    cert.m = m;
    cert.a = a;
    cert.ring_name = ring.name();

    const auto cmonos = c_monomial_basis(m, a);
    std::map<GenMonomial, std::size_t, GenMonomialGreater> index;
    for (const auto& b : cmonos)
        index.emplace(b, index.size());

    const std::size_t invariant_rank = enumerate_basis(a, n).size();

    RowEchelon ideal_span(ring, cmonos.size());
    for (const auto& d : multidegrees_up_to(m, total_of(a))) {
        if (!leq_componentwise(d, a) || total_of(d) <= n)
            continue;  // |alpha| <= |∂(alpha)|, so |alpha| > n needs |d| > n
        const auto complements = c_monomial_basis(m, minus(a, d));
        for (const auto& alpha : enumerate_basis(d, kNoCap)) {
            if (alpha.size() <= n)
                continue;
            budget.check("presentation ideal span");
            const GeneratorPoly g = rewrite_to_generators(alpha).with_ring(ring);
            for (const auto& b : complements) {
                const GeneratorPoly prod = monomial_poly(b, ring) * g;
                std::vector<Coeff> row(cmonos.size(), Coeff::zero(ring));
                for (const auto& [mono, c] : prod.terms()) {
                    const auto it = index.find(mono);
                    if (it == index.end())
                        throw Error("internal error: ideal element leaves the graded piece");
                    row[it->second] = row[it->second] + c;
                }
                ideal_span.insert(std::move(row));
            }
        }
    }

    cert.put("c_dim", cmonos.size());
    cert.put("ideal_rank", ideal_span.rank());
    cert.put("quotient_rank", cmonos.size() - ideal_span.rank());
    cert.put("invariant_rank", invariant_rank);
    cert.pass = cmonos.size() - ideal_span.rank() == invariant_rank;
    cert.wall_ms = ms_since(t0);
    return cert;
}

namespace {

struct GenEntry {
    std::uint32_t k;
    Monomial mu;
    std::uint32_t degree;  // k * l(mu)
    Multidegree contrib;   // k * ∂(mu)
};

void product_dfs(const std::vector<GenEntry>& gens, std::size_t at, Multidegree& remaining,
                 GenMonomial& acc, std::uint32_t max_degree,
                 std::vector<std::pair<std::uint32_t, GenMonomial>>& out)
{
    if (at == gens.size()) {
        if (is_zero_deg(remaining))
            out.emplace_back(max_degree, acc);
        return;
    }
    product_dfs(gens, at + 1, remaining, acc, max_degree, out);
    const GenEntry& g = gens[at];
    GenMonomial saved = acc;
    Multidegree rem = remaining;
    std::uint32_t c = 0;
    while (leq_componentwise(g.contrib, rem)) {
        rem = minus(rem, g.contrib);
        ++c;
        GenMonomial next = saved;
        next.mul_symbol(GenSymbol(g.k, g.mu), c);
        remaining.swap(rem);
        acc = next;
        product_dfs(gens, at + 1, remaining, acc, std::max(max_degree, g.degree), out);
        remaining.swap(rem);
    }
    acc = saved;
}

// Rank certificate for "products of the given generators span A(n,m,a)",
// recording the least generator-degree threshold at which spanning succeeds.
RankCertificate span_by_generators(const std::string& suite, std::size_t n, std::size_t m,
                                   const Multidegree& a, const Ring& field,
                                   const std::vector<GenEntry>& gens, const Budget& budget)
{
    const auto t0 = Clock::now();
    RankCertificate cert;
    cert.suite = suite;
    cert.n = n;
    cert.m = m;
    cert.a = a;
    cert.ring_name = field.name();

    const auto basis = enumerate_basis(a, n);
    OrbitColIndex index;
    for (const auto& alpha : basis)
        index.emplace(alpha, index.size());

    std::vector<std::pair<std::uint32_t, GenMonomial>> products;
    Multidegree remaining = a;
    GenMonomial acc(m);
    product_dfs(gens, 0, remaining, acc, 0, products);
    std::stable_sort(products.begin(), products.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });

    RowEchelon span(field, basis.size());
    std::uint32_t min_span_degree = 0;
    for (const auto& [deg, b] : products) {
        budget.check(suite + " span");
        const MultiSymElement x =
            project_n(eval_generator_poly_abstract(monomial_poly(b, field), field),
                      static_cast<std::uint64_t>(n));
        if (span.insert(orbit_row(x, index, field)) && span.rank() == basis.size()) {
            min_span_degree = deg;
            break;
        }
    }
    cert.put("dim", basis.size());
    cert.put("span_rank", span.rank());
    cert.put("min_span_degree", static_cast<std::uint64_t>(min_span_degree));
    cert.pass = span.rank() == basis.size();
    cert.wall_ms = ms_since(t0);
    return cert;
}

}  // namespace

std::vector<RankCertificate> certify_generation_bound(std::size_t n, std::size_t m,
                                                      const Ring& ring, std::uint32_t maxdeg,
                                                      const Budget& budget)
{
    if (!ring.is_field())
        throw Error("generation-bound certification needs a field, got " + ring.name());
    const std::uint32_t bound =
        static_cast<std::uint32_t>(std::max<std::size_t>(n, n * (m - 1)));
    std::vector<RankCertificate> out;
    for (const auto& a : multidegrees_up_to(m, maxdeg)) {
        std::vector<GenEntry> gens;
        for (const Monomial& mu : monomials_in_box(a, 1, bound)) {
            if (!mu.is_primitive())
                continue;
            const std::uint32_t l = mu.total_degree();
            for (std::uint32_t k = 1; k <= n && k * l <= bound; ++k) {
                const Multidegree contrib = scaled_deg(mu.multidegree(), k);
                if (leq_componentwise(contrib, a))
                    gens.push_back({k, mu, k * l, contrib});
            }
        }
        RankCertificate cert =
            span_by_generators("degree-bound", n, m, a, ring, gens, budget);
        cert.put("bound", static_cast<std::uint64_t>(bound));
        out.push_back(std::move(cert));
    }
    return out;
}

RankCertificate certify_freeness(std::size_t m, const Multidegree& a, const Budget& budget)
{
    const auto t0 = Clock::now();
    RankCertificate cert;
    cert.suite = "freeness";
    cert.has_n = false;
    cert.m = m;
    cert.a = a;
    cert.ring_name = "q";

    const auto cmonos = c_monomial_basis(m, a);
    const auto basis = enumerate_basis(a, kNoCap);

    // sigma_m is injective on the degree-a piece already at n = |a|: every
    // orbit index of multidegree a has size at most |a|.
    OrbitColIndex index;
    for (const auto& alpha : basis)
        index.emplace(alpha, index.size());
    RowEchelon span(q_ring(), basis.size());
    std::size_t sigma_rank = 0;
    for (const auto& b : cmonos) {
        budget.check("freeness sigma images");
        const MultiSymElement x =
            eval_generator_poly_abstract(monomial_poly(b, q_ring()), q_ring());
        if (span.insert(orbit_row(x, index, q_ring())))
            ++sigma_rank;
    }

    cert.put("c_monomials", cmonos.size());
    cert.put("orbit_count", basis.size());
    cert.put("sigma_rank", sigma_rank);
    cert.pass = cmonos.size() == basis.size() && sigma_rank == cmonos.size();
    cert.wall_ms = ms_since(t0);
    return cert;
}

RankCertificate certify_e1_generation(std::size_t n, std::size_t m, const Multidegree& a,
                                      const Budget& budget)
{
    std::vector<GenEntry> gens;
    for (const Monomial& mu : monomials_in_box(a, 1, static_cast<std::uint32_t>(n))) {
        const Multidegree contrib = mu.multidegree();
        gens.push_back({1, mu, mu.total_degree(), contrib});
    }
    return span_by_generators("e1-generation", n, m, a, q_ring(), gens, budget);
}

}  // namespace msym
