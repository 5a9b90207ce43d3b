#include "doctest.h"

#include <algorithm>
#include <random>

#include "msym/concrete.hpp"
#include "msym/io.hpp"
#include "msym/orbit.hpp"

using namespace msym;

namespace {

const Ring Z = Ring::integers();

OrbitIndex idx(const std::string& text, std::size_t m)
{
    return parse_orbit_index(text, m);
}

MultiSymElement basis1(const std::string& text, std::size_t m)
{
    return MultiSymElement::basis(Z, idx(text, m));
}

OrbitIndex rand_index(std::mt19937& rng, std::size_t m, int max_entries, std::uint32_t max_mult)
{
    std::uniform_int_distribution<int> expo(0, 2), entries(1, max_entries);
    std::uniform_int_distribution<std::uint32_t> mult(1, max_mult);
    OrbitIndex alpha(m);
    for (int e = entries(rng); e > 0; --e) {
        Multidegree d(m);
        for (auto& x : d)
            x = static_cast<std::uint32_t>(expo(rng));
        if (total_of(d) == 0)
            d[0] = 1;
        alpha.add(Monomial(d), mult(rng));
    }
    return alpha;
}

// independent count of the basis at multidegree a: multisets of
// positive-degree monomials with multidegree sum a and at most cap parts
std::uint64_t count_multisets(const std::vector<Monomial>& monos, std::size_t from,
                              Multidegree left, std::uint64_t cap)
{
    if (total_of(left) == 0)
        return 1;
    if (cap == 0)
        return 0;
    std::uint64_t total = 0;
    for (std::size_t i = from; i < monos.size(); ++i) {
        const Multidegree& d = monos[i].multidegree();
        if (!leq_componentwise(d, left))
            continue;
        Multidegree rest(left);
        for (std::size_t t = 0; t < rest.size(); ++t)
            rest[t] -= d[t];
        total += count_multisets(monos, i, rest, cap - 1);
    }
    return total;
}

std::uint64_t oracle_basis_count(std::size_t m, const Multidegree& a, std::uint64_t cap)
{
    std::vector<Monomial> monos;
    std::vector<std::uint32_t> cur(m, 0);
    // odometer over the box 0..a
    while (true) {
        if (total_of(cur) > 0 && leq_componentwise(cur, a))
            monos.emplace_back(cur);
        std::size_t i = 0;
        while (i < m && cur[i] == a[i])
            cur[i++] = 0;
        if (i == m)
            break;
        ++cur[i];
    }
    return count_multisets(monos, 0, a, cap);
}

}  // namespace

TEST_CASE("canonicalize merges repeated arguments")
{
    Monomial f = parse_monomial("y1*y2", 2), g = parse_monomial("y2^2", 2);

    auto [c2, a2] = canonicalize(2, {{f, 1}, {f, 1}});
    CHECK(c2 == 2);
    CHECK(a2.multiplicity(f) == 2);

    auto [c1, a1] = canonicalize(2, {{f, 2}, {g, 1}});
    CHECK(c1 == 1);
    CHECK(a1.multiplicity(f) == 2);
    CHECK(a1.multiplicity(g) == 1);

    auto [c6, a6] = canonicalize(2, {{f, 1}, {f, 1}, {f, 1}});
    CHECK(c6 == 6);
    CHECK(a6.multiplicity(f) == 3);

    // mixed: (f,2),(f,1) -> multinomial 3!/2!1! = 3
    auto [c3, a3] = canonicalize(2, {{f, 2}, {f, 1}});
    CHECK(c3 == 3);
    CHECK(a3 == a6);
}

TEST_CASE("multiply: unit, worked product, squares")
{
    MultiSymElement x = basis1("E{y1*y2:1, y1:1}", 2);
    CHECK(multiply(MultiSymElement::unit(Z, 2), x) == x);

    // e_{(1,1)}(y1,y2) * e_2(y3) at two slots collapses to e_{(1,1)}(y1y3, y2y3)
    MultiSymElement prod = multiply(basis1("E{y1:1, y2:1}", 3), basis1("E{y3:2}", 3));
    CHECK(project_n(prod, 2) == basis1("E{y1*y3:1, y2*y3:1}", 3));
    CHECK(format(project_n(prod, 2)) == "E{y1*y3:1, y2*y3:1}");

    MultiSymElement sq = multiply(basis1("E{y1:1}", 1), basis1("E{y1:1}", 1));
    MultiSymElement expect = basis1("E{y1^2:1}", 1) + basis1("E{y1:2}", 1).scaled(Coeff::from_int(Z, 2));
    CHECK(sq == expect);
    CHECK(format(sq) == "E{y1^2:1} + 2*E{y1:2}");

    CHECK_THROWS_AS(multiply(basis1("E{y1:1}", 1), basis1("E{y1:1}", 2)), Error);
}

TEST_CASE("product terms never shrink the index size")
{
    std::mt19937 rng(1009);
    for (int trial = 0; trial < 40; ++trial) {
        OrbitIndex alpha = rand_index(rng, 2, 2, 2), beta = rand_index(rng, 2, 2, 2);
        const auto& combo = basis_product(alpha, beta);
        REQUIRE_FALSE(combo.empty());
        Multidegree want = alpha.multidegree();
        for (std::size_t i = 0; i < want.size(); ++i)
            want[i] += beta.multidegree()[i];
        for (const auto& [gamma, c] : combo) {
            CHECK(gamma.size() >= std::max(alpha.size(), beta.size()));
            CHECK(gamma.multidegree() == want);
            CHECK(c > 0);
        }
    }
}

TEST_CASE("product formula agrees with the concrete oracle")
{
    std::mt19937 rng(2023);
    for (int trial = 0; trial < 40; ++trial) {
        OrbitIndex alpha = rand_index(rng, 2, 2, 2), beta = rand_index(rng, 2, 2, 2);
        const std::size_t n = static_cast<std::size_t>(alpha.size() + beta.size());
        ConcretePoly concrete = orbit_sum(Z, alpha, n) * orbit_sum(Z, beta, n);
        MultiSymElement abstract =
            project_n(multiply(MultiSymElement::basis(Z, alpha), MultiSymElement::basis(Z, beta)), n);
        CHECK(to_orbit_basis(concrete) == abstract);
    }
}

TEST_CASE("multiply is commutative and associative (via projections)")
{
    std::mt19937 rng(31415);
    for (int trial = 0; trial < 12; ++trial) {
        MultiSymElement x = MultiSymElement::basis(Z, rand_index(rng, 2, 2, 2));
        MultiSymElement y = MultiSymElement::basis(Z, rand_index(rng, 2, 2, 2));
        MultiSymElement z = MultiSymElement::basis(Z, rand_index(rng, 2, 2, 2));
        CHECK(multiply(x, y) == multiply(y, x));
        CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    }
}

TEST_CASE("project_n")
{
    CHECK(project_n(basis1("E{y1:3}", 1), 2).is_zero());
    MultiSymElement x = basis1("E{y1:2}", 1) + basis1("E{y1^2:1}", 1);
    CHECK(project_n(x, 2) == x);
    CHECK(project_n(project_n(x, 1), 1) == project_n(x, 1));
    CHECK(project_n(x, 1) == basis1("E{y1^2:1}", 1));
}

TEST_CASE("enumerate_basis")
{
    auto b1 = enumerate_basis(Multidegree{2}, kNoCap);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0] == idx("E{y1^2:1}", 1));
    CHECK(b1[1] == idx("E{y1:2}", 1));

    auto b2 = enumerate_basis(Multidegree{2}, 1);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == idx("E{y1^2:1}", 1));

    auto b3 = enumerate_basis(Multidegree{1, 1}, 2);
    REQUIRE(b3.size() == 2);
    CHECK(b3[0] == idx("E{y1*y2:1}", 2));
    CHECK(b3[1] == idx("E{y1:1, y2:1}", 2));

    // no duplicates, all in the right graded piece, all within the cap
    for (const Multidegree& a : {Multidegree{3, 1}, Multidegree{2, 2}, Multidegree{4, 0}}) {
        auto list = enumerate_basis(a, 3);
        for (const auto& alpha : list) {
            CHECK(alpha.multidegree() == a);
            CHECK(alpha.size() <= 3);
        }
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j)
                CHECK(list[i] != list[j]);
        CHECK(list.size() == oracle_basis_count(2, a, 3));
    }
    CHECK(enumerate_basis(Multidegree{3, 2}, kNoCap).size() == oracle_basis_count(2, Multidegree{3, 2}, 99));
}

TEST_CASE("expand_e_k_of")
{
    Polynomial f = parse_polynomial("y1 + y2", 2, Z);
    MultiSymElement e2f = expand_e_k_of(f, 2);
    CHECK(e2f == basis1("E{y1:2}", 2) + basis1("E{y1:1, y2:1}", 2) + basis1("E{y2:2}", 2));

    CHECK(expand_e_k_of(parse_polynomial("y1^2*y2", 2, Z), 3) == basis1("E{y1^2*y2:3}", 2));
    CHECK(expand_e_k_of(f, 0) == MultiSymElement::unit(Z, 2));
    CHECK_THROWS_AS(expand_e_k_of(parse_polynomial("y1 + 1", 2, Z), 2), Error);

    // coefficients multiply through: e_2(2 y1 + 3 y2)
    MultiSymElement g = expand_e_k_of(parse_polynomial("2*y1 + 3*y2", 2, Z), 2);
    CHECK(g.coefficient(idx("E{y1:2}", 2)).str() == "4");
    CHECK(g.coefficient(idx("E{y1:1, y2:1}", 2)).str() == "6");
    CHECK(g.coefficient(idx("E{y2:2}", 2)).str() == "9");

    // soundness against the concrete ring: e_k(f) evaluated with n slots
    for (std::uint32_t k = 1; k <= 3; ++k) {
        ConcretePoly direct = elementary_tuple(Z, 2, 4, {f}, {k});
        MultiSymElement coords = to_orbit_basis(direct);
        CHECK(coords == project_n(expand_e_k_of(f, k), 4));
    }
}

TEST_CASE("multisym element arithmetic and formatting")
{
    MultiSymElement x = basis1("E{y1:2}", 2) - basis1("E{y2:2}", 2);
    CHECK(format(x) == "E{y1:2} - E{y2:2}");
    CHECK(format(x - x) == "0");
    CHECK(format(MultiSymElement::unit(Z, 2)) == "E{}");
    CHECK(parse_multisym("E{y1:2} - E{y2:2}", 2, Z) == x);
    CHECK(parse_multisym("2*E{y1:2}", 2, Z) == basis1("E{y1:2}", 2).scaled(Coeff::from_int(Z, 2)));
}
