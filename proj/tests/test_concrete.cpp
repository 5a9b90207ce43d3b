#include "doctest.h"

#include <random>

#include "msym/concrete.hpp"
#include "msym/io.hpp"
#include "msym/orbit.hpp"

using namespace msym;

namespace {

const Ring Z = Ring::integers();

// one monomial term from (family, slot, exponent) factors
ConcretePoly cmono(std::size_t n, std::size_t m,
                   std::initializer_list<std::array<std::size_t, 3>> factors, long long c = 1)
{
    SlotMonomial mu(n, m);
    for (const auto& f : factors)
        mu.set_exponent(f[0], f[1], mu.exponent(f[0], f[1]) + static_cast<std::uint32_t>(f[2]));
    ConcretePoly p(Z, n, m);
    p.add_term(mu, Coeff::from_int(Z, c));
    return p;
}

OrbitIndex index_of(const std::string& text, std::size_t m)
{
    return parse_orbit_index(text, m);
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("substitute_slot")
{
    CHECK(substitute_slot(parse_polynomial("y1*y2", 2, Z), 2, 3) ==
          cmono(3, 2, {{{1, 2, 1}}, {{2, 2, 1}}}));
    CHECK(substitute_slot(parse_polynomial("y1 + 1", 2, Z), 1, 1) ==
          cmono(1, 2, {{{1, 1, 1}}}) + ConcretePoly::constant(Z, 1, 2, Coeff::one(Z)));
    CHECK(substitute_slot(Polynomial::zero(Z, 2), 1, 2).is_zero());
    CHECK_THROWS_AS(substitute_slot(parse_polynomial("y1", 2, Z), 4, 3), Error);
    CHECK_THROWS_AS(substitute_slot(parse_polynomial("y1", 2, Z), 0, 3), Error);
}

TEST_CASE("apply_permutation")
{
    ConcretePoly p = cmono(2, 2, {{{1, 1, 1}}, {{2, 2, 1}}});  // x1(1)*x2(2)
    CHECK(apply_permutation(p, {2, 1}) == cmono(2, 2, {{{1, 2, 1}}, {{2, 1, 1}}}));
    CHECK(apply_permutation(p, {1, 2}) == p);

    ConcretePoly inv = cmono(2, 1, {{{1, 1, 1}}}) + cmono(2, 1, {{{1, 2, 1}}});
    CHECK(apply_permutation(inv, {2, 1}) == inv);
    CHECK_THROWS_AS(apply_permutation(p, {1, 1}), Error);
}

TEST_CASE("is_invariant")
{
    CHECK(is_invariant(cmono(2, 1, {{{1, 1, 1}}}) + cmono(2, 1, {{{1, 2, 1}}})));
    CHECK_FALSE(is_invariant(cmono(2, 1, {{{1, 1, 1}}})));
    std::mt19937 rng(311);
    std::uniform_int_distribution<int> mult(1, 2), expo(1, 2);
    for (int trial = 0; trial < 20; ++trial) {
        OrbitIndex alpha(2);
        for (int e = mult(rng); e > 0; --e) {
            Multidegree d{static_cast<std::uint32_t>(expo(rng)), static_cast<std::uint32_t>(expo(rng) - 1)};
            if (total_of(d) > 0)
                alpha.add(Monomial(d), static_cast<std::uint32_t>(mult(rng)));
        }
        CHECK(is_invariant(orbit_sum(Z, alpha, 3)));
    }
}

TEST_CASE("elementary_tuple matches the worked 3- and 12-term sums")
{
    std::vector<Polynomial> fs = {parse_polynomial("y1", 2, Z), parse_polynomial("y2", 2, Z)};

    ConcretePoly expect3 = cmono(3, 2, {{{1, 1, 1}}, {{1, 2, 1}}, {{2, 3, 1}}}) +
                           cmono(3, 2, {{{1, 1, 1}}, {{2, 2, 1}}, {{1, 3, 1}}}) +
                           cmono(3, 2, {{{2, 1, 1}}, {{1, 2, 1}}, {{1, 3, 1}}});
    CHECK(elementary_tuple(Z, 2, 3, fs, {2, 1}) == expect3);
    CHECK(format(elementary_tuple(Z, 2, 3, fs, {2, 1})) ==
          "x1(1)*x1(2)*x2(3) + x1(1)*x1(3)*x2(2) + x1(2)*x1(3)*x2(1)");

    // n=4: every placement of {y1,y1,y2} on distinct slots, 12 terms
    ConcretePoly expect12(Z, 4, 2);
    for (std::size_t j1 = 1; j1 <= 4; ++j1)
        for (std::size_t j2 = j1 + 1; j2 <= 4; ++j2)
            for (std::size_t j3 = 1; j3 <= 4; ++j3) {
                if (j3 == j1 || j3 == j2)
                    continue;
                SlotMonomial mu(4, 2);
                mu.set_exponent(1, j1, 1);
                mu.set_exponent(1, j2, 1);
                mu.set_exponent(2, j3, 1);
                expect12.add_term(mu, Coeff::one(Z));
            }
    ConcretePoly got12 = elementary_tuple(Z, 2, 4, fs, {2, 1});
    CHECK(got12.terms().size() == 12);
    CHECK(got12 == expect12);

    CHECK(elementary_tuple(Z, 1, 2, {parse_polynomial("y1", 1, Z)}, {1}) ==
          cmono(2, 1, {{{1, 1, 1}}}) + cmono(2, 1, {{{1, 2, 1}}}));

    // sum of alphas beyond n vanishes; length mismatch errors
    CHECK(elementary_tuple(Z, 2, 2, fs, {2, 1}).is_zero());
    CHECK_THROWS_AS(elementary_tuple(Z, 2, 3, fs, {2}), Error);
}

TEST_CASE("elementary_tuple handles non-monomial arguments")
{
    // e_1(y1+y2^2) = sum over slots of (x1(j) + x2(j)^2)
    Polynomial f = parse_polynomial("y1 + y2^2", 2, Z);
    ConcretePoly expect(Z, 2, 2);
    expect = cmono(2, 2, {{{1, 1, 1}}}) + cmono(2, 2, {{{2, 1, 2}}}) +
             cmono(2, 2, {{{1, 2, 1}}}) + cmono(2, 2, {{{2, 2, 2}}});
    CHECK(elementary_tuple(Z, 2, 2, {f}, {1}) == expect);
    // e_2(f) = f(1) f(2)
    CHECK(elementary_tuple(Z, 2, 2, {f}, {2}) ==
          substitute_slot(f, 1, 2) * substitute_slot(f, 2, 2));
}

TEST_CASE("orbit_sum basics")
{
    OrbitIndex alpha = index_of("E{y1:2, y2:1}", 2);
    std::vector<Polynomial> fs = {parse_polynomial("y1", 2, Z), parse_polynomial("y2", 2, Z)};
    CHECK(orbit_sum(Z, alpha, 3) == elementary_tuple(Z, 2, 3, fs, {2, 1}));
    CHECK(orbit_sum(Z, index_of("E{y1:3}", 1), 2).is_zero());
    CHECK(orbit_sum(Z, OrbitIndex(2), 2) ==
          ConcretePoly::constant(Z, 2, 2, Coeff::one(Z)));
}

TEST_CASE("orbit_sum properties on random indices")
{
    std::mt19937 rng(517);
    std::uniform_int_distribution<int> expo(0, 2), mult(1, 2), pick(0, 2);
    for (int trial = 0; trial < 30; ++trial) {
        OrbitIndex alpha(2);
        for (int e = 0, cnt = 1 + pick(rng); e < cnt; ++e) {
            Multidegree d{static_cast<std::uint32_t>(expo(rng)), static_cast<std::uint32_t>(expo(rng))};
            if (total_of(d) == 0)
                d[0] = 1;
            alpha.add(Monomial(d), static_cast<std::uint32_t>(mult(rng)));
        }
        const std::size_t n = static_cast<std::size_t>(alpha.size());
        ConcretePoly p = orbit_sum(Z, alpha, n);
        REQUIRE_FALSE(p.is_zero());
        CHECK(is_invariant(p));
        // multidegree bookkeeping
        for (const auto& [mu, c] : p.terms())
            CHECK(mu.multidegree() == alpha.multidegree());
        // coordinates round trip
        MultiSymElement coords = to_orbit_basis(p);
        CHECK(coords == MultiSymElement::basis(Z, alpha));
        // projection compatibility: dropping the last slot
        if (n >= 2)
            CHECK(project_slots(p, n - 1) == orbit_sum(Z, alpha, n - 1));
    }
}

TEST_CASE("elementary_tuple argument symmetries")
{
    std::vector<Polynomial> fg = {parse_polynomial("y1", 2, Z), parse_polynomial("y2^2", 2, Z)};
    std::vector<Polynomial> gf = {fg[1], fg[0]};
    CHECK(elementary_tuple(Z, 2, 4, fg, {2, 1}) == elementary_tuple(Z, 2, 4, gf, {1, 2}));

    // repeated argument collapse: e_{(a,b)}(f,f) = C(a+b,a) e_{a+b}(f)
    std::vector<Polynomial> ff = {fg[0], fg[0]};
    for (std::uint32_t a = 1; a <= 2; ++a)
        for (std::uint32_t b = 1; b <= 2; ++b) {
            ConcretePoly merged = elementary_tuple(Z, 2, 4, {fg[0]}, {a + b});
            CHECK(elementary_tuple(Z, 2, 4, ff, {a, b}) ==
                  merged.scaled(Coeff::from_int(Z, static_cast<long long>(binom(a + b, a)))));
        }

    // single-monomial f and multiplicity k agree with the orbit sum
    for (std::uint32_t k = 1; k <= 3; ++k) {
        OrbitIndex alpha(2);
        alpha.add(parse_monomial("y1*y2", 2), k);
        CHECK(elementary_tuple(Z, 2, 3, {parse_polynomial("y1*y2", 2, Z)}, {k}) ==
              orbit_sum(Z, alpha, 3));
    }
}

TEST_CASE("to_orbit_basis")
{
    // p_1^2 = p_2 + 2 e_2 in one family
    ConcretePoly p1 = cmono(2, 1, {{{1, 1, 1}}}) + cmono(2, 1, {{{1, 2, 1}}});
    MultiSymElement got = to_orbit_basis(p1 * p1);
    MultiSymElement expect = MultiSymElement::basis(Z, index_of("E{y1^2:1}", 1)) +
                             MultiSymElement::basis(Z, index_of("E{y1:2}", 1)).scaled(Coeff::from_int(Z, 2));
    CHECK(got == expect);
    CHECK(format(got) == "E{y1^2:1} + 2*E{y1:2}");

    CHECK_THROWS_AS(to_orbit_basis(cmono(2, 1, {{{1, 1, 1}}})), Error);
    CHECK(to_orbit_basis(ConcretePoly::zero(Z, 2, 2)).is_zero());
}

TEST_CASE("concrete text form")
{
    ConcretePoly p = parse_concrete("x2(1)*x1(2)^3", 2, 2, Z);
    CHECK(format(p) == "x1(2)^3*x2(1)");
    CHECK(parse_concrete(format(p), 2, 2, Z) == p);
    CHECK_THROWS_AS(parse_concrete("x1(3)", 2, 2, Z), ParseError);  // slot out of range
    CHECK_THROWS_AS(parse_concrete("x3(1)", 2, 2, Z), ParseError);  // family out of range
}

TEST_CASE("project_slots")
{
    OrbitIndex alpha = index_of("E{y1:2}", 1);
    ConcretePoly p = orbit_sum(Z, alpha, 3);
    CHECK(project_slots(p, 2) == orbit_sum(Z, alpha, 2));
    CHECK(project_slots(p, 1).is_zero());  // |alpha| = 2 > 1
    CHECK(project_slots(p, 3) == p);
}
