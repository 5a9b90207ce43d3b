#include "doctest.h"

#include <random>

#include "msym/io.hpp"
#include "msym/monomial.hpp"
#include "msym/poly.hpp"
#include "msym/ring.hpp"

using namespace msym;

namespace {

Polynomial rand_poly(std::mt19937& rng, const Ring& ring, std::size_t m)
{
    std::uniform_int_distribution<int> nterms(0, 4), expo(0, 3), coef(-3, 3);
    Polynomial p(ring, m);
    for (int t = nterms(rng); t > 0; --t) {
        Multidegree e(m);
        for (auto& x : e)
            x = static_cast<std::uint32_t>(expo(rng));
        p.add_term(Monomial(e), Coeff::from_int(ring, coef(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("ring construction and names")
{
    CHECK(Ring::integers().name() == "z");
    CHECK(Ring::rationals().name() == "q");
    CHECK(Ring::prime_field(7).name() == "fp:7");
    CHECK(Ring::parse("z") == Ring::integers());
    CHECK(Ring::parse("q") == Ring::rationals());
    CHECK(Ring::parse("fp:101") == Ring::prime_field(101));
    CHECK_THROWS_AS(Ring::prime_field(6), Error);
    CHECK_THROWS_AS(Ring::parse("fp:1"), Error);
    CHECK_THROWS_AS(Ring::parse("f2"), Error);
    CHECK(Ring::integers().is_field() == false);
    CHECK(Ring::rationals().is_field() == true);
    CHECK(Ring::prime_field(2).is_field() == true);
}

TEST_CASE("coefficient arithmetic is exact")
{
    const Ring Z = Ring::integers(), Q = Ring::rationals(), F7 = Ring::prime_field(7);

    Coeff a = Coeff::from_int(Z, 6), b = Coeff::from_int(Z, -4);
    CHECK((a + b).str() == "2");
    CHECK((a * b).str() == "-24");
    CHECK((-a).str() == "-6");
    CHECK(a.abs() == a);
    CHECK((-a).abs() == a);
    CHECK(b.is_negative());
    CHECK_FALSE(a.is_negative());

    // rationals always land in lowest terms
    Coeff h = Coeff::from_fraction(Q, 4, 6);
    CHECK(h.str() == "2/3");
    CHECK((h + Coeff::from_fraction(Q, 1, 3)).str() == "1");
    CHECK((h * Coeff::from_fraction(Q, 3, 2)).str() == "1");
    CHECK(h.inverse().str() == "3/2");
    CHECK(Coeff::from_fraction(Q, 1, -2).str() == "-1/2");

    // F_p representatives stay in [0, p)
    Coeff u = Coeff::from_int(F7, -1);
    CHECK(u.residue() == 6);
    CHECK((u + Coeff::one(F7)).is_zero());
    CHECK((Coeff::from_int(F7, 3) * Coeff::from_int(F7, 5)).residue() == 1);
    CHECK(Coeff::from_int(F7, 3).inverse().residue() == 5);
    CHECK_FALSE(u.is_negative());

    CHECK_THROWS_AS(Coeff::from_int(Z, 3).inverse(), Error);
    CHECK(Coeff::from_int(Z, -1).inverse().str() == "-1");
    CHECK_THROWS_AS(Coeff::zero(Q).inverse(), Error);
    CHECK_THROWS_AS((void)(a + Coeff::one(Q)), Error);
}

TEST_CASE("coerce follows the canonical maps")
{
    const Ring Z = Ring::integers(), Q = Ring::rationals(), F5 = Ring::prime_field(5);
    CHECK(coerce(Coeff::from_int(Z, 7), Q).str() == "7");
    CHECK(coerce(Coeff::from_int(Z, 7), F5).residue() == 2);
    CHECK(coerce(Coeff::from_int(Z, -7), F5).residue() == 3);
    CHECK(coerce(Coeff::from_fraction(Q, 1, 2), F5).residue() == 3);  // 2^-1 = 3 mod 5
    CHECK(coerce(Coeff::from_fraction(Q, 6, 3), Z).str() == "2");
    CHECK_THROWS_AS(coerce(Coeff::from_fraction(Q, 1, 5), F5), Error);
    CHECK_THROWS_AS(coerce(Coeff::from_fraction(Q, 1, 2), Z), Error);
}

TEST_CASE("modular helpers")
{
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(97));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(91));
    const std::uint64_t p = 1000000007ULL;
    CHECK(mul_mod(p - 1, p - 1, p) == 1);
    CHECK(add_mod(p - 1, 5, p) == 4);
    CHECK(sub_mod(2, 5, p) == p - 3);
    CHECK(mul_mod(inv_mod(123456, p), 123456, p) == 1);
    CHECK(reduce_mod(mpz_class("-1"), 7) == 6);
}

TEST_CASE("primitive root decomposition")
{
    auto [nu, k] = primitive_root(parse_monomial("y1^2*y2^4", 2));
    CHECK(nu == parse_monomial("y1*y2^2", 2));
    CHECK(k == 2);

    auto [nu1, k1] = primitive_root(parse_monomial("y1", 1));
    CHECK(nu1 == parse_monomial("y1", 1));
    CHECK(k1 == 1);

    auto [nu2, k2] = primitive_root(parse_monomial("y1^3*y2^3*y3^3", 3));
    CHECK(nu2 == parse_monomial("y1*y2*y3", 3));
    CHECK(k2 == 3);

    CHECK_THROWS_AS(primitive_root(Monomial(2)), Error);
}

TEST_CASE("primitivity flag")
{
    CHECK(parse_monomial("y1*y2^2", 2).is_primitive());
    CHECK_FALSE(parse_monomial("y1^2*y2^4", 2).is_primitive());
    CHECK_FALSE(Monomial(2).is_primitive());  // constant
    // reconstruction property over a small exhaustive range
    for (std::uint32_t e1 = 0; e1 <= 4; ++e1)
        for (std::uint32_t e2 = 0; e2 <= 4; ++e2) {
            if (e1 + e2 == 0)
                continue;
            Monomial mu(Multidegree{e1, e2});
            auto [nu, k] = primitive_root(mu);
            CHECK(nu.is_primitive());
            CHECK(nu.pow(k) == mu);
        }
}

TEST_CASE("monomial order and multidegree additivity")
{
    CHECK(cmp(parse_monomial("y1^2", 2), parse_monomial("y1*y2", 2)) > 0);
    CHECK(cmp(parse_monomial("y1*y2", 2), parse_monomial("y2^2", 2)) > 0);
    CHECK(cmp(parse_monomial("y2^2", 2), parse_monomial("y1", 2)) > 0);  // degree first

    std::mt19937 rng(7001);
    std::uniform_int_distribution<int> expo(0, 5);
    for (int trial = 0; trial < 50; ++trial) {
        Multidegree a(3), b(3);
        for (int i = 0; i < 3; ++i) {
            a[i] = static_cast<std::uint32_t>(expo(rng));
            b[i] = static_cast<std::uint32_t>(expo(rng));
        }
        Monomial mu(a), nu(b);
        Multidegree sum(3);
        for (int i = 0; i < 3; ++i)
            sum[i] = a[i] + b[i];
        CHECK((mu * nu).multidegree() == sum);
        CHECK((mu * nu).total_degree() == mu.total_degree() + nu.total_degree());
    }
}

TEST_CASE("polynomial add/mul basics")
{
    const Ring Z = Ring::integers();
    Polynomial y1 = Polynomial::variable(Z, 2, 1);
    Polynomial y2 = Polynomial::variable(Z, 2, 2);
    Polynomial one = Polynomial::constant(Z, 2, Coeff::one(Z));

    CHECK((y1 + y2) + (-y2) == y1);
    CHECK(y1 + Polynomial::zero(Z, 2) == y1);
    CHECK((y1 + one) + (y1 - one) == y1.scaled(Coeff::from_int(Z, 2)));
    CHECK((y1 + y2) * (y1 - y2) == y1 * y1 - y2 * y2);
    CHECK((y1 + y2) * one == y1 + y2);
    CHECK(format((y1 + y2) * (y1 - y2)) == "y1^2 - y2^2");

    const Ring F2 = Ring::prime_field(2);
    Polynomial s = Polynomial::variable(F2, 2, 1) + Polynomial::variable(F2, 2, 2);
    CHECK(format(s * s) == "y1^2 + y2^2");  // Frobenius

    Polynomial other_arity(Z, 3);
    CHECK_THROWS_AS((void)(y1 + other_arity), Error);
    Polynomial other_ring = Polynomial::variable(Ring::rationals(), 2, 1);
    CHECK_THROWS_AS((void)(y1 * other_ring), Error);
    CHECK_THROWS_AS((void)Polynomial::zero(Z, 2).total_degree(), Error);
    CHECK_THROWS_AS((void)Polynomial::zero(Z, 2).leading_term(), Error);
}

TEST_CASE("polynomial ring axioms on random inputs")
{
    std::mt19937 rng(42);
    const Ring Z = Ring::integers();
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p = rand_poly(rng, Z, 2), q = rand_poly(rng, Z, 2), r = rand_poly(rng, Z, 2);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("parse: accepted grammar forms")
{
    Monomial mu = parse_monomial("y1^2*y2", 2);
    CHECK(mu.exponent(0) == 2);
    CHECK(mu.exponent(1) == 1);

    OrbitIndex alpha = parse_orbit_index("E{y1:2, y2:1}", 2);
    CHECK(alpha.multiplicity(parse_monomial("y1", 2)) == 2);
    CHECK(alpha.multiplicity(parse_monomial("y2", 2)) == 1);
    CHECK(alpha.size() == 3);

    Polynomial p = parse_polynomial("3*y1^2 - y2", 2, Ring::integers());
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient(parse_monomial("y1^2", 2)).str() == "3");
    CHECK(p.coefficient(parse_monomial("y2", 2)).str() == "-1");

    // whitespace-insensitive between tokens
    CHECK(parse_orbit_index(" E{ y1 : 2 , y2 : 1 } ", 2) == alpha);
    CHECK(parse_monomial("1", 2) == Monomial(2));  // unit monomial
}

TEST_CASE("parse errors carry positions")
{
    try {
        parse_monomial("y1^", 2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_monomial("y3", 2), ParseError);       // variable out of range
    CHECK_THROWS_AS(parse_monomial("x1", 2), ParseError);       // wrong alphabet
    CHECK_THROWS_AS(parse_orbit_index("E{y1:0}", 2), ParseError);
    CHECK_THROWS_AS(parse_orbit_index("E{y1:1, y1:1}", 2), ParseError);  // duplicate key
    CHECK_THROWS_AS(parse_orbit_index("E{1:2}", 2), ParseError);         // constant key
    CHECK_THROWS_AS(parse_polynomial("y1 +", 2, Ring::integers()), ParseError);
    CHECK_THROWS_AS(parse_polynomial("2y1", 2, Ring::integers()), ParseError);
}

TEST_CASE("ring prefixes on expression text")
{
    auto [r1, rest1] = split_ring_prefix("q:y1+y2");
    REQUIRE(r1.has_value());
    CHECK(*r1 == Ring::rationals());
    CHECK(rest1 == "y1+y2");

    auto [r2, rest2] = split_ring_prefix("fp7:y1");
    REQUIRE(r2.has_value());
    CHECK(*r2 == Ring::prime_field(7));

    auto [r3, rest3] = split_ring_prefix("y1+y2");
    CHECK_FALSE(r3.has_value());
    CHECK(rest3 == "y1+y2");
}

TEST_CASE("parse o format = identity on random objects")
{
    std::mt19937 rng(99);
    const Ring Q = Ring::rationals();
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = rand_poly(rng, Q, 3);
        CHECK(parse_polynomial(format(p), 3, Q) == p);
        CHECK(parse_polynomial(format(p, TextStyle::compact), 3, Q) == p);
    }
    // rational coefficients print parenthesized and round trip
    Polynomial h(Q, 2);
    h.add_term(parse_monomial("y1", 2), Coeff::from_fraction(Q, -1, 2));
    h.add_term(parse_monomial("y2^2", 2), Coeff::from_fraction(Q, 3, 4));
    CHECK(format(h) == "(3/4)*y2^2 - (1/2)*y1");
    CHECK(parse_polynomial(format(h), 2, Q) == h);
}

TEST_CASE("format is canonical graded-lex, leading term first")
{
    const Ring Z = Ring::integers();
    Polynomial p = parse_polynomial("y2 + y1 + y2^2", 2, Z);
    CHECK(format(p) == "y2^2 + y1 + y2");
    CHECK(format(p, TextStyle::compact) == "y2^2+y1+y2");
    CHECK(format(Polynomial::zero(Z, 2)) == "0");
    CHECK(format(-parse_polynomial("y1", 2, Z)) == "-y1");
    CHECK(format(parse_polynomial("y1 - 1", 2, Z)) == "y1 - 1");
}

TEST_CASE("concrete elementary symmetric and power sums")
{
    const Ring Z = Ring::integers();
    // e_2(x1,x2,x3) = x1x2 + x1x3 + x2x3
    Polynomial e2 = elementary_symmetric(Z, 3, 2);
    CHECK(e2.term_count() == 3);
    CHECK(e2.is_symmetric());
    CHECK(format(e2) == "y1*y2 + y1*y3 + y2*y3");
    CHECK(elementary_symmetric(Z, 2, 3).is_zero());  // k > n
    CHECK(format(power_sum(Z, 2, 2)) == "y1^2 + y2^2");
    // Newton at k=2: p2 = e1^2 - 2 e2
    Polynomial e1 = elementary_symmetric(Z, 3, 1);
    CHECK(power_sum(Z, 3, 2) == e1 * e1 - elementary_symmetric(Z, 3, 2).scaled(Coeff::from_int(Z, 2)));
}

TEST_CASE("eval_at and permute_variables")
{
    const Ring Z = Ring::integers();
    Polynomial p = parse_polynomial("y1^2 - y2", 2, Z);
    std::vector<Polynomial> args = {parse_polynomial("y1 + y2", 2, Z),
                                    parse_polynomial("y1*y2", 2, Z)};
    CHECK(p.eval_at(args) == parse_polynomial("y1^2 + 2*y1*y2 + y2^2 - y1*y2", 2, Z));

    Polynomial q = parse_polynomial("y1^2*y2", 2, Z);
    CHECK(q.permute_variables({1, 0}) == parse_polynomial("y1*y2^2", 2, Z));
    CHECK_FALSE(q.is_symmetric());
    CHECK(parse_polynomial("y1*y2", 2, Z).is_symmetric());
}
