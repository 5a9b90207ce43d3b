#include "msym/ring.hpp"

namespace msym {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p)
{
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1)
            acc = mul_mod(acc, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

}  // namespace

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0)
            return n == q;
    }
    // Deterministic Miller-Rabin for 64-bit inputs with the bases above.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    std::uint64_t s = a + b;
    if (s >= p || s < a)
        s -= p;
    return s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return a >= b ? a - b : a + p - b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p)
{
    if (a % p == 0)
        throw Error("division by zero in F_" + std::to_string(p));
    return pow_mod(a % p, p - 2, p);
}

std::uint64_t reduce_mod(const mpz_class& v, std::uint64_t p)
{
    mpz_class r = v % static_cast<unsigned long>(p);
    if (r < 0)
        r += static_cast<unsigned long>(p);
    return r.get_ui();
}

Ring Ring::parse(const std::string& text)
{
    if (text == "z")
        return integers();
    if (text == "q")
        return rationals();
    if (text.rfind("fp:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw Error("bad coefficient ring '" + text + "' (expected z, q, or fp:<p>)");
        return prime_field(std::stoull(digits));
    }
    throw Error("bad coefficient ring '" + text + "' (expected z, q, or fp:<p>)");
}

std::string Ring::name() const
{
    switch (kind_) {
        case RingKind::integers: return "z";
        case RingKind::rationals: return "q";
        case RingKind::prime_field: return "fp:" + std::to_string(p_);
    }
    return "?";
}

Coeff Coeff::zero(const Ring& ring)
{
    Coeff c;
    c.ring_ = ring;
    return c;
}

Coeff Coeff::from_int(const Ring& ring, long long v)
{
    return from_integer(ring, mpz_class(static_cast<long>(v)));
}

Coeff Coeff::from_integer(const Ring& ring, const mpz_class& v)
{
    Coeff c;
    c.ring_ = ring;
    if (ring.kind() == RingKind::prime_field)
        c.r_ = reduce_mod(v, ring.prime());
    else
        c.q_ = mpq_class(v);
    return c;
}

Coeff Coeff::from_fraction(const Ring& ring, const mpz_class& num, const mpz_class& den)
{
    if (den == 0)
        throw Error("zero denominator");
    if (ring.kind() == RingKind::rationals) {
        Coeff c;
        c.ring_ = ring;
        c.q_ = mpq_class(num, den);
        c.q_.canonicalize();
        return c;
    }
    if (ring.kind() == RingKind::prime_field) {
        Coeff c;
        c.ring_ = ring;
        const std::uint64_t p = ring.prime();
        c.r_ = mul_mod(reduce_mod(num, p), inv_mod(reduce_mod(den, p), p), p);
        return c;
    }
    throw Error("fractional coefficient requires rational coefficients");
}

bool Coeff::is_zero() const
{
    return ring_.kind() == RingKind::prime_field ? r_ == 0 : q_ == 0;
}

bool Coeff::is_one() const
{
    return ring_.kind() == RingKind::prime_field ? r_ == 1 % ring_.prime() : q_ == 1;
}

bool Coeff::is_negative() const
{
    return ring_.kind() != RingKind::prime_field && q_ < 0;
}

void Coeff::check_same_ring(const Coeff& rhs) const
{
    if (ring_ != rhs.ring_)
        throw Error("coefficient ring mismatch: " + ring_.name() + " vs " + rhs.ring_.name());
}

Coeff Coeff::operator+(const Coeff& rhs) const
{
    check_same_ring(rhs);
    Coeff c;
    c.ring_ = ring_;
    if (ring_.kind() == RingKind::prime_field)
        c.r_ = add_mod(r_, rhs.r_, ring_.prime());
    else
        c.q_ = q_ + rhs.q_;
    return c;
}

Coeff Coeff::operator-(const Coeff& rhs) const
{
    check_same_ring(rhs);
    Coeff c;
    c.ring_ = ring_;
    if (ring_.kind() == RingKind::prime_field)
        c.r_ = sub_mod(r_, rhs.r_, ring_.prime());
    else
        c.q_ = q_ - rhs.q_;
    return c;
}

Coeff Coeff::operator*(const Coeff& rhs) const
{
    check_same_ring(rhs);
    Coeff c;
    c.ring_ = ring_;
    if (ring_.kind() == RingKind::prime_field)
        c.r_ = mul_mod(r_, rhs.r_, ring_.prime());
    else
        c.q_ = q_ * rhs.q_;
    return c;
}

Coeff Coeff::operator-() const
{
    Coeff c;
    c.ring_ = ring_;
    if (ring_.kind() == RingKind::prime_field)
        c.r_ = r_ == 0 ? 0 : ring_.prime() - r_;
    else
        c.q_ = -q_;
    return c;
}

Coeff Coeff::inverse() const
{
    Coeff c;
    c.ring_ = ring_;
    switch (ring_.kind()) {
        case RingKind::prime_field:
            c.r_ = inv_mod(r_, ring_.prime());
            return c;
        case RingKind::rationals:
            if (q_ == 0)
                throw Error("division by zero");
            c.q_ = 1 / q_;
            return c;
        case RingKind::integers:
            if (q_ != 1 && q_ != -1)
                throw Error("not a unit in Z: " + str());
            c.q_ = q_;
            return c;
    }
    throw Error("bad ring");
}

Coeff Coeff::abs() const
{
    return is_negative() ? -*this : *this;
}

bool Coeff::operator==(const Coeff& rhs) const
{
    if (ring_ != rhs.ring_)
        return false;
    return ring_.kind() == RingKind::prime_field ? r_ == rhs.r_ : q_ == rhs.q_;
}

const mpq_class& Coeff::rational() const
{
    if (ring_.kind() == RingKind::prime_field)
        throw Error("F_p value has no rational form");
    return q_;
}

mpz_class Coeff::integer() const
{
    if (ring_.kind() == RingKind::prime_field)
        return mpz_class(static_cast<unsigned long>(r_));
    if (q_.get_den() != 1)
        throw Error("coefficient " + str() + " is not integral");
    return q_.get_num();
}

std::uint64_t Coeff::residue() const
{
    if (ring_.kind() != RingKind::prime_field)
        throw Error("not an F_p value");
    return r_;
}

std::string Coeff::str() const
{
    if (ring_.kind() == RingKind::prime_field)
        return std::to_string(r_);
    if (q_.get_den() == 1)
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Coeff coerce(const Coeff& c, const Ring& target)
{
    if (c.ring() == target)
        return c;
    switch (c.ring().kind()) {
        case RingKind::integers:
            return Coeff::from_integer(target, c.integer());
        case RingKind::rationals: {
            const mpq_class& q = c.rational();
            if (target.kind() == RingKind::integers) {
                if (q.get_den() != 1)
                    throw Error("coefficient " + c.str() + " is not integral");
                return Coeff::from_integer(target, q.get_num());
            }
            return Coeff::from_fraction(target, q.get_num(), q.get_den());
        }
        case RingKind::prime_field:
            throw Error("cannot map F_p coefficient into " + target.name());
    }
    throw Error("bad ring");
}

}  // namespace msym
