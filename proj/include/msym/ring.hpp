// Coefficient rings: arbitrary-precision Z and Q, and prime fields F_p
// with a runtime modulus. All arithmetic is exact.
#ifndef MSYM_RING_HPP
#define MSYM_RING_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace msym {

// Domain error; the CLI maps it to exit code 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Raised by certifiers when a verify case exceeds its time budget.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

enum class RingKind { integers, rationals, prime_field };

bool is_prime_u64(std::uint64_t n);

class Ring {
  public:
    Ring() : kind_(RingKind::integers) {}

    static Ring integers() { return Ring(RingKind::integers, 0); }
    static Ring rationals() { return Ring(RingKind::rationals, 0); }
    static Ring prime_field(std::uint64_t p)
    {
        if (!is_prime_u64(p))
            throw Error("fp modulus " + std::to_string(p) + " is not prime");
        return Ring(RingKind::prime_field, p);
    }
    // Accepts "z", "q", "fp:<p>".
    static Ring parse(const std::string& text);

    RingKind kind() const { return kind_; }
    std::uint64_t prime() const { return p_; }
    bool is_field() const { return kind_ != RingKind::integers; }
    bool contains_rationals() const { return kind_ == RingKind::rationals; }
    std::string name() const;

    bool operator==(const Ring& rhs) const { return kind_ == rhs.kind_ && p_ == rhs.p_; }
    bool operator!=(const Ring& rhs) const { return !(*this == rhs); }

  private:
    Ring(RingKind kind, std::uint64_t p) : kind_(kind), p_(p) {}
    RingKind kind_;
    std::uint64_t p_ = 0;
};

// One exact coefficient. Z and Q values live in an mpq (denominator 1 for Z,
// always canonical lowest terms with positive denominator); F_p values are
// canonical representatives in [0, p).
class Coeff {
  public:
    Coeff() : ring_(Ring::integers()) {}
    static Coeff zero(const Ring& ring);
    static Coeff one(const Ring& ring) { return from_int(ring, 1); }
    static Coeff from_int(const Ring& ring, long long v);
    static Coeff from_integer(const Ring& ring, const mpz_class& v);
    // Exact fraction; requires the rationals.
    static Coeff from_fraction(const Ring& ring, const mpz_class& num, const mpz_class& den);

    const Ring& ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const;
    // Sign information used by the printer; F_p values are never negative.
    bool is_negative() const;

    Coeff operator+(const Coeff& rhs) const;
    Coeff operator-(const Coeff& rhs) const;
    Coeff operator*(const Coeff& rhs) const;
    Coeff operator-() const;
    Coeff inverse() const;  // fields only (and units of Z)
    Coeff abs() const;

    bool operator==(const Coeff& rhs) const;
    bool operator!=(const Coeff& rhs) const { return !(*this == rhs); }

    // Checked accessors.
    const mpq_class& rational() const;  // Z or Q value
    mpz_class integer() const;          // Z value (or integral Q)
    std::uint64_t residue() const;      // F_p value

    std::string str() const;  // "3", "-1/2", "4"

  private:
    void check_same_ring(const Coeff& rhs) const;
    Ring ring_;
    mpq_class q_;
    std::uint64_t r_ = 0;
};

// Map a coefficient into another ring along the canonical homomorphism
// (Z -> Q, Z -> F_p, Q -> F_p when the denominator is a unit, integral
// Q -> Z). Errors when no such map exists for the value.
Coeff coerce(const Coeff& c, const Ring& target);

// Modular helpers (p prime, p < 2^63).
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
std::uint64_t reduce_mod(const mpz_class& v, std::uint64_t p);

}  // namespace msym

#endif
