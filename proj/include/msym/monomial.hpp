// Monomials in y_1..y_m: exponent vectors with multidegree, total degree,
// primitivity, and the project-wide graded-lex order (y1 > y2 > ... > ym).
#ifndef MSYM_MONOMIAL_HPP
#define MSYM_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "msym/ring.hpp"

namespace msym {

using Multidegree = std::vector<std::uint32_t>;

inline std::uint32_t total_of(const Multidegree& a)
{
    std::uint32_t t = 0;
    for (std::uint32_t x : a)
        t += x;
    return t;
}

// Graded lexicographic: total degree first, then lex with earlier
// coordinates more significant. Returns <0, 0, >0.
int cmp_graded_lex(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);

inline bool leq_componentwise(const Multidegree& a, const Multidegree& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

class Monomial {
  public:
    explicit Monomial(std::size_t arity) : exp_(arity, 0) {}
    explicit Monomial(Multidegree exponents) : exp_(std::move(exponents)) {}

    std::size_t arity() const { return exp_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exp_[i]; }
    const Multidegree& multidegree() const { return exp_; }
    std::uint32_t total_degree() const { return total_of(exp_); }
    bool is_constant() const { return total_degree() == 0; }

    // Not a proper power of another monomial: positive degree and the gcd
    // of the nonzero exponents is 1.
    bool is_primitive() const;

    Monomial operator*(const Monomial& rhs) const;
    Monomial pow(std::uint32_t k) const;
    // Same monomial viewed in a larger variable set (pads with zeros);
    // shrinking is allowed only when the dropped exponents are zero.
    Monomial with_arity(std::size_t new_arity) const;

    bool operator==(const Monomial& rhs) const { return exp_ == rhs.exp_; }
    bool operator!=(const Monomial& rhs) const { return !(*this == rhs); }

  private:
    Multidegree exp_;
};

inline int cmp(const Monomial& a, const Monomial& b)
{
    return cmp_graded_lex(a.multidegree(), b.multidegree());
}

// Map comparator putting the graded-lex largest monomial first.
struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
};

// Unique decomposition mu = nu^k with nu primitive; k is the gcd of the
// nonzero exponents. Errors on constant input.
std::pair<Monomial, std::uint32_t> primitive_root(const Monomial& mu);

}  // namespace msym

#endif
