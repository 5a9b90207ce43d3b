// The concrete ring A_R(n,m) = R[x_i(j)] with S_n permuting the slot
// index j: substitution f(j), orbit sums, symmetrization into the orbit
// basis, and generating-function extraction of e-tuples.
#ifndef MSYM_CONCRETE_HPP
#define MSYM_CONCRETE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "msym/orbit.hpp"
#include "msym/poly.hpp"

namespace msym {

// Monomial in the n*m variables x_i(j), stored slot-major:
// exponents[(j-1)*m + (i-1)] is the exponent of x_i(j).
class SlotMonomial {
  public:
    SlotMonomial(std::size_t slots, std::size_t families)
        : n_(slots), m_(families), exp_(slots * families, 0) {}
    SlotMonomial(std::size_t slots, std::size_t families, std::vector<std::uint32_t> exponents);

    std::size_t slots() const { return n_; }
    std::size_t families() const { return m_; }
    const std::vector<std::uint32_t>& exponents() const { return exp_; }

    // 1-based family i, 1-based slot j.
    std::uint32_t exponent(std::size_t i, std::size_t j) const;
    void set_exponent(std::size_t i, std::size_t j, std::uint32_t e);

    std::uint32_t total_degree() const { return total_of(exp_); }
    // Column sums: degree in family i across all slots.
    Multidegree multidegree() const;
    // The slot-j part as a monomial in y_1..y_m.
    Monomial slot_part(std::size_t j) const;

    SlotMonomial operator*(const SlotMonomial& rhs) const;
    bool operator==(const SlotMonomial& rhs) const
    {
        return n_ == rhs.n_ && m_ == rhs.m_ && exp_ == rhs.exp_;
    }
    bool operator!=(const SlotMonomial& rhs) const { return !(*this == rhs); }

  private:
    std::size_t n_, m_;
    std::vector<std::uint32_t> exp_;
};

// Graded-lex on the flattened exponent vector.
int cmp(const SlotMonomial& a, const SlotMonomial& b);

struct SlotMonomialGreater {
    bool operator()(const SlotMonomial& a, const SlotMonomial& b) const { return cmp(a, b) > 0; }
};

class ConcretePoly {
  public:
    using TermMap = std::map<SlotMonomial, Coeff, SlotMonomialGreater>;

    ConcretePoly(Ring ring, std::size_t slots, std::size_t families)
        : ring_(ring), n_(slots), m_(families) {}
    static ConcretePoly zero(const Ring& ring, std::size_t slots, std::size_t families);
    static ConcretePoly constant(const Ring& ring, std::size_t slots, std::size_t families,
                                 const Coeff& c);

    const Ring& ring() const { return ring_; }
    std::size_t slots() const { return n_; }
    std::size_t families() const { return m_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coefficient(const SlotMonomial& mu) const;
    std::uint32_t total_degree() const;  // errors on zero

    void add_term(const SlotMonomial& mu, const Coeff& c);

    ConcretePoly operator+(const ConcretePoly& rhs) const;
    ConcretePoly operator-(const ConcretePoly& rhs) const;
    ConcretePoly operator*(const ConcretePoly& rhs) const;
    ConcretePoly operator-() const;
    ConcretePoly scaled(const Coeff& c) const;

    bool operator==(const ConcretePoly& rhs) const;
    bool operator!=(const ConcretePoly& rhs) const { return !(*this == rhs); }

  private:
    void check_compatible(const ConcretePoly& rhs) const;
    Ring ring_;
    std::size_t n_, m_;
    TermMap terms_;
};

// f(j): the image of f in A(n,m) under y_i -> x_i(j).
ConcretePoly substitute_slot(const Polynomial& f, std::size_t j, std::size_t n);

// sigma as 1-based images: slot j maps to sigma[j-1].
ConcretePoly apply_permutation(const ConcretePoly& p, const std::vector<std::size_t>& sigma);

// Fixed by all adjacent slot transpositions.
bool is_invariant(const ConcretePoly& p);

// Coefficient of t_1^{a_1}...t_k^{a_k} in prod_{i=1}^n (1 + sum_j t_j f_j(i)).
// Zero when sum(alphas) > n.
ConcretePoly elementary_tuple(const Ring& ring, std::size_t m, std::size_t n,
                              const std::vector<Polynomial>& fs,
                              const std::vector<std::uint32_t>& alphas);

// The basis element e_alpha expanded in A(n,m); zero when |alpha| > n.
ConcretePoly orbit_sum(const Ring& ring, const OrbitIndex& alpha, std::size_t n);

// Coordinates of an invariant polynomial in the orbit basis.
MultiSymElement to_orbit_basis(const ConcretePoly& p);

// Set x_i(j) = 0 for j > n_prime (the projection to fewer slots).
ConcretePoly project_slots(const ConcretePoly& p, std::size_t n_prime);

}  // namespace msym

#endif
