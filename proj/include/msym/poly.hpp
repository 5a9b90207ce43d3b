// Sparse multivariate polynomials over a coefficient ring: the ring
// A_R(m) = R[y_1..y_m]. Canonical form stores no zero coefficients and
// iterates terms leading (graded-lex largest) first.
#ifndef MSYM_POLY_HPP
#define MSYM_POLY_HPP

#include <map>
#include <vector>

#include "msym/monomial.hpp"
#include "msym/ring.hpp"

namespace msym {

class Polynomial {
  public:
    using TermMap = std::map<Monomial, Coeff, MonomialGreater>;

    Polynomial(Ring ring, std::size_t arity) : ring_(ring), arity_(arity) {}

    static Polynomial zero(const Ring& ring, std::size_t arity) { return Polynomial(ring, arity); }
    static Polynomial constant(const Ring& ring, std::size_t arity, const Coeff& c);
    static Polynomial from_monomial(const Ring& ring, const Monomial& mu, const Coeff& c);
    // The variable y_i, 1-based.
    static Polynomial variable(const Ring& ring, std::size_t arity, std::size_t i);

    const Ring& ring() const { return ring_; }
    std::size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool has_constant_term() const;
    Coeff coefficient(const Monomial& mu) const;

    // Degree queries error on the zero polynomial.
    std::uint32_t total_degree() const;
    const std::pair<const Monomial, Coeff>& leading_term() const;

    void add_term(const Monomial& mu, const Coeff& c);

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator-() const;
    Polynomial scaled(const Coeff& c) const;
    Polynomial pow(std::uint32_t k) const;

    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    // Substitute args[i] for y_{i+1}; args share one ring and arity.
    Polynomial eval_at(const std::vector<Polynomial>& args) const;
    // Relabel variables: y_i -> y_{perm[i-1]+1} (perm is 0-based on inputs).
    Polynomial permute_variables(const std::vector<std::size_t>& perm) const;
    bool is_symmetric() const;

  private:
    void check_compatible(const Polynomial& rhs) const;
    Ring ring_;
    std::size_t arity_;
    TermMap terms_;
};

// e_k(x_1..x_n) as a concrete polynomial in n variables.
Polynomial elementary_symmetric(const Ring& ring, std::size_t n, std::uint32_t k);
// p_k(x_1..x_n).
Polynomial power_sum(const Ring& ring, std::size_t n, std::uint32_t k);

}  // namespace msym

#endif
