// The abstract multisymmetric ring A(oo,m): orbit-basis indices, the
// product formula over gamma-matrices with prescribed marginals, the
// projection pi_n, graded basis enumeration, and e_k of an augmentation
// element.
#ifndef MSYM_ORBIT_HPP
#define MSYM_ORBIT_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "msym/monomial.hpp"
#include "msym/poly.hpp"
#include "msym/ring.hpp"

namespace msym {

// No cap on |alpha| (the A(oo,m) case).
inline constexpr std::uint64_t kNoCap = std::numeric_limits<std::uint64_t>::max();

// Finitely supported map from positive-degree monomials to positive
// multiplicities; indexes the orbit basis.
class OrbitIndex {
  public:
    using EntryMap = std::map<Monomial, std::uint32_t, MonomialGreater>;

    explicit OrbitIndex(std::size_t arity) : arity_(arity) {}
    static OrbitIndex single(const Monomial& mu, std::uint32_t mult);

    std::size_t arity() const { return arity_; }
    const EntryMap& entries() const { return entries_; }
    bool is_unit() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }

    // Accumulates multiplicity; constant monomials and zero multiplicities
    // are rejected.
    void add(const Monomial& mu, std::uint32_t mult);
    std::uint32_t multiplicity(const Monomial& mu) const;
    OrbitIndex without(const Monomial& mu) const;

    std::uint64_t size() const;  // |alpha|
    Multidegree multidegree() const;
    std::uint32_t total_degree() const;

    OrbitIndex with_arity(std::size_t new_arity) const;

    bool operator==(const OrbitIndex& rhs) const
    {
        return arity_ == rhs.arity_ && entries_ == rhs.entries_;
    }
    bool operator!=(const OrbitIndex& rhs) const { return !(*this == rhs); }

  private:
    std::size_t arity_;
    EntryMap entries_;
};

// Total order: multidegree graded-lex first, then the entry lists
// (largest-monomial first) lexicographically by (monomial, multiplicity).
int cmp(const OrbitIndex& a, const OrbitIndex& b);

struct OrbitIndexGreater {
    bool operator()(const OrbitIndex& a, const OrbitIndex& b) const { return cmp(a, b) > 0; }
};

// Element of A(oo,m) (or of A(n,m)^{S_n} after projection): a finite
// combination of orbit-basis indices.
class MultiSymElement {
  public:
    using TermMap = std::map<OrbitIndex, Coeff, OrbitIndexGreater>;

    MultiSymElement(Ring ring, std::size_t arity) : ring_(ring), arity_(arity) {}
    static MultiSymElement zero(const Ring& ring, std::size_t arity);
    static MultiSymElement unit(const Ring& ring, std::size_t arity);
    static MultiSymElement basis(const Ring& ring, const OrbitIndex& alpha);

    const Ring& ring() const { return ring_; }
    std::size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coefficient(const OrbitIndex& alpha) const;

    void add_term(const OrbitIndex& alpha, const Coeff& c);

    MultiSymElement operator+(const MultiSymElement& rhs) const;
    MultiSymElement operator-(const MultiSymElement& rhs) const;
    MultiSymElement operator*(const MultiSymElement& rhs) const;
    MultiSymElement operator-() const;
    MultiSymElement scaled(const Coeff& c) const;

    bool operator==(const MultiSymElement& rhs) const;
    bool operator!=(const MultiSymElement& rhs) const { return !(*this == rhs); }

  private:
    void check_compatible(const MultiSymElement& rhs) const;
    Ring ring_;
    std::size_t arity_;
    TermMap terms_;
};

// Argument list for an e-tuple, possibly with repeated monomials
// (mid-product, before the repeated-argument collapse).
using TaggedTuple = std::vector<std::pair<Monomial, std::uint32_t>>;

// Merge equal arguments; the coefficient is the product of multinomial
// factors (sum of merged parts)!/(product of part factorials).
std::pair<mpz_class, OrbitIndex> canonicalize(std::size_t arity, const TaggedTuple& tuple);

// Integer structure constants of the basis product e_alpha * e_beta in
// A(oo,m); memoized (thread-safe) on the unordered pair.
using ZCombo = std::map<OrbitIndex, mpz_class, OrbitIndexGreater>;
const ZCombo& basis_product(const OrbitIndex& alpha, const OrbitIndex& beta);

MultiSymElement multiply(const MultiSymElement& x, const MultiSymElement& y);

// pi_n: drop every term with |alpha| > n.
MultiSymElement project_n(const MultiSymElement& x, std::uint64_t n);

// All alpha with multidegree a and |alpha| <= n_cap, in decreasing
// canonical order.
std::vector<OrbitIndex> enumerate_basis(const Multidegree& a, std::uint64_t n_cap);

// e_k(f) for f with zero constant term: sum over |alpha| = k of
// (prod_mu lambda_mu^alpha(mu)) e_alpha, lambda the coefficients of f.
MultiSymElement expand_e_k_of(const Polynomial& f, std::uint32_t k);

}  // namespace msym

#endif
