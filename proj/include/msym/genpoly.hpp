// The free commutative ring C(m) on symbols e_{i,mu} (i >= 1, mu a
// positive-degree monomial; primitive mu in the C(m) context), plus the
// rewriting of orbit-basis elements into these generators and the
// evaluation back into A(n,m).
#ifndef MSYM_GENPOLY_HPP
#define MSYM_GENPOLY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "msym/concrete.hpp"
#include "msym/monomial.hpp"
#include "msym/orbit.hpp"
#include "msym/ring.hpp"

namespace msym {

struct GenSymbol {
    std::uint32_t index;  // the i of e_{i,mu}
    Monomial mu;

    GenSymbol(std::uint32_t i, Monomial monomial);
    Multidegree multidegree() const;  // i * multidegree(mu)
    bool operator==(const GenSymbol& rhs) const { return index == rhs.index && mu == rhs.mu; }
    bool operator!=(const GenSymbol& rhs) const { return !(*this == rhs); }
};

// Print order: higher index first, then mu ascending graded-lex.
// Returns <0 when a prints before b.
int cmp_print(const GenSymbol& a, const GenSymbol& b);

struct GenSymbolPrintLess {
    bool operator()(const GenSymbol& a, const GenSymbol& b) const { return cmp_print(a, b) < 0; }
};

// A product of generator symbols with positive exponents.
class GenMonomial {
  public:
    using FactorMap = std::map<GenSymbol, std::uint32_t, GenSymbolPrintLess>;

    explicit GenMonomial(std::size_t arity) : arity_(arity) {}

    std::size_t arity() const { return arity_; }
    const FactorMap& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }

    void mul_symbol(const GenSymbol& s, std::uint32_t exp);
    GenMonomial operator*(const GenMonomial& rhs) const;

    Multidegree multidegree() const;
    std::uint64_t factor_count() const;
    GenMonomial with_arity(std::size_t new_arity) const;

    bool operator==(const GenMonomial& rhs) const
    {
        return arity_ == rhs.arity_ && factors_ == rhs.factors_;
    }
    bool operator!=(const GenMonomial& rhs) const { return !(*this == rhs); }

  private:
    std::size_t arity_;
    FactorMap factors_;
};

// Term order: multidegree graded-lex desc, then factor count desc, then
// the symbol sequence (earlier symbols first). Returns >0 when a prints
// first.
int cmp(const GenMonomial& a, const GenMonomial& b);

struct GenMonomialGreater {
    bool operator()(const GenMonomial& a, const GenMonomial& b) const { return cmp(a, b) > 0; }
};

class GeneratorPoly {
  public:
    using TermMap = std::map<GenMonomial, Coeff, GenMonomialGreater>;

    GeneratorPoly(Ring ring, std::size_t arity) : ring_(ring), arity_(arity) {}
    static GeneratorPoly zero(const Ring& ring, std::size_t arity);
    static GeneratorPoly one(const Ring& ring, std::size_t arity);
    static GeneratorPoly from_symbol(const Ring& ring, const GenSymbol& s);

    const Ring& ring() const { return ring_; }
    std::size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Printed with the e1[mu] spelling (rational e_1 generators) instead
    // of e[i;mu].
    bool rational_form() const { return rational_form_; }
    void set_rational_form(bool v) { rational_form_ = v; }

    void add_term(const GenMonomial& mu, const Coeff& c);

    GeneratorPoly operator+(const GeneratorPoly& rhs) const;
    GeneratorPoly operator-(const GeneratorPoly& rhs) const;
    GeneratorPoly operator*(const GeneratorPoly& rhs) const;
    GeneratorPoly operator-() const;
    GeneratorPoly scaled(const Coeff& c) const;

    GeneratorPoly with_ring(const Ring& target) const;
    GeneratorPoly with_arity(std::size_t new_arity) const;

    bool operator==(const GeneratorPoly& rhs) const;
    bool operator!=(const GeneratorPoly& rhs) const { return !(*this == rhs); }

  private:
    void check_compatible(const GeneratorPoly& rhs) const;
    Ring ring_;
    std::size_t arity_;
    TermMap terms_;
    bool rational_form_ = false;
};

// Substitute e_{i,mu} -> e_i(mu) in A(n,m) and expand.
ConcretePoly eval_generator_poly(const GeneratorPoly& g, std::size_t n);
// The same substitution inside A(oo,m) (e_{i,mu} -> the basis element
// {mu^{(i)}}); faithful on every graded piece when projected to n >= degree.
MultiSymElement eval_generator_poly_abstract(const GeneratorPoly& g, const Ring& ring);

// Integer rewriting of e_alpha into the generators e_{i,mu} (mu primitive);
// the result does not depend on any slot count. Memoized (thread-safe).
GeneratorPoly rewrite_to_generators(const OrbitIndex& alpha);

bool rewrite_cached(const OrbitIndex& alpha);
void rewrite_cache_insert(const OrbitIndex& alpha, const GeneratorPoly& value);
std::vector<OrbitIndex> rewrite_cache_keys();

// Rational rewriting into the symbols e_{1,mu} (mu arbitrary).
GeneratorPoly rational_rewrite_to_e1(const OrbitIndex& alpha, const Ring& ring);

}  // namespace msym

#endif
