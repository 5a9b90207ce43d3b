// Classical symmetric functions in one alphabet: the e-basis, Newton
// identities, symmetric-to-elementary Gauss reduction, and the plethysm
// polynomials P_{h,k} = e_h o p_k.
#ifndef MSYM_SYMFUN_HPP
#define MSYM_SYMFUN_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "msym/poly.hpp"
#include "msym/ring.hpp"

namespace msym {

// A product of symbols e_1, e_2, ...: exps[i] is the exponent of e_{i+1},
// trailing zeros trimmed.
class EMonomial {
  public:
    EMonomial() = default;
    explicit EMonomial(std::vector<std::uint32_t> exps);
    static EMonomial symbol(std::uint32_t i, std::uint32_t exp = 1);

    const std::vector<std::uint32_t>& exps() const { return exps_; }
    bool is_unit() const { return exps_.empty(); }
    std::uint32_t exponent_of(std::uint32_t i) const;  // of e_i
    std::uint32_t max_symbol() const { return static_cast<std::uint32_t>(exps_.size()); }
    std::uint64_t weight() const;        // sum i * exps[i-1]
    std::uint64_t factor_count() const;  // sum exps

    EMonomial operator*(const EMonomial& rhs) const;
    bool operator==(const EMonomial& rhs) const { return exps_ == rhs.exps_; }
    bool operator!=(const EMonomial& rhs) const { return !(*this == rhs); }

  private:
    std::vector<std::uint32_t> exps_;
};

// Term order: weight desc, then factor count desc, then reverse-lex
// (grevlex within a weight); returns >0 when a prints first.
int cmp(const EMonomial& a, const EMonomial& b);

struct EMonomialGreater {
    bool operator()(const EMonomial& a, const EMonomial& b) const { return cmp(a, b) > 0; }
};

class ElemPoly {
  public:
    using TermMap = std::map<EMonomial, Coeff, EMonomialGreater>;

    explicit ElemPoly(Ring ring) : ring_(ring) {}
    static ElemPoly zero(const Ring& ring) { return ElemPoly(ring); }
    static ElemPoly one(const Ring& ring);
    static ElemPoly symbol(const Ring& ring, std::uint32_t i);

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::uint32_t max_symbol() const;

    void add_term(const EMonomial& mu, const Coeff& c);

    ElemPoly operator+(const ElemPoly& rhs) const;
    ElemPoly operator-(const ElemPoly& rhs) const;
    ElemPoly operator*(const ElemPoly& rhs) const;
    ElemPoly operator-() const;
    ElemPoly scaled(const Coeff& c) const;
    ElemPoly pow(std::uint32_t k) const;

    bool operator==(const ElemPoly& rhs) const;
    bool operator!=(const ElemPoly& rhs) const { return !(*this == rhs); }

    // Substitute the concrete e_i(x_1..x_N); e_i vanishes for i > N.
    Polynomial eval_concrete(std::size_t N) const;
    // Substitute arbitrary polynomials for the symbols (args[i] for e_{i+1}).
    Polynomial eval_at(const std::vector<Polynomial>& args) const;

  private:
    void check_compatible(const ElemPoly& rhs) const;
    Ring ring_;
    TermMap terms_;
};

ElemPoly with_ring(const ElemPoly& p, const Ring& target);

// p_k in the e-basis via p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-1} k e_k.
ElemPoly newton_p_in_e(const Ring& ring, std::uint32_t k);

// The unique P with P(e_1,...,e_N) = w for w symmetric in its N variables;
// leading-term (graded-lex) subtraction, division-free.
ElemPoly sym_to_elementary(const Polynomial& w);

// P_{h,k} = e_h(x^k) in the e-basis, weight hk, integer coefficients.
// Memoized in-process; the CLI persists the table.
ElemPoly plethysm_P(std::uint32_t h, std::uint32_t k);
bool plethysm_cached(std::uint32_t h, std::uint32_t k);
void plethysm_cache_insert(std::uint32_t h, std::uint32_t k, const ElemPoly& value);
// Snapshot of all cached (h, k) pairs in deterministic order.
std::vector<std::pair<std::uint32_t, std::uint32_t>> plethysm_cache_keys();

// e_i -> 0 for i > n.
ElemPoly truncate_to_n(const ElemPoly& p, std::size_t n);

}  // namespace msym

#endif
