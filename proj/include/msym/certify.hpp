#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "msym/genpoly.hpp"
#include "msym/linalg.hpp"
#include "msym/orbit.hpp"

namespace msym {

// Wall-clock budget for a single certification case.
class Budget {
  public:
    static Budget unlimited() { return Budget(); }
    static Budget seconds(double s);

    // Throws BudgetExceeded when the deadline has passed.
    void check(const std::string& where) const;

  private:
    Budget() = default;
    bool limited_ = false;
    std::chrono::steady_clock::time_point deadline_{};
};

// One verification case: context, the exact ranks/counts it compared, and
// the verdict.  `line()` is the stable text form (no timing — that goes to
// stderr); the JSON form carries wall_ms as its only run-varying field.
struct RankCertificate {
    std::string suite;
    bool has_n = true;
    std::size_t n = 0;
    std::size_t m = 0;
    Multidegree a;
    std::string ring_name = "q";
    std::vector<std::pair<std::string, std::string>> data;
    bool pass = false;
    std::string note;
    long long wall_ms = 0;

    void put(const std::string& key, std::uint64_t value);
    void put(const std::string& key, const std::string& value);
    std::string line() const;
    std::string to_json() const;
};

std::string multidegree_text(const Multidegree& a);

// All a with 1 <= |a| <= maxdeg, ordered by total degree then lexicographically.
std::vector<Multidegree> multidegrees_up_to(std::size_t m, std::uint32_t maxdeg);

// Monomials mu with lo <= deg(mu) and exponents bounded by `cap` componentwise
// (and deg(mu) <= hi), in ascending odometer order.
std::vector<Monomial> monomials_in_box(const Multidegree& cap, std::uint32_t lo, std::uint32_t hi);

// Monomial basis of C(m) in multidegree a: products of symbols e_{i,mu}
// (mu primitive) with total multidegree a.
std::vector<GenMonomial> c_monomial_basis(std::size_t m, const Multidegree& a);

RankCertificate certify_basis(std::size_t n, std::size_t m, const Multidegree& a,
                              const Budget& budget);
RankCertificate certify_product(std::size_t n, std::size_t m, const Multidegree& a,
                                const Budget& budget);
RankCertificate certify_rewrite(std::size_t n, std::size_t m, const Multidegree& a,
                                const Budget& budget);
RankCertificate certify_relation_span(std::size_t n, std::size_t m, const Multidegree& a,
                                      std::uint32_t k, const Budget& budget);
RankCertificate certify_presentation(std::size_t n, std::size_t m, const Multidegree& a,
                                     const Ring& ring, const Budget& budget);
std::vector<RankCertificate> certify_generation_bound(std::size_t n, std::size_t m,
                                                      const Ring& ring, std::uint32_t maxdeg,
                                                      const Budget& budget);
RankCertificate certify_freeness(std::size_t m, const Multidegree& a, const Budget& budget);
RankCertificate certify_e1_generation(std::size_t n, std::size_t m, const Multidegree& a,
                                      const Budget& budget);

}  // namespace msym
