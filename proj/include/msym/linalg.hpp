#pragma once

#include <cstddef>
#include <vector>

#include "msym/ring.hpp"

namespace msym {

// Rank of a dense matrix over a field (rationals or F_p).
std::size_t rank_over(const Ring& field, const std::vector<std::vector<Coeff>>& rows);

// Incremental Gaussian elimination: feed rows one at a time, learn whether
// each enlarges the span.  Useful for early-exit span certificates.
class RowEchelon {
  public:
    RowEchelon(const Ring& field, std::size_t width);

    // Reduces `row` against the basis; returns true (and keeps the residue)
    // if the rank grew.
    bool insert(std::vector<Coeff> row);

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }

  private:
    Ring field_;
    std::size_t width_;
    std::vector<std::vector<Coeff>> rows_;   // reduced, one pivot each
    std::vector<std::size_t> pivots_;        // pivot column of rows_[i]
};

// Diagonal of the Smith normal form of an integer matrix, as min(r,c)
// entries d_1 | d_2 | ... (trailing zeros included).
std::vector<mpz_class> smith_normal_form(std::vector<std::vector<mpz_class>> a);

}  // namespace msym
