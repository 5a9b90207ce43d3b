#include "msym/linalg.hpp"

#include <algorithm>

namespace msym {

RowEchelon::RowEchelon(const Ring& field, std::size_t width) : field_(field), width_(width)
{
    if (!field.is_field())
        throw Error("row reduction requires a field, got " + field.name());
}

bool RowEchelon::insert(std::vector<Coeff> row)
{
    if (row.size() != width_)
        throw Error("row width mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (row[p].is_zero())
            continue;
        const Coeff f = row[p];
        for (std::size_t j = p; j < width_; ++j)
            row[j] = row[j] - f * rows_[i][j];
    }
    std::size_t pivot = width_;
    for (std::size_t j = 0; j < width_; ++j) {
        if (!row[j].is_zero()) {
            pivot = j;
            break;
        }
    }
    if (pivot == width_)
        return false;
    const Coeff inv = row[pivot].inverse();
    for (std::size_t j = pivot; j < width_; ++j)
        row[j] = row[j] * inv;
    // Keep rows_ sorted by pivot so reduction stays one pass.
    std::size_t at = rows_.size();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (pivots_[i] > pivot) {
            at = i;
            break;
        }
    }
    rows_.insert(rows_.begin() + at, std::move(row));
    pivots_.insert(pivots_.begin() + at, pivot);
    // Back-substitute so earlier rows stay reduced at the new pivot.
    for (std::size_t i = 0; i < at; ++i) {
        const Coeff f = rows_[i][pivot];
        if (f.is_zero())
            continue;
        for (std::size_t j = pivot; j < width_; ++j)
            rows_[i][j] = rows_[i][j] - f * rows_[at][j];
    }
    return true;
}

std::size_t rank_over(const Ring& field, const std::vector<std::vector<Coeff>>& rows)
{
    if (rows.empty())
        return 0;
    RowEchelon re(field, rows.front().size());
    for (const auto& row : rows)
        re.insert(row);
    return re.rank();
}

namespace {

// Move a nonzero entry of minimal absolute value in a[r..][c..] to (r, c).
bool place_min_pivot(std::vector<std::vector<mpz_class>>& a, std::size_t r, std::size_t c)
{
    std::size_t bi = r, bj = c;
    bool found = false;
    mpz_class best;
    for (std::size_t i = r; i < a.size(); ++i) {
        for (std::size_t j = c; j < a[i].size(); ++j) {
            if (a[i][j] == 0)
                continue;
            mpz_class v = abs(a[i][j]);
            if (!found || v < best) {
                found = true;
                best = v;
                bi = i;
                bj = j;
            }
        }
    }
    if (!found)
        return false;
    std::swap(a[r], a[bi]);
    if (bj != c)
        for (auto& row : a)
            std::swap(row[c], row[bj]);
    return true;
}

}  // namespace

std::vector<mpz_class> smith_normal_form(std::vector<std::vector<mpz_class>> a)
{
    const std::size_t nr = a.size();
    const std::size_t nc = nr == 0 ? 0 : a.front().size();
    for (const auto& row : a)
        if (row.size() != nc)
            throw Error("ragged matrix");
    const std::size_t k = std::min(nr, nc);
    std::vector<mpz_class> diag(k, 0);

    for (std::size_t t = 0; t < k; ++t) {
        if (!place_min_pivot(a, t, t))
            break;  // rest of the diagonal stays zero
        bool dirty = true;
        while (dirty) {
            dirty = false;
            // Clear the pivot column.
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (a[i][t] == 0)
                    continue;
                mpz_class q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < nc; ++j)
                    a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[i], a[t]);  // remainder is smaller: descend
                    dirty = true;
                }
            }
            // Clear the pivot row.
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (a[t][j] == 0)
                    continue;
                mpz_class q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < nr; ++i)
                    a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (std::size_t i = 0; i < nr; ++i)
                        std::swap(a[i][j], a[i][t]);
                    dirty = true;
                }
            }
            if (dirty)
                continue;
            // Pivot must divide every remaining entry; if not, fold the
            // offending row in and restart the clearing loop.
            for (std::size_t i = t + 1; i < nr && !dirty; ++i) {
                for (std::size_t j = t + 1; j < nc; ++j) {
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t jj = t; jj < nc; ++jj)
                            a[t][jj] += a[i][jj];
                        dirty = true;
                        break;
                    }
                }
            }
        }
        diag[t] = abs(a[t][t]);
    }
    return diag;
}

}  // namespace msym
