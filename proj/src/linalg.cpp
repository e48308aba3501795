#include <nilcert/linalg.hpp>

#include <sstream>

namespace nilcert {

namespace {

// Clears denominators row by row; Bareiss then needs integer divisions only.
std::vector<std::vector<mpz_class>> integerize_rows(const RowMatrix &rows) {
    std::vector<std::vector<mpz_class>> out;
    out.reserve(rows.size());
    for (const auto &row : rows) {
        mpz_class l(1);
        for (const Rational &q : row)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<mpz_class> irow;
        irow.reserve(row.size());
        for (const Rational &q : row) {
            Rational scaled = q * Rational(l);
            irow.push_back(scaled.get_num());
        }
        out.push_back(std::move(irow));
    }
    return out;
}

} // namespace

std::size_t rational_rank(const RowMatrix &rows) {
    if (rows.empty())
        return 0;
    auto m = integerize_rows(rows);
    const std::size_t nrows = m.size();
    const std::size_t ncols = m[0].size();
    for (const auto &row : m)
        if (row.size() != ncols)
            throw std::invalid_argument("ragged matrix");

    std::size_t rank = 0;
    mpz_class prev_pivot(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t pivot = row;
        while (pivot < nrows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == nrows)
            continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t i = row + 1; i < nrows; ++i) {
            for (std::size_t j = col + 1; j < ncols; ++j) {
                mpz_class t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev_pivot = m[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

std::size_t rational_rank(const RationalMatrix &mat) {
    RowMatrix rows(mat.size(), std::vector<Rational>(mat.size()));
    for (std::size_t i = 0; i < mat.size(); ++i)
        for (std::size_t j = 0; j < mat.size(); ++j)
            rows[i][j] = mat.at(i, j);
    return rational_rank(rows);
}

std::vector<std::size_t> rref_in_place(RowMatrix &rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty())
        return pivots;
    const std::size_t nrows = rows.size();
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
        std::size_t pivot = r;
        while (pivot < nrows && is_zero(rows[pivot][col]))
            ++pivot;
        if (pivot == nrows)
            continue;
        std::swap(rows[r], rows[pivot]);
        const Rational inv = 1 / rows[r][col];
        for (std::size_t j = col; j < ncols; ++j)
            rows[r][j] *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || is_zero(rows[i][col]))
                continue;
            const Rational f = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rational>> kernel_basis(const RowMatrix &a) {
    if (a.empty())
        return {};
    RowMatrix m = a;
    const std::size_t ncols = m[0].size();
    const std::vector<std::size_t> pivots = rref_in_place(m);

    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalMatrix rational_inverse(const RationalMatrix &mat) {
    const std::size_t n = mat.size();
    RowMatrix aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = mat.at(i, j);
        aug[i][n + i] = 1;
    }
    const auto pivots = rref_in_place(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw std::domain_error("matrix is singular");
    RationalMatrix inv = rational_zero_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = aug[i][n + j];
    return inv;
}

RationalMatrix rational_power(const RationalMatrix &m, std::size_t k) {
    RationalMatrix acc = rational_identity(m.size());
    for (std::size_t i = 0; i < k; ++i)
        acc = acc * m;
    return acc;
}

Partition jordan_type(const RationalMatrix &n) {
    const std::size_t m = n.size();
    std::vector<std::size_t> ranks; // rank(N^0), rank(N^1), ...
    ranks.push_back(m);
    RationalMatrix power = n;
    for (std::size_t k = 1; k <= m; ++k) {
        const std::size_t r = rational_rank(power);
        ranks.push_back(r);
        if (r == 0)
            break;
        power = power * n;
    }
    if (ranks.back() != 0) {
        // Rank sequence is strictly decreasing until it bottoms out, so the
        // floor is already visible within m steps.
        std::size_t floor_rank = ranks.back();
        std::size_t first = ranks.size() - 1;
        while (first > 0 && ranks[first - 1] == floor_rank)
            --first;
        std::ostringstream os;
        os << "matrix is not nilpotent: rank(N^" << first << ") bottoms out at "
           << floor_rank;
        throw std::invalid_argument(os.str());
    }
    std::vector<long> dual;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        const long d = static_cast<long>(ranks[k - 1]) - static_cast<long>(ranks[k]);
        if (d > 0)
            dual.push_back(d);
    }
    return dual_partition(Partition(std::move(dual)));
}

} // namespace nilcert
