#ifndef NILCERT_MATRIX_HPP
#define NILCERT_MATRIX_HPP

#include <nilcert/rational.hpp>
#include <nilcert/series.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nilcert {

// Dense square matrix over an exact commutative ring (Rational or
// TruncatedLaurentSeries). Only the operations the certifiers need.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix(std::size_t size, const T &fill)
        : size_(size), entries_(size * size, fill) {
        if (size == 0)
            throw std::invalid_argument("matrix size must be positive");
    }

    std::size_t size() const { return size_; }

    T &at(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }
    const T &at(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }

    friend SquareMatrix operator+(const SquareMatrix &a, const SquareMatrix &b) {
        check_sizes(a, b);
        SquareMatrix r(a);
        for (std::size_t k = 0; k < r.entries_.size(); ++k)
            r.entries_[k] = a.entries_[k] + b.entries_[k];
        return r;
    }

    friend SquareMatrix operator-(const SquareMatrix &a, const SquareMatrix &b) {
        check_sizes(a, b);
        SquareMatrix r(a);
        for (std::size_t k = 0; k < r.entries_.size(); ++k)
            r.entries_[k] = a.entries_[k] - b.entries_[k];
        return r;
    }

    friend SquareMatrix operator*(const SquareMatrix &a, const SquareMatrix &b) {
        check_sizes(a, b);
        const std::size_t n = a.size_;
        SquareMatrix r(a);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                T acc = a.at(i, 0) * b.at(0, j);
                for (std::size_t k = 1; k < n; ++k)
                    acc = acc + a.at(i, k) * b.at(k, j);
                r.at(i, j) = acc;
            }
        }
        return r;
    }

    SquareMatrix scaled(const T &s) const {
        SquareMatrix r(*this);
        for (auto &e : r.entries_)
            e = e * s;
        return r;
    }

    T trace() const {
        T acc = at(0, 0);
        for (std::size_t i = 1; i < size_; ++i)
            acc = acc + at(i, i);
        return acc;
    }

    // this + s * Id, without materializing an identity matrix (over the
    // series ring the identity would need an explicit precision).
    SquareMatrix plus_scalar_on_diagonal(const T &s) const {
        SquareMatrix r(*this);
        for (std::size_t i = 0; i < size_; ++i)
            r.at(i, i) = r.at(i, i) + s;
        return r;
    }

    friend bool operator==(const SquareMatrix &a, const SquareMatrix &b) {
        if (a.size_ != b.size_)
            return false;
        for (std::size_t k = 0; k < a.entries_.size(); ++k)
            if (!(a.entries_[k] == b.entries_[k]))
                return false;
        return true;
    }

private:
    static void check_sizes(const SquareMatrix &a, const SquareMatrix &b) {
        if (a.size_ != b.size_)
            throw std::invalid_argument("matrix size mismatch");
    }

    std::size_t size_;
    std::vector<T> entries_;
};

using RationalMatrix = SquareMatrix<Rational>;
using SeriesMatrix = SquareMatrix<Series>;

inline RationalMatrix rational_zero_matrix(std::size_t n) {
    return RationalMatrix(n, Rational(0));
}

inline RationalMatrix rational_identity(std::size_t n) {
    RationalMatrix id = rational_zero_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
        id.at(i, i) = 1;
    return id;
}

inline SeriesMatrix series_zero_matrix(std::size_t n, std::int64_t precision) {
    return SeriesMatrix(n, Series(precision));
}

// Embeds a constant matrix as a series matrix known up to O(z^precision).
inline SeriesMatrix embed_constant(const RationalMatrix &m, std::int64_t precision) {
    SeriesMatrix r = series_zero_matrix(m.size(), precision);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (!is_zero(m.at(i, j)))
                r.at(i, j) = Series::constant(m.at(i, j), precision);
    return r;
}

// Entrywise multiplication by z^k.
inline SeriesMatrix shifted_all(const SeriesMatrix &m, std::int64_t k) {
    SeriesMatrix r = m;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            r.at(i, j) = m.at(i, j).shifted(k);
    return r;
}

// tr(X * Y), the invariant pairing used for all lattice/orthogonality checks.
template <typename T>
T trace_pairing(const SquareMatrix<T> &x, const SquareMatrix<T> &y) {
    if (x.size() != y.size())
        throw std::invalid_argument("matrix size mismatch");
    const std::size_t n = x.size();
    T acc = x.at(0, 0) * y.at(0, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (i != 0 || k != 0)
                acc = acc + x.at(i, k) * y.at(k, i);
    return acc;
}

inline Rational negate_ring_element(const Rational &q) { return -q; }
inline Series negate_ring_element(const Series &s) { return -s; }
inline Rational divide_by_int(const Rational &q, std::int64_t n) {
    return q / Rational(n);
}
inline Series divide_by_int(const Series &s, std::int64_t n) {
    return s.divided_by_int(n);
}

// Coefficients [F_1 .. F_m] of the monic characteristic polynomial
// det(T*Id - M) = T^m + F_1 T^{m-1} + ... + F_m, by the trace recurrence
//   M_1 = M, c_1 = -tr(M_1), M_{k+1} = M (M_k + c_k Id),
//   c_{k+1} = -tr(M_{k+1}) / (k+1).
// Valid over any commutative Q-algebra: the only divisions are by the
// integers 2..m.
template <typename T>
std::vector<T> charpoly_coeffs(const SquareMatrix<T> &m) {
    const std::size_t n = m.size();
    std::vector<T> coeffs;
    coeffs.reserve(n);
    SquareMatrix<T> mk = m;
    T ck = negate_ring_element(mk.trace());
    coeffs.push_back(ck);
    for (std::size_t k = 2; k <= n; ++k) {
        mk = m * mk.plus_scalar_on_diagonal(ck);
        ck = divide_by_int(negate_ring_element(mk.trace()), static_cast<std::int64_t>(k));
        coeffs.push_back(ck);
    }
    return coeffs;
}

} // namespace nilcert

#endif
