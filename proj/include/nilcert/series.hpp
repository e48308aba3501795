#ifndef NILCERT_SERIES_HPP
#define NILCERT_SERIES_HPP

#include <nilcert/rational.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nilcert {

// Valuation of a truncated series: either the exact order of the lowest
// nonzero coefficient, or a lower bound when every stored coefficient
// vanishes (the series is 0 to working precision).
struct ValuationResult {
    enum class Kind { exact, at_least };
    Kind kind;
    std::int64_t value;

    static ValuationResult exact(std::int64_t k) { return {Kind::exact, k}; }
    static ValuationResult at_least(std::int64_t n) { return {Kind::at_least, n}; }

    bool is_exact() const { return kind == Kind::exact; }
    // Interprets AtLeast(N) as "valuation >= N".
    bool certifies_at_least(std::int64_t bound) const { return value >= bound; }

    std::string str() const;
    friend bool operator==(const ValuationResult &a, const ValuationResult &b) {
        return a.kind == b.kind && a.value == b.value;
    }
};

/// Laurent series with exact rational coefficients, known on the window
/// [lead_exp, precision). Coefficients below lead_exp are exactly zero;
/// nothing is known at or above precision. Values are immutable after
/// construction and safe to share across threads.
///
/// Precision propagates pessimistically:
///   a + b : precision = min(prec(a), prec(b))
///   a * b : precision = min(prec(a) + lead(b), prec(b) + lead(a))
/// so a claimed coefficient is always backed by fully known inputs.
class TruncatedLaurentSeries {
public:
    // Zero series O(z^precision).
    explicit TruncatedLaurentSeries(std::int64_t precision)
        : lead_(precision), precision_(precision) {}

    // Dense window constructor; coeffs.size() must equal precision - lead.
    TruncatedLaurentSeries(std::int64_t lead, std::int64_t precision,
                           std::vector<Rational> coeffs);

    // Builds a series from sparse (exponent, coefficient) pairs. Every
    // exponent must lie strictly below the precision.
    static TruncatedLaurentSeries
    make(const std::vector<std::pair<std::int64_t, Rational>> &coeff_pairs,
         std::int64_t precision);

    // Constant c + O(z^precision).
    static TruncatedLaurentSeries constant(const Rational &c, std::int64_t precision);

    // The monomial c*z^k + O(z^precision).
    static TruncatedLaurentSeries monomial(const Rational &c, std::int64_t exp,
                                           std::int64_t precision);

    std::int64_t lead_exp() const { return lead_; }
    std::int64_t precision() const { return precision_; }

    // Coefficient at exponent k; zero below the lead, rejected at or above
    // the precision (that coefficient is unknown).
    const Rational &coeff_at(std::int64_t k) const;

    // True when every stored coefficient vanishes (the value is O(z^precision)).
    bool is_zero_to_precision() const;

    ValuationResult valuation() const;

    TruncatedLaurentSeries operator-() const;
    friend TruncatedLaurentSeries operator+(const TruncatedLaurentSeries &a,
                                            const TruncatedLaurentSeries &b);
    friend TruncatedLaurentSeries operator-(const TruncatedLaurentSeries &a,
                                            const TruncatedLaurentSeries &b);
    friend TruncatedLaurentSeries operator*(const TruncatedLaurentSeries &a,
                                            const TruncatedLaurentSeries &b);

    TruncatedLaurentSeries scaled(const Rational &c) const;
    // Multiplication by z^k (shifts the window).
    TruncatedLaurentSeries shifted(std::int64_t k) const;
    // Exact division by a nonzero integer.
    TruncatedLaurentSeries divided_by_int(std::int64_t n) const;

    // Equality on the overlap of the known ranges: both series must agree at
    // every exponent below min(precision(a), precision(b)). Knowledge at or
    // above that point is not compared.
    friend bool operator==(const TruncatedLaurentSeries &a,
                           const TruncatedLaurentSeries &b);
    friend bool operator!=(const TruncatedLaurentSeries &a,
                           const TruncatedLaurentSeries &b) {
        return !(a == b);
    }

    std::string str() const;

private:
    std::int64_t lead_;
    std::int64_t precision_;
    std::vector<Rational> coeffs_; // dense on [lead_, precision_)

    static const Rational zero_;
};

using Series = TruncatedLaurentSeries;

} // namespace nilcert

#endif
