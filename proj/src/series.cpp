#include <nilcert/series.hpp>

#include <algorithm>
#include <sstream>

namespace nilcert {

const Rational TruncatedLaurentSeries::zero_ = Rational(0);

std::string ValuationResult::str() const {
    std::ostringstream os;
    if (kind == Kind::exact)
        os << "Exact(" << value << ")";
    else
        os << "AtLeast(" << value << ")";
    return os.str();
}

TruncatedLaurentSeries::TruncatedLaurentSeries(std::int64_t lead, std::int64_t precision,
                                               std::vector<Rational> coeffs)
    : lead_(lead), precision_(precision), coeffs_(std::move(coeffs)) {
    if (lead_ > precision_)
        throw std::invalid_argument("series lead exponent exceeds precision");
    if (static_cast<std::int64_t>(coeffs_.size()) != precision_ - lead_)
        throw std::invalid_argument("series coefficient count does not match window");
}

TruncatedLaurentSeries
TruncatedLaurentSeries::make(const std::vector<std::pair<std::int64_t, Rational>> &coeff_pairs,
                             std::int64_t precision) {
    if (coeff_pairs.empty())
        return TruncatedLaurentSeries(precision);
    std::int64_t lead = precision;
    for (const auto &[exp, c] : coeff_pairs) {
        if (exp >= precision) {
            std::ostringstream os;
            os << "series coefficient exponent " << exp
               << " is not below the precision " << precision;
            throw std::out_of_range(os.str());
        }
        lead = std::min(lead, exp);
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(precision - lead), Rational(0));
    for (const auto &[exp, c] : coeff_pairs)
        coeffs[static_cast<std::size_t>(exp - lead)] += c;
    return TruncatedLaurentSeries(lead, precision, std::move(coeffs));
}

TruncatedLaurentSeries TruncatedLaurentSeries::constant(const Rational &c,
                                                        std::int64_t precision) {
    return make({{0, c}}, precision);
}

TruncatedLaurentSeries TruncatedLaurentSeries::monomial(const Rational &c, std::int64_t exp,
                                                        std::int64_t precision) {
    return make({{exp, c}}, precision);
}

const Rational &TruncatedLaurentSeries::coeff_at(std::int64_t k) const {
    if (k >= precision_)
        throw std::out_of_range("series coefficient requested at or above precision");
    if (k < lead_)
        return zero_;
    return coeffs_[static_cast<std::size_t>(k - lead_)];
}

bool TruncatedLaurentSeries::is_zero_to_precision() const {
    for (const Rational &c : coeffs_)
        if (!is_zero(c))
            return false;
    return true;
}

ValuationResult TruncatedLaurentSeries::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!is_zero(coeffs_[i]))
            return ValuationResult::exact(lead_ + static_cast<std::int64_t>(i));
    return ValuationResult::at_least(precision_);
}

TruncatedLaurentSeries TruncatedLaurentSeries::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = -coeffs_[i];
    return TruncatedLaurentSeries(lead_, precision_, std::move(c));
}

TruncatedLaurentSeries operator+(const TruncatedLaurentSeries &a,
                                 const TruncatedLaurentSeries &b) {
    const std::int64_t lead = std::min(a.lead_, b.lead_);
    const std::int64_t prec = std::min(a.precision_, b.precision_);
    std::vector<Rational> c(static_cast<std::size_t>(prec - lead), Rational(0));
    for (std::int64_t k = lead; k < prec; ++k)
        c[static_cast<std::size_t>(k - lead)] = a.coeff_at(k) + b.coeff_at(k);
    return TruncatedLaurentSeries(lead, prec, std::move(c));
}

TruncatedLaurentSeries operator-(const TruncatedLaurentSeries &a,
                                 const TruncatedLaurentSeries &b) {
    return a + (-b);
}

TruncatedLaurentSeries operator*(const TruncatedLaurentSeries &a,
                                 const TruncatedLaurentSeries &b) {
    const std::int64_t lead = a.lead_ + b.lead_;
    const std::int64_t prec = std::min(a.precision_ + b.lead_, b.precision_ + a.lead_);
    std::vector<Rational> c(static_cast<std::size_t>(prec - lead), Rational(0));
    Rational term;
    for (std::int64_t i = a.lead_; i < a.precision_; ++i) {
        const Rational &ai = a.coeffs_[static_cast<std::size_t>(i - a.lead_)];
        if (is_zero(ai))
            continue;
        const std::int64_t jmax = std::min(b.precision_, prec - i);
        for (std::int64_t j = b.lead_; j < jmax; ++j) {
            const Rational &bj = b.coeffs_[static_cast<std::size_t>(j - b.lead_)];
            if (is_zero(bj))
                continue;
            term = ai * bj;
            c[static_cast<std::size_t>(i + j - lead)] += term;
        }
    }
    return TruncatedLaurentSeries(lead, prec, std::move(c));
}

TruncatedLaurentSeries TruncatedLaurentSeries::scaled(const Rational &s) const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = coeffs_[i] * s;
    return TruncatedLaurentSeries(lead_, precision_, std::move(c));
}

TruncatedLaurentSeries TruncatedLaurentSeries::shifted(std::int64_t k) const {
    return TruncatedLaurentSeries(lead_ + k, precision_ + k, coeffs_);
}

TruncatedLaurentSeries TruncatedLaurentSeries::divided_by_int(std::int64_t n) const {
    return scaled(make_rational(1, static_cast<long>(n)));
}

bool operator==(const TruncatedLaurentSeries &a, const TruncatedLaurentSeries &b) {
    const std::int64_t prec = std::min(a.precision_, b.precision_);
    const std::int64_t lead = std::min(a.lead_, b.lead_);
    for (std::int64_t k = lead; k < prec; ++k)
        if (a.coeff_at(k) != b.coeff_at(k))
            return false;
    return true;
}

std::string TruncatedLaurentSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::int64_t k = lead_; k < precision_; ++k) {
        const Rational &c = coeff_at(k);
        if (is_zero(c))
            continue;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const bool unit = abs_c == 1;
        if (k == 0) {
            os << abs_c.get_str();
        } else {
            if (!unit)
                os << abs_c.get_str() << "*";
            if (k == 1)
                os << "z";
            else
                os << "z^" << k;
        }
    }
    if (!first)
        os << " + ";
    os << "O(z^" << precision_ << ")";
    return os.str();
}

} // namespace nilcert
