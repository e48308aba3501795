#include <nilcert/partition.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nilcert {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        total_ += parts_[i];
    }
}

Partition Partition::parse(const std::string &text) {
    std::vector<long> parts;
    if (text.empty())
        return Partition();
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            parts.push_back(v);
        } catch (const std::exception &) {
            throw std::invalid_argument("invalid partition token: '" + tok + "'");
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument &) {
        throw std::invalid_argument("invalid partition: '" + text + "'");
    }
}

std::string Partition::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            os << ",";
        os << parts_[i];
    }
    return os.str();
}

Partition dual_partition(const Partition &mu) {
    std::vector<long> dual;
    const long longest = mu.empty() ? 0 : mu.parts().front();
    dual.reserve(static_cast<std::size_t>(longest));
    for (long j = 1; j <= longest; ++j) {
        long count = 0;
        for (long p : mu.parts())
            if (p >= j)
                ++count;
        dual.push_back(count);
    }
    return Partition(std::move(dual));
}

long n_of(const Partition &mu, long j) {
    if (j < 1 || j > mu.total()) {
        std::ostringstream os;
        os << "n(mu,j): index j = " << j << " outside 1.." << mu.total();
        throw std::out_of_range(os.str());
    }
    long prefix = 0;
    for (std::size_t a = 0; a < mu.count(); ++a) {
        prefix += mu.parts()[a];
        if (j <= prefix)
            return static_cast<long>(a) + 1;
    }
    throw std::logic_error("n_of: unreachable");
}

PartitionClass classify(const Partition &mu) {
    std::map<long, long> mult;
    for (long p : mu.parts())
        ++mult[p];
    PartitionClass c{true, true};
    for (const auto &[part, m] : mult) {
        if (part % 2 != 0 && m % 2 != 0)
            c.symplectic = false;
        if (part % 2 == 0 && m % 2 != 0)
            c.orthogonal = false;
    }
    return c;
}

static long count_odd_parts(const Partition &mu) {
    long c = 0;
    for (long p : mu.parts())
        if (p % 2 != 0)
            ++c;
    return c;
}

long centralizer_dim_formula(const Partition &mu, AlgebraFamily kind) {
    const Partition dual = dual_partition(mu);
    long sumsq = 0;
    for (long d : dual.parts())
        sumsq += d * d;
    const long odd = count_odd_parts(mu);
    switch (kind) {
    case AlgebraFamily::gl:
        return sumsq;
    case AlgebraFamily::sl:
        return sumsq - 1; // gl centralizer always contains the center
    case AlgebraFamily::sp:
        if (!classify(mu).symplectic)
            throw std::invalid_argument("partition " + mu.str() +
                                        " is not symplectic-admissible");
        return (sumsq + odd) / 2;
    case AlgebraFamily::so:
        if (!classify(mu).orthogonal)
            throw std::invalid_argument("partition " + mu.str() +
                                        " is not orthogonal-admissible");
        return (sumsq - odd) / 2;
    }
    throw std::logic_error("unknown algebra family");
}

std::pair<long, long> lemma3_sides(const Partition &mu) {
    long lhs = 0;
    for (std::size_t i = 0; i < mu.count(); ++i)
        lhs += (static_cast<long>(i) + 1) * mu.parts()[i];
    long rhs2 = 0;
    for (long d : dual_partition(mu).parts())
        rhs2 += d * d + d;
    return {lhs, rhs2 / 2};
}

std::pair<Rational, Rational> cor3_sides(const Partition &mu) {
    if (!classify(mu).symplectic)
        throw std::invalid_argument("partition " + mu.str() +
                                    " is not symplectic-admissible");
    if (mu.total() % 2 != 0)
        throw std::invalid_argument("partition " + mu.str() + " has odd total");
    const long n = mu.total() / 2;
    Rational lhs(0);
    for (long j = 1; j <= n; ++j)
        lhs += n_of(mu, 2 * j);
    Rational rhs = make_rational(n, 2) +
                   make_rational(centralizer_dim_formula(mu, AlgebraFamily::sp), 2);
    return {lhs, rhs};
}

bool dominance_leq(const Partition &mu, const Partition &lambda) {
    if (mu.total() != lambda.total())
        throw std::invalid_argument("dominance comparison requires equal totals");
    long pm = 0, pl = 0;
    const std::size_t k = std::max(mu.count(), lambda.count());
    for (std::size_t i = 0; i < k; ++i) {
        pm += i < mu.count() ? mu.parts()[i] : 0;
        pl += i < lambda.count() ? lambda.parts()[i] : 0;
        if (pm > pl)
            return false;
    }
    return true;
}

static bool passes(const Partition &p, PartitionFilter filter) {
    switch (filter) {
    case PartitionFilter::all:
        return true;
    case PartitionFilter::symplectic:
        return classify(p).symplectic;
    case PartitionFilter::orthogonal:
        return classify(p).orthogonal;
    }
    return false;
}

static void descend(long remaining, long max_part, std::vector<long> &prefix,
                    PartitionFilter filter,
                    const std::function<void(const Partition &)> &fn) {
    if (remaining == 0) {
        Partition p(prefix);
        if (passes(p, filter))
            fn(p);
        return;
    }
    for (long next = std::min(max_part, remaining); next >= 1; --next) {
        prefix.push_back(next);
        descend(remaining - next, next, prefix, filter, fn);
        prefix.pop_back();
    }
}

void for_each_partition(long m, PartitionFilter filter,
                        const std::function<void(const Partition &)> &fn) {
    if (m < 0)
        throw std::invalid_argument("partition total must be nonnegative");
    std::vector<long> prefix;
    descend(m, m, prefix, filter, fn);
}

std::vector<Partition> enumerate_partitions(long m, PartitionFilter filter) {
    std::vector<Partition> out;
    for_each_partition(m, filter, [&](const Partition &p) { out.push_back(p); });
    return out;
}

} // namespace nilcert
