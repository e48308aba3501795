#ifndef NILCERT_PARTITION_HPP
#define NILCERT_PARTITION_HPP

#include <nilcert/rational.hpp>

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace nilcert {

/// Integer partition: weakly decreasing positive parts. The empty
/// partition (of 0) is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);

    static Partition parse(const std::string &text); // "2,2,1"

    const std::vector<long> &parts() const { return parts_; }
    std::size_t count() const { return parts_.size(); }
    long total() const { return total_; }
    bool empty() const { return parts_.empty(); }

    std::string str() const; // comma-joined parts

    friend bool operator==(const Partition &a, const Partition &b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition &a, const Partition &b) { return !(a == b); }

private:
    std::vector<long> parts_;
    long total_ = 0;
};

// Transpose of the Young diagram: part j of the dual counts parts of mu
// that are >= j.
Partition dual_partition(const Partition &mu);

// The unique index a with m_1 + ... + m_{a-1} < j <= m_1 + ... + m_a.
// Requires 1 <= j <= total(mu).
long n_of(const Partition &mu, long j);

struct PartitionClass {
    bool symplectic; // every odd part occurs with even multiplicity
    bool orthogonal; // every even part occurs with even multiplicity
};
PartitionClass classify(const Partition &mu);

enum class AlgebraFamily { gl, sl, sp, so };

// Centralizer dimension of a nilpotent with Jordan type mu:
//   gl: sum of squared dual parts
//   sp: (sum of squared dual parts + #odd parts) / 2
//   so: (sum of squared dual parts - #odd parts) / 2
// sp/so require the matching parity admissibility.
long centralizer_dim_formula(const Partition &mu, AlgebraFamily kind);

// Both sides of the hook-count identity
//   sum_i i*m_i = (sum_j dual_j^2 + dual_j) / 2.
std::pair<long, long> lemma3_sides(const Partition &mu);

// Both sides of the even-index count identity for symplectic mu of 2n:
//   sum_{j=1..n} n(mu,2j) = n/2 + dim Z_sp(mu)/2.
// The sides are half-integers; returned exactly.
std::pair<Rational, Rational> cor3_sides(const Partition &mu);

// Dominance order: every prefix sum of mu is <= the one of lambda
// (zero-padded). Requires equal totals.
bool dominance_leq(const Partition &mu, const Partition &lambda);

enum class PartitionFilter { all, symplectic, orthogonal };

// All partitions of m passing the filter, in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(long m, PartitionFilter filter);

// Streaming variant for the big exhaustive sweeps (no materialized list).
void for_each_partition(long m, PartitionFilter filter,
                        const std::function<void(const Partition &)> &fn);

} // namespace nilcert

#endif
