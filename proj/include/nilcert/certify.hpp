#ifndef NILCERT_CERTIFY_HPP
#define NILCERT_CERTIFY_HPP

#include <nilcert/liealg.hpp>
#include <nilcert/report.hpp>

#include <cstdint>

namespace nilcert {

// Certification sweeps. Every bound below is universal: a single violating
// sample falsifies the claim, so reports count violations instead of
// estimating probabilities.

// For T samples gamma = e_mu + z*gamma~ in gl_total(mu), checks
// val(F_j(gamma)) >= n(mu,j) for every j. Observed minimum valuations and
// the fraction of trials attaining the bound are reported per j; the bound
// itself is the only assertion.
CertReport prop2_certify(const Partition &mu, std::size_t trials, long bound,
                         std::int64_t precision, std::uint64_t seed);

// For T samples gamma = (1/z)(x + z*gamma~), x in the nilradical of the sp
// flag, checks val(F_{2j}(gamma)) >= -(2j - n(Lambda,2j)) with Lambda the
// Richardson partition, the sharper per-sample bound with mu_x = type(x),
// dominance mu_x <= Lambda, and that every odd-index F vanishes to working
// precision.
CertReport lemma4_certify(const FlagSpec &flag, std::size_t trials, long bound,
                          std::int64_t precision, std::uint64_t seed);

// For random pole-free pairs M = M' mod z^{k+1}, checks that F_j(M) and
// F_j(M') agree at every exponent <= k.
CertReport jet_dependence_check(std::size_t m, std::size_t j, std::int64_t k,
                                std::size_t trials, long bound,
                                std::int64_t precision, std::uint64_t seed);

// h^0(X, L) for deg L = d > 2g-2 on a curve of genus g >= 2 (nonspecial
// range, so Riemann-Roch determines it): d - g + 1.
long h0(long genus, long degree);

// Degrees of the characteristic-polynomial invariant generators:
// sl_m/gl_m -> (2,...,m), sp_2n -> (2,4,...,2n). Asserts
// sum(d_i) = dim(G/B) + rank against the computed Borel nilradical.
std::vector<long> invariant_degrees(const AlgebraKind &kind);

// Total dimension of ⊕_i H^0(X, K^{d_i}(c_i x)) by Riemann-Roch.
DimensionBreakdown hitchin_base_dim(long genus,
                                    const std::vector<std::pair<long, long>> &summands);

// dim g * (g-1) + dim(nilradical of the flag parabolic).
long bun_dim(long genus, const FlagSpec &flag);

// The dimension comparison behind the Lagrangian property: pinned-pole
// Hitchin base vs moduli dimension. sl requires the full flag (pole orders
// d_i - 1); sp uses any isotropic flag with pole orders 2j - n(Lambda,2j).
// An explicit pole_override >= 0 replaces every pole order by that constant
// (the coarse target space; equality is not expected there).
DimensionBreakdown dim_match(long genus, const FlagSpec &flag,
                             std::uint64_t seed = 0, long pole_override = -1);

struct So5Remark {
    long lhs = 0; // n((2,2,1),2) + n((2,2,1),4)
    long rhs = 0; // (n + dim Z_so5(e)) / 2
    bool equal = false;
};

// The so(5) counterexample: the even-index count identity that powers the
// sp dimension match fails for so, witnessed by the orbit (2,2,1).
So5Remark so5_remark_check();

} // namespace nilcert

#endif
