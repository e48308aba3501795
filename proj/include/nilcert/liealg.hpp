#ifndef NILCERT_LIEALG_HPP
#define NILCERT_LIEALG_HPP

#include <nilcert/linalg.hpp>
#include <nilcert/matrix.hpp>
#include <nilcert/partition.hpp>
#include <nilcert/rng.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nilcert {

// One of the classical matrix Lie algebras, in a fixed realization:
//   gl_m, sl_m  — all / traceless m x m matrices
//   sp_{2n}     — X^T J + J X = 0 with J = [[0, I_n], [-I_n, 0]]
//   so_m        — X^T J + J X = 0 with J = antidiagonal ones
struct AlgebraKind {
    AlgebraFamily family;
    std::size_t size; // matrix size m (sp requires m = 2n even)

    static AlgebraKind gl(std::size_t m) { return {AlgebraFamily::gl, m}; }
    static AlgebraKind sl(std::size_t m) { return {AlgebraFamily::sl, m}; }
    static AlgebraKind sp(std::size_t m);
    static AlgebraKind so(std::size_t m) { return {AlgebraFamily::so, m}; }

    std::size_t dimension() const;
    std::string str() const; // "gl3", "sp4", ...
};

// The bilinear form defining sp/so in this realization; gl/sl carry none.
RationalMatrix standard_form(const AlgebraKind &kind);

// Membership in the fixed realization (trace-zero for sl, the form
// identity for sp/so, everything for gl).
bool algebra_contains(const AlgebraKind &kind, const RationalMatrix &x);

// Fixed, deterministically ordered basis of the algebra.
std::vector<RationalMatrix> algebra_basis(const AlgebraKind &kind);

// Flag data selecting a parabolic subalgebra:
//   gl/sl — a composition of m (block sizes of the stabilized flag)
//   sp/so — strictly increasing isotropic dimensions (<= n resp. floor(m/2))
// Rendered as "gl:2,1" / "sp4:1,2" / "so5:1".
struct FlagSpec {
    AlgebraKind kind;
    std::vector<std::size_t> data;

    static FlagSpec parse(const std::string &text);
    static FlagSpec full_flag(const AlgebraKind &kind); // Borel

    void validate() const;
    // Dimensions of the stabilized subspaces (prefix sums for gl/sl).
    std::vector<std::size_t> subspace_dims() const;
    std::string str() const;
};

// Basis of a subalgebra of a fixed ambient algebra. Matrices plus their
// coordinates in the ambient basis (kept for span/rank computations).
struct SubalgebraBasis {
    AlgebraKind ambient;
    std::vector<RationalMatrix> mats;
    std::vector<std::vector<Rational>> coords; // in algebra_basis(ambient)

    std::size_t dim() const { return mats.size(); }
};

// Upper-triangular Jordan blocks of sizes mu along the diagonal.
RationalMatrix jordan_nilpotent(const Partition &mu);

// A nilpotent element of sp/so (membership holds) with Jordan type mu;
// requires the matching admissibility. For gl/sl it is jordan_nilpotent.
RationalMatrix classical_nilpotent(const AlgebraKind &kind, const Partition &mu);

// Stabilizer of the flag inside the algebra, by exact kernel computation.
// For sp/so, stabilizing an isotropic flag automatically stabilizes the
// perpendicular completion, so only the listed subspaces are constrained.
SubalgebraBasis parabolic_basis(const FlagSpec &flag);

// Trace-form orthogonal complement of the parabolic inside the ambient
// algebra; for a parabolic this is its nilradical (dim p + dim n = dim g,
// n contained in p, all elements nilpotent).
SubalgebraBasis nilradical_basis(const SubalgebraBasis &p);

// dim ker(ad e) on the ambient algebra, by exact rank. Independent of the
// partition-based centralizer formulas.
long centralizer_dim_oracle(const AlgebraKind &kind, const RationalMatrix &e);

// Random coset sample e + z*gamma, gamma in g[[z]] with independent integer
// coefficients in [-bound, bound] at exponents 1..precision-1 of each
// ambient-basis direction (for gl: each matrix entry).
SeriesMatrix sample_coset_element(const AlgebraKind &kind, const RationalMatrix &e,
                                  long bound, std::int64_t precision, TrialRng &rng);

// Random element of g[[z]] with independent integer coefficients at every
// exponent 0..precision-1 (random constant term included).
SeriesMatrix sample_polefree_element(const AlgebraKind &kind, long bound,
                                     std::int64_t precision, TrialRng &rng);

struct DualLatticeSample {
    SeriesMatrix gamma;    // (1/z)(x + z*gamma_tilde), window [-1, precision-1)
    RationalMatrix x;      // the sampled nilradical element (constant part * z)
};

// Random element of (1/z)(n + z g[[z]]): x is an integer combination of the
// nilradical basis, gamma_tilde an integer combination of the ambient basis
// at each exponent.
DualLatticeSample sample_dual_lattice_element(const SubalgebraBasis &nilradical,
                                              long bound, std::int64_t precision,
                                              TrialRng &rng);

struct PairingViolation {
    std::string part; // "inclusion" or "maximality"
    std::string detail;
};

struct DualLatticeCheck {
    std::size_t inclusion_pairs = 0;
    std::size_t maximality_directions = 0;
    std::vector<PairingViolation> violations;
    bool pass() const { return violations.empty(); }
};

// Certifies 1/z(n + z g[[z]]) = dual lattice of ev^{-1}(p) at truncation
// precision: (a) inclusion: every generator of the left side pairs into
// C[[z]] against every generator of ev^{-1}(p); (b) maximality: every
// direction outside n, divided by z, pairs to a genuine 1/z pole against
// some p-basis vector.
DualLatticeCheck check_dual_lattice(const FlagSpec &flag, std::int64_t precision);

struct RichardsonResult {
    Partition partition;
    std::vector<Partition> observed; // distinct observed types, sampling order
    RationalMatrix witness;          // a sample attaining the maximum
};

// Generic Jordan type of nilradical elements (the Richardson class), by
// seeded sampling; throws if the observed types have no dominance maximum.
RichardsonResult richardson_partition(const FlagSpec &flag, std::size_t trials,
                                      long bound, std::uint64_t seed);

// Closed form for gl: the Richardson partition is the dual of the sorted
// block-size composition. Used as an oracle against the sampler.
Partition gl_richardson_closed_form(const std::vector<std::size_t> &blocks);

} // namespace nilcert

#endif
