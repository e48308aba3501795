#include <nilcert/liealg.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nilcert {

AlgebraKind AlgebraKind::sp(std::size_t m) {
    if (m == 0 || m % 2 != 0)
        throw std::invalid_argument("sp requires even positive matrix size");
    return {AlgebraFamily::sp, m};
}

std::size_t AlgebraKind::dimension() const {
    const std::size_t m = size;
    switch (family) {
    case AlgebraFamily::gl:
        return m * m;
    case AlgebraFamily::sl:
        return m * m - 1;
    case AlgebraFamily::sp:
        return m * (m + 1) / 2;
    case AlgebraFamily::so:
        return m * (m - 1) / 2;
    }
    throw std::logic_error("unknown algebra family");
}

std::string AlgebraKind::str() const {
    const char *fam = nullptr;
    switch (family) {
    case AlgebraFamily::gl: fam = "gl"; break;
    case AlgebraFamily::sl: fam = "sl"; break;
    case AlgebraFamily::sp: fam = "sp"; break;
    case AlgebraFamily::so: fam = "so"; break;
    }
    std::ostringstream os;
    os << fam << size;
    return os.str();
}

RationalMatrix standard_form(const AlgebraKind &kind) {
    const std::size_t m = kind.size;
    RationalMatrix j = rational_zero_matrix(m);
    switch (kind.family) {
    case AlgebraFamily::sp: {
        const std::size_t n = m / 2;
        for (std::size_t i = 0; i < n; ++i) {
            j.at(i, n + i) = 1;
            j.at(n + i, i) = -1;
        }
        return j;
    }
    case AlgebraFamily::so:
        for (std::size_t i = 0; i < m; ++i)
            j.at(i, m - 1 - i) = 1;
        return j;
    default:
        throw std::invalid_argument("standard_form: " + kind.str() +
                                    " carries no defining bilinear form");
    }
}

bool algebra_contains(const AlgebraKind &kind, const RationalMatrix &x) {
    if (x.size() != kind.size)
        return false;
    switch (kind.family) {
    case AlgebraFamily::gl:
        return true;
    case AlgebraFamily::sl:
        return is_zero(x.trace());
    case AlgebraFamily::sp:
    case AlgebraFamily::so: {
        const RationalMatrix j = standard_form(kind);
        const std::size_t m = kind.size;
        // X^T J + J X = 0, entrywise
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t l = 0; l < m; ++l) {
                Rational acc(0);
                for (std::size_t k = 0; k < m; ++k)
                    acc += x.at(k, i) * j.at(k, l) + j.at(i, k) * x.at(k, l);
                if (!is_zero(acc))
                    return false;
            }
        return true;
    }
    }
    return false;
}

namespace {

RationalMatrix unit_matrix(std::size_t m, std::size_t i, std::size_t j) {
    RationalMatrix e = rational_zero_matrix(m);
    e.at(i, j) = 1;
    return e;
}

} // namespace

std::vector<RationalMatrix> algebra_basis(const AlgebraKind &kind) {
    const std::size_t m = kind.size;
    std::vector<RationalMatrix> basis;
    switch (kind.family) {
    case AlgebraFamily::gl:
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                basis.push_back(unit_matrix(m, i, j));
        break;
    case AlgebraFamily::sl:
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (i != j)
                    basis.push_back(unit_matrix(m, i, j));
        for (std::size_t i = 0; i + 1 < m; ++i) {
            RationalMatrix h = rational_zero_matrix(m);
            h.at(i, i) = 1;
            h.at(i + 1, i + 1) = -1;
            basis.push_back(h);
        }
        break;
    case AlgebraFamily::sp: {
        const std::size_t n = m / 2;
        // [[A, B], [C, -A^T]] with B, C symmetric
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                RationalMatrix x = rational_zero_matrix(m);
                x.at(i, j) = 1;
                x.at(n + j, n + i) = -1;
                basis.push_back(x);
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                RationalMatrix x = rational_zero_matrix(m);
                x.at(i, n + j) = 1;
                if (i != j)
                    x.at(j, n + i) = 1;
                basis.push_back(x);
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                RationalMatrix x = rational_zero_matrix(m);
                x.at(n + i, j) = 1;
                if (i != j)
                    x.at(n + j, i) = 1;
                basis.push_back(x);
            }
        break;
    }
    case AlgebraFamily::so:
        // E_ij - E_{m-1-j, m-1-i} for entries strictly off the antidiagonal,
        // one per orbit of the pairing involution
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                if (i + j == m - 1)
                    continue;
                const std::size_t pi = m - 1 - j, pj = m - 1 - i;
                if (std::make_pair(i, j) < std::make_pair(pi, pj)) {
                    RationalMatrix x = rational_zero_matrix(m);
                    x.at(i, j) = 1;
                    x.at(pi, pj) = -1;
                    basis.push_back(x);
                }
            }
        break;
    }
    if (basis.size() != kind.dimension())
        throw std::logic_error("algebra basis has wrong dimension");
    return basis;
}

AlgebraKind parse_algebra_token(const std::string &text) {
    if (text.size() < 2)
        throw std::invalid_argument("invalid algebra token: '" + text + "'");
    const std::string fam = text.substr(0, 2);
    const std::string digits = text.substr(2);
    std::size_t size = 0;
    if (!digits.empty()) {
        std::size_t used = 0;
        try {
            size = std::stoul(digits, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != digits.size())
            throw std::invalid_argument("invalid algebra size in token: '" + text + "'");
    }
    if (fam == "gl")
        return {AlgebraFamily::gl, size};
    if (fam == "sl")
        return {AlgebraFamily::sl, size};
    if (fam == "sp")
        return {AlgebraFamily::sp, size};
    if (fam == "so")
        return {AlgebraFamily::so, size};
    throw std::invalid_argument("unknown algebra family in token: '" + text + "'");
}

FlagSpec FlagSpec::parse(const std::string &text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("invalid flag spec (missing ':'): '" + text + "'");
    AlgebraKind kind = parse_algebra_token(text.substr(0, colon));
    std::vector<std::size_t> data;
    const std::string list = text.substr(colon + 1);
    if (list.empty())
        throw std::invalid_argument("invalid flag spec (empty data): '" + text + "'");
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != tok.size() || v == 0)
            throw std::invalid_argument("invalid flag entry '" + tok + "' in '" + text + "'");
        data.push_back(v);
    }
    const bool composition =
        kind.family == AlgebraFamily::gl || kind.family == AlgebraFamily::sl;
    if (composition && kind.size == 0) {
        for (std::size_t b : data)
            kind.size += b;
    }
    if (kind.size == 0)
        throw std::invalid_argument("flag spec needs an explicit size: '" + text + "'");
    FlagSpec flag{kind, std::move(data)};
    try {
        flag.validate();
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument(std::string(e.what()) + " in '" + text + "'");
    }
    return flag;
}

FlagSpec FlagSpec::full_flag(const AlgebraKind &kind) {
    std::vector<std::size_t> data;
    switch (kind.family) {
    case AlgebraFamily::gl:
    case AlgebraFamily::sl:
        data.assign(kind.size, 1);
        break;
    case AlgebraFamily::sp:
    case AlgebraFamily::so:
        for (std::size_t d = 1; d <= kind.size / 2; ++d)
            data.push_back(d);
        break;
    }
    return {kind, std::move(data)};
}

void FlagSpec::validate() const {
    switch (kind.family) {
    case AlgebraFamily::gl:
    case AlgebraFamily::sl: {
        std::size_t sum = 0;
        for (std::size_t b : data) {
            if (b == 0)
                throw std::invalid_argument("composition blocks must be positive");
            sum += b;
        }
        if (data.empty() || sum != kind.size)
            throw std::invalid_argument("composition does not sum to the matrix size");
        break;
    }
    case AlgebraFamily::sp:
    case AlgebraFamily::so: {
        if (kind.family == AlgebraFamily::sp && kind.size % 2 != 0)
            throw std::invalid_argument("sp flag requires even matrix size");
        const std::size_t iso_max = kind.size / 2;
        std::size_t prev = 0;
        for (std::size_t d : data) {
            if (d <= prev)
                throw std::invalid_argument("flag dimensions must be strictly increasing");
            if (d > iso_max)
                throw std::invalid_argument("flag dimension exceeds the maximal isotropic dimension");
            prev = d;
        }
        break;
    }
    }
}

std::vector<std::size_t> FlagSpec::subspace_dims() const {
    std::vector<std::size_t> dims;
    if (kind.family == AlgebraFamily::gl || kind.family == AlgebraFamily::sl) {
        std::size_t prefix = 0;
        for (std::size_t i = 0; i + 1 < data.size(); ++i) {
            prefix += data[i];
            dims.push_back(prefix);
        }
    } else {
        dims = data;
    }
    return dims;
}

std::string FlagSpec::str() const {
    std::ostringstream os;
    switch (kind.family) {
    case AlgebraFamily::gl: os << "gl"; break;
    case AlgebraFamily::sl: os << "sl"; break;
    case AlgebraFamily::sp: os << "sp" << kind.size; break;
    case AlgebraFamily::so: os << "so" << kind.size; break;
    }
    os << ":";
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (i)
            os << ",";
        os << data[i];
    }
    return os.str();
}

RationalMatrix jordan_nilpotent(const Partition &mu) {
    const std::size_t m = static_cast<std::size_t>(mu.total());
    if (m == 0)
        throw std::invalid_argument("jordan_nilpotent of the empty partition");
    RationalMatrix e = rational_zero_matrix(m);
    std::size_t offset = 0;
    for (long part : mu.parts()) {
        for (long i = 0; i + 1 < part; ++i)
            e.at(offset + i, offset + i + 1) = 1;
        offset += static_cast<std::size_t>(part);
    }
    return e;
}

namespace {

// --- building blocks for classical_nilpotent -------------------------------

// sp_{2n}: a regular nilpotent on one symplectic 2k-subspace, Jordan type (2k).
// Local shape [[J_k, E_kk], [0, -J_k^T]].
void sp_place_single_even(RationalMatrix &e, std::size_t n, std::size_t slot0,
                          std::size_t k) {
    const auto pos = [&](std::size_t i) { return slot0 + i; };
    const auto neg = [&](std::size_t i) { return n + slot0 + i; };
    for (std::size_t i = 0; i + 1 < k; ++i) {
        e.at(pos(i), pos(i + 1)) = 1;   // J_k
        e.at(neg(i + 1), neg(i)) = -1;  // -J_k^T
    }
    e.at(pos(k - 1), neg(k - 1)) = 1;   // E_kk, symmetric
}

// sp_{2n}: two equal Jordan blocks (k,k) on a Lagrangian dual pair,
// local shape [[J_k, 0], [0, -J_k^T]].
void sp_place_equal_pair(RationalMatrix &e, std::size_t n, std::size_t slot0,
                         std::size_t k) {
    for (std::size_t i = 0; i + 1 < k; ++i) {
        e.at(slot0 + i, slot0 + i + 1) = 1;
        e.at(n + slot0 + i + 1, n + slot0 + i) = -1;
    }
}

// so_m local blocks are built on index sets symmetric under i -> m-1-i,
// where the induced form is again the antidiagonal identity.

// Regular nilpotent of so_k (k odd) in the antidiagonal realization:
// superdiagonal +1 on the first half, -1 on the second half.
RationalMatrix so_center_block(std::size_t k) {
    RationalMatrix x = rational_zero_matrix(k);
    const std::size_t half = (k - 1) / 2;
    for (std::size_t i = 0; i + 1 < k; ++i)
        x.at(i, i + 1) = i < half ? 1 : -1;
    return x;
}

// Jordan pair (k,k) on a dual isotropic splitting of so_{2k}: diag(J_k, -J_k).
RationalMatrix so_equal_pair_block(std::size_t k) {
    RationalMatrix x = rational_zero_matrix(2 * k);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        x.at(i, i + 1) = 1;
        x.at(k + i, k + i + 1) = -1;
    }
    return x;
}

// Jordan pair (k, kp) with k > kp both odd, inside so_{k+kp}. Built on two
// abstract chains with an alternating-sign Gram matrix, then transported
// into the antidiagonal realization through an explicit hyperbolic basis.
RationalMatrix so_odd_pair_block(std::size_t k, std::size_t kp) {
    const std::size_t d = k + kp;

    // Abstract chain map: u_{a} -> u_{a-1}, w_{b} -> w_{b-1} (1-based a, b).
    RationalMatrix chain = rational_zero_matrix(d);
    for (std::size_t a = 1; a < k; ++a)
        chain.at(a - 1, a) = 1;
    for (std::size_t b = 1; b < kp; ++b)
        chain.at(k + b - 1, k + b) = 1;

    // Gram: <u_a, u_b> = (-1)^a [a+b=k+1], <w_a, w_b> = s' (-1)^a [a+b=kp+1].
    // The second sign is chosen so the two middle squares are opposite and
    // combine into a hyperbolic pair over Q.
    const long gamma1 = ((k + 1) / 2) % 2 == 0 ? 1 : -1;
    const long gamma2_unsigned = ((kp + 1) / 2) % 2 == 0 ? 1 : -1;
    const long sprime = -gamma1 * gamma2_unsigned;

    const auto sign = [](std::size_t a) { return a % 2 == 0 ? 1 : -1; };

    // Columns of Q: a basis whose Gram matrix is the antidiagonal identity.
    // Hyperbolic pair t occupies columns t and d+1-t (1-based).
    RationalMatrix q = rational_zero_matrix(d);
    std::size_t t = 0; // 0-based pair counter
    for (std::size_t a = 1; 2 * a < k; ++a, ++t) {
        q.at(a - 1, t) = 1;                           // u_a
        q.at(k - a, d - 1 - t) = sign(a);             // (-1)^a u_{k+1-a}
    }
    for (std::size_t a = 1; 2 * a < kp; ++a, ++t) {
        q.at(k + a - 1, t) = 1;                       // w_a
        q.at(k + kp - a, d - 1 - t) = sprime * sign(a);
    }
    // Middle squares: c1 = u_{(k+1)/2} with <c1,c1> = gamma1, c2 = w_{(kp+1)/2}
    // with <c2,c2> = -gamma1; then (c1+c2, (c1-c2)/(2 gamma1)) is hyperbolic.
    const std::size_t c1 = (k + 1) / 2 - 1;
    const std::size_t c2 = k + (kp + 1) / 2 - 1;
    q.at(c1, t) = 1;
    q.at(c2, t) = 1;
    q.at(c1, d - 1 - t) = make_rational(1, 2 * gamma1);
    q.at(c2, d - 1 - t) = make_rational(-1, 2 * gamma1);

    return rational_inverse(q) * chain * q;
}

void scatter_block(RationalMatrix &e, const std::vector<std::size_t> &indices,
                   const RationalMatrix &block) {
    for (std::size_t a = 0; a < block.size(); ++a)
        for (std::size_t b = 0; b < block.size(); ++b)
            if (!is_zero(block.at(a, b)))
                e.at(indices[a], indices[b]) = block.at(a, b);
}

RationalMatrix classical_nilpotent_sp(std::size_t m, const Partition &mu) {
    const std::size_t n = m / 2;
    RationalMatrix e = rational_zero_matrix(m);
    std::map<long, long, std::greater<long>> mult;
    for (long p : mu.parts())
        ++mult[p];
    std::size_t slot = 0;
    for (const auto &[value, count] : mult) {
        const auto v = static_cast<std::size_t>(value);
        if (value % 2 != 0) {
            for (long c = 0; c < count / 2; ++c) {
                sp_place_equal_pair(e, n, slot, v);
                slot += v;
            }
        } else {
            for (long c = 0; c < count; ++c) {
                sp_place_single_even(e, n, slot, v / 2);
                slot += v / 2;
            }
        }
    }
    if (slot != n)
        throw std::logic_error("sp nilpotent construction used wrong slot count");
    return e;
}

RationalMatrix classical_nilpotent_so(std::size_t m, const Partition &mu) {
    RationalMatrix e = rational_zero_matrix(m);
    std::map<long, long, std::greater<long>> mult;
    for (long p : mu.parts())
        ++mult[p];

    std::vector<RationalMatrix> pair_blocks;
    std::vector<long> leftover_odds;
    for (const auto &[value, count] : mult) {
        const auto v = static_cast<std::size_t>(value);
        for (long c = 0; c < count / 2; ++c)
            pair_blocks.push_back(so_equal_pair_block(v));
        if (count % 2 != 0) {
            if (value % 2 == 0)
                throw std::logic_error("orthogonal admissibility violated");
            leftover_odds.push_back(value);
        }
    }
    for (std::size_t i = 0; i + 1 < leftover_odds.size(); i += 2)
        pair_blocks.push_back(so_odd_pair_block(
            static_cast<std::size_t>(leftover_odds[i]),
            static_cast<std::size_t>(leftover_odds[i + 1])));

    std::size_t lo = 0, hi = m; // [lo, hi) not yet assigned
    for (const RationalMatrix &block : pair_blocks) {
        const std::size_t t = block.size() / 2;
        std::vector<std::size_t> indices;
        for (std::size_t i = 0; i < t; ++i)
            indices.push_back(lo + i);
        for (std::size_t i = 0; i < t; ++i)
            indices.push_back(hi - t + i);
        scatter_block(e, indices, block);
        lo += t;
        hi -= t;
    }
    if (leftover_odds.size() % 2 != 0) {
        const auto k = static_cast<std::size_t>(leftover_odds.back());
        if (hi - lo != k)
            throw std::logic_error("so nilpotent construction left a wrong center gap");
        std::vector<std::size_t> indices;
        for (std::size_t i = 0; i < k; ++i)
            indices.push_back(lo + i);
        scatter_block(e, indices, so_center_block(k));
        lo += k;
    }
    if (lo != hi)
        throw std::logic_error("so nilpotent construction left unused indices");
    return e;
}

} // namespace

RationalMatrix classical_nilpotent(const AlgebraKind &kind, const Partition &mu) {
    if (static_cast<std::size_t>(mu.total()) != kind.size)
        throw std::invalid_argument("partition total does not match the matrix size");
    switch (kind.family) {
    case AlgebraFamily::gl:
    case AlgebraFamily::sl:
        return jordan_nilpotent(mu);
    case AlgebraFamily::sp:
        if (!classify(mu).symplectic)
            throw std::invalid_argument("partition " + mu.str() +
                                        " is not symplectic-admissible");
        return classical_nilpotent_sp(kind.size, mu);
    case AlgebraFamily::so:
        if (!classify(mu).orthogonal)
            throw std::invalid_argument("partition " + mu.str() +
                                        " is not orthogonal-admissible");
        return classical_nilpotent_so(kind.size, mu);
    }
    throw std::logic_error("unknown algebra family");
}

SubalgebraBasis parabolic_basis(const FlagSpec &flag) {
    flag.validate();
    const AlgebraKind kind = flag.kind;
    const std::size_t m = kind.size;
    const std::vector<RationalMatrix> ambient = algebra_basis(kind);
    const std::size_t dim = ambient.size();

    RowMatrix constraints;
    for (std::size_t d : flag.subspace_dims())
        for (std::size_t i = d; i < m; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                std::vector<Rational> row(dim);
                for (std::size_t a = 0; a < dim; ++a)
                    row[a] = ambient[a].at(i, j);
                constraints.push_back(std::move(row));
            }

    std::vector<std::vector<Rational>> coords;
    if (constraints.empty()) {
        for (std::size_t a = 0; a < dim; ++a) {
            std::vector<Rational> unit(dim, Rational(0));
            unit[a] = 1;
            coords.push_back(std::move(unit));
        }
    } else {
        coords = kernel_basis(constraints);
    }

    SubalgebraBasis p{kind, {}, {}};
    for (const auto &c : coords) {
        RationalMatrix x = rational_zero_matrix(m);
        for (std::size_t a = 0; a < dim; ++a)
            if (!is_zero(c[a]))
                x = x + ambient[a].scaled(c[a]);
        p.mats.push_back(std::move(x));
    }
    p.coords = std::move(coords);
    return p;
}

SubalgebraBasis nilradical_basis(const SubalgebraBasis &p) {
    const AlgebraKind kind = p.ambient;
    const std::vector<RationalMatrix> ambient = algebra_basis(kind);
    const std::size_t dim = ambient.size();

    RowMatrix pairing;
    pairing.reserve(p.dim());
    for (const RationalMatrix &pb : p.mats) {
        std::vector<Rational> row(dim);
        for (std::size_t a = 0; a < dim; ++a)
            row[a] = trace_pairing(ambient[a], pb);
        pairing.push_back(std::move(row));
    }

    std::vector<std::vector<Rational>> coords =
        pairing.empty() ? std::vector<std::vector<Rational>>{} : kernel_basis(pairing);
    if (pairing.empty()) {
        for (std::size_t a = 0; a < dim; ++a) {
            std::vector<Rational> unit(dim, Rational(0));
            unit[a] = 1;
            coords.push_back(std::move(unit));
        }
    }

    SubalgebraBasis n{kind, {}, {}};
    for (const auto &c : coords) {
        RationalMatrix x = rational_zero_matrix(kind.size);
        for (std::size_t a = 0; a < dim; ++a)
            if (!is_zero(c[a]))
                x = x + ambient[a].scaled(c[a]);
        n.mats.push_back(std::move(x));
    }
    n.coords = std::move(coords);

    // Structural self-checks: n = p-perp must complement p in dimension and
    // sit inside p.
    if (p.dim() + n.dim() != dim)
        throw std::logic_error("nilradical dimension check failed: " +
                               std::to_string(p.dim()) + " + " +
                               std::to_string(n.dim()) + " != " + std::to_string(dim));
    RowMatrix span = p.coords;
    for (const auto &c : n.coords)
        span.push_back(c);
    if (rational_rank(span) != p.dim())
        throw std::logic_error("nilradical is not contained in the parabolic");
    return n;
}

long centralizer_dim_oracle(const AlgebraKind &kind, const RationalMatrix &e) {
    if (!algebra_contains(kind, e))
        throw std::invalid_argument("element is not in " + kind.str());
    const std::vector<RationalMatrix> ambient = algebra_basis(kind);
    const std::size_t dim = ambient.size();
    const std::size_t m = kind.size;

    RowMatrix ad(m * m, std::vector<Rational>(dim, Rational(0)));
    for (std::size_t a = 0; a < dim; ++a) {
        const RationalMatrix bracket = e * ambient[a] - ambient[a] * e;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                ad[i * m + j][a] = bracket.at(i, j);
    }
    return static_cast<long>(dim - rational_rank(ad));
}

SeriesMatrix sample_coset_element(const AlgebraKind &kind, const RationalMatrix &e,
                                  long bound, std::int64_t precision, TrialRng &rng) {
    if (precision < 2)
        throw std::invalid_argument("coset sampling requires precision >= 2");
    if (bound < 1)
        throw std::invalid_argument("coset sampling requires bound >= 1");
    const std::size_t m = kind.size;
    if (e.size() != m)
        throw std::invalid_argument("matrix size mismatch");
    const std::vector<RationalMatrix> ambient = algebra_basis(kind);

    // coefficient grids: entry (i,j) gets a dense window [0, precision)
    std::vector<std::vector<Rational>> grid(m * m,
                                            std::vector<Rational>(precision, Rational(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            grid[i * m + j][0] = e.at(i, j);
    for (std::int64_t t = 1; t < precision; ++t)
        for (const RationalMatrix &b : ambient) {
            const long c = rng.next_int(bound);
            if (c == 0)
                continue;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    if (!is_zero(b.at(i, j)))
                        grid[i * m + j][static_cast<std::size_t>(t)] += c * b.at(i, j);
        }

    SeriesMatrix out = series_zero_matrix(m, precision);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            out.at(i, j) = Series(0, precision, std::move(grid[i * m + j]));
    return out;
}

SeriesMatrix sample_polefree_element(const AlgebraKind &kind, long bound,
                                     std::int64_t precision, TrialRng &rng) {
    if (precision < 1)
        throw std::invalid_argument("sampling requires precision >= 1");
    if (bound < 1)
        throw std::invalid_argument("sampling requires bound >= 1");
    const std::size_t m = kind.size;
    const std::vector<RationalMatrix> ambient = algebra_basis(kind);
    std::vector<std::vector<Rational>> grid(
        m * m, std::vector<Rational>(static_cast<std::size_t>(precision), Rational(0)));
    for (std::int64_t t = 0; t < precision; ++t)
        for (const RationalMatrix &b : ambient) {
            const long c = rng.next_int(bound);
            if (c == 0)
                continue;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    if (!is_zero(b.at(i, j)))
                        grid[i * m + j][static_cast<std::size_t>(t)] += c * b.at(i, j);
        }
    SeriesMatrix out = series_zero_matrix(m, precision);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            out.at(i, j) = Series(0, precision, std::move(grid[i * m + j]));
    return out;
}

DualLatticeSample sample_dual_lattice_element(const SubalgebraBasis &nilradical,
                                              long bound, std::int64_t precision,
                                              TrialRng &rng) {
    if (precision < 2)
        throw std::invalid_argument("dual-lattice sampling requires precision >= 2");
    if (bound < 1)
        throw std::invalid_argument("dual-lattice sampling requires bound >= 1");
    const AlgebraKind kind = nilradical.ambient;
    const std::size_t m = kind.size;
    const std::vector<RationalMatrix> ambient = algebra_basis(kind);

    RationalMatrix x = rational_zero_matrix(m);
    for (const RationalMatrix &nb : nilradical.mats) {
        const long c = rng.next_int(bound);
        if (c != 0)
            x = x + nb.scaled(Rational(c));
    }

    // window [-1, precision-1): 1/z * x + integer ambient combinations at
    // exponents 0 .. precision-2
    std::vector<std::vector<Rational>> grid(
        m * m, std::vector<Rational>(static_cast<std::size_t>(precision), Rational(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            grid[i * m + j][0] = x.at(i, j);
    for (std::int64_t t = 1; t < precision; ++t)
        for (const RationalMatrix &b : ambient) {
            const long c = rng.next_int(bound);
            if (c == 0)
                continue;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    if (!is_zero(b.at(i, j)))
                        grid[i * m + j][static_cast<std::size_t>(t)] += c * b.at(i, j);
        }

    SeriesMatrix gamma = series_zero_matrix(m, precision - 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            gamma.at(i, j) = Series(-1, precision - 1, std::move(grid[i * m + j]));
    return {std::move(gamma), std::move(x)};
}

DualLatticeCheck check_dual_lattice(const FlagSpec &flag, std::int64_t precision) {
    if (precision < 3)
        throw std::invalid_argument("dual-lattice check requires precision >= 3");
    const AlgebraKind kind = flag.kind;
    const SubalgebraBasis p = parabolic_basis(flag);
    const SubalgebraBasis n = nilradical_basis(p);
    const std::vector<RationalMatrix> ambient = algebra_basis(kind);

    DualLatticeCheck result;

    // generators of 1/z(n + z g[[z]]) over C[[z]]
    std::vector<std::pair<std::string, SeriesMatrix>> us;
    for (std::size_t i = 0; i < n.mats.size(); ++i)
        us.emplace_back("n[" + std::to_string(i) + "]/z",
                        shifted_all(embed_constant(n.mats[i], precision), -1));
    for (std::size_t a = 0; a < ambient.size(); ++a)
        us.emplace_back("g[" + std::to_string(a) + "]",
                        embed_constant(ambient[a], precision));
    // generators of ev^{-1}(p) over C[[z]]
    std::vector<std::pair<std::string, SeriesMatrix>> vs;
    for (std::size_t b = 0; b < p.mats.size(); ++b)
        vs.emplace_back("p[" + std::to_string(b) + "]",
                        embed_constant(p.mats[b], precision));
    for (std::size_t a = 0; a < ambient.size(); ++a)
        vs.emplace_back("z*g[" + std::to_string(a) + "]",
                        shifted_all(embed_constant(ambient[a], precision), 1));

    for (const auto &[uname, u] : us)
        for (const auto &[vname, v] : vs) {
            ++result.inclusion_pairs;
            const ValuationResult val = trace_pairing(u, v).valuation();
            if (!val.certifies_at_least(0))
                result.violations.push_back(
                    {"inclusion", "tr(" + uname + " * " + vname + ") has valuation " +
                                      val.str() + " < 0"});
        }

    // maximality: ambient directions extending span(n) must pair to an
    // honest 1/z pole against some p generator
    RowMatrix span = n.coords;
    std::size_t rank = rational_rank(span);
    for (std::size_t a = 0; a < ambient.size(); ++a) {
        std::vector<Rational> unit(ambient.size(), Rational(0));
        unit[a] = 1;
        span.push_back(std::move(unit));
        const std::size_t r = rational_rank(span);
        if (r == rank) {
            span.pop_back();
            continue;
        }
        rank = r;
        ++result.maximality_directions;
        const SeriesMatrix y_over_z = shifted_all(embed_constant(ambient[a], precision), -1);
        bool found = false;
        for (const RationalMatrix &v : p.mats) {
            const ValuationResult val =
                trace_pairing(y_over_z, embed_constant(v, precision)).valuation();
            if (val.is_exact() && val.value == -1) {
                found = true;
                break;
            }
        }
        if (!found)
            result.violations.push_back(
                {"maximality", "complement direction g[" + std::to_string(a) +
                                   "] pairs into C[[z]] against every parabolic generator"});
    }
    return result;
}

RichardsonResult richardson_partition(const FlagSpec &flag, std::size_t trials,
                                      long bound, std::uint64_t seed) {
    if (trials < 1)
        throw std::invalid_argument("richardson sampling requires at least one trial");
    const SubalgebraBasis p = parabolic_basis(flag);
    const SubalgebraBasis n = nilradical_basis(p);
    const std::size_t m = flag.kind.size;

    std::vector<Partition> observed;
    std::vector<RationalMatrix> witnesses;
    for (std::size_t t = 0; t < trials; ++t) {
        TrialRng rng(seed, t);
        RationalMatrix x = rational_zero_matrix(m);
        for (const RationalMatrix &nb : n.mats) {
            const long c = rng.next_int(bound);
            if (c != 0)
                x = x + nb.scaled(Rational(c));
        }
        const Partition type = jordan_type(x);
        if (std::find(observed.begin(), observed.end(), type) == observed.end()) {
            observed.push_back(type);
            witnesses.push_back(x);
        }
    }

    for (std::size_t i = 0; i < observed.size(); ++i) {
        bool is_max = true;
        for (std::size_t j = 0; j < observed.size(); ++j)
            if (!dominance_leq(observed[j], observed[i])) {
                is_max = false;
                break;
            }
        if (is_max)
            return {observed[i], observed, witnesses[i]};
    }
    std::ostringstream os;
    os << "richardson sampling found no dominance maximum among observed types:";
    for (const Partition &q : observed)
        os << " (" << q.str() << ")";
    throw std::runtime_error(os.str());
}

Partition gl_richardson_closed_form(const std::vector<std::size_t> &blocks) {
    std::vector<long> parts;
    parts.reserve(blocks.size());
    for (std::size_t b : blocks)
        parts.push_back(static_cast<long>(b));
    std::sort(parts.begin(), parts.end(), std::greater<long>());
    return dual_partition(Partition(std::move(parts)));
}

} // namespace nilcert
