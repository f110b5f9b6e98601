#include "ipls/rankone.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace ipls {

namespace {

// Largest entry of each L column becomes +-1 with a positive first nonzero.
void normalise_columns(RealMatrix& L, RealMatrix& R) {
    for (std::size_t j = 0; j < L.cols(); ++j) {
        double biggest = 0.0;
        double first = 0.0;
        for (std::size_t i = 0; i < L.rows(); ++i) {
            const double v = L(i, j);
            if (first == 0.0 && v != 0.0) first = v;
            biggest = std::max(biggest, std::fabs(v));
        }
        if (biggest == 0.0) continue;
        const double s = (first > 0.0 ? 1.0 : -1.0) / biggest;
        for (std::size_t i = 0; i < L.rows(); ++i) L(i, j) *= s;
        for (std::size_t c = 0; c < R.cols(); ++c) R(j, c) /= s;
    }
}

struct Block {
    RealMatrix L;
    RealMatrix R;
    RealVector t;
    std::size_t rank = 0;
    bool augmented = false;
    std::size_t size() const { return L.cols(); }
};

RealVector least_squares(const RealMatrix& L, const RealVector& a) {
    const RealMatrix Lt = L.transposed();
    return solve(Lt * L, Lt * a);
}

Block make_block(const RealMatrix& L, const RealMatrix& R, std::size_t rank, const RealVector& a,
                 double tol) {
    Block b{L, R, RealVector(rank, 0.0), rank, false};
    const double a_norm = norm_inf(a);
    if (a_norm == 0.0) return b;

    bool representable = false;
    try {
        RealVector t = least_squares(L, a);
        const RealVector residual = L * t - a;
        if (norm_inf(residual) <= tol * std::max(1.0, a_norm)) {
            b.t = std::move(t);
            representable = true;
        }
    } catch (const Singular&) {
        representable = false;
    }
    if (representable) return b;

    // Append a_k as an extra column with a zero R row and t entry 1; the
    // matrix part is unchanged and p_k a_k enters the rhs exactly.
    const std::size_t n = L.rows();
    RealMatrix L2(n, rank + 1);
    RealMatrix R2(rank + 1, R.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < rank; ++j) L2(i, j) = L(i, j);
        L2(i, rank) = a[i];
    }
    for (std::size_t j = 0; j < rank; ++j)
        for (std::size_t c = 0; c < R.cols(); ++c) R2(j, c) = R(j, c);
    b.L = std::move(L2);
    b.R = std::move(R2);
    b.t = RealVector(rank + 1, 0.0);
    b.t[rank] = 1.0;
    b.augmented = true;
    return b;
}

RankOneRepresentation assemble(const ParametricLinearSystem& sys, const ParameterPartition& part,
                               const std::vector<Block>& blocks, bool transposed) {
    const std::size_t n = sys.dimension();
    std::size_t gamma = 0;
    for (const auto& b : blocks) gamma += b.size();

    RankOneRepresentation rep;
    rep.partition = part;
    rep.transposed = transposed;
    rep.L = RealMatrix(n, gamma);
    rep.R = RealMatrix(gamma, n);
    rep.t = RealVector(gamma, 0.0);
    rep.F = RealMatrix(n, part.pi_double_prime.size());

    std::size_t offset = 0;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const Block& b = blocks[k];
        rep.gamma_k.push_back(b.size());
        rep.augmented.push_back(b.augmented);
        for (std::size_t j = 0; j < b.size(); ++j) {
            rep.block_index.push_back(k);
            for (std::size_t i = 0; i < n; ++i) rep.L(i, offset + j) = b.L(i, j);
            for (std::size_t c = 0; c < n; ++c) rep.R(offset + j, c) = b.R(j, c);
            rep.t[offset + j] = b.t[j];
        }
        offset += b.size();
    }
    for (std::size_t j = 0; j < part.pi_double_prime.size(); ++j) {
        const RealVector& a = sys.term(part.pi_double_prime[j]).a;
        for (std::size_t i = 0; i < n; ++i) rep.F(i, j) = a[i];
    }
    return rep;
}

}  // namespace

RankFactors rank_factorize(const RealMatrix& a, double tol) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    if (a.is_zero()) throw InvalidArgument("rank_factorize: zero matrix has no factors");

    RealMatrix m = a;
    std::vector<std::size_t> rp(rows), cp(cols);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);

    const std::size_t steps = std::min(rows, cols);
    double first_pivot = 0.0;
    std::size_t rank = 0;
    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t pi = k, pj = k;
        double best = -1.0;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j)
                if (std::fabs(m(i, j)) > best) {
                    best = std::fabs(m(i, j));
                    pi = i;
                    pj = j;
                }
        if (k == 0) first_pivot = best;
        if (!(best > tol * first_pivot) || best == 0.0) break;

        if (pi != k) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(pi, j), m(k, j));
            std::swap(rp[pi], rp[k]);
        }
        if (pj != k) {
            for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, pj), m(i, k));
            std::swap(cp[pj], cp[k]);
        }
        for (std::size_t i = k + 1; i < rows; ++i) {
            const double f = m(i, k) / m(k, k);
            m(i, k) = f;
            for (std::size_t j = k + 1; j < cols; ++j) m(i, j) -= f * m(k, j);
        }
        ++rank;
    }

    RankFactors out{RealMatrix(rows, rank), RealMatrix(rank, cols), rank};
    for (std::size_t k = 0; k < rank; ++k) {
        out.L(rp[k], k) = 1.0;
        for (std::size_t i = k + 1; i < rows; ++i) out.L(rp[i], k) = m(i, k);
        for (std::size_t j = k; j < cols; ++j) out.R(k, cp[j]) = m(k, j);
    }
    normalise_columns(out.L, out.R);
    return out;
}

RealVector RankOneRepresentation::expand(std::span<const double> per_parameter) const {
    if (per_parameter.size() != gamma_k.size())
        throw DimensionMismatch("expand: expected one value per matrix parameter");
    RealVector g(gamma());
    for (std::size_t r = 0; r < g.size(); ++r) g[r] = per_parameter[block_index[r]];
    return g;
}

IntervalVector RankOneRepresentation::expand(const IntervalVector& per_parameter) const {
    if (per_parameter.size() != gamma_k.size())
        throw DimensionMismatch("expand: expected one value per matrix parameter");
    IntervalVector g(gamma());
    for (std::size_t r = 0; r < g.size(); ++r) g[r] = per_parameter[block_index[r]];
    return g;
}

RealVector RankOneRepresentation::collapse(std::span<const double> g) const {
    if (g.size() != gamma()) throw DimensionMismatch("collapse: wrong g length");
    RealVector out(gamma_k.size(), 0.0);
    std::vector<bool> seen(gamma_k.size(), false);
    for (std::size_t r = 0; r < g.size(); ++r) {
        const std::size_t b = block_index[r];
        if (seen[b] && out[b] != g[r])
            throw InvalidArgument("collapse: g block is not constant");
        out[b] = g[r];
        seen[b] = true;
    }
    return out;
}

RealVector RankOneRepresentation::g_of(std::span<const double> p) const {
    RealVector per(partition.pi_prime.size());
    for (std::size_t k = 0; k < per.size(); ++k) per[k] = p[partition.pi_prime[k]];
    return expand(per);
}

IntervalVector RankOneRepresentation::g_of(const IntervalVector& p) const {
    IntervalVector per;
    for (std::size_t k : partition.pi_prime) per.push_back(p.at(k));
    return expand(per);
}

RealVector RankOneRepresentation::double_prime_of(std::span<const double> p) const {
    RealVector out;
    for (std::size_t k : partition.pi_double_prime) out.push_back(p[k]);
    return out;
}

IntervalVector RankOneRepresentation::double_prime_of(const IntervalVector& p) const {
    IntervalVector out;
    for (std::size_t k : partition.pi_double_prime) out.push_back(p.at(k));
    return out;
}

std::vector<std::size_t> RankOneRepresentation::q_parameters() const {
    std::vector<std::size_t> out = partition.pi_double_prime;
    for (std::size_t b : block_index) out.push_back(partition.pi_prime[b]);
    return out;
}

RankOneRepresentation build_representation(const ParametricLinearSystem& sys,
                                           const ParameterPartition& part, double tol) {
    std::vector<Block> direct, flipped;
    std::size_t gamma_direct = 0, gamma_flipped = 0;
    for (std::size_t k : part.pi_prime) {
        const auto& term = sys.term(k);
        if (term.A.is_zero())
            throw FactorizationError("parameter " + term.name + " is in pi' but has a zero matrix");

        RankFactors f = rank_factorize(term.A, tol);
        direct.push_back(make_block(f.L, f.R, f.rank, term.a, tol));
        gamma_direct += direct.back().size();

        RankFactors ft = rank_factorize(term.A.transposed(), tol);
        RealMatrix L = ft.R.transposed();
        RealMatrix R = ft.L.transposed();
        normalise_columns(L, R);
        flipped.push_back(make_block(L, R, ft.rank, term.a, tol));
        gamma_flipped += flipped.back().size();
    }
    if (gamma_flipped < gamma_direct) return assemble(sys, part, flipped, true);
    return assemble(sys, part, direct, false);
}

RankOneRepresentation build_representation(const ParametricLinearSystem& sys, double tol) {
    return build_representation(sys, partition_parameters(sys), tol);
}

RepresentationCheck verify_representation(const ParametricLinearSystem& sys,
                                          const RankOneRepresentation& rep, int samples,
                                          unsigned long long seed) {
    RepresentationCheck check;
    const std::size_t n = sys.dimension();
    if (rep.L.rows() != n || rep.R.cols() != n || rep.R.rows() != rep.gamma() ||
        rep.t.size() != rep.gamma() || rep.F.rows() != n ||
        rep.F.cols() != rep.partition.pi_double_prime.size()) {
        check.ok = false;
        check.diagnostic = "representation has inconsistent dimensions";
        return check;
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const IntervalVector box = sys.box();

    for (int s = 0; s <= samples; ++s) {
        RealVector p(box.size());
        for (std::size_t k = 0; k < p.size(); ++k)
            p[k] = s == 0 ? box[k].mid() : box[k].lo() + unit(rng) * box[k].width();

        const auto [A, a] = sys.evaluate_at(p);
        const RealVector g = rep.g_of(p);
        RealMatrix A_rep = sys.constant_matrix() + scale_columns(rep.L, g) * rep.R;
        RealVector gt(g.size());
        for (std::size_t r = 0; r < g.size(); ++r) gt[r] = g[r] * rep.t[r];
        RealVector a_rep = sys.constant_rhs() + rep.L * gt;
        if (rep.F.cols() > 0) a_rep = a_rep + rep.F * rep.double_prime_of(p);

        const double scale = std::max({1.0, max_abs(A), norm_inf(a)});
        const double em = max_abs(A_rep - A);
        const double ev = norm_inf(a_rep - a);
        check.matrix_error = std::max(check.matrix_error, em);
        check.rhs_error = std::max(check.rhs_error, ev);
        if (em > 1e-10 * scale || ev > 1e-10 * scale) {
            check.ok = false;
            std::ostringstream msg;
            msg << "reconstruction error at sample " << s << ": matrix " << em << ", rhs " << ev;
            check.diagnostic = msg.str();
            return check;
        }
    }
    return check;
}

}  // namespace ipls
