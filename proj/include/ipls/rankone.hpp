#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ipls/linalg.hpp"
#include "ipls/system.hpp"

namespace ipls {

/// A ~= L * R with L (rows x rank) and R (rank x cols).
struct RankFactors {
    RealMatrix L;
    RealMatrix R;
    std::size_t rank = 0;
};

/// Rank-revealing factorization by Gaussian elimination with complete
/// pivoting. Elimination stops once the next pivot drops below
/// tol * |first pivot|. Each column of L is normalised so that its
/// largest-magnitude entry has modulus one and its first nonzero entry is
/// positive; R absorbs the scale. Throws InvalidArgument for a zero matrix.
RankFactors rank_factorize(const RealMatrix& a, double tol = 1e-10);

/// Equivalent rank-one form of a parametric system:
///
///   (A_0 + L D_{g(p')} R) x = a_0 + L D_{g(p')} t + F p''
///
/// where g replicates every matrix parameter gamma_k times.
struct RankOneRepresentation {
    RealMatrix L;  ///< n x gamma
    RealMatrix R;  ///< gamma x n
    RealMatrix F;  ///< n x |pi''|, columns a_k for k in pi''
    RealVector t;  ///< gamma
    ParameterPartition partition;
    std::vector<std::size_t> gamma_k;      ///< per pi' entry, including augmentation
    std::vector<std::size_t> block_index;  ///< g-row -> position in pi'
    std::vector<bool> augmented;           ///< per pi' entry
    bool transposed = false;

    std::size_t gamma() const noexcept { return block_index.size(); }

    /// Replicates values indexed by position in pi' into a g-vector.
    RealVector expand(std::span<const double> per_parameter) const;
    IntervalVector expand(const IntervalVector& per_parameter) const;
    /// Inverse of expand; throws InvalidArgument if a block is not constant.
    RealVector collapse(std::span<const double> g) const;

    /// g(p_{pi'}) and p_{pi''} gathered from a full parameter vector.
    RealVector g_of(std::span<const double> p) const;
    IntervalVector g_of(const IntervalVector& p) const;
    RealVector double_prime_of(std::span<const double> p) const;
    IntervalVector double_prime_of(const IntervalVector& p) const;

    /// Parameter index (0-based, system order) of each q column:
    /// pi'' first, then the gamma g-rows.
    std::vector<std::size_t> q_parameters() const;
};

RankOneRepresentation build_representation(const ParametricLinearSystem& sys,
                                           const ParameterPartition& part,
                                           double tol = 1e-10);
RankOneRepresentation build_representation(const ParametricLinearSystem& sys, double tol = 1e-10);

struct RepresentationCheck {
    bool ok = true;
    double matrix_error = 0.0;
    double rhs_error = 0.0;
    std::string diagnostic;
};

/// Reconstructs A(p) and a(p) at `samples` random points of the box and the
/// box midpoint and compares against the system.
RepresentationCheck verify_representation(const ParametricLinearSystem& sys,
                                          const RankOneRepresentation& rep, int samples,
                                          unsigned long long seed = 1);

}  // namespace ipls
