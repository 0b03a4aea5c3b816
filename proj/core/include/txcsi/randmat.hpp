// SPDX-License-Identifier: Apache-2.0
//
// txcsi: spectral efficiency of multi-antenna links with Tx-Link CSI
// Copyright (C) 2026 The txcsi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef TXCSI_RANDMAT_HPP
#define TXCSI_RANDMAT_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>

namespace txcsi
{
    using cdouble = std::complex<double>;
    using ComplexMatrix = Eigen::MatrixXcd;
    using ComplexVector = Eigen::VectorXcd;
    using RealVector = Eigen::VectorXd;
    using Index = Eigen::Index;

    // SplitMix64 output finalizer. Bijective on 64-bit words.
    constexpr std::uint64_t mix64(std::uint64_t z) noexcept
    {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

    // Identifies one independent random stream.
    //   derived seed = mix64(root_seed XOR golden_gamma * stream_index)
    // golden_gamma is odd, so the XOR operand is injective in stream_index and mix64 is a
    // bijection: distinct stream indices under one root never share a derived seed.
    struct SeedSpec
    {
        std::uint64_t root_seed = 0;
        std::uint64_t stream_index = 0;

        constexpr std::uint64_t derived() const noexcept
        {
            return mix64(root_seed ^ (golden_gamma * stream_index));
        }

        // Sub-stream rooted at this stream's derived seed.
        constexpr SeedSpec child(std::uint64_t index) const noexcept { return {derived(), index}; }

        friend constexpr bool operator==(const SeedSpec &, const SeedSpec &) = default;
    };

    // Counter-based generator: the k-th output is mix64(seed + k * golden_gamma), i.e. the
    // SplitMix64 sequence started at the derived seed.
    class Rng
    {
    public:
        explicit Rng(SeedSpec seed) noexcept : state_(seed.derived()) {}

        std::uint64_t next_u64() noexcept
        {
            state_ += golden_gamma;
            return mix64(state_);
        }

        // Uniform on [0, 1) with 53 random bits.
        double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

        // Uniform on (0, 1].
        double uniform_pos() noexcept { return 1.0 - uniform(); }

        // Circularly symmetric complex Gaussian CN(0, 1) via Box-Muller:
        // |g|^2 = -ln(U1) is Exp(1), so Var(Re) = Var(Im) = 1/2 and E|g|^2 = 1.
        cdouble complex_normal() noexcept;

    private:
        std::uint64_t state_;
    };

    struct SvdResult
    {
        ComplexMatrix left_vectors;       // U, rows x rows
        RealVector squared_singular_values; // lambda_1 >= lambda_2 >= ... >= 0, min(rows, cols) entries
        ComplexMatrix right_vectors;      // V, cols x cols
    };

    // IID CN(0,1) entries, filled in row-major order from one stream.
    ComplexMatrix sample_cn_matrix(Index rows, Index cols, SeedSpec seed);
    ComplexMatrix sample_cn_matrix(Index rows, Index cols, Rng &rng);

    // Full SVD m = U diag(sqrt(lambda)) V^H. Throws invalid_argument on non-finite input.
    SvdResult svd(const ComplexMatrix &m);

    // g / ||g|| with g IID CN(0,1): uniformly distributed on the complex unit sphere.
    ComplexVector isotropic_unit_vector(Index dim, SeedSpec seed);
    ComplexVector isotropic_unit_vector(Index dim, Rng &rng);

    // Haar-distributed unitary matrix (QR of a CN(0,1) matrix with the phases of R's
    // diagonal moved into Q).
    ComplexMatrix haar_unitary(Index dim, Rng &rng);

    // Cholesky factorisation of a Hermitian positive-definite matrix, reused for many
    // solves against the same noise-plus-interference covariance.
    class HermitianSolver
    {
    public:
        explicit HermitianSolver(const ComplexMatrix &a);

        Index dim() const noexcept { return llt_.rows(); }

        // u^H A^{-1} u
        double quadratic_form(const ComplexVector &u) const;

        // A^{-1} b
        ComplexMatrix solve(const ComplexMatrix &b) const;

        // log2 |A|
        double log2_det() const;

        const Eigen::LLT<ComplexMatrix> &factor() const noexcept { return llt_; }

    private:
        Eigen::LLT<ComplexMatrix> llt_;
    };

    // u^H A^{-1} u via a Cholesky solve. A must be Hermitian positive definite.
    double quadratic_form_inverse(const ComplexVector &u, const ComplexMatrix &a);

    // Squared singular values of G / sqrt(n_rows) for an n_rows x k_cols CN(0,1) matrix G,
    // i.e. the non-trivial eigenvalues of the Wishart matrix (1/N) G G^H. Sorted descending.
    RealVector wishart_squared_singular_values(Index n_rows, Index k_cols, SeedSpec seed);
}

#endif
