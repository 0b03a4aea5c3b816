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

#include "txcsi/randmat.hpp"
#include "txcsi/errors.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <string>

namespace txcsi
{
    cdouble Rng::complex_normal() noexcept
    {
        const double radius = std::sqrt(-std::log(uniform_pos()));
        const double angle = 2.0 * std::numbers::pi * uniform();
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

    namespace
    {
        void check_dims(Index rows, Index cols, const char *what)
        {
            if (rows < 1 || cols < 1)
                throw invalid_argument(std::string(what) + ": dimensions must be at least 1x1, got " +
                                       std::to_string(rows) + "x" + std::to_string(cols));
        }

        bool all_finite(const ComplexMatrix &m)
        {
            return m.real().allFinite() && m.imag().allFinite();
        }
    }

    ComplexMatrix sample_cn_matrix(Index rows, Index cols, Rng &rng)
    {
        check_dims(rows, cols, "sample_cn_matrix");
        ComplexMatrix m(rows, cols);
        for (Index r = 0; r < rows; ++r)
            for (Index c = 0; c < cols; ++c)
                m(r, c) = rng.complex_normal();
        return m;
    }

    ComplexMatrix sample_cn_matrix(Index rows, Index cols, SeedSpec seed)
    {
        Rng rng(seed);
        return sample_cn_matrix(rows, cols, rng);
    }

    SvdResult svd(const ComplexMatrix &m)
    {
        if (m.size() == 0)
            throw invalid_argument("svd: empty matrix");
        if (!all_finite(m))
            throw invalid_argument("svd: matrix has non-finite entries");

        Eigen::JacobiSVD<ComplexMatrix> dec(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
        SvdResult out;
        out.left_vectors = dec.matrixU();
        out.right_vectors = dec.matrixV();
        out.squared_singular_values = dec.singularValues().array().square();
        return out;
    }

    ComplexVector isotropic_unit_vector(Index dim, Rng &rng)
    {
        if (dim < 1)
            throw invalid_argument("isotropic_unit_vector: dim must be >= 1");
        ComplexVector g(dim);
        for (Index i = 0; i < dim; ++i)
            g(i) = rng.complex_normal();
        return g / g.norm();
    }

    ComplexVector isotropic_unit_vector(Index dim, SeedSpec seed)
    {
        Rng rng(seed);
        return isotropic_unit_vector(dim, rng);
    }

    ComplexMatrix haar_unitary(Index dim, Rng &rng)
    {
        const ComplexMatrix z = sample_cn_matrix(dim, dim, rng);
        Eigen::HouseholderQR<ComplexMatrix> qr(z);
        ComplexMatrix q = qr.householderQ();
        const ComplexMatrix &r = qr.matrixQR();
        for (Index k = 0; k < dim; ++k)
        {
            const double mag = std::abs(r(k, k));
            if (mag > 0.0)
                q.col(k) *= r(k, k) / mag;
        }
        return q;
    }

    HermitianSolver::HermitianSolver(const ComplexMatrix &a)
    {
        if (a.rows() != a.cols())
            throw invalid_argument("HermitianSolver: matrix must be square");
        if (!all_finite(a))
            throw numerical_error("HermitianSolver: matrix has non-finite entries");
        llt_.compute(a);
        if (llt_.info() != Eigen::Success)
            throw numerical_error("HermitianSolver: Cholesky factorisation failed (matrix not positive definite)");
    }

    double HermitianSolver::quadratic_form(const ComplexVector &u) const
    {
        if (u.size() != llt_.rows())
            throw invalid_argument("quadratic_form: vector length " + std::to_string(u.size()) +
                                   " does not match matrix dimension " + std::to_string(llt_.rows()));
        // u^H A^{-1} u = || L^{-1} u ||^2 with A = L L^H.
        const ComplexVector w = llt_.matrixL().solve(u);
        const double value = w.squaredNorm();
        if (!std::isfinite(value))
            throw numerical_error("quadratic_form: non-finite result");
        return value;
    }

    ComplexMatrix HermitianSolver::solve(const ComplexMatrix &b) const
    {
        if (b.rows() != llt_.rows())
            throw invalid_argument("HermitianSolver::solve: dimension mismatch");
        return llt_.solve(b);
    }

    double HermitianSolver::log2_det() const
    {
        double acc = 0.0;
        const auto &lower = llt_.matrixLLT();
        for (Index k = 0; k < lower.rows(); ++k)
            acc += std::log2(lower(k, k).real());
        return 2.0 * acc;
    }

    double quadratic_form_inverse(const ComplexVector &u, const ComplexMatrix &a)
    {
        if (a.rows() != a.cols() || u.size() != a.rows())
            throw invalid_argument("quadratic_form_inverse: dimension mismatch");
        return HermitianSolver(a).quadratic_form(u);
    }

    RealVector wishart_squared_singular_values(Index n_rows, Index k_cols, SeedSpec seed)
    {
        check_dims(n_rows, k_cols, "wishart_squared_singular_values");
        if (n_rows < k_cols)
            throw invalid_argument("wishart_squared_singular_values: need n_rows >= k_cols (K <= N)");
        const ComplexMatrix g = sample_cn_matrix(n_rows, k_cols, seed) / std::sqrt(static_cast<double>(n_rows));
        Eigen::BDCSVD<ComplexMatrix> dec(g);
        return dec.singularValues().array().square();
    }
}
