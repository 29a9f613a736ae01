/*
 *   Copyright 2026 The PaperRank Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file
 *
 * Reference eigen-model for validation.
 *
 * The full model ranks papers by the eigenvector of the unit eigenvalue of
 * S = L F^{-1}, where L is the binary citation matrix (entry (i, j) set when
 * paper j cites paper i) and F the diagonal of in-database reference
 * counts. Because e^T S = e^T, S is column-stochastic. PaperRank is the
 * first power step S e; this header builds S with Eigen, runs the power
 * method, and checks that identity against the direct citer sums.
 */

#ifndef PAPERRANK_ORACLE_HPP
#define PAPERRANK_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "paperrank/graph.hpp"
#include "paperrank/rank.hpp"
#include "paperrank/summation.hpp"

namespace paperrank {

/**
 * Sparse column-major S. Column j holds 1/f_j at every row i cited by
 * paper j; columns with f_j = 0 are empty and listed as dangling.
 */
template <typename Scalar = double>
class StochasticMatrix {
public:
	using Sparse = Eigen::SparseMatrix<Scalar, Eigen::ColMajor>;
	using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

	StochasticMatrix() = default;

	StochasticMatrix(Sparse matrix, std::vector<Eigen::Index> dangling)
		: matrix_(std::move(matrix)), dangling_(std::move(dangling)) {}

	Eigen::Index dimension() const noexcept { return matrix_.cols(); }
	const Sparse &matrix() const noexcept { return matrix_; }

	/** Dangling column indices, ascending. */
	const std::vector<Eigen::Index> &dangling() const noexcept { return dangling_; }
	bool has_dangling() const noexcept { return !dangling_.empty(); }

	bool is_dangling(Eigen::Index j) const {
		return std::binary_search(dangling_.begin(), dangling_.end(), j);
	}

	/** Compensated column sums; 1 for every non-dangling column, 0 otherwise. */
	Vector column_sums() const {
		Vector sums = Vector::Zero(dimension());
		for (Eigen::Index j = 0; j < matrix_.outerSize(); ++j) {
			CompensatedSum<Scalar> acc;
			for (typename Sparse::InnerIterator it(matrix_, j); it; ++it) {
				acc += it.value();
			}
			sums[j] = acc.value();
		}
		return sums;
	}

	/** Largest |column sum - 1| over the non-dangling columns. */
	Scalar max_column_sum_deviation() const {
		const Vector sums = column_sums();
		Scalar worst{0};
		for (Eigen::Index j = 0; j < sums.size(); ++j) {
			if (!is_dangling(j)) {
				worst = std::max(worst, std::abs(sums[j] - Scalar{1}));
			}
		}
		return worst;
	}

private:
	Sparse matrix_;
	std::vector<Eigen::Index> dangling_;
};

/** Iterate of the power method. */
template <typename Scalar = double>
struct RankVector {
	using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

	Vector values;
	std::size_t iteration_count = 0;
	/** Max-norm of the difference between this iterate and the previous one. */
	Scalar residual{0};
	bool converged = false;
	/** False when S has dangling columns; the iteration then may not settle. */
	bool convergence_guaranteed = true;

	/** The all-ones start vector e. */
	static RankVector ones(Eigen::Index n) {
		RankVector v;
		v.values = Vector::Ones(n);
		return v;
	}
};

/**
 * Builds S from the in-database reference lists of @p graph. Weights are
 * taken from the outgoing lists only, independently of the citer
 * adjacency that PaperRank sums over.
 */
template <typename Scalar = double>
StochasticMatrix<Scalar> build_matrix(const CitationGraph &graph) {
	using Matrix = StochasticMatrix<Scalar>;
	const auto n = static_cast<Eigen::Index>(graph.size());
	std::vector<Eigen::Triplet<Scalar>> entries;
	entries.reserve(graph.citation_count());
	std::vector<Eigen::Index> dangling;
	for (Eigen::Index j = 0; j < n; ++j) {
		const auto refs = graph.references(static_cast<CitationGraph::Index>(j));
		if (refs.empty()) {
			dangling.push_back(j);
			continue;
		}
		const Scalar weight = Scalar{1} / static_cast<Scalar>(refs.size());
		for (const auto i : refs) {
			entries.emplace_back(static_cast<Eigen::Index>(i), j, weight);
		}
	}
	typename Matrix::Sparse s(n, n);
	s.setFromTriplets(entries.begin(), entries.end());
	s.makeCompressed();
	return Matrix(std::move(s), std::move(dangling));
}

/**
 * One application v <- S v. Dangling columns contribute nothing.
 * @throws ValidationError on a length mismatch.
 */
template <typename Scalar>
RankVector<Scalar> power_step(const StochasticMatrix<Scalar> &s, const RankVector<Scalar> &v) {
	if (v.values.size() != s.dimension()) {
		throw ValidationError("rank vector of length " + std::to_string(v.values.size()) +
			" does not match matrix dimension " + std::to_string(s.dimension()));
	}
	RankVector<Scalar> next;
	next.values = s.matrix() * v.values;
	next.iteration_count = v.iteration_count + 1;
	next.residual = s.dimension() == 0 ? Scalar{0} : (next.values - v.values).cwiseAbs().maxCoeff();
	next.convergence_guaranteed = !s.has_dangling();
	return next;
}

/**
 * Power iteration from e until the max-norm change drops below
 * @p tolerance or @p max_iterations steps were taken. No renormalization:
 * a column-stochastic S preserves the 1-norm of a non-negative vector.
 * On non-convergence the last iterate comes back with converged = false.
 */
template <typename Scalar>
RankVector<Scalar> power_method(const StochasticMatrix<Scalar> &s, Scalar tolerance,
	std::size_t max_iterations) {
	if (!(tolerance > Scalar{0}) || max_iterations == 0) {
		throw ValidationError("power method needs a positive tolerance and iteration cap");
	}
	RankVector<Scalar> v = RankVector<Scalar>::ones(s.dimension());
	v.convergence_guaranteed = !s.has_dangling();
	while (v.iteration_count < max_iterations) {
		v = power_step(s, v);
		if (v.residual < tolerance) {
			v.converged = true;
			break;
		}
	}
	return v;
}

/** Max-norm of S v - v; the fixed-point certificate of the unit eigenvalue. */
template <typename Scalar>
Scalar fixed_point_residual(const StochasticMatrix<Scalar> &s,
	const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> &v) {
	if (v.size() == 0) {
		return Scalar{0};
	}
	return (s.matrix() * v - v).cwiseAbs().maxCoeff();
}

struct FirstStepReport {
	bool passed = true;
	double max_deviation = 0.0;
};

inline constexpr double first_step_tolerance = 1e-12;

/**
 * Compares in-database PaperRank against S e componentwise.
 */
inline FirstStepReport verify_first_step(const CitationGraph &graph,
	double tolerance = first_step_tolerance) {
	const auto s = build_matrix<double>(graph);
	const auto step = power_step(s, RankVector<double>::ones(s.dimension()));
	const Eigen::VectorXd direct = paperrank_vector(graph, RefCountMode::InDatabase);
	FirstStepReport report;
	if (direct.size() > 0) {
		report.max_deviation = (direct - step.values).cwiseAbs().maxCoeff();
	}
	report.passed = report.max_deviation <= tolerance;
	return report;
}

} // namespace paperrank

#endif
