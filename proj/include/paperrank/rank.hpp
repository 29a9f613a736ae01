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
 * Index computations over a citation graph.
 *
 * PaperRank of a paper is the sum, over the papers citing it, of one over
 * the citing paper's reference count. AuthorRank of an author is the sum of
 * PaperRank over the author's papers, each divided by its number of
 * authors. The classical indices (citation counts, h, i_n) and the
 * PaperRank-share variants h_alpha / i_beta live here as well.
 *
 * Every sum runs in ascending id order so results are bit-reproducible.
 */

#ifndef PAPERRANK_RANK_HPP
#define PAPERRANK_RANK_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "paperrank/graph.hpp"

namespace paperrank {

/** An author together with the author's papers present in a graph. */
struct AuthorProfile {
	AuthorId id;
	std::vector<PaperId> papers;
};

/** Profile of @p author over @p graph; papers sorted. Empty if the author has no paper there. */
AuthorProfile author_profile(const CitationGraph &graph, const AuthorId &author);

/** One profile per author of the graph, sorted by author id. */
std::vector<AuthorProfile> author_profiles(const CitationGraph &graph);

/** Report defaults for the share-based indices. */
inline constexpr double default_alpha = 0.01;
inline constexpr double default_beta = 0.1;
/** Default threshold of the classical i_n comparison column. */
inline constexpr std::size_t default_i_threshold = 20;

/**
 * PaperRank of one paper. @p citer_window restricts which citing papers
 * count, by the citing paper's year.
 *
 * @throws NotFoundError for an unknown id.
 * @throws DataInconsistencyError if a citer has reference count zero.
 */
double paperrank(const CitationGraph &graph, const PaperId &id, RefCountMode mode,
	const TimeWindow &citer_window = {});

/** PaperRank of every paper, aligned with graph indices. */
Eigen::VectorXd paperrank_vector(const CitationGraph &graph, RefCountMode mode,
	const TimeWindow &citer_window = {});

std::map<PaperId, double> paperrank_all(const CitationGraph &graph, RefCountMode mode);

/**
 * AuthorRank of a profile. @p window filters the author's own papers by
 * their year; PaperRank itself counts every citer.
 *
 * @throws NotFoundError if the profile lists an unknown paper.
 * @throws ValidationError if a listed paper does not carry the author.
 */
double authorrank(const CitationGraph &graph, const AuthorProfile &profile, RefCountMode mode,
	WeightingStrategy weighting = WeightingStrategy::Uniform, const TimeWindow &window = {});

/** Author share PaperRank/#Auth of each profile paper inside @p window, in profile order. */
std::vector<double> author_shares(const CitationGraph &graph, const AuthorProfile &profile,
	RefCountMode mode, WeightingStrategy weighting = WeightingStrategy::Uniform,
	const TimeWindow &window = {});

/** Number of in-database citers of @p id inside @p citer_window. */
std::size_t citation_count(const CitationGraph &graph, const PaperId &id,
	const TimeWindow &citer_window = {});

/** Citation count of each profile paper inside @p window, in profile order. */
std::vector<std::size_t> citation_counts(const CitationGraph &graph, const AuthorProfile &profile,
	const TimeWindow &window = {});

std::size_t sum_citations(const CitationGraph &graph, const AuthorProfile &profile,
	const TimeWindow &window = {});

std::size_t h_index(const CitationGraph &graph, const AuthorProfile &profile,
	const TimeWindow &window = {});

/** Number of papers with strictly more than @p threshold citations (i10, i20, ...). */
std::size_t i_n_index(const CitationGraph &graph, const AuthorProfile &profile,
	std::size_t threshold, const TimeWindow &window = {});

/**
 * Citations per unit of PaperRank. Empty when the paper is uncited, so
 * the 0/0 case stays distinguishable from a real ratio.
 */
std::optional<double> rho(const CitationGraph &graph, const PaperId &id, RefCountMode mode);

/** Largest p such that at least p papers have author share >= alpha * p. */
std::size_t h_alpha(const CitationGraph &graph, const AuthorProfile &profile, double alpha,
	RefCountMode mode, const TimeWindow &window = {});

/** Number of papers with author share >= beta. */
std::size_t i_beta(const CitationGraph &graph, const AuthorProfile &profile, double beta,
	RefCountMode mode, const TimeWindow &window = {});

/**
 * Sum of AuthorRank over a group (research group, journal board, ...).
 * @throws ValidationError if two profiles share an author id.
 */
double aggregate_group(const CitationGraph &graph, std::span<const AuthorProfile> profiles,
	RefCountMode mode);

// Multiset kernels, shared by the graph-level functions above.

std::size_t h_index_of(std::span<const std::size_t> citations);
std::size_t i_n_of(std::span<const std::size_t> citations, std::size_t threshold);
std::size_t h_alpha_of(std::span<const double> shares, double alpha);
std::size_t i_beta_of(std::span<const double> shares, double beta);

} // namespace paperrank

#endif
