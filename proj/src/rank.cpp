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

#include "paperrank/rank.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "paperrank/summation.hpp"

namespace paperrank {

namespace {

	using Index = CitationGraph::Index;

	double paperrank_at(const CitationGraph &graph, Index i, RefCountMode mode,
		const TimeWindow &citer_window) {
		double total = 0.0;
		for (const Index c : graph.citers(i)) {
			if (!citer_window.contains(graph.record(c).year)) {
				continue;
			}
			const auto f = ref_count(graph, c, mode);
			if (f == 0) {
				throw DataInconsistencyError("paper " + graph.record(c).id.str() + " cites " +
					graph.record(i).id.str() + " but has reference count 0");
			}
			total += 1.0 / static_cast<double>(f);
		}
		return total;
	}

	/** Indices of the profile papers inside the window; checks authorship. */
	std::vector<Index> resolve_profile(const CitationGraph &graph, const AuthorProfile &profile,
		const TimeWindow &window) {
		std::vector<Index> out;
		out.reserve(profile.papers.size());
		for (const auto &paper : profile.papers) {
			const Index i = graph.index_of(paper);
			const auto &authors = graph.record(i).authors;
			if (std::find(authors.begin(), authors.end(), profile.id) == authors.end()) {
				throw ValidationError("paper " + paper.str() + " is not authored by " + profile.id.str());
			}
			if (window.contains(graph.record(i).year)) {
				out.push_back(i);
			}
		}
		return out;
	}

	double share_of(const CitationGraph &graph, Index i, double rank, const AuthorId &,
		WeightingStrategy weighting) {
		switch (weighting) {
		case WeightingStrategy::Uniform:
			return rank / static_cast<double>(graph.record(i).authors.size());
		}
		return 0.0;
	}

} // namespace

AuthorProfile author_profile(const CitationGraph &graph, const AuthorId &author) {
	AuthorProfile profile{author, {}};
	for (const auto &record : graph.records()) {
		if (std::find(record.authors.begin(), record.authors.end(), author) != record.authors.end()) {
			profile.papers.push_back(record.id);
		}
	}
	return profile;
}

std::vector<AuthorProfile> author_profiles(const CitationGraph &graph) {
	std::map<AuthorId, std::vector<PaperId>> by_author;
	for (const auto &record : graph.records()) {
		for (const auto &author : record.authors) {
			by_author[author].push_back(record.id);
		}
	}
	std::vector<AuthorProfile> out;
	out.reserve(by_author.size());
	for (auto &[author, papers] : by_author) {
		out.push_back({author, std::move(papers)});
	}
	return out;
}

double paperrank(const CitationGraph &graph, const PaperId &id, RefCountMode mode,
	const TimeWindow &citer_window) {
	return paperrank_at(graph, graph.index_of(id), mode, citer_window);
}

Eigen::VectorXd paperrank_vector(const CitationGraph &graph, RefCountMode mode,
	const TimeWindow &citer_window) {
	Eigen::VectorXd ranks(static_cast<Eigen::Index>(graph.size()));
	for (Index i = 0; i < graph.size(); ++i) {
		ranks[static_cast<Eigen::Index>(i)] = paperrank_at(graph, i, mode, citer_window);
	}
	return ranks;
}

std::map<PaperId, double> paperrank_all(const CitationGraph &graph, RefCountMode mode) {
	const Eigen::VectorXd ranks = paperrank_vector(graph, mode);
	std::map<PaperId, double> out;
	for (Index i = 0; i < graph.size(); ++i) {
		out.emplace_hint(out.end(), graph.record(i).id, ranks[static_cast<Eigen::Index>(i)]);
	}
	return out;
}

namespace {

	/** (index, share) for each profile paper inside the window. */
	std::vector<std::pair<Index, double>> indexed_shares(const CitationGraph &graph,
		const AuthorProfile &profile, RefCountMode mode, WeightingStrategy weighting,
		const TimeWindow &window) {
		std::vector<std::pair<Index, double>> out;
		for (const Index i : resolve_profile(graph, profile, window)) {
			const double rank = paperrank_at(graph, i, mode, TimeWindow::unbounded());
			out.emplace_back(i, share_of(graph, i, rank, profile.id, weighting));
		}
		return out;
	}

} // namespace

std::vector<double> author_shares(const CitationGraph &graph, const AuthorProfile &profile,
	RefCountMode mode, WeightingStrategy weighting, const TimeWindow &window) {
	std::vector<double> shares;
	for (const auto &[i, share] : indexed_shares(graph, profile, mode, weighting, window)) {
		shares.push_back(share);
	}
	return shares;
}

double authorrank(const CitationGraph &graph, const AuthorProfile &profile, RefCountMode mode,
	WeightingStrategy weighting, const TimeWindow &window) {
	auto shares = indexed_shares(graph, profile, mode, weighting, window);
	// Profiles may list papers in any order; sum in id order.
	std::sort(shares.begin(), shares.end());
	double total = 0.0;
	for (const auto &[i, share] : shares) {
		total += share;
	}
	return total;
}

std::size_t citation_count(const CitationGraph &graph, const PaperId &id,
	const TimeWindow &citer_window) {
	const auto citers = graph.citers(graph.index_of(id));
	return static_cast<std::size_t>(std::count_if(citers.begin(), citers.end(),
		[&](Index c) { return citer_window.contains(graph.record(c).year); }));
}

std::vector<std::size_t> citation_counts(const CitationGraph &graph, const AuthorProfile &profile,
	const TimeWindow &window) {
	std::vector<std::size_t> counts;
	for (const Index i : resolve_profile(graph, profile, window)) {
		counts.push_back(graph.citers(i).size());
	}
	return counts;
}

std::size_t sum_citations(const CitationGraph &graph, const AuthorProfile &profile,
	const TimeWindow &window) {
	std::size_t total = 0;
	for (const std::size_t c : citation_counts(graph, profile, window)) {
		total += c;
	}
	return total;
}

std::size_t h_index(const CitationGraph &graph, const AuthorProfile &profile,
	const TimeWindow &window) {
	return h_index_of(citation_counts(graph, profile, window));
}

std::size_t i_n_index(const CitationGraph &graph, const AuthorProfile &profile,
	std::size_t threshold, const TimeWindow &window) {
	return i_n_of(citation_counts(graph, profile, window), threshold);
}

std::optional<double> rho(const CitationGraph &graph, const PaperId &id, RefCountMode mode) {
	const double rank = paperrank(graph, id, mode);
	if (rank == 0.0) {
		return std::nullopt;
	}
	return static_cast<double>(citation_count(graph, id)) / rank;
}

std::size_t h_alpha(const CitationGraph &graph, const AuthorProfile &profile, double alpha,
	RefCountMode mode, const TimeWindow &window) {
	return h_alpha_of(author_shares(graph, profile, mode, WeightingStrategy::Uniform, window), alpha);
}

std::size_t i_beta(const CitationGraph &graph, const AuthorProfile &profile, double beta,
	RefCountMode mode, const TimeWindow &window) {
	return i_beta_of(author_shares(graph, profile, mode, WeightingStrategy::Uniform, window), beta);
}

double aggregate_group(const CitationGraph &graph, std::span<const AuthorProfile> profiles,
	RefCountMode mode) {
	std::set<AuthorId> seen;
	for (const auto &profile : profiles) {
		if (!seen.insert(profile.id).second) {
			throw ValidationError("author " + profile.id.str() + " appears twice in the group");
		}
	}
	CompensatedSum<double> total;
	for (const auto &profile : profiles) {
		total += authorrank(graph, profile, mode);
	}
	return total.value();
}

std::size_t h_index_of(std::span<const std::size_t> citations) {
	std::vector<std::size_t> sorted(citations.begin(), citations.end());
	std::sort(sorted.begin(), sorted.end(), std::greater<>{});
	std::size_t h = 0;
	while (h < sorted.size() && sorted[h] >= h + 1) {
		++h;
	}
	return h;
}

std::size_t i_n_of(std::span<const std::size_t> citations, std::size_t threshold) {
	return static_cast<std::size_t>(std::count_if(citations.begin(), citations.end(),
		[threshold](std::size_t c) { return c > threshold; }));
}

std::size_t h_alpha_of(std::span<const double> shares, double alpha) {
	if (!(alpha > 0.0)) {
		throw ValidationError("alpha must be positive");
	}
	std::vector<double> sorted(shares.begin(), shares.end());
	std::sort(sorted.begin(), sorted.end(), std::greater<>{});
	// The qualifying count is looked up per p; every p in 1..m is tried.
	std::size_t best = 0;
	for (std::size_t p = 1; p <= sorted.size(); ++p) {
		const double bar = alpha * static_cast<double>(p);
		const auto qualifying = static_cast<std::size_t>(
			std::upper_bound(sorted.begin(), sorted.end(), bar, [](double b, double s) { return s < b; }) -
			sorted.begin());
		if (qualifying >= p) {
			best = p;
		}
	}
	return best;
}

std::size_t i_beta_of(std::span<const double> shares, double beta) {
	if (!(beta > 0.0)) {
		throw ValidationError("beta must be positive");
	}
	return static_cast<std::size_t>(
		std::count_if(shares.begin(), shares.end(), [beta](double s) { return s >= beta; }));
}

} // namespace paperrank
