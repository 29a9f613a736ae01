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

#include "paperrank/incremental.hpp"

#include <algorithm>
#include <cmath>
#include <ranges>

#include "paperrank/rank.hpp"
#include "paperrank/summation.hpp"

namespace paperrank {

double RankDelta::paper_total() const {
	return compensated_sum(paper_deltas | std::views::values);
}

double RankDelta::author_total() const {
	return compensated_sum(author_deltas | std::views::values);
}

RankDelta &RankDelta::operator+=(const RankDelta &other) {
	for (const auto &[id, d] : other.paper_deltas) {
		paper_deltas[id] += d;
	}
	for (const auto &[id, d] : other.author_deltas) {
		author_deltas[id] += d;
	}
	return *this;
}

bool RankState::has_citation(const PaperId &citing, const PaperId &cited) const {
	const auto it = citers_.find(citing);
	return it != citers_.end() && it->second.cited.contains(cited);
}

double RankState::paper_rank(const PaperId &id) const {
	const auto it = papers_.find(id);
	if (it == papers_.end()) {
		throw NotFoundError("paper " + id.str() + " is not in the rank state");
	}
	return it->second.rank;
}

double RankState::author_rank(const AuthorId &id) const {
	const auto it = authors_.find(id);
	if (it == authors_.end()) {
		throw NotFoundError("author " + id.str() + " is not in the rank state");
	}
	return it->second;
}

double RankState::paper_total() const {
	CompensatedSum<double> acc;
	for (const auto &[id, paper] : papers_) {
		acc += paper.rank;
	}
	return acc.value();
}

double RankState::author_total() const {
	return compensated_sum(authors_ | std::views::values);
}

void RankState::credit(const PaperId &paper, double amount, RankDelta &delta) {
	auto &entry = papers_.at(paper);
	entry.rank += amount;
	delta.paper_deltas[paper] += amount;
	const double share = amount / static_cast<double>(entry.authors.size());
	for (const auto &author : entry.authors) {
		authors_[author] += share;
		delta.author_deltas[author] += share;
	}
}

void RankState::link(Citer &citer, const PaperId &citing, const PaperId &cited, RankDelta &delta) {
	if (mode_ == RefCountMode::Bibliography) {
		if (citer.bibliography_length == 0) {
			throw ValidationError("citing paper " + citing.str() + " has an empty bibliography");
		}
		credit(cited, 1.0 / static_cast<double>(citer.bibliography_length), delta);
	} else {
		const auto f = static_cast<double>(citer.cited.size());
		if (f > 0.0) {
			// 1/(f+1) - 1/f, written so the correction stays accurate for large f.
			const double rescale = -1.0 / (f * (f + 1.0));
			for (const auto &earlier : citer.cited) {
				credit(earlier, rescale, delta);
			}
		}
		credit(cited, 1.0 / (f + 1.0), delta);
	}
	citer.cited.insert(cited);
}

RankState init_state(const CitationGraph &graph, RefCountMode mode, const BuildReport *dropped) {
	RankState state(mode);
	const Eigen::VectorXd ranks = paperrank_vector(graph, mode);
	for (CitationGraph::Index i = 0; i < graph.size(); ++i) {
		const auto &record = graph.record(i);
		state.papers_.emplace_hint(state.papers_.end(), record.id,
			RankState::Paper{ranks[static_cast<Eigen::Index>(i)], record.authors});
		RankState::Citer citer;
		citer.bibliography_length = record.bibliography_length;
		citer.cited.insert(record.references.begin(), record.references.end());
		state.citers_.emplace_hint(state.citers_.end(), record.id, std::move(citer));
	}
	for (const auto &profile : author_profiles(graph)) {
		state.authors_.emplace_hint(state.authors_.end(), profile.id, authorrank(graph, profile, mode));
	}
	if (dropped != nullptr) {
		for (const auto &[citing, cited] : dropped->dropped_references) {
			auto &citer = state.citers_.at(citing);
			if (citer.cited.size() + citer.pending.size() < citer.bibliography_length) {
				citer.pending.insert(cited);
			}
		}
	}
	return state;
}

RankDelta apply_citation(RankState &state, const CitingPaper &citing, const PaperId &cited) {
	if (!state.contains(cited)) {
		throw NotFoundError("cited paper " + cited.str() + " is not in the rank state; register it first");
	}
	const auto found = state.citers_.find(citing.id);
	if (found != state.citers_.end()) {
		const auto &known = found->second;
		if (known.bibliography_length != citing.bibliography_length) {
			throw DataInconsistencyError("citing paper " + citing.id.str() + " reported with bibliography length " +
				std::to_string(citing.bibliography_length) + ", previously " +
				std::to_string(known.bibliography_length));
		}
		if (known.cited.contains(cited)) {
			throw ValidationError("citation " + citing.id.str() + " -> " + cited.str() + " was already applied");
		}
	}
	const std::size_t known_refs = found == state.citers_.end() ? 0 : found->second.cited.size();
	if (citing.bibliography_length == 0) {
		throw ValidationError("citing paper " + citing.id.str() + " has reference count 0");
	}
	if (citing.bibliography_length < known_refs + 1) {
		throw DataInconsistencyError("citing paper " + citing.id.str() + " would have more in-database citations than its bibliography length " +
			std::to_string(citing.bibliography_length));
	}

	RankDelta delta;
	auto &citer = state.citers_[citing.id];
	citer.bibliography_length = citing.bibliography_length;
	citer.pending.erase(cited);
	state.link(citer, citing.id, cited, delta);
	++state.as_of_;
	return delta;
}

RankDelta apply_new_paper(RankState &state, const PaperRecord &record, std::vector<PaperId> *unresolved) {
	validate_record(record);
	if (state.contains(record.id)) {
		throw ValidationError("paper " + record.id.str() + " is already registered");
	}
	const auto found = state.citers_.find(record.id);
	if (found != state.citers_.end()) {
		const auto &known = found->second;
		if (known.bibliography_length != record.bibliography_length) {
			throw DataInconsistencyError("paper " + record.id.str() + " has bibliography length " +
				std::to_string(record.bibliography_length) + " but was seen citing with " +
				std::to_string(known.bibliography_length));
		}
		for (const auto &cited : known.cited) {
			if (std::find(record.references.begin(), record.references.end(), cited) == record.references.end()) {
				throw DataInconsistencyError("paper " + record.id.str() + " was seen citing " + cited.str() +
					" but its record does not reference it");
			}
		}
	}

	RankDelta delta;
	state.papers_.emplace(record.id, RankState::Paper{0.0, record.authors});
	for (const auto &author : record.authors) {
		state.authors_.try_emplace(author, 0.0);
	}

	auto &citer = state.citers_[record.id];
	citer.bibliography_length = record.bibliography_length;
	std::vector<PaperId> refs = record.references;
	std::sort(refs.begin(), refs.end());
	std::vector<PaperId> missing;
	for (const auto &ref : refs) {
		if (citer.cited.contains(ref)) {
			continue;
		}
		if (!state.contains(ref)) {
			citer.pending.insert(ref);
			missing.push_back(ref);
			continue;
		}
		state.link(citer, record.id, ref, delta);
	}

	// Earlier papers whose references to this one were held back.
	for (auto &[citing, other] : state.citers_) {
		if (other.pending.erase(record.id) > 0) {
			state.link(other, citing, record.id, delta);
		}
	}

	++state.as_of_;
	if (unresolved != nullptr) {
		*unresolved = std::move(missing);
	}
	return delta;
}

DriftReport reconcile(const RankState &state, const CitationGraph &graph) {
	const RankState batch = init_state(graph, state.mode());
	DriftReport report;

	auto compare = [](const auto &lhs, const auto &rhs, auto value, double &worst, auto &unmatched) {
		auto a = lhs.begin();
		auto b = rhs.begin();
		while (a != lhs.end() || b != rhs.end()) {
			if (b == rhs.end() || (a != lhs.end() && a->first < b->first)) {
				unmatched.push_back(a->first);
				worst = std::max(worst, std::abs(value(a->second)));
				++a;
			} else if (a == lhs.end() || b->first < a->first) {
				unmatched.push_back(b->first);
				worst = std::max(worst, std::abs(value(b->second)));
				++b;
			} else {
				worst = std::max(worst, std::abs(value(a->second) - value(b->second)));
				++a;
				++b;
			}
		}
	};
	compare(state.papers(), batch.papers(), [](const RankState::Paper &p) { return p.rank; },
		report.max_paper_drift, report.unmatched_papers);
	compare(state.author_ranks(), batch.author_ranks(), [](double r) { return r; },
		report.max_author_drift, report.unmatched_authors);
	return report;
}

} // namespace paperrank
