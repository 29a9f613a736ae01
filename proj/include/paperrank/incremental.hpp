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
 * Persistent rank store with O(delta) updates.
 *
 * PaperRank is a sum of per-citation terms, so a new citation from a paper
 * with r references adds 1/r to the cited paper and 1/(r * #Auth) to each
 * of its authors; a new paper adds 1/r to every paper it cites. The state
 * keeps, for every citing paper it has seen, which citations were already
 * applied, so updates can be replayed idempotently and checked against a
 * batch recomputation.
 *
 * In in-database mode the reference count of a citer is the number of its
 * applied citations. A further citation from a known citer therefore
 * rescales that citer's earlier contributions from 1/f to 1/(f+1); in
 * bibliography mode the count is fixed and every update is purely
 * additive.
 */

#ifndef PAPERRANK_INCREMENTAL_HPP
#define PAPERRANK_INCREMENTAL_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <vector>

#include "paperrank/graph.hpp"

namespace paperrank {

/** The citing side of a new citation. */
struct CitingPaper {
	PaperId id;
	std::uint32_t bibliography_length = 0;

	static CitingPaper of(const PaperRecord &record) {
		return {record.id, record.bibliography_length};
	}
};

/** Score changes produced by one or more updates. */
struct RankDelta {
	std::map<PaperId, double> paper_deltas;
	std::map<AuthorId, double> author_deltas;

	bool empty() const noexcept { return paper_deltas.empty() && author_deltas.empty(); }
	double paper_total() const;
	double author_total() const;

	RankDelta &operator+=(const RankDelta &other);
};

class RankState {
public:
	struct Paper {
		double rank = 0.0;
		std::vector<AuthorId> authors;

		friend bool operator==(const Paper &, const Paper &) = default;
	};

	/** Provenance of a citing paper: the citations already applied. */
	struct Citer {
		std::uint32_t bibliography_length = 0;
		/** Registered papers this citer is known to cite, sorted. */
		std::set<PaperId> cited;
		/** References to papers not registered yet; applied on their registration. */
		std::set<PaperId> pending;

		friend bool operator==(const Citer &, const Citer &) = default;
	};

	explicit RankState(RefCountMode mode = RefCountMode::Bibliography) : mode_(mode) {}

	RefCountMode mode() const noexcept { return mode_; }

	/** Advances by one for every update that changed the state. */
	std::uint64_t as_of() const noexcept { return as_of_; }

	const std::map<PaperId, Paper> &papers() const noexcept { return papers_; }
	const std::map<AuthorId, double> &author_ranks() const noexcept { return authors_; }
	const std::map<PaperId, Citer> &citers() const noexcept { return citers_; }

	bool contains(const PaperId &id) const { return papers_.contains(id); }
	bool has_citation(const PaperId &citing, const PaperId &cited) const;

	/** @throws NotFoundError */
	double paper_rank(const PaperId &id) const;
	/** @throws NotFoundError */
	double author_rank(const AuthorId &id) const;

	/** Compensated global sums; equal up to rounding. */
	double paper_total() const;
	double author_total() const;

	friend bool operator==(const RankState &, const RankState &) = default;

	friend RankState init_state(const CitationGraph &graph, RefCountMode mode, const BuildReport *dropped);
	friend RankDelta apply_citation(RankState &state, const CitingPaper &citing, const PaperId &cited);
	friend RankDelta apply_new_paper(RankState &state, const PaperRecord &record,
		std::vector<PaperId> *unresolved);
	friend RankState load_state(std::istream &in);

private:
	void credit(const PaperId &paper, double amount, RankDelta &delta);
	void link(Citer &citer, const PaperId &citing, const PaperId &cited, RankDelta &delta);
	void check_integrity() const;

	RefCountMode mode_;
	std::uint64_t as_of_ = 0;
	std::map<PaperId, Paper> papers_;
	std::map<AuthorId, double> authors_;
	std::map<PaperId, Citer> citers_;
};

/**
 * Batch bootstrap: PaperRank and AuthorRank of every paper and author of
 * @p graph. References the build dropped, passed as @p dropped, are kept
 * pending and counted once their target paper is registered.
 */
RankState init_state(const CitationGraph &graph, RefCountMode mode, const BuildReport *dropped = nullptr);

/**
 * Records that @p citing cites @p cited.
 *
 * @throws NotFoundError if @p cited is not registered.
 * @throws ValidationError if the citation was already applied, or the
 *         citer would have reference count zero.
 * @throws DataInconsistencyError if the bibliography length disagrees with
 *         an earlier sighting of the same citer, or is smaller than its
 *         number of known citations.
 */
RankDelta apply_citation(RankState &state, const CitingPaper &citing, const PaperId &cited);

/**
 * Registers a paper with rank 0 and applies its references. References to
 * papers not yet registered are held back and listed in @p unresolved;
 * they are applied when the target is registered.
 *
 * @throws ValidationError if the paper is already registered or invalid.
 */
RankDelta apply_new_paper(RankState &state, const PaperRecord &record,
	std::vector<PaperId> *unresolved = nullptr);

/** Componentwise comparison of a state with a batch recomputation. */
struct DriftReport {
	double max_paper_drift = 0.0;
	double max_author_drift = 0.0;
	/** Papers or authors present on only one side. */
	std::vector<PaperId> unmatched_papers;
	std::vector<AuthorId> unmatched_authors;

	double max_drift() const noexcept { return std::max(max_paper_drift, max_author_drift); }
	bool within(double tolerance) const noexcept {
		return unmatched_papers.empty() && unmatched_authors.empty() && max_drift() <= tolerance;
	}
};

DriftReport reconcile(const RankState &state, const CitationGraph &graph);

/** Relative tolerance of the paper-total versus author-total check. */
inline constexpr double conservation_tolerance = 1e-9;

/**
 * Text serialization; scores are written as hexadecimal floats, so a
 * round trip is exact. See docs/state-format.md.
 */
void save_state(const RankState &state, std::ostream &out);

/**
 * @throws ParseError on malformed or truncated input.
 * @throws IntegrityError if the footer sums or the conservation check fail.
 */
RankState load_state(std::istream &in);

/** Writes to a sibling temporary file and renames it over @p path. */
void save_state_file(const RankState &state, const std::filesystem::path &path);
RankState load_state_file(const std::filesystem::path &path);

/**
 * Single-writer holder of a RankState. Readers take immutable snapshots;
 * a writer works on a copy that is published only once the update has
 * fully succeeded.
 */
class RankStore {
public:
	explicit RankStore(RankState initial)
		: current_(std::make_shared<const RankState>(std::move(initial))) {}

	std::shared_ptr<const RankState> snapshot() const {
		std::lock_guard lock(mutex_);
		return current_;
	}

	template <typename Update>
	auto update(Update &&fn) {
		std::lock_guard writer(writer_);
		auto draft = std::make_shared<RankState>(*snapshot());
		auto result = std::invoke(std::forward<Update>(fn), *draft);
		std::lock_guard lock(mutex_);
		current_ = std::move(draft);
		return result;
	}

private:
	mutable std::mutex mutex_;
	std::mutex writer_;
	std::shared_ptr<const RankState> current_;
};

} // namespace paperrank

#endif
