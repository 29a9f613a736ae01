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
 * In-memory citation graph: paper records plus the reverse (citer)
 * adjacency. Paper j citing paper i is the nonzero (i, j) of the binary
 * citation matrix; the citer list of i is row i of that matrix.
 */

#ifndef PAPERRANK_GRAPH_HPP
#define PAPERRANK_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "paperrank/types.hpp"

namespace paperrank {

/** One paper of a citation snapshot. */
struct PaperRecord {
	PaperId id;
	/** Ordered as on the paper; non-empty, no duplicates. */
	std::vector<AuthorId> authors;
	/** Outgoing citations to papers of the database. */
	std::vector<PaperId> references;
	/** Full reference-list length, including items outside the database. */
	std::uint32_t bibliography_length = 0;
	std::optional<int> year;
	std::optional<std::string> subject;

	friend bool operator==(const PaperRecord &, const PaperRecord &) = default;
};

/**
 * Checks the per-record invariants: non-empty unique authors, unique
 * references, and bibliography_length >= |references|.
 * @throws ValidationError naming the paper.
 */
void validate_record(const PaperRecord &record);

/** References dropped by build_graph because their target is not in the snapshot. */
struct BuildReport {
	/** (citing, missing target) pairs, sorted. */
	std::vector<std::pair<PaperId, PaperId>> dropped_references;
};

class CitationGraph {
public:
	using Index = std::size_t;

	CitationGraph() = default;

	/**
	 * Builds the graph from a record set in any order. Records are stored
	 * sorted by id, so index order is id order and every adjacency list is
	 * sorted. Dangling references are pruned from @c references (the
	 * bibliography length is kept) and listed in @p report.
	 *
	 * @throws ValidationError on duplicate ids or invalid records.
	 */
	static CitationGraph build(std::vector<PaperRecord> records, BuildReport *report = nullptr);

	std::size_t size() const noexcept { return records_.size(); }
	bool empty() const noexcept { return records_.empty(); }

	std::optional<Index> find(const PaperId &id) const;
	bool contains(const PaperId &id) const { return find(id).has_value(); }

	/** @throws NotFoundError */
	Index index_of(const PaperId &id) const;

	const PaperRecord &record(Index i) const { return records_[i]; }
	const PaperRecord &record(const PaperId &id) const { return records_[index_of(id)]; }
	std::span<const PaperRecord> records() const noexcept { return records_; }

	/** Indices of the papers citing paper @p i, ascending. */
	std::span<const Index> citers(Index i) const noexcept {
		return {citer_index_.data() + citer_offset_[i], citer_offset_[i + 1] - citer_offset_[i]};
	}

	/** Indices of the in-database papers that paper @p i cites, ascending. */
	std::span<const Index> references(Index i) const noexcept {
		return {reference_index_.data() + reference_offset_[i],
			reference_offset_[i + 1] - reference_offset_[i]};
	}

	/** Total number of in-database citations (nonzeros of the citation matrix). */
	std::size_t citation_count() const noexcept { return reference_index_.size(); }

	/** Every author appearing in the graph, sorted and unique. */
	std::vector<AuthorId> authors() const;

private:
	std::vector<PaperRecord> records_;
	std::unordered_map<PaperId, Index> lookup_;
	// CSR layouts; offsets have size() + 1 entries.
	std::vector<std::size_t> citer_offset_{0};
	std::vector<Index> citer_index_;
	std::vector<std::size_t> reference_offset_{0};
	std::vector<Index> reference_index_;
};

inline CitationGraph build_graph(std::vector<PaperRecord> records, BuildReport *report = nullptr) {
	return CitationGraph::build(std::move(records), report);
}

/** Reference count of paper @p i: bibliography length, or in-database reference count. */
std::uint32_t ref_count(const CitationGraph &graph, CitationGraph::Index i, RefCountMode mode);

/** @throws NotFoundError */
std::uint32_t ref_count(const CitationGraph &graph, const PaperId &id, RefCountMode mode);

struct ValidationReport {
	/** Papers whose reference count is zero in the selected mode. */
	std::vector<PaperId> dangling;
	/** Papers that cite themselves. */
	std::vector<PaperId> self_citing;
	/** Authors none of whose papers cites or is cited by another paper of the graph. */
	std::vector<AuthorId> orphan_authors;

	bool empty() const noexcept {
		return dangling.empty() && self_citing.empty() && orphan_authors.empty();
	}
};

ValidationReport validate(const CitationGraph &graph, RefCountMode mode = RefCountMode::InDatabase);

} // namespace paperrank

#endif
