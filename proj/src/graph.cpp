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

#include "paperrank/graph.hpp"

#include <algorithm>
#include <set>

namespace paperrank {

void validate_record(const PaperRecord &record) {
	const std::string &id = record.id.str();
	if (id.empty()) {
		throw ValidationError("paper record without id");
	}
	if (record.authors.empty()) {
		throw ValidationError("paper " + id + " has no authors");
	}
	std::set<AuthorId> seen_authors;
	for (const auto &author : record.authors) {
		if (!seen_authors.insert(author).second) {
			throw ValidationError("paper " + id + " lists author " + author.str() + " twice");
		}
	}
	std::set<PaperId> seen_refs;
	for (const auto &ref : record.references) {
		if (!seen_refs.insert(ref).second) {
			throw ValidationError("paper " + id + " references " + ref.str() + " twice");
		}
	}
	if (record.bibliography_length < record.references.size()) {
		throw ValidationError("paper " + id + " has bibliography_length " +
			std::to_string(record.bibliography_length) + " below its " +
			std::to_string(record.references.size()) + " in-database references");
	}
}

CitationGraph CitationGraph::build(std::vector<PaperRecord> records, BuildReport *report) {
	std::sort(records.begin(), records.end(),
		[](const PaperRecord &a, const PaperRecord &b) { return a.id < b.id; });
	for (std::size_t i = 1; i < records.size(); ++i) {
		if (records[i].id == records[i - 1].id) {
			throw ValidationError("duplicate paper id " + records[i].id.str());
		}
	}

	CitationGraph graph;
	graph.lookup_.reserve(records.size());
	for (std::size_t i = 0; i < records.size(); ++i) {
		graph.lookup_.emplace(records[i].id, i);
	}

	BuildReport local;
	std::vector<std::size_t> in_degree(records.size(), 0);
	graph.reference_offset_.reserve(records.size() + 1);
	for (auto &record : records) {
		std::vector<PaperId> kept;
		std::vector<Index> targets;
		kept.reserve(record.references.size());
		for (auto &ref : record.references) {
			const auto it = graph.lookup_.find(ref);
			if (it == graph.lookup_.end()) {
				local.dropped_references.emplace_back(record.id, ref);
				continue;
			}
			kept.push_back(std::move(ref));
			targets.push_back(it->second);
		}
		std::sort(kept.begin(), kept.end());
		std::sort(targets.begin(), targets.end());
		record.references = std::move(kept);
		validate_record(record);
		for (const Index t : targets) {
			++in_degree[t];
		}
		graph.reference_index_.insert(graph.reference_index_.end(), targets.begin(), targets.end());
		graph.reference_offset_.push_back(graph.reference_index_.size());
	}

	graph.citer_offset_.resize(records.size() + 1, 0);
	for (std::size_t i = 0; i < records.size(); ++i) {
		graph.citer_offset_[i + 1] = graph.citer_offset_[i] + in_degree[i];
	}
	graph.citer_index_.resize(graph.reference_index_.size());
	std::vector<std::size_t> cursor(graph.citer_offset_.begin(), graph.citer_offset_.end() - 1);
	// Citers are visited in ascending index order, so each citer list comes out sorted.
	for (std::size_t j = 0; j < records.size(); ++j) {
		for (std::size_t k = graph.reference_offset_[j]; k < graph.reference_offset_[j + 1]; ++k) {
			graph.citer_index_[cursor[graph.reference_index_[k]]++] = j;
		}
	}

	graph.records_ = std::move(records);
	if (report != nullptr) {
		std::sort(local.dropped_references.begin(), local.dropped_references.end());
		*report = std::move(local);
	}
	return graph;
}

std::optional<CitationGraph::Index> CitationGraph::find(const PaperId &id) const {
	const auto it = lookup_.find(id);
	if (it == lookup_.end()) {
		return std::nullopt;
	}
	return it->second;
}

CitationGraph::Index CitationGraph::index_of(const PaperId &id) const {
	const auto found = find(id);
	if (!found) {
		throw NotFoundError("unknown paper " + id.str());
	}
	return *found;
}

std::vector<AuthorId> CitationGraph::authors() const {
	std::set<AuthorId> all;
	for (const auto &record : records_) {
		all.insert(record.authors.begin(), record.authors.end());
	}
	return {all.begin(), all.end()};
}

std::uint32_t ref_count(const CitationGraph &graph, CitationGraph::Index i, RefCountMode mode) {
	if (mode == RefCountMode::Bibliography) {
		return graph.record(i).bibliography_length;
	}
	return static_cast<std::uint32_t>(graph.references(i).size());
}

std::uint32_t ref_count(const CitationGraph &graph, const PaperId &id, RefCountMode mode) {
	return ref_count(graph, graph.index_of(id), mode);
}

ValidationReport validate(const CitationGraph &graph, RefCountMode mode) {
	ValidationReport report;
	std::set<AuthorId> connected;
	std::set<AuthorId> all;
	for (CitationGraph::Index i = 0; i < graph.size(); ++i) {
		const auto &record = graph.record(i);
		if (ref_count(graph, i, mode) == 0) {
			report.dangling.push_back(record.id);
		}
		const auto refs = graph.references(i);
		if (std::binary_search(refs.begin(), refs.end(), i)) {
			report.self_citing.push_back(record.id);
		}
		auto is_other = [i](CitationGraph::Index k) { return k != i; };
		const auto cits = graph.citers(i);
		const bool linked = std::any_of(refs.begin(), refs.end(), is_other) ||
			std::any_of(cits.begin(), cits.end(), is_other);
		all.insert(record.authors.begin(), record.authors.end());
		if (linked) {
			connected.insert(record.authors.begin(), record.authors.end());
		}
	}
	std::set_difference(all.begin(), all.end(), connected.begin(), connected.end(),
		std::back_inserter(report.orphan_authors));
	return report;
}

} // namespace paperrank
