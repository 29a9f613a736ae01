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


#ifndef PAPERRANK_TEST_SUPPORT_HPP
#define PAPERRANK_TEST_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "paperrank/graph.hpp"

namespace paperrank::test {

inline PaperRecord rec(const std::string &id, std::initializer_list<const char *> authors,
	std::initializer_list<const char *> refs, std::uint32_t bib, std::optional<int> year = std::nullopt,
	std::optional<std::string> subject = std::nullopt) {
	PaperRecord r;
	r.id = PaperId{id};
	for (const auto *a : authors) {
		r.authors.emplace_back(a);
	}
	for (const auto *p : refs) {
		r.references.emplace_back(p);
	}
	r.bibliography_length = bib;
	r.year = year;
	r.subject = std::move(subject);
	return r;
}

/** P2 -> P1; P3 -> P1, P2; P4 -> P1. A1 = {P1}, A2 = {P2, P3}, A3 = {P3, P4}. */
inline std::vector<PaperRecord> g4_records() {
	return {
		rec("P1", {"A1"}, {}, 0, 2001, "MATH"),
		rec("P2", {"A2"}, {"P1"}, 2, 2002, "MATH"),
		rec("P3", {"A2", "A3"}, {"P1", "P2"}, 2, 2003, "COMP"),
		rec("P4", {"A3"}, {"P1"}, 4, 2004, "COMP"),
	};
}

inline std::string paper_name(std::size_t i) {
	return "p" + std::to_string(i);
}

/**
 * Random citation snapshot: each paper cites up to max_refs earlier papers
 * (so some papers are dangling), has 1..3 authors drawn from a pool, and a
 * bibliography at least as long as its in-database references.
 */
inline std::vector<PaperRecord> random_records(std::mt19937_64 &rng, std::size_t n, std::size_t max_refs = 6,
	std::size_t author_pool = 0) {
	if (author_pool == 0) {
		author_pool = std::max<std::size_t>(1, n / 3);
	}
	std::vector<PaperRecord> records;
	for (std::size_t i = 0; i < n; ++i) {
		PaperRecord r;
		r.id = PaperId{paper_name(i)};
		std::set<std::string> authors;
		const auto n_authors = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
		for (std::size_t k = 0; k < n_authors; ++k) {
			authors.insert("a" + std::to_string(std::uniform_int_distribution<std::size_t>(0, author_pool - 1)(rng)));
		}
		for (const auto &a : authors) {
			r.authors.emplace_back(a);
		}
		std::set<std::size_t> refs;
		if (i > 0) {
			const auto n_refs = std::uniform_int_distribution<std::size_t>(0, std::min(max_refs, i))(rng);
			while (refs.size() < n_refs) {
				refs.insert(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng));
			}
		}
		for (const auto j : refs) {
			r.references.emplace_back(paper_name(j));
		}
		r.bibliography_length =
			static_cast<std::uint32_t>(refs.size() + std::uniform_int_distribution<std::size_t>(0, 20)(rng));
		if (r.bibliography_length == 0) {
			r.bibliography_length = 1;
		}
		r.year = std::uniform_int_distribution<int>(1990, 2020)(rng);
		records.push_back(std::move(r));
	}
	return records;
}

} // namespace paperrank::test

#endif
