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

// JSON mapping of PaperRecord shared by the snapshot reader and the API client.

#ifndef PAPERRANK_RECORD_JSON_HPP
#define PAPERRANK_RECORD_JSON_HPP

#include <limits>
#include <string>

#include <json.hpp>

#include "paperrank/graph.hpp"

namespace paperrank {

namespace detail {

	inline const nlohmann::json &require(const nlohmann::json &object, const char *key) {
		const auto it = object.find(key);
		if (it == object.end() || it->is_null()) {
			throw ValidationError(std::string("missing field '") + key + "'");
		}
		return *it;
	}

	inline std::string require_string(const nlohmann::json &value, const char *what) {
		if (!value.is_string()) {
			throw ValidationError(std::string(what) + " must be a string");
		}
		return value.get<std::string>();
	}

	inline std::uint32_t require_count(const nlohmann::json &value, const char *what) {
		if (!value.is_number_integer() || value.get<long long>() < 0 ||
			value.get<long long>() > std::numeric_limits<std::uint32_t>::max()) {
			throw ValidationError(std::string(what) + " must be a non-negative integer");
		}
		return static_cast<std::uint32_t>(value.get<long long>());
	}

} // namespace detail

/** @throws ValidationError on missing or ill-typed fields, or a record invariant violation. */
inline PaperRecord record_from_json(const nlohmann::json &object) {
	if (!object.is_object()) {
		throw ValidationError("record must be a JSON object");
	}
	PaperRecord record;
	record.id = PaperId(detail::require_string(detail::require(object, "id"), "id"));
	const auto &authors = detail::require(object, "authors");
	if (!authors.is_array()) {
		throw ValidationError("authors must be an array");
	}
	for (const auto &author : authors) {
		record.authors.emplace_back(detail::require_string(author, "author id"));
	}
	if (const auto it = object.find("references"); it != object.end() && !it->is_null()) {
		if (!it->is_array()) {
			throw ValidationError("references must be an array");
		}
		for (const auto &ref : *it) {
			record.references.emplace_back(detail::require_string(ref, "reference"));
		}
	}
	record.bibliography_length =
		detail::require_count(detail::require(object, "bibliography_length"), "bibliography_length");
	if (const auto it = object.find("year"); it != object.end() && !it->is_null()) {
		if (!it->is_number_integer()) {
			throw ValidationError("year must be an integer");
		}
		record.year = it->get<int>();
	}
	if (const auto it = object.find("subject"); it != object.end() && !it->is_null()) {
		record.subject = detail::require_string(*it, "subject");
	}
	validate_record(record);
	return record;
}

inline nlohmann::ordered_json record_to_json(const PaperRecord &record) {
	nlohmann::ordered_json object;
	object["id"] = record.id.str();
	auto &authors = object["authors"] = nlohmann::ordered_json::array();
	for (const auto &author : record.authors) {
		authors.push_back(author.str());
	}
	if (record.year) {
		object["year"] = *record.year;
	}
	if (record.subject) {
		object["subject"] = *record.subject;
	}
	auto &refs = object["references"] = nlohmann::ordered_json::array();
	for (const auto &ref : record.references) {
		refs.push_back(ref.str());
	}
	object["bibliography_length"] = record.bibliography_length;
	return object;
}

} // namespace paperrank

#endif
