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
 * Vocabulary types: identifiers, reference-count modes, time windows.
 */

#ifndef PAPERRANK_TYPES_HPP
#define PAPERRANK_TYPES_HPP

#include <compare>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "paperrank/errors.hpp"

namespace paperrank {

namespace detail {

	/** Ids travel through whitespace-delimited state files, so they may not contain blanks. */
	inline void check_identifier(std::string_view value, const char *kind) {
		if (value.empty()) {
			throw ValidationError(std::string(kind) + " must not be empty");
		}
		for (const char c : value) {
			if (static_cast<unsigned char>(c) <= 0x20 || c == 0x7f) {
				throw ValidationError(std::string(kind) + " '" + std::string(value) +
					"' contains whitespace or control characters");
			}
		}
	}

	template <typename Tag>
	class Identifier {
	public:
		Identifier() = default;

		explicit Identifier(std::string value) : value_(std::move(value)) {
			check_identifier(value_, Tag::name);
		}

		const std::string &str() const noexcept { return value_; }

		friend auto operator<=>(const Identifier &, const Identifier &) = default;

		friend std::ostream &operator<<(std::ostream &os, const Identifier &id) {
			return os << id.value_;
		}

	private:
		std::string value_;
	};

	struct PaperIdTag {
		static constexpr const char *name = "paper id";
	};
	struct AuthorIdTag {
		static constexpr const char *name = "author id";
	};

} // namespace detail

/** Opaque paper identifier, e.g. a Scopus eid such as "2-s2.0-0031250627". */
using PaperId = detail::Identifier<detail::PaperIdTag>;

/** Opaque author identifier, e.g. a Scopus author id such as "7202686127". */
using AuthorId = detail::Identifier<detail::AuthorIdTag>;

/**
 * How the reference count of a citing paper is taken.
 *
 * Bibliography uses the stored bibliography length (every item of the
 * reference list, inside the database or not). InDatabase uses the number
 * of references that resolve to papers of the database, i.e. the column
 * sums of the citation matrix.
 */
enum class RefCountMode { Bibliography, InDatabase };

inline const char *to_string(RefCountMode mode) noexcept {
	return mode == RefCountMode::Bibliography ? "bibliography" : "indb";
}

/** Accepts "bibliography" and "indb" (also "in-database"). */
inline RefCountMode parse_ref_count_mode(std::string_view text) {
	if (text == "bibliography") {
		return RefCountMode::Bibliography;
	}
	if (text == "indb" || text == "in-database") {
		return RefCountMode::InDatabase;
	}
	throw ValidationError("unknown reference-count mode '" + std::string(text) + "'");
}

/**
 * Closed year interval; a missing bound is unbounded on that side.
 * Papers without a year only pass the fully unbounded window.
 */
class TimeWindow {
public:
	TimeWindow() = default;

	TimeWindow(std::optional<int> from_year, std::optional<int> to_year)
		: from_(from_year), to_(to_year) {
		if (from_ && to_ && *from_ > *to_) {
			throw ValidationError("time window has from_year " + std::to_string(*from_) +
				" after to_year " + std::to_string(*to_));
		}
	}

	static TimeWindow unbounded() { return {}; }

	/** Parses "FROM:TO", where either side may be empty. */
	static TimeWindow parse(std::string_view text);

	bool is_unbounded() const noexcept { return !from_ && !to_; }

	bool contains(std::optional<int> year) const noexcept {
		if (is_unbounded()) {
			return true;
		}
		if (!year) {
			return false;
		}
		return (!from_ || *year >= *from_) && (!to_ || *year <= *to_);
	}

	const std::optional<int> &from_year() const noexcept { return from_; }
	const std::optional<int> &to_year() const noexcept { return to_; }

private:
	std::optional<int> from_;
	std::optional<int> to_;
};

/**
 * Division of a paper's rank among its authors. Only the uniform split is
 * implemented; the enum is where order-dependent schemes would be added.
 */
enum class WeightingStrategy { Uniform };

} // namespace paperrank

template <typename Tag>
struct std::hash<paperrank::detail::Identifier<Tag>> {
	std::size_t operator()(const paperrank::detail::Identifier<Tag> &id) const noexcept {
		return std::hash<std::string>{}(id.str());
	}
};

#endif
