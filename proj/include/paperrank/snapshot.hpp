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
 * Line-delimited JSON citation snapshots, one paper per line:
 *
 *   {"id": "2-s2.0-1", "authors": ["7202686127"], "year": 2001,
 *    "subject": "Math", "references": ["2-s2.0-0"], "bibliography_length": 12}
 *
 * "year" and "subject" are optional; unknown fields are ignored; blank
 * lines are skipped.
 */

#ifndef PAPERRANK_SNAPSHOT_HPP
#define PAPERRANK_SNAPSHOT_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paperrank/graph.hpp"

namespace paperrank {

enum class ParseMode {
	/** Abort on the first malformed line. */
	Strict,
	/** Skip malformed lines and report them. */
	Lenient
};

struct SnapshotIssue {
	std::size_t line;
	std::string message;
};

struct SnapshotLoad {
	std::vector<PaperRecord> records;
	std::vector<SnapshotIssue> issues;
};

/** @throws ValidationError describing what is wrong with the line. */
PaperRecord parse_snapshot_line(std::string_view line);

/** Snapshot line for @p record, without the trailing newline. */
std::string format_snapshot_line(const PaperRecord &record);

/**
 * Order-preserving parse.
 * @throws ParseError in strict mode, at the first malformed line.
 */
SnapshotLoad load_snapshot(std::istream &in, ParseMode mode = ParseMode::Strict);

/** @throws NotFoundError if the file cannot be opened. */
SnapshotLoad load_snapshot_file(const std::filesystem::path &path, ParseMode mode = ParseMode::Strict);

void write_snapshot(std::span<const PaperRecord> records, std::ostream &out);

} // namespace paperrank

#endif
