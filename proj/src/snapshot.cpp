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

#include "paperrank/snapshot.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "record_json.hpp"

namespace paperrank {

PaperRecord parse_snapshot_line(std::string_view line) {
	try {
		return record_from_json(nlohmann::json::parse(line));
	} catch (const nlohmann::json::exception &e) {
		throw ValidationError(std::string("invalid JSON: ") + e.what());
	}
}

std::string format_snapshot_line(const PaperRecord &record) {
	return record_to_json(record).dump();
}

SnapshotLoad load_snapshot(std::istream &in, ParseMode mode) {
	SnapshotLoad result;
	std::string line;
	std::size_t number = 0;
	while (std::getline(in, line)) {
		++number;
		if (line.find_first_not_of(" \t\r") == std::string::npos) {
			continue;
		}
		try {
			result.records.push_back(parse_snapshot_line(line));
		} catch (const ValidationError &e) {
			if (mode == ParseMode::Strict) {
				throw ParseError(number, e.what());
			}
			result.issues.push_back({number, e.what()});
		}
	}
	if (in.bad()) {
		throw Error("error reading snapshot");
	}
	return result;
}

SnapshotLoad load_snapshot_file(const std::filesystem::path &path, ParseMode mode) {
	std::ifstream in(path, std::ios::binary);
	if (!in) {
		throw NotFoundError("cannot open snapshot " + path.string());
	}
	return load_snapshot(in, mode);
}

void write_snapshot(std::span<const PaperRecord> records, std::ostream &out) {
	for (const auto &record : records) {
		out << format_snapshot_line(record) << '\n';
	}
}

} // namespace paperrank
