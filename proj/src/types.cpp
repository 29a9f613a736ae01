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

#include "paperrank/types.hpp"

#include <charconv>

namespace paperrank {

TimeWindow TimeWindow::parse(std::string_view text) {
	const auto colon = text.find(':');
	if (colon == std::string_view::npos) {
		throw ValidationError("time window '" + std::string(text) + "' is not of the form FROM:TO");
	}
	auto bound = [&](std::string_view part) -> std::optional<int> {
		if (part.empty()) {
			return std::nullopt;
		}
		int year = 0;
		const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), year);
		if (ec != std::errc{} || ptr != part.data() + part.size()) {
			throw ValidationError("time window bound '" + std::string(part) + "' is not a year");
		}
		return year;
	};
	return TimeWindow(bound(text.substr(0, colon)), bound(text.substr(colon + 1)));
}

} // namespace paperrank
