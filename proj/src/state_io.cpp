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

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "paperrank/incremental.hpp"

// Layout (one record per line, fields separated by single spaces):
//
//   paperrank-state 1
//   mode <bibliography|indb>
//   as_of <version>
//   paper <id> <rank> <#auth> <author>...
//   citer <id> <bibliography length> <#cited> <cited>... <#pending> <pending>...
//   author <id> <rank>
//   sums <paper total> <author total>
//   end
//
// Reals are hexadecimal floats without the 0x prefix.

namespace paperrank {

namespace {

	constexpr const char *magic = "paperrank-state";
	constexpr int format_version = 1;

	std::string hex(double value) {
		char buffer[64];
		const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::hex);
		return {buffer, end};
	}

	class LineReader {
	public:
		explicit LineReader(std::istream &in) : in_(in) {}

		/** Next line split on spaces; throws at end of input. */
		std::vector<std::string> next() {
			std::string line;
			if (!std::getline(in_, line)) {
				throw ParseError(line_ + 1, "unexpected end of state input");
			}
			++line_;
			std::vector<std::string> fields;
			std::istringstream split(line);
			std::string field;
			while (split >> field) {
				fields.push_back(std::move(field));
			}
			if (fields.empty()) {
				throw ParseError(line_, "empty line");
			}
			return fields;
		}

		std::size_t line() const noexcept { return line_; }

		[[noreturn]] void fail(const std::string &what) const { throw ParseError(line_, what); }

		double real(const std::string &text) const {
			double value = 0.0;
			const auto [ptr, ec] =
				std::from_chars(text.data(), text.data() + text.size(), value, std::chars_format::hex);
			if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
				fail("invalid real '" + text + "'");
			}
			return value;
		}

		template <typename Unsigned>
		Unsigned count(const std::string &text) const {
			Unsigned value = 0;
			const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
			if (ec != std::errc{} || ptr != text.data() + text.size()) {
				fail("invalid count '" + text + "'");
			}
			return value;
		}

		template <typename Id>
		Id id(const std::string &text) const {
			try {
				return Id(text);
			} catch (const ValidationError &e) {
				fail(e.what());
			}
		}

	private:
		std::istream &in_;
		std::size_t line_ = 0;
	};

	void expect_arity(const LineReader &reader, const std::vector<std::string> &fields, std::size_t n) {
		if (fields.size() != n) {
			reader.fail("'" + fields.front() + "' record expects " + std::to_string(n - 1) + " fields, got " +
				std::to_string(fields.size() - 1));
		}
	}

	bool relative_close(double a, double b, double tolerance) {
		return std::abs(a - b) <= tolerance * std::max({1.0, std::abs(a), std::abs(b)});
	}

} // namespace

void save_state(const RankState &state, std::ostream &out) {
	out << magic << ' ' << format_version << '\n';
	out << "mode " << to_string(state.mode()) << '\n';
	out << "as_of " << state.as_of() << '\n';
	for (const auto &[id, paper] : state.papers()) {
		out << "paper " << id << ' ' << hex(paper.rank) << ' ' << paper.authors.size();
		for (const auto &author : paper.authors) {
			out << ' ' << author;
		}
		out << '\n';
	}
	for (const auto &[id, citer] : state.citers()) {
		out << "citer " << id << ' ' << citer.bibliography_length << ' ' << citer.cited.size();
		for (const auto &cited : citer.cited) {
			out << ' ' << cited;
		}
		out << ' ' << citer.pending.size();
		for (const auto &pending : citer.pending) {
			out << ' ' << pending;
		}
		out << '\n';
	}
	for (const auto &[id, rank] : state.author_ranks()) {
		out << "author " << id << ' ' << hex(rank) << '\n';
	}
	out << "sums " << hex(state.paper_total()) << ' ' << hex(state.author_total()) << '\n';
	out << "end\n";
}

RankState load_state(std::istream &in) {
	LineReader reader(in);

	auto header = reader.next();
	if (header.size() != 2 || header[0] != magic) {
		reader.fail("not a paperrank state file");
	}
	if (header[1] != std::to_string(format_version)) {
		reader.fail("unsupported state format version " + header[1]);
	}

	auto mode_line = reader.next();
	if (mode_line[0] != "mode") {
		reader.fail("expected 'mode'");
	}
	expect_arity(reader, mode_line, 2);
	RefCountMode mode{};
	try {
		mode = parse_ref_count_mode(mode_line[1]);
	} catch (const ValidationError &e) {
		reader.fail(e.what());
	}
	RankState state(mode);

	auto as_of_line = reader.next();
	if (as_of_line[0] != "as_of") {
		reader.fail("expected 'as_of'");
	}
	expect_arity(reader, as_of_line, 2);
	state.as_of_ = reader.count<std::uint64_t>(as_of_line[1]);

	double stored_paper_total = 0.0;
	double stored_author_total = 0.0;
	for (;;) {
		auto fields = reader.next();
		const std::string &kind = fields[0];
		if (kind == "end") {
			expect_arity(reader, fields, 1);
			break;
		}
		if (kind == "paper") {
			if (fields.size() < 4) {
				reader.fail("truncated paper record");
			}
			const auto id = reader.id<PaperId>(fields[1]);
			RankState::Paper paper;
			paper.rank = reader.real(fields[2]);
			const auto n = reader.count<std::size_t>(fields[3]);
			expect_arity(reader, fields, 4 + n);
			for (std::size_t k = 0; k < n; ++k) {
				paper.authors.push_back(reader.id<AuthorId>(fields[4 + k]));
			}
			if (paper.authors.empty()) {
				reader.fail("paper " + id.str() + " without authors");
			}
			if (!state.papers_.emplace(id, std::move(paper)).second) {
				reader.fail("duplicate paper " + id.str());
			}
		} else if (kind == "citer") {
			if (fields.size() < 5) {
				reader.fail("truncated citer record");
			}
			const auto id = reader.id<PaperId>(fields[1]);
			RankState::Citer citer;
			citer.bibliography_length = reader.count<std::uint32_t>(fields[2]);
			const auto n_cited = reader.count<std::size_t>(fields[3]);
			if (fields.size() < 5 + n_cited) {
				reader.fail("truncated citer record");
			}
			for (std::size_t k = 0; k < n_cited; ++k) {
				citer.cited.insert(reader.id<PaperId>(fields[4 + k]));
			}
			const auto n_pending = reader.count<std::size_t>(fields[4 + n_cited]);
			expect_arity(reader, fields, 5 + n_cited + n_pending);
			for (std::size_t k = 0; k < n_pending; ++k) {
				citer.pending.insert(reader.id<PaperId>(fields[5 + n_cited + k]));
			}
			if (!state.citers_.emplace(id, std::move(citer)).second) {
				reader.fail("duplicate citer " + id.str());
			}
		} else if (kind == "author") {
			expect_arity(reader, fields, 3);
			const auto id = reader.id<AuthorId>(fields[1]);
			if (!state.authors_.emplace(id, reader.real(fields[2])).second) {
				reader.fail("duplicate author " + id.str());
			}
		} else if (kind == "sums") {
			expect_arity(reader, fields, 3);
			stored_paper_total = reader.real(fields[1]);
			stored_author_total = reader.real(fields[2]);
		} else {
			reader.fail("unknown record '" + kind + "'");
		}
	}

	state.check_integrity();
	if (!relative_close(state.paper_total(), stored_paper_total, conservation_tolerance) ||
		!relative_close(state.author_total(), stored_author_total, conservation_tolerance)) {
		throw IntegrityError("state totals do not match the stored sums");
	}
	return state;
}

void RankState::check_integrity() const {
	for (const auto &[id, paper] : papers_) {
		if (paper.rank < -conservation_tolerance) {
			throw IntegrityError("paper " + id.str() + " has a negative rank");
		}
		for (const auto &author : paper.authors) {
			if (!authors_.contains(author)) {
				throw IntegrityError("author " + author.str() + " of paper " + id.str() + " has no rank record");
			}
		}
	}
	for (const auto &[id, rank] : authors_) {
		if (rank < -conservation_tolerance) {
			throw IntegrityError("author " + id.str() + " has a negative rank");
		}
	}
	for (const auto &[id, citer] : citers_) {
		for (const auto &cited : citer.cited) {
			if (!papers_.contains(cited)) {
				throw IntegrityError("citer " + id.str() + " cites unregistered paper " + cited.str());
			}
		}
		for (const auto &pending : citer.pending) {
			if (papers_.contains(pending)) {
				throw IntegrityError("citer " + id.str() + " holds a pending reference to registered paper " +
					pending.str());
			}
		}
		if (citer.bibliography_length < citer.cited.size() + citer.pending.size()) {
			throw IntegrityError("citer " + id.str() + " has more known references than its bibliography length");
		}
	}
	const double papers = paper_total();
	const double authors = author_total();
	if (std::abs(papers - authors) > conservation_tolerance * std::max({1.0, std::abs(papers), std::abs(authors)})) {
		throw IntegrityError("paper rank total " + std::to_string(papers) + " differs from author rank total " +
			std::to_string(authors));
	}
}

void save_state_file(const RankState &state, const std::filesystem::path &path) {
	auto staging = path;
	staging += ".tmp";
	{
		std::ofstream out(staging, std::ios::binary | std::ios::trunc);
		if (!out) {
			throw Error("cannot write " + staging.string());
		}
		save_state(state, out);
		out.flush();
		if (!out) {
			throw Error("failed writing " + staging.string());
		}
	}
	std::filesystem::rename(staging, path);
}

RankState load_state_file(const std::filesystem::path &path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) {
		throw NotFoundError("cannot open state file " + path.string());
	}
	return load_state(in);
}

} // namespace paperrank
