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

#include "paperrank/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>

#include <json.hpp>

#include "paperrank/summation.hpp"

namespace paperrank {

namespace {

	using Cells = std::vector<std::string>;

	std::string fixed(double value, int digits = 4) {
		char buffer[64];
		std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
		return buffer;
	}

	bool is_numeric(const std::string &cell) {
		return !cell.empty() && (std::isdigit(static_cast<unsigned char>(cell.front())) != 0 || cell.front() == '-') &&
			cell != "-";
	}

	/** Space-aligned table; numeric cells right-aligned. */
	void write_table(const Cells &header, const std::vector<Cells> &rows, std::ostream &out) {
		std::vector<std::size_t> width(header.size());
		for (std::size_t c = 0; c < header.size(); ++c) {
			width[c] = header[c].size();
			for (const auto &row : rows) {
				width[c] = std::max(width[c], row[c].size());
			}
		}
		auto emit = [&](const Cells &cells, bool is_header) {
			std::string line;
			for (std::size_t c = 0; c < cells.size(); ++c) {
				const std::size_t pad = width[c] - cells[c].size();
				if (c > 0) {
					line += "  ";
				}
				if (!is_header && is_numeric(cells[c])) {
					line.append(pad, ' ');
					line += cells[c];
				} else {
					line += cells[c];
					line.append(pad, ' ');
				}
			}
			while (!line.empty() && line.back() == ' ') {
				line.pop_back();
			}
			out << line << '\n';
		};
		emit(header, true);
		std::size_t rule = 0;
		for (std::size_t c = 0; c < width.size(); ++c) {
			rule += width[c] + (c > 0 ? 2 : 0);
		}
		out << std::string(rule, '-') << '\n';
		for (const auto &row : rows) {
			emit(row, false);
		}
	}

	std::string csv_field(const std::string &value) {
		if (value.find_first_of(",\"\n") == std::string::npos) {
			return value;
		}
		std::string quoted = "\"";
		for (const char c : value) {
			if (c == '"') {
				quoted += '"';
			}
			quoted += c;
		}
		return quoted + '"';
	}

	void write_csv(const Cells &header, const std::vector<Cells> &rows, std::ostream &out) {
		auto emit = [&](const Cells &cells) {
			for (std::size_t c = 0; c < cells.size(); ++c) {
				out << (c > 0 ? "," : "") << csv_field(cells[c]);
			}
			out << '\n';
		};
		emit(header);
		for (const auto &row : rows) {
			emit(row);
		}
	}

	std::string dominant_subject(const CitationGraph &graph, const AuthorProfile &profile) {
		std::map<std::string, std::size_t> counts;
		for (const auto &paper : profile.papers) {
			if (const auto &subject = graph.record(paper).subject) {
				++counts[*subject];
			}
		}
		std::string best = "-";
		std::size_t best_count = 0;
		for (const auto &[subject, count] : counts) {
			if (count > best_count) {
				best = subject;
				best_count = count;
			}
		}
		return best;
	}

	nlohmann::ordered_json optional_real(const std::optional<double> &value) {
		if (!value) {
			return std::string(undefined_token);
		}
		return *value;
	}

} // namespace

std::string format_real(double value) {
	char buffer[64];
	const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
	return {buffer, end};
}

OutputFormat parse_output_format(std::string_view text) {
	if (text == "table") {
		return OutputFormat::Table;
	}
	if (text == "csv") {
		return OutputFormat::Csv;
	}
	if (text == "json") {
		return OutputFormat::Json;
	}
	throw ValidationError("unknown output format '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- rank

RankReport build_rank_report(const CitationGraph &graph, const ReportOptions &options) {
	RankReport report;
	report.options = options;
	const Eigen::VectorXd ranks = paperrank_vector(graph, options.mode);

	CompensatedSum<double> paper_total;
	for (CitationGraph::Index i = 0; i < graph.size(); ++i) {
		if (options.window.contains(graph.record(i).year)) {
			paper_total += ranks[static_cast<Eigen::Index>(i)];
		}
	}
	report.paperrank_total = paper_total.value();

	CompensatedSum<double> author_total;
	for (const auto &all_papers : author_profiles(graph)) {
		AuthorProfile profile{all_papers.id, {}};
		for (const auto &paper : all_papers.papers) {
			if (options.window.contains(graph.record(paper).year)) {
				profile.papers.push_back(paper);
			}
		}
		ReportRow row;
		row.author = profile.id;
		row.subject = dominant_subject(graph, all_papers);
		row.publications = profile.papers.size();
		row.sum_citations = sum_citations(graph, profile);
		double sum_pr = 0.0;
		for (const auto &paper : profile.papers) {
			sum_pr += ranks[static_cast<Eigen::Index>(graph.index_of(paper))];
		}
		row.sum_paperrank = sum_pr;
		row.authorrank = authorrank(graph, profile, options.mode);
		row.h_index = h_index(graph, profile);
		row.h_alpha = h_alpha(graph, profile, options.alpha, options.mode);
		row.i_beta = i_beta(graph, profile, options.beta, options.mode);
		row.i_n = i_n_index(graph, profile, options.i_threshold);
		author_total += row.authorrank;
		report.rows.push_back(std::move(row));
	}
	report.authorrank_total = author_total.value();
	return report;
}

void write_rank_report(const RankReport &report, OutputFormat format, std::ostream &out) {
	const auto &opt = report.options;
	const std::string h_alpha_name = "h_" + format_real(opt.alpha);
	const std::string i_beta_name = "i_" + format_real(opt.beta);
	const std::string i_n_name = "i" + std::to_string(opt.i_threshold);

	if (format == OutputFormat::Json) {
		nlohmann::ordered_json doc;
		doc["mode"] = to_string(opt.mode);
		doc["alpha"] = opt.alpha;
		doc["beta"] = opt.beta;
		doc["i_threshold"] = opt.i_threshold;
		auto &rows = doc["rows"] = nlohmann::ordered_json::array();
		for (const auto &row : report.rows) {
			rows.push_back({{"author", row.author.str()}, {"subject", row.subject},
				{"publications", row.publications}, {"sum_citations", row.sum_citations},
				{"sum_paperrank", row.sum_paperrank}, {"authorrank", row.authorrank},
				{"h_index", row.h_index}, {h_alpha_name, row.h_alpha}, {i_beta_name, row.i_beta},
				{i_n_name, row.i_n}});
		}
		doc["totals"] = {{"paperrank", report.paperrank_total}, {"authorrank", report.authorrank_total}};
		out << doc.dump(2) << '\n';
		return;
	}

	const Cells header{"author", "subject", "#pub", "sum_cit", "sum_pr", "authorrank", "h", h_alpha_name,
		i_beta_name, i_n_name};
	std::vector<Cells> rows;
	for (const auto &row : report.rows) {
		const bool table = format == OutputFormat::Table;
		rows.push_back({row.author.str(), row.subject, std::to_string(row.publications),
			std::to_string(row.sum_citations), table ? fixed(row.sum_paperrank) : format_real(row.sum_paperrank),
			table ? fixed(row.authorrank) : format_real(row.authorrank), std::to_string(row.h_index),
			std::to_string(row.h_alpha), std::to_string(row.i_beta), std::to_string(row.i_n)});
	}
	if (format == OutputFormat::Csv) {
		write_csv(header, rows, out);
		out << "# total_paperrank," << format_real(report.paperrank_total) << '\n';
		out << "# total_authorrank," << format_real(report.authorrank_total) << '\n';
		return;
	}
	write_table(header, rows, out);
	out << "total paperrank " << fixed(report.paperrank_total) << "  authorrank "
		<< fixed(report.authorrank_total) << "  (" << report.rows.size() << " authors, mode "
		<< to_string(opt.mode) << ")\n";
}

// ---------------------------------------------------------------- paper

PaperDetail build_paper_detail(const CitationGraph &graph, const PaperId &id, RefCountMode mode) {
	const auto i = graph.index_of(id);
	PaperDetail detail;
	detail.id = id;
	detail.mode = mode;
	detail.paperrank = paperrank(graph, id, mode);
	detail.citations = citation_count(graph, id);
	detail.rho = rho(graph, id, mode);
	for (const auto c : graph.citers(i)) {
		detail.contributions.emplace_back(graph.record(c).id, 1.0 / static_cast<double>(ref_count(graph, c, mode)));
	}
	return detail;
}

void write_paper_detail(const PaperDetail &detail, OutputFormat format, std::ostream &out) {
	const std::string rho_text = detail.rho ? format_real(*detail.rho) : std::string(undefined_token);
	switch (format) {
	case OutputFormat::Json: {
		nlohmann::ordered_json doc;
		doc["paper"] = detail.id.str();
		doc["mode"] = to_string(detail.mode);
		doc["paperrank"] = detail.paperrank;
		doc["citations"] = detail.citations;
		doc["rho"] = optional_real(detail.rho);
		auto &list = doc["contributions"] = nlohmann::ordered_json::array();
		for (const auto &[citer, term] : detail.contributions) {
			list.push_back({{"citer", citer.str()}, {"term", term}});
		}
		out << doc.dump(2) << '\n';
		return;
	}
	case OutputFormat::Csv: {
		out << "# paper," << csv_field(detail.id.str()) << '\n';
		out << "# paperrank," << format_real(detail.paperrank) << '\n';
		out << "# citations," << detail.citations << '\n';
		out << "# rho," << rho_text << '\n';
		std::vector<Cells> rows;
		for (const auto &[citer, term] : detail.contributions) {
			rows.push_back({citer.str(), format_real(term)});
		}
		write_csv({"citer", "term"}, rows, out);
		return;
	}
	case OutputFormat::Table: {
		out << "paper      " << detail.id << '\n';
		out << "mode       " << to_string(detail.mode) << '\n';
		out << "paperrank  " << fixed(detail.paperrank) << '\n';
		out << "citations  " << detail.citations << '\n';
		out << "rho        " << (detail.rho ? fixed(*detail.rho) : std::string(undefined_token)) << '\n';
		std::vector<Cells> rows;
		for (const auto &[citer, term] : detail.contributions) {
			rows.push_back({citer.str(), fixed(term, 6)});
		}
		out << '\n';
		write_table({"citer", "1/#ref"}, rows, out);
		return;
	}
	}
}

// ---------------------------------------------------------------- scatter

Metric parse_metric(std::string_view text) {
	if (text == "sumcit") {
		return Metric::SumCitations;
	}
	if (text == "sumpr") {
		return Metric::SumPaperRank;
	}
	if (text == "authorrank") {
		return Metric::AuthorRank;
	}
	if (text == "h") {
		return Metric::HIndex;
	}
	throw ValidationError("unknown metric '" + std::string(text) + "' (expected sumcit, sumpr, authorrank or h)");
}

std::string_view metric_name(Metric metric) noexcept {
	switch (metric) {
	case Metric::SumCitations:
		return "sumcit";
	case Metric::SumPaperRank:
		return "sumpr";
	case Metric::AuthorRank:
		return "authorrank";
	case Metric::HIndex:
		return "h";
	}
	return "?";
}

double metric_value(const ReportRow &row, Metric metric) noexcept {
	switch (metric) {
	case Metric::SumCitations:
		return static_cast<double>(row.sum_citations);
	case Metric::SumPaperRank:
		return row.sum_paperrank;
	case Metric::AuthorRank:
		return row.authorrank;
	case Metric::HIndex:
		return static_cast<double>(row.h_index);
	}
	return 0.0;
}

RegressionSummary least_squares(std::span<const double> x, std::span<const double> y) {
	if (x.size() != y.size()) {
		throw ValidationError("regression inputs differ in length");
	}
	RegressionSummary summary;
	summary.samples = x.size();
	if (x.empty()) {
		return summary;
	}
	const double n = static_cast<double>(x.size());
	const double mean_x = compensated_sum(x) / n;
	const double mean_y = compensated_sum(y) / n;
	CompensatedSum<double> sxx;
	CompensatedSum<double> sxy;
	for (std::size_t k = 0; k < x.size(); ++k) {
		const double dx = x[k] - mean_x;
		sxx += dx * dx;
		sxy += dx * (y[k] - mean_y);
	}
	if (sxx.value() == 0.0) {
		return summary;
	}
	summary.slope = sxy.value() / sxx.value();
	summary.intercept = mean_y - *summary.slope * mean_x;
	return summary;
}

Scatter build_scatter(const RankReport &report, Metric x, Metric y, std::span<const AuthorId> excluded) {
	Scatter scatter;
	scatter.x_metric = x;
	scatter.y_metric = y;
	std::vector<double> xs;
	std::vector<double> ys;
	for (const auto &row : report.rows) {
		if (std::find(excluded.begin(), excluded.end(), row.author) != excluded.end()) {
			continue;
		}
		scatter.points.push_back({row.author, metric_value(row, x), metric_value(row, y)});
		xs.push_back(scatter.points.back().x);
		ys.push_back(scatter.points.back().y);
	}
	scatter.regression = least_squares(xs, ys);
	scatter.identity_line = (x == Metric::AuthorRank && y == Metric::HIndex) ||
		(x == Metric::HIndex && y == Metric::AuthorRank);
	return scatter;
}

void write_scatter(const Scatter &scatter, OutputFormat format, std::ostream &out) {
	const auto &reg = scatter.regression;
	const std::string x_name(metric_name(scatter.x_metric));
	const std::string y_name(metric_name(scatter.y_metric));
	switch (format) {
	case OutputFormat::Json: {
		nlohmann::ordered_json doc;
		doc["x"] = x_name;
		doc["y"] = y_name;
		auto &points = doc["points"] = nlohmann::ordered_json::array();
		for (const auto &p : scatter.points) {
			points.push_back({{"author", p.author.str()}, {"x", p.x}, {"y", p.y}});
		}
		doc["regression"] = {{"slope", optional_real(reg.slope)}, {"intercept", optional_real(reg.intercept)},
			{"samples", reg.samples}};
		if (scatter.identity_line) {
			doc["reference_line"] = {{"slope", 1.0}, {"intercept", 0.0}};
		}
		out << doc.dump(2) << '\n';
		return;
	}
	case OutputFormat::Csv:
	case OutputFormat::Table: {
		const bool table = format == OutputFormat::Table;
		std::vector<Cells> rows;
		for (const auto &p : scatter.points) {
			rows.push_back({p.author.str(), table ? fixed(p.x) : format_real(p.x), table ? fixed(p.y) : format_real(p.y)});
		}
		if (table) {
			write_table({"author", x_name, y_name}, rows, out);
		} else {
			write_csv({"author", x_name, y_name}, rows, out);
		}
		const std::string prefix = table ? "" : "# ";
		auto real = [&](const std::optional<double> &v) {
			return v ? format_real(*v) : std::string(undefined_token);
		};
		out << prefix << "regression " << y_name << " = slope * " << x_name << " + intercept: slope "
			<< real(reg.slope) << " intercept " << real(reg.intercept) << " samples " << reg.samples << '\n';
		if (scatter.identity_line) {
			out << prefix << "reference line y = x\n";
		}
		return;
	}
	}
}

// ---------------------------------------------------------------- verify

VerifyReport run_verify(const CitationGraph &graph, double tolerance, std::size_t max_iterations) {
	VerifyReport report;
	report.tolerance = tolerance;
	report.papers = graph.size();
	const auto s = build_matrix<double>(graph);
	report.dangling = s.dangling().size();
	report.first_step = verify_first_step(graph, tolerance);
	report.max_column_sum_deviation = s.max_column_sum_deviation();
	const auto v = power_method(s, tolerance, max_iterations);
	report.iterations = v.iteration_count;
	report.iterate_residual = v.residual;
	report.fixed_point_residual = fixed_point_residual(s, v.values);
	report.converged = v.converged;
	report.convergence_guaranteed = v.convergence_guaranteed;
	return report;
}

void write_verify(const VerifyReport &report, OutputFormat format, std::ostream &out) {
	if (format == OutputFormat::Json) {
		nlohmann::ordered_json doc;
		doc["papers"] = report.papers;
		doc["dangling"] = report.dangling;
		doc["tolerance"] = report.tolerance;
		doc["first_step"] = {{"passed", report.first_step.passed}, {"max_deviation", report.first_step.max_deviation}};
		doc["max_column_sum_deviation"] = report.max_column_sum_deviation;
		doc["power_method"] = {{"iterations", report.iterations}, {"iterate_residual", report.iterate_residual},
			{"fixed_point_residual", report.fixed_point_residual}, {"converged", report.converged},
			{"convergence_guaranteed", report.convergence_guaranteed}};
		doc["passed"] = report.passed();
		out << doc.dump(2) << '\n';
		return;
	}
	auto verdict = [](bool ok) { return ok ? "ok" : "FAIL"; };
	out << "papers                     " << report.papers << " (" << report.dangling << " dangling)\n";
	out << "tolerance                  " << format_real(report.tolerance) << '\n';
	out << "first-step identity        " << verdict(report.first_step.passed) << "  max deviation "
		<< format_real(report.first_step.max_deviation) << '\n';
	out << "column sums                " << verdict(report.max_column_sum_deviation <= report.tolerance)
		<< "  max deviation " << format_real(report.max_column_sum_deviation) << '\n';
	out << "power method               ";
	if (report.converged) {
		out << "converged";
	} else if (report.convergence_guaranteed) {
		out << "FAIL not converged";
	} else {
		out << "not converged";
	}
	out << "  iterations " << report.iterations << "  residual " << format_real(report.iterate_residual)
		<< "  |Sv - v| " << format_real(report.fixed_point_residual) << '\n';
	if (!report.convergence_guaranteed) {
		out << "note                       dangling papers present; convergence not guaranteed\n";
	}
	out << "result                     " << (report.passed() ? "passed" : "FAILED") << '\n';
}

} // namespace paperrank
