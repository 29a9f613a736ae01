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
 * Tabular and scatter reports built on top of the rank functions, and
 * their table / csv / json renderings.
 */

#ifndef PAPERRANK_REPORT_HPP
#define PAPERRANK_REPORT_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paperrank/graph.hpp"
#include "paperrank/oracle.hpp"
#include "paperrank/rank.hpp"

namespace paperrank {

enum class OutputFormat { Table, Csv, Json };

OutputFormat parse_output_format(std::string_view text);

/** Token printed wherever a ratio is undefined. */
inline constexpr std::string_view undefined_token = "undefined";

struct ReportOptions {
	RefCountMode mode = RefCountMode::Bibliography;
	double alpha = default_alpha;
	double beta = default_beta;
	std::size_t i_threshold = default_i_threshold;
	/** Filters each author's papers by year. */
	TimeWindow window;
};

struct ReportRow {
	AuthorId author;
	/** Most frequent subject tag over the author's papers, "-" if none. */
	std::string subject;
	std::size_t publications = 0;
	std::size_t sum_citations = 0;
	double sum_paperrank = 0.0;
	double authorrank = 0.0;
	std::size_t h_index = 0;
	std::size_t h_alpha = 0;
	std::size_t i_beta = 0;
	std::size_t i_n = 0;
};

struct RankReport {
	ReportOptions options;
	/** One row per author, sorted by author id. */
	std::vector<ReportRow> rows;
	/** PaperRank summed over every paper inside the window. */
	double paperrank_total = 0.0;
	/** AuthorRank summed over the rows; equals paperrank_total up to rounding. */
	double authorrank_total = 0.0;
};

RankReport build_rank_report(const CitationGraph &graph, const ReportOptions &options);
void write_rank_report(const RankReport &report, OutputFormat format, std::ostream &out);

struct PaperDetail {
	PaperId id;
	RefCountMode mode = RefCountMode::Bibliography;
	double paperrank = 0.0;
	std::size_t citations = 0;
	std::optional<double> rho;
	/** (citer, 1/#Ref of the citer), by citer id. */
	std::vector<std::pair<PaperId, double>> contributions;
};

PaperDetail build_paper_detail(const CitationGraph &graph, const PaperId &id, RefCountMode mode);
void write_paper_detail(const PaperDetail &detail, OutputFormat format, std::ostream &out);

enum class Metric { SumCitations, SumPaperRank, AuthorRank, HIndex };

/** Accepts sumcit, sumpr, authorrank, h. */
Metric parse_metric(std::string_view text);
std::string_view metric_name(Metric metric) noexcept;
double metric_value(const ReportRow &row, Metric metric) noexcept;

/** Least-squares fit y = slope * x + intercept; both empty when x has no spread. */
struct RegressionSummary {
	std::optional<double> slope;
	std::optional<double> intercept;
	std::size_t samples = 0;
};

RegressionSummary least_squares(std::span<const double> x, std::span<const double> y);

struct ScatterPoint {
	AuthorId author;
	double x = 0.0;
	double y = 0.0;
};

struct Scatter {
	Metric x_metric = Metric::SumCitations;
	Metric y_metric = Metric::AuthorRank;
	std::vector<ScatterPoint> points;
	RegressionSummary regression;
	/** Reference line y = x, drawn when AuthorRank is plotted against the h-index. */
	bool identity_line = false;
};

Scatter build_scatter(const RankReport &report, Metric x, Metric y,
	std::span<const AuthorId> excluded = {});
void write_scatter(const Scatter &scatter, OutputFormat format, std::ostream &out);

struct VerifyReport {
	double tolerance = 0.0;
	std::size_t papers = 0;
	std::size_t dangling = 0;
	FirstStepReport first_step;
	double max_column_sum_deviation = 0.0;
	std::size_t iterations = 0;
	double iterate_residual = 0.0;
	double fixed_point_residual = 0.0;
	bool converged = false;
	bool convergence_guaranteed = true;

	bool passed() const noexcept {
		return first_step.passed && max_column_sum_deviation <= tolerance &&
			(converged || !convergence_guaranteed);
	}
};

VerifyReport run_verify(const CitationGraph &graph, double tolerance, std::size_t max_iterations);
void write_verify(const VerifyReport &report, OutputFormat format, std::ostream &out);

/** Shortest text that reads back to the same double. */
std::string format_real(double value);

} // namespace paperrank

#endif
