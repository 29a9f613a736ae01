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


#include "paperrank/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paperrank/api.hpp"
#include "paperrank/errors.hpp"
#include "paperrank/incremental.hpp"
#include "paperrank/report.hpp"
#include "paperrank/snapshot.hpp"

namespace paperrank {

namespace {

	/** Thrown for flag values that parse but make no sense; maps to exit_usage. */
	struct UsageError : Error {
		using Error::Error;
	};

	struct Flags {
		std::string mode = "bibliography";
		double alpha = default_alpha;
		double beta = default_beta;
		std::size_t i_threshold = default_i_threshold;
		std::string window;
		std::string format = "table";
		std::string state;
		std::string config;
		std::string output;
	};

	template <typename Parse>
	auto usage_checked(Parse &&parse) {
		try {
			return parse();
		} catch (const ValidationError &e) {
			throw UsageError(e.what());
		}
	}

	ReportOptions report_options(const Flags &flags) {
		ReportOptions options;
		options.mode = usage_checked([&] { return parse_ref_count_mode(flags.mode); });
		options.window = usage_checked([&] {
			return flags.window.empty() ? TimeWindow::unbounded() : TimeWindow::parse(flags.window);
		});
		if (!(flags.alpha > 0.0) || !(flags.beta > 0.0)) {
			throw UsageError("--alpha and --beta must be positive");
		}
		options.alpha = flags.alpha;
		options.beta = flags.beta;
		options.i_threshold = flags.i_threshold;
		return options;
	}

	OutputFormat output_format(const Flags &flags) {
		return usage_checked([&] { return parse_output_format(flags.format); });
	}

	std::filesystem::path required_state(const Flags &flags) {
		if (flags.state.empty()) {
			throw UsageError("--state is required");
		}
		return flags.state;
	}

	CitationGraph load_graph(const std::string &path) {
		return build_graph(load_snapshot_file(path).records);
	}

	std::string signed_real(double value) {
		return (value >= 0.0 ? "+" : "") + format_real(value);
	}

	/** Writes to --output when given, otherwise to the command stream. */
	template <typename Emit>
	void emit(const Flags &flags, std::ostream &out, Emit &&body) {
		if (flags.output.empty()) {
			body(out);
			return;
		}
		std::ofstream file(flags.output, std::ios::binary | std::ios::trunc);
		if (!file) {
			throw Error("cannot write " + flags.output);
		}
		body(file);
		file.flush();
		if (!file) {
			throw Error("error writing " + flags.output);
		}
	}

	int cmd_validate(const std::string &snapshot, const Flags &flags, std::ostream &out) {
		const auto mode = usage_checked([&] { return parse_ref_count_mode(flags.mode); });
		const auto load = load_snapshot_file(snapshot, ParseMode::Lenient);
		BuildReport build;
		const auto graph = build_graph(load.records, &build);
		const auto report = validate(graph, mode);

		for (const auto &issue : load.issues) {
			out << "error   line " << issue.line << ": " << issue.message << '\n';
		}
		for (const auto &[citing, cited] : build.dropped_references) {
			out << "note    " << citing << " references " << cited << ", not in the snapshot\n";
		}
		for (const auto &id : report.self_citing) {
			out << "warning " << id << " cites itself\n";
		}
		for (const auto &id : report.dangling) {
			out << "note    " << id << " has no reference count (" << to_string(mode) << ")\n";
		}
		for (const auto &id : report.orphan_authors) {
			out << "note    author " << id << " is isolated from the citation graph\n";
		}
		out << graph.size() << " papers, " << graph.citation_count() << " citations, " << graph.authors().size()
			<< " authors, " << load.issues.size() << " malformed lines\n";
		return load.issues.empty() && report.self_citing.empty() ? exit_ok : exit_failure;
	}

	int cmd_sync(const std::vector<std::string> &authors, const Flags &flags, std::ostream &out) {
		const auto state_path = required_state(flags);
		auto endpoints = load_endpoints(flags.config.empty() ? std::nullopt
															: std::optional<std::filesystem::path>(flags.config));
		auto state = load_state_file(state_path);
		CitationApiClient client(endpoints, make_transport(endpoints));

		for (const auto &name : authors) {
			const AuthorId author{name};
			const auto before = state.as_of();
			const auto result = sync_author(client, state, author);
			const auto &q = result.queries;
			out << "sync " << author << ": " << result.new_papers << " new papers, " << result.new_citations
				<< " new citations, " << q.queries_used() << " queries (author " << q.author_lookups << ", papers "
				<< q.paper_lookups << ", citation pages " << q.citation_pages << ")\n";
			for (const auto &[paper, delta] : result.delta.paper_deltas) {
				out << "  paper  " << paper << ' ' << signed_real(delta) << '\n';
			}
			for (const auto &[who, delta] : result.delta.author_deltas) {
				out << "  author " << who << ' ' << signed_real(delta) << '\n';
			}
			// Persist after every author so a later failure keeps this progress.
			if (state.as_of() != before) {
				save_state_file(state, state_path);
			}
		}
		const auto &total = client.budget();
		out << "queries used " << total.queries_used() << '\n';
		return exit_ok;
	}

	int cmd_reconcile(const std::string &snapshot, const Flags &flags, std::ostream &out) {
		const auto state = load_state_file(required_state(flags));
		const auto drift = reconcile(state, load_graph(snapshot));
		out << "max paper drift  " << format_real(drift.max_paper_drift) << '\n';
		out << "max author drift " << format_real(drift.max_author_drift) << '\n';
		for (const auto &id : drift.unmatched_papers) {
			out << "unmatched paper  " << id << '\n';
		}
		for (const auto &id : drift.unmatched_authors) {
			out << "unmatched author " << id << '\n';
		}
		const bool ok = drift.within(conservation_tolerance);
		out << (ok ? "consistent" : "DRIFT") << '\n';
		return ok ? exit_ok : exit_failure;
	}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
	CLI::App app{"PaperRank and AuthorRank citation indices"};
	app.name("paperrank");
	app.fallthrough();
	app.require_subcommand(1);

	Flags flags;
	app.add_option("--mode", flags.mode, "reference count: bibliography or indb")->capture_default_str();
	app.add_option("--alpha", flags.alpha, "h_alpha share scale")->capture_default_str();
	app.add_option("--beta", flags.beta, "i_beta share threshold")->capture_default_str();
	app.add_option("--i-threshold", flags.i_threshold, "citation threshold of the i_n column")
		->capture_default_str();
	app.add_option("--window", flags.window, "year window FROM:TO, either side optional");
	app.add_option("--format", flags.format, "table, csv or json")->capture_default_str();
	app.add_option("--state", flags.state, "state file");
	app.add_option("--config", flags.config, "API endpoint configuration (JSON)");
	app.add_option("--output", flags.output, "write the report here instead of standard output");

	std::string snapshot;
	auto add_verb = [&](const char *name, const char *help) {
		auto *verb = app.add_subcommand(name, help);
		verb->add_option("snapshot", snapshot, "line-delimited paper records")->required();
		return verb;
	};

	auto *rank = add_verb("rank", "per-author table of indices");
	auto *paper = add_verb("paper", "PaperRank breakdown of one paper");
	std::string paper_id;
	paper->add_option("paper", paper_id, "paper id")->required();

	auto *scatter = add_verb("scatter", "plot data of one metric against another, with a regression line");
	std::string x_metric = "sumcit";
	std::string y_metric = "authorrank";
	std::vector<std::string> excluded;
	scatter->add_option("--x", x_metric, "sumcit, sumpr, authorrank or h")->capture_default_str();
	scatter->add_option("--y", y_metric, "sumcit, sumpr, authorrank or h")->capture_default_str();
	scatter->add_option("--exclude", excluded, "authors left out of the points and the fit");

	auto *verify = add_verb("verify", "check the scores against the stochastic-matrix model");
	double tolerance = first_step_tolerance;
	std::size_t max_iterations = 10000;
	verify->add_option("--tolerance", tolerance)->capture_default_str();
	verify->add_option("--max-iterations", max_iterations)->capture_default_str();

	auto *validate_verb = add_verb("validate", "report malformed records and graph anomalies");
	auto *init = add_verb("init", "bootstrap a state file from a snapshot");
	auto *reconcile_verb = add_verb("reconcile", "compare a state file with a batch recomputation");

	auto *sync = app.add_subcommand("sync", "fetch new papers and citations of authors and update the state");
	std::vector<std::string> sync_authors;
	sync->add_option("authors", sync_authors, "author ids")->required();

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? exit_ok : exit_usage;
	}

	try {
		if (rank->parsed()) {
			const auto options = report_options(flags);
			const auto format = output_format(flags);
			const auto report = build_rank_report(load_graph(snapshot), options);
			emit(flags, out, [&](std::ostream &o) { write_rank_report(report, format, o); });
		} else if (paper->parsed()) {
			const auto options = report_options(flags);
			const auto format = output_format(flags);
			const auto id = usage_checked([&] { return PaperId{paper_id}; });
			const auto detail = build_paper_detail(load_graph(snapshot), id, options.mode);
			emit(flags, out, [&](std::ostream &o) { write_paper_detail(detail, format, o); });
		} else if (scatter->parsed()) {
			const auto options = report_options(flags);
			const auto format = output_format(flags);
			const auto x = usage_checked([&] { return parse_metric(x_metric); });
			const auto y = usage_checked([&] { return parse_metric(y_metric); });
			std::vector<AuthorId> skip;
			for (const auto &name : excluded) {
				skip.push_back(usage_checked([&] { return AuthorId{name}; }));
			}
			const auto plot = build_scatter(build_rank_report(load_graph(snapshot), options), x, y, skip);
			emit(flags, out, [&](std::ostream &o) { write_scatter(plot, format, o); });
		} else if (verify->parsed()) {
			const auto format = output_format(flags);
			const auto report = run_verify(load_graph(snapshot), tolerance, max_iterations);
			emit(flags, out, [&](std::ostream &o) { write_verify(report, format, o); });
			return report.passed() ? exit_ok : exit_failure;
		} else if (validate_verb->parsed()) {
			return cmd_validate(snapshot, flags, out);
		} else if (init->parsed()) {
			const auto mode = usage_checked([&] { return parse_ref_count_mode(flags.mode); });
			const auto path = required_state(flags);
			BuildReport dropped;
			const auto graph = build_graph(load_snapshot_file(snapshot).records, &dropped);
			const auto state = init_state(graph, mode, &dropped);
			save_state_file(state, path);
			out << "initialized " << path.string() << ": " << state.papers().size() << " papers, "
				<< state.author_ranks().size() << " authors, mode " << to_string(mode) << '\n';
		} else if (reconcile_verb->parsed()) {
			return cmd_reconcile(snapshot, flags, out);
		} else if (sync->parsed()) {
			return cmd_sync(sync_authors, flags, out);
		}
	} catch (const UsageError &e) {
		err << "paperrank: " << e.what() << '\n';
		return exit_usage;
	} catch (const std::exception &e) {
		err << "paperrank: " << e.what() << '\n';
		return exit_failure;
	}
	return exit_ok;
}

} // namespace paperrank
