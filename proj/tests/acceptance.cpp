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


// Acceptance suite: one PASS/FAIL line per criterion. Every expected value
// comes from an oracle written here, independent of the library code paths
// being checked.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "paperrank/api.hpp"
#include "paperrank/cli.hpp"
#include "paperrank/incremental.hpp"
#include "paperrank/oracle.hpp"
#include "paperrank/rank.hpp"
#include "paperrank/snapshot.hpp"
#include "support.hpp"

using namespace paperrank;
using paperrank::test::rec;
namespace fs = std::filesystem;

namespace {

struct Outcome {
	bool pass = true;
	std::string detail;
};

/** Reports the first failure of a criterion and remembers it. */
struct Checker {
	Outcome outcome;
	void expect(bool ok, const std::string &what) {
		if (!ok && outcome.pass) {
			outcome.pass = false;
			outcome.detail = what;
		}
	}
};

std::string num(double v) {
	char buffer[64];
	std::snprintf(buffer, sizeof buffer, "%.3g", v);
	return buffer;
}

PaperId P(const std::string &id) {
	return PaperId{id};
}

// ------------------------------------------------------------ oracles

/** PaperRank by direct definition: scan every record for citations. */
std::map<std::string, long double> brute_paperrank(const std::vector<PaperRecord> &records, RefCountMode mode) {
	std::set<std::string> known;
	for (const auto &r : records) {
		known.insert(r.id.str());
	}
	std::map<std::string, long double> pr;
	for (const auto &r : records) {
		pr[r.id.str()] += 0.0L;
		std::size_t in_db = 0;
		for (const auto &ref : r.references) {
			in_db += known.count(ref.str());
		}
		const long double f = mode == RefCountMode::Bibliography ? r.bibliography_length : in_db;
		for (const auto &ref : r.references) {
			if (known.count(ref.str()) != 0) {
				pr[ref.str()] += 1.0L / f;
			}
		}
	}
	return pr;
}

std::size_t brute_h(const std::vector<std::size_t> &c) {
	std::size_t best = 0;
	for (std::size_t h = 0; h <= c.size(); ++h) {
		std::size_t n = 0;
		for (const auto x : c) {
			n += x >= h ? 1 : 0;
		}
		if (n >= h) {
			best = h;
		}
	}
	return best;
}

std::size_t brute_i_n(const std::vector<std::size_t> &c, std::size_t threshold) {
	std::size_t n = 0;
	for (const auto x : c) {
		n += x > threshold ? 1 : 0;
	}
	return n;
}

std::size_t brute_h_alpha(const std::vector<double> &s, double alpha) {
	std::size_t best = 0;
	for (std::size_t p = 1; p <= s.size(); ++p) {
		std::size_t n = 0;
		for (const auto x : s) {
			n += x >= alpha * static_cast<double>(p) ? 1 : 0;
		}
		if (n >= p) {
			best = p;
		}
	}
	return best;
}

std::size_t brute_i_beta(const std::vector<double> &s, double beta) {
	std::size_t n = 0;
	for (const auto x : s) {
		n += x >= beta ? 1 : 0;
	}
	return n;
}

// ------------------------------------------------------------ criteria

Outcome criterion_1() {
	Checker c;
	// P: authors A and B, cited by two one-reference papers (PaperRank 2).
	// A also owns K1..K9, each cited by a one-reference paper: AuthorRank 10.
	std::vector<PaperRecord> records{rec("P", {"A", "B"}, {}, 0), rec("c1", {"C"}, {"P"}, 1), rec("c2", {"C"}, {"P"}, 1)};
	for (int k = 1; k <= 9; ++k) {
		records.push_back(rec("K" + std::to_string(k), {"A"}, {}, 0));
		auto citer = rec("d" + std::to_string(k), {"C"}, {}, 1);
		citer.references.push_back(P("K" + std::to_string(k)));
		records.push_back(citer);
	}
	auto state = init_state(build_graph(records), RefCountMode::Bibliography);
	c.expect(state.paper_rank(P("P")) == 2.0 && state.author_rank(AuthorId{"A"}) == 10.0, "bad starting state");
	apply_citation(state, {P("N"), 5}, P("P"));
	const double pr = state.paper_rank(P("P"));
	const double ar = state.author_rank(AuthorId{"A"});
	c.expect(std::abs(pr - 2.2) <= 1e-15, "PaperRank " + num(pr));
	c.expect(std::abs(ar - 10.1) <= 1e-15, "AuthorRank " + num(ar));
	c.outcome.detail = c.outcome.pass ? "PaperRank 2 -> " + num(pr) + ", AuthorRank 10 -> " + num(ar) : c.outcome.detail;
	return c.outcome;
}

Outcome criterion_2() {
	Checker c;
	std::mt19937_64 rng(2024);
	double worst = 0.0;
	for (int round = 0; round < 100; ++round) {
		const auto n = std::uniform_int_distribution<std::size_t>(1, 500)(rng);
		const auto g = build_graph(test::random_records(rng, n));
		for (const auto mode : {RefCountMode::Bibliography, RefCountMode::InDatabase}) {
			long double papers = 0.0L;
			for (const auto &[id, score] : paperrank_all(g, mode)) {
				papers += score;
			}
			long double authors = 0.0L;
			for (const auto &profile : author_profiles(g)) {
				authors += authorrank(g, profile, mode);
			}
			const double rel = static_cast<double>(std::abs(papers - authors) / std::max(1.0L, papers));
			worst = std::max(worst, rel);
			c.expect(rel <= 1e-9, "graph " + std::to_string(round) + " relative gap " + num(rel));
		}
	}
	if (c.outcome.pass) {
		c.outcome.detail = "100 graphs x 2 modes, worst relative gap " + num(worst);
	}
	return c.outcome;
}

Outcome criterion_3() {
	Checker c;
	std::mt19937_64 rng(303);
	auto records = test::random_records(rng, 300);
	auto state = init_state(build_graph(records), RefCountMode::InDatabase);
	double worst = 0.0;
	for (int k = 0; k < 100; ++k) {
		PaperRecord r;
		r.id = P("new" + std::to_string(k));
		r.authors = {AuthorId{"a" + std::to_string(k % 17)}};
		const auto pool = state.papers().size();
		const auto refs = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
		std::set<std::string> chosen;
		while (chosen.size() < refs) {
			auto it = state.papers().begin();
			std::advance(it, static_cast<long>(std::uniform_int_distribution<std::size_t>(0, pool - 1)(rng)));
			chosen.insert(it->first.str());
		}
		for (const auto &id : chosen) {
			r.references.push_back(P(id));
		}
		r.bibliography_length = static_cast<std::uint32_t>(refs + 5);
		const double before = state.paper_total();
		const auto delta = apply_new_paper(state, r);
		const double gain = state.paper_total() - before;
		worst = std::max({worst, std::abs(gain - 1.0), std::abs(delta.paper_total() - 1.0)});
		c.expect(std::abs(gain - 1.0) <= 1e-12, "insertion " + std::to_string(k) + " gained " + num(gain));
	}
	if (c.outcome.pass) {
		c.outcome.detail = "100 insertions, worst |gain - 1| " + num(worst);
	}
	return c.outcome;
}

Outcome criterion_4() {
	Checker c;
	std::mt19937_64 rng(404);
	std::vector<std::vector<PaperRecord>> graphs{test::g4_records()};
	for (int k = 0; k < 40; ++k) {
		graphs.push_back(test::random_records(rng, std::uniform_int_distribution<std::size_t>(1, 400)(rng)));
	}
	std::size_t with_dangling = 0;
	double worst = 0.0;
	for (const auto &records : graphs) {
		const auto g = build_graph(records);
		const auto s = build_matrix<double>(g);
		with_dangling += s.has_dangling() ? 1 : 0;
		const auto step = power_step(s, RankVector<double>::ones(s.dimension()));
		const auto library = paperrank_all(g, RefCountMode::InDatabase);
		const auto oracle = brute_paperrank(records, RefCountMode::InDatabase);
		for (std::size_t i = 0; i < g.size(); ++i) {
			const auto &id = g.record(i).id;
			const double expected = static_cast<double>(oracle.at(id.str()));
			const double dev = std::max(std::abs(library.at(id) - step.values[static_cast<Eigen::Index>(i)]),
				std::abs(library.at(id) - expected));
			worst = std::max(worst, dev);
			c.expect(dev <= 1e-12, "paper " + id.str() + " deviates by " + num(dev));
		}
	}
	if (c.outcome.pass) {
		c.outcome.detail = std::to_string(graphs.size()) + " graphs (" + std::to_string(with_dangling) +
			" with dangling papers), worst deviation " + num(worst);
	}
	return c.outcome;
}

/** One incremental update of criterion 5. */
struct Event {
	enum Kind { NewPaper, Citation } kind;
	std::size_t record = 0;
	PaperId citing;
	std::uint32_t bibliography_length = 0;
	PaperId cited;
	/** For a sighting: the new paper that is the citer, which must come later. */
	bool citer_is_new = false;
};

Outcome criterion_5() {
	Checker c;
	std::mt19937_64 rng(505);
	const std::size_t base_n = 200;
	const std::size_t new_n = 150;
	auto all = test::random_records(rng, base_n + new_n, 8);
	std::vector<PaperRecord> base(all.begin(), all.begin() + static_cast<long>(base_n));
	std::vector<PaperRecord> fresh(all.begin() + static_cast<long>(base_n), all.end());
	std::vector<PaperRecord> final_base = base;

	std::vector<Event> events;
	for (std::size_t k = 0; k < fresh.size(); ++k) {
		events.push_back({Event::NewPaper, k, {}, 0, {}, false});
	}
	auto has_ref = [](const PaperRecord &r, const PaperId &id) {
		return std::find(r.references.begin(), r.references.end(), id) != r.references.end();
	};
	// Extra citations from base papers that still have bibliography slack.
	for (int guard = 0; events.size() < 500 - 100 && guard < 100000; ++guard) {
		auto &citer = final_base[std::uniform_int_distribution<std::size_t>(0, base_n - 1)(rng)];
		if (citer.references.size() >= citer.bibliography_length) {
			continue;
		}
		const auto target = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)].id;
		if (target == citer.id || has_ref(citer, target)) {
			continue;
		}
		citer.references.push_back(target);
		events.push_back({Event::Citation, 0, citer.id, citer.bibliography_length, target, false});
	}
	// Sightings: a new paper seen citing a base paper before it is registered.
	std::set<std::string> sighted;
	for (int guard = 0; events.size() < 500 && guard < 100000; ++guard) {
		const auto k = std::uniform_int_distribution<std::size_t>(0, fresh.size() - 1)(rng);
		auto &citer = fresh[k];
		if (citer.references.size() >= citer.bibliography_length) {
			continue;
		}
		const auto target = base[std::uniform_int_distribution<std::size_t>(0, base_n - 1)(rng)].id;
		if (has_ref(citer, target)) {
			if (sighted.insert(citer.id.str() + ">" + target.str()).second) {
				events.push_back({Event::Citation, k, citer.id, citer.bibliography_length, target, true});
			}
			continue;
		}
		citer.references.push_back(target);
		sighted.insert(citer.id.str() + ">" + target.str());
		events.push_back({Event::Citation, k, citer.id, citer.bibliography_length, target, true});
	}
	c.expect(events.size() == 500, "generated " + std::to_string(events.size()) + " events");

	std::vector<PaperRecord> final_records = final_base;
	final_records.insert(final_records.end(), fresh.begin(), fresh.end());
	const auto final_graph = build_graph(final_records);

	double worst = 0.0;
	for (const auto mode : {RefCountMode::Bibliography, RefCountMode::InDatabase}) {
		for (int ordering = 0; ordering < 10; ++ordering) {
			auto order = events;
			std::shuffle(order.begin(), order.end(), rng);
			auto state = init_state(build_graph(base), mode);
			std::vector<Event> deferred;
			std::set<std::size_t> registered;
			std::function<void(const Event &)> apply = [&](const Event &e) {
				if (e.kind == Event::NewPaper) {
					// Sightings of this paper must precede its registration.
					for (const auto &s : order) {
						if (s.kind == Event::Citation && s.citer_is_new && s.record == e.record &&
							!state.has_citation(s.citing, s.cited)) {
							apply_citation(state, {s.citing, s.bibliography_length}, s.cited);
						}
					}
					apply_new_paper(state, fresh[e.record]);
					registered.insert(e.record);
					auto waiting = std::move(deferred);
					deferred.clear();
					for (const auto &d : waiting) {
						apply(d);
					}
					return;
				}
				if (e.citer_is_new) {
					if (!registered.contains(e.record) && !state.has_citation(e.citing, e.cited)) {
						apply_citation(state, {e.citing, e.bibliography_length}, e.cited);
					}
					return;
				}
				if (!state.contains(e.cited)) {
					deferred.push_back(e);
					return;
				}
				apply_citation(state, {e.citing, e.bibliography_length}, e.cited);
			};
			try {
				for (const auto &e : order) {
					apply(e);
				}
			} catch (const std::exception &ex) {
				c.expect(false, std::string("update failed: ") + ex.what());
				continue;
			}
			c.expect(deferred.empty(), "citations left unapplied");
			const auto drift = reconcile(state, final_graph);
			worst = std::max(worst, drift.max_drift());
			c.expect(drift.within(1e-9), std::string(to_string(mode)) + " ordering " + std::to_string(ordering) +
					" drift " + num(drift.max_drift()));
			// The engine must also agree with the definition, not just with itself.
			const auto oracle = brute_paperrank(final_records, mode);
			for (const auto &[id, paper] : state.papers()) {
				c.expect(std::abs(paper.rank - static_cast<double>(oracle.at(id.str()))) <= 1e-9,
					"paper " + id.str() + " disagrees with the brute-force oracle");
			}
		}
	}
	if (c.outcome.pass) {
		c.outcome.detail = "500 events x 10 orderings x 2 modes, worst drift " + num(worst);
	}
	return c.outcome;
}

Outcome criterion_6() {
	Checker c;
	std::mt19937_64 rng(606);
	double worst_residual = 0.0;
	long double worst_column = 0.0L;
	std::size_t max_iterations_seen = 0;
	for (int round = 0; round < 25; ++round) {
		const auto n = std::uniform_int_distribution<std::size_t>(3, 200)(rng);
		// A Hamiltonian cycle plus a chord closing a cycle of length n - 1 makes
		// the graph strongly connected and aperiodic; random chords on top.
		std::vector<std::set<std::size_t>> refs(n);
		for (std::size_t i = 0; i < n; ++i) {
			refs[i].insert((i + 1) % n);
		}
		refs[0].insert(2 % n);
		const auto extra = std::uniform_int_distribution<std::size_t>(0, 3 * n)(rng);
		for (std::size_t k = 0; k < extra; ++k) {
			const auto a = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
			const auto b = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
			if (a != b) {
				refs[a].insert(b);
			}
		}
		std::vector<PaperRecord> records;
		for (std::size_t i = 0; i < n; ++i) {
			PaperRecord r;
			r.id = P(test::paper_name(i));
			r.authors = {AuthorId{"a"}};
			for (const auto j : refs[i]) {
				r.references.push_back(P(test::paper_name(j)));
			}
			r.bibliography_length = static_cast<std::uint32_t>(refs[i].size());
			records.push_back(r);
		}
		const auto g = build_graph(records);
		const auto s = build_matrix<double>(g);
		c.expect(!s.has_dangling(), "unexpected dangling column");
		// Column sums by plain extended-precision summation over the stored entries.
		for (Eigen::Index j = 0; j < s.matrix().outerSize(); ++j) {
			long double sum = 0.0L;
			for (Eigen::SparseMatrix<double>::InnerIterator it(s.matrix(), j); it; ++it) {
				sum += it.value();
			}
			worst_column = std::max(worst_column, std::abs(sum - 1.0L));
		}
		c.expect(s.max_column_sum_deviation() <= 1e-15, "library column sum deviation " + num(s.max_column_sum_deviation()));
		const auto v = power_method(s, 1e-13, 200000);
		c.expect(v.converged, "power method did not converge on n = " + std::to_string(n));
		// Residual computed independently from the edge lists.
		std::vector<long double> sv(n, 0.0L);
		for (std::size_t j = 0; j < n; ++j) {
			const auto out = g.references(j);
			for (const auto i : out) {
				sv[i] += static_cast<long double>(v.values[static_cast<Eigen::Index>(j)]) / out.size();
			}
		}
		double residual = 0.0;
		for (std::size_t i = 0; i < n; ++i) {
			residual = std::max(residual,
				static_cast<double>(std::abs(sv[i] - static_cast<long double>(v.values[static_cast<Eigen::Index>(i)]))));
		}
		worst_residual = std::max(worst_residual, residual);
		max_iterations_seen = std::max(max_iterations_seen, v.iteration_count);
		c.expect(residual < 1e-10, "||Sv - v|| = " + num(residual) + " on n = " + std::to_string(n));
	}
	c.expect(worst_column <= 1e-15L, "column sum deviation " + num(static_cast<double>(worst_column)));
	if (c.outcome.pass) {
		c.outcome.detail = "25 graphs, worst ||Sv - v|| " + num(worst_residual) + ", worst column deviation " +
			num(static_cast<double>(worst_column)) + ", at most " + std::to_string(max_iterations_seen) + " iterations";
	}
	return c.outcome;
}

Outcome criterion_7() {
	Checker c;
	std::mt19937_64 rng(707);
	const std::vector<double> alphas{0.01, 0.05, 0.1, 0.25, 1.0};
	const std::vector<double> betas{0.01, 0.1, 0.5, 1.0};
	for (int round = 0; round < 1000; ++round) {
		const auto m = std::uniform_int_distribution<std::size_t>(0, 100)(rng);
		std::vector<std::size_t> cites(m);
		std::vector<double> shares(m);
		const auto cap = std::uniform_int_distribution<std::size_t>(0, 150)(rng);
		for (std::size_t k = 0; k < m; ++k) {
			cites[k] = std::uniform_int_distribution<std::size_t>(0, cap)(rng);
			// Mix of continuous shares and exact grid values, to hit the ties.
			shares[k] = (k % 3 == 0) ? 0.01 * std::uniform_int_distribution<int>(0, 120)(rng)
									 : std::uniform_real_distribution<double>(0.0, 2.0)(rng);
		}
		c.expect(h_index_of(cites) == brute_h(cites), "h-index, profile " + std::to_string(round));
		for (const std::size_t t : {0u, 10u, 20u}) {
			c.expect(i_n_of(cites, t) == brute_i_n(cites, t), "i_n, profile " + std::to_string(round));
		}
		for (const auto a : alphas) {
			c.expect(h_alpha_of(shares, a) == brute_h_alpha(shares, a), "h_alpha, profile " + std::to_string(round));
		}
		for (const auto b : betas) {
			c.expect(i_beta_of(shares, b) == brute_i_beta(shares, b), "i_beta, profile " + std::to_string(round));
		}
	}
	// The graph-level functions agree with the kernels on real profiles.
	const auto g = build_graph(test::random_records(rng, 300));
	const auto pr = paperrank_all(g, RefCountMode::Bibliography);
	for (const auto &profile : author_profiles(g)) {
		std::vector<std::size_t> cites;
		std::vector<double> shares;
		for (const auto &id : profile.papers) {
			cites.push_back(g.citers(g.index_of(id)).size());
			shares.push_back(pr.at(id) / static_cast<double>(g.record(id).authors.size()));
		}
		c.expect(h_index(g, profile) == brute_h(cites), "graph h-index of " + profile.id.str());
		c.expect(i_n_index(g, profile, 20) == brute_i_n(cites, 20), "graph i20 of " + profile.id.str());
		c.expect(h_alpha(g, profile, 0.01, RefCountMode::Bibliography) == brute_h_alpha(shares, 0.01),
			"graph h_alpha of " + profile.id.str());
		c.expect(i_beta(g, profile, 0.1, RefCountMode::Bibliography) == brute_i_beta(shares, 0.1),
			"graph i_beta of " + profile.id.str());
	}
	if (c.outcome.pass) {
		c.outcome.detail = "1000 random profiles plus " + std::to_string(author_profiles(g).size()) + " graph profiles";
	}
	return c.outcome;
}

Outcome criterion_8() {
	Checker c;
	std::mt19937_64 rng(808);
	std::size_t checked = 0;
	for (int round = 0; round < 30; ++round) {
		nlohmann::json fixture;
		std::map<std::string, std::vector<std::size_t>> counts;
		const auto authors = std::uniform_int_distribution<int>(1, 4)(rng);
		for (int a = 0; a < authors; ++a) {
			const std::string author = "au" + std::to_string(a);
			const auto papers = std::uniform_int_distribution<int>(1, 6)(rng);
			for (int p = 0; p < papers; ++p) {
				const std::string id = author + "-p" + std::to_string(p);
				fixture["authors"][author].push_back(id);
				fixture["papers"][id] = {{"authors", {author}}, {"references", nlohmann::json::array()},
					{"bibliography_length", 3}};
				const auto cited = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
				counts[author].push_back(cited);
				auto &list = fixture["citations"][id] = nlohmann::json::array();
				for (std::size_t k = 0; k < cited; ++k) {
					list.push_back({{"citing", id + "-c" + std::to_string(k)}, {"bibliography_length", 4}});
				}
			}
		}
		for (const std::size_t page : {1u, 2u, 3u, 7u, 25u}) {
			ApiEndpointSet endpoints;
			endpoints.base_url = "fixture:";
			endpoints.page_size = page;
			CitationApiClient client(endpoints, FixtureBackend::from_json_text(fixture.dump()));
			RankState state(RefCountMode::Bibliography);
			for (const auto &[author, per_paper] : counts) {
				const auto result = sync_author(client, state, AuthorId{author});
				std::size_t expected = 1;
				for (const auto cited : per_paper) {
					expected += (cited + page - 1) / page;
				}
				const auto &q = result.queries;
				c.expect(q.author_lookups + q.citation_pages == expected,
					author + " page " + std::to_string(page) + ": " +
						std::to_string(q.author_lookups + q.citation_pages) + " != " + std::to_string(expected));
				c.expect(q.paper_lookups == per_paper.size(), "paper detail calls for " + author);
				++checked;
			}
		}
	}
	if (c.outcome.pass) {
		c.outcome.detail = std::to_string(checked) +
			" author syncs: author + citation-page queries = 1 + sum ceil(#Cit/page), plus one detail call per paper";
	}
	return c.outcome;
}

struct CliRun {
	int code;
	std::string out;
};

CliRun cli(std::vector<std::string> args) {
	args.insert(args.begin(), "paperrank");
	std::vector<const char *> argv;
	for (const auto &a : args) {
		argv.push_back(a.c_str());
	}
	std::ostringstream out;
	std::ostringstream err;
	const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
	return {code, out.str() + err.str()};
}

std::string slurp(const fs::path &path) {
	std::ifstream in(path, std::ios::binary);
	std::ostringstream s;
	s << in.rdbuf();
	return s.str();
}

fs::path scratch_dir(const std::string &name) {
	const auto dir = fs::temp_directory_path() / ("paperrank-acceptance-" + name);
	fs::remove_all(dir);
	fs::create_directories(dir);
	return dir;
}

Outcome criterion_9() {
	Checker c;
	std::mt19937_64 rng(909);
	const auto dir = scratch_dir("determinism");
	auto records = test::random_records(rng, 400, 10, 60);
	for (std::size_t k = 0; k < records.size(); k += 3) {
		records[k].subject = k % 2 == 0 ? "MATH" : "PHYS";
	}
	std::vector<std::string> files;
	for (int k = 0; k < 5; ++k) {
		std::shuffle(records.begin(), records.end(), rng);
		for (auto &r : records) {
			std::shuffle(r.references.begin(), r.references.end(), rng);
		}
		const auto path = dir / ("perm" + std::to_string(k) + ".jsonl");
		std::ofstream out(path);
		write_snapshot(records, out);
		files.push_back(path.string());
	}
	std::size_t comparisons = 0;
	const std::vector<std::vector<std::string>> variants{
		{"rank"},
		{"rank", "--mode", "indb", "--window", "2000:2015", "--alpha", "0.05", "--beta", "0.2"},
		{"scatter"},
		{"scatter", "--x", "h", "--y", "authorrank", "--mode", "indb"},
		{"scatter", "--x", "sumcit", "--y", "sumpr", "--exclude", "a3"},
	};
	for (const auto &variant : variants) {
		for (const auto *format : {"table", "csv", "json"}) {
			std::string reference;
			for (std::size_t f = 0; f < files.size(); ++f) {
				for (int repeat = 0; repeat < 2; ++repeat) {
					auto args = variant;
					args.insert(args.begin() + 1, files[f]);
					args.insert(args.end(), {"--format", format});
					const auto r = cli(args);
					c.expect(r.code == 0, "exit status " + std::to_string(r.code) + ": " + r.out);
					if (reference.empty()) {
						reference = r.out;
					}
					c.expect(r.out == reference, variant[0] + " output differs (" + format + ")");
					++comparisons;
				}
			}
		}
	}
	fs::remove_all(dir);
	if (c.outcome.pass) {
		c.outcome.detail = std::to_string(comparisons) + " runs over 5 permutations, identical per variant";
	}
	return c.outcome;
}

Outcome criterion_10() {
	Checker c;
	const std::string fixtures = PAPERRANK_FIXTURES;
	auto base = init_state(build_graph(load_snapshot_file(fixtures + "/sync_base.jsonl").records),
		RefCountMode::Bibliography);
	for (const auto *name : {"api_unchanged.json", "api_new_citation.json", "api_new_paper.json"}) {
		auto state = base;
		ApiEndpointSet endpoints;
		endpoints.base_url = "fixture:";
		endpoints.page_size = 3;
		CitationApiClient client(endpoints, FixtureBackend::from_file(fixtures + "/" + name));
		for (const auto *author : {"X", "Y"}) {
			sync_author(client, state, AuthorId{author});
			const auto after_first = state;
			const auto again = sync_author(client, state, AuthorId{author});
			bool all_zero = true;
			for (const auto &[id, d] : again.delta.paper_deltas) {
				all_zero = all_zero && d == 0.0;
			}
			for (const auto &[id, d] : again.delta.author_deltas) {
				all_zero = all_zero && d == 0.0;
			}
			c.expect(all_zero, std::string(name) + ": repeated sync of " + author + " changed scores");
			c.expect(state == after_first, std::string(name) + ": repeated sync changed the state");
		}
	}
	// Through the command line: the state file bytes after a repeat.
	const auto dir = scratch_dir("sync");
	const auto state_file = (dir / "state.txt").string();
	c.expect(cli({"init", fixtures + "/sync_base.jsonl", "--state", state_file}).code == 0, "init failed");
	for (const auto *config : {"config_unchanged.json", "config_new_citation.json", "config_new_paper.json"}) {
		const auto first = cli({"sync", "X", "Y", "--state", state_file, "--config", fixtures + "/" + config});
		c.expect(first.code == 0, std::string("sync failed: ") + first.out);
		const auto bytes = slurp(state_file);
		const auto second = cli({"sync", "X", "Y", "--state", state_file, "--config", fixtures + "/" + config});
		c.expect(second.code == 0, "repeated sync failed");
		c.expect(second.out.find(" new citations,") != std::string::npos &&
				second.out.find("  paper ") == std::string::npos && second.out.find("  author ") == std::string::npos,
			std::string(config) + ": repeated sync printed deltas");
		c.expect(slurp(state_file) == bytes, std::string(config) + ": state file changed on repeat");
	}
	fs::remove_all(dir);
	if (c.outcome.pass) {
		c.outcome.detail = "3 fixtures x 2 authors in-process, 3 fixtures through the CLI state file";
	}
	return c.outcome;
}

} // namespace

int main() {
	const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
		{"worked example: 2 -> 2.2 and 10 -> 10.1 to 1e-15", criterion_1},
		{"conservation of PaperRank and AuthorRank mass", criterion_2},
		{"unit mass of a fully resolved new paper", criterion_3},
		{"first-step identity PaperRank = S e", criterion_4},
		{"incremental updates match batch recomputation", criterion_5},
		{"power method and column sums of S", criterion_6},
		{"classical indices match brute force", criterion_7},
		{"query budget model", criterion_8},
		{"byte-identical rank and scatter output", criterion_9},
		{"sync idempotence", criterion_10},
	};
	int failures = 0;
	for (std::size_t k = 0; k < criteria.size(); ++k) {
		const auto start = std::chrono::steady_clock::now();
		Outcome outcome;
		try {
			outcome = criteria[k].second();
		} catch (const std::exception &e) {
			outcome = {false, std::string("exception: ") + e.what()};
		}
		const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		failures += outcome.pass ? 0 : 1;
		std::printf("%s criterion %2zu: %s [%.2fs] %s\n", outcome.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
			seconds, outcome.detail.c_str());
	}
	std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
	return failures == 0 ? 0 : 1;
}
