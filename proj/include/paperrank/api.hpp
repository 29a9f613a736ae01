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
 * Client for a Scopus-shaped citation-metadata API, reduced to three
 * endpoints (see docs/api.md):
 *
 *   GET /authors/{author}/papers               paper ids of an author
 *   GET /papers/{paper}                        one paper record
 *   GET /papers/{paper}/citations?count&cursor citing papers, paginated
 *
 * Transports are pluggable: plain HTTP, or an in-process fixture backend
 * that serves canned JSON and can script rate-limit and failure answers.
 */

#ifndef PAPERRANK_API_HPP
#define PAPERRANK_API_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paperrank/graph.hpp"
#include "paperrank/incremental.hpp"
#include "paperrank/rank.hpp"

namespace paperrank {

struct ApiEndpointSet {
	/** "http://host:port" or "fixture:<path to fixture json>". */
	std::string base_url;
	/** Sent as the X-ELS-APIKey header; never persisted. */
	std::string credentials;
	std::size_t page_size = 25;
	/** Retries after a rate-limit answer before giving up. */
	std::size_t retry_cap = 3;
	/** First backoff delay; doubles on each retry. */
	std::chrono::milliseconds backoff{200};
};

/**
 * Reads the endpoint configuration from an optional JSON file
 * (keys base_url, api_key, page_size, retry_cap, backoff_ms), then applies
 * the environment overrides PAPERRANK_BASE_URL, PAPERRANK_API_KEY,
 * PAPERRANK_PAGE_SIZE and PAPERRANK_RETRY_CAP.
 */
ApiEndpointSet load_endpoints(const std::optional<std::filesystem::path> &config_file);

using QueryParams = std::vector<std::pair<std::string, std::string>>;

struct ApiResponse {
	/** HTTP status; 0 when no answer was received. */
	int status = 0;
	std::string body;
};

class ApiTransport {
public:
	virtual ~ApiTransport() = default;
	virtual ApiResponse get(const std::string &path, const QueryParams &params) = 0;
};

/**
 * Canned-response backend. The fixture file is a JSON object with
 * "authors" (author id -> paper ids), "papers" (paper id -> record),
 * "citations" (paper id -> [{citing, bibliography_length}]) and an
 * optional "script" of forced answers ({path, status, times}).
 */
class FixtureBackend : public ApiTransport {
public:
	static std::unique_ptr<FixtureBackend> from_file(const std::filesystem::path &path);
	static std::unique_ptr<FixtureBackend> from_json_text(const std::string &text);

	~FixtureBackend() override;

	ApiResponse get(const std::string &path, const QueryParams &params) override;

	/** Requests served so far, including scripted failures. */
	std::size_t request_count() const;

private:
	FixtureBackend();

	struct Data;
	std::unique_ptr<Data> data_;
	mutable std::mutex mutex_;
};

/** HTTP transport over cpp-httplib. */
class HttpTransport : public ApiTransport {
public:
	HttpTransport(std::string base_url, std::string credentials);
	~HttpTransport() override;

	ApiResponse get(const std::string &path, const QueryParams &params) override;

private:
	struct Impl;
	std::unique_ptr<Impl> impl_;
};

/** Transport selected by the scheme of @p endpoints.base_url. */
std::unique_ptr<ApiTransport> make_transport(const ApiEndpointSet &endpoints);

/** Successful queries, by kind. */
struct QueryBudget {
	std::size_t author_lookups = 0;
	std::size_t paper_lookups = 0;
	std::size_t citation_pages = 0;

	std::size_t queries_used() const noexcept { return author_lookups + paper_lookups + citation_pages; }

	QueryBudget operator-(const QueryBudget &o) const noexcept {
		return {author_lookups - o.author_lookups, paper_lookups - o.paper_lookups,
			citation_pages - o.citation_pages};
	}
	friend bool operator==(const QueryBudget &, const QueryBudget &) = default;
};

/** One entry of a citation listing; the citer's bibliography length comes inline. */
struct CitationEntry {
	PaperId citing;
	std::uint32_t bibliography_length = 0;

	friend bool operator==(const CitationEntry &, const CitationEntry &) = default;
};

struct AuthorFetch {
	AuthorProfile profile;
	/** Full records of the profile papers, in profile order. */
	std::vector<PaperRecord> records;
};

class CitationApiClient {
public:
	CitationApiClient(ApiEndpointSet endpoints, std::unique_ptr<ApiTransport> transport);

	/**
	 * Paper list plus one detail call per paper.
	 * @throws NotFoundError, TransportError, RateLimitError, ProtocolError
	 */
	AuthorFetch fetch_author(const AuthorId &author);

	/**
	 * Every citer of @p paper, walking the cursor pages; an uncited paper
	 * still costs one page.
	 * @throws ProtocolError if the server repeats a cursor.
	 */
	std::vector<CitationEntry> fetch_citations(const PaperId &paper);

	const QueryBudget &budget() const noexcept { return budget_; }
	const ApiEndpointSet &endpoints() const noexcept { return endpoints_; }

private:
	std::string call(const std::string &path, const QueryParams &params);

	ApiEndpointSet endpoints_;
	std::unique_ptr<ApiTransport> transport_;
	QueryBudget budget_;
};

struct SyncResult {
	RankDelta delta;
	QueryBudget queries;
	std::size_t new_papers = 0;
	std::size_t new_citations = 0;
};

/**
 * Brings @p state up to date for one author: unseen papers of the author
 * are registered, unseen citations of the author's papers applied.
 * Everything is fetched before anything is applied, and the updates run on
 * a copy that replaces @p state only on success; on failure @p state is
 * untouched and a rerun picks up where it stopped.
 */
SyncResult sync_author(CitationApiClient &client, RankState &state, const AuthorId &author);

} // namespace paperrank

#endif
