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

#include "paperrank/api.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "record_json.hpp"

namespace paperrank {

namespace {

	using nlohmann::json;

	std::size_t parse_size(const std::string &text, const char *what) {
		std::size_t value = 0;
		const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
		if (ec != std::errc{} || ptr != text.data() + text.size()) {
			throw ValidationError(std::string(what) + " must be a non-negative integer, got '" + text + "'");
		}
		return value;
	}

	const char *env(const char *name) {
		const char *value = std::getenv(name);
		return value != nullptr && *value != '\0' ? value : nullptr;
	}

	std::string param(const QueryParams &params, const std::string &key) {
		for (const auto &[k, v] : params) {
			if (k == key) {
				return v;
			}
		}
		return {};
	}

	ApiResponse json_response(int status, const json &body) {
		return {status, body.dump()};
	}

	ApiResponse error_response(int status, const std::string &message) {
		return json_response(status, json{{"error", message}});
	}

	std::vector<std::string> split_path(const std::string &path) {
		std::vector<std::string> parts;
		std::string part;
		std::istringstream in(path);
		while (std::getline(in, part, '/')) {
			if (!part.empty()) {
				parts.push_back(part);
			}
		}
		return parts;
	}

} // namespace

ApiEndpointSet load_endpoints(const std::optional<std::filesystem::path> &config_file) {
	ApiEndpointSet endpoints;
	if (config_file) {
		std::ifstream in(*config_file);
		if (!in) {
			throw NotFoundError("cannot open config file " + config_file->string());
		}
		json config;
		try {
			config = json::parse(in);
			if (auto it = config.find("base_url"); it != config.end()) {
				endpoints.base_url = it->get<std::string>();
			}
			if (auto it = config.find("api_key"); it != config.end()) {
				endpoints.credentials = it->get<std::string>();
			}
			if (auto it = config.find("page_size"); it != config.end()) {
				endpoints.page_size = it->get<std::size_t>();
			}
			if (auto it = config.find("retry_cap"); it != config.end()) {
				endpoints.retry_cap = it->get<std::size_t>();
			}
			if (auto it = config.find("backoff_ms"); it != config.end()) {
				endpoints.backoff = std::chrono::milliseconds(it->get<long>());
			}
		} catch (const json::exception &e) {
			throw ValidationError("invalid config file " + config_file->string() + ": " + e.what());
		}
		// Relative fixture paths are taken relative to the config file.
		const std::string scheme = "fixture:";
		if (endpoints.base_url.starts_with(scheme)) {
			std::filesystem::path fixture = endpoints.base_url.substr(scheme.size());
			if (fixture.is_relative()) {
				endpoints.base_url = scheme + (config_file->parent_path() / fixture).string();
			}
		}
	}
	if (const char *v = env("PAPERRANK_BASE_URL")) {
		endpoints.base_url = v;
	}
	if (const char *v = env("PAPERRANK_API_KEY")) {
		endpoints.credentials = v;
	}
	if (const char *v = env("PAPERRANK_PAGE_SIZE")) {
		endpoints.page_size = parse_size(v, "PAPERRANK_PAGE_SIZE");
	}
	if (const char *v = env("PAPERRANK_RETRY_CAP")) {
		endpoints.retry_cap = parse_size(v, "PAPERRANK_RETRY_CAP");
	}
	if (endpoints.page_size == 0) {
		throw ValidationError("page_size must be at least 1");
	}
	if (endpoints.base_url.empty()) {
		throw ValidationError("no API base_url configured");
	}
	return endpoints;
}

// ---------------------------------------------------------------- fixture

struct FixtureBackend::Data {
	struct Scripted {
		std::string path;
		int status;
		std::size_t remaining;
	};

	json authors;
	json papers;
	json citations;
	std::vector<Scripted> script;
	std::size_t requests = 0;
};

FixtureBackend::FixtureBackend() : data_(std::make_unique<Data>()) {}
FixtureBackend::~FixtureBackend() = default;

std::unique_ptr<FixtureBackend> FixtureBackend::from_json_text(const std::string &text) {
	std::unique_ptr<FixtureBackend> backend(new FixtureBackend());
	try {
		const json fixture = json::parse(text);
		backend->data_->authors = fixture.value("authors", json::object());
		backend->data_->papers = fixture.value("papers", json::object());
		backend->data_->citations = fixture.value("citations", json::object());
		for (const auto &entry : fixture.value("script", json::array())) {
			backend->data_->script.push_back(
				{entry.at("path").get<std::string>(), entry.at("status").get<int>(), entry.value("times", std::size_t{1})});
		}
	} catch (const json::exception &e) {
		throw ValidationError(std::string("invalid fixture: ") + e.what());
	}
	return backend;
}

std::unique_ptr<FixtureBackend> FixtureBackend::from_file(const std::filesystem::path &path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) {
		throw NotFoundError("cannot open fixture " + path.string());
	}
	std::ostringstream text;
	text << in.rdbuf();
	return from_json_text(text.str());
}

std::size_t FixtureBackend::request_count() const {
	std::lock_guard lock(mutex_);
	return data_->requests;
}

ApiResponse FixtureBackend::get(const std::string &path, const QueryParams &params) {
	std::lock_guard lock(mutex_);
	++data_->requests;
	for (auto &scripted : data_->script) {
		if (scripted.remaining > 0 && (scripted.path == path || scripted.path == "*")) {
			--scripted.remaining;
			return error_response(scripted.status, "scripted answer");
		}
	}

	const auto parts = split_path(path);
	if (parts.size() == 3 && parts[0] == "authors" && parts[2] == "papers") {
		const auto it = data_->authors.find(parts[1]);
		if (it == data_->authors.end()) {
			return error_response(404, "author " + parts[1] + " not found");
		}
		return json_response(200, json{{"author", parts[1]}, {"papers", *it}});
	}
	if (parts.size() == 2 && parts[0] == "papers") {
		const auto it = data_->papers.find(parts[1]);
		if (it == data_->papers.end()) {
			return error_response(404, "paper " + parts[1] + " not found");
		}
		json record = *it;
		record["id"] = parts[1];
		return json_response(200, record);
	}
	if (parts.size() == 3 && parts[0] == "papers" && parts[2] == "citations") {
		if (!data_->papers.contains(parts[1]) && !data_->citations.contains(parts[1])) {
			return error_response(404, "paper " + parts[1] + " not found");
		}
		const json all = data_->citations.value(parts[1], json::array());
		std::size_t count = 25;
		std::size_t offset = 0;
		try {
			if (auto c = param(params, "count"); !c.empty()) {
				count = parse_size(c, "count");
			}
			if (auto c = param(params, "cursor"); !c.empty() && c != "*") {
				offset = parse_size(c, "cursor");
			}
		} catch (const ValidationError &e) {
			return error_response(400, e.what());
		}
		if (count == 0) {
			return error_response(400, "count must be positive");
		}
		json page = json::array();
		for (std::size_t k = offset; k < all.size() && k < offset + count; ++k) {
			page.push_back(all[k]);
		}
		json next = nullptr;
		if (offset + count < all.size()) {
			next = std::to_string(offset + count);
		}
		return json_response(200, json{{"total", all.size()}, {"entries", page}, {"next", next}});
	}
	return error_response(404, "no route for " + path);
}

// ---------------------------------------------------------------- http

struct HttpTransport::Impl {
	httplib::Client client;
	std::string credentials;

	Impl(const std::string &base_url, std::string key) : client(base_url), credentials(std::move(key)) {
		client.set_connection_timeout(5);
		client.set_read_timeout(30);
	}
};

HttpTransport::HttpTransport(std::string base_url, std::string credentials)
	: impl_(std::make_unique<Impl>(base_url, std::move(credentials))) {}

HttpTransport::~HttpTransport() = default;

ApiResponse HttpTransport::get(const std::string &path, const QueryParams &params) {
	httplib::Params query;
	for (const auto &[k, v] : params) {
		query.emplace(k, v);
	}
	httplib::Headers headers;
	if (!impl_->credentials.empty()) {
		headers.emplace("X-ELS-APIKey", impl_->credentials);
	}
	headers.emplace("Accept", "application/json");
	auto result = impl_->client.Get(path, query, headers);
	if (!result) {
		return {0, httplib::to_string(result.error())};
	}
	return {result->status, result->body};
}

std::unique_ptr<ApiTransport> make_transport(const ApiEndpointSet &endpoints) {
	const std::string fixture = "fixture:";
	if (endpoints.base_url.starts_with(fixture)) {
		return FixtureBackend::from_file(endpoints.base_url.substr(fixture.size()));
	}
	if (endpoints.base_url.starts_with("http://") || endpoints.base_url.starts_with("https://")) {
		return std::make_unique<HttpTransport>(endpoints.base_url, endpoints.credentials);
	}
	throw ValidationError("unsupported API base_url '" + endpoints.base_url + "'");
}

// ---------------------------------------------------------------- client

CitationApiClient::CitationApiClient(ApiEndpointSet endpoints, std::unique_ptr<ApiTransport> transport)
	: endpoints_(std::move(endpoints)), transport_(std::move(transport)) {
	if (endpoints_.page_size == 0) {
		throw ValidationError("page_size must be at least 1");
	}
	if (!transport_) {
		throw ValidationError("citation API client needs a transport");
	}
}

std::string CitationApiClient::call(const std::string &path, const QueryParams &params) {
	auto delay = endpoints_.backoff;
	for (std::size_t attempt = 0;; ++attempt) {
		const ApiResponse response = transport_->get(path, params);
		switch (response.status) {
		case 200:
			return response.body;
		case 404:
			throw NotFoundError("GET " + path + ": not found");
		case 429:
			if (attempt >= endpoints_.retry_cap) {
				throw RateLimitError("GET " + path + ": still rate limited after " +
					std::to_string(endpoints_.retry_cap) + " retries");
			}
			if (delay.count() > 0) {
				std::this_thread::sleep_for(delay);
			}
			delay *= 2;
			continue;
		case 0:
			throw TransportError("GET " + path + ": " + response.body);
		default:
			if (response.status >= 500) {
				throw TransportError("GET " + path + ": server error " + std::to_string(response.status));
			}
			throw ProtocolError("GET " + path + ": unexpected status " + std::to_string(response.status));
		}
	}
}

AuthorFetch CitationApiClient::fetch_author(const AuthorId &author) {
	AuthorFetch out{{author, {}}, {}};
	std::vector<PaperId> ids;
	try {
		const json listing = json::parse(call("/authors/" + author.str() + "/papers", {}));
		++budget_.author_lookups;
		for (const auto &id : listing.at("papers")) {
			ids.emplace_back(id.get<std::string>());
		}
	} catch (const json::exception &e) {
		throw ProtocolError("author listing for " + author.str() + ": " + e.what());
	} catch (const ValidationError &e) {
		throw ProtocolError("author listing for " + author.str() + ": " + e.what());
	}
	std::sort(ids.begin(), ids.end());
	ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

	for (const auto &id : ids) {
		const std::string body = call("/papers/" + id.str(), {});
		++budget_.paper_lookups;
		PaperRecord record;
		try {
			record = record_from_json(json::parse(body));
		} catch (const json::exception &e) {
			throw ProtocolError("paper " + id.str() + ": " + e.what());
		} catch (const ValidationError &e) {
			throw ProtocolError("paper " + id.str() + ": " + e.what());
		}
		if (record.id != id) {
			throw ProtocolError("asked for paper " + id.str() + ", got " + record.id.str());
		}
		if (std::find(record.authors.begin(), record.authors.end(), author) == record.authors.end()) {
			throw ProtocolError("paper " + id.str() + " listed for author " + author.str() +
				" does not carry that author");
		}
		out.profile.papers.push_back(id);
		out.records.push_back(std::move(record));
	}
	return out;
}

std::vector<CitationEntry> CitationApiClient::fetch_citations(const PaperId &paper) {
	std::vector<CitationEntry> entries;
	std::set<std::string> seen_cursors;
	std::string cursor = "*";
	for (;;) {
		seen_cursors.insert(cursor);
		const std::string body = call("/papers/" + paper.str() + "/citations",
			{{"count", std::to_string(endpoints_.page_size)}, {"cursor", cursor}});
		++budget_.citation_pages;
		try {
			const json page = json::parse(body);
			for (const auto &entry : page.at("entries")) {
				entries.push_back({PaperId(entry.at("citing").get<std::string>()),
					detail::require_count(entry.at("bibliography_length"), "bibliography_length")});
			}
			const auto &next = page.at("next");
			if (next.is_null()) {
				break;
			}
			cursor = next.get<std::string>();
		} catch (const json::exception &e) {
			throw ProtocolError("citations of " + paper.str() + ": " + e.what());
		} catch (const ValidationError &e) {
			throw ProtocolError("citations of " + paper.str() + ": " + e.what());
		}
		if (seen_cursors.contains(cursor)) {
			throw ProtocolError("citations of " + paper.str() + ": server repeated cursor '" + cursor + "'");
		}
	}
	return entries;
}

// ---------------------------------------------------------------- sync

SyncResult sync_author(CitationApiClient &client, RankState &state, const AuthorId &author) {
	const QueryBudget before = client.budget();

	AuthorFetch fetched = client.fetch_author(author);
	std::vector<std::pair<PaperId, std::vector<CitationEntry>>> listings;
	for (const auto &paper : fetched.profile.papers) {
		auto entries = client.fetch_citations(paper);
		std::sort(entries.begin(), entries.end(),
			[](const CitationEntry &a, const CitationEntry &b) { return a.citing < b.citing; });
		listings.emplace_back(paper, std::move(entries));
	}

	SyncResult result;
	RankState working = state;
	for (const auto &record : fetched.records) {
		if (!working.contains(record.id)) {
			result.delta += apply_new_paper(working, record);
			++result.new_papers;
		}
	}
	for (const auto &[paper, entries] : listings) {
		for (const auto &entry : entries) {
			if (working.has_citation(entry.citing, paper)) {
				continue;
			}
			result.delta += apply_citation(working, {entry.citing, entry.bibliography_length}, paper);
			++result.new_citations;
		}
	}
	state = std::move(working);
	result.queries = client.budget() - before;
	return result;
}

} // namespace paperrank
