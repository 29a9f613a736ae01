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


// Serves a fixture file over HTTP so the client can be exercised end to end.

#include <iostream>
#include <string>

// Eigen first: <resolv.h>, pulled in by httplib, defines a macro that clashes
// with Eigen parameter names.
#include "paperrank/api.hpp"

#include <CLI11.hpp>
#include <httplib.h>

int main(int argc, char **argv) {
	CLI::App app{"HTTP server for PaperRank API fixtures"};
	std::string fixture;
	std::string host = "127.0.0.1";
	int port = 8080;
	app.add_option("fixture", fixture, "fixture JSON file")->required();
	app.add_option("--host", host)->capture_default_str();
	app.add_option("--port", port)->capture_default_str();
	CLI11_PARSE(app, argc, argv);

	try {
		auto backend = paperrank::FixtureBackend::from_file(fixture);
		httplib::Server server;
		server.Get(".*", [&](const httplib::Request &req, httplib::Response &res) {
			paperrank::QueryParams params(req.params.begin(), req.params.end());
			const auto answer = backend->get(req.path, params);
			res.status = answer.status;
			res.set_content(answer.body, "application/json");
		});
		std::cerr << "serving " << fixture << " on " << host << ':' << port << '\n';
		if (!server.listen(host, port)) {
			std::cerr << "cannot listen on " << host << ':' << port << '\n';
			return 1;
		}
	} catch (const std::exception &e) {
		std::cerr << e.what() << '\n';
		return 1;
	}
	return 0;
}
