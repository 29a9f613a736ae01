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


#ifndef PAPERRANK_CLI_HPP
#define PAPERRANK_CLI_HPP

#include <ostream>

namespace paperrank {

/** Exit status of run_cli. */
enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

/**
 * The paperrank command line, with its streams injected so it can run
 * in-process. Verbs: rank, paper, scatter, verify, validate, init, sync,
 * reconcile; `paperrank --help` lists the flags.
 */
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace paperrank

#endif
