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
 * Exception hierarchy shared by every paperrank module.
 */

#ifndef PAPERRANK_ERRORS_HPP
#define PAPERRANK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paperrank {

/** Base class of all errors raised by the library. */
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/** A paper, author or resource id could not be resolved. */
class NotFoundError : public Error {
public:
	using Error::Error;
};

/** Input records violate a structural invariant (duplicate ids, bad counts). */
class ValidationError : public Error {
public:
	using Error::Error;
};

/** Records are individually valid but contradict each other. */
class DataInconsistencyError : public Error {
public:
	using Error::Error;
};

/** A stored state failed its integrity footer or conservation check. */
class IntegrityError : public Error {
public:
	using Error::Error;
};

/** Malformed text input; carries the 1-based line number. */
class ParseError : public Error {
public:
	ParseError(std::size_t line, const std::string &what)
		: Error("line " + std::to_string(line) + ": " + what), line_(line) {}

	std::size_t line() const noexcept { return line_; }

private:
	std::size_t line_;
};

/** Transport-level failure talking to the citation API. Retryable. */
class TransportError : public Error {
public:
	using Error::Error;

	bool retryable() const noexcept { return true; }
};

/** The citation API kept answering "rate limited" past the retry cap. */
class RateLimitError : public TransportError {
public:
	using TransportError::TransportError;
};

/** The citation API answered with something that breaks the wire protocol. */
class ProtocolError : public Error {
public:
	using Error::Error;
};

} // namespace paperrank

#endif
