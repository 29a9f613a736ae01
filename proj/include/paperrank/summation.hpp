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

#ifndef PAPERRANK_SUMMATION_HPP
#define PAPERRANK_SUMMATION_HPP

#include <cmath>
#include <ranges>

namespace paperrank {

/// Neumaier-compensated accumulator; used for every global total.
template <typename Scalar>
class CompensatedSum {
public:
	CompensatedSum &operator+=(Scalar x) noexcept {
		const Scalar t = sum_ + x;
		if (std::abs(sum_) >= std::abs(x)) {
			carry_ += (sum_ - t) + x;
		} else {
			carry_ += (x - t) + sum_;
		}
		sum_ = t;
		return *this;
	}

	Scalar value() const noexcept { return sum_ + carry_; }

private:
	Scalar sum_{0};
	Scalar carry_{0};
};

template <std::ranges::input_range Range>
auto compensated_sum(const Range &values) {
	using Scalar = std::ranges::range_value_t<Range>;
	CompensatedSum<Scalar> acc;
	for (const auto &v : values) {
		acc += v;
	}
	return acc.value();
}

} // namespace paperrank

#endif
