/* Copyright 2026 The viralcond authors
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

#pragma once

#include <string>

namespace vcond {

/// Shortest decimal string that round-trips the value (std::to_chars).
/// Locale-independent, deterministic.
std::string format_double(double x);

/// Fixed-point with at most `max_decimals` digits, trailing zeros and a
/// bare trailing dot trimmed: 11.375 -> "11.38", 25.0 -> "25", -0.001 -> "0".
std::string format_fixed_trim(double x, int max_decimals);

/// CSV field quoting: wraps in double quotes when the text contains a
/// comma, quote, or newline.
std::string csv_escape(const std::string& field);

}  // namespace vcond
