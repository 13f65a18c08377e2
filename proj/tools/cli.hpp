/*
 * Copyright 2026 The OSP Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef OSP_TOOLS_CLI_HPP_
#define OSP_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "osp/polynomial.hpp"
#include "osp/types.hpp"

namespace osp::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitBudget = 4;

// Decimal or 0x-hex with an optional leading '-'. Throws Error(kParse).
BigInt parse_integer(std::string_view token);

// "a0,a1,...,aN". Throws Error(kParse) on empty or non-numeric tokens.
Polynomial parse_poly_spec(std::string_view spec);

// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace osp::cli

#endif  // OSP_TOOLS_CLI_HPP_
