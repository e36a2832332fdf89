/* Copyright 2026 The hopfpeak Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
 // Command-line front end. run() is the whole program minus process setup.

#ifndef HOPFPEAK_TOOLS_CLI_HPP
#define HOPFPEAK_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hopfpeak::cli {

// args excludes the program name. Returns 0 on success, 1 when a
// verification fails and 2 on malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfpeak::cli

#endif  // HOPFPEAK_TOOLS_CLI_HPP
