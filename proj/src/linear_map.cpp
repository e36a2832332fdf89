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

#include "hopfpeak/linear_map.hpp"

namespace hopfpeak {

std::optional<BasisTag> dual_tag(const BasisTag& t) {
    static const std::vector<std::pair<BasisTag, BasisTag>> pairs = {
        {{"qsym", "M"}, {"nsym", "H"}},
        {{"qsym", "L"}, {"nsym", "R"}},
        {{"ssym", "F"}, {"ssym*", "F*"}},
        {{"ssym", "M"}, {"ssym*", "M*"}},
    };
    for (const auto& [a, b] : pairs) {
        if (t == a) return b;
        if (t == b) return a;
    }
    return std::nullopt;
}

}  // namespace hopfpeak
