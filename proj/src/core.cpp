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

#include "hopfpeak/core.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>

namespace hopfpeak {

namespace {
int initial_cap() {
    const char* env = std::getenv("HOPFPEAK_DEGREE_CAP");
    if (env == nullptr || *env == '\0') return 5;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > kHardDegreeLimit)
        throw std::invalid_argument("HOPFPEAK_DEGREE_CAP must be an integer in [1, 8]");
    return static_cast<int>(v);
}

std::atomic<int>& cap_storage() {
    static std::atomic<int> cap{initial_cap()};
    return cap;
}
}  // namespace

int degree_cap() { return cap_storage().load(); }

void set_degree_cap(int cap) {
    if (cap < 1 || cap > kHardDegreeLimit) throw std::invalid_argument("degree cap must lie in [1, 8]");
    cap_storage().store(cap);
}

void require_degree(int n, const char* what) {
    if (n > degree_cap())
        throw std::out_of_range(std::string(what) + ": degree " + std::to_string(n) + " exceeds the cap " +
                                std::to_string(degree_cap()));
}

Check& Report::slot(const std::string& name) {
    for (auto& c : checks_)
        if (c.name == name) return c;
    checks_.push_back(Check{name, true, 0, {}});
    return checks_.back();
}

void Report::record(const std::string& name, bool ok, const std::string& witness_if_failed) {
    Check& c = slot(name);
    ++c.cases;
    if (!ok && c.passed) {
        c.passed = false;
        c.witness = witness_if_failed;
    }
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& oc : other.checks_) {
        Check& c = slot(prefix + oc.name);
        c.cases += oc.cases;
        if (!oc.passed && c.passed) {
            c.passed = false;
            c.witness = oc.witness;
        }
    }
}

bool Report::passed() const {
    for (const auto& c : checks_)
        if (!c.passed) return false;
    return true;
}

const Check* Report::find(const std::string& name) const {
    for (const auto& c : checks_)
        if (c.name == name) return &c;
    return nullptr;
}

std::string Report::summary() const {
    std::string s = title_.empty() ? std::string() : title_ + "\n";
    for (const auto& c : checks_) {
        s += (c.passed ? "  ok    " : "  FAIL  ") + c.name + " (" + std::to_string(c.cases) + " cases)";
        if (!c.passed) s += ": " + c.witness;
        s += "\n";
    }
    return s;
}

}  // namespace hopfpeak
