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
 // Runtime degree cap, thread-safe memo tables and verification reports.

#ifndef HOPFPEAK_CORE_HPP
#define HOPFPEAK_CORE_HPP

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace hopfpeak {

inline constexpr int kHardDegreeLimit = 8;

// Defaults to 5, or HOPFPEAK_DEGREE_CAP when set.
int degree_cap();
// Throws std::invalid_argument for caps outside [1, kHardDegreeLimit].
void set_degree_cap(int cap);
// Throws std::out_of_range when n exceeds the configured cap.
void require_degree(int n, const char* what);

template <class Key, class Value>
class Memo {
public:
    // The compute callback runs without the lock held so it may recurse into
    // the same table; the first stored value wins.
    template <class F>
    const Value& get(const Key& key, F&& compute) const {
        {
            std::lock_guard<std::mutex> g(lock_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        Value v = compute();
        std::lock_guard<std::mutex> g(lock_);
        return table_.try_emplace(key, std::move(v)).first->second;
    }

    std::size_t size() const {
        std::lock_guard<std::mutex> g(lock_);
        return table_.size();
    }

    void clear() {
        std::lock_guard<std::mutex> g(lock_);
        table_.clear();
    }

private:
    mutable std::mutex lock_;
    mutable std::map<Key, Value> table_;
};

struct Check {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string witness;  // first failure
};

class Report {
public:
    Report() = default;
    explicit Report(std::string title) : title_(std::move(title)) {}

    const std::string& title() const { return title_; }
    const std::vector<Check>& checks() const { return checks_; }

    // Records one case of the named check.
    void record(const std::string& name, bool ok, const std::string& witness_if_failed = {});
    void merge(const Report& other, const std::string& prefix = {});

    bool passed() const;
    const Check* find(const std::string& name) const;
    std::string summary() const;

private:
    Check& slot(const std::string& name);

    std::string title_;
    std::vector<Check> checks_;
};

}  // namespace hopfpeak

#endif  // HOPFPEAK_CORE_HPP
