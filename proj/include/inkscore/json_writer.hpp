/*
Copyright 2026 The inkscore Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace inkscore {

/// Streaming JSON writer that preserves key insertion order and serializes
/// doubles in their shortest round-trip form. Report files must be byte-stable
/// across runs and re-derivable, which rules out library writers that reorder
/// keys or print a fixed digit count.
class JsonWriter {
public:
    explicit JsonWriter(int indent = 2) : indent_(indent) {}

    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(std::string_view k);
    JsonWriter& value(double v);
    JsonWriter& value(int64_t v);
    JsonWriter& value(int v) { return value(int64_t(v)); }
    JsonWriter& value(size_t v) { return value(int64_t(v)); }
    JsonWriter& value(bool v);
    JsonWriter& value(std::string_view v);
    JsonWriter& value(const char* v) { return value(std::string_view(v)); }

    /// Final document text, newline-terminated.
    std::string str() const;

    static std::string escape(std::string_view s);

private:
    void pre_value();
    void newline_indent();

    struct Frame {
        bool is_object = false;
        bool first = true;
        bool key_pending = false;
    };

    std::string out_;
    std::vector<Frame> stack_;
    int indent_ = 2;
};

}  // namespace inkscore
