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

#include "inkscore/json_writer.hpp"

#include <cassert>
#include <cstdio>

#include "inkscore/util.hpp"

namespace inkscore {

std::string JsonWriter::escape(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += char(c);
                }
        }
    }
    return out;
}

void JsonWriter::newline_indent() {
    out_ += '\n';
    out_.append(stack_.size() * size_t(indent_), ' ');
}

// Emits separators/indentation owed before a value or container opener.
void JsonWriter::pre_value() {
    if (stack_.empty()) return;
    Frame& f = stack_.back();
    if (f.is_object) {
        assert(f.key_pending && "object members need key() first");
        f.key_pending = false;
        return;  // key() already emitted separators
    }
    if (!f.first) out_ += ',';
    f.first = false;
    newline_indent();
}

JsonWriter& JsonWriter::key(std::string_view k) {
    assert(!stack_.empty() && stack_.back().is_object);
    Frame& f = stack_.back();
    if (!f.first) out_ += ',';
    f.first = false;
    newline_indent();
    out_ += '"';
    out_ += escape(k);
    out_ += "\": ";
    f.key_pending = true;
    return *this;
}

JsonWriter& JsonWriter::begin_object() {
    pre_value();
    out_ += '{';
    stack_.push_back(Frame{true, true, false});
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    assert(!stack_.empty() && stack_.back().is_object);
    bool empty = stack_.back().first;
    stack_.pop_back();
    if (!empty) newline_indent();
    out_ += '}';
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    pre_value();
    out_ += '[';
    stack_.push_back(Frame{false, true, false});
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    assert(!stack_.empty() && !stack_.back().is_object);
    bool empty = stack_.back().first;
    stack_.pop_back();
    if (!empty) newline_indent();
    out_ += ']';
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    pre_value();
    out_ += double_shortest(v);
    return *this;
}

JsonWriter& JsonWriter::value(int64_t v) {
    pre_value();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    pre_value();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
    pre_value();
    out_ += '"';
    out_ += escape(v);
    out_ += '"';
    return *this;
}

std::string JsonWriter::str() const {
    assert(stack_.empty() && "unbalanced writer");
    return out_ + "\n";
}

}  // namespace inkscore
