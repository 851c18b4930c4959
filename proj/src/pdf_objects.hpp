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

// Internal PDF object model and tokenizer for the scanned-script reader.
// Covers the classic-xref profile only; nothing here is public API.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace inkscore::pdf {

struct Object {
    enum class Kind { Null, Bool, Number, String, Name, Array, Dict, Stream, Ref };

    Kind kind = Kind::Null;
    bool boolean = false;
    double number = 0.0;
    std::string text;  // String payload or Name (without the slash)
    std::vector<Object> array;
    std::map<std::string, Object> dict;  // also the stream dict
    std::string stream_data;             // raw, still-filtered bytes
    int ref_num = 0;
    int ref_gen = 0;

    bool is(Kind k) const { return kind == k; }
    bool is_name(std::string_view n) const { return kind == Kind::Name && text == n; }
    const Object* find(const std::string& key) const {
        auto it = dict.find(key);
        return it == dict.end() ? nullptr : &it->second;
    }

    static Object make_null() { return {}; }
    static Object make_number(double v) {
        Object o;
        o.kind = Kind::Number;
        o.number = v;
        return o;
    }
    static Object make_name(std::string n) {
        Object o;
        o.kind = Kind::Name;
        o.text = std::move(n);
        return o;
    }
    static Object make_ref(int num, int gen = 0) {
        Object o;
        o.kind = Kind::Ref;
        o.ref_num = num;
        o.ref_gen = gen;
        return o;
    }
};

// Pull tokenizer/parser over the raw file bytes. Position-based so the xref
// machinery can seek.
class Lexer {
public:
    Lexer(std::string_view bytes, size_t pos = 0) : s_(bytes), pos_(pos) {}

    size_t pos() const { return pos_; }
    void seek(size_t p) { pos_ = p; }
    bool eof() const { return pos_ >= s_.size(); }

    void skip_ws();
    /// Next bare keyword/operator token ("obj", "stream", "cm", ...); empty at EOF.
    std::string next_keyword();
    bool accept_keyword(std::string_view kw);

    /// Parses one object (dict/array/number/name/string/bool/null/ref).
    /// Indirect references "n g R" are folded into Object::Kind::Ref.
    /// Throws std::runtime_error on malformed input.
    Object parse_object();

    std::string_view bytes() const { return s_; }

private:
    Object parse_dict_or_hex_string();
    Object parse_array();
    Object parse_name();
    Object parse_literal_string();
    Object parse_number_or_ref();

    std::string_view s_;
    size_t pos_ = 0;
};

// zlib helpers (PDF FlateDecode payloads are zlib streams).
std::string zlib_inflate(std::string_view data, size_t expected_hint = 0);
std::string zlib_deflate(std::string_view data);

}  // namespace inkscore::pdf
