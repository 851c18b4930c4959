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

#include "pdf_objects.hpp"

#include <zlib.h>

#include <cctype>
#include <cstring>
#include <stdexcept>

namespace inkscore::pdf {
namespace {

inline bool is_pdf_ws(uint8_t c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\0';
}

inline bool is_delim(uint8_t c) {
    return c == '(' || c == ')' || c == '<' || c == '>' || c == '[' || c == ']' ||
           c == '{' || c == '}' || c == '/' || c == '%';
}

inline bool is_regular(uint8_t c) { return !is_pdf_ws(c) && !is_delim(c); }

[[noreturn]] void fail(const std::string& what, size_t pos) {
    throw std::runtime_error(what + " at offset " + std::to_string(pos));
}

}  // namespace

void Lexer::skip_ws() {
    while (pos_ < s_.size()) {
        const uint8_t c = uint8_t(s_[pos_]);
        if (is_pdf_ws(c)) {
            ++pos_;
        } else if (c == '%') {  // comment to end of line
            while (pos_ < s_.size() && s_[pos_] != '\n' && s_[pos_] != '\r') ++pos_;
        } else {
            break;
        }
    }
}

std::string Lexer::next_keyword() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && is_regular(uint8_t(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
}

bool Lexer::accept_keyword(std::string_view kw) {
    skip_ws();
    const size_t save = pos_;
    if (next_keyword() == kw) return true;
    pos_ = save;
    return false;
}

Object Lexer::parse_object() {
    skip_ws();
    if (eof()) fail("unexpected end of file", pos_);
    const uint8_t c = uint8_t(s_[pos_]);
    if (c == '<') return parse_dict_or_hex_string();
    if (c == '[') return parse_array();
    if (c == '/') return parse_name();
    if (c == '(') return parse_literal_string();
    if (std::isdigit(c) || c == '+' || c == '-' || c == '.') return parse_number_or_ref();

    const std::string kw = next_keyword();
    if (kw == "true" || kw == "false") {
        Object o;
        o.kind = Object::Kind::Bool;
        o.boolean = (kw == "true");
        return o;
    }
    if (kw == "null") return Object::make_null();
    fail("unexpected token '" + kw + "'", pos_);
}

Object Lexer::parse_dict_or_hex_string() {
    if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '<') {
        pos_ += 2;  // "<<"
        Object o;
        o.kind = Object::Kind::Dict;
        for (;;) {
            skip_ws();
            if (pos_ + 1 < s_.size() && s_[pos_] == '>' && s_[pos_ + 1] == '>') {
                pos_ += 2;
                return o;
            }
            Object key = parse_name();
            Object val = parse_object();
            o.dict.emplace(std::move(key.text), std::move(val));
        }
    }
    // hex string <...>
    ++pos_;
    Object o;
    o.kind = Object::Kind::String;
    int hi = -1;
    while (pos_ < s_.size() && s_[pos_] != '>') {
        const uint8_t c = uint8_t(s_[pos_++]);
        if (is_pdf_ws(c)) continue;
        const int v = std::isdigit(c) ? c - '0'
                      : (c >= 'a' && c <= 'f') ? c - 'a' + 10
                      : (c >= 'A' && c <= 'F') ? c - 'A' + 10
                                               : -1;
        if (v < 0) fail("bad hex digit in string", pos_);
        if (hi < 0) {
            hi = v;
        } else {
            o.text += char(hi * 16 + v);
            hi = -1;
        }
    }
    if (pos_ >= s_.size()) fail("unterminated hex string", pos_);
    ++pos_;  // '>'
    if (hi >= 0) o.text += char(hi * 16);
    return o;
}

Object Lexer::parse_array() {
    ++pos_;  // '['
    Object o;
    o.kind = Object::Kind::Array;
    for (;;) {
        skip_ws();
        if (eof()) fail("unterminated array", pos_);
        if (s_[pos_] == ']') {
            ++pos_;
            return o;
        }
        o.array.push_back(parse_object());
    }
}

Object Lexer::parse_name() {
    skip_ws();
    if (eof() || s_[pos_] != '/') fail("expected name", pos_);
    ++pos_;
    Object o;
    o.kind = Object::Kind::Name;
    while (pos_ < s_.size() && is_regular(uint8_t(s_[pos_]))) {
        char c = s_[pos_++];
        if (c == '#' && pos_ + 1 < s_.size()) {  // #xx escape
            auto hex = [](char h) -> int {
                if (std::isdigit(uint8_t(h))) return h - '0';
                if (h >= 'a' && h <= 'f') return h - 'a' + 10;
                if (h >= 'A' && h <= 'F') return h - 'A' + 10;
                return -1;
            };
            const int a = hex(s_[pos_]), b = hex(s_[pos_ + 1]);
            if (a >= 0 && b >= 0) {
                c = char(a * 16 + b);
                pos_ += 2;
            }
        }
        o.text += c;
    }
    return o;
}

Object Lexer::parse_literal_string() {
    ++pos_;  // '('
    Object o;
    o.kind = Object::Kind::String;
    int depth = 1;
    while (pos_ < s_.size()) {
        char c = s_[pos_++];
        if (c == '\\') {
            if (pos_ >= s_.size()) break;
            const char e = s_[pos_++];
            switch (e) {
                case 'n': o.text += '\n'; break;
                case 'r': o.text += '\r'; break;
                case 't': o.text += '\t'; break;
                case 'b': o.text += '\b'; break;
                case 'f': o.text += '\f'; break;
                case '(': o.text += '('; break;
                case ')': o.text += ')'; break;
                case '\\': o.text += '\\'; break;
                case '\r':
                    if (pos_ < s_.size() && s_[pos_] == '\n') ++pos_;
                    break;  // line continuation
                case '\n': break;
                default:
                    if (e >= '0' && e <= '7') {  // octal, up to 3 digits
                        int v = e - '0';
                        for (int k = 0; k < 2 && pos_ < s_.size() && s_[pos_] >= '0' &&
                                        s_[pos_] <= '7';
                             ++k)
                            v = v * 8 + (s_[pos_++] - '0');
                        o.text += char(v & 0xFF);
                    } else {
                        o.text += e;
                    }
            }
        } else if (c == '(') {
            ++depth;
            o.text += c;
        } else if (c == ')') {
            if (--depth == 0) return o;
            o.text += c;
        } else {
            o.text += c;
        }
    }
    fail("unterminated literal string", pos_);
}

Object Lexer::parse_number_or_ref() {
    const size_t start = pos_;
    std::string num;
    while (pos_ < s_.size() && is_regular(uint8_t(s_[pos_]))) num += s_[pos_++];
    char* end = nullptr;
    const double v = std::strtod(num.c_str(), &end);
    if (end == num.c_str()) fail("bad number '" + num + "'", start);

    // Non-negative integer may start an "n g R" indirect reference.
    const bool integral = num.find('.') == std::string::npos && v >= 0;
    if (integral) {
        const size_t save = pos_;
        skip_ws();
        size_t p = pos_;
        std::string gen;
        while (p < s_.size() && std::isdigit(uint8_t(s_[p]))) gen += s_[p++];
        if (!gen.empty()) {
            size_t q = p;
            while (q < s_.size() && is_pdf_ws(uint8_t(s_[q]))) ++q;
            if (q < s_.size() && s_[q] == 'R' &&
                (q + 1 >= s_.size() || !is_regular(uint8_t(s_[q + 1])))) {
                pos_ = q + 1;
                return Object::make_ref(int(v), std::stoi(gen));
            }
        }
        pos_ = save;
    }
    return Object::make_number(v);
}

std::string zlib_inflate(std::string_view data, size_t expected_hint) {
    z_stream zs{};
    if (inflateInit(&zs) != Z_OK) throw std::runtime_error("inflateInit failed");
    std::string out;
    out.reserve(expected_hint ? expected_hint : data.size() * 4);
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
    zs.avail_in = uInt(data.size());
    char buf[1 << 15];
    int rc = Z_OK;
    do {
        zs.next_out = reinterpret_cast<Bytef*>(buf);
        zs.avail_out = sizeof(buf);
        rc = inflate(&zs, Z_NO_FLUSH);
        if (rc != Z_OK && rc != Z_STREAM_END) {
            inflateEnd(&zs);
            throw std::runtime_error("corrupt Flate stream");
        }
        out.append(buf, sizeof(buf) - zs.avail_out);
    } while (rc != Z_STREAM_END && (zs.avail_in > 0 || zs.avail_out == 0));
    inflateEnd(&zs);
    if (rc != Z_STREAM_END) throw std::runtime_error("truncated Flate stream");
    return out;
}

std::string zlib_deflate(std::string_view data) {
    uLongf bound = compressBound(uLong(data.size()));
    std::string out(bound, '\0');
    if (compress2(reinterpret_cast<Bytef*>(out.data()), &bound,
                  reinterpret_cast<const Bytef*>(data.data()), uLong(data.size()),
                  Z_BEST_COMPRESSION) != Z_OK)
        throw std::runtime_error("deflate failed");
    out.resize(bound);
    return out;
}

}  // namespace inkscore::pdf
