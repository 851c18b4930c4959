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

#include <stdexcept>
#include <string>

namespace inkscore {

// Fatal configuration problems (bad flags, unreadable input directory,
// invalid config file). The CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A single document could not be processed (corrupt or encrypted PDF,
// undecodable image). The batch continues; the run exits with code 1.
class DocumentError : public std::runtime_error {
public:
    explicit DocumentError(const std::string& msg) : std::runtime_error(msg) {}
};

// A preprocessing contract violation. Carries the page label in the message.
class PreprocessError : public std::runtime_error {
public:
    explicit PreprocessError(const std::string& msg) : std::runtime_error(msg) {}
};

// Backend could not be reached or answered garbage (timeout, malformed body).
class BackendUnavailable : public std::runtime_error {
public:
    BackendUnavailable(std::string backend_id, const std::string& what)
        : std::runtime_error("backend '" + backend_id + "' unavailable: " + what),
          backend_id_(std::move(backend_id)) {}
    const std::string& backend_id() const { return backend_id_; }

private:
    std::string backend_id_;
};

// Backend answered, but the payload violates the wire contract
// (e.g. sentiment probabilities that do not sum to 1 within tolerance).
class BackendProtocolError : public std::runtime_error {
public:
    BackendProtocolError(std::string backend_id, const std::string& what)
        : std::runtime_error("backend '" + backend_id + "' protocol error: " + what),
          backend_id_(std::move(backend_id)) {}
    const std::string& backend_id() const { return backend_id_; }

private:
    std::string backend_id_;
};

}  // namespace inkscore
