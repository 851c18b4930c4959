#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <string>

namespace inkscore::testing {

// Unique scratch directory, removed on scope exit.
struct TempDir {
    std::filesystem::path path;

    explicit TempDir(const std::string& tag) {
        static std::atomic<uint64_t> counter{0};
        const auto stamp =
            std::chrono::steady_clock::now().time_since_epoch().count();
        path = std::filesystem::temp_directory_path() /
               ("inkscore_" + tag + "_" + std::to_string(stamp) + "_" +
                std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path);
    }

    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
};

}  // namespace inkscore::testing
