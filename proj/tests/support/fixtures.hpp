#pragma once

#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <tuple>

#include "f2coh/named_basis.hpp"
#include "f2coh/resolution.hpp"
#include "f2coh/yoneda.hpp"

namespace fixtures {

using namespace f2coh;

inline GroupPtr group(const std::string& label) {
    const auto s = parse_group_spec(label);
    if (!s) throw std::invalid_argument("fixtures: bad group " + label);
    return make_group(*s);
}

// Complexes are memoised; building them dominates test time.
inline ComplexPtr complex(const std::string& label, int window = 10, std::string builder = {}) {
    static std::map<std::tuple<std::string, std::string, int>, ComplexPtr> memo;
    const auto g = group(label);
    if (builder.empty()) builder = default_builder(*g);
    auto& slot = memo[{label, builder, window}];
    if (!slot) slot = make_complex(build_resolution(g, builder, window));
    return slot;
}

inline const NamedCohomology& named(const std::string& label, int window = 10) {
    static std::map<std::pair<std::string, int>, std::unique_ptr<NamedCohomology>> memo;
    auto& slot = memo[{label, window}];
    if (!slot) slot = std::make_unique<NamedCohomology>(complex(label, window));
    return *slot;
}

class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() / ("f2coh-test-" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

}  // namespace fixtures
