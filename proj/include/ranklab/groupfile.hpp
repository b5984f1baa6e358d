#pragma once

/// Canonical on-disk formats: group files, matrix group files, rank
/// reports, and the content-addressed result cache.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ranklab/constructions.hpp"
#include "ranklab/crosscheck.hpp"
#include "ranklab/perm.hpp"

namespace ranklab {

using ordered_json = nlohmann::ordered_json;

/// Canonical group file: keys degree, generators, name (optional),
/// descriptor (optional), in that order; compact arrays.
inline std::string serialize_group(const GroupSpec& s, const std::string& descriptor = "") {
    ordered_json j;
    j["degree"] = s.degree;
    ordered_json gens = ordered_json::array();
    for (const auto& g : s.generators) gens.push_back(g.images);
    j["generators"] = std::move(gens);
    if (!s.name.empty()) j["name"] = s.name;
    if (!descriptor.empty()) j["descriptor"] = descriptor;
    return j.dump() + "\n";
}

struct ParsedGroupFile {
    GroupSpec spec;
    std::string descriptor;
};

inline ParsedGroupFile parse_group(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    ParsedGroupFile out;
    out.spec.degree = j.at("degree").get<std::uint32_t>();
    for (const auto& arr : j.at("generators")) {
        Perm p{arr.get<std::vector<std::uint32_t>>()};
        out.spec.generators.push_back(std::move(p));
    }
    if (j.contains("name")) out.spec.name = j["name"].get<std::string>();
    if (j.contains("descriptor")) out.descriptor = j["descriptor"].get<std::string>();
    out.spec.validate();
    return out;
}

inline std::string serialize_matrix_group(const MatrixGroupSpec& m) {
    ordered_json j;
    j["d"] = m.d;
    j["modulus"] = m.modulus;
    ordered_json gens = ordered_json::array();
    for (const auto& g : m.generators) gens.push_back(g);
    j["generators"] = std::move(gens);
    if (!m.name.empty()) j["name"] = m.name;
    return j.dump() + "\n";
}

inline ordered_json report_to_json(const RankReport& r) {
    ordered_json j;
    j["target"] = r.target;
    j["formula_value"] = r.formula_value;
    if (r.brute_value) j["brute_value"] = *r.brute_value;
    if (r.witness) {
        ordered_json w = ordered_json::array();
        for (const auto& p : *r.witness) w.push_back(p.images);
        j["witness"] = std::move(w);
    }
    j["status"] = to_string(r.status);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

// --- result cache --------------------------------------------------------

inline constexpr const char* kToolVersion = "ranklab-1.0.0";

inline std::string content_key(const std::string& descriptor) {
    std::uint64_t h = 1469598103934665603ull;
    std::string s = descriptor + "|" + kToolVersion;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// On-disk cache keyed by content hash; writes are atomic via a temp file
/// and rename.  Directory from RANKLAB_CACHE, default .ranklab-cache/.
class ResultCache {
  public:
    explicit ResultCache(std::string dir = "") {
        if (dir.empty()) {
            const char* env = std::getenv("RANKLAB_CACHE");
            dir = env ? env : ".ranklab-cache";
        }
        dir_ = dir;
    }

    std::optional<ordered_json> lookup(const std::string& descriptor) const {
        auto path = entry_path(descriptor);
        std::ifstream in(path);
        if (!in) return std::nullopt;
        std::stringstream ss;
        ss << in.rdbuf();
        ordered_json j = ordered_json::parse(ss.str(), nullptr, false);
        if (j.is_discarded()) return std::nullopt;
        if (j.value("tool_version", "") != kToolVersion) return std::nullopt;
        if (j.value("key", "") != content_key(descriptor)) return std::nullopt;
        return j.at("payload");
    }

    void store(const std::string& descriptor, const ordered_json& payload) const {
        std::filesystem::create_directories(dir_);
        ordered_json j;
        j["key"] = content_key(descriptor);
        j["tool_version"] = kToolVersion;
        j["timestamp"] =
            static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::seconds>(
                                           std::chrono::system_clock::now().time_since_epoch())
                                           .count());
        j["payload"] = payload;
        auto path = entry_path(descriptor);
        auto tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            out << j.dump() << "\n";
        }
        std::filesystem::rename(tmp, path);
    }

    const std::string& dir() const { return dir_; }

  private:
    std::filesystem::path entry_path(const std::string& descriptor) const {
        return std::filesystem::path(dir_) / (content_key(descriptor) + ".json");
    }

    std::string dir_;
};

} // namespace ranklab
