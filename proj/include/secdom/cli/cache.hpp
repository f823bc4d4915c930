#ifndef SECDOM_CLI_CACHE_HPP
#define SECDOM_CLI_CACHE_HPP

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "secdom/canonical.hpp"
#include "secdom/graph.hpp"
#include "secdom/graph6.hpp"
#include "secdom/solvers.hpp"

namespace secdom::cli {

inline constexpr std::string_view kSolverVersion = "secdom-solver/1";
inline constexpr std::string_view kCacheFileName = "runs.ndjson";
inline constexpr const char* kCacheDirEnv = "SECDOM_CACHE_DIR";

/// One solved instance as persisted in the cache file.
struct RunRecord {
    /// "c:<canonical graph6>" for orders up to kCanonicalCap, else "l:<graph6>".
    std::string key;
    Parameter kind = Parameter::domination;
    std::size_t value = 0;
    /// Members in the labeling the key refers to.
    VertexSet witness;
    std::string version;
    double wall_ms = 0;
};

/// Key plus the map from key positions back to the query graph's vertices.
struct CacheKey {
    std::string key;
    std::vector<Vertex> to_query;
};

inline CacheKey cache_key(const Graph& g) {
    if (g.order() <= kCanonicalCap) {
        auto canon = canonical_labeling(g);
        return {"c:" + canon.key, std::move(canon.order)};
    }
    std::vector<Vertex> identity(g.order());
    for (Vertex v = 0; v < g.order(); ++v) identity[v] = v;
    return {"l:" + to_graph6(g), std::move(identity)};
}

inline nlohmann::json to_json(const RunRecord& r) {
    return {{"key", r.key},
            {"parameter", to_string(r.kind)},
            {"value", r.value},
            {"witness", r.witness.members()},
            {"version", r.version},
            {"wall_ms", r.wall_ms}};
}

inline std::optional<RunRecord> record_from_json(const nlohmann::json& j) {
    try {
        RunRecord r;
        r.key = j.at("key").get<std::string>();
        const auto p = j.at("parameter").get<std::string>();
        if (p == "gamma") r.kind = Parameter::domination;
        else if (p == "gamma_s") r.kind = Parameter::secure_domination;
        else return std::nullopt;
        r.value = j.at("value").get<std::size_t>();
        for (auto v : j.at("witness").get<std::vector<std::size_t>>()) {
            if (v >= kMaxOrder) return std::nullopt;
            r.witness.insert(v);
        }
        r.version = j.at("version").get<std::string>();
        r.wall_ms = j.value("wall_ms", 0.0);
        return r;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

/// Resolution order: explicit directory, then $SECDOM_CACHE_DIR. Empty means disabled.
inline std::filesystem::path resolve_cache_dir(const std::string& explicit_dir) {
    if (!explicit_dir.empty()) return explicit_dir;
    if (const char* env = std::getenv(kCacheDirEnv); env && *env) return env;
    return {};
}

/// Append-only newline-delimited JSON store. Reads take a shared flock,
/// appends an exclusive one. Lines that fail to parse, or carry another
/// solver version, are ignored.
class RunCache {
public:
    explicit RunCache(std::filesystem::path dir) : path_(std::move(dir) / kCacheFileName) {
        std::filesystem::create_directories(path_.parent_path());
        load();
    }

    const std::filesystem::path& path() const noexcept { return path_; }
    std::size_t size() const noexcept { return records_.size(); }

    std::optional<RunRecord> find(const std::string& key, Parameter kind) const {
        auto it = records_.find({key, kind});
        if (it == records_.end()) return std::nullopt;
        return it->second;
    }

    void append(const RunRecord& r) {
        const std::string line = to_json(r).dump() + "\n";
        const int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
        if (fd < 0) throw std::runtime_error("cannot open cache " + path_.string() + ": " + std::strerror(errno));
        ::flock(fd, LOCK_EX);
        std::size_t done = 0;
        while (done < line.size()) {
            const auto n = ::write(fd, line.data() + done, line.size() - done);
            if (n < 0) {
                if (errno == EINTR) continue;
                break;
            }
            done += static_cast<std::size_t>(n);
        }
        ::flock(fd, LOCK_UN);
        ::close(fd);
        if (done != line.size()) throw std::runtime_error("short write to cache " + path_.string());
        records_[{r.key, r.kind}] = r;
    }

private:
    void load() {
        const int fd = ::open(path_.c_str(), O_RDONLY);
        if (fd < 0) return;
        ::flock(fd, LOCK_SH);
        std::string content;
        char buf[1 << 14];
        for (;;) {
            const auto n = ::read(fd, buf, sizeof buf);
            if (n < 0 && errno == EINTR) continue;
            if (n <= 0) break;
            content.append(buf, static_cast<std::size_t>(n));
        }
        ::flock(fd, LOCK_UN);
        ::close(fd);
        std::istringstream in(content);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded()) continue;
            auto r = record_from_json(j);
            if (r && r->version == kSolverVersion) records_[{r->key, r->kind}] = *r;
        }
    }

    std::filesystem::path path_;
    std::map<std::pair<std::string, Parameter>, RunRecord> records_;
};

}  // namespace secdom::cli

#endif  // SECDOM_CLI_CACHE_HPP
