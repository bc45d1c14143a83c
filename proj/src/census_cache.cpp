#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "genergy/enumeration.hpp"
#include "genergy/errors.hpp"
#include "genergy/graph6.hpp"

namespace genergy {

namespace {

std::filesystem::path meta_path(const std::filesystem::path& path) {
    std::filesystem::path meta = path;
    meta += ".meta";
    return meta;
}

std::string body_of(const std::vector<std::string>& graphs) {
    std::string body;
    for (const std::string& s : graphs) {
        body += s;
        body += '\n';
    }
    return body;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

std::string census_digest(const std::vector<std::string>& graphs) { return "fnv1a64:" + fnv1a_hex(body_of(graphs)); }

std::filesystem::path census_cache_path(const std::filesystem::path& dir, int n, int e) {
    return dir / ("connected_n" + std::to_string(n) + "_e" + std::to_string(e) + ".g6");
}

void census_cache_store(const GraphClassCensus& census, const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << body_of(census.graphs);
        if (!out) throw std::runtime_error("cannot write census file " + path.string());
    }
    std::ofstream meta(meta_path(path), std::ios::binary | std::ios::trunc);
    meta << "n=" << census.n << '\n'
         << "e=" << census.e << '\n'
         << "count=" << census.graphs.size() << '\n'
         << "digest=" << census_digest(census.graphs) << '\n'
         << "generated_at=" << census.generated_at << '\n'
         << "generator=" << census.generator << '\n';
    if (!meta) throw std::runtime_error("cannot write census metadata " + meta_path(path).string());
}

std::optional<GraphClassCensus> census_cache_load(int n, int e, const std::filesystem::path& path) {
    if (!std::filesystem::exists(path) || !std::filesystem::exists(meta_path(path))) return std::nullopt;

    std::map<std::string, std::string> fields;
    {
        std::ifstream meta(meta_path(path), std::ios::binary);
        std::string line;
        while (std::getline(meta, line)) {
            const auto eq = line.find('=');
            if (eq == std::string::npos) throw CorruptCacheError("malformed metadata line: " + line);
            fields[line.substr(0, eq)] = line.substr(eq + 1);
        }
    }
    auto field = [&](const std::string& key) {
        auto it = fields.find(key);
        if (it == fields.end()) throw CorruptCacheError("metadata missing '" + key + "' in " + path.string());
        return it->second;
    };
    if (field("n") != std::to_string(n) || field("e") != std::to_string(e)) {
        throw CorruptCacheError("metadata describes a different (n,e) in " + path.string());
    }

    std::string body;
    {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        body = buf.str();
    }
    if (!body.empty() && body.back() != '\n') throw CorruptCacheError("census file truncated: " + path.string());

    GraphClassCensus census;
    census.n = n;
    census.e = e;
    census.generated_at = field("generated_at");
    census.generator = field("generator");
    std::istringstream lines(body);
    std::string line;
    while (std::getline(lines, line)) census.graphs.push_back(line);

    if (std::to_string(census.graphs.size()) != field("count")) {
        throw CorruptCacheError("census count mismatch in " + path.string() + ": expected " + field("count") +
                                ", found " + std::to_string(census.graphs.size()));
    }
    if (census_digest(census.graphs) != field("digest")) {
        throw CorruptCacheError("census digest mismatch in " + path.string());
    }
    for (const std::string& s : census.graphs) {
        Graph g;
        try {
            g = graph6_decode(s);
        } catch (const ParseError& err) {
            throw CorruptCacheError(std::string("undecodable census entry: ") + err.what());
        }
        if (g.order() != n || g.size() != e) throw CorruptCacheError("census entry " + s + " has wrong (n,e)");
    }
    return census;
}

GraphClassCensus enumerate_cached(int n, int e, const std::optional<std::filesystem::path>& cache_dir,
                                  const EnumerationOptions& options) {
    if (!cache_dir) return enumerate_connected(n, e, options);
    const std::filesystem::path path = census_cache_path(*cache_dir, n, e);
    if (auto hit = census_cache_load(n, e, path)) return *std::move(hit);
    GraphClassCensus census = enumerate_connected(n, e, options);
    census_cache_store(census, path);
    return census;
}

}  // namespace genergy
