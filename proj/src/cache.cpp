#include "oswap/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oswap {

void write_enumeration_cache(const std::filesystem::path& path, const std::string& kind, int n,
                             const std::vector<std::string>& lines) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << "# oswap-cache v" << kCacheVersion << " kind=" << kind << " n=" << n
        << " count=" << lines.size() << '\n';
    for (const auto& l : lines) out << l << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::optional<CacheHeader> read_cache_header(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line)) return std::nullopt;
    CacheHeader h;
    char kind_buf[32] = {};
    if (std::sscanf(line.c_str(), "# oswap-cache v%d kind=%31s n=%d count=%lld", &h.version,
                    kind_buf, &h.n, &h.count) != 4)
        return std::nullopt;
    // sscanf %s stops at whitespace, so kind_buf holds only the kind token
    h.kind = kind_buf;
    return h;
}

std::vector<std::string> read_cache_lines(const std::filesystem::path& path,
                                          const std::string& kind, int n) {
    const auto header = read_cache_header(path);
    if (!header) throw std::runtime_error("missing or malformed cache header: " + path.string());
    if (header->version != kCacheVersion || header->kind != kind || header->n != n)
        throw std::runtime_error("cache header mismatch: " + path.string());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);  // header
    std::vector<std::string> lines;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    if (static_cast<long long>(lines.size()) != header->count)
        throw std::runtime_error("cache count mismatch: " + path.string());
    return lines;
}

std::vector<std::string> enumeration_lines(const std::string& kind, int n) {
    std::vector<std::string> lines;
    if (kind == "syt") {
        for_each_syt(staircase(n),
                     [&](const StandardTableau& t) { lines.push_back(t.values_csv()); });
    } else if (kind == "networks") {
        for_each_sorting_network(n, [&](const SortingNetwork& s) { lines.push_back(s.to_string()); });
    } else {
        throw std::invalid_argument("unknown enumeration kind: " + kind);
    }
    return lines;
}

std::vector<std::string> cached_enumeration(const std::filesystem::path& cache_dir,
                                            const std::string& kind, int n) {
    const auto path = cache_dir / (kind + "_n" + std::to_string(n) + ".cache");
    const auto header = read_cache_header(path);
    if (header && header->version == kCacheVersion && header->kind == kind && header->n == n) {
        try {
            return read_cache_lines(path, kind, n);
        } catch (const std::runtime_error&) {
            // fall through to re-enumeration
        }
    }
    auto lines = enumeration_lines(kind, n);
    write_enumeration_cache(path, kind, n, lines);
    return lines;
}

void write_csv(const std::filesystem::path& path, const SampleMatrix& mat) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    for (std::size_t i = 0; i < mat.columns.size(); ++i) {
        if (i) out << ',';
        out << mat.columns[i];
    }
    out << '\n';
    char buf[64];
    for (const auto& row : mat.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g", row[i]);
            if (i) out << ',';
            out << buf;
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

SampleMatrix read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    SampleMatrix mat;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty csv: " + path.string());
    {
        std::istringstream is(line);
        std::string tok;
        while (std::getline(is, tok, ',')) mat.columns.push_back(tok);
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string tok;
        std::vector<double> row;
        while (std::getline(is, tok, ',')) row.push_back(std::stod(tok));
        if (row.size() != mat.columns.size())
            throw std::runtime_error("ragged csv row in " + path.string());
        mat.rows.push_back(std::move(row));
    }
    return mat;
}

}  // namespace oswap
