#include "msym/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "msym/genpoly.hpp"
#include "msym/io.hpp"
#include "msym/symfun.hpp"

namespace msym {

namespace {

constexpr const char* kHeader = "msym-cache 1";

std::uint64_t fnv1a(std::uint64_t h, const std::string& line)
{
    for (const char ch : line) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ULL;
    }
    h ^= static_cast<unsigned char>('\n');
    h *= 1099511628211ULL;
    return h;
}

constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;

std::string hex16(std::uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// Smallest arity that covers every variable mentioned in the record.
std::size_t infer_arity(const std::string& text)
{
    std::size_t m = 1;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] != 'y' || !std::isdigit(static_cast<unsigned char>(text[i + 1])))
            continue;
        std::size_t v = 0;
        std::size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
            v = v * 10 + static_cast<std::size_t>(text[j++] - '0');
        m = std::max(m, v);
    }
    return m;
}

}  // namespace

std::string cache_file_path(const std::string& dir)
{
    if (dir.empty())
        return "msym.cache";
    return dir.back() == '/' ? dir + "msym.cache" : dir + "/msym.cache";
}

std::vector<std::string> cache_load(const std::string& dir)
{
    std::vector<std::string> warnings;
    const std::string path = cache_file_path(dir);
    std::ifstream in(path);
    if (!in)
        return warnings;  // cold start

    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    if (lines.empty() || lines.back().rfind("C ", 0) != 0) {
        warnings.push_back("cache file " + path + " has no checksum trailer; ignoring it");
        return warnings;
    }
    const std::string trailer = lines.back();
    lines.pop_back();
    std::uint64_t h = kFnvOffset;
    for (const auto& l : lines)
        h = fnv1a(h, l);
    if (trailer != "C " + hex16(h)) {
        warnings.push_back("cache file " + path + " fails its checksum; ignoring it");
        return warnings;
    }
    if (lines.empty() || lines.front() != kHeader) {
        warnings.push_back("cache file " + path + " has an unknown format header; ignoring it");
        return warnings;
    }

    const Ring z = Ring::integers();
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string& rec = lines[i];
        if (rec.empty())
            continue;
        std::istringstream ss(rec);
        std::string tag;
        ss >> tag;
        try {
            if (tag == "P") {
                std::uint32_t ph = 0, pk = 0;
                std::string body;
                if (!(ss >> ph >> pk >> body) || ph == 0 || pk == 0)
                    throw Error("malformed plethysm record");
                plethysm_cache_insert(ph, pk, parse_elem_poly(body, z));
            } else if (tag == "RW") {
                std::string key, body;
                if (!(ss >> key >> body))
                    throw Error("malformed rewrite record");
                const std::size_t m = std::max(infer_arity(key), infer_arity(body));
                rewrite_cache_insert(parse_orbit_index(key, m), parse_generator_poly(body, m, z));
            } else {
                throw Error("unknown record tag '" + tag + "'");
            }
            std::string rest;
            if (ss >> rest)
                throw Error("trailing fields");
        } catch (const Error& e) {
            warnings.push_back("cache file " + path + " line " + std::to_string(i + 1) +
                               " skipped: " + e.what());
        }
    }
    return warnings;
}

void cache_save(const std::string& dir)
{
    std::vector<std::string> lines;
    lines.emplace_back(kHeader);

    auto pkeys = plethysm_cache_keys();
    std::sort(pkeys.begin(), pkeys.end());
    for (const auto& [h, k] : pkeys)
        lines.push_back("P " + std::to_string(h) + " " + std::to_string(k) + " " +
                        format(plethysm_P(h, k), TextStyle::compact));

    auto rkeys = rewrite_cache_keys();
    std::sort(rkeys.begin(), rkeys.end(),
              [](const OrbitIndex& x, const OrbitIndex& y) {
                  if (x.arity() != y.arity())
                      return x.arity() < y.arity();
                  return cmp(x, y) < 0;
              });
    for (const auto& alpha : rkeys)
        lines.push_back("RW " + format(alpha, TextStyle::compact) + " " +
                        format(rewrite_to_generators(alpha), TextStyle::compact));

    std::uint64_t h = kFnvOffset;
    for (const auto& l : lines)
        h = fnv1a(h, l);

    const std::string path = cache_file_path(dir);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            return;  // unwritable cache dir: silently skip persistence
        for (const auto& l : lines)
            out << l << "\n";
        out << "C " << hex16(h) << "\n";
    }
    std::rename(tmp.c_str(), path.c_str());
}

}  // namespace msym
