#include "manifest.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace swarmsim::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string manifest_to_json(const RunManifest& m) {
    json doc;
    doc["scenario"] = m.scenario;
    doc["seed"] = m.seed;
    doc["out_dir"] = m.out_dir;
    doc["files"] = m.files;
    doc["spec_hash"] = m.spec_hash;
    return doc.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
    json doc = json::parse(text);  // throws json::parse_error (a runtime_error)
    RunManifest m;
    m.scenario = doc.at("scenario").get<std::string>();
    m.seed = doc.at("seed").get<std::uint64_t>();
    m.out_dir = doc.at("out_dir").get<std::string>();
    m.files = doc.at("files").get<std::vector<std::string>>();
    m.spec_hash = doc.at("spec_hash").get<std::string>();
    return m;
}

void merge_existing_files(RunManifest& m) {
    const fs::path path = fs::path(m.out_dir) / "manifest.json";
    std::ifstream in(path);
    if (in) {
        std::ostringstream buf;
        buf << in.rdbuf();
        try {
            const RunManifest old = manifest_from_json(buf.str());
            m.files.insert(m.files.end(), old.files.begin(), old.files.end());
        } catch (const std::exception&) {
            // A stale or hand-edited manifest never blocks a rewrite.
        }
    }
    std::sort(m.files.begin(), m.files.end());
    m.files.erase(std::unique(m.files.begin(), m.files.end()), m.files.end());
}

void write_manifest(const RunManifest& m) {
    const fs::path dir(m.out_dir);
    const fs::path tmp = dir / "manifest.json.tmp";
    const fs::path final_path = dir / "manifest.json";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << manifest_to_json(m);
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, final_path);
}

}  // namespace swarmsim::cli
