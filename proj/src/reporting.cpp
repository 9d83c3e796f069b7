#include "epspectra/reporting.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <fftw3.h>
#include <json.hpp>

namespace epspectra {

std::string library_version() { return "0.1.0"; }

void atomic_write_file(const std::string& path, std::string_view content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out.write(content.data(), std::streamsize(content.size()));
        out.flush();
        if (!out) throw std::runtime_error("short write: " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string RunManifest::json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["version"] = library_version();
    j["fftw"] = std::string(fftw_version);
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : config) cfg[k] = v;
    j["config"] = cfg;
    j["wall_seconds"] = wall_seconds;
    if (!note.empty()) j["note"] = note;
    return j.dump(2) + "\n";
}

std::string RunManifest::config_text() const {
    std::string out;
    for (const auto& [k, v] : config) {
        out += k;
        out += '=';
        out += v;
        out += '\n';
    }
    return out;
}

void write_manifest(const std::string& dir, const RunManifest& m) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    atomic_write_file((fs::path(dir) / "manifest.json").string(), m.json());
    atomic_write_file((fs::path(dir) / "resolved.cfg").string(), m.config_text());
}

}  // namespace epspectra
