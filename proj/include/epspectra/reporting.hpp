#ifndef EPSPECTRA_REPORTING_HPP
#define EPSPECTRA_REPORTING_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace epspectra {

std::string library_version();

// write-temp-then-rename within the target directory
void atomic_write_file(const std::string& path, std::string_view content);

// Echo of one finished run: the subcommand, every resolved configuration
// key (flags merged over config file over defaults), and the wall time.
struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    double wall_seconds = 0.0;
    std::string note;  // e.g. blow-up diagnostics; empty when clean

    std::string json() const;
    // flat key=value lines, reusable as a config file for an identical rerun
    std::string config_text() const;
};

// manifest.json plus resolved.cfg inside dir
void write_manifest(const std::string& dir, const RunManifest& m);

}  // namespace epspectra

#endif
