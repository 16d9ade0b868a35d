#ifndef TIGRE_MANIFEST_HPP
#define TIGRE_MANIFEST_HPP

#include <string>
#include <vector>

namespace tigre {

uint64_t fnv1a64_file(const std::string& path);

struct ManifestEntry {
    std::string name; // path relative to the run directory
    uint64_t checksum = 0;
};

// Plain-text run manifest: config echo, code version, wall clock, process
// CPU time, and one checksummed line per emitted file.
void write_manifest(const std::string& dir, const std::string& config_echo,
                    double wall_seconds, double cpu_seconds,
                    const std::vector<std::string>& files);

// Recompute checksums for every file listed in dir/manifest.txt; returns the
// names that mismatch or are missing.
std::vector<std::string> verify_manifest(const std::string& dir);

} // namespace tigre

#endif
