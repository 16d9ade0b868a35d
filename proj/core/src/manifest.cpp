#include "tigre/manifest.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tigre {

uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("fnv1a64_file: cannot open " + path);
    uint64_t h = 14695981039346656037ull;
    char buf[4096];
    while (is) {
        is.read(buf, sizeof(buf));
        const std::streamsize n = is.gcount();
        for (std::streamsize k = 0; k < n; ++k) {
            h ^= static_cast<unsigned char>(buf[k]);
            h *= 1099511628211ull;
        }
    }
    return h;
}

void write_manifest(const std::string& dir, const std::string& config_echo,
                    double wall_seconds, double cpu_seconds,
                    const std::vector<std::string>& files) {
    std::ofstream os(dir + "/manifest.txt");
    if (!os) throw std::runtime_error("write_manifest: cannot open " + dir);
    os << "# run manifest\n";
    os << "version = " << "tigre " << "0.1.0" << "\n";
    os << "wall_seconds = " << wall_seconds << "\n";
    os << "cpu_seconds = " << cpu_seconds << "\n";
    os << "[config]\n" << config_echo;
    os << "[files]\n";
    for (const auto& f : files) {
        char hex[17];
        std::snprintf(hex, sizeof(hex), "%016llx",
                      static_cast<unsigned long long>(fnv1a64_file(dir + "/" + f)));
        os << f << " " << hex << "\n";
    }
}

std::vector<std::string> verify_manifest(const std::string& dir) {
    std::ifstream is(dir + "/manifest.txt");
    if (!is) throw std::runtime_error("verify_manifest: no manifest in " + dir);
    std::vector<std::string> bad;
    std::string line;
    bool in_files = false;
    while (std::getline(is, line)) {
        if (line == "[files]") { in_files = true; continue; }
        if (!in_files || line.empty()) continue;
        std::istringstream ls(line);
        std::string name, hex;
        if (!(ls >> name >> hex)) continue;
        try {
            char actual[17];
            std::snprintf(actual, sizeof(actual), "%016llx",
                          static_cast<unsigned long long>(fnv1a64_file(dir + "/" + name)));
            if (hex != actual) bad.push_back(name);
        } catch (const std::exception&) {
            bad.push_back(name);
        }
    }
    return bad;
}

} // namespace tigre
