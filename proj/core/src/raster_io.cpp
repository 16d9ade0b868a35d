#include "tigre/raster_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

namespace tigre {

static_assert(std::endian::native == std::endian::little,
              "raster format is little-endian; byte swapping not implemented");

namespace {

void put_u32(std::ostream& os, uint32_t v) {
    os.write(reinterpret_cast<const char*>(&v), 4);
}

uint32_t get_u32(std::istream& is) {
    uint32_t v = 0;
    is.read(reinterpret_cast<char*>(&v), 4);
    return v;
}

} // namespace

void write_raster(std::ostream& os, const ScalarField& f, double time) {
    const Grid& g = f.grid();
    os.write("TIGR", 4);
    put_u32(os, 1u);
    put_u32(os, static_cast<uint32_t>(g.dim));
    put_u32(os, static_cast<uint32_t>(g.nx));
    put_u32(os, static_cast<uint32_t>(g.ny));
    put_u32(os, 0u);
    os.write(reinterpret_cast<const char*>(&time), 8);
    os.write(reinterpret_cast<const char*>(f.data().data()),
             static_cast<std::streamsize>(f.data().size() * sizeof(double)));
}

void write_raster(const std::string& path, const ScalarField& f, double time) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_raster: cannot open " + path);
    write_raster(os, f, time);
    if (!os) throw std::runtime_error("write_raster: write failed for " + path);
}

RasterData read_raster(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "TIGR", 4) != 0)
        throw std::runtime_error("read_raster: bad magic");
    const uint32_t version = get_u32(is);
    if (version != 1u)
        throw std::runtime_error("read_raster: unsupported version");
    const uint32_t dim = get_u32(is);
    const uint32_t nx = get_u32(is);
    const uint32_t ny = get_u32(is);
    get_u32(is); // reserved
    double time = 0.0;
    is.read(reinterpret_cast<char*>(&time), 8);
    Grid g = make_grid(static_cast<int>(dim), static_cast<int>(nx), static_cast<int>(ny));
    RasterData out{ScalarField(g), time};
    is.read(reinterpret_cast<char*>(out.field.data().data()),
            static_cast<std::streamsize>(out.field.data().size() * sizeof(double)));
    if (!is) throw std::runtime_error("read_raster: truncated payload");
    return out;
}

RasterData read_raster(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_raster: cannot open " + path);
    return read_raster(is);
}

} // namespace tigre
