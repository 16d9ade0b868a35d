#ifndef TIGRE_RASTER_IO_HPP
#define TIGRE_RASTER_IO_HPP

#include <iosfwd>
#include <string>

#include "tigre/field.hpp"

namespace tigre {

// Raster snapshot format: 32-byte header followed by nx*ny little-endian
// f64 values in row-major order.
//
//   offset 0   char[4]  magic "TIGR"
//   offset 4   u32      version (1)
//   offset 8   u32      dim
//   offset 12  u32      nx
//   offset 16  u32      ny
//   offset 20  u32      reserved (0), pads the time stamp to 8-byte alignment
//   offset 24  f64      simulation time
void write_raster(const std::string& path, const ScalarField& f, double time);
void write_raster(std::ostream& os, const ScalarField& f, double time);

struct RasterData {
    ScalarField field;
    double time = 0.0;
};

RasterData read_raster(const std::string& path);
RasterData read_raster(std::istream& is);

} // namespace tigre

#endif
