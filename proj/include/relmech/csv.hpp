#pragma once

// CSV and report serialization. Doubles are printed with shortest
// round-trip formatting so outputs are byte-stable across runs and usable
// as golden files. Files are written atomically (temp + rename).

#include <filesystem>
#include <string>

#include "relmech/worldline.hpp"

namespace relmech {

//! Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

//! Header `s,t,x1,x2,x3,x4,u1,u2,u3,u4,norm_residual`, one row per sample.
std::string worldline_csv(const Worldline& w);

//! Writes bytes via a temporary file in the same directory, then renames.
void write_file_atomic(const std::filesystem::path& path, const std::string& bytes);

}  // namespace relmech
