#pragma once

#include <string>

#include "tenpara/dyadic.hpp"

namespace tenpara {

// TPMX binary matrix format: "TPMX", version byte 1, u32 LE rows and cols
// (13-byte header), then rows*cols f64 LE values row-major.
void write_tpmx(const UnitGridField& field, const std::string& path);
UnitGridField read_tpmx(const std::string& path);

// Binary PGM (P5, maxval 255) with values mapped affinely from [min,max] to
// [0,255]; a constant field maps to mid-gray 128.
void write_pgm(const UnitGridField& field, const std::string& path);

// Matrix as CSV triplets: header "row,col,value", '.' decimal, LF endings.
void write_matrix_csv(const UnitGridField& field, const std::string& path);

// Deterministic float formatting shared by all CSV writers.
std::string format_double(double value);

} // namespace tenpara
