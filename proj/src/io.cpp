#include "tenpara/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace tenpara {

namespace {

constexpr char kMagic[4] = {'T', 'P', 'M', 'X'};
constexpr std::uint8_t kVersion = 1;

static_assert(std::endian::native == std::endian::little,
              "TPMX writer assumes a little-endian host");

void put_u32(std::ostream& out, std::uint32_t v) {
    out.write(reinterpret_cast<const char*>(&v), 4);
}

std::uint32_t get_u32(std::istream& in) {
    std::uint32_t v = 0;
    in.read(reinterpret_cast<char*>(&v), 4);
    return v;
}

int level_for(std::uint32_t n, const char* axis) {
    if (n == 0 || (n & (n - 1)) != 0) {
        throw IoError(std::string("TPMX ") + axis + " count is not a power of two");
    }
    int level = 0;
    while ((std::uint32_t{1} << level) < n) ++level;
    return level;
}

} // namespace

void write_tpmx(const UnitGridField& field, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(kMagic, 4);
    out.put(static_cast<char>(kVersion));
    put_u32(out, static_cast<std::uint32_t>(field.rows()));
    put_u32(out, static_cast<std::uint32_t>(field.cols()));
    out.write(reinterpret_cast<const char*>(field.values().data()),
              static_cast<std::streamsize>(field.values().size() * sizeof(double)));
    if (!out) throw IoError("write failed for " + path);
}

UnitGridField read_tpmx(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    char magic[4] = {};
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0) throw IoError("bad TPMX magic in " + path);
    const int version = in.get();
    if (version != kVersion) throw IoError("unsupported TPMX version in " + path);
    const std::uint32_t rows = get_u32(in);
    const std::uint32_t cols = get_u32(in);
    if (!in) throw IoError("truncated TPMX header in " + path);
    const int level_x = level_for(rows, "row");
    const int level_y = level_for(cols, "col");
    std::vector<double> values(static_cast<std::size_t>(rows) * cols);
    in.read(reinterpret_cast<char*>(values.data()),
            static_cast<std::streamsize>(values.size() * sizeof(double)));
    if (!in) throw IoError("truncated TPMX payload in " + path);
    if (in.peek() != std::char_traits<char>::eof()) {
        throw IoError("trailing bytes after TPMX payload in " + path);
    }
    return UnitGridField(level_x, level_y, std::move(values));
}

void write_pgm(const UnitGridField& field, const std::string& path) {
    if (field.empty()) throw ShapeError("cannot render an empty field");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    const auto [lo_it, hi_it] =
        std::minmax_element(field.values().begin(), field.values().end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    const double span = hi - lo;
    out << "P5\n" << field.cols() << ' ' << field.rows() << "\n255\n";
    std::vector<unsigned char> row(field.cols());
    for (std::int64_t r = 0; r < field.rows(); ++r) {
        for (std::int64_t c = 0; c < field.cols(); ++c) {
            const double v = field.at(r, c);
            row[c] = span == 0.0
                         ? static_cast<unsigned char>(128)
                         : static_cast<unsigned char>(std::lround((v - lo) / span * 255.0));
        }
        out.write(reinterpret_cast<const char*>(row.data()),
                  static_cast<std::streamsize>(row.size()));
    }
    if (!out) throw IoError("write failed for " + path);
}

void write_matrix_csv(const UnitGridField& field, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "row,col,value\n";
    for (std::int64_t r = 0; r < field.rows(); ++r) {
        for (std::int64_t c = 0; c < field.cols(); ++c) {
            out << r << ',' << c << ',' << format_double(field.at(r, c)) << '\n';
        }
    }
    if (!out) throw IoError("write failed for " + path);
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

} // namespace tenpara
