#ifndef BELTRAMI_IO_HPP
#define BELTRAMI_IO_HPP

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>

#include "beltrami/grid.hpp"

namespace beltrami {

static_assert(std::endian::native == std::endian::little,
              "BGF1 I/O assumes a little-endian host");

// Binary grid dump "BGF1": magic 'B','G','F','1', u32 N, f64 L, u8 shifted,
// then N^2 (re, im) f64 pairs in row-major order.  Little-endian throughout.
inline void write_bgf1(const GridFunction& f, std::ostream& os) {
    const Grid& g = f.grid();
    os.write("BGF1", 4);
    const std::uint32_t n = static_cast<std::uint32_t>(g.n);
    os.write(reinterpret_cast<const char*>(&n), 4);
    os.write(reinterpret_cast<const char*>(&g.L), 8);
    const std::uint8_t sh = g.shifted ? 1 : 0;
    os.write(reinterpret_cast<const char*>(&sh), 1);
    for (const cplx& v : f.values()) {
        const double re = v.real(), im = v.imag();
        os.write(reinterpret_cast<const char*>(&re), 8);
        os.write(reinterpret_cast<const char*>(&im), 8);
    }
}

inline void write_bgf1(const GridFunction& f, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_bgf1: cannot open " + path);
    write_bgf1(f, os);
    if (!os) throw std::runtime_error("write_bgf1: write failed for " + path);
}

inline GridFunction read_bgf1(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "BGF1", 4) != 0)
        throw std::runtime_error("read_bgf1: bad magic");
    std::uint32_t n = 0;
    double L = 0.0;
    std::uint8_t sh = 0;
    is.read(reinterpret_cast<char*>(&n), 4);
    is.read(reinterpret_cast<char*>(&L), 8);
    is.read(reinterpret_cast<char*>(&sh), 1);
    if (!is) throw std::runtime_error("read_bgf1: truncated header");
    const Grid g = make_grid(L, static_cast<int>(n), sh != 0);
    std::vector<cplx> values(g.size());
    for (cplx& v : values) {
        double re = 0.0, im = 0.0;
        is.read(reinterpret_cast<char*>(&re), 8);
        is.read(reinterpret_cast<char*>(&im), 8);
        if (!is) throw std::runtime_error("read_bgf1: truncated payload");
        v = cplx(re, im);
    }
    return GridFunction(g, std::move(values));
}

inline GridFunction read_bgf1(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_bgf1: cannot open " + path);
    return read_bgf1(is);
}

// FNV-1a content hash used by the output manifest
inline std::uint64_t fnv1a_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("fnv1a_file: cannot open " + path);
    std::uint64_t h = 14695981039346656037ull;
    char buf[1 << 14];
    while (is.read(buf, sizeof buf) || is.gcount() > 0) {
        const std::streamsize got = is.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ull;
        }
        if (!is) break;
    }
    return h;
}

}  // namespace beltrami

#endif
