#include "fracwave/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace fracwave {

namespace {
constexpr char kMagic[4] = {'F', 'R', 'W', '1'};
}

void save_field(const Field& u, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("save_field: cannot open " + path.string());
    os.write(kMagic, 4);
    const std::uint32_t dim = static_cast<std::uint32_t>(u.grid.dim);
    const std::uint32_t n = static_cast<std::uint32_t>(u.grid.n_per_axis);
    const double L = u.grid.box_length;
    os.write(reinterpret_cast<const char*>(&dim), sizeof dim);
    os.write(reinterpret_cast<const char*>(&n), sizeof n);
    os.write(reinterpret_cast<const char*>(&L), sizeof L);
    for (const complex& z : u.values) {
        const double re = z.real(), im = z.imag();
        os.write(reinterpret_cast<const char*>(&re), sizeof re);
        os.write(reinterpret_cast<const char*>(&im), sizeof im);
    }
    if (!os) throw std::runtime_error("save_field: write failed for " + path.string());
}

Field load_field(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("load_field: cannot open " + path.string());
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("load_field: bad magic in " + path.string());
    std::uint32_t dim = 0, n = 0;
    double L = 0.0;
    is.read(reinterpret_cast<char*>(&dim), sizeof dim);
    is.read(reinterpret_cast<char*>(&n), sizeof n);
    is.read(reinterpret_cast<char*>(&L), sizeof L);
    GridSpec g(static_cast<int>(dim), static_cast<int>(n), L);
    std::vector<complex> vals(g.size());
    for (complex& z : vals) {
        double re = 0.0, im = 0.0;
        is.read(reinterpret_cast<char*>(&re), sizeof re);
        is.read(reinterpret_cast<char*>(&im), sizeof im);
        z = complex(re, im);
    }
    if (!is) throw std::runtime_error("load_field: truncated file " + path.string());
    return Field(g, std::move(vals));
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string file_hash(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("file_hash: cannot open " + path.string());
    std::uint64_t h = 1469598103934665603ull;
    char buf[65536];
    while (is) {
        is.read(buf, sizeof buf);
        for (std::streamsize i = 0; i < is.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ull;
        }
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
    return out;
}

} // namespace fracwave
