#include "epspectra/field_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "epspectra/reporting.hpp"

namespace epspectra {

namespace {

constexpr char kMagic[4] = {'E', 'P', 'S', 'F'};
constexpr std::uint32_t kVersion = 1;

void append_u32(std::string& out, std::uint32_t v) {
    char b[4];
    std::memcpy(b, &v, 4);
    out.append(b, 4);
}

void append_f64(std::string& out, double v) {
    char b[8];
    std::memcpy(b, &v, 8);
    out.append(b, 8);
}

void write_components(const std::string& path, const PeriodicGrid& g,
                      const std::vector<const ScalarField*>& comps) {
    std::string out;
    out.reserve(28 + comps.size() * g.total_points() * 8);
    out.append(kMagic, 4);
    append_u32(out, kVersion);
    append_u32(out, std::uint32_t(g.dim()));
    append_u32(out, std::uint32_t(comps.size()));
    append_u32(out, std::uint32_t(g.points_per_axis()));
    append_f64(out, g.period());
    for (const ScalarField* f : comps)
        for (double v : f->samples()) append_f64(out, v);
    atomic_write_file(path, out);
}

struct Reader {
    std::ifstream in;
    explicit Reader(const std::string& path) : in(path, std::ios::binary) {
        if (!in) throw std::runtime_error("field file not readable: " + path);
    }
    std::uint32_t u32() {
        char b[4];
        in.read(b, 4);
        if (!in) throw std::runtime_error("field file truncated");
        std::uint32_t v;
        std::memcpy(&v, b, 4);
        return v;
    }
    double f64() {
        char b[8];
        in.read(b, 8);
        if (!in) throw std::runtime_error("field file truncated");
        double v;
        std::memcpy(&v, b, 8);
        return v;
    }
};

}  // namespace

VectorField FieldFile::as_velocity() const {
    if (!is_velocity())
        throw std::runtime_error("field file holds " + std::to_string(components.size()) +
                                 " components, expected one per dimension");
    return VectorField(components);
}

void write_field(const std::string& path, const ScalarField& f) {
    write_components(path, f.grid(), {&f});
}

void write_field(const std::string& path, const VectorField& u) {
    std::vector<const ScalarField*> comps;
    for (const ScalarField& c : u.components()) comps.push_back(&c);
    write_components(path, u.grid(), comps);
}

FieldFile read_field(const std::string& path) {
    Reader r(path);
    char magic[4];
    r.in.read(magic, 4);
    if (!r.in || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("not a field file: " + path);
    const std::uint32_t version = r.u32();
    if (version != kVersion)
        throw std::runtime_error("unsupported field file version " + std::to_string(version));
    const std::uint32_t dim = r.u32();
    const std::uint32_t ncomp = r.u32();
    const std::uint32_t n = r.u32();
    const double period = r.f64();
    if (dim < 1 || dim > std::uint32_t(PeriodicGrid::max_dim))
        throw std::runtime_error("field file dimension out of range");
    if (ncomp < 1 || ncomp > 16) throw std::runtime_error("field file component count out of range");
    if (n % 2 != 0) throw std::runtime_error("field file resolution must be even");

    // rejects odd or non power-of-two N and bad periods with its own message
    PeriodicGrid g(int(dim), int(n), period);

    FieldFile file{g, {}};
    for (std::uint32_t c = 0; c < ncomp; ++c) {
        std::vector<double> samples(g.total_points());
        for (double& v : samples) v = r.f64();
        file.components.push_back(ScalarField::from_samples(g, std::move(samples)));
    }
    char extra;
    if (r.in.read(&extra, 1))
        throw std::runtime_error("field file has trailing bytes");
    return file;
}

}  // namespace epspectra
