#include "tfwave/serialize.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

static_assert(std::endian::native == std::endian::little,
              "grid-function files are little-endian; big-endian hosts are unsupported");

namespace tfwave {

namespace {

constexpr char kMagic[4] = {'T', 'F', 'W', 'G'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::string& buf, const T& v) {
    const char* p = reinterpret_cast<const char*>(&v);
    buf.append(p, sizeof(T));
}

template <class T>
T take(const std::string& buf, std::size_t& off) {
    if (off + sizeof(T) > buf.size()) throw IoError("grid file truncated");
    T v;
    std::memcpy(&v, buf.data() + off, sizeof(T));
    off += sizeof(T);
    return v;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

namespace detail {

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string());
        out.write(content.data(), std::streamsize(content.size()));
        if (!out) throw IoError("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace detail

void save_binary(const GridFunction& f, const std::filesystem::path& path) {
    std::string buf;
    buf.reserve(24 + 16 * f.size());
    buf.append(kMagic, 4);
    put(buf, kVersion);
    put(buf, std::uint32_t(f.spec().d()));
    put(buf, std::uint32_t(f.spec().n()));
    put(buf, f.spec().l());
    for (const cplx& v : f.values()) {
        put(buf, v.real());
        put(buf, v.imag());
    }
    detail::atomic_write(path, buf);
}

GridFunction load_binary(const std::filesystem::path& path, Domain domain) {
    std::string buf = read_file(path);
    if (buf.size() < 24 || std::memcmp(buf.data(), kMagic, 4) != 0)
        throw IoError("not a TFWG file: " + path.string());
    std::size_t off = 4;
    auto version = take<std::uint32_t>(buf, off);
    if (version != kVersion) throw IoError("unsupported TFWG version");
    int d = int(take<std::uint32_t>(buf, off));
    int n = int(take<std::uint32_t>(buf, off));
    double l = take<double>(buf, off);
    GridSpec spec = GridSpec::make(d, n, l);
    std::vector<cplx> values(spec.size());
    for (cplx& v : values) {
        double re = take<double>(buf, off);
        double im = take<double>(buf, off);
        v = {re, im};
    }
    return GridFunction(spec, domain, std::move(values));
}

nlohmann::json to_json(const GridFunction& f) {
    nlohmann::json j;
    j["magic"] = "TFWG";
    j["version"] = kVersion;
    j["d"] = f.spec().d();
    j["n"] = f.spec().n();
    j["l"] = f.spec().l();
    const int n = f.spec().n();
    if (f.spec().d() == 1) {
        nlohmann::json vals = nlohmann::json::array();
        for (const cplx& v : f.values()) vals.push_back({v.real(), v.imag()});
        j["values"] = std::move(vals);
    } else {
        nlohmann::json rows = nlohmann::json::array();
        for (int a = 0; a < n; ++a) {
            nlohmann::json row = nlohmann::json::array();
            for (int b = 0; b < n; ++b) {
                cplx v = f[f.spec().flat(a, b)];
                row.push_back({v.real(), v.imag()});
            }
            rows.push_back(std::move(row));
        }
        j["values"] = std::move(rows);
    }
    return j;
}

GridFunction from_json(const nlohmann::json& j, Domain domain) {
    if (j.value("magic", "") != std::string("TFWG")) throw IoError("not a TFWG JSON object");
    GridSpec spec = GridSpec::make(j.at("d").get<int>(), j.at("n").get<int>(), j.at("l").get<double>());
    std::vector<cplx> values;
    values.reserve(spec.size());
    const auto& vals = j.at("values");
    if (spec.d() == 1) {
        for (const auto& v : vals) values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    } else {
        for (const auto& row : vals)
            for (const auto& v : row) values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    }
    return GridFunction(spec, domain, std::move(values));
}

void save_json(const GridFunction& f, const std::filesystem::path& path) {
    detail::atomic_write(path, to_json(f).dump());
}

GridFunction load_json(const std::filesystem::path& path, Domain domain) {
    return from_json(nlohmann::json::parse(read_file(path)), domain);
}

}  // namespace tfwave
