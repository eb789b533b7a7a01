#include "tn/graph_io.hpp"

#include <array>
#include <cstring>
#include <fstream>

#include "tn/errors.hpp"

namespace tn {

namespace {

constexpr std::array<char, 4> kMagic = {'T', 'N', 'G', 'R'};
constexpr uint32_t kVersion = 1;

uint64_t fnv1a64(const unsigned char* data, size_t len, uint64_t h = 0xCBF29CE484222325ULL) {
    for (size_t i = 0; i < len; ++i) {
        h ^= data[i];
        h *= 0x100000001B3ULL;
    }
    return h;
}

struct Writer {
    std::ofstream out;
    uint64_t hash = 0xCBF29CE484222325ULL;

    explicit Writer(const std::string& path) : out(path, std::ios::binary) {
        if (!out) throw io_error("cannot open for writing: " + path);
    }

    void bytes(const void* p, size_t len) {
        out.write(static_cast<const char*>(p), static_cast<std::streamsize>(len));
        hash = fnv1a64(static_cast<const unsigned char*>(p), len, hash);
    }

    void u32(uint32_t v) {
        unsigned char b[4];
        for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
        bytes(b, 4);
    }

    void u64(uint64_t v) {
        unsigned char b[8];
        for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
        bytes(b, 8);
    }
};

struct Reader {
    std::ifstream in;
    uint64_t hash = 0xCBF29CE484222325ULL;
    std::string path;

    explicit Reader(const std::string& p) : in(p, std::ios::binary), path(p) {
        if (!in) throw io_error("cannot open for reading: " + p);
    }

    void bytes(void* p, size_t len) {
        in.read(static_cast<char*>(p), static_cast<std::streamsize>(len));
        if (static_cast<size_t>(in.gcount()) != len)
            throw parse_error("graph cache truncated: " + path);
        hash = fnv1a64(static_cast<unsigned char*>(p), len, hash);
    }

    uint32_t u32() {
        unsigned char b[4];
        bytes(b, 4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
        return v;
    }

    uint64_t u64() {
        unsigned char b[8];
        bytes(b, 8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
        return v;
    }
};

} // namespace

void save_graph(const CollabGraph& g, const std::string& path) {
    Writer w(path);
    w.bytes(kMagic.data(), kMagic.size());
    w.u32(kVersion);
    w.u64(g.num_nodes());
    w.u64(g.adjacency().size());
    for (uint64_t o : g.offsets()) w.u64(o);
    for (uint32_t a : g.adjacency()) w.u32(a);
    const uint64_t checksum = w.hash;
    w.u64(checksum);
    w.out.close();
    if (!w.out) throw io_error("write failed: " + path);
}

CollabGraph load_graph(const std::string& path) {
    Reader r(path);
    std::array<char, 4> magic;
    r.bytes(magic.data(), magic.size());
    if (magic != kMagic) throw parse_error("not a graph cache (bad magic): " + path);
    const uint32_t version = r.u32();
    if (version != kVersion)
        throw parse_error("graph cache version mismatch: found " + std::to_string(version) +
                          ", expected " + std::to_string(kVersion) + ": " + path);
    const uint64_t n_nodes = r.u64();
    const uint64_t n_adj = r.u64();

    CollabGraph g;
    g.n_nodes_ = static_cast<uint32_t>(n_nodes);
    g.offsets_.resize(n_nodes + 1);
    for (auto& o : g.offsets_) o = r.u64();
    g.adjacency_.resize(n_adj);
    for (auto& a : g.adjacency_) a = r.u32();

    const uint64_t computed = r.hash;
    const uint64_t stored = r.u64();
    if (stored != computed)
        throw parse_error("graph cache checksum mismatch (file damaged): " + path);
    if (g.offsets_.back() != n_adj)
        throw parse_error("graph cache inconsistent (offsets/adjacency): " + path);
    return g;
}

void write_edge_list(const CollabGraph& g, std::ostream& out) {
    for (uint32_t u = 0; u < g.num_nodes(); ++u)
        for (uint32_t v : g.neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
}

} // namespace tn
