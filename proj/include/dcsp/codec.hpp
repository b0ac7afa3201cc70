#ifndef DCSP_CODEC_HPP
#define DCSP_CODEC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dcsp::codec {

inline void put_varint(std::string& out, uint64_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<char>((v & 0x7f) | 0x80));
        v >>= 7;
    }
    out.push_back(static_cast<char>(v));
}

inline uint64_t get_varint(const std::string& in, size_t& pos) {
    uint64_t v = 0;
    int shift = 0;
    while (true) {
        if (pos >= in.size()) throw std::runtime_error("truncated varint");
        uint8_t b = static_cast<uint8_t>(in[pos++]);
        v |= static_cast<uint64_t>(b & 0x7f) << shift;
        if (!(b & 0x80)) return v;
        shift += 7;
        if (shift > 63) throw std::runtime_error("varint overflow");
    }
}

inline void put_bytes(std::string& out, const std::string& s) {
    put_varint(out, s.size());
    out.append(s);
}

inline std::string get_bytes(const std::string& in, size_t& pos) {
    uint64_t len = get_varint(in, pos);
    if (pos + len > in.size()) throw std::runtime_error("truncated bytes");
    std::string s = in.substr(pos, len);
    pos += len;
    return s;
}

}  // namespace dcsp::codec

#endif
