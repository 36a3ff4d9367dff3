// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "vspace/crypto/encoding.hpp"

namespace vspace {
namespace enc {

void put_be32(Bytes& out, uint32_t v) {
    out.push_back(uint8_t(v >> 24));
    out.push_back(uint8_t(v >> 16));
    out.push_back(uint8_t(v >> 8));
    out.push_back(uint8_t(v));
}

uint32_t get_be32(std::span<const uint8_t> in, size_t& off) {
    if (off + 4 > in.size()) raise(Errc::ParseError, "truncated length at offset " + std::to_string(off));
    uint32_t v = (uint32_t(in[off]) << 24) | (uint32_t(in[off + 1]) << 16) |
                 (uint32_t(in[off + 2]) << 8) | uint32_t(in[off + 3]);
    off += 4;
    return v;
}

Bytes mpz_to_bytes(const mpz_class& v) {
    if (v < 0) raise(Errc::ParseError, "negative integer not encodable");
    if (v == 0) return {};
    size_t n = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
    Bytes out(n);
    size_t written = 0;
    mpz_export(out.data(), &written, 1, 1, 1, 0, v.get_mpz_t());
    out.resize(written);
    return out;
}

mpz_class mpz_from_bytes(std::span<const uint8_t> b) {
    mpz_class v;
    if (!b.empty()) mpz_import(v.get_mpz_t(), b.size(), 1, 1, 1, 0, b.data());
    return v;
}

static void put_atom(Bytes& buf, uint8_t tag, std::span<const uint8_t> payload) {
    buf.push_back(tag);
    put_be32(buf, uint32_t(payload.size()));
    buf.insert(buf.end(), payload.begin(), payload.end());
}

void Writer::uint(const mpz_class& v) { put_atom(buf_, kUint, mpz_to_bytes(v)); }

void Writer::uint(uint64_t v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v); // native word endianness
    uint(z);
}

void Writer::bytes(std::span<const uint8_t> b) { put_atom(buf_, kBytes, b); }

void Writer::bytes(const Hash256& h) { put_atom(buf_, kBytes, std::span<const uint8_t>(h.data(), h.size())); }

void Writer::str(std::string_view s) { put_atom(buf_, kStr, as_span(s)); }

void Writer::list_header(uint32_t count) {
    buf_.push_back(kList);
    put_be32(buf_, count);
}

std::span<const uint8_t> Reader::body(uint8_t tag) {
    if (off_ >= data_.size()) raise(Errc::ParseError, "truncated atom at offset " + std::to_string(off_));
    if (data_[off_] != tag)
        raise(Errc::ParseError, "expected tag " + std::to_string(tag) + " got " +
                                    std::to_string(data_[off_]) + " at offset " + std::to_string(off_));
    off_ += 1;
    uint32_t len = get_be32(data_, off_);
    if (off_ + len > data_.size()) raise(Errc::ParseError, "atom overruns buffer at offset " + std::to_string(off_));
    auto out = data_.subspan(off_, len);
    off_ += len;
    return out;
}

mpz_class Reader::uint() {
    auto b = body(kUint);
    if (!b.empty() && b[0] == 0) raise(Errc::ParseError, "non-minimal integer encoding");
    return mpz_from_bytes(b);
}

uint64_t Reader::uint64() {
    mpz_class v = uint();
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 64) raise(Errc::ParseError, "integer exceeds 64 bits");
    uint64_t out = 0;
    for (size_t i = 0; i < mpz_size(v.get_mpz_t()); i++)
        out |= uint64_t(mpz_getlimbn(v.get_mpz_t(), mp_size_t(i))) << (64 * i);
    return out;
}

Bytes Reader::bytes() {
    auto b = body(kBytes);
    return Bytes(b.begin(), b.end());
}

Hash256 Reader::bytes32() {
    auto b = body(kBytes);
    if (b.size() != 32) raise(Errc::ParseError, "expected 32-byte hash, got " + std::to_string(b.size()));
    Hash256 h;
    std::copy(b.begin(), b.end(), h.begin());
    return h;
}

std::string Reader::str() {
    auto b = body(kStr);
    return std::string(b.begin(), b.end());
}

uint32_t Reader::list_header() {
    if (off_ >= data_.size() || data_[off_] != kList)
        raise(Errc::ParseError, "expected list at offset " + std::to_string(off_));
    off_ += 1;
    return get_be32(data_, off_);
}

void Reader::expect_done() const {
    if (!done()) raise(Errc::ParseError, "trailing bytes at offset " + std::to_string(off_));
}

} // namespace enc

std::string hex_encode(std::span<const uint8_t> b) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(b.size() * 2);
    for (uint8_t c : b) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

Bytes hex_decode(std::string_view s) {
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (s.size() % 2) raise(Errc::ParseError, "odd-length hex string");
    Bytes out(s.size() / 2);
    for (size_t i = 0; i < out.size(); i++) {
        int hi = nib(s[2 * i]), lo = nib(s[2 * i + 1]);
        if (hi < 0 || lo < 0) raise(Errc::ParseError, "invalid hex digit");
        out[i] = uint8_t(hi << 4 | lo);
    }
    return out;
}

} // namespace vspace
