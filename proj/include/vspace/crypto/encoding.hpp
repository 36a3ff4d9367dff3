// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "vspace/error.hpp"

namespace vspace {

using Bytes = std::vector<uint8_t>;
using Hash256 = std::array<uint8_t, 32>;

// Canonical atom encoding, see FORMAT.md §1. Everything that gets hashed,
// signed or persisted goes through Writer; Reader rejects any non-canonical
// byte stream.
namespace enc {

enum : uint8_t { kUint = 0x01, kBytes = 0x02, kStr = 0x03, kList = 0x04 };

void put_be32(Bytes& out, uint32_t v);
uint32_t get_be32(std::span<const uint8_t> in, size_t& off);

Bytes mpz_to_bytes(const mpz_class& v);         // big-endian magnitude, minimal
mpz_class mpz_from_bytes(std::span<const uint8_t> b);

class Writer {
public:
    void uint(const mpz_class& v);
    void uint(uint64_t v);
    void bytes(std::span<const uint8_t> b);
    void bytes(const Hash256& h);
    void str(std::string_view s);
    void list_header(uint32_t count);

    const Bytes& out() const { return buf_; }
    Bytes take() { return std::move(buf_); }

private:
    Bytes buf_;
};

class Reader {
public:
    explicit Reader(std::span<const uint8_t> data) : data_(data) {}

    mpz_class uint();
    uint64_t uint64();                          // uint() that must fit 64 bits
    Bytes bytes();
    Hash256 bytes32();
    std::string str();
    uint32_t list_header();

    bool done() const { return off_ == data_.size(); }
    size_t offset() const { return off_; }
    void expect_done() const;

private:
    std::span<const uint8_t> body(uint8_t tag);

    std::span<const uint8_t> data_;
    size_t off_ = 0;
};

} // namespace enc

std::string hex_encode(std::span<const uint8_t> b);
Bytes hex_decode(std::string_view s);

inline std::span<const uint8_t> as_span(const std::string& s) {
    return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}
inline std::span<const uint8_t> as_span(std::string_view s) {
    return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

} // namespace vspace
