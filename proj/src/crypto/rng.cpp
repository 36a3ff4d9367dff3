// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "vspace/crypto/rng.hpp"

namespace vspace::crypto {

Drbg Drbg::from_u64(uint64_t seed) {
    enc::Writer w;
    w.uint(seed);
    return Drbg(hash_stream("vspace/v1/seed", {w.out()}));
}

Drbg Drbg::child(std::string_view role, uint64_t index) const {
    enc::Writer w;
    w.uint(index);
    return Drbg(hash_stream("vspace/v1/seed", {{seed_.data(), seed_.size()}, as_span(role), w.out()}));
}

Hash256 Drbg::take32() {
    enc::Writer w;
    w.uint(counter_++);
    return hash_stream("vspace/v1/drbg", {{seed_.data(), seed_.size()}, w.out()});
}

void Drbg::fill(std::span<uint8_t> out) {
    size_t off = 0;
    while (off < out.size()) {
        Hash256 block = take32();
        size_t n = std::min(out.size() - off, block.size());
        std::copy_n(block.begin(), n, out.begin() + off);
        off += n;
    }
}

uint64_t Drbg::uniform_u64(uint64_t bound) {
    if (bound == 0) return 0;
    // rejection sampling over the top multiple of bound
    uint64_t limit = ~uint64_t(0) - (~uint64_t(0) % bound + 1) % bound;
    for (;;) {
        Hash256 b = take32();
        uint64_t x = 0;
        for (int i = 0; i < 8; i++) x = x << 8 | b[i];
        if (x <= limit) return x % bound;
    }
}

double Drbg::uniform_unit() {
    return double(uniform_u64(uint64_t(1) << 53)) / double(uint64_t(1) << 53);
}

Scalar Drbg::uniform_scalar(const Group& grp) {
    // unbiased: accept x mod q only below the largest multiple of q in 2^256
    mpz_class top = mpz_class(1) << 256;
    mpz_class cutoff = top - top % grp.q();
    for (;;) {
        Hash256 b = take32();
        mpz_class x = enc::mpz_from_bytes(b);
        if (x < cutoff) return grp.s_from(x);
    }
}

Scalar Drbg::nonzero_scalar(const Group& grp) {
    for (;;) {
        Scalar s = uniform_scalar(grp);
        if (s.v != 0) return s;
    }
}

} // namespace vspace::crypto
