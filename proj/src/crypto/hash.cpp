// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "vspace/crypto/hash.hpp"

#include <openssl/evp.h>

namespace vspace::crypto {

Hash256 sha256(std::span<const uint8_t> data) {
    Hash256 out;
    unsigned int len = 0;
    // one-shot EVP; a thread-local ctx avoids the alloc/free per call
    static thread_local EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    EVP_DigestUpdate(ctx, data.data(), data.size());
    EVP_DigestFinal_ex(ctx, out.data(), &len);
    return out;
}

Transcript::Transcript(std::string_view domain) {
    enc::put_be32(stream_, uint32_t(domain.size()));
    stream_.insert(stream_.end(), domain.begin(), domain.end());
}

void Transcript::absorb(std::span<const uint8_t> item) {
    enc::put_be32(stream_, uint32_t(item.size()));
    stream_.insert(stream_.end(), item.begin(), item.end());
}

void Transcript::absorb_str(std::string_view s) { absorb(as_span(s)); }

Hash256 Transcript::digest() const { return sha256(stream_); }

Scalar Transcript::challenge(const Group& grp) const { return hash_to_scalar(grp, digest()); }

Hash256 hash_stream(std::string_view domain, std::initializer_list<std::span<const uint8_t>> items) {
    Transcript t(domain);
    for (auto& it : items) t.absorb(it);
    return t.digest();
}

Scalar hash_to_scalar(const Group& grp, const Hash256& digest) {
    return grp.s_from(enc::mpz_from_bytes(digest));
}

GroupElement hash_to_group(const Group& grp, std::span<const uint8_t> input) {
    const size_t blocks = (mpz_sizeinbase(grp.p().get_mpz_t(), 2) + 255) / 256;
    mpz_class cofactor = (grp.p() - 1) / grp.q();
    for (uint64_t ctr = 0;; ctr++) {
        mpz_class x = 0;
        for (size_t j = 0; j < blocks; j++) {
            enc::Writer wc, wj;
            wc.uint(ctr);
            wj.uint(uint64_t(j));
            Hash256 block = hash_stream("vspace/v1/h2", {input, wc.out(), wj.out()});
            mpz_class b = enc::mpz_from_bytes(block);
            x += b << (256 * j);
        }
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), grp.p().get_mpz_t());
        if (x == 0) continue;
        mpz_class y;
        mpz_powm(y.get_mpz_t(), x.get_mpz_t(), cofactor.get_mpz_t(), grp.p().get_mpz_t());
        if (y != 1) return GroupElement{y};
    }
}

} // namespace vspace::crypto
