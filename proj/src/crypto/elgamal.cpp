// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "vspace/crypto/elgamal.hpp"

#include <cmath>
#include <unordered_map>

namespace vspace::crypto {

Ciphertext encrypt(const Group& grp, const GroupElement& pk, uint64_t m, const Scalar& r,
                   uint64_t max_message) {
    if (m > max_message)
        raise(Errc::MessageTooLarge, std::to_string(m) + " > " + std::to_string(max_message));
    GroupElement a = grp.g_pow(r);
    GroupElement b = grp.mul(grp.pow(pk, r), grp.g_pow(grp.s_from_u64(m)));
    return {a, b};
}

Ciphertext ct_combine(const Group& grp, const Ciphertext& c1, const Ciphertext& c2) {
    return {grp.mul(c1.a, c2.a), grp.mul(c1.b, c2.b)};
}

uint64_t decode_dlog(const Group& grp, const GroupElement& elem, uint64_t max) {
    if (elem == grp.identity()) return 0;
    uint64_t step = uint64_t(std::sqrt(double(max))) + 1;

    std::unordered_map<std::string, uint64_t> baby; // g^j -> j, j < step
    baby.reserve(step);
    GroupElement cur = grp.identity();
    for (uint64_t j = 0; j < step; j++) {
        baby.emplace(cur.v.get_str(16), j);
        cur = grp.mul(cur, grp.g());
    }

    GroupElement giant = grp.inv(grp.g_pow(grp.s_from_u64(step))); // g^-step
    cur = elem;
    for (uint64_t i = 0; i * step <= max; i++) {
        if (auto it = baby.find(cur.v.get_str(16)); it != baby.end()) {
            uint64_t m = i * step + it->second;
            if (m <= max) return m;
        }
        cur = grp.mul(cur, giant);
    }
    raise(Errc::NotInRange, "no discrete log <= " + std::to_string(max));
}

void write_ciphertext(enc::Writer& w, const Ciphertext& ct) {
    write_element(w, ct.a);
    write_element(w, ct.b);
}

Ciphertext read_ciphertext(enc::Reader& r, const Group& grp) {
    GroupElement a = read_element(r, grp);
    GroupElement b = read_element(r, grp);
    return {a, b};
}

} // namespace vspace::crypto
