// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vspace/crypto/keys.hpp"

namespace vspace::crypto {

// Exponential ElGamal: b carries g^m, so componentwise products add
// plaintexts. Tallies are recovered by a small-range discrete log.
struct Ciphertext {
    GroupElement a; // g^r
    GroupElement b; // pk^r * g^m

    bool operator==(const Ciphertext&) const = default;
};

Ciphertext encrypt(const Group& grp, const GroupElement& pk, uint64_t m, const Scalar& r,
                   uint64_t max_message);
Ciphertext ct_combine(const Group& grp, const Ciphertext& c1, const Ciphertext& c2);
inline Ciphertext ct_identity(const Group& grp) { return {grp.identity(), grp.identity()}; }

// Baby-step giant-step over exponents 0..max; throws NotInRange when elem is
// not g^m for any m in range.
uint64_t decode_dlog(const Group& grp, const GroupElement& elem, uint64_t max);

void write_ciphertext(enc::Writer& w, const Ciphertext& ct);
Ciphertext read_ciphertext(enc::Reader& r, const Group& grp);

} // namespace vspace::crypto
