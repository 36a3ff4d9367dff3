// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vspace/crypto/rng.hpp"

namespace vspace::crypto {

struct KeyPair {
    Scalar sk;
    GroupElement pk;
};

KeyPair keygen(const Group& grp, Drbg& rng);
KeyPair keypair_from_sk(const Group& grp, const Scalar& sk);

struct SchnorrSignature {
    Scalar challenge;
    Scalar response;

    bool operator==(const SchnorrSignature&) const = default;
};

SchnorrSignature schnorr_sign(const Group& grp, const KeyPair& kp, std::span<const uint8_t> msg,
                              std::string_view domain, Drbg& rng);
bool schnorr_verify(const Group& grp, const GroupElement& pk, std::span<const uint8_t> msg,
                    std::string_view domain, const SchnorrSignature& sig);

void write_signature(enc::Writer& w, const SchnorrSignature& sig);
SchnorrSignature read_signature(enc::Reader& r, const Group& grp);

} // namespace vspace::crypto
