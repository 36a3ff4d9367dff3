// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "vspace/crypto/keys.hpp"

namespace vspace::crypto {

KeyPair keygen(const Group& grp, Drbg& rng) {
    Scalar sk = rng.nonzero_scalar(grp);
    return KeyPair{sk, grp.g_pow(sk)};
}

KeyPair keypair_from_sk(const Group& grp, const Scalar& sk) {
    return KeyPair{sk, grp.g_pow(sk)};
}

static Scalar schnorr_challenge(const Group& grp, const GroupElement& pk, const GroupElement& commit,
                                std::span<const uint8_t> msg, std::string_view domain) {
    Transcript t(domain);
    t.absorb_str(grp.label());
    t.absorb_element(pk);
    t.absorb_element(commit);
    t.absorb(msg);
    return t.challenge(grp);
}

SchnorrSignature schnorr_sign(const Group& grp, const KeyPair& kp, std::span<const uint8_t> msg,
                              std::string_view domain, Drbg& rng) {
    Scalar k = rng.nonzero_scalar(grp);
    GroupElement commit = grp.g_pow(k);
    Scalar c = schnorr_challenge(grp, kp.pk, commit, msg, domain);
    Scalar s = grp.s_sub(k, grp.s_mul(c, kp.sk)); // g^s * pk^c == commit
    return SchnorrSignature{c, s};
}

bool schnorr_verify(const Group& grp, const GroupElement& pk, std::span<const uint8_t> msg,
                    std::string_view domain, const SchnorrSignature& sig) {
    if (!grp.is_element(pk.v)) return false;
    GroupElement commit = grp.mul(grp.g_pow(sig.response), grp.pow(pk, sig.challenge));
    return schnorr_challenge(grp, pk, commit, msg, domain) == sig.challenge;
}

void write_signature(enc::Writer& w, const SchnorrSignature& sig) {
    write_scalar(w, sig.challenge);
    write_scalar(w, sig.response);
}

SchnorrSignature read_signature(enc::Reader& r, const Group& grp) {
    Scalar c = read_scalar(r, grp);
    Scalar s = read_scalar(r, grp);
    return SchnorrSignature{c, s};
}

} // namespace vspace::crypto
