// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "vspace/crypto/lsag.hpp"

namespace vspace::crypto {

Hash256 ring_digest(std::span<const GroupElement> ring) {
    enc::Writer w;
    w.list_header(uint32_t(ring.size()));
    for (auto& pk : ring) write_element(w, pk);
    Transcript t("vspace/v1/ring");
    t.absorb(w.out());
    return t.digest();
}

static GroupElement member_base(const Group& grp, const Hash256& link_digest, const GroupElement& pk) {
    Bytes input(link_digest.begin(), link_digest.end());
    Bytes pkb = element_bytes(pk);
    input.insert(input.end(), pkb.begin(), pkb.end());
    return hash_to_group(grp, input);
}

GroupElement lsag_key_image(const Group& grp, const Hash256& link_digest, const GroupElement& pk,
                            const Scalar& sk) {
    return grp.pow(member_base(grp, link_digest, pk), sk);
}

static Hash256 chain_base(const Group& grp, const Transcript& ctx, const Hash256& link_digest,
                          std::span<const GroupElement> ring, const GroupElement& key_image,
                          std::span<const uint8_t> msg) {
    enc::Writer w;
    w.list_header(uint32_t(ring.size()));
    for (auto& pk : ring) write_element(w, pk);
    Transcript t("vspace/v1/lsag");
    t.absorb_str(grp.label());
    t.absorb(ctx.digest());
    t.absorb(link_digest);
    t.absorb(w.out());
    t.absorb_element(key_image);
    t.absorb(msg);
    return t.digest();
}

static Scalar step_challenge(const Group& grp, const Hash256& base, const GroupElement& l,
                             const GroupElement& r) {
    Transcript t("vspace/v1/lsag-step");
    t.absorb(base);
    t.absorb_element(l);
    t.absorb_element(r);
    return t.challenge(grp);
}

RingSignature lsag_sign(const Group& grp, std::span<const GroupElement> ring,
                        const Hash256& link_digest, const Scalar& sk, size_t signer_index,
                        std::span<const uint8_t> msg, const Transcript& ctx, Drbg& rng) {
    const size_t n = ring.size();
    if (n == 0) raise(Errc::SignerNotInRing, "empty ring");
    if (signer_index >= n || ring[signer_index] != grp.g_pow(sk))
        raise(Errc::SignerNotInRing, "secret key does not match ring slot");

    std::vector<GroupElement> bases(n);
    for (size_t i = 0; i < n; i++) bases[i] = member_base(grp, link_digest, ring[i]);

    RingSignature sig;
    sig.key_image = grp.pow(bases[signer_index], sk);
    sig.responses.resize(n);
    Hash256 base = chain_base(grp, ctx, link_digest, ring, sig.key_image, msg);

    std::vector<Scalar> c(n);
    Scalar alpha = rng.nonzero_scalar(grp);
    c[(signer_index + 1) % n] =
        step_challenge(grp, base, grp.g_pow(alpha), grp.pow(bases[signer_index], alpha));

    for (size_t k = 1; k < n; k++) {
        size_t i = (signer_index + k) % n;
        sig.responses[i] = rng.uniform_scalar(grp);
        GroupElement l = grp.mul(grp.g_pow(sig.responses[i]), grp.pow(ring[i], c[i]));
        GroupElement r = grp.mul(grp.pow(bases[i], sig.responses[i]), grp.pow(sig.key_image, c[i]));
        c[(i + 1) % n] = step_challenge(grp, base, l, r);
    }
    sig.responses[signer_index] = grp.s_sub(alpha, grp.s_mul(c[signer_index], sk));
    sig.c0 = c[0];
    return sig;
}

bool lsag_verify(const Group& grp, std::span<const GroupElement> ring, const Hash256& link_digest,
                 std::span<const uint8_t> msg, const RingSignature& sig, const Transcript& ctx) {
    const size_t n = ring.size();
    if (n == 0 || sig.responses.size() != n) return false;
    if (!grp.is_element(sig.key_image.v)) return false;

    Hash256 base = chain_base(grp, ctx, link_digest, ring, sig.key_image, msg);
    Scalar c = sig.c0;
    for (size_t i = 0; i < n; i++) {
        GroupElement hi = member_base(grp, link_digest, ring[i]);
        GroupElement l = grp.mul(grp.g_pow(sig.responses[i]), grp.pow(ring[i], c));
        GroupElement r = grp.mul(grp.pow(hi, sig.responses[i]), grp.pow(sig.key_image, c));
        c = step_challenge(grp, base, l, r);
    }
    return c == sig.c0;
}

void write_ring_signature(enc::Writer& w, const RingSignature& sig) {
    write_element(w, sig.key_image);
    write_scalar(w, sig.c0);
    w.list_header(uint32_t(sig.responses.size()));
    for (auto& s : sig.responses) write_scalar(w, s);
}

RingSignature read_ring_signature(enc::Reader& r, const Group& grp) {
    RingSignature sig;
    sig.key_image = read_element(r, grp);
    sig.c0 = read_scalar(r, grp);
    uint32_t n = r.list_header();
    sig.responses.reserve(n);
    for (uint32_t i = 0; i < n; i++) sig.responses.push_back(read_scalar(r, grp));
    return sig;
}

} // namespace vspace::crypto
