// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <vector>

#include "vspace/crypto/keys.hpp"

namespace vspace::crypto {

// Linkable spontaneous anonymous group signature over a pk ring. The key
// image is scoped to link_digest, not to the ring that happens to be signed
// over: two signatures by the same key under the same link_digest share one
// key image even when their rings differ.
struct RingSignature {
    GroupElement key_image;
    Scalar c0;
    std::vector<Scalar> responses; // one per ring member

    bool operator==(const RingSignature&) const = default;
};

// H("vspace/v1/ring"; LIST of pks) — callers sort the list canonically first.
Hash256 ring_digest(std::span<const GroupElement> ring);

GroupElement lsag_key_image(const Group& grp, const Hash256& link_digest, const GroupElement& pk,
                            const Scalar& sk);

RingSignature lsag_sign(const Group& grp, std::span<const GroupElement> ring,
                        const Hash256& link_digest, const Scalar& sk, size_t signer_index,
                        std::span<const uint8_t> msg, const Transcript& ctx, Drbg& rng);

bool lsag_verify(const Group& grp, std::span<const GroupElement> ring, const Hash256& link_digest,
                 std::span<const uint8_t> msg, const RingSignature& sig, const Transcript& ctx);

void write_ring_signature(enc::Writer& w, const RingSignature& sig);
RingSignature read_ring_signature(enc::Reader& r, const Group& grp);

} // namespace vspace::crypto
