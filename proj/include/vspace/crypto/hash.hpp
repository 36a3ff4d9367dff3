// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

#include "vspace/crypto/group.hpp"

namespace vspace::crypto {

Hash256 sha256(std::span<const uint8_t> data);

constexpr Hash256 zero_hash() { return Hash256{}; }

// Fiat-Shamir channel over a domain stream (FORMAT.md §2): the domain label
// and every absorbed item are length-prefixed, so distinct item boundaries
// and distinct domains can never collide.
class Transcript {
public:
    explicit Transcript(std::string_view domain);

    void absorb(std::span<const uint8_t> item);
    void absorb(const Hash256& item) { absorb(std::span<const uint8_t>(item.data(), item.size())); }
    void absorb(const Bytes& item) { absorb(std::span<const uint8_t>(item)); }
    void absorb_element(const GroupElement& e) { absorb(element_bytes(e)); }
    void absorb_scalar(const Scalar& s) { absorb(scalar_bytes(s)); }
    void absorb_str(std::string_view s);

    Hash256 digest() const;
    Scalar challenge(const Group& grp) const;

    // Raw domain-stream bytes; used where a protocol signs the stream itself.
    const Bytes& stream() const { return stream_; }

private:
    Bytes stream_;
};

// One-shot domain-stream hash.
Hash256 hash_stream(std::string_view domain, std::initializer_list<std::span<const uint8_t>> items);

Scalar hash_to_scalar(const Group& grp, const Hash256& digest);

// H2: deterministic hash onto the order-q subgroup, never the identity.
GroupElement hash_to_group(const Group& grp, std::span<const uint8_t> input);

} // namespace vspace::crypto
