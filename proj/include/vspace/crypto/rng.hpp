// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <string_view>

#include "vspace/crypto/hash.hpp"

namespace vspace::crypto {

// Deterministic hash-counter DRBG (FORMAT.md §2). The engine has no other
// randomness source: every scenario seeds one root Drbg and forks
// per-actor children, so actor streams are independent of scheduling order.
class Drbg {
public:
    explicit Drbg(const Hash256& seed) : seed_(seed) {}
    static Drbg from_u64(uint64_t seed);

    Drbg child(std::string_view role, uint64_t index) const;

    void fill(std::span<uint8_t> out);
    Hash256 take32();
    uint64_t uniform_u64(uint64_t bound); // [0, bound)
    double uniform_unit();                // [0, 1), 53-bit

    Scalar uniform_scalar(const Group& grp);
    Scalar nonzero_scalar(const Group& grp);

private:
    Hash256 seed_;
    uint64_t counter_ = 0;
};

} // namespace vspace::crypto
