// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <vector>

#include "vspace/crypto/hash.hpp"

namespace vspace::ledger {

// Binary tree over entry hashes with domain-separated leaf/interior hashing;
// odd levels duplicate their last node (FORMAT.md §4).
Hash256 merkle_root(std::span<const Hash256> entry_hashes);

struct InclusionProof {
    uint64_t entry_index = 0;
    std::vector<Hash256> siblings;
    std::vector<uint8_t> directions; // 0 = sibling on the left, 1 = on the right
};

InclusionProof prove_inclusion(std::span<const Hash256> entry_hashes, uint64_t index);
bool verify_inclusion(const Hash256& entry_hash, const InclusionProof& proof, const Hash256& root);

void write_inclusion_proof(enc::Writer& w, const InclusionProof& p);
InclusionProof read_inclusion_proof(enc::Reader& r);

} // namespace vspace::ledger
