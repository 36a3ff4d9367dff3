// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "vspace/ledger/merkle.hpp"

namespace vspace::ledger {

namespace {

Hash256 leaf_hash(const Hash256& h) {
    return crypto::hash_stream("vspace/v1/leaf", {{h.data(), h.size()}});
}

Hash256 node_hash(const Hash256& l, const Hash256& r) {
    return crypto::hash_stream("vspace/v1/node", {{l.data(), l.size()}, {r.data(), r.size()}});
}

} // namespace

Hash256 merkle_root(std::span<const Hash256> entry_hashes) {
    if (entry_hashes.empty()) raise(Errc::IndexOutOfRange, "merkle root of empty set");
    std::vector<Hash256> level;
    level.reserve(entry_hashes.size());
    for (auto& h : entry_hashes) level.push_back(leaf_hash(h));
    while (level.size() > 1) {
        if (level.size() % 2) level.push_back(level.back());
        std::vector<Hash256> next;
        next.reserve(level.size() / 2);
        for (size_t i = 0; i < level.size(); i += 2) next.push_back(node_hash(level[i], level[i + 1]));
        level = std::move(next);
    }
    return level[0];
}

InclusionProof prove_inclusion(std::span<const Hash256> entry_hashes, uint64_t index) {
    if (index >= entry_hashes.size()) raise(Errc::IndexOutOfRange, "entry " + std::to_string(index));
    InclusionProof proof;
    proof.entry_index = index;

    std::vector<Hash256> level;
    for (auto& h : entry_hashes) level.push_back(leaf_hash(h));
    size_t pos = size_t(index);
    while (level.size() > 1) {
        if (level.size() % 2) level.push_back(level.back());
        size_t sibling = pos ^ 1;
        proof.siblings.push_back(level[sibling]);
        proof.directions.push_back(sibling < pos ? 0 : 1);
        std::vector<Hash256> next;
        for (size_t i = 0; i < level.size(); i += 2) next.push_back(node_hash(level[i], level[i + 1]));
        level = std::move(next);
        pos /= 2;
    }
    return proof;
}

bool verify_inclusion(const Hash256& entry_hash, const InclusionProof& proof, const Hash256& root) {
    if (proof.siblings.size() != proof.directions.size()) return false;
    Hash256 cur = leaf_hash(entry_hash);
    for (size_t i = 0; i < proof.siblings.size(); i++)
        cur = proof.directions[i] == 0 ? node_hash(proof.siblings[i], cur)
                                       : node_hash(cur, proof.siblings[i]);
    return cur == root;
}

void write_inclusion_proof(enc::Writer& w, const InclusionProof& p) {
    w.uint(p.entry_index);
    w.list_header(uint32_t(p.siblings.size()));
    for (auto& s : p.siblings) w.bytes(s);
    w.list_header(uint32_t(p.directions.size()));
    for (auto d : p.directions) w.uint(uint64_t(d));
}

InclusionProof read_inclusion_proof(enc::Reader& r) {
    InclusionProof p;
    p.entry_index = r.uint64();
    uint32_t n = r.list_header();
    for (uint32_t i = 0; i < n; i++) p.siblings.push_back(r.bytes32());
    uint32_t m = r.list_header();
    for (uint32_t i = 0; i < m; i++) {
        uint64_t d = r.uint64();
        if (d > 1) raise(Errc::ParseError, "direction must be 0 or 1");
        p.directions.push_back(uint8_t(d));
    }
    return p;
}

} // namespace vspace::ledger
