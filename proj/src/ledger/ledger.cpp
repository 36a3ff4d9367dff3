// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "vspace/ledger/ledger.hpp"

#include <set>

namespace vspace::ledger {

const char* payload_kind_name(PayloadKind k) {
    switch (k) {
    case PayloadKind::Manifest: return "Manifest";
    case PayloadKind::Dealing: return "Dealing";
    case PayloadKind::ElectionKey: return "ElectionKey";
    case PayloadKind::Registration: return "Registration";
    case PayloadKind::Cast: return "Cast";
    case PayloadKind::AggregateTally: return "AggregateTally";
    case PayloadKind::DecryptionShare: return "DecryptionShare";
    case PayloadKind::Result: return "Result";
    case PayloadKind::Certification: return "Certification";
    case PayloadKind::AttestationRecord: return "AttestationRecord";
    }
    return "?";
}

Hash256 compute_entry_hash(const LedgerEntry& e) {
    enc::Writer wi, wk;
    wi.uint(e.index);
    wk.uint(uint64_t(e.kind));
    crypto::Transcript t("vspace/v1/entry");
    t.absorb(wi.out());
    t.absorb(e.prev_hash);
    t.absorb(wk.out());
    t.absorb(e.payload);
    t.absorb_str(e.author);
    return t.digest();
}

const LedgerEntry& Log::append(PayloadKind kind, Bytes payload, const std::string& author,
                               const KeyPair& author_kp, Drbg& rng) {
    LedgerEntry e;
    e.index = entries_.size();
    e.prev_hash = head();
    e.kind = kind;
    e.payload = std::move(payload);
    e.author = author;
    e.entry_hash = compute_entry_hash(e);
    e.author_signature =
        schnorr_sign(*grp_, author_kp, {e.entry_hash.data(), e.entry_hash.size()}, "vspace/v1/entry-sig", rng);
    entries_.push_back(std::move(e));
    return entries_.back();
}

const LedgerEntry& Log::ingest(LedgerEntry e) {
    if (e.index != entries_.size())
        raise(Errc::ParseError, "entry index " + std::to_string(e.index) + " out of order");
    if (e.prev_hash != head()) raise(Errc::ParseError, "entry prev_hash breaks the chain");
    if (e.entry_hash != compute_entry_hash(e)) raise(Errc::ParseError, "entry hash mismatch");
    entries_.push_back(std::move(e));
    return entries_.back();
}

const LedgerEntry& Log::at(uint64_t i) const {
    if (i >= entries_.size()) raise(Errc::IndexOutOfRange, "entry " + std::to_string(i));
    return entries_[size_t(i)];
}

std::vector<Hash256> Log::entry_hashes(uint64_t upto) const {
    if (upto >= entries_.size()) raise(Errc::IndexOutOfRange, "upto " + std::to_string(upto));
    std::vector<Hash256> out;
    out.reserve(size_t(upto) + 1);
    for (uint64_t i = 0; i <= upto; i++) out.push_back(entries_[size_t(i)].entry_hash);
    return out;
}

ChainVerdict verify_chain(const Group& grp, std::span<const LedgerEntry> entries,
                          const AuthorKeys& keys) {
    Hash256 prev{};
    for (uint64_t i = 0; i < entries.size(); i++) {
        const LedgerEntry& e = entries[size_t(i)];
        if (e.index != i) return {false, i, "index mismatch"};
        if (e.prev_hash != prev) return {false, i, "prev_hash linkage broken"};
        if (e.entry_hash != compute_entry_hash(e)) return {false, i, "entry hash mismatch"};
        auto vk = keys(e.author);
        if (!vk) return {false, i, "unknown author '" + e.author + "'"};
        if (!schnorr_verify(grp, *vk, {e.entry_hash.data(), e.entry_hash.size()}, "vspace/v1/entry-sig",
                            e.author_signature))
            return {false, i, "author signature invalid"};
        prev = e.entry_hash;
    }
    return {};
}

static Bytes checkpoint_signing_bytes(uint64_t upto, const Hash256& head, const Hash256& root) {
    crypto::Transcript t("vspace/v1/checkpoint");
    enc::Writer w;
    w.uint(upto);
    t.absorb(w.out());
    t.absorb(head);
    t.absorb(root);
    Hash256 d = t.digest();
    return Bytes(d.begin(), d.end());
}

Checkpoint seal_checkpoint(const Log& log, uint64_t upto,
                           std::span<const std::pair<uint32_t, KeyPair>> officers, uint32_t quorum,
                           Drbg& rng) {
    Checkpoint cp;
    cp.upto_index = upto;
    cp.chain_head = log.at(upto).entry_hash;
    auto hashes = log.entry_hashes(upto);
    cp.merkle_root = merkle_root(hashes);

    std::set<uint32_t> seen;
    Bytes msg = checkpoint_signing_bytes(upto, cp.chain_head, cp.merkle_root);
    for (auto& [id, kp] : officers) {
        if (!seen.insert(id).second) continue; // one voice per officer
        cp.signatures.emplace_back(id, schnorr_sign(log.group(), kp, msg, "vspace/v1/checkpoint", rng));
    }
    if (cp.signatures.size() < quorum)
        raise(Errc::QuorumNotMet, "got " + std::to_string(cp.signatures.size()) + ", need " +
                                      std::to_string(quorum));
    return cp;
}

bool verify_checkpoint(const Group& grp, std::span<const Hash256> entry_hashes, const Checkpoint& cp,
                       std::span<const GroupElement> officer_vks, uint32_t quorum) {
    if (cp.upto_index >= entry_hashes.size()) return false;
    if (cp.chain_head != entry_hashes[size_t(cp.upto_index)]) return false;
    auto covered = entry_hashes.first(size_t(cp.upto_index) + 1);
    if (cp.merkle_root != merkle_root(covered)) return false;

    Bytes msg = checkpoint_signing_bytes(cp.upto_index, cp.chain_head, cp.merkle_root);
    std::set<uint32_t> valid;
    for (auto& [id, sig] : cp.signatures) {
        if (id >= officer_vks.size()) return false;
        if (!schnorr_verify(grp, officer_vks[id], msg, "vspace/v1/checkpoint", sig)) return false;
        valid.insert(id);
    }
    return valid.size() >= quorum;
}

InclusionProof prove_entry_inclusion(const Log& log, uint64_t index, uint64_t upto) {
    if (index > upto) raise(Errc::IndexOutOfRange, "index beyond checkpoint");
    auto hashes = log.entry_hashes(upto);
    return prove_inclusion(hashes, index);
}

void write_entry(enc::Writer& w, const LedgerEntry& e) {
    w.uint(e.index);
    w.bytes(e.prev_hash);
    w.uint(uint64_t(e.kind));
    w.bytes(e.payload);
    w.str(e.author);
    write_signature(w, e.author_signature);
}

LedgerEntry read_entry(enc::Reader& r, const Group& grp) {
    LedgerEntry e;
    e.index = r.uint64();
    e.prev_hash = r.bytes32();
    uint64_t kind = r.uint64();
    if (kind > uint64_t(PayloadKind::AttestationRecord))
        raise(Errc::ParseError, "unknown payload kind " + std::to_string(kind));
    e.kind = PayloadKind(kind);
    e.payload = r.bytes();
    e.author = r.str();
    e.author_signature = read_signature(r, grp);
    e.entry_hash = compute_entry_hash(e);
    return e;
}

void write_checkpoint(enc::Writer& w, const Checkpoint& cp) {
    w.uint(cp.upto_index);
    w.bytes(cp.chain_head);
    w.bytes(cp.merkle_root);
    w.list_header(uint32_t(cp.signatures.size()));
    for (auto& [id, sig] : cp.signatures) {
        w.uint(uint64_t(id));
        write_signature(w, sig);
    }
}

Checkpoint read_checkpoint(enc::Reader& r, const Group& grp) {
    Checkpoint cp;
    cp.upto_index = r.uint64();
    cp.chain_head = r.bytes32();
    cp.merkle_root = r.bytes32();
    uint32_t n = r.list_header();
    for (uint32_t i = 0; i < n; i++) {
        uint32_t id = uint32_t(r.uint64());
        cp.signatures.emplace_back(id, read_signature(r, grp));
    }
    return cp;
}

} // namespace vspace::ledger
