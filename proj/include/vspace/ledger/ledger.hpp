// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vspace/crypto/keys.hpp"
#include "vspace/ledger/merkle.hpp"

namespace vspace::ledger {

using crypto::Drbg;
using crypto::Group;
using crypto::GroupElement;
using crypto::KeyPair;
using crypto::SchnorrSignature;

enum class PayloadKind : uint8_t {
    Manifest = 0,
    Dealing = 1,
    ElectionKey = 2,
    Registration = 3,
    Cast = 4,
    AggregateTally = 5,
    DecryptionShare = 6,
    Result = 7,
    Certification = 8,
    AttestationRecord = 9,
};

const char* payload_kind_name(PayloadKind k);

struct LedgerEntry {
    uint64_t index = 0;
    Hash256 prev_hash{};
    PayloadKind kind = PayloadKind::Manifest;
    Bytes payload;
    std::string author;
    SchnorrSignature author_signature;
    Hash256 entry_hash{};
};

Hash256 compute_entry_hash(const LedgerEntry& e);

// Resolves an author string to its registered verification key; the protocol
// layer backs this with the manifest's key lists.
using AuthorKeys = std::function<std::optional<GroupElement>(const std::string& author)>;

// Single-writer append-only bulletin board. Verification never needs a
// secret: the chain plus the author key registry is enough.
class Log {
public:
    explicit Log(const Group& grp) : grp_(&grp) {}

    const LedgerEntry& append(PayloadKind kind, Bytes payload, const std::string& author,
                              const KeyPair& author_kp, Drbg& rng);
    // Build the entry that append would produce, without appending. Callers
    // validate the payload first and push only on success.
    LedgerEntry make_entry(PayloadKind kind, Bytes payload, const std::string& author,
                           const KeyPair& author_kp, Drbg& rng) const;
    const LedgerEntry& push(LedgerEntry e) { return ingest(std::move(e)); }
    // Ingest a pre-built entry (transcript replay); validates chaining+hash.
    const LedgerEntry& ingest(LedgerEntry e);

    const std::vector<LedgerEntry>& entries() const { return entries_; }
    size_t size() const { return entries_.size(); }
    const LedgerEntry& at(uint64_t i) const;
    Hash256 head() const { return entries_.empty() ? Hash256{} : entries_.back().entry_hash; }
    std::vector<Hash256> entry_hashes(uint64_t upto) const; // [0..upto]

    const Group& group() const { return *grp_; }

private:
    const Group* grp_;
    std::vector<LedgerEntry> entries_;
};

struct ChainVerdict {
    bool ok = true;
    uint64_t first_bad_index = 0;
    std::string reason;
};

ChainVerdict verify_chain(const Group& grp, std::span<const LedgerEntry> entries,
                          const AuthorKeys& keys);

struct Checkpoint {
    uint64_t upto_index = 0;
    Hash256 chain_head{};
    Hash256 merkle_root{};
    std::vector<std::pair<uint32_t, SchnorrSignature>> signatures; // (officer id, sig)
};

// Officer ids index into the manifest's officer key list.
Checkpoint seal_checkpoint(const Log& log, uint64_t upto,
                           std::span<const std::pair<uint32_t, KeyPair>> officers, uint32_t quorum,
                           Drbg& rng);
bool verify_checkpoint(const Group& grp, std::span<const Hash256> entry_hashes, const Checkpoint& cp,
                       std::span<const GroupElement> officer_vks, uint32_t quorum);

InclusionProof prove_entry_inclusion(const Log& log, uint64_t index, uint64_t upto);

void write_entry(enc::Writer& w, const LedgerEntry& e);
LedgerEntry read_entry(enc::Reader& r, const Group& grp);
void write_checkpoint(enc::Writer& w, const Checkpoint& cp);
Checkpoint read_checkpoint(enc::Reader& r, const Group& grp);

} // namespace vspace::ledger
