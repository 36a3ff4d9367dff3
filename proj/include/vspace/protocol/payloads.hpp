// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vspace/crypto/lsag.hpp"
#include "vspace/crypto/proofs.hpp"
#include "vspace/crypto/vss.hpp"
#include "vspace/identity/identity.hpp"
#include "vspace/protocol/manifest.hpp"

namespace vspace::protocol {

using crypto::BinaryProof;
using crypto::ChaumPedersenProof;
using crypto::Ciphertext;
using crypto::DecryptionShare;
using crypto::RingSignature;
using crypto::Scalar;

// Commitments only; trustees hold their shares, nothing secret lands on the
// ledger.
struct DealingPayload {
    uint32_t dealer_index = 0; // 1..n
    std::vector<GroupElement> commitments;
};

struct ElectionKeyPayload {
    GroupElement election_pk;
    std::vector<GroupElement> dkg_vks; // g^share_j, trustee j at [j-1]
    uint32_t threshold = 0;
};

struct RegistrationPayload {
    std::string did;
    GroupElement voting_pk;
    identity::EligibilityCredential credential;
};

enum class CastStatus : uint8_t { Committed = 0, Spoiled = 1 };

struct CastPayload {
    std::vector<Ciphertext> ballot_cts;     // one per candidate
    std::vector<BinaryProof> binary_proofs; // each plaintext is 0 or 1
    ChaumPedersenProof sum_proof;           // the bits sum to exactly 1
    Hash256 ring_digest;                    // frozen full registration set
    Hash256 ring_seed;                      // derives the decoy subset
    RingSignature ring_sig;
    CastStatus status = CastStatus::Committed;
    Hash256 tracker;
};

struct AggregatePayload {
    std::vector<Ciphertext> aggregate_cts;
    uint64_t committed_count = 0;
};

struct SharePayload {
    uint32_t trustee_index = 0;
    uint32_t candidate_index = 0;
    DecryptionShare share;
};

struct ResultPayload {
    std::vector<Ciphertext> aggregate_cts;
    std::vector<uint64_t> counts;
    std::vector<std::vector<DecryptionShare>> shares_per_candidate;
};

enum class Requirement : uint8_t {
    Eligibility = 0,
    Uniqueness = 1,
    Privacy = 2,
    UniversalAnonymity = 3,
    Fairness = 4,
    Accuracy = 5,
    UniversalVerifiability = 6,
    IndividualVerifiability = 7,
    Robustness = 8,
    SelfTallying = 9,
};

const char* requirement_name(Requirement r);

struct AuditCheck {
    std::string check_id;
    Requirement requirement = Requirement::Accuracy;
    bool pass = false;
    std::string detail;
};

struct AuditSummary {
    std::vector<AuditCheck> checks;
    bool overall = false;
};

struct CertificationPayload {
    Hash256 result_hash;
    Bytes verdict_summary; // encoded AuditSummary
    std::vector<std::pair<uint32_t, SchnorrSignature>> signatures;
};

// --- cast binding -----------------------------------------------------------

// Everything the tracker commits to and the ring signature signs: the cast
// minus its signature and tracker (FORMAT.md §4).
Bytes cast_tracker_preimage(const std::string& election_id, const CastPayload& cast);
Hash256 cast_tracker(const std::string& election_id, const CastPayload& cast);
crypto::Transcript cast_context(const std::string& election_id);

// --- bounded anonymity rings -------------------------------------------------

inline constexpr uint32_t kMaxRingSize = 64;

// Deterministic decoy selection over the frozen registration list: the first
// min(kMaxRingSize, n) distinct pseudorandom indices, ascending. With
// n <= kMaxRingSize every member is selected regardless of seed.
std::vector<uint32_t> select_ring_indices(const Hash256& ring_digest, const Hash256& ring_seed,
                                          uint32_t n_registered);

// Grinds seeds from rng until the selection covers signer_position.
Hash256 grind_ring_seed(const Hash256& ring_digest, uint32_t n_registered, uint32_t signer_position,
                        crypto::Drbg& rng);

// --- serialization -----------------------------------------------------------

void write_dealing_payload(enc::Writer& w, const DealingPayload& p);
DealingPayload read_dealing_payload(enc::Reader& r, const Group& grp);
void write_election_key_payload(enc::Writer& w, const ElectionKeyPayload& p);
ElectionKeyPayload read_election_key_payload(enc::Reader& r, const Group& grp);
void write_registration_payload(enc::Writer& w, const RegistrationPayload& p);
RegistrationPayload read_registration_payload(enc::Reader& r, const Group& grp);
void write_cast_payload(enc::Writer& w, const CastPayload& p);
CastPayload read_cast_payload(enc::Reader& r, const Group& grp);
void write_aggregate_payload(enc::Writer& w, const AggregatePayload& p);
AggregatePayload read_aggregate_payload(enc::Reader& r, const Group& grp);
void write_share_payload(enc::Writer& w, const SharePayload& p);
SharePayload read_share_payload(enc::Reader& r, const Group& grp);
void write_result_payload(enc::Writer& w, const ResultPayload& p);
ResultPayload read_result_payload(enc::Reader& r, const Group& grp);
void write_audit_summary(enc::Writer& w, const AuditSummary& s);
AuditSummary read_audit_summary(enc::Reader& r);
void write_certification_payload(enc::Writer& w, const CertificationPayload& p);
CertificationPayload read_certification_payload(enc::Reader& r, const Group& grp);

template <typename T, typename F>
Bytes encode_payload(const T& payload, F writer) {
    enc::Writer w;
    writer(w, payload);
    return w.take();
}

Hash256 result_hash_of(const Bytes& result_payload_bytes);
Hash256 verdict_hash_of(const Bytes& summary_bytes);
Bytes certification_signing_bytes(const std::string& election_id, const Hash256& result_hash,
                                  const Hash256& verdict_hash);

} // namespace vspace::protocol
