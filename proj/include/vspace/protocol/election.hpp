// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <optional>
#include <set>

#include "vspace/ledger/transcript_file.hpp"
#include "vspace/protocol/payloads.hpp"

namespace vspace::protocol {

using identity::LogicalTime;

// Operating keys of the election management system. Officer keypairs line up
// with the manifest's officer_vks; the registrar authors Registration
// entries. Absent when a state was rebuilt from a transcript (read-only).
struct EmsKeys {
    std::vector<KeyPair> officer_kps;
    KeyPair registrar_kp;
};

struct HyokResult {
    GroupElement election_pk;
    // Returned to the caller (the trustees); the election state never keeps
    // them: shares exist on no ledger and in no EMS field.
    std::vector<Scalar> trustee_secret_shares;
};

struct CastReceipt {
    Hash256 tracker;
    uint64_t entry_index = 0;
    CastStatus status = CastStatus::Committed;
};

// The election state machine. Every mutation is a validated ledger append;
// the full state is a deterministic fold over (entries, checkpoints), which
// `replay` re-runs from a transcript with identical accept/reject behaviour.
class Election {
public:
    Election(ElectionManifest manifest, EmsKeys keys, double mfca_threshold,
             const GroupElement& attestation_authority_pk,
             std::span<const identity::AttestationReport> officer_attestations, LogicalTime now,
             LogicalTime attestation_max_age, Drbg& rng);

    static Election replay(const ledger::TranscriptFile& t);

    // --- protocol operations -------------------------------------------------
    HyokResult run_hyok_ceremony(std::span<const KeyPair> trustee_kps, Drbg& rng);
    // Same, with caller-supplied dealings (fault injection in tests and
    // adversary scenarios). Aborts before anything is appended if any
    // cross-share fails verification.
    HyokResult run_hyok_ceremony_with(std::span<const KeyPair> trustee_kps,
                                      std::span<const crypto::VssDealing> dealings, Drbg& rng);

    const ledger::LedgerEntry& register_voter(const identity::DidDocument& did_doc,
                                              const identity::EligibilityCredential& credential,
                                              const identity::AuthSession& session, LogicalTime now,
                                              Drbg& rng);

    Hash256 close_registration(Drbg& rng);

    CastPayload build_cast(const Scalar& voter_sk, uint32_t choice_index, CastStatus status,
                           Drbg& rng) const;
    const ledger::LedgerEntry& submit_cast(const CastPayload& cast, Drbg& rng);
    CastReceipt cast_ballot(const Scalar& voter_sk, uint32_t choice_index, CastStatus status,
                            Drbg& rng);

    std::vector<Ciphertext> close_voting(Drbg& rng);

    std::vector<SharePayload> build_decryption_shares(uint32_t trustee_index, const Scalar& share,
                                                      Drbg& rng) const;
    void submit_share_payload(const SharePayload& payload, const KeyPair& trustee_kp, Drbg& rng);
    void submit_decryption_share(uint32_t trustee_index, const Scalar& share,
                                 const KeyPair& trustee_kp, Drbg& rng);

    ResultPayload finalize_tally(Drbg& rng);
    const ledger::LedgerEntry& certify_result(const AuditSummary& audit, Drbg& rng);

    // --- views ---------------------------------------------------------------
    Phase phase() const { return phase_; }
    const ElectionManifest& manifest() const { return manifest_; }
    const Group& group() const { return *grp_; }
    const ledger::Log& log() const { return log_; }
    const std::vector<ledger::Checkpoint>& checkpoints() const { return checkpoints_; }
    const std::vector<GroupElement>& ring() const { return ring_; }
    const Hash256& full_ring_digest() const { return ring_digest_; }
    size_t registered_count() const { return registrations_.size(); }
    const std::optional<ElectionKeyPayload>& election_key() const { return election_key_; }
    uint64_t committed_count() const { return committed_count_; }
    const std::optional<ResultPayload>& result() const { return result_; }
    std::optional<uint32_t> ring_position(const GroupElement& pk) const;

    ledger::TranscriptFile transcript() const;
    // Digest of the derived state (phase, ring, nullifiers, tallies); equal
    // digests mean replay reproduced the state bit-exactly.
    Hash256 state_digest() const;

    ledger::AuthorKeys author_keys() const;

private:
    Election(); // replay construction

    const ledger::LedgerEntry& append(ledger::PayloadKind kind, Bytes payload,
                                      const std::string& author, const KeyPair& kp, Drbg& rng);
    void ingest_and_apply(const ledger::LedgerEntry& e);
    void apply_checkpoint(const ledger::Checkpoint& cp, bool trusted_seal);

    // validate-then-apply, one pair per payload kind; both the live path and
    // replay run exactly this code
    void check_and_apply_manifest(const ledger::LedgerEntry& e);
    void check_and_apply_attestation(const ledger::LedgerEntry& e);
    void check_and_apply_dealing(const ledger::LedgerEntry& e);
    void check_and_apply_election_key(const ledger::LedgerEntry& e);
    void check_and_apply_registration(const ledger::LedgerEntry& e);
    void check_and_apply_cast(const ledger::LedgerEntry& e);
    void check_and_apply_aggregate(const ledger::LedgerEntry& e);
    void check_and_apply_share(const ledger::LedgerEntry& e);
    void check_and_apply_result(const ledger::LedgerEntry& e);
    void check_and_apply_certification(const ledger::LedgerEntry& e);

    void require_phase(Phase expected, const char* op) const;
    void freeze_ring();
    const KeyPair& officer_kp(uint32_t id) const;
    std::vector<std::pair<uint32_t, KeyPair>> officer_signer_set() const;

    const Group* grp_ = nullptr;
    ElectionManifest manifest_;
    std::optional<EmsKeys> keys_;
    double mfca_threshold_ = 0.8;
    Phase phase_ = Phase::Setup;
    ledger::Log log_{Group::by_label("toy")}; // re-seated in both ctors
    std::vector<ledger::Checkpoint> checkpoints_;

    std::vector<RegistrationPayload> registrations_;
    std::set<std::string> dids_;
    std::set<std::string> used_pks_; // decimal pk values

    std::vector<GroupElement> ring_; // frozen, ascending
    std::map<std::string, uint32_t> ring_position_;
    Hash256 ring_digest_{};

    std::map<uint32_t, DealingPayload> dealings_;
    std::optional<ElectionKeyPayload> election_key_;

    std::set<std::string> key_images_;
    struct CastInfo {
        Hash256 tracker;
        uint64_t entry_index;
        CastStatus status;
    };
    std::vector<CastInfo> casts_;
    std::vector<Ciphertext> committed_agg_;
    uint64_t committed_count_ = 0;

    std::optional<AggregatePayload> aggregate_;
    std::set<std::pair<uint32_t, uint32_t>> share_seen_; // (trustee, candidate)
    std::set<uint32_t> share_trustees_;
    std::vector<std::vector<DecryptionShare>> candidate_shares_;
    std::optional<ResultPayload> result_;
    Hash256 result_hash_{};
    std::optional<CertificationPayload> certification_;
};

} // namespace vspace::protocol
