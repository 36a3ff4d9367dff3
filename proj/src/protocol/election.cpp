// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "vspace/protocol/election.hpp"

#include <algorithm>

namespace vspace::protocol {

namespace {

std::string officer_author(uint32_t id) { return "officer:" + std::to_string(id); }
std::string trustee_author(uint32_t index1) { return "trustee:" + std::to_string(index1); }

crypto::Transcript ballot_proof_ctx(const std::string& election_id, uint32_t candidate) {
    crypto::Transcript t("vspace/v1/cast");
    t.absorb_str(election_id);
    enc::Writer w;
    w.uint(uint64_t(candidate));
    t.absorb(w.out());
    return t;
}

crypto::Transcript sum_proof_ctx(const std::string& election_id) {
    crypto::Transcript t("vspace/v1/cast");
    t.absorb_str(election_id);
    t.absorb_str("sum");
    return t;
}

crypto::Transcript share_proof_ctx(const std::string& election_id, uint32_t candidate) {
    crypto::Transcript t("vspace/v1/tally");
    t.absorb_str(election_id);
    enc::Writer w;
    w.uint(uint64_t(candidate));
    t.absorb(w.out());
    return t;
}

} // namespace

Election::Election() = default;

Election::Election(ElectionManifest manifest, EmsKeys keys, double mfca_threshold,
                   const GroupElement& attestation_authority_pk,
                   std::span<const identity::AttestationReport> officer_attestations, LogicalTime now,
                   LogicalTime attestation_max_age, Drbg& rng)
    : grp_(&Group::by_label(manifest.group_label)),
      manifest_(std::move(manifest)),
      keys_(std::move(keys)),
      mfca_threshold_(mfca_threshold),
      log_(*grp_) {
    validate_manifest(*grp_, manifest_);
    if (keys_->officer_kps.size() != manifest_.officer_vks.size())
        raise(Errc::ConfigInvalid, "officer keypair count does not match manifest");
    for (size_t i = 0; i < manifest_.officer_vks.size(); i++)
        if (keys_->officer_kps[i].pk != manifest_.officer_vks[i])
            raise(Errc::ConfigInvalid, "officer keypair " + std::to_string(i) + " does not match manifest");
    if (keys_->registrar_kp.pk != manifest_.registrar_vk)
        raise(Errc::ConfigInvalid, "registrar keypair does not match manifest");

    // every officer node needs a fresh allow-listed attestation before the
    // board opens
    std::vector<const identity::AttestationReport*> by_officer(manifest_.officer_vks.size(), nullptr);
    for (auto& rep : officer_attestations) {
        for (size_t i = 0; i < manifest_.officer_vks.size(); i++)
            if (rep.node_id == officer_author(uint32_t(i))) by_officer[i] = &rep;
    }
    for (size_t i = 0; i < by_officer.size(); i++) {
        if (!by_officer[i]) raise(Errc::AttestationRejected, officer_author(uint32_t(i)) + ": no report");
        auto verdict = identity::verify_attestation(*grp_, *by_officer[i], attestation_authority_pk,
                                                    manifest_.attestation_allow_list, now,
                                                    attestation_max_age);
        if (!verdict.ok)
            raise(Errc::AttestationRejected,
                  officer_author(uint32_t(i)) + ": " + identity::attestation_failure_name(*verdict.reason));
    }

    append(ledger::PayloadKind::Manifest,
           encode_payload(manifest_, [](enc::Writer& w, const ElectionManifest& m) { write_manifest(w, m); }),
           officer_author(0), officer_kp(0), rng);
    for (size_t i = 0; i < by_officer.size(); i++) {
        append(ledger::PayloadKind::AttestationRecord,
               encode_payload(*by_officer[i],
                              [](enc::Writer& w, const identity::AttestationReport& a) {
                                  identity::write_attestation(w, a);
                              }),
               officer_author(uint32_t(i)), officer_kp(uint32_t(i)), rng);
    }
}

const KeyPair& Election::officer_kp(uint32_t id) const {
    if (!keys_ || id >= keys_->officer_kps.size())
        raise(Errc::ConfigInvalid, "no keypair for officer " + std::to_string(id));
    return keys_->officer_kps[id];
}

std::vector<std::pair<uint32_t, KeyPair>> Election::officer_signer_set() const {
    std::vector<std::pair<uint32_t, KeyPair>> out;
    for (uint32_t i = 0; i < keys_->officer_kps.size(); i++) out.emplace_back(i, keys_->officer_kps[i]);
    return out;
}

ledger::AuthorKeys Election::author_keys() const {
    ElectionManifest m = manifest_;
    return [m](const std::string& author) -> std::optional<GroupElement> {
        if (author.starts_with("officer:")) {
            uint32_t id = uint32_t(std::stoul(author.substr(8)));
            if (id < m.officer_vks.size()) return m.officer_vks[id];
            return std::nullopt;
        }
        if (author.starts_with("trustee:")) {
            uint32_t j = uint32_t(std::stoul(author.substr(8)));
            if (j >= 1 && j <= m.trustee_vks.size()) return m.trustee_vks[j - 1];
            return std::nullopt;
        }
        if (author == "registrar") return m.registrar_vk;
        return std::nullopt;
    };
}

const ledger::LedgerEntry& Election::append(ledger::PayloadKind kind, Bytes payload,
                                            const std::string& author, const KeyPair& kp, Drbg& rng) {
    if (!keys_) raise(Errc::PhaseViolation, "state rebuilt from a transcript is read-only");
    const ledger::LedgerEntry& e = log_.append(kind, std::move(payload), author, kp, rng);
    ingest_and_apply(e);
    return log_.entries().back();
}

void Election::ingest_and_apply(const ledger::LedgerEntry& e) {
    switch (e.kind) {
    case ledger::PayloadKind::Manifest: check_and_apply_manifest(e); break;
    case ledger::PayloadKind::AttestationRecord: check_and_apply_attestation(e); break;
    case ledger::PayloadKind::Dealing: check_and_apply_dealing(e); break;
    case ledger::PayloadKind::ElectionKey: check_and_apply_election_key(e); break;
    case ledger::PayloadKind::Registration: check_and_apply_registration(e); break;
    case ledger::PayloadKind::Cast: check_and_apply_cast(e); break;
    case ledger::PayloadKind::AggregateTally: check_and_apply_aggregate(e); break;
    case ledger::PayloadKind::DecryptionShare: check_and_apply_share(e); break;
    case ledger::PayloadKind::Result: check_and_apply_result(e); break;
    case ledger::PayloadKind::Certification: check_and_apply_certification(e); break;
    }
}

void Election::require_phase(Phase expected, const char* op) const {
    if (phase_ != expected)
        raise(Errc::PhaseViolation,
              std::string(op) + " requires phase " + phase_name(expected) + ", currently " + phase_name(phase_));
}

// --- per-kind validation and state application --------------------------------

void Election::check_and_apply_manifest(const ledger::LedgerEntry& e) {
    if (e.index != 0) raise(Errc::PhaseViolation, "manifest must be the genesis entry");
    enc::Reader r(e.payload);
    ElectionManifest m = read_manifest(r, *grp_);
    r.expect_done();
    validate_manifest(*grp_, m);
    manifest_ = std::move(m);
    phase_ = Phase::Setup;
}

void Election::check_and_apply_attestation(const ledger::LedgerEntry& e) {
    require_phase(Phase::Setup, "attestation record");
    enc::Reader r(e.payload);
    identity::AttestationReport rep = identity::read_attestation(r, *grp_);
    r.expect_done();
    bool known = false;
    for (auto& m : manifest_.attestation_allow_list) known = known || m == rep.measurement;
    if (!known) raise(Errc::AttestationRejected, rep.node_id + ": measurement not allow-listed");
}

void Election::check_and_apply_dealing(const ledger::LedgerEntry& e) {
    require_phase(Phase::Setup, "dealing");
    enc::Reader r(e.payload);
    DealingPayload d = read_dealing_payload(r, *grp_);
    r.expect_done();
    const uint32_t n = uint32_t(manifest_.trustee_vks.size());
    if (d.dealer_index < 1 || d.dealer_index > n)
        raise(Errc::ShareVerificationFailed, "dealer index out of range");
    if (d.commitments.size() != manifest_.threshold)
        raise(Errc::ShareVerificationFailed,
              "dealer " + std::to_string(d.dealer_index) + " committed to wrong degree");
    if (e.author != trustee_author(d.dealer_index))
        raise(Errc::ShareVerificationFailed, "dealing not authored by its dealer");
    uint32_t dealer = d.dealer_index;
    if (!dealings_.emplace(dealer, std::move(d)).second)
        raise(Errc::ShareVerificationFailed, "duplicate dealing from dealer " + std::to_string(dealer));
}

void Election::check_and_apply_election_key(const ledger::LedgerEntry& e) {
    require_phase(Phase::Setup, "election key");
    enc::Reader r(e.payload);
    ElectionKeyPayload key = read_election_key_payload(r, *grp_);
    r.expect_done();
    const uint32_t n = uint32_t(manifest_.trustee_vks.size());
    if (dealings_.size() != n) raise(Errc::InsufficientDealings, "missing dealings");
    if (key.threshold != manifest_.threshold) raise(Errc::ConfigInvalid, "threshold mismatch");
    if (key.dkg_vks.size() != n) raise(Errc::ConfigInvalid, "dkg vk count mismatch");

    GroupElement pk = grp_->identity();
    for (auto& [_, d] : dealings_) pk = grp_->mul(pk, d.commitments[0]);
    if (pk != key.election_pk) raise(Errc::ShareVerificationFailed, "election pk inconsistent with dealings");

    for (uint32_t j = 1; j <= n; j++) {
        GroupElement vk = grp_->identity();
        for (auto& [_, d] : dealings_) {
            Scalar jk = grp_->s_from_u64(1);
            Scalar x = grp_->s_from_u64(j);
            for (auto& c : d.commitments) {
                vk = grp_->mul(vk, grp_->pow(c, jk));
                jk = grp_->s_mul(jk, x);
            }
        }
        if (vk != key.dkg_vks[j - 1])
            raise(Errc::ShareVerificationFailed, "dkg vk " + std::to_string(j) + " inconsistent");
    }
    election_key_ = std::move(key);
    phase_ = Phase::Registration;
    committed_agg_.assign(manifest_.candidates.size(), crypto::ct_identity(*grp_));
}

void Election::check_and_apply_registration(const ledger::LedgerEntry& e) {
    require_phase(Phase::Registration, "registration");
    enc::Reader r(e.payload);
    RegistrationPayload p = read_registration_payload(r, *grp_);
    r.expect_done();
    if (e.author != "registrar") raise(Errc::CredentialRejected, "registration not authored by registrar");
    if (p.did != identity::derive_did(p.voting_pk))
        raise(Errc::CredentialRejected, "did does not derive from the voting key");
    if (p.credential.subject_did != p.did) raise(Errc::CredentialRejected, "credential subject mismatch");
    if (p.credential.election_id != manifest_.election_id)
        raise(Errc::CredentialRejected, "WrongElection");
    Bytes body;
    {
        enc::Writer w;
        w.str(p.credential.subject_did);
        w.str(p.credential.election_id);
        w.str(p.credential.constituency);
        w.uint(p.credential.expires_at);
        body = w.take();
    }
    if (!schnorr_verify(*grp_, manifest_.registrar_vk, body, "vspace/v1/credential",
                        p.credential.issuer_signature))
        raise(Errc::CredentialRejected, "BadSignature");
    if (dids_.contains(p.did)) raise(Errc::DuplicateDid, p.did);
    std::string pk_key = p.voting_pk.v.get_str(10);
    if (used_pks_.contains(pk_key)) raise(Errc::DuplicateKey, "voting key already registered");

    dids_.insert(p.did);
    used_pks_.insert(pk_key);
    registrations_.push_back(std::move(p));
}

void Election::check_and_apply_cast(const ledger::LedgerEntry& e) {
    require_phase(Phase::Voting, "cast");
    enc::Reader r(e.payload);
    CastPayload c = read_cast_payload(r, *grp_);
    r.expect_done();

    const size_t k = manifest_.candidates.size();
    if (c.ballot_cts.size() != k || c.binary_proofs.size() != k)
        raise(Errc::InvalidChoice, "ballot shape mismatch");
    if (c.ring_digest != ring_digest_) raise(Errc::NotRegistered, "stale ring digest");

    auto indices = select_ring_indices(ring_digest_, c.ring_seed, uint32_t(ring_.size()));
    std::vector<GroupElement> subring;
    subring.reserve(indices.size());
    for (uint32_t i : indices) subring.push_back(ring_[i]);

    std::string image_key = c.ring_sig.key_image.v.get_str(10);
    if (key_images_.contains(image_key)) raise(Errc::DuplicateNullifier, "key image already spent");

    Bytes msg = cast_tracker_preimage(manifest_.election_id, c);
    if (c.tracker != crypto::sha256(msg)) raise(Errc::ParseError, "tracker mismatch");
    if (!crypto::lsag_verify(*grp_, subring, ring_digest_, msg, c.ring_sig,
                             cast_context(manifest_.election_id)))
        raise(Errc::NotRegistered, "ring signature invalid");

    const GroupElement& pk = election_key_->election_pk;
    for (size_t i = 0; i < k; i++)
        if (!crypto::verify_binary(*grp_, pk, c.ballot_cts[i], c.binary_proofs[i],
                                   ballot_proof_ctx(manifest_.election_id, uint32_t(i))))
            raise(Errc::InvalidChoice, "binary proof " + std::to_string(i) + " invalid");
    Ciphertext ballot_agg = crypto::ct_identity(*grp_);
    for (auto& ct : c.ballot_cts) ballot_agg = crypto::ct_combine(*grp_, ballot_agg, ct);
    if (!crypto::verify_sum_one(*grp_, pk, ballot_agg, c.sum_proof, sum_proof_ctx(manifest_.election_id)))
        raise(Errc::InvalidChoice, "sum proof invalid");

    key_images_.insert(image_key);
    casts_.push_back({c.tracker, e.index, c.status});
    if (c.status == CastStatus::Committed) {
        for (size_t i = 0; i < k; i++)
            committed_agg_[i] = crypto::ct_combine(*grp_, committed_agg_[i], c.ballot_cts[i]);
        committed_count_++;
    }
}

void Election::check_and_apply_aggregate(const ledger::LedgerEntry& e) {
    require_phase(Phase::Voting, "aggregate");
    enc::Reader r(e.payload);
    AggregatePayload p = read_aggregate_payload(r, *grp_);
    r.expect_done();
    if (p.aggregate_cts.size() != committed_agg_.size() || p.committed_count != committed_count_)
        raise(Errc::PhaseViolation, "aggregate does not match committed casts");
    for (size_t i = 0; i < committed_agg_.size(); i++)
        if (!(p.aggregate_cts[i] == committed_agg_[i]))
            raise(Errc::PhaseViolation, "aggregate ciphertext " + std::to_string(i) + " mismatch");
    aggregate_ = std::move(p);
    candidate_shares_.assign(committed_agg_.size(), {});
    phase_ = Phase::Tally;
}

void Election::check_and_apply_share(const ledger::LedgerEntry& e) {
    require_phase(Phase::Tally, "decryption share");
    enc::Reader r(e.payload);
    SharePayload p = read_share_payload(r, *grp_);
    r.expect_done();
    const uint32_t n = uint32_t(manifest_.trustee_vks.size());
    if (p.trustee_index < 1 || p.trustee_index > n)
        raise(Errc::ShareProofInvalid, "trustee index out of range");
    if (p.candidate_index >= candidate_shares_.size())
        raise(Errc::ShareProofInvalid, "candidate index out of range");
    if (p.share.trustee_index != p.trustee_index)
        raise(Errc::ShareProofInvalid, "inner share index mismatch");
    if (e.author != trustee_author(p.trustee_index))
        raise(Errc::ShareProofInvalid, "share not authored by its trustee");
    if (!share_seen_.insert({p.trustee_index, p.candidate_index}).second)
        raise(Errc::DuplicateTrusteeIndex, "trustee " + std::to_string(p.trustee_index) +
                                               " already shared candidate " +
                                               std::to_string(p.candidate_index));
    const Ciphertext& ct = aggregate_->aggregate_cts[p.candidate_index];
    const GroupElement& vk = election_key_->dkg_vks[p.trustee_index - 1];
    if (!crypto::verify_share_proof(*grp_, ct, p.share, vk,
                                    share_proof_ctx(manifest_.election_id, p.candidate_index)))
        raise(Errc::ShareProofInvalid, "share proof failed for trustee " + std::to_string(p.trustee_index));

    share_trustees_.insert(p.trustee_index);
    candidate_shares_[p.candidate_index].push_back(p.share);
}

void Election::check_and_apply_result(const ledger::LedgerEntry& e) {
    require_phase(Phase::Tally, "result");
    if (result_) raise(Errc::PhaseViolation, "result already published");
    enc::Reader r(e.payload);
    ResultPayload p = read_result_payload(r, *grp_);
    r.expect_done();
    const size_t k = committed_agg_.size();
    if (p.aggregate_cts.size() != k || p.counts.size() != k || p.shares_per_candidate.size() != k)
        raise(Errc::PhaseViolation, "result shape mismatch");
    const uint32_t t = manifest_.threshold;
    uint64_t total = 0;
    for (size_t i = 0; i < k; i++) {
        if (!(p.aggregate_cts[i] == aggregate_->aggregate_cts[i]))
            raise(Errc::PhaseViolation, "result aggregate mismatch");
        auto& shares = p.shares_per_candidate[i];
        if (shares.size() < t)
            raise(Errc::InsufficientShares,
                  "candidate " + std::to_string(i) + ": got " + std::to_string(shares.size()) +
                      ", need " + std::to_string(t));
        for (auto& s : shares) {
            if (s.trustee_index < 1 || s.trustee_index > manifest_.trustee_vks.size())
                raise(Errc::ShareProofInvalid, "result share index");
            if (!crypto::verify_share_proof(*grp_, p.aggregate_cts[i], s,
                                            election_key_->dkg_vks[s.trustee_index - 1],
                                            share_proof_ctx(manifest_.election_id, uint32_t(i))))
                raise(Errc::ShareProofInvalid, "result share proof invalid");
        }
        GroupElement plain = crypto::combine_shares(*grp_, p.aggregate_cts[i], shares, t);
        uint64_t count = crypto::decode_dlog(*grp_, plain, committed_count_);
        if (count != p.counts[i]) raise(Errc::PhaseViolation, "count mismatch for candidate " + std::to_string(i));
        total += count;
    }
    if (total != committed_count_)
        raise(Errc::PhaseViolation, "counts sum " + std::to_string(total) + " != committed " +
                                        std::to_string(committed_count_));
    result_hash_ = result_hash_of(e.payload);
    result_ = std::move(p);
}

void Election::check_and_apply_certification(const ledger::LedgerEntry& e) {
    require_phase(Phase::Tally, "certification");
    if (!result_) raise(Errc::PhaseViolation, "no result to certify");
    enc::Reader r(e.payload);
    CertificationPayload p = read_certification_payload(r, *grp_);
    r.expect_done();
    if (p.result_hash != result_hash_) raise(Errc::AuditFailed, "certified result hash mismatch");
    enc::Reader sr(p.verdict_summary);
    AuditSummary summary = read_audit_summary(sr);
    sr.expect_done();
    if (!summary.overall) {
        std::string first = "audit failed";
        for (auto& c : summary.checks)
            if (!c.pass) {
                first = c.check_id;
                break;
            }
        raise(Errc::AuditFailed, first);
    }
    Bytes msg = certification_signing_bytes(manifest_.election_id, p.result_hash,
                                            verdict_hash_of(p.verdict_summary));
    std::set<uint32_t> valid;
    for (auto& [id, sig] : p.signatures) {
        if (id >= manifest_.officer_vks.size()) raise(Errc::QuorumNotMet, "unknown officer");
        if (!schnorr_verify(*grp_, manifest_.officer_vks[id], msg, "vspace/v1/certification", sig))
            raise(Errc::QuorumNotMet, "bad certification signature from officer " + std::to_string(id));
        valid.insert(id);
    }
    if (valid.size() < manifest_.officer_quorum)
        raise(Errc::QuorumNotMet, "got " + std::to_string(valid.size()) + ", need " +
                                      std::to_string(manifest_.officer_quorum));
    certification_ = std::move(p);
    phase_ = Phase::Certified;
}

void Election::apply_checkpoint(const ledger::Checkpoint& cp, bool trusted_seal) {
    if (!trusted_seal) {
        auto hashes = log_.entry_hashes(cp.upto_index);
        if (!ledger::verify_checkpoint(*grp_, hashes, cp, manifest_.officer_vks, manifest_.officer_quorum))
            raise(Errc::QuorumNotMet, "checkpoint at " + std::to_string(cp.upto_index) + " invalid");
    }
    checkpoints_.push_back(cp);
    // the registration-freeze checkpoint is the one sealed over a
    // Registration entry while registration is still open
    if (phase_ == Phase::Registration &&
        log_.at(cp.upto_index).kind == ledger::PayloadKind::Registration) {
        freeze_ring();
        phase_ = Phase::Voting;
    }
}

void Election::freeze_ring() {
    ring_.clear();
    ring_position_.clear();
    for (auto& reg : registrations_) ring_.push_back(reg.voting_pk);
    std::sort(ring_.begin(), ring_.end(),
              [](const GroupElement& a, const GroupElement& b) { return a.v < b.v; });
    for (uint32_t i = 0; i < ring_.size(); i++) ring_position_[ring_[i].v.get_str(10)] = i;
    ring_digest_ = crypto::ring_digest(ring_);
}

std::optional<uint32_t> Election::ring_position(const GroupElement& pk) const {
    auto it = ring_position_.find(pk.v.get_str(10));
    if (it == ring_position_.end()) return std::nullopt;
    return it->second;
}

// --- protocol operations -------------------------------------------------------

HyokResult Election::run_hyok_ceremony(std::span<const KeyPair> trustee_kps, Drbg& rng) {
    const uint32_t n = uint32_t(manifest_.trustee_vks.size());
    std::vector<crypto::VssDealing> dealings;
    for (uint32_t i = 1; i <= n; i++)
        dealings.push_back(crypto::dkg_deal(*grp_, manifest_.threshold, n, i, rng));
    return run_hyok_ceremony_with(trustee_kps, dealings, rng);
}

HyokResult Election::run_hyok_ceremony_with(std::span<const KeyPair> trustee_kps,
                                            std::span<const crypto::VssDealing> dealings, Drbg& rng) {
    require_phase(Phase::Setup, "hyok ceremony");
    if (election_key_) raise(Errc::PhaseViolation, "ceremony already finalized");
    const uint32_t n = uint32_t(manifest_.trustee_vks.size());
    if (trustee_kps.size() != n) raise(Errc::InsufficientDealings, "trustee keypair count mismatch");
    for (uint32_t i = 0; i < n; i++)
        if (trustee_kps[i].pk != manifest_.trustee_vks[i])
            raise(Errc::ConfigInvalid, "trustee keypair " + std::to_string(i + 1) + " does not match manifest");

    // cross-verify every share before anything reaches the ledger; a bad
    // dealing aborts the ceremony naming its dealer
    crypto::DkgOutput out = crypto::dkg_aggregate(*grp_, dealings, manifest_.threshold, n);

    for (auto& d : dealings) {
        DealingPayload payload{d.dealer_index, d.commitments};
        append(ledger::PayloadKind::Dealing,
               encode_payload(payload, [](enc::Writer& w, const DealingPayload& p) { write_dealing_payload(w, p); }),
               trustee_author(d.dealer_index), trustee_kps[d.dealer_index - 1], rng);
    }
    ElectionKeyPayload key{out.election_pk, out.verification_keys, manifest_.threshold};
    const ledger::LedgerEntry& e = append(
        ledger::PayloadKind::ElectionKey,
        encode_payload(key, [](enc::Writer& w, const ElectionKeyPayload& p) { write_election_key_payload(w, p); }),
        officer_author(0), officer_kp(0), rng);

    // registration-open checkpoint
    auto signers = officer_signer_set();
    apply_checkpoint(ledger::seal_checkpoint(log_, e.index, signers, manifest_.officer_quorum, rng),
                     true);
    return HyokResult{out.election_pk, std::move(out.secret_shares)};
}

const ledger::LedgerEntry& Election::register_voter(const identity::DidDocument& did_doc,
                                                    const identity::EligibilityCredential& credential,
                                                    const identity::AuthSession& session,
                                                    LogicalTime now, Drbg& rng) {
    require_phase(Phase::Registration, "register_voter");
    if (!keys_) raise(Errc::PhaseViolation, "state rebuilt from a transcript is read-only");
    auto verdict = identity::verify_presentation(*grp_, credential, manifest_.election_id,
                                                 manifest_.registrar_vk, now);
    if (!verdict.ok)
        raise(Errc::CredentialRejected, identity::credential_failure_name(*verdict.reason));
    if (credential.subject_did != did_doc.did)
        raise(Errc::CredentialRejected, "credential subject mismatch");
    if (!identity::mfca_authenticated(session, mfca_threshold_, now))
        raise(Errc::AuthenticationFailed, "mfca fused score below threshold or stale");
    if (session.did != did_doc.did) raise(Errc::AuthenticationFailed, "session did mismatch");
    if (dids_.contains(did_doc.did)) raise(Errc::DuplicateDid, did_doc.did);
    if (used_pks_.contains(did_doc.pk.v.get_str(10))) raise(Errc::DuplicateKey, "voting key in use");

    RegistrationPayload payload{did_doc.did, did_doc.pk, credential};
    return append(
        ledger::PayloadKind::Registration,
        encode_payload(payload,
                       [](enc::Writer& w, const RegistrationPayload& p) { write_registration_payload(w, p); }),
        "registrar", keys_->registrar_kp, rng);
}

Hash256 Election::close_registration(Drbg& rng) {
    require_phase(Phase::Registration, "close_registration");
    if (!keys_) raise(Errc::PhaseViolation, "state rebuilt from a transcript is read-only");
    if (registrations_.empty()) raise(Errc::EmptyRing, "no registered voters");
    auto signers = officer_signer_set();
    apply_checkpoint(
        ledger::seal_checkpoint(log_, log_.size() - 1, signers, manifest_.officer_quorum, rng), true);
    return ring_digest_;
}

CastPayload Election::build_cast(const Scalar& voter_sk, uint32_t choice_index, CastStatus status,
                                 Drbg& rng) const {
    require_phase(Phase::Voting, "cast_ballot");
    const size_t k = manifest_.candidates.size();
    if (choice_index >= k) raise(Errc::InvalidChoice, "choice " + std::to_string(choice_index));
    GroupElement voter_pk = grp_->g_pow(voter_sk);
    auto pos = ring_position(voter_pk);
    if (!pos) raise(Errc::NotRegistered, "voting key not in the frozen ring");

    const GroupElement& pk = election_key_->election_pk;
    CastPayload c;
    c.status = status;
    c.ring_digest = ring_digest_;
    Scalar rand_sum = grp_->s_from_u64(0);
    for (size_t i = 0; i < k; i++) {
        uint64_t m = i == choice_index ? 1 : 0;
        Scalar r = rng.uniform_scalar(*grp_);
        Ciphertext ct = crypto::encrypt(*grp_, pk, m, r, 1);
        c.binary_proofs.push_back(crypto::prove_binary(*grp_, pk, m, r, ct,
                                                       ballot_proof_ctx(manifest_.election_id, uint32_t(i)),
                                                       rng));
        c.ballot_cts.push_back(ct);
        rand_sum = grp_->s_add(rand_sum, r);
    }
    Ciphertext ballot_agg = crypto::ct_identity(*grp_);
    for (auto& ct : c.ballot_cts) ballot_agg = crypto::ct_combine(*grp_, ballot_agg, ct);
    c.sum_proof =
        crypto::prove_sum_one(*grp_, pk, rand_sum, ballot_agg, sum_proof_ctx(manifest_.election_id), rng);

    c.ring_seed = grind_ring_seed(ring_digest_, uint32_t(ring_.size()), *pos, rng);
    auto indices = select_ring_indices(ring_digest_, c.ring_seed, uint32_t(ring_.size()));
    std::vector<GroupElement> subring;
    size_t signer_slot = 0;
    for (size_t i = 0; i < indices.size(); i++) {
        subring.push_back(ring_[indices[i]]);
        if (indices[i] == *pos) signer_slot = i;
    }
    Bytes msg = cast_tracker_preimage(manifest_.election_id, c);
    c.ring_sig = crypto::lsag_sign(*grp_, subring, ring_digest_, voter_sk, signer_slot, msg,
                                   cast_context(manifest_.election_id), rng);
    c.tracker = crypto::sha256(msg);
    return c;
}

const ledger::LedgerEntry& Election::submit_cast(const CastPayload& cast, Drbg& rng) {
    require_phase(Phase::Voting, "submit_cast");
    return append(ledger::PayloadKind::Cast,
                  encode_payload(cast, [](enc::Writer& w, const CastPayload& p) { write_cast_payload(w, p); }),
                  officer_author(0), officer_kp(0), rng);
}

CastReceipt Election::cast_ballot(const Scalar& voter_sk, uint32_t choice_index, CastStatus status,
                                  Drbg& rng) {
    CastPayload c = build_cast(voter_sk, choice_index, status, rng);
    const ledger::LedgerEntry& e = submit_cast(c, rng);
    return CastReceipt{c.tracker, e.index, c.status};
}

std::vector<Ciphertext> Election::close_voting(Drbg& rng) {
    require_phase(Phase::Voting, "close_voting");
    if (!keys_) raise(Errc::PhaseViolation, "state rebuilt from a transcript is read-only");
    AggregatePayload payload{committed_agg_, committed_count_};
    const ledger::LedgerEntry& e = append(
        ledger::PayloadKind::AggregateTally,
        encode_payload(payload, [](enc::Writer& w, const AggregatePayload& p) { write_aggregate_payload(w, p); }),
        officer_author(0), officer_kp(0), rng);
    auto signers = officer_signer_set();
    apply_checkpoint(ledger::seal_checkpoint(log_, e.index, signers, manifest_.officer_quorum, rng),
                     true);
    return aggregate_->aggregate_cts;
}

std::vector<SharePayload> Election::build_decryption_shares(uint32_t trustee_index, const Scalar& share,
                                                            Drbg& rng) const {
    require_phase(Phase::Tally, "decryption share");
    std::vector<SharePayload> out;
    for (uint32_t i = 0; i < aggregate_->aggregate_cts.size(); i++) {
        crypto::DecryptionShare ds =
            crypto::partial_decrypt(*grp_, share, trustee_index, aggregate_->aggregate_cts[i],
                                    share_proof_ctx(manifest_.election_id, i), rng);
        out.push_back(SharePayload{trustee_index, i, std::move(ds)});
    }
    return out;
}

void Election::submit_share_payload(const SharePayload& payload, const KeyPair& trustee_kp, Drbg& rng) {
    require_phase(Phase::Tally, "decryption share");
    if (payload.trustee_index < 1 || payload.trustee_index > manifest_.trustee_vks.size())
        raise(Errc::ShareProofInvalid, "trustee index out of range");
    if (trustee_kp.pk != manifest_.trustee_vks[payload.trustee_index - 1])
        raise(Errc::ShareProofInvalid, "trustee keypair mismatch");
    append(ledger::PayloadKind::DecryptionShare,
           encode_payload(payload, [](enc::Writer& w, const SharePayload& p) { write_share_payload(w, p); }),
           trustee_author(payload.trustee_index), trustee_kp, rng);
}

void Election::submit_decryption_share(uint32_t trustee_index, const Scalar& share,
                                       const KeyPair& trustee_kp, Drbg& rng) {
    if (share_trustees_.contains(trustee_index))
        raise(Errc::DuplicateTrusteeIndex, "trustee " + std::to_string(trustee_index) + " already submitted");
    for (auto& p : build_decryption_shares(trustee_index, share, rng))
        submit_share_payload(p, trustee_kp, rng);
}

ResultPayload Election::finalize_tally(Drbg& rng) {
    require_phase(Phase::Tally, "finalize_tally");
    if (result_) raise(Errc::PhaseViolation, "result already published");
    const uint32_t t = manifest_.threshold;
    ResultPayload payload;
    payload.aggregate_cts = aggregate_->aggregate_cts;
    for (size_t i = 0; i < candidate_shares_.size(); i++) {
        auto& shares = candidate_shares_[i];
        if (shares.size() < t)
            raise(Errc::InsufficientShares, "candidate " + std::to_string(i) + ": got " +
                                                std::to_string(shares.size()) + ", need " +
                                                std::to_string(t));
        GroupElement plain = crypto::combine_shares(*grp_, aggregate_->aggregate_cts[i], shares, t);
        payload.counts.push_back(crypto::decode_dlog(*grp_, plain, committed_count_));
        std::vector<crypto::DecryptionShare> used(shares.begin(), shares.end());
        std::sort(used.begin(), used.end(),
                  [](const crypto::DecryptionShare& a, const crypto::DecryptionShare& b) {
                      return a.trustee_index < b.trustee_index;
                  });
        used.resize(t);
        payload.shares_per_candidate.push_back(std::move(used));
    }
    append(ledger::PayloadKind::Result,
           encode_payload(payload, [](enc::Writer& w, const ResultPayload& p) { write_result_payload(w, p); }),
           officer_author(0), officer_kp(0), rng);
    return *result_;
}

const ledger::LedgerEntry& Election::certify_result(const AuditSummary& audit, Drbg& rng) {
    require_phase(Phase::Tally, "certify_result");
    if (!keys_) raise(Errc::PhaseViolation, "state rebuilt from a transcript is read-only");
    if (!result_) raise(Errc::PhaseViolation, "no result to certify");
    if (!audit.overall) {
        std::string first = "audit failed";
        for (auto& c : audit.checks)
            if (!c.pass) {
                first = c.check_id;
                break;
            }
        raise(Errc::AuditFailed, first);
    }
    CertificationPayload payload;
    payload.result_hash = result_hash_;
    {
        enc::Writer w;
        write_audit_summary(w, audit);
        payload.verdict_summary = w.take();
    }
    Bytes msg = certification_signing_bytes(manifest_.election_id, payload.result_hash,
                                            verdict_hash_of(payload.verdict_summary));
    for (uint32_t i = 0; i < keys_->officer_kps.size(); i++)
        payload.signatures.emplace_back(i,
                                        schnorr_sign(*grp_, keys_->officer_kps[i], msg,
                                                     "vspace/v1/certification", rng));

    const ledger::LedgerEntry& e = append(
        ledger::PayloadKind::Certification,
        encode_payload(payload,
                       [](enc::Writer& w, const CertificationPayload& p) { write_certification_payload(w, p); }),
        officer_author(0), officer_kp(0), rng);
    auto signers = officer_signer_set();
    apply_checkpoint(ledger::seal_checkpoint(log_, e.index, signers, manifest_.officer_quorum, rng),
                     true);
    return e;
}

// --- replay ---------------------------------------------------------------------

Election Election::replay(const ledger::TranscriptFile& t) {
    Election e;
    e.grp_ = &Group::by_label(t.group_label);
    e.log_ = ledger::Log(*e.grp_);
    if (t.entries.empty()) raise(Errc::ParseError, "empty transcript");

    // the manifest must parse before author keys can be resolved
    {
        enc::Reader r(t.entries[0].payload);
        e.manifest_ = read_manifest(r, *e.grp_);
    }
    auto keys = e.author_keys();
    auto chain = ledger::verify_chain(*e.grp_, t.entries, keys);
    if (!chain.ok)
        raise(Errc::ParseError,
              "chain invalid at " + std::to_string(chain.first_bad_index) + ": " + chain.reason);

    size_t next_cp = 0;
    for (auto& entry : t.entries) {
        e.log_.ingest(entry);
        e.ingest_and_apply(e.log_.entries().back());
        while (next_cp < t.checkpoints.size() && t.checkpoints[next_cp].upto_index == entry.index) {
            e.apply_checkpoint(t.checkpoints[next_cp], false);
            next_cp++;
        }
    }
    if (next_cp != t.checkpoints.size())
        raise(Errc::ParseError, "checkpoint beyond the entry stream");
    return e;
}

ledger::TranscriptFile Election::transcript() const {
    return ledger::TranscriptFile{grp_->label(), log_.entries(), checkpoints_};
}

Hash256 Election::state_digest() const {
    crypto::Transcript t("vspace/v1/state");
    t.absorb_str(phase_name(phase_));
    {
        enc::Writer w;
        w.list_header(uint32_t(ring_.size()));
        for (auto& pk : ring_) write_element(w, pk);
        t.absorb(w.out());
    }
    {
        enc::Writer w;
        w.list_header(uint32_t(key_images_.size()));
        for (auto& ki : key_images_) w.str(ki); // std::set iterates sorted
        t.absorb(w.out());
    }
    {
        enc::Writer w;
        w.uint(committed_count_);
        for (auto& ct : committed_agg_) write_ciphertext(w, ct);
        if (result_)
            for (auto c : result_->counts) w.uint(c);
        t.absorb(w.out());
    }
    t.absorb(log_.head());
    return t.digest();
}

} // namespace vspace::protocol
