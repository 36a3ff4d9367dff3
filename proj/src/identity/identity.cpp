// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "vspace/identity/identity.hpp"

#include <cmath>

#include "vspace/crypto/hash.hpp"

namespace vspace::identity {

namespace {

// Mathematically equal weighted sums must not lose to the threshold by a
// rounding ulp; scores carry at most a few decimal digits.
constexpr double kScoreEps = 1e-12;

Bytes credential_signing_bytes(const EligibilityCredential& c) {
    enc::Writer w;
    w.str(c.subject_did);
    w.str(c.election_id);
    w.str(c.constituency);
    w.uint(c.expires_at);
    return w.take();
}

Bytes attestation_signing_bytes(const AttestationReport& a) {
    enc::Writer w;
    w.str(a.node_id);
    w.bytes(a.measurement);
    w.uint(a.issued_at);
    return w.take();
}

} // namespace

std::string derive_did(const GroupElement& pk) {
    Hash256 h = crypto::hash_stream("vspace/v1/did", {crypto::element_bytes(pk)});
    return "did:vspace:" + hex_encode(h);
}

DidDocument make_did_document(const GroupElement& pk, LogicalTime now) {
    return DidDocument{derive_did(pk), pk, now};
}

EligibilityCredential issue_credential(const Group& grp, const KeyPair& issuer, const std::string& subject_did,
                                       const std::string& election_id, const std::string& constituency,
                                       LogicalTime expires_at, crypto::Drbg& rng) {
    EligibilityCredential c{subject_did, election_id, constituency, expires_at, {}};
    c.issuer_signature = schnorr_sign(grp, issuer, credential_signing_bytes(c), "vspace/v1/credential", rng);
    return c;
}

CredentialVerdict verify_presentation(const Group& grp, const EligibilityCredential& cred,
                                      const std::string& expected_election, const GroupElement& issuer_pk,
                                      LogicalTime now) {
    if (!schnorr_verify(grp, issuer_pk, credential_signing_bytes(cred), "vspace/v1/credential",
                        cred.issuer_signature))
        return {false, CredentialFailure::BadSignature};
    if (cred.election_id != expected_election) return {false, CredentialFailure::WrongElection};
    if (now > cred.expires_at) return {false, CredentialFailure::Expired};
    return {true, std::nullopt};
}

const char* credential_failure_name(CredentialFailure f) {
    switch (f) {
    case CredentialFailure::BadSignature: return "BadSignature";
    case CredentialFailure::WrongElection: return "WrongElection";
    case CredentialFailure::Expired: return "Expired";
    }
    return "?";
}

AuthSession make_auth_session(std::string did, std::map<std::string, double> weights, LogicalTime ttl) {
    double total = 0;
    for (auto& [_, w] : weights) {
        if (w < 0) raise(Errc::ConfigInvalid, "negative modality weight");
        total += w;
    }
    if (std::abs(total - 1.0) > kScoreEps) raise(Errc::ConfigInvalid, "modality weights must sum to 1");
    AuthSession s;
    s.did = std::move(did);
    s.weights = std::move(weights);
    s.ttl = ttl;
    return s;
}

void mfca_update(AuthSession& session, const std::string& modality, double score, LogicalTime now) {
    if (!(score >= 0.0 && score <= 1.0))
        raise(Errc::ScoreOutOfRange, modality + " score " + std::to_string(score));
    session.modality_scores[modality] = score;
    session.last_update = now;
}

double mfca_fused_score(const AuthSession& session) {
    double fused = 0;
    for (auto& [name, weight] : session.weights) {
        auto it = session.modality_scores.find(name);
        if (it != session.modality_scores.end()) fused += weight * it->second;
    }
    return fused;
}

bool mfca_authenticated(const AuthSession& session, double threshold, LogicalTime now) {
    if (now < session.last_update) return false;
    if (now - session.last_update > session.ttl) return false; // stale
    return mfca_fused_score(session) + kScoreEps >= threshold;
}

AttestationReport attest_node(const Group& grp, const KeyPair& authority, const std::string& node_id,
                              const Hash256& measurement, LogicalTime now, crypto::Drbg& rng) {
    AttestationReport a{node_id, measurement, now, {}};
    a.authority_signature = schnorr_sign(grp, authority, attestation_signing_bytes(a), "vspace/v1/attestation", rng);
    return a;
}

AttestationVerdict verify_attestation(const Group& grp, const AttestationReport& report,
                                      const GroupElement& authority_pk,
                                      std::span<const Hash256> allow_list, LogicalTime now,
                                      LogicalTime max_age) {
    if (!schnorr_verify(grp, authority_pk, attestation_signing_bytes(report), "vspace/v1/attestation",
                        report.authority_signature))
        return {false, AttestationFailure::BadSignature};
    bool known = false;
    for (auto& m : allow_list) known = known || m == report.measurement;
    if (!known) return {false, AttestationFailure::UnknownMeasurement};
    if (now < report.issued_at || now - report.issued_at > max_age)
        return {false, AttestationFailure::StaleReport};
    return {true, std::nullopt};
}

const char* attestation_failure_name(AttestationFailure f) {
    switch (f) {
    case AttestationFailure::BadSignature: return "BadSignature";
    case AttestationFailure::UnknownMeasurement: return "UnknownMeasurement";
    case AttestationFailure::StaleReport: return "StaleReport";
    }
    return "?";
}

void write_credential(enc::Writer& w, const EligibilityCredential& c) {
    w.str(c.subject_did);
    w.str(c.election_id);
    w.str(c.constituency);
    w.uint(c.expires_at);
    write_signature(w, c.issuer_signature);
}

EligibilityCredential read_credential(enc::Reader& r, const Group& grp) {
    EligibilityCredential c;
    c.subject_did = r.str();
    c.election_id = r.str();
    c.constituency = r.str();
    c.expires_at = r.uint64();
    c.issuer_signature = read_signature(r, grp);
    return c;
}

void write_attestation(enc::Writer& w, const AttestationReport& a) {
    w.str(a.node_id);
    w.bytes(a.measurement);
    w.uint(a.issued_at);
    write_signature(w, a.authority_signature);
}

AttestationReport read_attestation(enc::Reader& r, const Group& grp) {
    AttestationReport a;
    a.node_id = r.str();
    a.measurement = r.bytes32();
    a.issued_at = r.uint64();
    a.authority_signature = read_signature(r, grp);
    return a;
}

} // namespace vspace::identity
