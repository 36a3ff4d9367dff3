// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <map>
#include <optional>
#include <string>

#include "vspace/crypto/keys.hpp"

namespace vspace::identity {

using crypto::Group;
using crypto::GroupElement;
using crypto::KeyPair;
using crypto::SchnorrSignature;

using LogicalTime = uint64_t;

struct DidDocument {
    std::string did; // "did:vspace:" + hex(H(pk))
    GroupElement pk;
    LogicalTime created_at = 0;
};

std::string derive_did(const GroupElement& pk);
DidDocument make_did_document(const GroupElement& pk, LogicalTime now);

struct EligibilityCredential {
    std::string subject_did;
    std::string election_id;
    std::string constituency;
    LogicalTime expires_at = 0;
    SchnorrSignature issuer_signature;
};

EligibilityCredential issue_credential(const Group& grp, const KeyPair& issuer, const std::string& subject_did,
                                       const std::string& election_id, const std::string& constituency,
                                       LogicalTime expires_at, crypto::Drbg& rng);

enum class CredentialFailure { BadSignature, WrongElection, Expired };

struct CredentialVerdict {
    bool ok = false;
    std::optional<CredentialFailure> reason;
};

// Valid iff the issuer signature holds, the election matches, and
// now <= expires_at (expiry bound is inclusive).
CredentialVerdict verify_presentation(const Group& grp, const EligibilityCredential& cred,
                                      const std::string& expected_election, const GroupElement& issuer_pk,
                                      LogicalTime now);

const char* credential_failure_name(CredentialFailure f);

// Continuous-authentication session: scenario-supplied modality scores fused
// by a weighted mean, gated by threshold and freshness. Weights are fixed at
// session creation and sum to 1.
struct AuthSession {
    std::string did;
    std::map<std::string, double> modality_scores;
    std::map<std::string, double> weights;
    LogicalTime last_update = 0;
    LogicalTime ttl = 10;
};

AuthSession make_auth_session(std::string did, std::map<std::string, double> weights, LogicalTime ttl);
void mfca_update(AuthSession& session, const std::string& modality, double score, LogicalTime now);
double mfca_fused_score(const AuthSession& session);
bool mfca_authenticated(const AuthSession& session, double threshold, LogicalTime now);

struct AttestationReport {
    std::string node_id;
    Hash256 measurement;
    LogicalTime issued_at = 0;
    SchnorrSignature authority_signature;
};

AttestationReport attest_node(const Group& grp, const KeyPair& authority, const std::string& node_id,
                              const Hash256& measurement, LogicalTime now, crypto::Drbg& rng);

enum class AttestationFailure { BadSignature, UnknownMeasurement, StaleReport };

struct AttestationVerdict {
    bool ok = false;
    std::optional<AttestationFailure> reason;
};

AttestationVerdict verify_attestation(const Group& grp, const AttestationReport& report,
                                      const GroupElement& authority_pk,
                                      std::span<const Hash256> allow_list, LogicalTime now,
                                      LogicalTime max_age);

const char* attestation_failure_name(AttestationFailure f);

void write_credential(enc::Writer& w, const EligibilityCredential& c);
EligibilityCredential read_credential(enc::Reader& r, const Group& grp);
void write_attestation(enc::Writer& w, const AttestationReport& a);
AttestationReport read_attestation(enc::Reader& r, const Group& grp);

} // namespace vspace::identity
