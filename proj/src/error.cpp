// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "vspace/error.hpp"

namespace vspace {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::MessageTooLarge: return "MessageTooLarge";
    case Errc::InvalidWitness: return "InvalidWitness";
    case Errc::ShareVerificationFailed: return "ShareVerificationFailed";
    case Errc::InsufficientDealings: return "InsufficientDealings";
    case Errc::InsufficientShares: return "InsufficientShares";
    case Errc::DuplicateTrusteeIndex: return "DuplicateTrusteeIndex";
    case Errc::NotInRange: return "NotInRange";
    case Errc::SignerNotInRing: return "SignerNotInRing";
    case Errc::InvalidGroupElement: return "InvalidGroupElement";
    case Errc::InvalidScalar: return "InvalidScalar";
    case Errc::ScoreOutOfRange: return "ScoreOutOfRange";
    case Errc::QuorumNotMet: return "QuorumNotMet";
    case Errc::DuplicateSigner: return "DuplicateSigner";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::PhaseViolation: return "PhaseViolation";
    case Errc::CredentialRejected: return "CredentialRejected";
    case Errc::AuthenticationFailed: return "AuthenticationFailed";
    case Errc::DuplicateDid: return "DuplicateDid";
    case Errc::DuplicateKey: return "DuplicateKey";
    case Errc::AttestationRejected: return "AttestationRejected";
    case Errc::EmptyRing: return "EmptyRing";
    case Errc::NotRegistered: return "NotRegistered";
    case Errc::DuplicateNullifier: return "DuplicateNullifier";
    case Errc::InvalidChoice: return "InvalidChoice";
    case Errc::ShareProofInvalid: return "ShareProofInvalid";
    case Errc::AuditFailed: return "AuditFailed";
    case Errc::TrackerNotFound: return "TrackerNotFound";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::ScenarioHalted: return "ScenarioHalted";
    }
    return "UnknownError";
}

} // namespace vspace
