// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace vspace {

enum class Errc {
    // crypto
    MessageTooLarge,
    InvalidWitness,
    ShareVerificationFailed,
    InsufficientDealings,
    InsufficientShares,
    DuplicateTrusteeIndex,
    NotInRange,
    SignerNotInRing,
    InvalidGroupElement,
    InvalidScalar,
    // identity
    ScoreOutOfRange,
    // ledger
    QuorumNotMet,
    DuplicateSigner,
    IndexOutOfRange,
    ParseError,
    // protocol
    PhaseViolation,
    CredentialRejected,
    AuthenticationFailed,
    DuplicateDid,
    DuplicateKey,
    AttestationRejected,
    EmptyRing,
    NotRegistered,
    DuplicateNullifier,
    InvalidChoice,
    ShareProofInvalid,
    AuditFailed,
    // auditor
    TrackerNotFound,
    // harness
    ConfigInvalid,
    ScenarioHalted,
};

const char* errc_name(Errc c);

// Single exception type for the whole engine; `code` is what tests and the
// CLI dispatch on, `what()` carries the human detail.
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, std::string detail = "") {
    throw Error(code, std::move(detail));
}

} // namespace vspace
