// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "vspace/crypto/keys.hpp"

namespace vspace::protocol {

using crypto::Drbg;
using crypto::Group;
using crypto::GroupElement;
using crypto::KeyPair;
using crypto::SchnorrSignature;
using identity_time = uint64_t;

enum class Phase : uint8_t { Setup = 0, Registration = 1, Voting = 2, Tally = 3, Certified = 4 };

const char* phase_name(Phase p);

struct PhaseWindow {
    uint64_t open = 0;
    uint64_t close = 0;
};

// The multi-signed contract governing one election. Officer signatures cover
// the canonical encoding of everything above the signature list.
struct ElectionManifest {
    std::string election_id;
    std::vector<std::string> candidates;
    std::vector<GroupElement> officer_vks;
    uint32_t officer_quorum = 0;
    std::vector<GroupElement> trustee_vks; // trustee signing keys (ledger authorship)
    uint32_t threshold = 0;                // t of n trustees for decryption
    GroupElement registrar_vk;
    std::vector<Hash256> attestation_allow_list;
    std::map<Phase, PhaseWindow> phase_schedule;
    std::string group_label;
    std::vector<std::pair<uint32_t, SchnorrSignature>> signatures; // (officer id, sig)
};

Bytes manifest_signing_bytes(const ElectionManifest& m);

// Collects signatures from the given officers onto the draft.
ElectionManifest sign_manifest(const Group& grp, ElectionManifest draft,
                               std::span<const std::pair<uint32_t, KeyPair>> officers, Drbg& rng);

// Structural invariants + quorum of valid, distinct officer signatures.
void validate_manifest(const Group& grp, const ElectionManifest& m);

void write_manifest(enc::Writer& w, const ElectionManifest& m);
ElectionManifest read_manifest(enc::Reader& r, const Group& grp);

} // namespace vspace::protocol
