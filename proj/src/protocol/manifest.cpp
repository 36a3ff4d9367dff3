// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "vspace/protocol/manifest.hpp"

#include <set>

#include "vspace/crypto/hash.hpp"

namespace vspace::protocol {

const char* phase_name(Phase p) {
    switch (p) {
    case Phase::Setup: return "Setup";
    case Phase::Registration: return "Registration";
    case Phase::Voting: return "Voting";
    case Phase::Tally: return "Tally";
    case Phase::Certified: return "Certified";
    }
    return "?";
}

static void write_manifest_body(enc::Writer& w, const ElectionManifest& m) {
    w.str(m.election_id);
    w.list_header(uint32_t(m.candidates.size()));
    for (auto& c : m.candidates) w.str(c);
    w.list_header(uint32_t(m.officer_vks.size()));
    for (auto& vk : m.officer_vks) write_element(w, vk);
    w.uint(uint64_t(m.officer_quorum));
    w.list_header(uint32_t(m.trustee_vks.size()));
    for (auto& vk : m.trustee_vks) write_element(w, vk);
    w.uint(uint64_t(m.threshold));
    write_element(w, m.registrar_vk);
    w.list_header(uint32_t(m.attestation_allow_list.size()));
    for (auto& h : m.attestation_allow_list) w.bytes(h);
    w.list_header(uint32_t(m.phase_schedule.size()));
    for (auto& [phase, win] : m.phase_schedule) {
        w.uint(uint64_t(phase));
        w.uint(win.open);
        w.uint(win.close);
    }
    w.str(m.group_label);
}

Bytes manifest_signing_bytes(const ElectionManifest& m) {
    enc::Writer w;
    write_manifest_body(w, m);
    return w.take();
}

ElectionManifest sign_manifest(const Group& grp, ElectionManifest draft,
                               std::span<const std::pair<uint32_t, KeyPair>> officers, Drbg& rng) {
    draft.signatures.clear();
    Bytes body = manifest_signing_bytes(draft);
    std::set<uint32_t> seen;
    for (auto& [id, kp] : officers) {
        if (!seen.insert(id).second) continue;
        draft.signatures.emplace_back(id, schnorr_sign(grp, kp, body, "vspace/v1/manifest", rng));
    }
    return draft;
}

void validate_manifest(const Group& grp, const ElectionManifest& m) {
    if (m.election_id.empty()) raise(Errc::ConfigInvalid, "empty election id");
    if (m.candidates.size() < 2) raise(Errc::ConfigInvalid, "need at least 2 candidates");
    std::set<std::string> names(m.candidates.begin(), m.candidates.end());
    if (names.size() != m.candidates.size()) raise(Errc::ConfigInvalid, "duplicate candidate names");
    if (m.officer_vks.empty() || m.officer_quorum < 1 || m.officer_quorum > m.officer_vks.size())
        raise(Errc::ConfigInvalid, "officer quorum out of range");
    if (m.trustee_vks.empty() || m.threshold < 1 || m.threshold > m.trustee_vks.size())
        raise(Errc::ConfigInvalid, "trustee threshold out of range");
    if (m.group_label != grp.label()) raise(Errc::ConfigInvalid, "group label mismatch");

    Bytes body = manifest_signing_bytes(m);
    std::set<uint32_t> valid;
    for (auto& [id, sig] : m.signatures) {
        if (id >= m.officer_vks.size()) raise(Errc::QuorumNotMet, "unknown officer id " + std::to_string(id));
        if (!valid.insert(id).second) raise(Errc::DuplicateSigner, "officer " + std::to_string(id));
        if (!schnorr_verify(grp, m.officer_vks[id], body, "vspace/v1/manifest", sig))
            raise(Errc::QuorumNotMet, "invalid signature from officer " + std::to_string(id));
    }
    if (valid.size() < m.officer_quorum)
        raise(Errc::QuorumNotMet,
              "got " + std::to_string(valid.size()) + ", need " + std::to_string(m.officer_quorum));
}

void write_manifest(enc::Writer& w, const ElectionManifest& m) {
    write_manifest_body(w, m);
    w.list_header(uint32_t(m.signatures.size()));
    for (auto& [id, sig] : m.signatures) {
        w.uint(uint64_t(id));
        write_signature(w, sig);
    }
}

ElectionManifest read_manifest(enc::Reader& r, const Group& grp) {
    ElectionManifest m;
    m.election_id = r.str();
    uint32_t nc = r.list_header();
    for (uint32_t i = 0; i < nc; i++) m.candidates.push_back(r.str());
    uint32_t no = r.list_header();
    for (uint32_t i = 0; i < no; i++) m.officer_vks.push_back(read_element(r, grp));
    m.officer_quorum = uint32_t(r.uint64());
    uint32_t nt = r.list_header();
    for (uint32_t i = 0; i < nt; i++) m.trustee_vks.push_back(read_element(r, grp));
    m.threshold = uint32_t(r.uint64());
    m.registrar_vk = read_element(r, grp);
    uint32_t na = r.list_header();
    for (uint32_t i = 0; i < na; i++) m.attestation_allow_list.push_back(r.bytes32());
    uint32_t np = r.list_header();
    for (uint32_t i = 0; i < np; i++) {
        uint64_t ph = r.uint64();
        if (ph > uint64_t(Phase::Certified)) raise(Errc::ParseError, "unknown phase " + std::to_string(ph));
        PhaseWindow win{r.uint64(), r.uint64()};
        m.phase_schedule.emplace(Phase(ph), win);
    }
    m.group_label = r.str();
    uint32_t ns = r.list_header();
    for (uint32_t i = 0; i < ns; i++) {
        uint32_t id = uint32_t(r.uint64());
        m.signatures.emplace_back(id, read_signature(r, grp));
    }
    return m;
}

} // namespace vspace::protocol
