// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "vspace/protocol/payloads.hpp"

#include <set>

namespace vspace::protocol {

const char* requirement_name(Requirement r) {
    switch (r) {
    case Requirement::Eligibility: return "Eligibility";
    case Requirement::Uniqueness: return "Uniqueness";
    case Requirement::Privacy: return "Privacy";
    case Requirement::UniversalAnonymity: return "UniversalAnonymity";
    case Requirement::Fairness: return "Fairness";
    case Requirement::Accuracy: return "Accuracy";
    case Requirement::UniversalVerifiability: return "UniversalVerifiability";
    case Requirement::IndividualVerifiability: return "IndividualVerifiability";
    case Requirement::Robustness: return "Robustness";
    case Requirement::SelfTallying: return "SelfTallying";
    }
    return "?";
}

Bytes cast_tracker_preimage(const std::string& election_id, const CastPayload& cast) {
    crypto::Transcript t("vspace/v1/tracker");
    t.absorb_str(election_id);
    {
        enc::Writer w;
        w.list_header(uint32_t(cast.ballot_cts.size()));
        for (auto& ct : cast.ballot_cts) write_ciphertext(w, ct);
        t.absorb(w.out());
    }
    {
        enc::Writer w;
        w.list_header(uint32_t(cast.binary_proofs.size()));
        for (auto& p : cast.binary_proofs) write_binary_proof(w, p);
        t.absorb(w.out());
    }
    {
        enc::Writer w;
        write_cp_proof(w, cast.sum_proof);
        t.absorb(w.out());
    }
    t.absorb(cast.ring_digest);
    t.absorb(cast.ring_seed);
    {
        enc::Writer w;
        w.uint(uint64_t(cast.status));
        t.absorb(w.out());
    }
    // the preimage is the whole domain stream: the tracker hashes exactly the
    // bytes the ring signature signs
    return t.stream();
}

Hash256 cast_tracker(const std::string& election_id, const CastPayload& cast) {
    return crypto::sha256(cast_tracker_preimage(election_id, cast));
}

crypto::Transcript cast_context(const std::string& election_id) {
    crypto::Transcript t("vspace/v1/cast");
    t.absorb_str(election_id);
    return t;
}

std::vector<uint32_t> select_ring_indices(const Hash256& ring_digest, const Hash256& ring_seed,
                                          uint32_t n_registered) {
    if (n_registered == 0) raise(Errc::EmptyRing, "no registered voters");
    uint32_t want = std::min(kMaxRingSize, n_registered);
    std::set<uint32_t> chosen;
    if (n_registered <= kMaxRingSize) {
        for (uint32_t i = 0; i < n_registered; i++) chosen.insert(i);
    } else {
        for (uint64_t t = 0; chosen.size() < want; t++) {
            enc::Writer w;
            w.uint(t);
            Hash256 h = crypto::hash_stream("vspace/v1/ring-select",
                                            {{ring_digest.data(), ring_digest.size()},
                                             {ring_seed.data(), ring_seed.size()},
                                             w.out()});
            uint64_t x = 0;
            for (int i = 0; i < 8; i++) x = x << 8 | h[i];
            chosen.insert(uint32_t(x % n_registered));
        }
    }
    return std::vector<uint32_t>(chosen.begin(), chosen.end());
}

Hash256 grind_ring_seed(const Hash256& ring_digest, uint32_t n_registered, uint32_t signer_position,
                        crypto::Drbg& rng) {
    if (n_registered <= kMaxRingSize) return Hash256{}; // full ring, zero seed
    for (;;) {
        Hash256 seed = rng.take32();
        auto idx = select_ring_indices(ring_digest, seed, n_registered);
        if (std::binary_search(idx.begin(), idx.end(), signer_position)) return seed;
    }
}

void write_dealing_payload(enc::Writer& w, const DealingPayload& p) {
    w.uint(uint64_t(p.dealer_index));
    w.list_header(uint32_t(p.commitments.size()));
    for (auto& c : p.commitments) write_element(w, c);
}

DealingPayload read_dealing_payload(enc::Reader& r, const Group& grp) {
    DealingPayload p;
    p.dealer_index = uint32_t(r.uint64());
    uint32_t n = r.list_header();
    for (uint32_t i = 0; i < n; i++) p.commitments.push_back(read_element(r, grp));
    return p;
}

void write_election_key_payload(enc::Writer& w, const ElectionKeyPayload& p) {
    write_element(w, p.election_pk);
    w.list_header(uint32_t(p.dkg_vks.size()));
    for (auto& vk : p.dkg_vks) write_element(w, vk);
    w.uint(uint64_t(p.threshold));
}

ElectionKeyPayload read_election_key_payload(enc::Reader& r, const Group& grp) {
    ElectionKeyPayload p;
    p.election_pk = read_element(r, grp);
    uint32_t n = r.list_header();
    for (uint32_t i = 0; i < n; i++) p.dkg_vks.push_back(read_element(r, grp));
    p.threshold = uint32_t(r.uint64());
    return p;
}

void write_registration_payload(enc::Writer& w, const RegistrationPayload& p) {
    w.str(p.did);
    write_element(w, p.voting_pk);
    identity::write_credential(w, p.credential);
}

RegistrationPayload read_registration_payload(enc::Reader& r, const Group& grp) {
    RegistrationPayload p;
    p.did = r.str();
    p.voting_pk = read_element(r, grp);
    p.credential = identity::read_credential(r, grp);
    return p;
}

void write_cast_payload(enc::Writer& w, const CastPayload& p) {
    w.list_header(uint32_t(p.ballot_cts.size()));
    for (auto& ct : p.ballot_cts) write_ciphertext(w, ct);
    w.list_header(uint32_t(p.binary_proofs.size()));
    for (auto& bp : p.binary_proofs) write_binary_proof(w, bp);
    write_cp_proof(w, p.sum_proof);
    w.bytes(p.ring_digest);
    w.bytes(p.ring_seed);
    write_ring_signature(w, p.ring_sig);
    w.uint(uint64_t(p.status));
    w.bytes(p.tracker);
}

CastPayload read_cast_payload(enc::Reader& r, const Group& grp) {
    CastPayload p;
    uint32_t nc = r.list_header();
    for (uint32_t i = 0; i < nc; i++) p.ballot_cts.push_back(read_ciphertext(r, grp));
    uint32_t np = r.list_header();
    for (uint32_t i = 0; i < np; i++) p.binary_proofs.push_back(read_binary_proof(r, grp));
    p.sum_proof = read_cp_proof(r, grp);
    p.ring_digest = r.bytes32();
    p.ring_seed = r.bytes32();
    p.ring_sig = read_ring_signature(r, grp);
    uint64_t status = r.uint64();
    if (status > 1) raise(Errc::ParseError, "unknown cast status");
    p.status = CastStatus(status);
    p.tracker = r.bytes32();
    return p;
}

void write_aggregate_payload(enc::Writer& w, const AggregatePayload& p) {
    w.list_header(uint32_t(p.aggregate_cts.size()));
    for (auto& ct : p.aggregate_cts) write_ciphertext(w, ct);
    w.uint(p.committed_count);
}

AggregatePayload read_aggregate_payload(enc::Reader& r, const Group& grp) {
    AggregatePayload p;
    uint32_t n = r.list_header();
    for (uint32_t i = 0; i < n; i++) p.aggregate_cts.push_back(read_ciphertext(r, grp));
    p.committed_count = r.uint64();
    return p;
}

void write_share_payload(enc::Writer& w, const SharePayload& p) {
    w.uint(uint64_t(p.trustee_index));
    w.uint(uint64_t(p.candidate_index));
    write_decryption_share(w, p.share);
}

SharePayload read_share_payload(enc::Reader& r, const Group& grp) {
    SharePayload p;
    p.trustee_index = uint32_t(r.uint64());
    p.candidate_index = uint32_t(r.uint64());
    p.share = read_decryption_share(r, grp);
    return p;
}

void write_result_payload(enc::Writer& w, const ResultPayload& p) {
    w.list_header(uint32_t(p.aggregate_cts.size()));
    for (auto& ct : p.aggregate_cts) write_ciphertext(w, ct);
    w.list_header(uint32_t(p.counts.size()));
    for (auto c : p.counts) w.uint(c);
    w.list_header(uint32_t(p.shares_per_candidate.size()));
    for (auto& shares : p.shares_per_candidate) {
        w.list_header(uint32_t(shares.size()));
        for (auto& s : shares) write_decryption_share(w, s);
    }
}

ResultPayload read_result_payload(enc::Reader& r, const Group& grp) {
    ResultPayload p;
    uint32_t n = r.list_header();
    for (uint32_t i = 0; i < n; i++) p.aggregate_cts.push_back(read_ciphertext(r, grp));
    uint32_t nc = r.list_header();
    for (uint32_t i = 0; i < nc; i++) p.counts.push_back(r.uint64());
    uint32_t ns = r.list_header();
    for (uint32_t i = 0; i < ns; i++) {
        uint32_t m = r.list_header();
        std::vector<DecryptionShare> shares;
        for (uint32_t j = 0; j < m; j++) shares.push_back(read_decryption_share(r, grp));
        p.shares_per_candidate.push_back(std::move(shares));
    }
    return p;
}

void write_audit_summary(enc::Writer& w, const AuditSummary& s) {
    w.list_header(uint32_t(s.checks.size()));
    for (auto& c : s.checks) {
        w.str(c.check_id);
        w.uint(uint64_t(c.requirement));
        w.uint(uint64_t(c.pass ? 1 : 0));
        w.str(c.detail);
    }
    w.uint(uint64_t(s.overall ? 1 : 0));
}

AuditSummary read_audit_summary(enc::Reader& r) {
    AuditSummary s;
    uint32_t n = r.list_header();
    for (uint32_t i = 0; i < n; i++) {
        AuditCheck c;
        c.check_id = r.str();
        uint64_t req = r.uint64();
        if (req > uint64_t(Requirement::SelfTallying)) raise(Errc::ParseError, "unknown requirement");
        c.requirement = Requirement(req);
        c.pass = r.uint64() != 0;
        c.detail = r.str();
        s.checks.push_back(std::move(c));
    }
    s.overall = r.uint64() != 0;
    return s;
}

void write_certification_payload(enc::Writer& w, const CertificationPayload& p) {
    w.bytes(p.result_hash);
    w.bytes(p.verdict_summary);
    w.list_header(uint32_t(p.signatures.size()));
    for (auto& [id, sig] : p.signatures) {
        w.uint(uint64_t(id));
        write_signature(w, sig);
    }
}

CertificationPayload read_certification_payload(enc::Reader& r, const Group& grp) {
    CertificationPayload p;
    p.result_hash = r.bytes32();
    p.verdict_summary = r.bytes();
    uint32_t n = r.list_header();
    for (uint32_t i = 0; i < n; i++) {
        uint32_t id = uint32_t(r.uint64());
        p.signatures.emplace_back(id, read_signature(r, grp));
    }
    return p;
}

Hash256 result_hash_of(const Bytes& result_payload_bytes) {
    return crypto::hash_stream("vspace/v1/result", {result_payload_bytes});
}

Hash256 verdict_hash_of(const Bytes& summary_bytes) {
    return crypto::hash_stream("vspace/v1/verdict", {summary_bytes});
}

Bytes certification_signing_bytes(const std::string& election_id, const Hash256& result_hash,
                                  const Hash256& verdict_hash) {
    crypto::Transcript t("vspace/v1/certification");
    t.absorb_str(election_id);
    t.absorb(result_hash);
    t.absorb(verdict_hash);
    Hash256 d = t.digest();
    return Bytes(d.begin(), d.end());
}

} // namespace vspace::protocol
