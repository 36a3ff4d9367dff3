// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include <doctest.h>

#include "support/election_fixture.hpp"

using namespace vspace;
using namespace vspace::protocol;
using test::Fixture;
using test::Voter;

namespace {

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::ParseError;
}

} // namespace

TEST_CASE("full honest lifecycle with spoiled ballot") {
    Fixture fx(2000);
    Election ems = fx.make_election();
    CHECK(ems.phase() == Phase::Setup);

    HyokResult hyok = ems.run_hyok_ceremony(fx.trustees, fx.rng);
    CHECK(ems.phase() == Phase::Registration);
    CHECK(ems.election_key()->election_pk == hyok.election_pk);

    std::vector<Voter> voters;
    for (int i = 0; i < 6; i++) {
        voters.push_back(fx.make_voter());
        ems.register_voter(voters.back().did_doc, voters.back().credential, voters.back().session, 5,
                           fx.rng);
    }
    CHECK(ems.registered_count() == 6);

    Hash256 digest = ems.close_registration(fx.rng);
    CHECK(ems.phase() == Phase::Voting);
    CHECK(digest == ems.full_ring_digest());
    CHECK(ems.ring().size() == 6);

    // intents: alpha, alpha, beta, gamma(spoiled), beta, alpha
    std::vector<std::pair<uint32_t, CastStatus>> votes = {
        {0, CastStatus::Committed}, {0, CastStatus::Committed}, {1, CastStatus::Committed},
        {2, CastStatus::Spoiled},   {1, CastStatus::Committed}, {0, CastStatus::Committed},
    };
    std::vector<CastReceipt> receipts;
    for (size_t i = 0; i < votes.size(); i++)
        receipts.push_back(ems.cast_ballot(voters[i].kp.sk, votes[i].first, votes[i].second, fx.rng));
    CHECK(ems.committed_count() == 5);

    ems.close_voting(fx.rng);
    CHECK(ems.phase() == Phase::Tally);

    // trustees 1 and 3 respond (t = 2)
    ems.submit_decryption_share(1, hyok.trustee_secret_shares[0], fx.trustees[0], fx.rng);
    ems.submit_decryption_share(3, hyok.trustee_secret_shares[2], fx.trustees[2], fx.rng);

    ResultPayload result = ems.finalize_tally(fx.rng);
    CHECK(result.counts == std::vector<uint64_t>{3, 2, 0}); // spoiled gamma excluded

    AuditSummary audit;
    audit.checks.push_back({"manual", Requirement::Accuracy, true, ""});
    audit.overall = true;
    ems.certify_result(audit, fx.rng);
    CHECK(ems.phase() == Phase::Certified);
    CHECK(ems.checkpoints().size() == 4);
}

TEST_CASE("replay rebuilds bit-identical state") {
    Fixture fx(2001);
    Election ems = fx.make_election();
    HyokResult hyok = ems.run_hyok_ceremony(fx.trustees, fx.rng);
    std::vector<Voter> voters;
    for (int i = 0; i < 4; i++) {
        voters.push_back(fx.make_voter());
        ems.register_voter(voters.back().did_doc, voters.back().credential, voters.back().session, 5,
                           fx.rng);
    }
    ems.close_registration(fx.rng);
    for (size_t i = 0; i < voters.size(); i++)
        ems.cast_ballot(voters[i].kp.sk, uint32_t(i % 3), CastStatus::Committed, fx.rng);
    ems.close_voting(fx.rng);
    ems.submit_decryption_share(1, hyok.trustee_secret_shares[0], fx.trustees[0], fx.rng);
    ems.submit_decryption_share(2, hyok.trustee_secret_shares[1], fx.trustees[1], fx.rng);
    ems.finalize_tally(fx.rng);
    AuditSummary audit{{{"manual", Requirement::Accuracy, true, ""}}, true};
    ems.certify_result(audit, fx.rng);

    ledger::TranscriptFile t = ems.transcript();
    Bytes serialized = ledger::serialize_transcript(t);
    Election rebuilt = Election::replay(ledger::parse_transcript(serialized));
    CHECK(rebuilt.phase() == Phase::Certified);
    CHECK(rebuilt.state_digest() == ems.state_digest());
    CHECK(rebuilt.result()->counts == ems.result()->counts);
    // replayed state refuses mutation
    CHECK(code_of([&] { rebuilt.close_voting(fx.rng); }) == Errc::PhaseViolation);
}

TEST_CASE("setup rejections: quorum and attestation") {
    Fixture fx(2002);
    // manifest signed by too few officers
    {
        ElectionManifest draft = fx.manifest;
        draft.signatures.clear();
        auto two = std::span(fx.officer_ids).first(2);
        ElectionManifest undersigned = sign_manifest(fx.grp, draft, two, fx.rng);
        EmsKeys keys{fx.officers, fx.registrar};
        CHECK(code_of([&] {
                  Election e(undersigned, keys, 0.8, fx.authority.pk, fx.attestations, 2, 100, fx.rng);
              }) == Errc::QuorumNotMet);
    }
    // one officer with a non-allow-listed measurement
    {
        Hash256 rogue{};
        rogue[0] = 0xdd;
        auto reports = fx.attestations;
        reports[2] = identity::attest_node(fx.grp, fx.authority, "officer:2", rogue, 1, fx.rng);
        EmsKeys keys{fx.officers, fx.registrar};
        CHECK(code_of([&] {
                  Election e(fx.manifest, keys, 0.8, fx.authority.pk, reports, 2, 100, fx.rng);
              }) == Errc::AttestationRejected);
    }
    // stale attestation
    {
        auto reports = fx.attestations;
        reports[1] = identity::attest_node(fx.grp, fx.authority, "officer:1", fx.good_measurement, 1, fx.rng);
        EmsKeys keys{fx.officers, fx.registrar};
        CHECK(code_of([&] {
                  Election e(fx.manifest, keys, 0.8, fx.authority.pk, reports, 500, 100, fx.rng);
              }) == Errc::AttestationRejected);
    }
}

TEST_CASE("hyok ceremony aborts naming the faulty dealer") {
    Fixture fx(2003);
    Election ems = fx.make_election();
    std::vector<crypto::VssDealing> dealings;
    for (uint32_t i = 1; i <= 3; i++)
        dealings.push_back(crypto::dkg_deal(fx.grp, 2, 3, i, fx.rng));
    // dealer 2 corrupts the share for trustee 3
    dealings[1].shares.at(3) = fx.grp.s_add(dealings[1].shares.at(3), fx.grp.s_from_u64(1));
    try {
        ems.run_hyok_ceremony_with(fx.trustees, dealings, fx.rng);
        FAIL("expected abort");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ShareVerificationFailed);
        CHECK(std::string(e.what()).find("dealer 2") != std::string::npos);
    }
    // nothing reached the ledger beyond setup entries
    for (auto& entry : ems.log().entries())
        CHECK(entry.kind != ledger::PayloadKind::Dealing);
    CHECK(ems.phase() == Phase::Setup);

    // degenerate 1-of-1 ceremony
    Fixture fx1(2004, 3, 2, 1, 1);
    Election solo = fx1.make_election();
    std::vector<crypto::VssDealing> one = {crypto::dkg_deal(fx1.grp, 1, 1, 1, fx1.rng)};
    HyokResult r = solo.run_hyok_ceremony_with(fx1.trustees, one, fx1.rng);
    CHECK(r.election_pk == one[0].commitments[0]);
}

TEST_CASE("registration rejections") {
    Fixture fx(2005);
    Election ems = fx.make_election();
    HyokResult hyok = ems.run_hyok_ceremony(fx.trustees, fx.rng);
    (void)hyok;

    Voter good = fx.make_voter();
    ems.register_voter(good.did_doc, good.credential, good.session, 5, fx.rng);

    // duplicate did
    CHECK(code_of([&] { ems.register_voter(good.did_doc, good.credential, good.session, 5, fx.rng); }) ==
          Errc::DuplicateDid);

    // fused score 0.79 < 0.8
    Voter weak = fx.make_voter();
    identity::mfca_update(weak.session, "face", 0.9, 5);
    identity::mfca_update(weak.session, "keystroke", 0.68, 5); // 0.45 + 0.34 = 0.79
    CHECK(code_of([&] { ems.register_voter(weak.did_doc, weak.credential, weak.session, 5, fx.rng); }) ==
          Errc::AuthenticationFailed);

    // stale session
    Voter stale = fx.make_voter();
    CHECK(code_of([&] {
              ems.register_voter(stale.did_doc, stale.credential, stale.session, 50, fx.rng);
          }) == Errc::AuthenticationFailed);

    // credential for another election
    Voter wrong = fx.make_voter();
    wrong.credential = identity::issue_credential(fx.grp, fx.registrar, wrong.did_doc.did, "other",
                                                  "district-1", 1000, fx.rng);
    CHECK(code_of([&] { ems.register_voter(wrong.did_doc, wrong.credential, wrong.session, 5, fx.rng); }) ==
          Errc::CredentialRejected);

    // forged credential (signed by a non-registrar key)
    Voter forged = fx.make_voter();
    auto mallory = crypto::keygen(fx.grp, fx.rng);
    forged.credential = identity::issue_credential(fx.grp, mallory, forged.did_doc.did,
                                                   fx.manifest.election_id, "district-1", 1000, fx.rng);
    CHECK(code_of([&] {
              ems.register_voter(forged.did_doc, forged.credential, forged.session, 5, fx.rng);
          }) == Errc::CredentialRejected);

    // expired credential
    Voter late = fx.make_voter();
    late.credential = identity::issue_credential(fx.grp, fx.registrar, late.did_doc.did,
                                                 fx.manifest.election_id, "district-1", 4, fx.rng);
    CHECK(code_of([&] { ems.register_voter(late.did_doc, late.credential, late.session, 5, fx.rng); }) ==
          Errc::CredentialRejected);

    // phase violation before hyok... and after close
    CHECK(code_of([&] { ems.close_registration(fx.rng); ems.close_registration(fx.rng); }) ==
          Errc::PhaseViolation);
}

TEST_CASE("empty ring blocks the election") {
    Fixture fx(2006);
    Election ems = fx.make_election();
    ems.run_hyok_ceremony(fx.trustees, fx.rng);
    CHECK(code_of([&] { ems.close_registration(fx.rng); }) == Errc::EmptyRing);
}

TEST_CASE("cast rejections: double vote, spoil-then-commit, outsider, bad choice") {
    Fixture fx(2007);
    Election ems = fx.make_election();
    ems.run_hyok_ceremony(fx.trustees, fx.rng);
    std::vector<Voter> voters;
    for (int i = 0; i < 3; i++) {
        voters.push_back(fx.make_voter());
        ems.register_voter(voters.back().did_doc, voters.back().credential, voters.back().session, 5,
                           fx.rng);
    }
    ems.close_registration(fx.rng);

    ems.cast_ballot(voters[0].kp.sk, 1, CastStatus::Committed, fx.rng);
    // double vote: same key image
    CHECK(code_of([&] { ems.cast_ballot(voters[0].kp.sk, 2, CastStatus::Committed, fx.rng); }) ==
          Errc::DuplicateNullifier);

    // spoil consumes the nullifier permanently
    ems.cast_ballot(voters[1].kp.sk, 0, CastStatus::Spoiled, fx.rng);
    CHECK(code_of([&] { ems.cast_ballot(voters[1].kp.sk, 0, CastStatus::Committed, fx.rng); }) ==
          Errc::DuplicateNullifier);

    // unregistered key
    auto interloper = crypto::keygen(fx.grp, fx.rng);
    CHECK(code_of([&] { ems.cast_ballot(interloper.sk, 0, CastStatus::Committed, fx.rng); }) ==
          Errc::NotRegistered);

    // invalid choice index
    CHECK(code_of([&] { ems.cast_ballot(voters[2].kp.sk, 3, CastStatus::Committed, fx.rng); }) ==
          Errc::InvalidChoice);
}

TEST_CASE("tampered cast payloads are rejected at the board") {
    Fixture fx(2008);
    Election ems = fx.make_election();
    ems.run_hyok_ceremony(fx.trustees, fx.rng);
    std::vector<Voter> voters;
    for (int i = 0; i < 2; i++) {
        voters.push_back(fx.make_voter());
        ems.register_voter(voters.back().did_doc, voters.back().credential, voters.back().session, 5,
                           fx.rng);
    }
    ems.close_registration(fx.rng);

    CastPayload honest = ems.build_cast(voters[0].kp.sk, 1, CastStatus::Committed, fx.rng);

    // malformed binary proof
    CastPayload bad = honest;
    bad.binary_proofs[0].response0 = fx.grp.s_add(bad.binary_proofs[0].response0, fx.grp.s_from_u64(1));
    CHECK_THROWS_AS(ems.submit_cast(bad, fx.rng), Error);

    // malformed sum proof
    bad = honest;
    bad.sum_proof.response = fx.grp.s_add(bad.sum_proof.response, fx.grp.s_from_u64(1));
    CHECK_THROWS_AS(ems.submit_cast(bad, fx.rng), Error);

    // ring signature over a different message (swapped ciphertexts)
    bad = honest;
    std::swap(bad.ballot_cts[0], bad.ballot_cts[1]);
    CHECK_THROWS_AS(ems.submit_cast(bad, fx.rng), Error);

    // the honest payload still lands
    ems.submit_cast(honest, fx.rng);
    CHECK(ems.committed_count() == 1);
}

TEST_CASE("close_voting aggregate excludes spoiled; zero-committed edge") {
    Fixture fx(2009);
    Election ems = fx.make_election();
    HyokResult hyok = ems.run_hyok_ceremony(fx.trustees, fx.rng);
    std::vector<Voter> voters;
    for (int i = 0; i < 4; i++) {
        voters.push_back(fx.make_voter());
        ems.register_voter(voters.back().did_doc, voters.back().credential, voters.back().session, 5,
                           fx.rng);
    }
    ems.close_registration(fx.rng);
    // committed: alpha, alpha, beta; spoiled: beta
    ems.cast_ballot(voters[0].kp.sk, 0, CastStatus::Committed, fx.rng);
    ems.cast_ballot(voters[1].kp.sk, 0, CastStatus::Committed, fx.rng);
    ems.cast_ballot(voters[2].kp.sk, 1, CastStatus::Committed, fx.rng);
    ems.cast_ballot(voters[3].kp.sk, 1, CastStatus::Spoiled, fx.rng);
    ems.close_voting(fx.rng);
    ems.submit_decryption_share(1, hyok.trustee_secret_shares[0], fx.trustees[0], fx.rng);
    ems.submit_decryption_share(2, hyok.trustee_secret_shares[1], fx.trustees[1], fx.rng);
    ResultPayload result = ems.finalize_tally(fx.rng);
    CHECK(result.counts == std::vector<uint64_t>{2, 1, 0});

    // zero committed ballots: aggregate decrypts to all zeros
    Fixture fx2(2010);
    Election ems2 = fx2.make_election();
    HyokResult hyok2 = ems2.run_hyok_ceremony(fx2.trustees, fx2.rng);
    Voter only = fx2.make_voter();
    ems2.register_voter(only.did_doc, only.credential, only.session, 5, fx2.rng);
    ems2.close_registration(fx2.rng);
    ems2.cast_ballot(only.kp.sk, 0, CastStatus::Spoiled, fx2.rng);
    auto agg = ems2.close_voting(fx2.rng);
    for (auto& ct : agg) CHECK(ct == crypto::ct_identity(fx2.grp));
    ems2.submit_decryption_share(1, hyok2.trustee_secret_shares[0], fx2.trustees[0], fx2.rng);
    ems2.submit_decryption_share(2, hyok2.trustee_secret_shares[1], fx2.trustees[1], fx2.rng);
    CHECK(ems2.finalize_tally(fx2.rng).counts == std::vector<uint64_t>{0, 0, 0});
}

TEST_CASE("tally gating: insufficient shares, duplicates, bad proofs") {
    Fixture fx(2011);
    Election ems = fx.make_election();
    HyokResult hyok = ems.run_hyok_ceremony(fx.trustees, fx.rng);
    Voter v = fx.make_voter();
    ems.register_voter(v.did_doc, v.credential, v.session, 5, fx.rng);
    ems.close_registration(fx.rng);
    ems.cast_ballot(v.kp.sk, 0, CastStatus::Committed, fx.rng);

    // shares before tally phase
    CHECK(code_of([&] {
              ems.submit_decryption_share(1, hyok.trustee_secret_shares[0], fx.trustees[0], fx.rng);
          }) == Errc::PhaseViolation);

    ems.close_voting(fx.rng);

    // only 1 of t=2 shares
    ems.submit_decryption_share(1, hyok.trustee_secret_shares[0], fx.trustees[0], fx.rng);
    CHECK(code_of([&] { ems.finalize_tally(fx.rng); }) == Errc::InsufficientShares);

    // duplicate trustee
    CHECK(code_of([&] {
              ems.submit_decryption_share(1, hyok.trustee_secret_shares[0], fx.trustees[0], fx.rng);
          }) == Errc::DuplicateTrusteeIndex);

    // corrupted share payload
    auto payloads = ems.build_decryption_shares(2, hyok.trustee_secret_shares[1], fx.rng);
    payloads[0].share.share_value =
        fx.grp.mul(payloads[0].share.share_value, fx.grp.g());
    CHECK(code_of([&] { ems.submit_share_payload(payloads[0], fx.trustees[1], fx.rng); }) ==
          Errc::ShareProofInvalid);

    // honest trustee 2 completes the tally
    ems.submit_decryption_share(2, hyok.trustee_secret_shares[1], fx.trustees[1], fx.rng);
    CHECK(ems.finalize_tally(fx.rng).counts == std::vector<uint64_t>{1, 0, 0});
}

TEST_CASE("certification gating") {
    Fixture fx(2012);
    Election ems = fx.make_election();
    HyokResult hyok = ems.run_hyok_ceremony(fx.trustees, fx.rng);
    Voter v = fx.make_voter();
    ems.register_voter(v.did_doc, v.credential, v.session, 5, fx.rng);
    ems.close_registration(fx.rng);
    ems.cast_ballot(v.kp.sk, 1, CastStatus::Committed, fx.rng);
    ems.close_voting(fx.rng);
    ems.submit_decryption_share(1, hyok.trustee_secret_shares[0], fx.trustees[0], fx.rng);
    ems.submit_decryption_share(2, hyok.trustee_secret_shares[1], fx.trustees[1], fx.rng);
    ems.finalize_tally(fx.rng);

    AuditSummary failing{{{"cast.binary_proof", Requirement::Accuracy, false, "injected"}}, false};
    try {
        ems.certify_result(failing, fx.rng);
        FAIL("expected AuditFailed");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::AuditFailed);
        CHECK(std::string(e.what()).find("cast.binary_proof") != std::string::npos);
    }

    AuditSummary passing{{{"all", Requirement::Accuracy, true, ""}}, true};
    ems.certify_result(passing, fx.rng);
    CHECK(ems.phase() == Phase::Certified);
}

TEST_CASE("phase transitions are strictly forward on the ledger") {
    Fixture fx(2013);
    Election ems = fx.make_election();
    HyokResult hyok = ems.run_hyok_ceremony(fx.trustees, fx.rng);
    Voter v = fx.make_voter();
    ems.register_voter(v.did_doc, v.credential, v.session, 5, fx.rng);
    ems.close_registration(fx.rng);
    ems.cast_ballot(v.kp.sk, 0, CastStatus::Committed, fx.rng);
    ems.close_voting(fx.rng);
    ems.submit_decryption_share(1, hyok.trustee_secret_shares[0], fx.trustees[0], fx.rng);
    ems.submit_decryption_share(2, hyok.trustee_secret_shares[1], fx.trustees[1], fx.rng);
    ems.finalize_tally(fx.rng);
    ems.certify_result(AuditSummary{{{"all", Requirement::Accuracy, true, ""}}, true}, fx.rng);

    // kinds that mark transitions appear in strictly increasing phase order
    std::vector<Phase> seen;
    for (auto& e : ems.log().entries()) {
        switch (e.kind) {
        case ledger::PayloadKind::Manifest: seen.push_back(Phase::Setup); break;
        case ledger::PayloadKind::ElectionKey: seen.push_back(Phase::Registration); break;
        case ledger::PayloadKind::AggregateTally: seen.push_back(Phase::Tally); break;
        case ledger::PayloadKind::Certification: seen.push_back(Phase::Certified); break;
        default: break;
        }
    }
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    CHECK(seen.size() == 4);
}
