// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vspace/crypto/elgamal.hpp"

namespace vspace::crypto {

// Sigma protocol for equality of discrete logs: knows x with
// image1 = base1^x and image2 = base2^x. Challenge-recompute form, so the
// proof is just (challenge, response).
struct ChaumPedersenProof {
    Scalar challenge;
    Scalar response;

    bool operator==(const ChaumPedersenProof&) const = default;
};

ChaumPedersenProof cp_prove(const Group& grp, const GroupElement& base1, const GroupElement& base2,
                            const Scalar& witness, const Transcript& ctx, Drbg& rng);
bool cp_verify(const Group& grp, const GroupElement& base1, const GroupElement& image1,
               const GroupElement& base2, const GroupElement& image2,
               const ChaumPedersenProof& proof, const Transcript& ctx);

// Disjunctive proof that a ciphertext encrypts 0 or 1: one real and one
// simulated Chaum-Pedersen branch with a split challenge.
struct BinaryProof {
    GroupElement commit_a0, commit_b0; // branch "m = 0"
    GroupElement commit_a1, commit_b1; // branch "m = 1"
    Scalar challenge0, response0;
    Scalar challenge1, response1;

    bool operator==(const BinaryProof&) const = default;
};

BinaryProof prove_binary(const Group& grp, const GroupElement& pk, uint64_t m, const Scalar& r,
                         const Ciphertext& ct, const Transcript& ctx, Drbg& rng);
bool verify_binary(const Group& grp, const GroupElement& pk, const Ciphertext& ct,
                   const BinaryProof& proof, const Transcript& ctx);

// Ballot sum proof: the componentwise product of a ballot's ciphertexts
// encrypts exactly 1 under randomness_sum = sum of the per-candidate
// randomness.
ChaumPedersenProof prove_sum_one(const Group& grp, const GroupElement& pk, const Scalar& randomness_sum,
                                 const Ciphertext& aggregated, const Transcript& ctx, Drbg& rng);
bool verify_sum_one(const Group& grp, const GroupElement& pk, const Ciphertext& aggregated,
                    const ChaumPedersenProof& proof, const Transcript& ctx);

void write_cp_proof(enc::Writer& w, const ChaumPedersenProof& p);
ChaumPedersenProof read_cp_proof(enc::Reader& r, const Group& grp);
void write_binary_proof(enc::Writer& w, const BinaryProof& p);
BinaryProof read_binary_proof(enc::Reader& r, const Group& grp);

} // namespace vspace::crypto
