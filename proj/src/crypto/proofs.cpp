// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "vspace/crypto/proofs.hpp"

namespace vspace::crypto {

static Scalar cp_challenge(const Group& grp, const Transcript& ctx, const GroupElement& base1,
                           const GroupElement& image1, const GroupElement& base2,
                           const GroupElement& image2, const GroupElement& commit1,
                           const GroupElement& commit2) {
    Transcript t = ctx;
    t.absorb_element(base1);
    t.absorb_element(image1);
    t.absorb_element(base2);
    t.absorb_element(image2);
    t.absorb_element(commit1);
    t.absorb_element(commit2);
    return t.challenge(grp);
}

ChaumPedersenProof cp_prove(const Group& grp, const GroupElement& base1, const GroupElement& base2,
                            const Scalar& witness, const Transcript& ctx, Drbg& rng) {
    GroupElement image1 = grp.pow(base1, witness);
    GroupElement image2 = grp.pow(base2, witness);
    Scalar w = rng.nonzero_scalar(grp);
    GroupElement commit1 = grp.pow(base1, w);
    GroupElement commit2 = grp.pow(base2, w);
    Scalar c = cp_challenge(grp, ctx, base1, image1, base2, image2, commit1, commit2);
    Scalar z = grp.s_add(w, grp.s_mul(c, witness)); // base^z == commit * image^c
    return {c, z};
}

bool cp_verify(const Group& grp, const GroupElement& base1, const GroupElement& image1,
               const GroupElement& base2, const GroupElement& image2,
               const ChaumPedersenProof& proof, const Transcript& ctx) {
    GroupElement commit1 = grp.div(grp.pow(base1, proof.response), grp.pow(image1, proof.challenge));
    GroupElement commit2 = grp.div(grp.pow(base2, proof.response), grp.pow(image2, proof.challenge));
    return cp_challenge(grp, ctx, base1, image1, base2, image2, commit1, commit2) == proof.challenge;
}

static Scalar binary_challenge(const Group& grp, const Transcript& ctx, const GroupElement& pk,
                               const Ciphertext& ct, const BinaryProof& p) {
    Transcript t = ctx;
    t.absorb_element(pk);
    t.absorb_element(ct.a);
    t.absorb_element(ct.b);
    t.absorb_element(p.commit_a0);
    t.absorb_element(p.commit_b0);
    t.absorb_element(p.commit_a1);
    t.absorb_element(p.commit_b1);
    return t.challenge(grp);
}

BinaryProof prove_binary(const Group& grp, const GroupElement& pk, uint64_t m, const Scalar& r,
                         const Ciphertext& ct, const Transcript& ctx, Drbg& rng) {
    if (m > 1) raise(Errc::InvalidWitness, "plaintext not a bit");
    if (ct != encrypt(grp, pk, m, r, 1)) raise(Errc::InvalidWitness, "ciphertext does not match witness");

    // branch m is proven honestly, branch 1-m is simulated with a chosen
    // challenge; the verifier only ever sees the split c0 + c1.
    Scalar sim_c = rng.nonzero_scalar(grp);
    Scalar sim_z = rng.nonzero_scalar(grp);
    // simulated branch mu: commits A = g^z / a^c, B = pk^z / (b/g^mu)^c
    uint64_t mu = 1 - m;
    GroupElement b_adj = mu == 0 ? ct.b : grp.div(ct.b, grp.g());
    GroupElement sim_A = grp.div(grp.g_pow(sim_z), grp.pow(ct.a, sim_c));
    GroupElement sim_B = grp.div(grp.pow(pk, sim_z), grp.pow(b_adj, sim_c));

    Scalar w = rng.nonzero_scalar(grp);
    GroupElement real_A = grp.g_pow(w);
    GroupElement real_B = grp.pow(pk, w);

    BinaryProof p;
    if (m == 0) {
        p.commit_a0 = real_A; p.commit_b0 = real_B;
        p.commit_a1 = sim_A;  p.commit_b1 = sim_B;
    } else {
        p.commit_a0 = sim_A;  p.commit_b0 = sim_B;
        p.commit_a1 = real_A; p.commit_b1 = real_B;
    }
    Scalar total = binary_challenge(grp, ctx, pk, ct, p);
    Scalar real_c = grp.s_sub(total, sim_c);
    Scalar real_z = grp.s_add(w, grp.s_mul(real_c, r));
    if (m == 0) {
        p.challenge0 = real_c; p.response0 = real_z;
        p.challenge1 = sim_c;  p.response1 = sim_z;
    } else {
        p.challenge0 = sim_c;  p.response0 = sim_z;
        p.challenge1 = real_c; p.response1 = real_z;
    }
    return p;
}

bool verify_binary(const Group& grp, const GroupElement& pk, const Ciphertext& ct,
                   const BinaryProof& p, const Transcript& ctx) {
    Scalar total = binary_challenge(grp, ctx, pk, ct, p);
    if (grp.s_add(p.challenge0, p.challenge1) != total) return false;
    // branch 0: (a, b) encrypts 0
    if (grp.g_pow(p.response0) != grp.mul(p.commit_a0, grp.pow(ct.a, p.challenge0))) return false;
    if (grp.pow(pk, p.response0) != grp.mul(p.commit_b0, grp.pow(ct.b, p.challenge0))) return false;
    // branch 1: (a, b/g) encrypts 0
    GroupElement b1 = grp.div(ct.b, grp.g());
    if (grp.g_pow(p.response1) != grp.mul(p.commit_a1, grp.pow(ct.a, p.challenge1))) return false;
    if (grp.pow(pk, p.response1) != grp.mul(p.commit_b1, grp.pow(b1, p.challenge1))) return false;
    return true;
}

ChaumPedersenProof prove_sum_one(const Group& grp, const GroupElement& pk, const Scalar& randomness_sum,
                                 const Ciphertext& aggregated, const Transcript& ctx, Drbg& rng) {
    // (a_agg, b_agg / g) must be an encryption of 0 under randomness_sum
    if (aggregated.a != grp.g_pow(randomness_sum) ||
        grp.div(aggregated.b, grp.g()) != grp.pow(pk, randomness_sum))
        raise(Errc::InvalidWitness, "ballot does not sum to one");
    return cp_prove(grp, grp.g(), pk, randomness_sum, ctx, rng);
}

bool verify_sum_one(const Group& grp, const GroupElement& pk, const Ciphertext& aggregated,
                    const ChaumPedersenProof& proof, const Transcript& ctx) {
    return cp_verify(grp, grp.g(), aggregated.a, pk, grp.div(aggregated.b, grp.g()), proof, ctx);
}

void write_cp_proof(enc::Writer& w, const ChaumPedersenProof& p) {
    write_scalar(w, p.challenge);
    write_scalar(w, p.response);
}

ChaumPedersenProof read_cp_proof(enc::Reader& r, const Group& grp) {
    Scalar c = read_scalar(r, grp);
    Scalar z = read_scalar(r, grp);
    return {c, z};
}

void write_binary_proof(enc::Writer& w, const BinaryProof& p) {
    write_element(w, p.commit_a0);
    write_element(w, p.commit_b0);
    write_element(w, p.commit_a1);
    write_element(w, p.commit_b1);
    write_scalar(w, p.challenge0);
    write_scalar(w, p.response0);
    write_scalar(w, p.challenge1);
    write_scalar(w, p.response1);
}

BinaryProof read_binary_proof(enc::Reader& r, const Group& grp) {
    BinaryProof p;
    p.commit_a0 = read_element(r, grp);
    p.commit_b0 = read_element(r, grp);
    p.commit_a1 = read_element(r, grp);
    p.commit_b1 = read_element(r, grp);
    p.challenge0 = read_scalar(r, grp);
    p.response0 = read_scalar(r, grp);
    p.challenge1 = read_scalar(r, grp);
    p.response1 = read_scalar(r, grp);
    return p;
}

} // namespace vspace::crypto
