// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <map>
#include <vector>

#include "vspace/crypto/proofs.hpp"

namespace vspace::crypto {

// One dealer's contribution to the distributed key: Feldman commitments to a
// degree t-1 polynomial plus the per-trustee evaluations. Trustee indices
// are the evaluation points and run 1..n; the shares map stays off-ledger.
struct VssDealing {
    uint32_t dealer_index = 0; // 1..n
    std::vector<GroupElement> commitments; // g^{a_k}, k = 0..t-1
    std::map<uint32_t, Scalar> shares;     // trustee j -> f(j)
};

VssDealing dkg_deal(const Group& grp, uint32_t threshold, uint32_t n_trustees, uint32_t dealer_index,
                    Drbg& rng);
VssDealing dkg_deal_from_coeffs(const Group& grp, std::span<const Scalar> coeffs, uint32_t n_trustees,
                                uint32_t dealer_index);

// g^share == prod commitments[k]^(j^k)
bool dkg_verify_share(const Group& grp, const VssDealing& dealing, uint32_t trustee_index,
                      const Scalar& share);

struct DkgOutput {
    GroupElement election_pk;            // g^(sum of dealer secrets)
    std::vector<Scalar> secret_shares;   // per trustee, index j at [j-1]
    std::vector<GroupElement> verification_keys; // g^share_j
};

// Verifies every cross-share and aggregates. Throws ShareVerificationFailed
// naming (dealer, trustee), or InsufficientDealings.
DkgOutput dkg_aggregate(const Group& grp, std::span<const VssDealing> dealings, uint32_t threshold,
                        uint32_t n_trustees);

struct DecryptionShare {
    uint32_t trustee_index = 0;
    GroupElement share_value; // ct.a^share_j
    ChaumPedersenProof proof; // dlog_g(vk_j) == dlog_a(share_value)

    bool operator==(const DecryptionShare&) const = default;
};

DecryptionShare partial_decrypt(const Group& grp, const Scalar& secret_share, uint32_t trustee_index,
                                const Ciphertext& ct, const Transcript& ctx, Drbg& rng);
bool verify_share_proof(const Group& grp, const Ciphertext& ct, const DecryptionShare& share,
                        const GroupElement& verification_key, const Transcript& ctx);

// Lagrange-combines >= t verified shares at 0 and strips the pad: returns
// g^m for the encrypted m. Uses the t lowest trustee indices.
GroupElement combine_shares(const Group& grp, const Ciphertext& ct,
                            std::span<const DecryptionShare> shares, uint32_t threshold);

Scalar lagrange_at_zero(const Group& grp, std::span<const uint32_t> indices, size_t which);

void write_decryption_share(enc::Writer& w, const DecryptionShare& ds);
DecryptionShare read_decryption_share(enc::Reader& r, const Group& grp);

} // namespace vspace::crypto
