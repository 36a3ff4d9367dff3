// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "vspace/crypto/vss.hpp"

#include <algorithm>
#include <set>

namespace vspace::crypto {

VssDealing dkg_deal_from_coeffs(const Group& grp, std::span<const Scalar> coeffs, uint32_t n_trustees,
                                uint32_t dealer_index) {
    VssDealing d;
    d.dealer_index = dealer_index;
    for (auto& c : coeffs) d.commitments.push_back(grp.g_pow(c));
    for (uint32_t j = 1; j <= n_trustees; j++) {
        // Horner evaluation of f(j)
        Scalar acc = coeffs[coeffs.size() - 1];
        Scalar x = grp.s_from_u64(j);
        for (int k = int(coeffs.size()) - 2; k >= 0; k--) acc = grp.s_add(grp.s_mul(acc, x), coeffs[k]);
        d.shares.emplace(j, acc);
    }
    return d;
}

VssDealing dkg_deal(const Group& grp, uint32_t threshold, uint32_t n_trustees, uint32_t dealer_index,
                    Drbg& rng) {
    if (threshold < 1 || threshold > n_trustees)
        raise(Errc::ConfigInvalid, "threshold must satisfy 1 <= t <= n");
    std::vector<Scalar> coeffs(threshold);
    for (uint32_t k = 0; k < threshold; k++)
        coeffs[k] = k == 0 ? rng.nonzero_scalar(grp) : rng.uniform_scalar(grp);
    return dkg_deal_from_coeffs(grp, coeffs, n_trustees, dealer_index);
}

bool dkg_verify_share(const Group& grp, const VssDealing& dealing, uint32_t trustee_index,
                      const Scalar& share) {
    GroupElement expect = grp.identity();
    Scalar jk = grp.s_from_u64(1);
    Scalar x = grp.s_from_u64(trustee_index);
    for (auto& commitment : dealing.commitments) {
        expect = grp.mul(expect, grp.pow(commitment, jk));
        jk = grp.s_mul(jk, x);
    }
    return grp.g_pow(share) == expect;
}

DkgOutput dkg_aggregate(const Group& grp, std::span<const VssDealing> dealings, uint32_t threshold,
                        uint32_t n_trustees) {
    if (dealings.size() != n_trustees)
        raise(Errc::InsufficientDealings,
              "need " + std::to_string(n_trustees) + " dealings, got " + std::to_string(dealings.size()));
    std::set<uint32_t> dealers;
    for (auto& d : dealings)
        if (d.dealer_index < 1 || d.dealer_index > n_trustees || !dealers.insert(d.dealer_index).second)
            raise(Errc::InsufficientDealings, "dealer indices must be exactly 1.." + std::to_string(n_trustees));
    for (auto& d : dealings) {
        if (d.commitments.size() != threshold)
            raise(Errc::InsufficientDealings, "dealer " + std::to_string(d.dealer_index) +
                                                  " committed to wrong polynomial degree");
        for (uint32_t j = 1; j <= n_trustees; j++) {
            auto it = d.shares.find(j);
            if (it == d.shares.end() || !dkg_verify_share(grp, d, j, it->second))
                raise(Errc::ShareVerificationFailed, "dealer " + std::to_string(d.dealer_index) +
                                                         ", trustee " + std::to_string(j));
        }
    }
    DkgOutput out;
    out.election_pk = grp.identity();
    for (auto& d : dealings) out.election_pk = grp.mul(out.election_pk, d.commitments[0]);
    for (uint32_t j = 1; j <= n_trustees; j++) {
        Scalar share = grp.s_from_u64(0);
        for (auto& d : dealings) share = grp.s_add(share, d.shares.at(j));
        out.secret_shares.push_back(share);
        out.verification_keys.push_back(grp.g_pow(share));
    }
    return out;
}

DecryptionShare partial_decrypt(const Group& grp, const Scalar& secret_share, uint32_t trustee_index,
                                const Ciphertext& ct, const Transcript& ctx, Drbg& rng) {
    DecryptionShare ds;
    ds.trustee_index = trustee_index;
    ds.share_value = grp.pow(ct.a, secret_share);
    ds.proof = cp_prove(grp, grp.g(), ct.a, secret_share, ctx, rng);
    return ds;
}

bool verify_share_proof(const Group& grp, const Ciphertext& ct, const DecryptionShare& share,
                        const GroupElement& verification_key, const Transcript& ctx) {
    return cp_verify(grp, grp.g(), verification_key, ct.a, share.share_value, share.proof, ctx);
}

Scalar lagrange_at_zero(const Group& grp, std::span<const uint32_t> indices, size_t which) {
    Scalar num = grp.s_from_u64(1);
    Scalar den = grp.s_from_u64(1);
    Scalar xj = grp.s_from_u64(indices[which]);
    for (size_t k = 0; k < indices.size(); k++) {
        if (k == which) continue;
        Scalar xk = grp.s_from_u64(indices[k]);
        num = grp.s_mul(num, xk);
        den = grp.s_mul(den, grp.s_sub(xk, xj));
    }
    return grp.s_mul(num, grp.s_inv(den));
}

GroupElement combine_shares(const Group& grp, const Ciphertext& ct,
                            std::span<const DecryptionShare> shares, uint32_t threshold) {
    std::set<uint32_t> seen;
    for (auto& s : shares)
        if (!seen.insert(s.trustee_index).second)
            raise(Errc::DuplicateTrusteeIndex, "trustee " + std::to_string(s.trustee_index));
    if (shares.size() < threshold)
        raise(Errc::InsufficientShares,
              "got " + std::to_string(shares.size()) + ", need " + std::to_string(threshold));

    std::vector<const DecryptionShare*> sorted;
    for (auto& s : shares) sorted.push_back(&s);
    std::sort(sorted.begin(), sorted.end(),
              [](auto* a, auto* b) { return a->trustee_index < b->trustee_index; });
    sorted.resize(threshold);

    std::vector<uint32_t> indices;
    for (auto* s : sorted) indices.push_back(s->trustee_index);

    GroupElement pad = grp.identity(); // ct.a^(combined secret)
    for (size_t i = 0; i < sorted.size(); i++) {
        Scalar lambda = lagrange_at_zero(grp, indices, i);
        pad = grp.mul(pad, grp.pow(sorted[i]->share_value, lambda));
    }
    return grp.div(ct.b, pad);
}

void write_decryption_share(enc::Writer& w, const DecryptionShare& ds) {
    w.uint(uint64_t(ds.trustee_index));
    write_element(w, ds.share_value);
    write_cp_proof(w, ds.proof);
}

DecryptionShare read_decryption_share(enc::Reader& r, const Group& grp) {
    DecryptionShare ds;
    ds.trustee_index = uint32_t(r.uint64());
    ds.share_value = read_element(r, grp);
    ds.proof = read_cp_proof(r, grp);
    return ds;
}

} // namespace vspace::crypto
