// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

#include "vspace/crypto/encoding.hpp"

namespace vspace::crypto {

// Exponent in [0, q).
struct Scalar {
    mpz_class v;

    bool operator==(const Scalar&) const = default;
};

// Member of the order-q subgroup of Z_p^*, value in [1, p).
struct GroupElement {
    mpz_class v;

    bool operator==(const GroupElement&) const = default;
};

// A Schnorr group over a safe prime: p = 2q + 1, g generates the order-q
// subgroup of quadratic residues. Parameter sets are fixed fixtures (see
// FORMAT.md §3); `by_label` is the only way to obtain one.
class Group {
public:
    static const Group& by_label(std::string_view label); // toy | test256 | modp2048

    const mpz_class& p() const { return p_; }
    const mpz_class& q() const { return q_; }
    const GroupElement& g() const { return g_; }
    const std::string& label() const { return label_; }

    GroupElement identity() const { return GroupElement{1}; }
    bool is_element(const mpz_class& x) const;

    GroupElement pow(const GroupElement& base, const Scalar& e) const;
    GroupElement g_pow(const Scalar& e) const;
    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inv(const GroupElement& a) const;
    GroupElement div(const GroupElement& a, const GroupElement& b) const { return mul(a, inv(b)); }

    Scalar s_add(const Scalar& a, const Scalar& b) const;
    Scalar s_sub(const Scalar& a, const Scalar& b) const;
    Scalar s_mul(const Scalar& a, const Scalar& b) const;
    Scalar s_neg(const Scalar& a) const;
    Scalar s_inv(const Scalar& a) const; // a != 0
    Scalar s_from(const mpz_class& v) const; // reduces mod q
    Scalar s_from_u64(uint64_t v) const { return s_from(mpz_class(static_cast<unsigned long>(v))); }

    // Deserialization entry points: validate or throw.
    Scalar checked_scalar(const mpz_class& v) const;
    GroupElement checked_element(const mpz_class& v) const;

private:
    Group(std::string label, mpz_class p, mpz_class q, mpz_class g);

    std::string label_;
    mpz_class p_, q_;
    GroupElement g_;
};

void write_scalar(enc::Writer& w, const Scalar& s);
void write_element(enc::Writer& w, const GroupElement& e);
Scalar read_scalar(enc::Reader& r, const Group& grp);
GroupElement read_element(enc::Reader& r, const Group& grp);

// Canonical single-atom encodings, used as hash/transcript items.
Bytes element_bytes(const GroupElement& e);
Bytes scalar_bytes(const Scalar& s);

} // namespace vspace::crypto
