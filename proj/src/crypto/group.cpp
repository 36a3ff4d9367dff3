// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "vspace/crypto/group.hpp"

#include <map>
#include <mutex>

namespace vspace::crypto {

namespace {

const char* kTest256P = "0x800000000000000000000000000000000000000000000000000000000002ff7f";

const char* kModp2048P =
    "0xFFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD129024E088A67CC74"
    "020BBEA63B139B22514A08798E3404DDEF9519B3CD3A431B302B0A6DF25F1437"
    "4FE1356D6D51C245E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED"
    "EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3DC2007CB8A163BF05"
    "98DA48361C55D39A69163FA8FD24CF5F83655D23DCA3AD961C62F356208552BB"
    "9ED529077096966D670C354E4ABC9804F1746C08CA18217C32905E462E36CE3B"
    "E39E772C180E86039B2783A2EC07A28FB5C55DF06F4C52C9DE2BCBF695581718"
    "3995497CEA956AE515D2261898FA051015728E5A8AACAA68FFFFFFFFFFFFFFFF";

} // namespace

Group::Group(std::string label, mpz_class p, mpz_class q, mpz_class g)
    : label_(std::move(label)), p_(std::move(p)), q_(std::move(q)), g_{std::move(g)} {
    // fixture sanity: q prime, p = 2q+1 prime, g generates the subgroup
    if (mpz_probab_prime_p(q_.get_mpz_t(), 32) == 0 || mpz_probab_prime_p(p_.get_mpz_t(), 32) == 0)
        raise(Errc::ParseError, "group parameters are not prime");
    if (p_ != 2 * q_ + 1) raise(Errc::ParseError, "p is not a safe prime");
    mpz_class gq;
    mpz_powm(gq.get_mpz_t(), g_.v.get_mpz_t(), q_.get_mpz_t(), p_.get_mpz_t());
    if (gq != 1 || g_.v == 1) raise(Errc::ParseError, "generator does not have order q");
}

const Group& Group::by_label(std::string_view label) {
    static std::mutex mu;
    static std::map<std::string, Group, std::less<>> registry;
    std::lock_guard lk(mu);
    if (auto it = registry.find(label); it != registry.end()) return it->second;

    mpz_class p, q, g;
    if (label == "toy") {
        p = 23; q = 11; g = 2;
    } else if (label == "test256") {
        p = mpz_class(kTest256P);
        q = (p - 1) / 2;
        g = 4;
    } else if (label == "modp2048") {
        p = mpz_class(kModp2048P);
        q = (p - 1) / 2;
        g = 2;
    } else {
        raise(Errc::ConfigInvalid, "unknown group label '" + std::string(label) + "'");
    }
    auto [it, _] = registry.emplace(std::string(label), Group(std::string(label), p, q, g));
    return it->second;
}

bool Group::is_element(const mpz_class& x) const {
    if (x < 1 || x >= p_) return false;
    mpz_class r;
    mpz_powm(r.get_mpz_t(), x.get_mpz_t(), q_.get_mpz_t(), p_.get_mpz_t());
    return r == 1;
}

GroupElement Group::pow(const GroupElement& base, const Scalar& e) const {
    GroupElement out;
    mpz_powm(out.v.get_mpz_t(), base.v.get_mpz_t(), e.v.get_mpz_t(), p_.get_mpz_t());
    return out;
}

GroupElement Group::g_pow(const Scalar& e) const { return pow(g_, e); }

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
    GroupElement out;
    out.v = a.v * b.v;
    mpz_mod(out.v.get_mpz_t(), out.v.get_mpz_t(), p_.get_mpz_t());
    return out;
}

GroupElement Group::inv(const GroupElement& a) const {
    GroupElement out;
    if (mpz_invert(out.v.get_mpz_t(), a.v.get_mpz_t(), p_.get_mpz_t()) == 0)
        raise(Errc::InvalidGroupElement, "element not invertible");
    return out;
}

Scalar Group::s_add(const Scalar& a, const Scalar& b) const { return s_from(a.v + b.v); }
Scalar Group::s_sub(const Scalar& a, const Scalar& b) const { return s_from(a.v - b.v); }
Scalar Group::s_mul(const Scalar& a, const Scalar& b) const { return s_from(a.v * b.v); }
Scalar Group::s_neg(const Scalar& a) const { return s_from(-a.v); }

Scalar Group::s_inv(const Scalar& a) const {
    Scalar out;
    if (mpz_invert(out.v.get_mpz_t(), a.v.get_mpz_t(), q_.get_mpz_t()) == 0)
        raise(Errc::InvalidScalar, "scalar not invertible");
    return out;
}

Scalar Group::s_from(const mpz_class& v) const {
    Scalar out;
    mpz_mod(out.v.get_mpz_t(), v.get_mpz_t(), q_.get_mpz_t());
    return out;
}

Scalar Group::checked_scalar(const mpz_class& v) const {
    if (v < 0 || v >= q_) raise(Errc::InvalidScalar, "scalar out of range");
    return Scalar{v};
}

GroupElement Group::checked_element(const mpz_class& v) const {
    if (!is_element(v)) raise(Errc::InvalidGroupElement, "not a subgroup member");
    return GroupElement{v};
}

void write_scalar(enc::Writer& w, const Scalar& s) { w.uint(s.v); }
void write_element(enc::Writer& w, const GroupElement& e) { w.uint(e.v); }

Scalar read_scalar(enc::Reader& r, const Group& grp) { return grp.checked_scalar(r.uint()); }
GroupElement read_element(enc::Reader& r, const Group& grp) { return grp.checked_element(r.uint()); }

Bytes element_bytes(const GroupElement& e) {
    enc::Writer w;
    w.uint(e.v);
    return w.take();
}

Bytes scalar_bytes(const Scalar& s) {
    enc::Writer w;
    w.uint(s.v);
    return w.take();
}

} // namespace vspace::crypto
