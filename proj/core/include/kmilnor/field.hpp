#ifndef KMILNOR_FIELD_HPP
#define KMILNOR_FIELD_HPP

#include <cstdint>
#include <tuple>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "kmilnor/error.hpp"

namespace kmil {

bool is_prime_u64(uint64_t n);

// Z/p with p prime, p <= 2^61.
struct PrimeField {
    using Elem = uint64_t;
    static constexpr bool rational = false;

    uint64_t p = 2;

    PrimeField() = default;
    explicit PrimeField(uint64_t prime);

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(int64_t v) const
    {
        int64_t r = v % static_cast<int64_t>(p);
        if (r < 0) r += static_cast<int64_t>(p);
        return static_cast<Elem>(r);
    }
    Elem from_mpz(const mpz_class& v) const
    {
        return mpz_fdiv_ui(v.get_mpz_t(), p);
    }
    Elem add(Elem a, Elem b) const
    {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const
    {
        if (p <= 0xffffffffULL) return (a * b) % p;
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
    }
    Elem pow(Elem a, uint64_t e) const
    {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const
    {
        if (a == 0) fail(Errc::DivisionByNonUnit, "inverse of zero in Fp");
        int64_t r0 = static_cast<int64_t>(p), r1 = static_cast<int64_t>(a), s0 = 0, s1 = 1;
        while (r1) {
            int64_t q = r0 / r1;
            std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
            std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
        }
        return s0 < 0 ? static_cast<Elem>(s0 + static_cast<int64_t>(p)) : static_cast<Elem>(s0);
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }
    bool eq(Elem a, Elem b) const { return a == b; }
    bool less(Elem a, Elem b) const { return a < b; }
    // True when the element would print with a leading minus sign.
    bool negative(Elem) const { return false; }
    std::string str(Elem a) const { return std::to_string(a); }
    std::string tag() const { return "Fp:" + std::to_string(p); }
    uint64_t characteristic() const { return p; }
    bool operator==(const PrimeField& o) const { return p == o.p; }
};

struct RationalField {
    using Elem = mpq_class;
    static constexpr bool rational = true;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(int64_t v) const { return mpq_class(static_cast<long>(v)); }
    Elem from_mpz(const mpz_class& v) const { return mpq_class(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem pow(Elem a, uint64_t e) const
    {
        Elem r = 1;
        while (e) {
            if (e & 1) r *= a;
            a *= a;
            e >>= 1;
        }
        return r;
    }
    Elem inv(const Elem& a) const
    {
        if (a == 0) fail(Errc::DivisionByNonUnit, "inverse of zero in Q");
        return 1 / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool less(const Elem& a, const Elem& b) const { return a < b; }
    bool negative(const Elem& a) const { return a < 0; }
    std::string str(const Elem& a) const { return a.get_str(); }
    std::string tag() const { return "Q"; }
    uint64_t characteristic() const { return 0; }
    bool operator==(const RationalField&) const { return true; }
};

// Runtime field descriptor, parsed from "Fp:<p>" or "Q".
using FieldCtx = std::variant<PrimeField, RationalField>;

FieldCtx parse_field(const std::string& tag);
std::string field_tag(const FieldCtx& f);

template <class Fn>
decltype(auto) with_field(const FieldCtx& ctx, Fn&& fn)
{
    return std::visit([&](const auto& k) -> decltype(auto) { return fn(k); }, ctx);
}

} // namespace kmil

#endif
