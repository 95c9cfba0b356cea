#include "kmilnor/field.hpp"

namespace kmil {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m)
{
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m)
{
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(uint64_t n)
{
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic base set for 64-bit inputs
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

PrimeField::PrimeField(uint64_t prime) : p(prime)
{
    if (prime > (1ull << 61)) fail(Errc::InvalidInput, "prime exceeds 2^61: " + std::to_string(prime));
    if (!is_prime_u64(prime)) fail(Errc::InvalidInput, "not a prime: " + std::to_string(prime));
}

FieldCtx parse_field(const std::string& tag)
{
    if (tag == "Q") return RationalField{};
    if (tag.rfind("Fp:", 0) == 0) {
        std::string num = tag.substr(3);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos || num.size() > 19)
            fail(Errc::InvalidInput, "bad field tag: " + tag);
        return PrimeField(std::stoull(num));
    }
    fail(Errc::InvalidInput, "bad field tag: " + tag);
}

std::string field_tag(const FieldCtx& f)
{
    return with_field(f, [](const auto& k) { return k.tag(); });
}

} // namespace kmil
