#ifndef KMILNOR_SCALARS_HPP
#define KMILNOR_SCALARS_HPP

#include <string>

#include "kmilnor/expr.hpp"
#include "kmilnor/field.hpp"
#include "kmilnor/mpoly.hpp"
#include "kmilnor/poly.hpp"
#include "kmilnor/ratfn.hpp"
#include "kmilnor/series.hpp"

namespace kmil {

template <class K>
struct RatFnOps {
    K k;
    RatFn<K> num(const mpz_class& v) const { return RatFn<K>::constant(k, k.from_mpz(v)); }
    RatFn<K> var(const std::string& name) const
    {
        if (name != "t") fail(Errc::ParseError, "unexpected variable '" + name + "' in a scalar of A");
        return RatFn<K>::t(k);
    }
    RatFn<K> add(const RatFn<K>& a, const RatFn<K>& b) const { return a + b; }
    RatFn<K> sub(const RatFn<K>& a, const RatFn<K>& b) const { return a - b; }
    RatFn<K> mul(const RatFn<K>& a, const RatFn<K>& b) const { return a * b; }
    RatFn<K> div(const RatFn<K>& a, const RatFn<K>& b) const
    {
        if (b.is_zero()) fail(Errc::ParseError, "division by zero");
        return a / b;
    }
    RatFn<K> neg(const RatFn<K>& a) const { return -a; }
    RatFn<K> pow(const RatFn<K>& a, unsigned e) const { return a.pow(e); }
};

template <class K>
struct SeriesOps {
    K k;
    int N;
    TruncSeries<K> num(const mpz_class& v) const { return TruncSeries<K>::constant(k, N, k.from_mpz(v)); }
    TruncSeries<K> var(const std::string& name) const
    {
        if (name != "t") fail(Errc::ParseError, "unexpected variable '" + name + "' in a series");
        std::vector<typename K::Elem> c{k.zero(), k.one()};
        return TruncSeries<K>(k, N, c);
    }
    TruncSeries<K> add(const TruncSeries<K>& a, const TruncSeries<K>& b) const { return a + b; }
    TruncSeries<K> sub(const TruncSeries<K>& a, const TruncSeries<K>& b) const { return a - b; }
    TruncSeries<K> mul(const TruncSeries<K>& a, const TruncSeries<K>& b) const { return a * b; }
    TruncSeries<K> div(const TruncSeries<K>& a, const TruncSeries<K>& b) const { return a * b.inv(); }
    TruncSeries<K> neg(const TruncSeries<K>& a) const { return -a; }
    TruncSeries<K> pow(const TruncSeries<K>& a, unsigned e) const { return a.pow(e); }
};

// Polynomials in x, y1..y9, z1..z9 with coefficients in k(t).
template <class K>
struct SparseOps {
    K k;
    using P = SparsePoly<RatFn<K>>;
    P num(const mpz_class& v) const { return P::constant(RatFn<K>::constant(k, k.from_mpz(v))); }
    P var(const std::string& name) const
    {
        if (name == "t") return P::constant(RatFn<K>::t(k));
        return P::variable(RatFn<K>(k), var_index(name));
    }
    P add(const P& a, const P& b) const { return a + b; }
    P sub(const P& a, const P& b) const { return a - b; }
    P mul(const P& a, const P& b) const { return a * b; }
    P div(const P& a, const P& b) const
    {
        if (!b.is_constant() || b.is_zero()) fail(Errc::ParseError, "division only by nonzero elements of k(t)");
        return a.scaled(b.constant_term().inv());
    }
    P neg(const P& a) const { return -a; }
    P pow(const P& a, unsigned e) const { return a.pow(e); }
};

template <class K>
RatFn<K> parse_ratfn(const K& k, const std::string& s)
{
    return eval_expr(*parse_expr(s), RatFnOps<K>{k});
}

// Parses an element of A = k[t]_(t).
template <class K>
LocalScalar<K> parse_local(const K& k, const std::string& s)
{
    return make_local(parse_ratfn(k, s));
}

template <class K>
TruncSeries<K> parse_series(const K& k, int N, const std::string& s)
{
    return eval_expr(*parse_expr(s), SeriesOps<K>{k, N});
}

template <class K>
SparsePoly<RatFn<K>> parse_sparse(const K& k, const std::string& s)
{
    return eval_expr(*parse_expr(s), SparseOps<K>{k});
}

// truncate of the scalars module.
template <class K>
TruncSeries<K> truncate(const LocalScalar<K>& a, int N)
{
    return a.truncate(N);
}

} // namespace kmil

#endif
