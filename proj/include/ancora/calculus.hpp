#ifndef ANCORA_CALCULUS_HPP
#define ANCORA_CALCULUS_HPP

#include "jet.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace ancora {

/// Total derivative D_{a,ad}: Leibniz over jet variables plus explicit
/// coordinate dependence.
inline JetPolynomial total_derivative(const JetPolynomial& p, const DerivativeDirection& d)
{
    JetPolynomial r;
    const int di = d.index();
    for (const auto& [m, c] : p.terms()) {
        if (m.coord[di] > 0) {
            Monomial n = m;
            n.coord[di]--;
            r.add_term(n, c * GaussianRational(m.coord[di]));
        }
        for (size_t i = 0; i < m.vars.size(); ++i) {
            const auto [code, exp] = m.vars[i];
            Monomial n = m;
            if (exp == 1)
                n.vars.erase(n.vars.begin() + static_cast<long>(i));
            else
                n.vars[i].second--;
            JetVariable v = JetVariable::from_code(code);
            n.multiply_var(v.with_derivative(d).code());
            r.add_term(n, c * GaussianRational(exp));
        }
    }
    return r;
}

inline JetPolynomial total_derivative(const JetPolynomial& p, const DerivMultiset& J)
{
    JetPolynomial r = p;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < J[i]; ++k) r = total_derivative(r, DerivativeDirection::from_index(i));
    return r;
}

/// Partial derivative with respect to a single jet coordinate.
inline JetPolynomial partial_jet(const JetPolynomial& p, const JetVariable& v)
{
    JetPolynomial r;
    const uint64_t code = v.code();
    for (const auto& [m, c] : p.terms()) {
        for (size_t i = 0; i < m.vars.size(); ++i) {
            if (m.vars[i].first != code) continue;
            const auto exp = m.vars[i].second;
            Monomial n = m;
            if (exp == 1)
                n.vars.erase(n.vars.begin() + static_cast<long>(i));
            else
                n.vars[i].second--;
            r.add_term(n, c * GaussianRational(exp));
        }
    }
    return r;
}

/// Complex conjugation: conjugates coefficients, swaps index kinds on
/// derivative directions and coordinates, and swaps fields with their
/// conjugate partners. An involution.
inline JetPolynomial conjugate(const JetPolynomial& p, const JetContext& ctx)
{
    JetPolynomial r;
    for (const auto& [m, c] : p.terms()) {
        Monomial n;
        n.coord = {m.coord[0], m.coord[2], m.coord[1], m.coord[3]};
        for (const auto& [code, e] : m.vars)
            n.multiply_var(JetVariable::from_code(code).conjugated(ctx).code(), e);
        r.add_term(n, c.conj());
    }
    return r;
}

/// Variational derivative of a density with respect to one component of a
/// declared field: sum over jets of (-D)_J d/du_J.
inline JetPolynomial euler_component(const JetPolynomial& density, int field_id, bool wrt_conj,
                                     int comp, const JetContext& ctx)
{
    if (field_id < 0 || static_cast<size_t>(field_id) >= ctx.fields.size())
        throw std::invalid_argument("euler_operator: unknown field identifier");
    std::set<uint64_t> seen;
    for (uint64_t code : density.variable_codes()) {
        JetVariable v = JetVariable::from_code(code);
        if (v.field == field_id && v.conj == wrt_conj && v.comp == comp) seen.insert(code);
    }
    JetPolynomial r;
    for (uint64_t code : seen) {
        JetVariable v = JetVariable::from_code(code);
        JetPolynomial term = total_derivative(partial_jet(density, v), v.derivs);
        if (v.order() % 2 != 0) term = -term;
        r += term;
    }
    return r;
}

/// Full Euler operator: one variational derivative per field component.
inline Multiplet euler_operator(const JetPolynomial& density, int field_id, bool wrt_conj,
                                const JetContext& ctx)
{
    if (field_id < 0 || static_cast<size_t>(field_id) >= ctx.fields.size())
        throw std::invalid_argument("euler_operator: unknown field identifier");
    const int nc = ctx.at(field_id).structure.component_count();
    Multiplet out(static_cast<size_t>(nc));
    for (int c = 0; c < nc; ++c) out[c] = euler_component(density, field_id, wrt_conj, c, ctx);
    return out;
}

/// A density of polynomial type is a total divergence exactly when every
/// variational derivative vanishes (conjugate components included).
inline bool is_total_divergence(const JetPolynomial& density, const JetContext& ctx)
{
    for (size_t f = 0; f < ctx.fields.size(); ++f) {
        const int nc = ctx.at(static_cast<int>(f)).structure.component_count();
        for (int c = 0; c < nc; ++c) {
            if (!euler_component(density, static_cast<int>(f), false, c, ctx).is_zero())
                return false;
            if (!ctx.at(static_cast<int>(f)).is_real &&
                !euler_component(density, static_cast<int>(f), true, c, ctx).is_zero())
                return false;
        }
    }
    return true;
}

/// Symmetry generator given by its characteristics: one polynomial per
/// component of each field it moves. Conjugate components transform by the
/// conjugated polynomials.
struct EvolutionaryField {
    std::map<int, Multiplet> characteristics;

    void set(int field_id, Multiplet chars) { characteristics[field_id] = std::move(chars); }

    bool covers(int field_id) const { return characteristics.count(field_id) > 0; }

    const JetPolynomial& of(int field_id, int comp) const
    {
        return characteristics.at(field_id).at(static_cast<size_t>(comp));
    }

    EvolutionaryField scaled(const GaussianRational& s) const
    {
        EvolutionaryField e;
        for (const auto& [f, chars] : characteristics) {
            Multiplet m = chars;
            for (auto& p : m) p *= s;
            e.characteristics[f] = std::move(m);
        }
        return e;
    }

    friend EvolutionaryField operator+(const EvolutionaryField& a, const EvolutionaryField& b)
    {
        EvolutionaryField e = a;
        for (const auto& [f, chars] : b.characteristics) {
            auto it = e.characteristics.find(f);
            if (it == e.characteristics.end()) {
                e.characteristics[f] = chars;
            } else {
                for (size_t i = 0; i < chars.size(); ++i) it->second[i] += chars[i];
            }
        }
        return e;
    }
};

/// Prolongation of an evolutionary field applied to a jet polynomial:
/// sum over jets of D_J(characteristic) d f/du_J. Fields without declared
/// characteristics must not occur in f.
inline JetPolynomial prolong(const EvolutionaryField& ev, const JetPolynomial& f,
                             const JetContext& ctx)
{
    JetPolynomial r;
    std::map<uint64_t, JetPolynomial> cache;
    for (uint64_t code : f.variable_codes()) {
        JetVariable v = JetVariable::from_code(code);
        if (!ev.covers(v.field))
            throw std::invalid_argument("prolong: no characteristic declared for field " +
                                        ctx.at(v.field).name);
        auto it = cache.find(code);
        if (it == cache.end()) {
            JetPolynomial q = ev.of(v.field, v.comp);
            if (v.conj) q = conjugate(q, ctx);
            it = cache.emplace(code, total_derivative(q, v.derivs)).first;
        }
        r += it->second * partial_jet(f, v);
    }
    return r;
}

/// Like prolong, but fields without characteristics are held fixed
/// (treated as background parameters, e.g. symbolic test functions).
inline JetPolynomial prolong_partial(const EvolutionaryField& ev, const JetPolynomial& f,
                                     const JetContext& ctx)
{
    JetPolynomial r;
    std::map<uint64_t, JetPolynomial> cache;
    for (uint64_t code : f.variable_codes()) {
        JetVariable v = JetVariable::from_code(code);
        if (!ev.covers(v.field)) continue;
        auto it = cache.find(code);
        if (it == cache.end()) {
            JetPolynomial q = ev.of(v.field, v.comp);
            if (v.conj) q = conjugate(q, ctx);
            it = cache.emplace(code, total_derivative(q, v.derivs)).first;
        }
        r += it->second * partial_jet(f, v);
    }
    return r;
}

/// Substitute a multiplet of polynomials for a field: every jet variable
/// u_J of the field is replaced by D_J of the corresponding value
/// (conjugated values for conjugate components).
inline JetPolynomial substitute_field(const JetPolynomial& p, int field_id, const Multiplet& value,
                                      const JetContext& ctx)
{
    std::map<uint64_t, JetPolynomial> cache;
    auto replacement = [&](uint64_t code) -> const JetPolynomial& {
        auto it = cache.find(code);
        if (it != cache.end()) return it->second;
        JetVariable v = JetVariable::from_code(code);
        JetPolynomial base = value.at(v.comp);
        if (v.conj) base = conjugate(base, ctx);
        return cache.emplace(code, total_derivative(base, v.derivs)).first->second;
    };

    JetPolynomial r;
    for (const auto& [m, c] : p.terms()) {
        JetPolynomial t = JetPolynomial::constant(c);
        Monomial rest;
        rest.coord = m.coord;
        for (const auto& [code, e] : m.vars) {
            JetVariable v = JetVariable::from_code(code);
            if (v.field == field_id) {
                for (int k = 0; k < e; ++k) t = t * replacement(code);
            } else {
                rest.multiply_var(code, e);
            }
        }
        JetPolynomial restp;
        restp.add_term(rest, GaussianRational(1));
        r += t * restp;
    }
    return r;
}

/// Point evaluation: jet variables and coordinates get exact values.
/// Missing variables default to zero.
struct Assignment {
    std::map<uint64_t, GaussianRational> vars;
    std::array<GaussianRational, 4> coords{GaussianRational(0), GaussianRational(0),
                                           GaussianRational(0), GaussianRational(0)};

    void set(const JetVariable& v, GaussianRational g) { vars[v.code()] = std::move(g); }
};

inline GaussianRational evaluate(const JetPolynomial& p, const Assignment& a)
{
    GaussianRational total(0);
    for (const auto& [m, c] : p.terms()) {
        GaussianRational t = c;
        for (int i = 0; i < 4 && !t.is_zero(); ++i)
            for (int e = 0; e < m.coord[i]; ++e) t *= a.coords[i];
        for (const auto& [code, e] : m.vars) {
            if (t.is_zero()) break;
            auto it = a.vars.find(code);
            GaussianRational v = (it == a.vars.end()) ? GaussianRational(0) : it->second;
            for (int k = 0; k < e; ++k) t *= v;
        }
        total += t;
    }
    return total;
}

/// Evaluation consistent with conjugation: values are declared for plain
/// components, conjugate components evaluate to the conjugated value and
/// coordinates must form a hermitian pattern (x12 = conj(x21), x11 and x22
/// real) for conj-compatibility.
inline Assignment conj_consistent(const Assignment& a, const JetContext& ctx)
{
    Assignment out = a;
    for (const auto& [code, val] : a.vars) {
        JetVariable v = JetVariable::from_code(code);
        out.vars[v.conjugated(ctx).code()] = val.conj();
    }
    return out;
}

}  // namespace ancora

#endif
