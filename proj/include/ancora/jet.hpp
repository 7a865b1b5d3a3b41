#ifndef ANCORA_JET_HPP
#define ANCORA_JET_HPP

#include "multiplet.hpp"
#include "rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ancora {

/// One of the four spinor-coordinate directions d_{a,ad}, a,ad in {1,2}.
struct DerivativeDirection {
    int undotted = 1;
    int dotted = 1;

    DerivativeDirection() = default;
    DerivativeDirection(int u, int d) : undotted(u), dotted(d)
    {
        if (u < 1 || u > 2 || d < 1 || d > 2)
            throw std::invalid_argument("DerivativeDirection: index values must be 1 or 2");
    }

    int index() const { return (undotted - 1) * 2 + (dotted - 1); }
    static DerivativeDirection from_index(int i)
    {
        return DerivativeDirection(i / 2 + 1, i % 2 + 1);
    }
    /// Complex conjugation exchanges the two index kinds.
    DerivativeDirection conj() const { return DerivativeDirection(dotted, undotted); }

    friend bool operator==(const DerivativeDirection&, const DerivativeDirection&) = default;
};

inline const std::array<DerivativeDirection, 4>& all_directions()
{
    static const std::array<DerivativeDirection, 4> dirs = {
        DerivativeDirection(1, 1), DerivativeDirection(1, 2), DerivativeDirection(2, 1),
        DerivativeDirection(2, 2)};
    return dirs;
}

/// Multiset of derivative directions, stored as per-direction counts.
using DerivMultiset = std::array<uint8_t, 4>;

inline constexpr DerivMultiset no_derivs{0, 0, 0, 0};

inline int deriv_order(const DerivMultiset& d) { return d[0] + d[1] + d[2] + d[3]; }

inline DerivMultiset deriv_plus(DerivMultiset d, const DerivativeDirection& dir)
{
    d[dir.index()]++;
    return d;
}

inline DerivMultiset deriv_merge(DerivMultiset a, const DerivMultiset& b)
{
    for (int i = 0; i < 4; ++i) a[i] = static_cast<uint8_t>(a[i] + b[i]);
    return a;
}

inline DerivMultiset deriv_conj(const DerivMultiset& d)
{
    // direction (u,ad) -> (ad,u): indices 1 and 2 swap.
    return DerivMultiset{d[0], d[2], d[1], d[3]};
}

inline std::string deriv_string(const DerivMultiset& d)
{
    std::string s;
    for (int i = 0; i < 4; ++i) {
        auto dir = DerivativeDirection::from_index(i);
        for (int c = 0; c < d[i]; ++c)
            s += "d[" + std::to_string(dir.undotted) + "," + std::to_string(dir.dotted) + "]";
    }
    return s;
}

struct FieldDecl {
    std::string name;
    MultipletStructure structure;
    bool is_real = false;  // real scalars only; conj(u) == u
};

/// Registry of the jet fields a computation ranges over. Verifications
/// routinely enlarge a context with extra test-function fields; existing
/// polynomials stay valid because field ids are append-only.
struct JetContext {
    std::vector<FieldDecl> fields;

    int add_field(std::string name, MultipletStructure structure, bool is_real = false)
    {
        if (is_real && !structure.blocks.empty())
            throw std::invalid_argument("JetContext: real fields must be scalars");
        for (const auto& f : fields)
            if (f.name == name) throw std::invalid_argument("JetContext: duplicate field " + name);
        fields.push_back(FieldDecl{std::move(name), std::move(structure), is_real});
        return static_cast<int>(fields.size()) - 1;
    }

    int add_scalar(std::string name, bool is_real = false)
    {
        return add_field(std::move(name), MultipletStructure::scalar(), is_real);
    }

    std::optional<int> find(const std::string& name) const
    {
        for (size_t i = 0; i < fields.size(); ++i)
            if (fields[i].name == name) return static_cast<int>(i);
        return std::nullopt;
    }

    const FieldDecl& at(int id) const { return fields.at(static_cast<size_t>(id)); }
};

/// A single jet coordinate: a field component carrying a multiset of
/// spinor derivatives. Packs into 64 bits so monomial comparison is cheap.
struct JetVariable {
    uint16_t field = 0;
    bool conj = false;
    uint16_t comp = 0;
    DerivMultiset derivs = no_derivs;

    JetVariable() = default;
    JetVariable(int f, bool cj, int c, DerivMultiset d = no_derivs)
        : field(static_cast<uint16_t>(f)), conj(cj), comp(static_cast<uint16_t>(c)), derivs(d)
    {
    }

    uint64_t code() const
    {
        uint64_t v = field;
        v = (v << 1) | (conj ? 1u : 0u);
        v = (v << 16) | comp;
        for (int i = 0; i < 4; ++i) v = (v << 8) | derivs[i];
        return v;
    }
    static JetVariable from_code(uint64_t v)
    {
        JetVariable j;
        for (int i = 3; i >= 0; --i) {
            j.derivs[i] = static_cast<uint8_t>(v & 0xff);
            v >>= 8;
        }
        j.comp = static_cast<uint16_t>(v & 0xffff);
        v >>= 16;
        j.conj = (v & 1) != 0;
        v >>= 1;
        j.field = static_cast<uint16_t>(v);
        return j;
    }

    int order() const { return deriv_order(derivs); }

    JetVariable with_derivative(const DerivativeDirection& d) const
    {
        JetVariable j = *this;
        j.derivs = deriv_plus(j.derivs, d);
        return j;
    }

    JetVariable conjugated(const JetContext& ctx) const
    {
        JetVariable j = *this;
        if (!ctx.at(field).is_real) j.conj = !j.conj;
        j.derivs = deriv_conj(j.derivs);
        return j;
    }

    std::string to_string(const JetContext& ctx) const
    {
        const auto& f = ctx.at(field);
        std::string base = conj ? "conj(" + f.name + ")" : f.name;
        base += f.structure.component_label(comp);
        std::string d = deriv_string(derivs);
        return d.empty() ? base : d + "(" + base + ")";
    }

    friend bool operator==(const JetVariable& a, const JetVariable& b)
    {
        return a.code() == b.code();
    }
    friend bool operator<(const JetVariable& a, const JetVariable& b)
    {
        return a.code() < b.code();
    }
};

/// Power product of jet variables and coordinate factors.
struct Monomial {
    std::vector<std::pair<uint64_t, uint8_t>> vars;  // sorted by code, exponent > 0
    std::array<uint8_t, 4> coord{0, 0, 0, 0};        // exponents of x[a,ad]

    int degree() const
    {
        int d = coord[0] + coord[1] + coord[2] + coord[3];
        for (const auto& [c, e] : vars) d += e;
        return d;
    }

    int max_order() const
    {
        int m = 0;
        for (const auto& [c, e] : vars) {
            int o = JetVariable::from_code(c).order();
            if (o > m) m = o;
        }
        return m;
    }

    bool is_constant() const { return vars.empty() && coord == std::array<uint8_t, 4>{0, 0, 0, 0}; }

    void multiply_var(uint64_t code, int exp = 1)
    {
        auto it = vars.begin();
        while (it != vars.end() && it->first < code) ++it;
        if (it != vars.end() && it->first == code)
            it->second = static_cast<uint8_t>(it->second + exp);
        else
            vars.insert(it, {code, static_cast<uint8_t>(exp)});
    }

    /// Degree-lexicographic order: total degree first, then coordinates,
    /// then the variable word. Deterministic everywhere it is used.
    friend bool operator<(const Monomial& a, const Monomial& b)
    {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        if (a.coord != b.coord) return a.coord < b.coord;
        return a.vars < b.vars;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Sparse exact polynomial in jet variables and spinor coordinates over
/// the Gaussian rationals. The value currency of the whole library.
class JetPolynomial {
  public:
    using TermMap = std::map<Monomial, GaussianRational>;

    JetPolynomial() = default;

    static JetPolynomial zero() { return JetPolynomial(); }
    static JetPolynomial constant(GaussianRational c)
    {
        JetPolynomial p;
        if (!c.is_zero()) p.terms_[Monomial{}] = std::move(c);
        return p;
    }
    static JetPolynomial variable(const JetVariable& v)
    {
        JetPolynomial p;
        Monomial m;
        m.multiply_var(v.code());
        p.terms_[m] = GaussianRational(1);
        return p;
    }
    static JetPolynomial coordinate(const DerivativeDirection& d)
    {
        JetPolynomial p;
        Monomial m;
        m.coord[d.index()] = 1;
        p.terms_[m] = GaussianRational(1);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    int degree() const
    {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }
    int max_order() const
    {
        int o = 0;
        for (const auto& [m, c] : terms_) o = std::max(o, m.max_order());
        return o;
    }

    void add_term(const Monomial& m, const GaussianRational& c)
    {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    JetPolynomial operator-() const
    {
        JetPolynomial p;
        for (const auto& [m, c] : terms_) p.terms_[m] = -c;
        return p;
    }

    JetPolynomial& operator+=(const JetPolynomial& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    JetPolynomial& operator-=(const JetPolynomial& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend JetPolynomial operator+(JetPolynomial a, const JetPolynomial& b) { return a += b; }
    friend JetPolynomial operator-(JetPolynomial a, const JetPolynomial& b) { return a -= b; }

    JetPolynomial& operator*=(const GaussianRational& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend JetPolynomial operator*(JetPolynomial p, const GaussianRational& s) { return p *= s; }
    friend JetPolynomial operator*(const GaussianRational& s, JetPolynomial p) { return p *= s; }

    friend JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b)
    {
        JetPolynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (const auto& [code, e] : mb.vars) m.multiply_var(code, e);
                for (int i = 0; i < 4; ++i) m.coord[i] = static_cast<uint8_t>(m.coord[i] + mb.coord[i]);
                r.add_term(m, ca * cb);
            }
        return r;
    }

    friend bool operator==(const JetPolynomial& a, const JetPolynomial& b)
    {
        return a.terms_ == b.terms_;
    }

    /// Leading (largest) monomial in the canonical order, rendered.
    std::string leading_monomial_string(const JetContext& ctx) const
    {
        if (terms_.empty()) return "0";
        const auto& [m, c] = *terms_.rbegin();
        return render_term(m, c, ctx);
    }

    std::string to_string(const JetContext& ctx) const
    {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) s += " + ";
            s += render_term(it->first, it->second, ctx);
            first = false;
        }
        return s;
    }

    /// Total degree counting only jet variables of the listed fields.
    int degree_in(const std::set<int>& field_ids, const Monomial& m) const
    {
        int d = 0;
        for (const auto& [code, e] : m.vars) {
            JetVariable v = JetVariable::from_code(code);
            if (field_ids.count(v.field)) d += e;
        }
        return d;
    }

    /// Split into homogeneous parts by degree in the listed fields.
    std::map<int, JetPolynomial> split_by_degree_in(const std::set<int>& field_ids) const
    {
        std::map<int, JetPolynomial> parts;
        for (const auto& [m, c] : terms_) parts[degree_in(field_ids, m)].add_term(m, c);
        return parts;
    }

    bool depends_on_field(int field_id) const
    {
        for (const auto& [m, c] : terms_)
            for (const auto& [code, e] : m.vars)
                if (JetVariable::from_code(code).field == field_id) return true;
        return false;
    }

    std::set<uint64_t> variable_codes() const
    {
        std::set<uint64_t> s;
        for (const auto& [m, c] : terms_)
            for (const auto& [code, e] : m.vars) s.insert(code);
        return s;
    }

  private:
    static std::string render_term(const Monomial& m, const GaussianRational& c,
                                   const JetContext& ctx)
    {
        std::string s;
        GaussianRational one(1);
        bool needs_coef = !(c == one) || m.is_constant();
        if (needs_coef) {
            std::string cs = to_string(c);
            bool composite = (c.re != 0 && c.im != 0);
            s += composite ? "(" + cs + ")" : cs;
        }
        auto app = [&](const std::string& f) {
            if (!s.empty()) s += "*";
            s += f;
        };
        for (int i = 0; i < 4; ++i)
            for (int e = 0; e < m.coord[i]; ++e) {
                auto d = DerivativeDirection::from_index(i);
                app("x[" + std::to_string(d.undotted) + "," + std::to_string(d.dotted) + "]");
            }
        for (const auto& [code, e] : m.vars) {
            JetVariable v = JetVariable::from_code(code);
            for (int k = 0; k < e; ++k) app(v.to_string(ctx));
        }
        return s;
    }

    TermMap terms_;
};

using Multiplet = std::vector<JetPolynomial>;

inline JetPolynomial operator*(const JetVariable& v, const JetPolynomial& p)
{
    return JetPolynomial::variable(v) * p;
}

}  // namespace ancora

#endif
