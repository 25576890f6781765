#include "subneg/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace subneg {

namespace {

// ── Lattice enumeration ─────────────────────────────────────────────────────

struct LatticeGen {
    int n;
    std::vector<std::uint32_t> lower;  // lower[v] = bitmask of {u : u <= v}, includes v
    std::set<std::uint64_t> seen;      // canonical forms of emitted lattices
    const std::function<bool(const FiniteAlgebra&)>* sink;
    Logic logic;
    bool stopped = false;

    bool emit_if_lattice();
    void assign(int v) {
        if (stopped) return;
        if (v == n) {
            if (!emit_if_lattice()) stopped = true;
            return;
        }
        std::uint32_t all = (1u << v) - 1;
        for (std::uint32_t mask = 0; mask <= all; mask++) {
            bool closed = true;
            for (int b = 0; b < v && closed; b++)
                if ((mask >> b) & 1u)
                    if (lower[b] & ~mask) closed = false;
            if (!closed) continue;
            lower[v] = mask | (1u << v);
            assign(v + 1);
            if (stopped) return;
        }
    }
};

std::uint64_t canonical_form(int n, const std::vector<std::uint32_t>& lower) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ULL;
    do {
        std::uint64_t bits = 0;
        for (int a = 0; a < n; a++)
            for (int b = 0; b < n; b++)
                if ((lower[perm[b]] >> perm[a]) & 1u) bits |= 1ULL << (a * n + b);
        best = std::min(best, bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool equations_hold(const FiniteAlgebra& a, Logic logic) {
    int n = a.size;
    auto iff = [&](int x, int y) { return a.mt(a.imp(x, y), a.imp(y, x)); };
    for (int p = 0; p < n; p++) {
        if (logic == Logic::MPC)
            if (a.imp(a.imp(p, a.ng(p)), a.ng(p)) != a.top) return false;
        for (int q = 0; q < n; q++) {
            switch (logic) {
                case Logic::N:
                    if (a.imp(iff(p, q), iff(a.ng(p), a.ng(q))) != a.top) return false;
                    break;
                case Logic::NeF:
                    if (a.imp(iff(p, q), iff(a.ng(p), a.ng(q))) != a.top) return false;
                    if (a.imp(a.mt(p, a.ng(p)), a.ng(q)) != a.top) return false;
                    break;
                case Logic::CoPC:
                case Logic::MPC:
                    if (a.imp(a.imp(p, q), a.imp(a.ng(q), a.ng(p))) != a.top) return false;
                    break;
            }
        }
    }
    return true;
}

bool LatticeGen::emit_if_lattice() {
    // needs a greatest element; with topological labels that can only be n-1
    if (lower[n - 1] != (1u << n) - 1u) return true;

    FiniteAlgebra a;
    a.size = n;
    a.top = n - 1;
    a.leq.assign(n * n, 0);
    for (int x = 0; x < n; x++)
        for (int y = 0; y < n; y++)
            a.leq[x * n + y] = (lower[y] >> x) & 1u;

    std::vector<std::uint32_t> upper(n, 0);
    for (int x = 0; x < n; x++)
        for (int y = 0; y < n; y++)
            if (a.le(x, y)) upper[x] |= 1u << y;

    a.meet.assign(n * n, 0);
    a.join.assign(n * n, 0);
    for (int x = 0; x < n; x++) {
        for (int y = 0; y < n; y++) {
            std::uint32_t common = lower[x] & lower[y];
            int m = -1;
            for (int c = 0; c < n; c++)
                if (((common >> c) & 1u) && lower[c] == common) m = c;
            if (m < 0) return true;  // no meet: not a lattice
            a.meet[x * n + y] = static_cast<std::uint8_t>(m);
            std::uint32_t commonU = upper[x] & upper[y];
            int j = -1;
            for (int c = 0; c < n; c++)
                if (((commonU >> c) & 1u) && upper[c] == commonU) j = c;
            if (j < 0) return true;
            a.join[x * n + y] = static_cast<std::uint8_t>(j);
        }
    }

    for (int x = 0; x < n; x++)
        for (int y = 0; y < n; y++)
            for (int z = 0; z < n; z++)
                if (a.mt(x, a.jn(y, z)) != a.jn(a.mt(x, y), a.mt(x, z))) return true;

    if (!seen.insert(canonical_form(n, lower)).second) return true;  // isomorphic duplicate

    // rpc(a,b) = join of every c with a & c <= b; verify residuation
    a.rpc.assign(n * n, 0);
    for (int x = 0; x < n; x++) {
        for (int y = 0; y < n; y++) {
            int r = 0;  // bottom of the candidate set: it contains y itself
            bool any = false;
            for (int c = 0; c < n; c++)
                if (a.le(a.mt(x, c), y)) r = any ? a.jn(r, c) : (any = true, c);
            a.rpc[x * n + y] = static_cast<std::uint8_t>(r);
        }
    }
    for (int x = 0; x < n; x++)
        for (int y = 0; y < n; y++)
            for (int c = 0; c < n; c++)
                if (a.le(a.mt(x, c), y) != a.le(c, a.imp(x, y)))
                    throw std::logic_error("residuation failed on a distributive lattice");

    // every negation table satisfying the variety equations
    a.neg.assign(n, 0);
    while (true) {
        if (equations_hold(a, logic))
            if (!(*sink)(a)) return false;
        int i = 0;
        while (i < n && a.neg[i] == n - 1) a.neg[i++] = 0;
        if (i == n) break;
        a.neg[i]++;
    }
    return true;
}

}  // namespace

void enumerate_algebras(int max_size, Logic logic,
                        const std::function<bool(const FiniteAlgebra&)>& visit) {
    for (int n = 1; n <= max_size; n++) {
        LatticeGen gen;
        gen.n = n;
        gen.lower.assign(n, 0);
        gen.sink = &visit;
        gen.logic = logic;
        gen.assign(0);
        if (gen.stopped) return;
    }
}

std::vector<FiniteAlgebra> enumerate_algebras(int max_size, Logic logic) {
    std::vector<FiniteAlgebra> out;
    enumerate_algebras(max_size, logic, [&](const FiniteAlgebra& a) {
        out.push_back(a);
        return true;
    });
    return out;
}

int eval(const FormulaPtr& f, const FiniteAlgebra& a, const Valuation& v) {
    switch (f->kind) {
        case Kind::Atom: {
            auto it = v.find(f->atom);
            if (it == v.end())
                throw std::invalid_argument("no valuation entry for atom '" + f->atom + "'");
            return it->second;
        }
        case Kind::Top: return a.top;
        case Kind::Neg: return a.ng(eval(f->lhs, a, v));
        case Kind::And: return a.mt(eval(f->lhs, a, v), eval(f->rhs, a, v));
        case Kind::Or: return a.jn(eval(f->lhs, a, v), eval(f->rhs, a, v));
        case Kind::Imp: return a.imp(eval(f->lhs, a, v), eval(f->rhs, a, v));
    }
    return a.top;
}

namespace {

std::optional<Valuation> refutes(const Sequent& s, const FiniteAlgebra& a,
                                 const std::vector<std::string>& atoms) {
    std::vector<int> vals(atoms.size(), 0);
    while (true) {
        Valuation v;
        for (std::size_t i = 0; i < atoms.size(); i++) v[atoms[i]] = vals[i];
        int lhs = a.top;
        for (const FormulaPtr& f : s.context) lhs = a.mt(lhs, eval(f, a, v));
        if (a.imp(lhs, eval(s.goal, a, v)) != a.top) return v;
        std::size_t i = 0;
        while (i < vals.size() && vals[i] == a.size - 1) vals[i++] = 0;
        if (i == vals.size()) return std::nullopt;
        vals[i]++;
    }
}

std::vector<std::string> sequent_atoms(const Sequent& s) {
    Context all = ctx_add(s.context, s.goal);
    std::set<std::string> lang = language(all);
    return {lang.begin(), lang.end()};
}

}  // namespace

std::optional<Countermodel> find_countermodel(const Sequent& s, Logic logic, int max_size) {
    std::vector<std::string> atoms = sequent_atoms(s);
    std::optional<Countermodel> found;
    enumerate_algebras(max_size, logic, [&](const FiniteAlgebra& a) {
        if (auto v = refutes(s, a, atoms)) {
            found = Countermodel{a, std::move(*v)};
            return false;
        }
        return true;
    });
    return found;
}

std::optional<Countermodel> find_countermodel(const Sequent& s,
                                              const std::vector<FiniteAlgebra>& algebras) {
    std::vector<std::string> atoms = sequent_atoms(s);
    for (const FiniteAlgebra& a : algebras)
        if (auto v = refutes(s, a, atoms)) return Countermodel{a, std::move(*v)};
    return std::nullopt;
}

std::string to_string(const FiniteAlgebra& a) {
    std::string out = "size: " + std::to_string(a.size) + "\ntop: " + std::to_string(a.top) +
                      "\nleq:\n";
    for (int x = 0; x < a.size; x++) {
        out += "  ";
        for (int y = 0; y < a.size; y++) {
            out += a.le(x, y) ? '1' : '0';
            out += y + 1 < a.size ? " " : "";
        }
        out += '\n';
    }
    out += "neg:";
    for (int x = 0; x < a.size; x++) out += " " + std::to_string(a.ng(x));
    out += '\n';
    return out;
}

}  // namespace subneg
