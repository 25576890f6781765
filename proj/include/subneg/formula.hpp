// ============================================================================
// formula.hpp — Formula AST for positive logic with a weak negation
// ============================================================================
//
// Language: atoms, the constant T (top), conjunction, disjunction,
// implication and negation.  There is no falsum.
//
// Formulas are immutable heap nodes shared through FormulaPtr; weight and a
// structural hash are cached at construction, so equality checks can
// short-circuit and contexts can be hashed cheaply.  Identity everywhere in
// this project is structural equality of the (desugared) AST.
//
// Concrete syntax, ASCII:   ~ & | -> <-> T ( )   atoms: [a-z][a-zA-Z0-9_]*
// Precedence: ~  >  &  >  |  >  ->   with & and | left-associative and ->
// right-associative.  `a <-> b` is parse-time sugar for (a -> b) & (b -> a).
// ============================================================================

#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subneg {

enum class Kind : std::uint8_t { Atom, Top, Neg, And, Or, Imp };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
public:
    Kind kind;
    std::string atom;       // Kind::Atom only
    FormulaPtr lhs, rhs;    // Neg uses lhs; binary nodes use both
    int weight;             // w(p)=w(T)=1, w(f*g)=w(f)+w(g)+1, w(~f)=w(f)+1
    std::size_t hash;

    static FormulaPtr make_atom(std::string name);
    static FormulaPtr make_top();
    static FormulaPtr make_neg(FormulaPtr f);
    static FormulaPtr make_and(FormulaPtr l, FormulaPtr r);
    static FormulaPtr make_or(FormulaPtr l, FormulaPtr r);
    static FormulaPtr make_imp(FormulaPtr l, FormulaPtr r);

    Formula(Kind k, std::string a, FormulaPtr l, FormulaPtr r);
};

bool equal(const FormulaPtr& a, const FormulaPtr& b);

// Total order on ASTs; formulas stored in contexts are kept sorted by it so
// that sequent equality and hashing are deterministic.
int compare(const FormulaPtr& a, const FormulaPtr& b);

struct FormulaHash {
    std::size_t operator()(const FormulaPtr& f) const noexcept { return f->hash; }
};
struct FormulaEq {
    bool operator()(const FormulaPtr& a, const FormulaPtr& b) const { return equal(a, b); }
};
struct FormulaLess {
    bool operator()(const FormulaPtr& a, const FormulaPtr& b) const { return compare(a, b) < 0; }
};

inline int weight(const FormulaPtr& f) { return f->weight; }

bool is_atom(const FormulaPtr& f);
bool is_negation(const FormulaPtr& f);
bool is_disjunction(const FormulaPtr& f);

// Canonical printer, minimal parentheses.
std::string to_string(const FormulaPtr& f);

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(std::size_t off, const std::string& what)
        : std::runtime_error(what + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

FormulaPtr parse_formula(std::string_view text);

// Smallest set containing the inputs and closed under immediate subformulas,
// as a sorted duplicate-free vector in canonical order.
std::vector<FormulaPtr> subformula_closure(std::span<const FormulaPtr> fs);

// |subformula_closure(fs)| without materialising the sorted vector.
std::size_t subformula_count(std::span<const FormulaPtr> fs);

// Propositional variables occurring in the inputs; T contributes nothing.
std::set<std::string> language(std::span<const FormulaPtr> fs);

}  // namespace subneg
