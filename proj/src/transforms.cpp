#include "subneg/transforms.hpp"

namespace subneg {

FormulaPtr tilde(const FormulaPtr& f) {
    switch (f->kind) {
        case Kind::Atom:
        case Kind::Top: return f;
        case Kind::Neg: {
            FormulaPtr body = tilde(f->lhs);
            return Formula::make_imp(body, Formula::make_neg(body));
        }
        case Kind::And: return Formula::make_and(tilde(f->lhs), tilde(f->rhs));
        case Kind::Or: return Formula::make_or(tilde(f->lhs), tilde(f->rhs));
        case Kind::Imp: return Formula::make_imp(tilde(f->lhs), tilde(f->rhs));
    }
    return f;
}

FormulaPtr reduce_negations(const FormulaPtr& f) {
    if (f->kind == Kind::Neg) {
        int height = 0;
        FormulaPtr body = f;
        while (body->kind == Kind::Neg) {
            height++;
            body = body->lhs;
        }
        int target = height;
        if (height >= 4) target = height % 2 == 0 ? 2 : 3;
        FormulaPtr out = reduce_negations(body);
        for (int i = 0; i < target; i++) out = Formula::make_neg(out);
        return out;
    }
    switch (f->kind) {
        case Kind::And: return Formula::make_and(reduce_negations(f->lhs), reduce_negations(f->rhs));
        case Kind::Or: return Formula::make_or(reduce_negations(f->lhs), reduce_negations(f->rhs));
        case Kind::Imp: return Formula::make_imp(reduce_negations(f->lhs), reduce_negations(f->rhs));
        default: return f;
    }
}

}  // namespace subneg
