// ============================================================================
// proof.hpp — proof trees, independent checking, history stripping, JSON
// ============================================================================
//
// A ProofNode records the concluded sequent, the rule, the principal formula
// (when the rule has one) and the premise subtrees.  Three flavors:
//
//   plain          exact multiset instances of the plain-calculus schemas
//   hist           exact instances of the history-calculus schemas, side
//                  conditions included
//   plain_lenient  plain schemas matched on set contexts, with duplicate
//                  context formulas collapsed and premise subproofs allowed
//                  to prove a sub-context of the schema premise (absorbed
//                  contraction / weakening).  Hosts stripped history proofs.
//
// check() validates every node against the logic's rule set and pinpoints
// the first failing node.  A cut node cannot be represented: there is no cut
// rule id, and the deserializer rejects unknown rule names.
//
// JSON format (stable):
//   proof  = {"flavor": "plain"|"hist"|"plain_lenient", "root": node}
//   node   = {"rule": name, "principal"?: formula, "sequent": seq,
//             "children": [node...]}
//   seq    = {"history"?: [formula...], "context": [formula...],
//             "goal": formula}            (history only in hist flavor)
// with formulas as canonical printed strings.
// ============================================================================

#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "subneg/logic.hpp"
#include "subneg/sequent.hpp"

namespace subneg {

enum class Flavor : std::uint8_t { Plain, Hist, PlainLenient };

std::string to_string(Flavor f);

struct ProofNode;
using ProofPtr = std::shared_ptr<const ProofNode>;

struct ProofNode {
    Rule rule;
    FormulaPtr principal;  // null when the rule has none
    Context history;       // hist flavor only; empty otherwise
    Context context;
    FormulaPtr goal;
    std::vector<ProofPtr> children;
};

struct ProofTree {
    Flavor flavor = Flavor::Plain;
    ProofPtr root;
};

ProofPtr make_proof_node(Rule rule, FormulaPtr principal, Context history, Context context,
                         FormulaPtr goal, std::vector<ProofPtr> children);

Sequent conclusion_plain(const ProofNode& n);
HistSequent conclusion_hist(const ProofNode& n);

struct CheckResult {
    bool ok = true;
    std::string path;    // e.g. "root.1.0": child indices from the root
    std::string reason;  // empty when ok
};

CheckResult check(const ProofTree& t, Logic logic);

// Drops histories and maps rule variants to their plain counterparts
// (n1..n4 -> n, copc1/copc2 -> copc, imp_r1/imp_r2 -> imp_r,
// and_l1/and_l2 -> and_l).  Requires check(t, logic) to pass; the result
// passes check in the plain_lenient flavor.
struct CheckError : std::runtime_error {
    CheckResult result;
    explicit CheckError(CheckResult r)
        : std::runtime_error("invalid proof at " + r.path + ": " + r.reason),
          result(std::move(r)) {}
};

ProofTree strip_history(const ProofTree& t, Logic logic);

struct ProofFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string serialize(const ProofTree& t);
ProofTree deserialize(std::string_view bytes);

int proof_height(const ProofNode& n);  // single node counts 1
int proof_size(const ProofNode& n);    // number of nodes

}  // namespace subneg
