#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wbck/op_table.hpp"
#include "wbck/poset.hpp"
#include "wbck/report.hpp"

namespace wbck {

// A poset with a designated unit and optional implication / product tables.
// All axiom checkers consume this. For the algebra to belong to any of the
// implication classes the unit must be the top element; checkers report
// rather than enforce this so that arbitrary input files can be examined.
struct OrderedAlgebra {
    Poset poset;
    int unit = 0;
    std::optional<OpTable> imp;
    std::optional<OpTable> mul;

    int size() const { return poset.size(); }
};

// Builds an algebra whose unit is the top element; throws PreconditionError
// when the poset has no top or a table size mismatches.
OrderedAlgebra make_algebra(Poset poset, std::optional<OpTable> imp,
                            std::optional<OpTable> mul = std::nullopt);

// Catalog of checkable laws. Names (axiom_name) are the stable report ids.
enum class AxiomId {
    WExch,      // W-EXCH: if x <= y -> z then y <= x -> z
    Reg,        // REG: if x <= x -> y then x <= y
    Comp,       // COMP: if meet(x,y) exists then x <= y -> (x /\ y)
    Isot,       // ISOT: if x <= y then z -> x <= z -> y
    Regg,       // REGG: x /\ (x -> y) <= y  (meet-semilattices only)
    LeTo,       // LE-TO: x <= y iff x -> y = 1
    Bck2,       // BCK2: x <= (x -> y) -> y
    Antitone,   // ANTITONE: if x <= y then y -> z <= x -> z
    Ubound,     // UBOUND: y <= (x -> y) -> y
    Expan,      // EXPAN: ((x -> y) -> y) -> y = x -> y
    Refl,       // REFL: x -> x = 1
    H1,         // H1: x <= y -> x
    Sreg,       // SREG: 1 -> x = x
    Unit,       // UNIT: x -> 1 = 1
    Bck1,       // BCK1: x -> y <= (y -> z) -> (x -> z)
    HilbContr,  // HILB-CONTR: x -> (x -> y) = x -> y
    PosImpl,    // POS-IMPL: x -> (y -> z) <= (x -> y) -> (x -> z)
    Rpc8,       // RPC-8: if u <= x -> y and v <= x, u then v <= y
    Rpc9,       // RPC-9: if v <= y whenever v <= x, u, then u <= x -> y
    Rpc10,      // RPC-10: if z <= x and z <= x -> y then z <= y
};

inline constexpr int kAxiomCount = 20;

std::string_view axiom_name(AxiomId id);
std::optional<AxiomId> axiom_from_name(std::string_view name);
int axiom_arity(AxiomId id);
std::span<const std::string_view> axiom_vars(AxiomId id);

// Evaluates one quantifier instance; binding[i] assigns the i-th variable of
// axiom_vars(id).
bool axiom_instance_holds(const OrderedAlgebra& a, AxiomId id, std::span<const int> binding);

// Universally quantified check over all assignments in lexicographic order;
// a failing verdict carries the least violating binding.
Report check_axiom(const OrderedAlgebra& a, AxiomId id);

// Eq-style biconditional: x <= y iff imp(x,y) = unit.
Report check_le_to(const OrderedAlgebra& a);

// The eight laws valid in every wBCK*-algebra: BCK2, ANTITONE, UBOUND,
// EXPAN, REFL, H1, SREG, UNIT.
Report check_derived_laws(const OrderedAlgebra& a);
std::span<const AxiomId> derived_law_ids();

struct ClassMemberships {
    bool unit_is_top = false;
    bool wbck = false;                // LE-TO, W-EXCH
    bool weakly_contractive = false;  // + REG
    bool sectionally_j_pc = false;    // LE-TO, W-EXCH, REG, COMP
    bool bck_star = false;            // LE-TO, BCK2, BCK1
    bool hilbert = false;             // BCK* + POS-IMPL
    bool rel_pc = false;              // RPC-8, RPC-9
    // Cross-checks that are theorems of the catalog: HILB-VIA-CONTR,
    // RPC8-IFF-RPC10, HILBERT-IN-WCONTR, RELPC-IN-SJP.
    Report consistency;
};

ClassMemberships classify(const OrderedAlgebra& a);

enum class AlgebraClass {
    WBck,
    WeaklyContractive,
    SectionallyJPc,
    BckStar,
    Hilbert,
    RelPc,
    Heyting,  // RelPc on a lattice
};

std::string_view algebra_class_name(AlgebraClass cls);
std::optional<AlgebraClass> algebra_class_from_name(std::string_view name);

// Membership as a report listing the defining laws; all_hold() == member.
Report check_class(const OrderedAlgebra& a, AlgebraClass cls);

// --- implication table search ---------------------------------------------

struct TableSearchOptions {
    // Pre-fill 1 -> x = x when both LE-TO and W-EXCH are required. The
    // emitted stream is unchanged (SREG is derivable); this only prunes.
    bool consequence_prefill = true;
};

// All total implication tables on P satisfying the required axioms, via
// backtracking with constraint propagation. LE-TO must be in `required`
// (pre-fills x -> y = 1 exactly for x <= y). Deterministic order: free
// cells row-major, candidate values ascending. Callback false = stop.
void for_each_imp_table(const Poset& p, std::span<const AxiomId> required,
                        const std::function<bool(const OpTable&)>& fn,
                        const TableSearchOptions& options = {});

std::vector<OpTable> enumerate_imp_tables(const Poset& p, std::span<const AxiomId> required,
                                          const TableSearchOptions& options = {});

// All subsets containing the unit and closed under imp (and mul if present),
// as algebras with the induced order, in ascending subset-mask order.
void for_each_subalgebra(const OrderedAlgebra& a,
                         const std::function<bool(const OrderedAlgebra&)>& fn);
std::vector<OrderedAlgebra> subalgebras(const OrderedAlgebra& a);

}  // namespace wbck
