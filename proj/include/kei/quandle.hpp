#pragma once

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kei/word.hpp"

namespace kei {

/// A finite quandle/kei given by its full multiplication table.
/// table[a][b] = a*b.  Elements are dense indices 0..size-1; canonical
/// left-normed word names and generator indices are optional metadata.
struct FiniteQuandle {
    int size = 0;
    std::vector<std::vector<int>> table;
    std::vector<std::string> element_names;  // empty, or one name per element
    std::vector<int> generators;             // optional generator element ids

    int at(int a, int b) const { return table[a][b]; }
    bool has_names() const { return !element_names.empty(); }

    /// Index of the element named `name`, or -1.
    int element_by_name(const std::string& name) const;
};

/// Throws kei::error if the table is structurally malformed (non-square,
/// entry out of range).  Structural problems are distinct from axiom
/// violations, which validate() reports.
void check_table_shape(const FiniteQuandle& q);

enum class Axiom {
    Idempotence,      // a*a = a
    Involution,       // (a*b)*b = a
    Distributivity,   // (a*b)*c = (a*c)*(b*c)
    ColumnPermutation // every column is a permutation
};

const char* axiom_name(Axiom a);

struct AxiomViolation {
    Axiom axiom;
    std::array<int, 3> witness;  // unused positions are -1

    /// Table cells whose values take part in this violated instance.
    std::vector<std::pair<int, int>> cells_involved() const;
};

struct AxiomReport {
    bool is_quandle = false;  // idempotence + column permutations + distributivity
    bool is_kei = false;      // idempotence + involution + distributivity
    std::vector<AxiomViolation> violations;
};

/// Checks the kei axioms exhaustively.  With first_only, stops at the first
/// violation per axiom.
AxiomReport validate(const FiniteQuandle& q, bool first_only = false);

bool is_kei(const FiniteQuandle& q);

struct UniversalCheck {
    bool holds = false;
    int a = -1, b = -1;  // counterexample pair when !holds
};

/// Checks the universal relation r_n: for every pair (a,b), the alternating
/// word ...a*b*...*a*b with n letters (ending in a*b) evaluates back to a.
/// Requires n >= 2.
UniversalCheck satisfies_universal(const FiniteQuandle& q, int n);

/// a*b = b*a everywhere (this is r_3 restated).
UniversalCheck is_commutative(const FiniteQuandle& q);

/// Evaluates a word; env maps symbols to element indices.
/// Throws kei::error on a symbol missing from env.
int eval_word(const FiniteQuandle& q, const KeiWord& w,
              const std::unordered_map<std::string, int>& env);

/// Smallest subset containing seed and closed under the operation in both
/// argument positions; it is a subquandle.  Seed must be nonempty.
std::vector<int> closure(const FiniteQuandle& q, const std::vector<int>& seed);

/// The subquandle on the given closed subset, reindexed 0..k-1 in the given
/// order.  Throws if the subset is not closed.
FiniteQuandle subquandle(const FiniteQuandle& q, const std::vector<int>& elements);

struct Partition {
    std::vector<std::vector<int>> blocks;

    int block_of(int element) const;
    bool all_singletons() const;
};

/// x ~ y when z*x = z*y for all z (equal table columns).
Partition behavioral_classes(const FiniteQuandle& q);

/// Orbits of the action generated by all right translations x -> x*g.
Partition components(const FiniteQuandle& q);

inline constexpr int kInfiniteDiameter = std::numeric_limits<int>::max();

/// Max over pairs of the minimal number of right translations needed to map
/// one element to the other; kInfiniteDiameter when disconnected.
int diameter(const FiniteQuandle& q);

/// Coordinatewise operation on the product carrier; index = ia*|b| + ib.
FiniteQuandle direct_product(const FiniteQuandle& a, const FiniteQuandle& b);

/// The trivial quandle x*y = x on m elements.
FiniteQuandle trivial_quandle(int m);

/// Collapses a finite commutative kei along the partition into triples
/// {x, x*b*a, x*a*b}; the result is a commutative kei of size size/3.
/// Throws kei::error (with a witness in the message) if q is not a
/// commutative kei, if the triples fail to partition the carrier, or if the
/// induced operation is not well defined on triples.
FiniteQuandle triple_collapse(const FiniteQuandle& q, int a, int b);

struct ThreeElementStats {
    long long triple_count = 0;      // number of subquandles {a, b, a*b}
    long long per_element = 0;       // how many each element belongs to
    bool count_formula_holds = false;       // triple_count == C(m,2)/3
    bool membership_formula_holds = false;  // every element in (m-1)/2 triples
};

/// Counts the 3-element subquandles {a, b, a*b} of a commutative kei and
/// checks the counting formulas against the table.
ThreeElementStats three_element_stats(const FiniteQuandle& q);

} // namespace kei
