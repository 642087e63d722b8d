#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "permclass/class_engine.hpp"
#include "permclass/periodic.hpp"
#include "permclass/perm.hpp"
#include "permclass/rank_encoding.hpp"

namespace permclass {

/// A supplied basis disagrees with the class it is meant to describe.
class InconsistentInput : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

using InfinitePerm = std::variant<PeriodicPerm, RawPrefix>;

enum class Branch { SumForm, Periodic, Undetermined };

std::string to_string(Branch b);

struct DichotomyReport {
    Branch branch = Branch::Undetermined;
    std::optional<Perm> gamma;
    std::optional<std::vector<Perm>> C;
    std::optional<std::pair<std::size_t, std::size_t>> period;  // (N, P)
    /// Lengths up to which the basis and, for sum-form, the identity
    /// X = Sub(γ) ⊕ A(C) were checked.
    std::size_t verified_to = 0;
    /// Number of terms of π examined.
    std::size_t window = 0;
    /// Greatest start of a C-occurrence, 0 when there is none.
    std::size_t k = 0;
    std::vector<std::string> notes;
};

/// Splits Sub(π) into the sum-form or periodic branch. B is cross-checked
/// against Sub(π) up to `depth`; a mismatch throws InconsistentInput naming
/// the first offending permutation.
DichotomyReport classify(const InfinitePerm& p, const FiniteBasisClass& B, std::size_t depth);

/// Levels 0..depth of Sub(γ) ⊕ S.
std::vector<std::vector<Perm>> sum_form_levels(const Perm& gamma, const FiniteBasisClass& S, std::size_t depth);

/// X agrees with Sub(γ) ⊕ S at every length <= depth. S must be sum-complete.
bool verify_sum_form(const Perm& gamma, const FiniteBasisClass& S, const ClassSource& X, std::size_t depth);

struct SUniquenessReport {
    bool holds = true;
    bool classes_agree = false;
    bool s_agree = false;
    std::size_t depth = 0;
    /// S1 and S2 are compared up to depth - max(|γ1|, |γ2|).
    std::size_t s_depth = 0;
    std::string status;  // "s-agree", "s-differ" or "classes-differ"
};

SUniquenessReport check_S_uniqueness(const Perm& gamma1, const FiniteBasisClass& S1, const Perm& gamma2,
                                     const FiniteBasisClass& S2, std::size_t depth);

/// β_n = M1 M2 l1 M3 l2 ... M_2n l_(2n-1), of length 4n+1.
Perm twin_oscillation_basis_family(std::size_t n);

/// beta ∉ Sub(π) while every one-point deletion lies in Sub(π).
bool verify_basis_element(const PeriodicPerm& p, const Perm& beta);

// Shipped infinite permutations.
PeriodicPerm twin_oscillation();
PeriodicPerm increasing_oscillation();
/// Direct sum of decreasing runs of lengths 1, 2, 3, ..., cut at `len`.
RawPrefix layered_prefix(std::size_t len);
/// 3 2 5 1, then blocks of 2, 3, 4, ... consecutive values each followed by
/// the smallest value not yet used, cut at `len`.
RawPrefix growing_block_prefix(std::size_t len);

struct GrowingBlockReport {
    std::vector<int> prefix;
    std::optional<std::pair<std::size_t, std::size_t>> periodicity;
    /// Flattened initial segments ending at each low value.
    std::vector<Perm> xi;
    std::vector<std::size_t> embeddings;  // capped at 2
    std::vector<bool> doubled_embeds;     // ξ ⊕ ξ occurs in the prefix
    std::vector<bool> indecomposable;
};

GrowingBlockReport growing_block_nonexample(std::size_t depth);

}  // namespace permclass
