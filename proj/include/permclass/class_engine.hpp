#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permclass/perm.hpp"

namespace permclass {

using BigInt = boost::multiprecision::cpp_int;

/// A closed class A(B) given by a finite basis. The basis is kept as a
/// sorted antichain; non-minimal elements are discarded on construction.
class FiniteBasisClass {
public:
    FiniteBasisClass() = default;
    explicit FiniteBasisClass(std::vector<Perm> raw_basis);

    const std::vector<Perm>& basis() const noexcept { return basis_; }
    /// Length of a longest basis element, 0 for the empty basis.
    std::size_t max_basis_length() const noexcept { return b_; }

    friend bool operator==(const FiniteBasisClass&, const FiniteBasisClass&) = default;

private:
    std::vector<Perm> basis_;
    std::size_t b_ = 0;
};

FiniteBasisClass normalize_basis(std::vector<Perm> raw);

bool contains(const FiniteBasisClass& c, const Perm& g);

/// Members of length n, sorted.
std::vector<Perm> members(const FiniteBasisClass& c, std::size_t n);

/// Members of every length 0..n, level by level (level[i] sorted).
std::vector<std::vector<Perm>> member_levels(const FiniteBasisClass& c, std::size_t n);

/// counts[n] = |members(c, n)| for n = 0..max_n.
std::vector<BigInt> count_profile(const FiniteBasisClass& c, std::size_t max_n);

/// True iff every basis element is indecomposable.
bool is_sum_complete(const FiniteBasisClass& c);

/// Last sum components of the basis elements (sorted, deduplicated).
/// Rejects the empty basis.
std::vector<Perm> final_components(const FiniteBasisClass& c);

enum class Verdict { RefutedCertified, EvidenceUpTo, Inconclusive };

std::string to_string(Verdict v);

struct AtomicityReport {
    Verdict verdict = Verdict::Inconclusive;
    std::size_t pair_len = 0;
    std::size_t witness_len = 0;
    /// Refuting pair (RefutedCertified) or the pair that blocked the search
    /// (Inconclusive).
    std::optional<std::pair<Perm, Perm>> witness_pair;
    /// X = A(B ∪ {α}) ∪ A(B ∪ {β}) for a refuted class.
    std::optional<std::pair<FiniteBasisClass, FiniteBasisClass>> decomposition;
    /// Minimal mergers of the refuting pair; each involves a basis element.
    std::vector<Perm> mergers;
    std::size_t pairs_examined = 0;
};

/// Searches member pairs (α, β) with |α|, |β| <= pair_len in order of
/// |α|+|β|. A pair whose minimal mergers all fall outside the class refutes
/// atomicity; otherwise a common superpattern inside the class of length at
/// most witness_len must be found.
AtomicityReport atomicity_check(const FiniteBasisClass& c, std::size_t pair_len, std::size_t witness_len);

}  // namespace permclass
