#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wbck/errors.hpp"

namespace wbck {

// Element subsets are bitmasks over carrier indices.
using Mask = std::uint16_t;

// Hard cap on carrier size for poset queries (masks, tables).
inline constexpr int kMaxPosetSize = 12;

// Cap for canonical codes: n(n-1)/2 bits must fit in 64.
inline constexpr int kMaxCanonicalSize = 11;

// Cap for enumeration up to isomorphism.
inline constexpr int kMaxEnumerationSize = 7;

inline Mask bit(int i) { return static_cast<Mask>(Mask{1} << i); }

struct OrderFlags {
    bool has_top = false;
    bool meet_semilattice = false;
    bool join_semilattice = false;
    bool lattice = false;
};

// Restriction applied by the enumerator. Requirements combine conjunctively.
struct OrderFilter {
    bool with_top = false;
    bool meet_semilattice = false;
    bool join_semilattice = false;

    bool admits(const OrderFlags& f) const {
        return (!with_top || f.has_top) && (!meet_semilattice || f.meet_semilattice) &&
               (!join_semilattice || f.join_semilattice);
    }
    static OrderFilter lattice() { return {false, true, true}; }
};

// Isomorphism-invariant key: minimum bit encoding of the order relation over
// all linear-extension labelings. Equal codes iff order-isomorphic.
struct CanonicalCode {
    std::uint8_t size = 0;
    std::uint64_t bits = 0;

    auto operator<=>(const CanonicalCode&) const = default;
};

// A finite poset. Immutable after construction; elements are 0-based indices
// and display names are cosmetic metadata only (excluded from ==).
class Poset {
public:
    // Reflexive-transitive closure of the generating pairs (a <= b each).
    static Poset from_generators(int n, std::span<const std::pair<int, int>> pairs);
    static Poset from_generators(int n, std::span<const std::pair<int, int>> pairs,
                                 std::vector<std::string> names);

    // From a full up-set table; validates all three order axioms.
    static Poset from_up_sets(std::vector<Mask> up, std::vector<std::string> names = {});

    int size() const { return n_; }
    bool leq(int x, int y) const { return (up_[check(x)] >> check(y)) & 1; }
    bool lt(int x, int y) const { return x != y && leq(x, y); }

    Mask up_set(int x) const { return up_[check(x)]; }
    Mask down_set(int x) const { return down_[check(x)]; }
    Mask carrier_mask() const { return static_cast<Mask>((Mask{1} << n_) - 1); }

    // Principal order filter [y) = {u : y <= u}.
    Mask principal_filter(int y) const { return up_set(y); }

    std::optional<int> meet(int x, int y) const;
    std::optional<int> join(int x, int y) const;
    std::optional<int> top() const;
    std::optional<int> bottom() const;

    // Maximum of an arbitrary element subset, if it exists.
    std::optional<int> max_of(Mask subset) const;
    std::optional<int> min_of(Mask subset) const;

    OrderFlags classify_order() const;

    CanonicalCode canonical_code() const;
    // Relabeled copy in canonical (naturally labeled) form.
    Poset canonical_form() const;
    // perm maps new index -> old index.
    Poset relabeled(std::span<const int> perm) const;

    const std::string& name(int i) const { return names_[check(i)]; }
    const std::vector<std::string>& names() const { return names_; }
    Poset with_names(std::vector<std::string> names) const;

    // Order equality only; names are ignored.
    bool operator==(const Poset& other) const { return n_ == other.n_ && up_ == other.up_; }

private:
    Poset(int n, std::vector<Mask> up, std::vector<Mask> down, std::vector<std::string> names)
        : n_(n), up_(std::move(up)), down_(std::move(down)), names_(std::move(names)) {}

    int check(int i) const {
        if (i < 0 || i >= n_) throw IndexError("element index " + std::to_string(i) + " out of range");
        return i;
    }

    int n_ = 0;
    std::vector<Mask> up_;    // up_[x] = {y : x <= y}
    std::vector<Mask> down_;  // down_[y] = {x : x <= y}
    std::vector<std::string> names_;
};

std::vector<std::string> default_names(int n);

// All posets on n elements up to isomorphism, each emitted in canonical form,
// in ascending canonical-code order. Callback returns false to stop early.
void for_each_poset(int n, const OrderFilter& filter, const std::function<bool(const Poset&)>& fn);
std::vector<Poset> enumerate_posets(int n, const OrderFilter& filter = {});

}  // namespace wbck
