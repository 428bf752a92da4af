#include "wbck/poset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>

namespace wbck {

namespace {

void closure_in_place(std::vector<Mask>& up) {
    const int n = static_cast<int>(up.size());
    // Warshall closure on the up-set rows.
    for (int k = 0; k < n; ++k)
        for (int x = 0; x < n; ++x)
            if ((up[x] >> k) & 1) up[x] |= up[k];
}

std::vector<Mask> down_from_up(const std::vector<Mask>& up) {
    const int n = static_cast<int>(up.size());
    std::vector<Mask> down(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if ((up[x] >> y) & 1) down[y] |= bit(x);
    return down;
}

void check_antisymmetry(const std::vector<Mask>& up) {
    const int n = static_cast<int>(up.size());
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (((up[x] >> y) & 1) && ((up[y] >> x) & 1))
                throw AntisymmetryError("elements " + std::to_string(x) + " and " +
                                        std::to_string(y) + " form a cycle");
}

}  // namespace

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return names;
}

Poset Poset::from_generators(int n, std::span<const std::pair<int, int>> pairs) {
    return from_generators(n, pairs, default_names(n));
}

Poset Poset::from_generators(int n, std::span<const std::pair<int, int>> pairs,
                             std::vector<std::string> names) {
    if (n < 1 || n > kMaxPosetSize) throw IndexError("carrier size out of range");
    if (static_cast<int>(names.size()) != n) throw IndexError("name list size mismatch");
    std::vector<Mask> up(n, 0);
    for (int x = 0; x < n; ++x) up[x] = bit(x);
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw IndexError("generator pair index out of range");
        up[a] |= bit(b);
    }
    closure_in_place(up);
    check_antisymmetry(up);
    return Poset(n, up, down_from_up(up), std::move(names));
}

Poset Poset::from_up_sets(std::vector<Mask> up, std::vector<std::string> names) {
    const int n = static_cast<int>(up.size());
    if (n < 1 || n > kMaxPosetSize) throw IndexError("carrier size out of range");
    if (names.empty()) names = default_names(n);
    if (static_cast<int>(names.size()) != n) throw IndexError("name list size mismatch");
    for (int x = 0; x < n; ++x)
        if (!((up[x] >> x) & 1)) throw PreconditionError("relation not reflexive");
    auto closed = up;
    closure_in_place(closed);
    if (closed != up) throw PreconditionError("relation not transitive");
    check_antisymmetry(up);
    return Poset(n, up, down_from_up(up), std::move(names));
}

std::optional<int> Poset::max_of(Mask subset) const {
    for (Mask m = subset; m;) {
        int c = std::countr_zero(m);
        m &= static_cast<Mask>(m - 1);
        if ((subset & ~down_[c]) == 0) return c;
    }
    return std::nullopt;
}

std::optional<int> Poset::min_of(Mask subset) const {
    for (Mask m = subset; m;) {
        int c = std::countr_zero(m);
        m &= static_cast<Mask>(m - 1);
        if ((subset & ~up_[c]) == 0) return c;
    }
    return std::nullopt;
}

std::optional<int> Poset::meet(int x, int y) const {
    return max_of(static_cast<Mask>(down_set(x) & down_set(y)));
}

std::optional<int> Poset::join(int x, int y) const {
    return min_of(static_cast<Mask>(up_set(x) & up_set(y)));
}

std::optional<int> Poset::top() const { return max_of(carrier_mask()); }

std::optional<int> Poset::bottom() const { return min_of(carrier_mask()); }

OrderFlags Poset::classify_order() const {
    OrderFlags f;
    f.has_top = top().has_value();
    f.meet_semilattice = true;
    f.join_semilattice = true;
    for (int x = 0; x < n_ && (f.meet_semilattice || f.join_semilattice); ++x)
        for (int y = x + 1; y < n_; ++y) {
            if (f.meet_semilattice && !meet(x, y)) f.meet_semilattice = false;
            if (f.join_semilattice && !join(x, y)) f.join_semilattice = false;
        }
    f.lattice = f.meet_semilattice && f.join_semilattice;
    return f;
}

Poset Poset::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw IndexError("permutation size mismatch");
    std::vector<Mask> up(n_, 0);
    std::vector<std::string> names(n_);
    for (int i = 0; i < n_; ++i) {
        names[i] = names_[perm[i]];
        for (int j = 0; j < n_; ++j)
            if (leq(perm[i], perm[j])) up[i] |= bit(j);
    }
    return Poset(n_, up, down_from_up(up), std::move(names));
}

Poset Poset::with_names(std::vector<std::string> names) const {
    if (static_cast<int>(names.size()) != n_) throw IndexError("name list size mismatch");
    return Poset(n_, up_, down_, std::move(names));
}

namespace {

// Lexicographic minimization of the order encoding over all linear-extension
// labelings. At depth k the permutation gains one more minimal element of the
// unplaced set; the k bits leq(perm[i], e), i < k, are appended MSB-first.
// Restricting candidates to minimal elements keeps every leaf a linear
// extension, so "new element below an old one" bits are identically zero and
// are omitted from the code.
struct CanonicalSearch {
    const Poset& p;
    int n;
    int total_bits;
    std::uint64_t best;
    std::array<int, kMaxCanonicalSize> perm{};
    std::array<int, kMaxCanonicalSize> best_perm{};

    explicit CanonicalSearch(const Poset& poset)
        : p(poset), n(poset.size()), total_bits(n * (n - 1) / 2) {
        best = total_bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << total_bits) - 1);
        for (int i = 0; i < n; ++i) best_perm[i] = i;
        dfs(0, Mask{0}, 0);
    }

    // Transposing e and f must be an automorphism: equal relations to all
    // other elements and incomparable to each other.
    bool twins(int e, int f) const {
        Mask both = static_cast<Mask>(bit(e) | bit(f));
        if (p.leq(e, f) || p.leq(f, e)) return false;
        return static_cast<Mask>(p.up_set(e) & ~both) == static_cast<Mask>(p.up_set(f) & ~both) &&
               static_cast<Mask>(p.down_set(e) & ~both) == static_cast<Mask>(p.down_set(f) & ~both);
    }

    void dfs(int depth, Mask used, std::uint64_t cur) {
        const int len = depth * (depth - 1) / 2;
        if (cur > (best >> (total_bits - len))) return;
        if (depth == n) {
            if (cur < best) {
                best = cur;
                for (int i = 0; i < n; ++i) best_perm[i] = perm[i];
            }
            return;
        }
        // Candidates: minimal elements of the unplaced set.
        std::array<std::pair<std::uint32_t, int>, kMaxCanonicalSize> cand{};
        int count = 0;
        Mask unused = static_cast<Mask>(p.carrier_mask() & ~used);
        for (Mask m = unused; m;) {
            int e = std::countr_zero(m);
            m &= static_cast<Mask>(m - 1);
            if (static_cast<Mask>(p.down_set(e) & unused) != bit(e)) continue;
            std::uint32_t seg = 0;
            for (int i = 0; i < depth; ++i) seg = (seg << 1) | (p.leq(perm[i], e) ? 1u : 0u);
            cand[count++] = {seg, e};
        }
        std::sort(cand.begin(), cand.begin() + count);
        for (int ci = 0; ci < count; ++ci) {
            auto [seg, e] = cand[ci];
            bool skip = false;
            for (int cj = 0; cj < ci && !skip; ++cj)
                if (cand[cj].first == seg && twins(cand[cj].second, e)) skip = true;
            if (skip) continue;
            const int child_len = len + depth;
            std::uint64_t child = (cur << depth) | seg;
            if (child > (best >> (total_bits - child_len))) break;
            perm[depth] = e;
            dfs(depth + 1, static_cast<Mask>(used | bit(e)), child);
        }
    }
};

}  // namespace

CanonicalCode Poset::canonical_code() const {
    if (n_ > kMaxCanonicalSize)
        throw BoundError("canonical codes support at most " +
                         std::to_string(kMaxCanonicalSize) + " elements");
    CanonicalSearch s(*this);
    return CanonicalCode{static_cast<std::uint8_t>(n_), s.best};
}

Poset Poset::canonical_form() const {
    if (n_ > kMaxCanonicalSize)
        throw BoundError("canonical codes support at most " +
                         std::to_string(kMaxCanonicalSize) + " elements");
    CanonicalSearch s(*this);
    std::vector<int> perm(s.best_perm.begin(), s.best_perm.begin() + n_);
    return relabeled(perm).with_names(default_names(n_));
}

namespace {

// Natural labelings are built by repeatedly adding a new maximal element
// whose strict down-set is a downset of the order so far; every isomorphism
// class is reached this way.
void extend_labelings(std::vector<Mask>& up, int n, const std::function<void(const std::vector<Mask>&)>& sink) {
    const int k = static_cast<int>(up.size());
    if (k == n) {
        sink(up);
        return;
    }
    const Mask low = static_cast<Mask>((Mask{1} << k) - 1);
    for (Mask d = 0; d <= low; ++d) {
        // d is a downset iff no element outside d lies below one inside.
        bool downset = true;
        for (int y = 0; y < k && downset; ++y)
            if (!((d >> y) & 1) && (up[y] & d)) downset = false;
        if (!downset) continue;
        up.push_back(bit(k));
        for (Mask m = d; m;) {
            int x = std::countr_zero(m);
            m &= static_cast<Mask>(m - 1);
            up[x] |= bit(k);
        }
        extend_labelings(up, n, sink);
        for (Mask m = d; m;) {
            int x = std::countr_zero(m);
            m &= static_cast<Mask>(m - 1);
            up[x] = static_cast<Mask>(up[x] & ~bit(k));
        }
        up.pop_back();
    }
}

}  // namespace

void for_each_poset(int n, const OrderFilter& filter, const std::function<bool(const Poset&)>& fn) {
    if (n < 1 || n > kMaxEnumerationSize)
        throw BoundError("poset enumeration supports sizes 1.." +
                         std::to_string(kMaxEnumerationSize));
    std::map<CanonicalCode, Poset> by_code;
    std::vector<Mask> up{bit(0)};
    extend_labelings(up, n, [&](const std::vector<Mask>& rows) {
        Poset p = Poset::from_up_sets(rows);
        CanonicalCode code = p.canonical_code();
        if (!by_code.contains(code)) by_code.emplace(code, p.canonical_form());
    });
    for (const auto& [code, p] : by_code) {
        if (!filter.admits(p.classify_order())) continue;
        if (!fn(p)) return;
    }
}

std::vector<Poset> enumerate_posets(int n, const OrderFilter& filter) {
    std::vector<Poset> out;
    for_each_poset(n, filter, [&](const Poset& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

}  // namespace wbck
