#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wbck/errors.hpp"

namespace wbck {

// Total binary operation table over a carrier of size n.
class OpTable {
public:
    OpTable() = default;
    explicit OpTable(int n, int fill = 0) : n_(n), cells_(static_cast<std::size_t>(n) * n) {
        for (auto& c : cells_) c = static_cast<std::uint8_t>(fill);
    }

    int size() const { return n_; }

    int at(int x, int y) const { return cells_[index(x, y)]; }
    void set(int x, int y, int v) {
        if (v < 0 || v >= n_) throw IndexError("table value out of carrier");
        cells_[index(x, y)] = static_cast<std::uint8_t>(v);
    }

    bool operator==(const OpTable&) const = default;
    auto operator<=>(const OpTable&) const = default;

private:
    std::size_t index(int x, int y) const {
        if (x < 0 || x >= n_ || y < 0 || y >= n_) throw IndexError("table index out of range");
        return static_cast<std::size_t>(x) * n_ + y;
    }

    int n_ = 0;
    std::vector<std::uint8_t> cells_;
};

// Partial binary operation table; undefined cells use an explicit sentinel.
class PartialOpTable {
public:
    PartialOpTable() = default;
    explicit PartialOpTable(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, kUndefined) {}

    int size() const { return n_; }

    bool defined(int x, int y) const { return cells_[index(x, y)] != kUndefined; }
    std::optional<int> at(int x, int y) const {
        auto c = cells_[index(x, y)];
        if (c == kUndefined) return std::nullopt;
        return static_cast<int>(c);
    }
    void set(int x, int y, int v) {
        if (v < 0 || v >= n_) throw IndexError("table value out of carrier");
        cells_[index(x, y)] = static_cast<std::int8_t>(v);
    }
    void clear(int x, int y) { cells_[index(x, y)] = kUndefined; }

    // Totalizes; throws if any cell is undefined.
    OpTable to_total() const {
        OpTable t(n_);
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) {
                auto v = at(x, y);
                if (!v) throw PreconditionError("partial table has undefined cells");
                t.set(x, y, *v);
            }
        return t;
    }

    bool operator==(const PartialOpTable&) const = default;

private:
    static constexpr std::int8_t kUndefined = -1;

    std::size_t index(int x, int y) const {
        if (x < 0 || x >= n_ || y < 0 || y >= n_) throw IndexError("table index out of range");
        return static_cast<std::size_t>(x) * n_ + y;
    }

    int n_ = 0;
    std::vector<std::int8_t> cells_;
};

}  // namespace wbck
