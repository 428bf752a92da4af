#pragma once

#include <optional>
#include <string>
#include <vector>

namespace wbck {

// Variable assignment witnessing a failed law: vars[i] took values[i].
struct Witness {
    std::vector<std::string> vars;
    std::vector<int> values;

    bool operator==(const Witness&) const = default;
};

struct Verdict {
    std::string law;
    bool holds = true;
    std::optional<Witness> witness;
    std::string note;
};

// Structured result of a checker: one verdict per examined law.
struct Report {
    std::vector<Verdict> verdicts;

    bool all_hold() const {
        for (const auto& v : verdicts)
            if (!v.holds) return false;
        return true;
    }

    const Verdict* first_failure() const {
        for (const auto& v : verdicts)
            if (!v.holds) return &v;
        return nullptr;
    }

    const Verdict* find(const std::string& law) const {
        for (const auto& v : verdicts)
            if (v.law == law) return &v;
        return nullptr;
    }

    void add(Verdict v) { verdicts.push_back(std::move(v)); }
    void merge(const Report& other) {
        verdicts.insert(verdicts.end(), other.verdicts.begin(), other.verdicts.end());
    }
};

}  // namespace wbck
