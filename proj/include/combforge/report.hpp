#pragma once

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace combforge {

enum class CheckMode { Exact, Sampled };

// Result of one property check. `witness` carries the violating vertex
// set(s) when holds is false; in exact mode it is the lexicographically
// smallest violation the enumeration encounters. Checkers re-evaluate the
// witness before returning, so a false report always reproduces.
struct PropertyReport {
    std::string property;
    bool holds = true;
    CheckMode mode = CheckMode::Exact;
    bool out_of_regime = false;
    std::uint64_t trials = 0;
    double quantity = 0.0;
    double bound = 0.0;
    std::string detail;
    std::vector<std::vector<int>> witness;

    // Line-oriented key:value serialization.
    std::string to_text() const {
        std::ostringstream os;
        os << "property: " << property << '\n';
        os << "holds: " << (holds ? "true" : "false") << '\n';
        os << "mode: " << (mode == CheckMode::Exact ? "exact" : "sampled") << '\n';
        if (mode == CheckMode::Sampled) os << "trials: " << trials << '\n';
        if (out_of_regime) os << "out_of_regime: true" << '\n';
        os << "quantity: " << quantity << '\n';
        os << "bound: " << bound << '\n';
        if (!detail.empty()) os << "detail: " << detail << '\n';
        for (std::size_t i = 0; i < witness.size(); ++i) {
            os << "witness" << i << ":";
            for (int v : witness[i]) os << ' ' << v;
            os << '\n';
        }
        return os.str();
    }
};

inline std::ostream& operator<<(std::ostream& os, const PropertyReport& r) {
    return os << r.to_text();
}

} // namespace combforge
