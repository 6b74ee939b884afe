#include "g2calc/presets.hpp"

#include <cstddef>

#include "g2calc/g2.hpp"
#include "g2calc/symplectic.hpp"

namespace g2calc {

std::optional<DifferentialForm> preset_form_by_name(const std::string& name) {
    if (name == "phi0") return preset_phi0().phi();
    if (name == "star_phi0") return preset_star_phi0();
    if (name == "cst") return preset_cst().phi();
    const std::string prefix = "symplectic_std:";
    if (name.rfind(prefix, 0) == 0) {
        const std::string arg = name.substr(prefix.size());
        if (arg.empty()) return std::nullopt;
        int n = 0;
        for (char c : arg) {
            if (c < '0' || c > '9') return std::nullopt;
            n = n * 10 + (c - '0');
            if (n > kMaxAmbientDim) return std::nullopt;
        }
        if (n < 1 || 2 * n > kMaxAmbientDim) return std::nullopt;
        return preset_omega_std(n).omega();
    }
    return std::nullopt;
}

std::vector<std::string> preset_names() {
    return {"phi0", "star_phi0", "cst", "symplectic_std:n"};
}

}  // namespace g2calc
