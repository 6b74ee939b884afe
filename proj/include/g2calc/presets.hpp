#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2calc/differential_form.hpp"

namespace g2calc {

/// Looks up a named preset form: "phi0", "star_phi0", "cst", or
/// "symplectic_std:n" (n a positive integer, chart dimension 2n).
/// Returns nullopt for unknown names.
std::optional<DifferentialForm> preset_form_by_name(const std::string& name);

/// Names accepted by preset_form_by_name, for help output.
std::vector<std::string> preset_names();

}  // namespace g2calc
