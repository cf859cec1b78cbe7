#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hypants/horoball.hpp"

namespace hypants {

/// Top view of a horoball packing: one circle per finite ball (radius =
/// diameter / 2), the fundamental parallelogram, and a legend line for a ball
/// at ∞. Element order and ids follow the input order, numbers are printed
/// with six decimals, so equal input gives byte-identical output.
/// Throws std::invalid_argument on an empty list.
std::string render_svg(const std::vector<Horoball>& balls, const CuspLattice& lattice);

/// render_svg written to `path`; throws std::runtime_error if it cannot be written.
void render_diagram(const std::vector<Horoball>& balls, const CuspLattice& lattice,
                    const std::filesystem::path& path);

}  // namespace hypants
