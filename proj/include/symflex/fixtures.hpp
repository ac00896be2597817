#pragma once

#include "symflex/document.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symflex {

/// Names accepted by fixture(); parametrised families are listed by their
/// base name and built through the dedicated generators.
std::vector<std::string> fixture_names();

/// Throws InvalidArgument for unknown names.
GraphDocument fixture(std::string_view name);

GraphDocument gk_fixture(int k);

struct StripOptions {
    int rows = 1;
    int columns = 2;
    /// Brace a seeded selection of mirror-paired cells with diagonals.
    bool brace = false;
    /// Attach a seeded selection of triangles on the top boundary.
    bool triangles = false;
    std::uint64_t seed = 0;
};

/// Axis-symmetric grid of parallelograms. Column offsets satisfy
/// X_{n-i} = tau X_i and rows are stacked vertically, so every cell is a
/// parallelogram and the mirror maps column i to column n - i.
GraphDocument strip_fixture(const StripOptions& options);

/// "triangle-chain": an invariant apex over a forced-gold K4 with a
/// flexible four-cycle tail.
GraphDocument gadget_fixture(std::string_view name);

} // namespace symflex
