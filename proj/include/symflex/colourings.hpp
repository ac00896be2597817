#pragma once

#include "symflex/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symflex {

/// Enumerator order is the canonical comparison order of colourings.
enum class Colour : std::uint8_t { Red, Blue, Gold };

std::string_view to_string(Colour c);
Colour parse_colour(std::string_view text);
constexpr Colour swap_red_blue(Colour c)
{
    return c == Colour::Red ? Colour::Blue : c == Colour::Blue ? Colour::Red : Colour::Gold;
}

/// Red/blue colouring indexed by edge index.
struct TwoColouring {
    std::vector<Colour> colour;
    Colour operator[](EdgeIndex e) const { return colour[static_cast<std::size_t>(e)]; }
    auto operator<=>(const TwoColouring&) const = default;
};

/// Red/blue/gold colouring indexed by edge index.
struct ThreeColouring {
    std::vector<Colour> colour;
    Colour operator[](EdgeIndex e) const { return colour[static_cast<std::size_t>(e)]; }
    auto operator<=>(const ThreeColouring&) const = default;
};

/// Default enumeration budget: 3^24 candidate assignments.
inline constexpr std::uint64_t default_budget = 282'429'536'481ULL;

/// Budget from SYMFLEX_BUDGET when set, else default_budget.
std::uint64_t budget_from_environment();

// ---------------------------------------------------------------- NAC

enum class NacFailure { None, NotSurjective, Cycle, NotTwoColouring };

struct NacResult {
    bool ok = false;
    NacFailure failure = NacFailure::None;
    /// Cycle with exactly one edge of some colour, when failure == Cycle.
    std::optional<Cycle> witness;
    explicit operator bool() const { return ok; }
};

NacResult is_nac(const Graph& g, const TwoColouring& delta);

/// Component criterion on a raw colour vector; no witness, no allocation
/// beyond the union-find arrays.
bool is_nac_fast(const Graph& g, const std::vector<Colour>& colour);

struct NacOptions {
    bool quotient_swap = false;
    std::uint64_t budget = default_budget;
};

/// All NAC-colourings in lexicographic order. With quotient_swap, keeps the
/// member of each {delta, swap(delta)} pair that colours edge 0 red.
std::vector<TwoColouring> enumerate_nac(const Graph& g, const NacOptions& options = {});

// ---------------------------------------------------------------- pseudo-RS

/// Replace gold by `to`.
TwoColouring substitute_gold(const ThreeColouring& delta, Colour to);

enum class PseudoRsFailure { None, MissingColour, GoldToBlueNotNac, GoldToRedNotNac, NotSwapped };

struct PseudoRsResult {
    bool ok = false;
    PseudoRsFailure failure = PseudoRsFailure::None;
    /// Offending edge for NotSwapped.
    std::optional<EdgeIndex> witness_edge;
    explicit operator bool() const { return ok; }
};

std::string_view to_string(PseudoRsFailure f);

PseudoRsResult is_pseudo_rs(const SymmetricGraph& g, const ThreeColouring& delta);

/// delta composed with sigma.
ThreeColouring conjugate(const SymmetricGraph& g, const ThreeColouring& delta);

struct CycleList {
    std::vector<Cycle> cycles;
    bool truncated = false;
};

/// Cycles with exactly one gold edge. Each cycle starts at the smaller
/// endpoint of its gold edge, which is the last edge of the cycle.
CycleList almost_red_blue_cycles(const SymmetricGraph& g, const ThreeColouring& delta,
    std::size_t cap = default_path_cap);

// ---------------------------------------------------------------- RS

enum class RsStatus { NotPseudoRs, PseudoRsOnly, RsNoCycle, RsCertified, UnknownTruncated };

std::string_view to_string(RsStatus s);

struct Certification {
    Cycle cycle;
    ThreeColouring certificate;
    EdgeIndex e1 = -1;
    EdgeIndex e2 = -1;
};

struct RsVerdict {
    RsStatus status = RsStatus::NotPseudoRs;
    PseudoRsFailure pseudo_failure = PseudoRsFailure::None;
    /// Uncertified cycle for PseudoRsOnly.
    std::optional<Cycle> witness;
    /// One entry per almost red-blue cycle for RsCertified.
    std::vector<Certification> certified;

    bool is_rs() const { return status == RsStatus::RsNoCycle || status == RsStatus::RsCertified; }
};

struct ClassifyOptions {
    std::size_t cycle_cap = default_path_cap;
    std::uint64_t budget = default_budget;
};

/// Searches the conjugate first, then `pool` in order. When `pool` is
/// empty it is filled on demand with every pseudo-RS-colouring of g.
RsVerdict classify_rs(const SymmetricGraph& g, const ThreeColouring& delta,
    const std::vector<ThreeColouring>* pool = nullptr, const ClassifyOptions& options = {});

/// Pair (e1, e2) on `cycle` with delta(e1) == delta(e2) and
/// other(e1) != other(e2), if any.
std::optional<std::pair<EdgeIndex, EdgeIndex>> separating_pair(const Cycle& cycle,
    const ThreeColouring& delta, const ThreeColouring& other);

struct EnumerateOptions {
    bool quotient_conjugation = false;
    bool rs_only = false;
    /// Backtracking with partial NAC pruning; output identical to the
    /// plain odometer scan.
    bool prune = false;
    std::uint64_t budget = default_budget;
    std::size_t cycle_cap = default_path_cap;
};

struct Enumeration {
    std::vector<ThreeColouring> colourings;
    /// Set when some RS classification hit the cycle cap; such colourings
    /// are dropped from an rs_only listing.
    bool truncated = false;
    std::uint64_t candidates = 0;
};

/// Pseudo-RS (or RS) colourings in ascending canonical order.
Enumeration enumerate_pseudo_rs(const SymmetricGraph& g, const EnumerateOptions& options = {});

/// Number of candidate orbit assignments, saturating at UINT64_MAX.
std::uint64_t candidate_count(const SymmetricGraph& g);

// ---------------------------------------------------------------- Cartesian

struct CartesianResult {
    bool ok = false;
    std::optional<std::pair<VertexIndex, VertexIndex>> witness;
    explicit operator bool() const { return ok; }
};

CartesianResult is_cartesian(const SymmetricGraph& g, const ThreeColouring& delta);

// ---------------------------------------------------------------- lifting

struct LiftedColouring {
    GluedGraph glued;
    ThreeColouring colouring;
    /// True when the input had f blue and was swapped first.
    bool swapped = false;
};

LiftedColouring lift_nac_to_pseudo_rs(const Graph& g, const TwoColouring& nac, EdgeIndex f);

// ---------------------------------------------------------------- text form

/// One `u-v: colour` line per edge in edge order.
std::string format_colouring(const Graph& g, const std::vector<Colour>& colour);
ThreeColouring parse_colouring(const Graph& g, std::string_view text);

} // namespace symflex
