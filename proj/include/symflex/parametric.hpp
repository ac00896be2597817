#pragma once

#include "symflex/geometry.hpp"
#include "symflex/graph.hpp"

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace symflex {

inline constexpr double two_pi = 2.0 * M_PI;

/// s(t) = -beta + arccos(-(1 + 2 cos(t + alpha)) / 2); the mirrored branch
/// takes the other sign of the arccos.
struct Reparametrisation {
    double alpha = 0.0;
    double beta = 0.0;
    bool mirrored = false;

    double operator()(double t) const;
};

/**
 * Motion of a reflection-symmetric framework in closed form:
 *
 *   p_t(u) = R(t) A(u) + R(-t) tau A'(u) + Z(u)
 *            [+ R(s) B(u) + R(-s) tau B'(u),  s = s(t)]
 *
 * with R the rotation matrix and tau the mirror in the y-axis. Coefficient
 * vectors are indexed by the vertex indices of the graph the flex belongs to.
 */
struct ParametricFlex {
    std::string kind;
    std::vector<Vec2> a;
    std::vector<Vec2> a_mirror;
    std::vector<Vec2> z;
    /// Empty unless the flex has a second rotation channel.
    std::vector<Vec2> b;
    std::vector<Vec2> b_mirror;
    double t_min = 0.0;
    double t_max = two_pi;
    std::optional<Reparametrisation> reparametrisation;

    std::size_t vertex_count() const { return a.size(); }
    bool has_second_channel() const { return !b.empty(); }
    std::optional<double> s_at(double t) const;

    Vec2 position(VertexIndex v, double t) const;
    std::vector<Vec2> realisation(double t) const;
};

struct Tolerances {
    double length = 1e-9;
    double symmetry = 1e-12;
    double min_gap = 1e-8;
    double angle = 1e-3;
};

struct FlexReport {
    /// Max over edges of (max - min) / mean edge length over the samples.
    double length_variation = 0.0;
    /// Max over samples and vertices of |p(sigma u) - tau p(u)|.
    double symmetry_residual = 0.0;
    double min_edge_gap = std::numeric_limits<double>::infinity();
    /// Max over edges of the range of the angle between the edge and its
    /// mirror image.
    double nontriviality = 0.0;
    std::size_t samples = 0;
    Tolerances tolerances;

    bool lengths_ok() const { return length_variation <= tolerances.length; }
    bool symmetric() const { return symmetry_residual <= tolerances.symmetry; }
    bool gaps_ok() const { return min_edge_gap >= tolerances.min_gap; }
    bool nontrivial() const { return nontriviality >= tolerances.angle; }
    bool passed() const { return lengths_ok() && symmetric() && gaps_ok() && nontrivial(); }
};

/// Throws InvalidArgument for fewer than two samples or a flex sized for a
/// different graph.
FlexReport verify_flex(const SymmetricGraph& g, const ParametricFlex& flex, std::size_t samples = 200,
    const Tolerances& tolerances = {});

struct FlexSample {
    double t = 0.0;
    std::optional<double> s;
    std::vector<Vec2> p;
};

/// n samples at uniform t over the domain, both ends included; n = 1 gives
/// the start of the domain. Throws InvalidArgument for n = 0.
std::vector<FlexSample> sample_flex(const ParametricFlex& flex, std::size_t n);

/// Uniform grid of n values over [lo, hi], both ends included.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

} // namespace symflex
