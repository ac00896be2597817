#include "symflex/parametric.hpp"

#include <algorithm>

namespace symflex {

namespace {

    std::size_t at(int i) { return static_cast<std::size_t>(i); }

    // Rotation by the angle with cosine c and sine s. Written so that
    // mirror(rot(c, s, v)) and rot(c, -s, mirror(v)) agree bit for bit.
    Vec2 rot(double c, double s, Vec2 v) { return { c * v.x - s * v.y, s * v.x + c * v.y }; }

    Vec2 channel(double angle, Vec2 direct, Vec2 mirrored)
    {
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        return rot(c, s, direct) + rot(c, -s, mirror(mirrored));
    }

} // namespace

double Reparametrisation::operator()(double t) const
{
    const double arg = std::clamp(-(1.0 + 2.0 * std::cos(t + alpha)) / 2.0, -1.0, 1.0);
    const double branch = std::acos(arg);
    return -beta + (mirrored ? -branch : branch);
}

std::optional<double> ParametricFlex::s_at(double t) const
{
    if (!reparametrisation) {
        return std::nullopt;
    }
    return (*reparametrisation)(t);
}

Vec2 ParametricFlex::position(VertexIndex v, double t) const
{
    const std::size_t i = at(v);
    Vec2 p = channel(t, a[i], a_mirror[i]);
    if (has_second_channel()) {
        p += channel(s_at(t).value_or(0.0), b[i], b_mirror[i]);
    }
    return p + z[i];
}

std::vector<Vec2> ParametricFlex::realisation(double t) const
{
    std::vector<Vec2> out(vertex_count());
    for (std::size_t v = 0; v < out.size(); ++v) {
        out[v] = position(static_cast<VertexIndex>(v), t);
    }
    return out;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n)
{
    std::vector<double> out(n, lo);
    for (std::size_t i = 1; i < n; ++i) {
        out[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

FlexReport verify_flex(const SymmetricGraph& g, const ParametricFlex& flex, std::size_t samples,
    const Tolerances& tolerances)
{
    if (samples < 2) {
        throw Error(ErrorCode::InvalidArgument, "verify_flex needs at least two samples");
    }
    if (flex.vertex_count() != g.vertex_count()) {
        throw Error(ErrorCode::InvalidArgument, "flex has " + std::to_string(flex.vertex_count())
                + " vertices, graph has " + std::to_string(g.vertex_count()));
    }
    const Graph& graph = g.graph();
    const std::size_t m = g.edge_count();
    FlexReport report;
    report.samples = samples;
    report.tolerances = tolerances;

    std::vector<double> lo(m, std::numeric_limits<double>::infinity());
    std::vector<double> hi(m, 0.0);
    std::vector<double> sum(m, 0.0);
    std::vector<double> angle_lo(m, 0.0);
    std::vector<double> angle_hi(m, 0.0);
    std::vector<double> angle_prev(m, 0.0);
    std::vector<double> angle_acc(m, 0.0);
    std::vector<bool> angle_seen(m, false);

    for (const double t : uniform_grid(flex.t_min, flex.t_max, samples)) {
        const std::vector<Vec2> p = flex.realisation(t);
        for (std::size_t v = 0; v < p.size(); ++v) {
            const Vec2 d = p[at(g.sigma(static_cast<VertexIndex>(v)))] - mirror(p[v]);
            report.symmetry_residual = std::max(report.symmetry_residual, norm(d));
        }
        for (std::size_t e = 0; e < m; ++e) {
            const Edge& ed = graph.edge(static_cast<EdgeIndex>(e));
            const Vec2 d = p[at(ed.v)] - p[at(ed.u)];
            const double len = norm(d);
            lo[e] = std::min(lo[e], len);
            hi[e] = std::max(hi[e], len);
            sum[e] += len;
            report.min_edge_gap = std::min(report.min_edge_gap, len);

            const Vec2 dm = p[at(g.sigma(ed.v))] - p[at(g.sigma(ed.u))];
            if (len == 0.0 || norm(dm) == 0.0) {
                continue;
            }
            const double angle = signed_angle(d, dm);
            if (angle_seen[e]) {
                angle_acc[e] += wrap_angle(angle - angle_prev[e]);
                angle_lo[e] = std::min(angle_lo[e], angle_acc[e]);
                angle_hi[e] = std::max(angle_hi[e], angle_acc[e]);
            }
            angle_prev[e] = angle;
            angle_seen[e] = true;
        }
    }
    for (std::size_t e = 0; e < m; ++e) {
        const double mean = sum[e] / static_cast<double>(samples);
        const double variation = mean > 0.0 ? (hi[e] - lo[e]) / mean : std::numeric_limits<double>::infinity();
        report.length_variation = std::max(report.length_variation, variation);
        report.nontriviality = std::max(report.nontriviality, angle_hi[e] - angle_lo[e]);
    }
    return report;
}

std::vector<FlexSample> sample_flex(const ParametricFlex& flex, std::size_t n)
{
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "sample count must be positive");
    }
    std::vector<FlexSample> out;
    for (const double t : uniform_grid(flex.t_min, flex.t_max, n)) {
        out.push_back({ t, flex.s_at(t), flex.realisation(t) });
    }
    return out;
}

} // namespace symflex
