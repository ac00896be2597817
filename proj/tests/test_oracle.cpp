#include "oracles.hpp"

#include "symflex/colourings.hpp"

#include <gtest/gtest.h>

using namespace symflex;

TEST(Exhaustive, GraphFamilyIsLarge)
{
    const auto graphs = oracle::small_symmetric_graphs(6, 8);
    EXPECT_GT(graphs.size(), 1000U);
    for (const SymmetricGraph& g : graphs) {
        EXPECT_LE(g.vertex_count(), 6U);
        EXPECT_LE(g.edge_count(), 8U);
        EXPECT_TRUE(is_connected(g.graph()));
    }
}

TEST(Exhaustive, PrunedEnumerationMatchesDefinitionFilter)
{
    for (const SymmetricGraph& g : oracle::small_symmetric_graphs(6, 8)) {
        const std::vector<std::vector<Colour>> expected = oracle::enumerate_pseudo_rs(g);
        EnumerateOptions o;
        o.prune = true;
        std::vector<std::vector<Colour>> got;
        for (const ThreeColouring& d : enumerate_pseudo_rs(g, o).colourings) {
            got.push_back(d.colour);
        }
        ASSERT_EQ(got, expected) << format_colouring(g.graph(), std::vector<Colour>(g.edge_count(), Colour::Gold));
    }
}

TEST(Exhaustive, ComponentNacCheckMatchesCycleScan)
{
    for (const SymmetricGraph& g : oracle::small_symmetric_graphs(6, 8)) {
        const auto cycles = oracle::all_cycles(g.graph());
        const std::size_t m = g.edge_count();
        std::size_t nac = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t { 1 } << m); ++mask) {
            std::vector<Colour> c(m);
            for (std::size_t e = 0; e < m; ++e) {
                c[e] = ((mask >> e) & 1U) != 0U ? Colour::Blue : Colour::Red;
            }
            const bool expected = oracle::is_nac(cycles, c);
            ASSERT_EQ(is_nac_fast(g.graph(), c), expected);
            ASSERT_EQ(is_nac(g.graph(), TwoColouring { c }).ok, expected);
            nac += expected ? 1 : 0;
        }
        EXPECT_EQ(enumerate_nac(g.graph()).size(), nac);
    }
}
