#include <gtest/gtest.h>

#include <json.hpp>

#include "curves.hpp"
#include "layerstab/error.hpp"
#include "map.hpp"
#include "params.hpp"
#include "spectrum.hpp"

using namespace layerstab;
using namespace layerstab::cli;

TEST(Cli, ParamFile) {
    const auto p = ParamFile::parse("# comment\n kind = monolayer \njmax=50\n\nL=2.5\n");
    EXPECT_EQ(*p.get("kind"), "monolayer");
    EXPECT_EQ(*p.integer("jmax"), 50);
    EXPECT_DOUBLE_EQ(*p.number("L"), 2.5);
    EXPECT_FALSE(p.get("grid").has_value());
    EXPECT_THROW(ParamFile::parse("a=1\na=2\n"), ValidationError);
    EXPECT_THROW(ParamFile::parse("no equals sign\n"), ValidationError);
    EXPECT_THROW(ParamFile::parse("jmax=ten\n").integer("jmax"), ValidationError);
}

TEST(Cli, MapDeterministicAcrossThreads) {
    SweepConfig c;
    c.nx = 12;
    c.ny = 9;
    c.threads = 1;
    const auto a = map_csv(compute_map(c));
    c.threads = 3;
    const auto b = map_csv(compute_map(c));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.substr(0, a.find('\n')), "x,y,stable,worst_mode,min_eig,margin");
}

TEST(Cli, MapVerdictMatchesThreshold) {
    SweepConfig c;
    c.nx = 5;
    c.ny = 11;
    const auto r = compute_map(c);
    for (int i = 0; i < c.nx; ++i) {
        for (int k = 0; k < c.ny; ++k) {
            const auto& cell = r.cells[i * c.ny + k];
            if (std::abs(cell.margin) > 1e-6) EXPECT_EQ(cell.stable, cell.y > r.threshold[i]);
        }
    }
}

TEST(Cli, MapValidation) {
    SweepConfig c;
    c.nx = 0;
    EXPECT_THROW(c.validate(), ValidationError);
    c.nx = 4;
    c.x_min = 0.5;
    c.x_max = 0.2;
    EXPECT_THROW(c.validate(), ValidationError);
}

TEST(Cli, CurvesAggregateDominatesFamily) {
    CurvesConfig c;
    c.points = 50;
    c.kmax = 5;
    const auto t = compute_curves(c);
    ASSERT_EQ(t.family.size(), 5u);
    for (size_t i = 0; i < t.ell.size(); ++i) {
        for (const auto& f : t.family) EXPECT_GE(t.aggregate[i] + 1e-14, f[i]);
    }
}

TEST(Cli, SpectrumJsonRoundTrip) {
    PerturbationSpectrum s(4, 2, 3.0);
    s.set_a(0, 0, 0.125);
    s.set_a(2, 1, -0.3);
    s.set_b(3, 2, 0.1 / 3.0);
    const auto back = spectrum_from_json(spectrum_to_json(s));
    EXPECT_EQ(back.interfaces(), 4);
    EXPECT_EQ(back.order(), 2);
    EXPECT_EQ(back.length(), 3.0);
    EXPECT_EQ(back.a(2, 1), -0.3);
    EXPECT_EQ(back.b(3, 2), 0.1 / 3.0);
    EXPECT_THROW(spectrum_from_json("{\"L\": 1}"), ValidationError);
}

TEST(Cli, SpectrumReport) {
    SpectrumConfig c;
    c.J = 3;
    const auto r = compute_spectrum(c);
    ASSERT_EQ(r.modes.size(), 4u);
    EXPECT_EQ(r.modes[1].eigenvalues.size(), 4u);
    const auto j = nlohmann::json::parse(spectrum_json(r));
    EXPECT_EQ(j["modes"].size(), 4u);
}
