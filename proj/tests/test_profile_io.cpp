#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include <qsnorm/profile_io.hpp>

using namespace qsnorm;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "qsnorm_io_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(ProfileIo, CsvRoundTripIsExact) {
    const RadialProfile u{2, {0.0, 0.1, 1.0 / 3.0, 2.0}, {1.0, 0.9, std::exp(-1.0), 1e-300}};
    const fs::path p = scratch("profile.csv");
    io::write_profile_csv(p, u);
    const RadialProfile back = io::read_profile_csv(p, 2);
    EXPECT_EQ(back.nodes, u.nodes);
    EXPECT_EQ(back.values, u.values);
    EXPECT_EQ(slurp(p).substr(0, 8), "r,value\n");
}

TEST(ProfileIo, RejectsMalformedCsv) {
    const fs::path p = scratch("bad.csv");
    std::ofstream(p) << "x,y\n0,1\n";
    EXPECT_THROW(io::read_profile_csv(p, 1), InputError);
    std::ofstream(p) << "r,value\n0,1\n1;2\n";
    EXPECT_THROW(io::read_profile_csv(p, 1), InputError);
    EXPECT_THROW(io::read_profile_csv(scratch("missing.csv"), 1), InputError);
}

TEST(ProfileIo, BranchCsvIsDeterministic) {
    const Params prm{1, 9.0};
    const auto grid = geometric_grid(1e-1, 1e2, 8);
    BranchOptions two;
    two.jobs = 2;
    io::write_branch_csv(scratch("b1.csv"), branch_sweep(prm, grid));
    io::write_branch_csv(scratch("b2.csv"), branch_sweep(prm, grid, two));
    const std::string a = slurp(scratch("b1.csv"));
    EXPECT_EQ(a, slurp(scratch("b2.csv")));
    EXPECT_EQ(a.substr(0, a.find('\n')), io::kBranchHeader);
}

TEST(ProfileIo, JsonWritesNonFiniteAsStrings) {
    ZeroMassResult z;
    z.a0 = kInf;
    const auto j = io::to_json(z);
    EXPECT_EQ(j["a0"], "inf");
    EXPECT_EQ(io::number(std::nan("")), "nan");
    EXPECT_EQ(io::number(-kInf), "-inf");
    EXPECT_EQ(io::number(1.5), 1.5);
    EXPECT_EQ(io::fmt(0.1), "0.10000000000000001");
}
