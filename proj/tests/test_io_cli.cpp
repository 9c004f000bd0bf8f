#include "fracwave/config.hpp"
#include "fracwave/groundstate.hpp"
#include "fracwave/io.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <fstream>

using namespace fracwave;
using namespace fracwave::testutil;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("fracwave_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

} // namespace

TEST_CASE("field snapshot round trip") {
    TempDir tmp;
    GridSpec g(2, 32, 12.5);
    std::mt19937_64 rng(41);
    Field u = random_decaying_field(g, rng, 2.0, true);

    const fs::path p = tmp.path / "u.frw";
    save_field(u, p);
    Field v = load_field(p);
    CHECK(v.grid == u.grid);
    REQUIRE(v.size() == u.size());
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(v.values[i] == u.values[i]);
}

TEST_CASE("field snapshot rejects corrupt input") {
    TempDir tmp;
    const fs::path bad = tmp.path / "bad.frw";
    {
        std::ofstream os(bad, std::ios::binary);
        os << "NOPE and then some bytes";
    }
    CHECK_THROWS_AS(load_field(bad), std::runtime_error);

    GridSpec g(1, 32, 10.0);
    const fs::path trunc = tmp.path / "trunc.frw";
    save_field(Field(g), trunc);
    fs::resize_file(trunc, fs::file_size(trunc) / 2);
    CHECK_THROWS_AS(load_field(trunc), std::runtime_error);

    CHECK_THROWS_AS(load_field(tmp.path / "missing.frw"), std::runtime_error);
}

TEST_CASE("17-digit text round trips doubles") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> d(-1e6, 1e6);
    for (int i = 0; i < 100; ++i) {
        const double x = d(rng) * std::pow(10.0, int(i % 19) - 9);
        CHECK(std::stod(fmt17(x)) == x);
    }
    CHECK(std::stod(fmt17(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("content hash") {
    TempDir tmp;
    const fs::path a = tmp.path / "a", b = tmp.path / "b", c = tmp.path / "c";
    std::ofstream(a) << "same bytes";
    std::ofstream(b) << "same bytes";
    std::ofstream(c) << "same byteS";
    CHECK(file_hash(a) == file_hash(b));
    CHECK(file_hash(a) != file_hash(c));
}

TEST_CASE("config keys and file parsing") {
    RunConfig cfg;
    apply_key(cfg, "s1", "0.9");
    apply_key(cfg, "tau_list", "1.1,1.3");
    CHECK(cfg.s1 == 0.9);
    REQUIRE(cfg.tau_list.size() == 2);
    CHECK(cfg.tau_list[1] == 1.3);

    CHECK_THROWS_AS(apply_key(cfg, "nonsense", "1"), ConfigError);
    CHECK_THROWS_AS(apply_key(cfg, "p", "three"), ConfigError);

    TempDir tmp;
    const fs::path f = tmp.path / "run.cfg";
    std::ofstream(f) << "# a comment\n"
                        "task = evolve\n"
                        "s1=0.8  # trailing comment\n"
                        "n = 256\n"
                        "\n";
    RunConfig parsed = parse_config_file(f);
    CHECK(parsed.task == "evolve");
    CHECK(parsed.s1 == 0.8);
    CHECK(parsed.n == 256);

    std::ofstream(tmp.path / "bad.cfg") << "task evolve\n";
    CHECK_THROWS_AS(parse_config_file(tmp.path / "bad.cfg"), ConfigError);
    CHECK_THROWS_AS(parse_config_file(tmp.path / "missing.cfg"), ConfigError);
}

TEST_CASE("config validation gates") {
    RunConfig cfg;
    cfg.task = "evolve";
    CHECK_NOTHROW(cfg.validate());

    cfg.task = "dance";
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = RunConfig{};
    cfg.task = "evolve";
    cfg.s2 = 0.9; // >= s1
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

    cfg = RunConfig{};
    cfg.task = "evolve";
    cfg.dim = 3;
    cfg.s1 = 1.0;
    cfg.s2 = 0.6;
    cfg.p = 6.0; // exactly the energy-critical boundary
    cfg.n = 16;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

    cfg = RunConfig{};
    cfg.task = "evolve";
    cfg.dt_floor = cfg.dt0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = RunConfig{};
    cfg.task = "evolve";
    cfg.n = 100; // not a power of two
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("end-to-end run: ground state then classification") {
    TempDir tmp;
    RunConfig gs;
    gs.task = "groundstate";
    gs.dim = 1;
    gs.n = 256;
    gs.box_length = 60.0;
    gs.lambda = 1.0;
    gs.out_dir = (tmp.path / "gs").string();
    REQUIRE(run(gs) == 0);
    CHECK(fs::exists(tmp.path / "gs" / "record.json"));
    CHECK(fs::exists(tmp.path / "gs" / "phi.frw"));
    CHECK(fs::exists(tmp.path / "gs" / "manifest.json"));

    // classify a small datum against a phi produced by the
    // single-operator solver and written through the io layer
    GridSpec g(1, 2048, 120.0);
    GroundStateRecord phi = solve_single_fractional(0.75, 6.0, g);
    const fs::path phi_path = tmp.path / "phi.frw";
    save_field(phi.field, phi_path);
    Field small = gaussian(g, 1.0, 0.01);
    const fs::path init_path = tmp.path / "init.frw";
    save_field(small, init_path);

    RunConfig cl;
    cl.task = "classify";
    cl.dim = 1;
    cl.n = 2048;
    cl.box_length = 120.0;
    cl.init_path = init_path.string();
    cl.phi_path = phi_path.string();
    cl.out_dir = (tmp.path / "cl").string();
    REQUIRE(run(cl) == 0);
    CHECK(fs::exists(tmp.path / "cl" / "verdict.json"));
}

TEST_CASE("identical configs give byte-identical trajectories") {
    TempDir tmp;
    GridSpec g(1, 256, 30.0);
    Field psi0 = gaussian(g, 1.0, 1.1);
    const fs::path init = tmp.path / "init.frw";
    save_field(psi0, init);

    auto make = [&](const std::string& name) {
        RunConfig cfg;
        cfg.task = "evolve";
        cfg.dim = 1;
        cfg.n = 256;
        cfg.box_length = 30.0;
        cfg.horizon = 0.2;
        cfg.init_path = init.string();
        cfg.out_dir = (tmp.path / name).string();
        return cfg;
    };
    REQUIRE(run(make("run1")) == 0);
    REQUIRE(run(make("run2")) == 0);
    CHECK(file_hash(tmp.path / "run1" / "traj.csv") ==
          file_hash(tmp.path / "run2" / "traj.csv"));
}

TEST_CASE("failures land in error.json with nonzero status") {
    TempDir tmp;
    RunConfig cfg;
    cfg.task = "evolve";
    cfg.out_dir = (tmp.path / "err").string();
    // no init field
    CHECK(run(cfg) == 1);
    CHECK(fs::exists(tmp.path / "err" / "error.json"));
}
