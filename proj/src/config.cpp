#include "fracwave/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fracwave {

namespace {

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    return out;
}

std::string join(const std::vector<double>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

} // namespace

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    try {
        if (key == "task") cfg.task = value;
        else if (key == "s1") cfg.s1 = std::stod(value);
        else if (key == "s2") cfg.s2 = std::stod(value);
        else if (key == "p") cfg.p = std::stod(value);
        else if (key == "dim") cfg.dim = std::stoi(value);
        else if (key == "n") cfg.n = std::stoi(value);
        else if (key == "box_length") cfg.box_length = std::stod(value);
        else if (key == "c") cfg.c = std::stod(value);
        else if (key == "lambda") cfg.lambda = std::stod(value);
        else if (key == "horizon") cfg.horizon = std::stod(value);
        else if (key == "dt0") cfg.dt0 = std::stod(value);
        else if (key == "adapt") cfg.adapt = (value == "true" || value == "1");
        else if (key == "dt_floor") cfg.dt_floor = std::stod(value);
        else if (key == "blowup_gradient_factor") cfg.blowup_gradient_factor = std::stod(value);
        else if (key == "monitor_every") cfg.monitor_every = std::stoi(value);
        else if (key == "tau_list") cfg.tau_list = parse_list(value);
        else if (key == "c_list") cfg.c_list = parse_list(value);
        else if (key == "init") cfg.init_path = value;
        else if (key == "phi") cfg.phi_path = value;
        else if (key == "field_out") cfg.field_out = value;
        else if (key == "out_dir") cfg.out_dir = value;
        else if (key == "snapshots_dir") cfg.snapshots_dir = value;
        else if (key == "seed") cfg.seed = std::stoul(value);
        else throw ConfigError("unknown config key: " + key);
    } catch (const std::invalid_argument&) {
        throw ConfigError("bad value for key '" + key + "': " + value);
    } catch (const std::out_of_range&) {
        throw ConfigError("value out of range for key '" + key + "': " + value);
    }
}

RunConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file: " + path.string());
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                              ": expected key = value");
        auto strip = [](std::string s) {
            const auto b2 = s.find_first_not_of(" \t");
            const auto e2 = s.find_last_not_of(" \t");
            return b2 == std::string::npos ? std::string() : s.substr(b2, e2 - b2 + 1);
        };
        apply_key(cfg, strip(line.substr(0, eq)), strip(line.substr(eq + 1)));
    }
    return cfg;
}

void RunConfig::validate() const {
    static const std::vector<std::string> kTasks = {
        "groundstate", "evolve", "classify", "gamma-sweep", "instability", "validate"};
    if (std::find(kTasks.begin(), kTasks.end(), task) == kTasks.end())
        throw ConfigError("unknown task: '" + task + "'");
    (void)grid();  // grid invariants
    (void)model(); // exponent gates, including the strict p < 2N/(N-2 s1) boundary
    if (dt0 <= 0.0 || dt_floor <= 0.0 || dt_floor >= dt0)
        throw ConfigError("need 0 < dt_floor < dt0");
}

std::map<std::string, std::string> RunConfig::echo() const {
    auto num = [](double x) {
        std::ostringstream os;
        os.precision(17);
        os << x;
        return os.str();
    };
    std::map<std::string, std::string> m;
    m["task"] = task;
    m["s1"] = num(s1);
    m["s2"] = num(s2);
    m["p"] = num(p);
    m["dim"] = std::to_string(dim);
    m["n"] = std::to_string(n);
    m["box_length"] = num(box_length);
    m["c"] = num(c);
    m["lambda"] = num(lambda);
    m["horizon"] = num(horizon);
    m["dt0"] = num(dt0);
    m["adapt"] = adapt ? "true" : "false";
    m["dt_floor"] = num(dt_floor);
    m["blowup_gradient_factor"] = num(blowup_gradient_factor);
    m["monitor_every"] = std::to_string(monitor_every);
    m["tau_list"] = join(tau_list);
    m["c_list"] = join(c_list);
    m["init"] = init_path;
    m["phi"] = phi_path;
    m["field_out"] = field_out;
    m["out_dir"] = out_dir;
    m["snapshots_dir"] = snapshots_dir;
    m["seed"] = std::to_string(seed);
    return m;
}

} // namespace fracwave
