#include "simps/scenario_io.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "simps/format.hpp"

namespace simps {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, const std::string& key) {
    std::size_t used = 0;
    double x;
    try {
        x = std::stod(v, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(key + ": not a number: '" + v + "'");
    }
    if (used != v.size()) throw std::invalid_argument(key + ": trailing junk in '" + v + "'");
    return x;
}

std::uint64_t parse_u64(const std::string& v, const std::string& key) {
    std::size_t used = 0;
    std::uint64_t x;
    try {
        x = std::stoull(v, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(key + ": not a nonnegative integer: '" + v + "'");
    }
    if (used != v.size()) throw std::invalid_argument(key + ": trailing junk in '" + v + "'");
    return x;
}

bool parse_switch(const std::string& v, const std::string& key) {
    if (v == "on" || v == "true" || v == "1") return true;
    if (v == "off" || v == "false" || v == "0") return false;
    throw std::invalid_argument(key + ": expected on/off, got '" + v + "'");
}

EdgeWeightSpec parse_edge_weight(const std::string& v) {
    if (v == "uniform") return EdgeWeightSpec::uniform();
    if (v.rfind("constant:", 0) == 0)
        return EdgeWeightSpec::constant(parse_double(v.substr(9), "edge_weight"));
    throw std::invalid_argument("edge_weight: expected uniform or constant:<w>, got '" + v + "'");
}

void apply_key(Scenario& sc, const std::string& key, const std::string& value) {
    if (key == "n") {
        sc.population.n = static_cast<std::size_t>(parse_u64(value, key));
    } else if (key == "graph.type") {
        if (value == "scale_free")
            sc.graph.type = GraphSpec::Type::ScaleFree;
        else if (value == "random")
            sc.graph.type = GraphSpec::Type::Random;
        else if (value == "file")
            sc.graph.type = GraphSpec::Type::File;
        else
            throw std::invalid_argument("graph.type: expected scale_free/random/file, got '" +
                                        value + "'");
    } else if (key == "graph.d") {
        sc.graph.avg_degree = parse_double(value, key);
    } else if (key == "graph.file") {
        sc.graph.file = value;
    } else if (key == "s.mean") {
        sc.population.sociability_mean = parse_double(value, key);
    } else if (key == "s.var") {
        sc.population.sociability_variance = parse_double(value, key);
    } else if (key == "t.low") {
        sc.population.tolerance_low = parse_double(value, key);
    } else if (key == "t.high") {
        sc.population.tolerance_high = parse_double(value, key);
    } else if (key == "vmax.mean") {
        sc.population.v_max_mean = parse_double(value, key);
    } else if (key == "vmax.var") {
        sc.population.v_max_variance = parse_double(value, key);
    } else if (key == "amax.mean") {
        sc.population.a_max_mean = parse_double(value, key);
    } else if (key == "amax.var") {
        sc.population.a_max_variance = parse_double(value, key);
    } else if (key == "r_soc") {
        sc.perception.social_radius = parse_double(value, key);
    } else if (key == "tau_r") {
        sc.perception.half_perception_time = parse_double(value, key);
    } else if (key == "tau_r.stagger") {
        sc.stagger_perception = parse_switch(value, key);
    } else if (key == "lambda") {
        sc.perception.distance_fading_exponent = parse_double(value, key);
    } else if (key == "space.kind") {
        if (value == "periodic")
            sc.space_kind = SpaceKind::PeriodicSquare;
        else if (value == "infinite")
            sc.space_kind = SpaceKind::Infinite;
        else
            throw std::invalid_argument("space.kind: expected periodic/infinite, got '" + value +
                                        "'");
    } else if (key == "space.l") {
        sc.space_side = parse_double(value, key);
    } else if (key == "dt") {
        sc.time.dt = parse_double(value, key);
    } else if (key == "t_max") {
        sc.time.t_max = parse_double(value, key);
    } else if (key == "contact.range") {
        sc.contact.range = parse_double(value, key);
    } else if (key == "contact.debounce") {
        sc.contact.debounce = static_cast<int>(parse_u64(value, key));
    } else if (key == "seed") {
        sc.seed = parse_u64(value, key);
    } else if (key == "edge_weight") {
        sc.graph.weights = parse_edge_weight(value);
    } else {
        throw std::invalid_argument("unknown key '" + key + "'");
    }
}

}  // namespace

Scenario parse_scenario(std::istream& in) {
    Scenario sc;
    std::set<std::string> seen;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;

        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("scenario line " + std::to_string(line_no) +
                                        ": expected key = value");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("scenario line " + std::to_string(line_no) +
                                        ": empty key");
        if (!seen.insert(key).second)
            throw std::invalid_argument("scenario line " + std::to_string(line_no) +
                                        ": duplicate key '" + key + "'");
        try {
            apply_key(sc, key, value);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("scenario line " + std::to_string(line_no) + ": " +
                                        e.what());
        }
    }
    sc.validate();
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    try {
        return parse_scenario(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_scenario(const Scenario& sc, std::ostream& out) {
    out << "n = " << sc.population.n << "\n";
    switch (sc.graph.type) {
        case GraphSpec::Type::ScaleFree: out << "graph.type = scale_free\n"; break;
        case GraphSpec::Type::Random: out << "graph.type = random\n"; break;
        case GraphSpec::Type::File: out << "graph.type = file\n"; break;
    }
    out << "graph.d = " << fmt_g(sc.graph.avg_degree) << "\n";
    if (!sc.graph.file.empty()) out << "graph.file = " << sc.graph.file << "\n";
    if (sc.graph.weights.kind == EdgeWeightSpec::Kind::Uniform)
        out << "edge_weight = uniform\n";
    else
        out << "edge_weight = constant:" << fmt_g(sc.graph.weights.value) << "\n";
    out << "s.mean = " << fmt_g(sc.population.sociability_mean) << "\n";
    out << "s.var = " << fmt_g(sc.population.sociability_variance) << "\n";
    out << "t.low = " << fmt_g(sc.population.tolerance_low) << "\n";
    out << "t.high = " << fmt_g(sc.population.tolerance_high) << "\n";
    out << "vmax.mean = " << fmt_g(sc.population.v_max_mean) << "\n";
    out << "vmax.var = " << fmt_g(sc.population.v_max_variance) << "\n";
    out << "amax.mean = " << fmt_g(sc.population.a_max_mean) << "\n";
    out << "amax.var = " << fmt_g(sc.population.a_max_variance) << "\n";
    out << "r_soc = " << fmt_g(sc.perception.social_radius) << "\n";
    out << "tau_r = " << fmt_g(sc.perception.half_perception_time) << "\n";
    out << "tau_r.stagger = " << (sc.stagger_perception ? "on" : "off") << "\n";
    out << "lambda = " << fmt_g(sc.perception.distance_fading_exponent) << "\n";
    out << "space.kind = "
        << (sc.space_kind == SpaceKind::PeriodicSquare ? "periodic" : "infinite") << "\n";
    out << "space.l = " << fmt_g(sc.space_side) << "\n";
    out << "dt = " << fmt_g(sc.time.dt) << "\n";
    out << "t_max = " << fmt_g(sc.time.t_max) << "\n";
    out << "contact.range = " << fmt_g(sc.contact.range) << "\n";
    out << "contact.debounce = " << sc.contact.debounce << "\n";
    out << "seed = " << sc.seed << "\n";
}

}  // namespace simps
