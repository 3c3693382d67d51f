#include "aerojam/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <string>

#include <json.hpp>

#include "aerojam/errors.hpp"
#include "aerojam/rng.hpp"

namespace aerojam {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;
constexpr std::uint64_t kJitterSeedSalt = 0x6A69747465724A31ULL;
constexpr std::uint64_t kOptimizerSeedSalt = 0x6F7074696D697A65ULL;
constexpr std::uint64_t kMcSeedSalt = 0x6D6F6E746563726CULL;

std::string qualify(const char* context, const std::string& field) {
    return context && *context ? std::string(context) + "." + field : field;
}

const json& require(const json& obj, const char* field, const char* context = "") {
    const auto it = obj.find(field);
    if (it == obj.end()) throw ParseError("missing field: " + qualify(context, field));
    return *it;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const char* context = "") {
    for (const auto& item : obj.items()) {
        const bool known = std::any_of(allowed.begin(), allowed.end(),
                                       [&](const char* k) { return item.key() == k; });
        if (!known) throw ParseError("unknown field: " + qualify(context, item.key()));
    }
}

double as_number(const json& v, const char* field, const char* context = "") {
    if (!v.is_number()) throw ParseError("field must be a number: " + qualify(context, field));
    return v.get<double>();
}

std::int64_t as_integer(const json& v, const char* field, const char* context = "") {
    if (!v.is_number_integer())
        throw ParseError("field must be an integer: " + qualify(context, field));
    return v.get<std::int64_t>();
}

std::uint64_t as_seed(const json& v, const char* field, const char* context = "") {
    if (!v.is_number_integer())
        throw ParseError("field must be an integer seed: " + qualify(context, field));
    return v.get<std::uint64_t>();
}

Vec3 as_vec3(const json& v, const char* field, const char* context = "") {
    if (!v.is_array() || v.size() != 3)
        throw ParseError("field must be an [x, y, z] array: " + qualify(context, field));
    Vec3 out;
    out.x = as_number(v[0], field, context);
    out.y = as_number(v[1], field, context);
    out.z = as_number(v[2], field, context);
    return out;
}

std::vector<Vec3> as_vec3_list(const json& v, const char* field) {
    if (!v.is_array()) throw ParseError(std::string("field must be an array: ") + field);
    std::vector<Vec3> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(as_vec3(e, field));
    return out;
}

json to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

json to_json(const std::vector<Vec3>& vs) {
    json arr = json::array();
    for (const auto& v : vs) arr.push_back(to_json(v));
    return arr;
}

json scenario_to_json(const Scenario& s) {
    return json{{"schema_version", kSchemaVersion},
                {"user_position", to_json(s.user_position)},
                {"eaves_true", to_json(s.eaves_true)},
                {"eaves_estimated", to_json(s.eaves_estimated)},
                {"area_half_extent", s.area_half_extent},
                {"z_min", s.z_min},
                {"z_max", s.z_max},
                {"power_cap", s.power_cap},
                {"noise_user", s.noise_user},
                {"noise_eaves", s.noise_eaves},
                {"bandwidth", s.bandwidth},
                {"jitter",
                 {{"sigma_info", s.jitter.sigma_info},
                  {"sigma_jam", s.jitter.sigma_jam},
                  {"sample_count", s.jitter.sample_count},
                  {"seed", s.jitter.seed}}},
                {"seeds",
                 {{"scenario", s.seeds.scenario},
                  {"optimizer", s.seeds.optimizer},
                  {"mc", s.seeds.mc}}}};
}

Scenario scenario_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("scenario document must be a JSON object");
    reject_unknown(doc, {"schema_version", "user_position", "eaves_true", "eaves_estimated",
                         "area_half_extent", "z_min", "z_max", "power_cap", "noise_user",
                         "noise_eaves", "bandwidth", "jitter", "seeds"});
    const auto version = as_integer(require(doc, "schema_version"), "schema_version");
    if (version != kSchemaVersion)
        throw ParseError("unsupported schema_version: " + std::to_string(version));

    Scenario s;
    s.user_position = as_vec3(require(doc, "user_position"), "user_position");
    s.eaves_true = as_vec3_list(require(doc, "eaves_true"), "eaves_true");
    s.eaves_estimated = as_vec3_list(require(doc, "eaves_estimated"), "eaves_estimated");
    s.area_half_extent = as_number(require(doc, "area_half_extent"), "area_half_extent");
    s.z_min = as_number(require(doc, "z_min"), "z_min");
    s.z_max = as_number(require(doc, "z_max"), "z_max");
    s.power_cap = as_number(require(doc, "power_cap"), "power_cap");
    s.noise_user = as_number(require(doc, "noise_user"), "noise_user");
    s.noise_eaves = as_number(require(doc, "noise_eaves"), "noise_eaves");
    s.bandwidth = as_number(require(doc, "bandwidth"), "bandwidth");

    const json& jit = require(doc, "jitter");
    if (!jit.is_object()) throw ParseError("field must be an object: jitter");
    reject_unknown(jit, {"sigma_info", "sigma_jam", "sample_count", "seed"}, "jitter");
    s.jitter.sigma_info = as_number(require(jit, "sigma_info", "jitter"), "sigma_info", "jitter");
    s.jitter.sigma_jam = as_number(require(jit, "sigma_jam", "jitter"), "sigma_jam", "jitter");
    s.jitter.sample_count = static_cast<int>(
        as_integer(require(jit, "sample_count", "jitter"), "sample_count", "jitter"));
    s.jitter.seed = as_seed(require(jit, "seed", "jitter"), "seed", "jitter");

    const json& seeds = require(doc, "seeds");
    if (!seeds.is_object()) throw ParseError("field must be an object: seeds");
    reject_unknown(seeds, {"scenario", "optimizer", "mc"}, "seeds");
    s.seeds.scenario = as_seed(require(seeds, "scenario", "seeds"), "scenario", "seeds");
    s.seeds.optimizer = as_seed(require(seeds, "optimizer", "seeds"), "optimizer", "seeds");
    s.seeds.mc = as_seed(require(seeds, "mc", "seeds"), "mc", "seeds");

    s.validate();
    return s;
}

void append_real(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g;", v);
    out += buf;
}

void append_vec3(std::string& out, const Vec3& v) {
    append_real(out, v.x);
    append_real(out, v.y);
    append_real(out, v.z);
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

json load_json_file(const std::filesystem::path& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw ScenarioError(std::string("cannot open ") + what + ": " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON in ") + path.string() + ": " + e.what());
    }
    return doc;
}

void write_json_file(const json& doc, const std::filesystem::path& path, const char* what) {
    std::ofstream out(path);
    if (!out) throw ScenarioError(std::string("cannot write ") + what + ": " + path.string());
    out << doc.dump(2) << '\n';
}

}  // namespace

RadioParams Scenario::make_radio(double p_info, double p_jam) const {
    RadioParams radio;
    radio.power_info = p_info;
    radio.power_jam = p_jam;
    radio.noise.assign(eaves_count() + 1, noise_eaves);
    radio.noise[0] = noise_user;
    radio.bandwidth = bandwidth;
    radio.power_cap = power_cap;
    return radio;
}

std::string Scenario::digest() const {
    std::string canon = "scenario;v1;";
    append_vec3(canon, user_position);
    canon += "true;";
    for (const auto& p : eaves_true) append_vec3(canon, p);
    canon += "est;";
    for (const auto& p : eaves_estimated) append_vec3(canon, p);
    append_real(canon, area_half_extent);
    append_real(canon, z_min);
    append_real(canon, z_max);
    append_real(canon, power_cap);
    append_real(canon, noise_user);
    append_real(canon, noise_eaves);
    append_real(canon, bandwidth);
    append_real(canon, jitter.sigma_info);
    append_real(canon, jitter.sigma_jam);
    canon += std::to_string(jitter.sample_count) + ";";
    canon += std::to_string(jitter.seed) + ";";
    canon += std::to_string(seeds.scenario) + ";";
    canon += std::to_string(seeds.optimizer) + ";";
    canon += std::to_string(seeds.mc) + ";";

    const std::uint64_t h = fnv1a64(canon);
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void Scenario::validate() const {
    auto check = [](bool ok, const char* message) {
        if (!ok) throw ValidationError(message);
    };
    check(user_position.finite(), "user_position must be finite");
    check(user_position.z == 0.0, "user_position must lie on the ground (z = 0)");
    check(!eaves_true.empty(), "at least one eavesdropper required");
    check(eaves_true.size() == eaves_estimated.size(),
          "eaves_true and eaves_estimated must have the same length");
    for (const auto& p : eaves_true) {
        check(p.finite(), "eaves_true positions must be finite");
        check(p.z == 0.0, "eaves_true positions must lie on the ground (z = 0)");
    }
    for (const auto& p : eaves_estimated) {
        check(p.finite(), "eaves_estimated positions must be finite");
        check(p.z == 0.0, "eaves_estimated positions must lie on the ground (z = 0)");
    }
    check(std::isfinite(area_half_extent) && area_half_extent > 0.0,
          "area_half_extent must be > 0");
    check(std::isfinite(z_min) && z_min >= 0.0, "z_min must be >= 0");
    check(std::isfinite(z_max) && z_min < z_max, "z_min must be < z_max");
    check(std::isfinite(power_cap) && power_cap > 0.0, "power_cap must be > 0");
    check(std::isfinite(noise_user) && noise_user > 0.0, "noise_user must be > 0");
    check(std::isfinite(noise_eaves) && noise_eaves > 0.0, "noise_eaves must be > 0");
    check(std::isfinite(bandwidth) && bandwidth > 0.0, "bandwidth must be > 0");
    check(std::isfinite(jitter.sigma_info) && jitter.sigma_info >= 0.0,
          "jitter.sigma_info must be >= 0");
    check(std::isfinite(jitter.sigma_jam) && jitter.sigma_jam >= 0.0,
          "jitter.sigma_jam must be >= 0");
    check(jitter.sample_count >= 1, "jitter.sample_count must be >= 1");
}

Scenario recenter_to_user(const Scenario& scenario) {
    Scenario out = scenario;
    const Vec3 offset = scenario.user_position;
    out.user_position = Vec3::zero();
    for (auto& p : out.eaves_true) p -= offset;
    for (auto& p : out.eaves_estimated) p -= offset;
    return out;
}

Scenario generate_random_scenario(int n_eaves, std::uint64_t seed, double estimate_noise_std) {
    if (n_eaves < 1) throw std::invalid_argument("generate_random_scenario: n_eaves must be >= 1");
    if (!(estimate_noise_std >= 0.0))
        throw std::invalid_argument("generate_random_scenario: estimate_noise_std must be >= 0");

    Scenario s;
    Rng rng(seed);
    const double a = s.area_half_extent;
    s.eaves_true.reserve(static_cast<std::size_t>(n_eaves));
    for (int i = 0; i < n_eaves; ++i)
        s.eaves_true.push_back({rng.uniform(-a, a), rng.uniform(-a, a), 0.0});
    s.eaves_estimated = s.eaves_true;
    if (estimate_noise_std > 0.0) {
        for (auto& p : s.eaves_estimated) {
            p.x += estimate_noise_std * rng.next_gaussian();
            p.y += estimate_noise_std * rng.next_gaussian();
        }
    }
    s.jitter.seed = splitmix64(seed ^ kJitterSeedSalt);
    s.seeds.scenario = seed;
    s.seeds.optimizer = splitmix64(seed ^ kOptimizerSeedSalt);
    s.seeds.mc = splitmix64(seed ^ kMcSeedSalt);
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    return scenario_from_json(load_json_file(path, "scenario file"));
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
    scenario.validate();
    write_json_file(scenario_to_json(scenario), path, "scenario file");
}

RunRecord load_record(const std::filesystem::path& path) {
    const json doc = load_json_file(path, "record file");
    if (!doc.is_object()) throw ParseError("record document must be a JSON object");
    reject_unknown(doc, {"schema_version", "method", "scenario_digest", "expected_secrecy_bps",
                         "std_err_bps", "p_info_watts", "p_jam_watts", "info_position",
                         "info_rpy", "jam_position", "jam_rpy", "line_nu", "iterations",
                         "converged", "trace", "duration_seconds"});
    const auto version = as_integer(require(doc, "schema_version"), "schema_version");
    if (version != kSchemaVersion)
        throw ParseError("unsupported schema_version: " + std::to_string(version));

    auto as_string = [](const json& v, const char* field) {
        if (!v.is_string()) throw ParseError(std::string("field must be a string: ") + field);
        return v.get<std::string>();
    };
    RunRecord r;
    r.method = as_string(require(doc, "method"), "method");
    r.scenario_digest = as_string(require(doc, "scenario_digest"), "scenario_digest");
    r.expected_secrecy_bps = as_number(require(doc, "expected_secrecy_bps"),
                                       "expected_secrecy_bps");
    r.std_err_bps = as_number(require(doc, "std_err_bps"), "std_err_bps");
    r.p_info = as_number(require(doc, "p_info_watts"), "p_info_watts");
    r.p_jam = as_number(require(doc, "p_jam_watts"), "p_jam_watts");
    r.info_position = as_vec3(require(doc, "info_position"), "info_position");
    r.jam_position = as_vec3(require(doc, "jam_position"), "jam_position");
    const Vec3 info_rpy = as_vec3(require(doc, "info_rpy"), "info_rpy");
    const Vec3 jam_rpy = as_vec3(require(doc, "jam_rpy"), "jam_rpy");
    r.info_rpy = {info_rpy.x, info_rpy.y, info_rpy.z};
    r.jam_rpy = {jam_rpy.x, jam_rpy.y, jam_rpy.z};
    const json& nu = require(doc, "line_nu");
    if (!nu.is_null()) r.line_nu = as_number(nu, "line_nu");
    r.iterations = static_cast<int>(as_integer(require(doc, "iterations"), "iterations"));
    const json& conv = require(doc, "converged");
    if (!conv.is_boolean()) throw ParseError("field must be a boolean: converged");
    r.converged = conv.get<bool>();
    const json& trace = require(doc, "trace");
    if (!trace.is_array()) throw ParseError("field must be an array: trace");
    for (const auto& v : trace) r.trace.push_back(as_number(v, "trace"));
    r.duration_seconds = as_number(require(doc, "duration_seconds"), "duration_seconds");
    return r;
}

void save_record(const RunRecord& record, const std::filesystem::path& path) {
    json doc{{"schema_version", kSchemaVersion},
             {"method", record.method},
             {"scenario_digest", record.scenario_digest},
             {"expected_secrecy_bps", record.expected_secrecy_bps},
             {"std_err_bps", record.std_err_bps},
             {"p_info_watts", record.p_info},
             {"p_jam_watts", record.p_jam},
             {"info_position", to_json(record.info_position)},
             {"info_rpy",
              to_json(Vec3{record.info_rpy.roll, record.info_rpy.pitch, record.info_rpy.yaw})},
             {"jam_position", to_json(record.jam_position)},
             {"jam_rpy",
              to_json(Vec3{record.jam_rpy.roll, record.jam_rpy.pitch, record.jam_rpy.yaw})},
             {"line_nu", record.line_nu ? json(*record.line_nu) : json(nullptr)},
             {"iterations", record.iterations},
             {"converged", record.converged},
             {"trace", record.trace},
             {"duration_seconds", record.duration_seconds}};
    write_json_file(doc, path, "record file");
}

}  // namespace aerojam
