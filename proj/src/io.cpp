#include "sdc/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "json.hpp"

namespace sdc {

namespace {

using json = nlohmann::json;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Entry {
    std::string key, value;
    std::size_t line, column;  // column of the value, 1-based
};

[[noreturn]] void fail(const std::string& source, std::size_t line, std::size_t column, const std::string& what) {
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what, column);
}

std::vector<Entry> read_entries(std::istream& in, const std::string& source) {
    std::vector<Entry> out;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(source, lineno, 1, "expected key=value");
        Entry e;
        e.key = trim(line.substr(0, eq));
        e.value = trim(line.substr(eq + 1));
        e.line = lineno;
        e.column = line.find_first_not_of(" \t", eq + 1);
        e.column = (e.column == std::string::npos ? eq + 1 : e.column) + 1;
        if (e.key.empty()) fail(source, lineno, 1, "empty key");
        out.push_back(std::move(e));
    }
    return out;
}

// Runs `fn`, re-throwing library parse/domain errors with the entry position.
template <class Fn>
auto at(const std::string& source, const Entry& e, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ParseError& err) {
        fail(source, e.line, e.column + err.position(), std::string(err.what()));
    } catch (const std::invalid_argument&) {
        fail(source, e.line, e.column, "invalid number '" + e.value + "' for " + e.key);
    } catch (const std::out_of_range&) {
        fail(source, e.line, e.column, "number out of range for " + e.key);
    } catch (const DomainError& err) {
        fail(source, e.line, e.column, err.what());
    }
}

std::uint64_t to_u64(const std::string& s) {
    // stoull would accept and wrap a leading '-'
    if (s.empty() || s[0] < '0' || s[0] > '9') throw std::invalid_argument(s);
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
}

int row_index(const std::string& key) {
    if (key == "rA") return 0;
    if (key == "rB") return 1;
    if (key == "rC") return 2;
    if (key == "rD") return 3;
    return -1;
}

const char* kRowKeys[] = {"rA", "rB", "rC", "rD"};

}  // namespace

CirculantQuad SpecFile::quad() const {
    if (!construction) throw DomainError("spec '" + label + "' has an explicit generator, not a circulant quad");
    CirculantQuad q;
    q.ring = ring;
    q.n = n;
    q.lambda = lambda;
    q.a = rows[0];
    q.b = rows[1];
    q.c = rows[2];
    q.d = rows[3];
    q.validate();
    return q;
}

LinearCode SpecFile::base_code() const {
    if (!construction) return LinearCode(RingMatrix::from_rows(generator));
    return LinearCode(build(*construction, quad()));
}

std::optional<std::string> SpecFile::expected(const std::string& key) const {
    for (const auto& [k, v] : expect)
        if (k == key) return v;
    return std::nullopt;
}

SpecFile SpecFile::parse(std::istream& in, const std::string& source) {
    const auto entries = read_entries(in, source);
    SpecFile spec;
    // the ring is needed before any symbol can be decoded
    bool have_ring = false;
    for (const auto& e : entries)
        if (e.key == "ring") {
            spec.ring = at(source, e, [&] { return parse_ring(e.value); });
            have_ring = true;
        }
    if (!have_ring) fail(source, 1, 1, "missing ring=");
    spec.lambda = {spec.ring, 1};
    bool have_construction = false, have_n = false;
    std::array<bool, 4> have_row{};

    for (const auto& e : entries) {
        if (e.key == "ring") continue;
        if (e.key == "label") {
            spec.label = e.value;
        } else if (e.key == "construction") {
            have_construction = true;
            if (e.value == "explicit")
                spec.construction.reset();
            else
                spec.construction = at(source, e, [&] { return parse_construction(e.value); });
        } else if (e.key == "n") {
            spec.n = at(source, e, [&] { return static_cast<std::size_t>(to_u64(e.value)); });
            have_n = true;
        } else if (e.key == "lambda") {
            spec.lambda = at(source, e, [&] { return RingElement::parse(e.value, spec.ring); });
        } else if (int r = row_index(e.key); r >= 0) {
            spec.rows[static_cast<std::size_t>(r)] = at(source, e, [&] { return parse_symbols(e.value, spec.ring); });
            have_row[static_cast<std::size_t>(r)] = true;
        } else if (e.key == "extension") {
            std::istringstream parts(e.value);
            std::string c, x, extra;
            if (!(parts >> c >> x) || (parts >> extra)) fail(source, e.line, e.column, "extension needs 'c X'");
            const auto c_elem = at(source, e, [&] { return RingElement::parse(c, spec.ring); });
            auto x_vec = at(source, e, [&] { return parse_symbols(x, spec.ring); });
            spec.extensions.push_back({c_elem, std::move(x_vec)});
        } else if (e.key == "row") {
            spec.generator.push_back(at(source, e, [&] { return parse_symbols(e.value, spec.ring); }));
        } else if (e.key.rfind("expect.", 0) == 0) {
            spec.expect.emplace_back(e.key.substr(7), e.value);
        } else {
            fail(source, e.line, 1, "unknown key '" + e.key + "'");
        }
    }
    if (!have_construction) fail(source, 1, 1, "missing construction=");
    if (spec.construction) {
        if (!have_n) fail(source, 1, 1, "missing n=");
        for (std::size_t r = 0; r < 4; ++r)
            if (!have_row[r]) fail(source, 1, 1, std::string("missing ") + kRowKeys[r] + "=");
        try {
            spec.quad();
        } catch (const DomainError& err) {
            fail(source, 1, 1, err.what());
        }
    } else if (spec.generator.empty()) {
        fail(source, 1, 1, "explicit construction needs row= lines");
    }
    return spec;
}

SpecFile SpecFile::parse(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    return parse(in, source);
}

SpecFile SpecFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file '" + path + "'");
    return parse(in, path);
}

std::string SpecFile::format() const {
    std::ostringstream out;
    if (!label.empty()) out << "label=" << label << "\n";
    out << "ring=" << ring_name(ring) << "\n";
    out << "construction=" << (construction ? std::string(construction_name(*construction)) : "explicit") << "\n";
    if (construction) {
        out << "n=" << n << "\n";
        out << "lambda=" << lambda.str() << "\n";
        for (std::size_t r = 0; r < 4; ++r) out << kRowKeys[r] << "=" << rows[r].str() << "\n";
    }
    for (const auto& g : generator) out << "row=" << g.str() << "\n";
    for (const auto& ext : extensions) out << "extension=" << ext.c.str() << " " << ext.x.str() << "\n";
    for (const auto& [k, v] : expect) out << "expect." << k << "=" << v << "\n";
    return out.str();
}

std::optional<TargetFilter> parse_target(const std::string& text) {
    std::istringstream parts(text);
    std::string family;
    if (!(parts >> family)) return std::nullopt;
    TargetFilter t;
    t.family = parse_family(family);
    std::string item;
    while (parts >> item) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("target item '" + item + "' must be beta=.. or gamma=..", 0);
        const auto key = item.substr(0, eq);
        const auto value = std::stoll(item.substr(eq + 1));
        if (key == "beta")
            t.beta = value;
        else if (key == "gamma")
            t.gamma = value;
        else
            throw ParseError("unknown target key '" + key + "'", 0);
    }
    return t;
}

SearchJob parse_job(std::istream& in, const std::string& source) {
    const auto entries = read_entries(in, source);
    SearchJob job;
    bool have_ring = false;
    for (const auto& e : entries)
        if (e.key == "ring") {
            job.ring = at(source, e, [&] { return parse_ring(e.value); });
            have_ring = true;
        }
    if (!have_ring) fail(source, 1, 1, "missing ring=");
    for (const auto& e : entries) {
        if (e.key == "ring" || e.key == "label") continue;
        if (e.key == "construction") {
            job.construction = at(source, e, [&] { return parse_construction(e.value); });
        } else if (e.key == "n") {
            job.n = at(source, e, [&] { return static_cast<std::size_t>(to_u64(e.value)); });
        } else if (e.key == "lambda") {
            job.lambdas.clear();
            std::istringstream parts(e.value);
            std::string item;
            while (std::getline(parts, item, ','))
                job.lambdas.push_back(at(source, e, [&] { return RingElement::parse(trim(item), job.ring); }));
        } else if (e.key == "strategy") {
            job.strategy = at(source, e, [&] { return parse_strategy(e.value); });
        } else if (e.key == "seed") {
            job.seed = at(source, e, [&] { return to_u64(e.value); });
        } else if (e.key == "budget") {
            job.budget = at(source, e, [&] { return to_u64(e.value); });
        } else if (e.key == "min_d") {
            job.min_distance = at(source, e, [&] { return static_cast<std::size_t>(to_u64(e.value)); });
        } else if (e.key == "max_exhaustive") {
            job.max_exhaustive = at(source, e, [&] { return to_u64(e.value); });
        } else if (e.key == "max_hits") {
            job.max_hits = at(source, e, [&] { return to_u64(e.value); });
        } else if (e.key == "count_through") {
            job.count_through = at(source, e, [&] { return static_cast<std::size_t>(to_u64(e.value)); });
        } else if (e.key == "target") {
            job.target = at(source, e, [&] { return parse_target(e.value); });
        } else if (e.key == "rC_partial") {
            job.partial_c = at(source, e, [&] { return parse_symbols(e.value, job.ring); });
        } else if (int r = row_index(e.key); r >= 0) {
            job.fixed[static_cast<std::size_t>(r)] = at(source, e, [&] { return parse_symbols(e.value, job.ring); });
        } else {
            fail(source, e.line, 1, "unknown key '" + e.key + "'");
        }
    }
    if (job.lambdas.empty()) job.lambdas.push_back({job.ring, 1});
    return job;
}

SearchJob load_job(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open job file '" + path + "'");
    return parse_job(in, path);
}

HitRecord HitRecord::from_hit(const SearchHit& hit, const std::string& label) {
    HitRecord r;
    r.label = label;
    if (hit.quad) {
        r.ring = ring_name(hit.quad->ring);
        r.construction = construction_name(hit.construction);
        r.n = hit.quad->n;
        r.lambda = hit.quad->lambda.str();
        r.rows = {hit.quad->a.str(), hit.quad->b.str(), hit.quad->c.str(), hit.quad->d.str()};
    }
    if (hit.extension) {
        if (r.ring.empty()) r.ring = ring_name(hit.extension->c.ring);
        r.extension_c = hit.extension->c.str();
        r.extension_x = hit.extension->x.str();
    }
    r.length = hit.report.length;
    r.dimension = hit.report.dimension;
    r.d = hit.report.min_distance;
    auto count = [&](std::size_t w) -> std::optional<std::uint64_t> {
        if (hit.report.distribution.empty() || w > hit.report.known_through()) return std::nullopt;
        return hit.report.distribution[w];
    };
    r.a12 = count(12);
    r.a14 = count(14);
    r.a16 = count(16);
    if (hit.classification) {
        r.family = std::string(family_name(hit.classification->family));
        r.beta = hit.classification->beta;
        r.gamma = hit.classification->gamma;
    }
    if (hit.novelty) r.novelty = std::string(novelty_name(*hit.novelty));
    r.seed = hit.seed;
    r.index = hit.index;
    r.duplicates = hit.duplicates;
    return r;
}

namespace {

template <class T>
void put(json& j, const char* key, const std::optional<T>& v) {
    j[key] = v ? json(*v) : json(nullptr);
}

template <class T>
void get(const json& j, const char* key, std::optional<T>& v) {
    if (!j.contains(key) || j.at(key).is_null())
        v.reset();
    else
        v = j.at(key).get<T>();
}

}  // namespace

std::string HitRecord::to_json() const {
    json j;
    j["label"] = label;
    j["ring"] = ring;
    j["construction"] = construction;
    j["n"] = n;
    j["lambda"] = lambda;
    j["rows"] = rows;
    if (extension_c) j["extension"] = {{"c", *extension_c}, {"X", *extension_x}};
    else j["extension"] = nullptr;
    j["length"] = length;
    j["dimension"] = dimension;
    j["d"] = d;
    put(j, "A_12", a12);
    put(j, "A_14", a14);
    put(j, "A_16", a16);
    put(j, "family", family);
    put(j, "beta", beta);
    put(j, "gamma", gamma);
    put(j, "novelty", novelty);
    j["seed"] = seed;
    j["index"] = index;
    j["duplicates"] = duplicates;
    return j.dump();
}

HitRecord HitRecord::from_json(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("hit record: ") + e.what(), e.byte);
    }
    HitRecord r;
    try {
        r.label = j.at("label").get<std::string>();
        r.ring = j.at("ring").get<std::string>();
        r.construction = j.at("construction").get<std::string>();
        r.n = j.at("n").get<std::size_t>();
        r.lambda = j.at("lambda").get<std::string>();
        r.rows = j.at("rows").get<std::array<std::string, 4>>();
        if (j.contains("extension") && !j.at("extension").is_null()) {
            r.extension_c = j.at("extension").at("c").get<std::string>();
            r.extension_x = j.at("extension").at("X").get<std::string>();
        }
        r.length = j.at("length").get<std::size_t>();
        r.dimension = j.at("dimension").get<std::size_t>();
        r.d = j.at("d").get<std::size_t>();
        get(j, "A_12", r.a12);
        get(j, "A_14", r.a14);
        get(j, "A_16", r.a16);
        get(j, "family", r.family);
        get(j, "beta", r.beta);
        get(j, "gamma", r.gamma);
        get(j, "novelty", r.novelty);
        r.seed = j.at("seed").get<std::uint64_t>();
        r.index = j.at("index").get<std::uint64_t>();
        r.duplicates = j.value("duplicates", std::uint64_t{0});
    } catch (const json::exception& e) {
        throw ParseError(std::string("hit record: ") + e.what(), 0);
    }
    return r;
}

std::string summary_json(const SearchSummary& s) {
    json j;
    j["summary"] = {{"candidates", s.candidates},
                    {"conditions_passed", s.conditions_passed},
                    {"condition_pass_rate", s.candidates ? double(s.conditions_passed) / double(s.candidates) : 0.0},
                    {"self_dual_failures", s.self_dual_failures},
                    {"below_threshold", s.below_threshold},
                    {"filtered", s.filtered},
                    {"duplicates", s.duplicates},
                    {"hits", s.hits},
                    {"seconds", s.seconds}};
    return j.dump();
}

}  // namespace sdc
