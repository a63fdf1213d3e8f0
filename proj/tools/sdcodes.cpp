// sdcodes: construct, verify, weigh, search and reproduce self-dual codes.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sdc/io.hpp"
#include "sdc/pipeline.hpp"
#include "sdc/search.hpp"

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

enum Exit { kOk = 0, kOther = 1, kParse = 2, kConditions = 3, kMismatch = 4, kRefused = 5 };

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
        }
    }
    void line(const std::string& s) {
        std::ostream& os = file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout;
        os << s << '\n';
        os.flush();
    }

private:
    std::ofstream file_;
};

struct Common {
    int threads = 0;
    std::string out;
    std::string known_table;
    bool include_additions = false;
};

std::optional<sdc::KnownParameterTable> load_known(const Common& c) {
    std::string path = c.known_table;
    if (path.empty()) {
        path = std::string(SDC_DATA_DIR) + "/known_parameters.txt";
        if (!fs::exists(path)) return std::nullopt;
    }
    return sdc::KnownParameterTable::load(path);
}

json report_json(const sdc::SpecResult& r) {
    json j;
    j["label"] = r.label;
    j["length"] = r.report.length;
    j["dimension"] = r.report.dimension;
    j["d"] = r.report.min_distance;
    j["self_dual"] = r.self_dual;
    if (!r.report.distribution.empty()) {
        j["known_through"] = r.report.known_through();
        json a = json::object();
        for (std::size_t w = 0; w < r.report.distribution.size(); ++w)
            if (r.report.distribution[w]) a[std::to_string(w)] = r.report.distribution[w];
        j["A"] = a;
        if (r.report.complete()) j["type"] = r.report.type_two ? "II" : "I";
    }
    if (r.min_weight_words) j["min_weight_words"] = *r.min_weight_words;
    if (const auto& c = r.report.classification) {
        j["family"] = sdc::family_name(c->family);
        j["beta"] = c->beta;
        j["gamma"] = c->gamma ? json(*c->gamma) : json(nullptr);
        j["in_published_range"] = c->in_published_range;
    }
    if (r.novelty) j["novelty"] = sdc::novelty_name(*r.novelty);
    if (r.extension) j["extension"] = {{"c", r.extension->c.str()}, {"X", r.extension->x.str()}};
    return j;
}

std::string describe(const sdc::SpecResult& r) {
    std::ostringstream s;
    s << "d=" << r.report.min_distance;
    if (const auto& c = r.report.classification) {
        s << " " << sdc::family_name(c->family);
        if (c->gamma) s << " gamma=" << *c->gamma;
        s << " beta=" << c->beta;
    }
    if (r.min_weight_words) s << " A_d=" << *r.min_weight_words;
    return s.str();
}

void print_summary(const std::string& what, const sdc::SearchSummary& s) {
    std::fprintf(stderr,
                 "%s: %llu candidates, %llu passed conditions (%.4f%%), %llu hits, %llu duplicates, "
                 "%llu below threshold, %llu filtered, %.2f s\n",
                 what.c_str(), static_cast<unsigned long long>(s.candidates),
                 static_cast<unsigned long long>(s.conditions_passed),
                 s.candidates ? 100.0 * double(s.conditions_passed) / double(s.candidates) : 0.0,
                 static_cast<unsigned long long>(s.hits), static_cast<unsigned long long>(s.duplicates),
                 static_cast<unsigned long long>(s.below_threshold), static_cast<unsigned long long>(s.filtered),
                 s.seconds);
}

// --- construct / distance ---------------------------------------------------

struct SpecArgs {
    std::string spec;
    bool full = false;
    std::size_t through = 16;
};

sdc::EvaluateOptions eval_options(const SpecArgs& a, const sdc::KnownParameterTable* known, bool additions) {
    sdc::EvaluateOptions opt;
    opt.full = a.full;
    opt.through = a.through;
    opt.known = known;
    opt.include_additions = additions;
    return opt;
}

int cmd_construct(const Common& c, const SpecArgs& a) {
    const auto spec = sdc::SpecFile::load(a.spec);
    const auto known = load_known(c);
    Output out(c.out);
    int status = kOk;
    for (const auto& r : sdc::evaluate_spec(spec, eval_options(a, known ? &*known : nullptr, c.include_additions))) {
        if (!r.built()) {
            std::cerr << spec.label << ": conditions failed: " << r.conditions.summary() << "\n";
            return kConditions;
        }
        if (!r.self_dual) {
            std::cerr << spec.label << ": generated code is not self-dual\n";
            status = kMismatch;
            continue;
        }
        out.line(sdc::to_record(spec, r).to_json());
        for (const auto& diff : sdc::compare_expectations(spec, r)) {
            std::cerr << spec.label << ": " << diff << "\n";
            status = kMismatch;
        }
    }
    return status;
}

int cmd_distance(const Common& c, const SpecArgs& a) {
    const auto spec = sdc::SpecFile::load(a.spec);
    const auto known = load_known(c);
    Output out(c.out);
    int status = kOk;
    for (const auto& r : sdc::evaluate_spec(spec, eval_options(a, known ? &*known : nullptr, c.include_additions))) {
        if (!r.built()) {
            std::cerr << spec.label << ": conditions failed: " << r.conditions.summary() << "\n";
            return kConditions;
        }
        if (!r.self_dual) status = kMismatch;
        out.line(report_json(r).dump());
    }
    return status;
}

// --- classify -----------------------------------------------------------------

struct ClassifyArgs {
    std::uint64_t a12 = 0, a14 = 0;
    std::size_t n = 0;
};

int cmd_classify(const Common& c, const ClassifyArgs& a) {
    Output out(c.out);
    const auto cls = sdc::classify_counts(a.n, a.a12, a.a14);
    json j{{"n", a.n}, {"A_12", a.a12}, {"A_14", a.a14}, {"family", sdc::family_name(cls.family)},
           {"beta", cls.beta}, {"gamma", cls.gamma ? json(*cls.gamma) : json(nullptr)},
           {"in_published_range", cls.in_published_range}};
    if (const auto known = load_known(c))
        j["novelty"] = sdc::novelty_name(sdc::novelty_check(cls, *known, c.include_additions));
    out.line(j.dump());
    return kOk;
}

// --- search ---------------------------------------------------------------------

struct SearchArgs {
    std::string spec;
    std::optional<std::uint64_t> seed, budget;
    std::optional<std::string> strategy;
    std::optional<std::size_t> min_d;
    std::optional<std::string> target;
    bool serial = false;
};

int cmd_search(const Common& c, const SearchArgs& a) {
    sdc::SearchJob job = sdc::load_job(a.spec);
    if (a.seed) job.seed = *a.seed;
    if (a.budget) job.budget = *a.budget;
    if (a.strategy) job.strategy = sdc::parse_strategy(*a.strategy);
    if (a.min_d) job.min_distance = *a.min_d;
    if (a.target) job.target = sdc::parse_target(*a.target);
    job.parallel = !a.serial;
    const auto known = load_known(c);
    const sdc::NoveltyOptions nov{known ? &*known : nullptr, c.include_additions};
    Output out(c.out);

    const auto jobs = sdc::resolve_partial_c(job);
    if (jobs.empty()) throw sdc::DomainError("no completion of the partial row C satisfies CD^T = DC^T");
    for (const auto& j : jobs) {
        const std::string label = j.fixed[2] ? "rC=" + j.fixed[2]->str() : std::string{};
        const auto result = sdc::search_constructions(j, nov);
        for (const auto& hit : result.hits) out.line(sdc::HitRecord::from_hit(hit, label).to_json());
        out.line(sdc::summary_json(result.summary));
        print_summary("search" + (label.empty() ? "" : " " + label), result.summary);
    }
    return kOk;
}

// --- extend ---------------------------------------------------------------------

struct ExtendArgs {
    std::string spec;
    std::string sampler = "list";
    std::string c_list;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::size_t min_d = 0;
    std::optional<std::string> target;
    bool serial = false;
};

int cmd_extend(const Common& c, const ExtendArgs& a) {
    const auto spec = sdc::SpecFile::load(a.spec);
    sdc::ExtensionJob job{spec.base_code(), {}};
    if (a.sampler == "list") {
        job.sampler = sdc::Sampler::List;
        job.list = spec.extensions;
    } else if (a.sampler == "random") {
        job.sampler = sdc::Sampler::Random;
    } else if (a.sampler == "exhaustive") {
        job.sampler = sdc::Sampler::ExhaustiveSmall;
    } else {
        throw sdc::ParseError("unknown sampler '" + a.sampler + "' (list, random, exhaustive)", 0);
    }
    if (a.c_list.empty()) {
        for (auto u : sdc::Ring(spec.ring).units())
            if (sdc::is_unit_square_one({spec.ring, u})) job.c_candidates.push_back({spec.ring, u});
    } else {
        std::istringstream parts(a.c_list);
        std::string item;
        while (std::getline(parts, item, ',')) job.c_candidates.push_back(sdc::RingElement::parse(item, spec.ring));
    }
    job.seed = a.seed;
    job.budget = a.budget;
    job.min_distance = a.min_d;
    if (a.target) job.target = sdc::parse_target(*a.target);
    job.parallel = !a.serial;
    const auto known = load_known(c);
    const auto result = sdc::search_extensions(job, {known ? &*known : nullptr, c.include_additions});
    Output out(c.out);
    for (const auto& hit : result.hits) {
        auto rec = sdc::HitRecord::from_hit(hit, spec.label);
        if (spec.construction) {
            sdc::SearchHit base_hit = hit;
            base_hit.quad = spec.quad();
            base_hit.construction = *spec.construction;
            rec = sdc::HitRecord::from_hit(base_hit, spec.label);
        }
        out.line(rec.to_json());
    }
    out.line(sdc::summary_json(result.summary));
    print_summary("extend", result.summary);
    return kOk;
}

// --- reproduce ------------------------------------------------------------------

struct ReproduceArgs {
    std::string table = "all";
    std::string corpus = SDC_CORPUS_DIR;
    bool full = false;
};

std::vector<std::string> rows_for(const std::string& sel) {
    auto series = [](const std::string& prefix, int count) {
        std::vector<std::string> v;
        for (int i = 1; i <= count; ++i) v.push_back(prefix + std::to_string(i));
        return v;
    };
    if (sel == "1") return series("C", 6);
    if (sel == "2") return series("D", 6);
    if (sel == "3") return series("E", 12);
    if (sel == "4") return series("F", 9);
    if (sel == "5") return series("C68_", 27);
    if (sel == "ex5") return {"ex5"};
    if (sel == "ex7") return {"ex7a", "ex7b"};
    if (sel == "ex6") return {"ex6"};
    throw sdc::ParseError("unknown table selector '" + sel + "' (1-5, ex5, ex6, ex7, all)", 0);
}

bool reproduce_ex6(const std::string& corpus, Output& out) {
    sdc::SearchJob job = sdc::load_job(corpus + "/ex6.job");
    const auto t0 = std::chrono::steady_clock::now();
    std::set<std::int64_t> betas;
    bool counts_ok = true;
    std::vector<std::string> notes;
    for (const auto& j : sdc::resolve_partial_c(job)) {
        const auto result = sdc::search_constructions(j);
        counts_ok = counts_ok && result.summary.candidates == 65536;
        std::set<std::int64_t> here;
        for (const auto& h : result.hits)
            if (h.classification && h.classification->family == sdc::Family::W64_2) here.insert(h.classification->beta);
        std::ostringstream s;
        s << "rC=" << j.fixed[2]->str() << " candidates=" << result.summary.candidates << " beta={";
        for (auto b : here) s << (b == *here.begin() ? "" : ",") << b;
        s << "}";
        notes.push_back(s.str());
        betas.insert(here.begin(), here.end());
    }
    const bool ok = counts_ok && betas.count(8) && betas.count(24);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << "ex6      " << (ok ? "PASS" : "FAIL") << "  ";
    for (const auto& n : notes) line << n << "; ";
    line << std::fixed << std::setprecision(2) << "(" << secs << " s)";
    out.line(line.str());
    return ok;
}

int cmd_reproduce(const Common& c, const ReproduceArgs& a) {
    if (!fs::is_directory(a.corpus)) throw std::runtime_error("corpus directory '" + a.corpus + "' not found");
    std::vector<std::string> rows;
    std::istringstream parts(a.table == "all" ? "1,2,3,4,5,ex5,ex6,ex7" : a.table);
    std::string item;
    while (std::getline(parts, item, ','))
        for (auto& r : rows_for(item)) rows.push_back(r);

    Output out(c.out);
    std::size_t passed = 0, total = 0;
    for (const auto& row : rows) {
        ++total;
        if (row == "ex6") {
            passed += reproduce_ex6(a.corpus, out);
            continue;
        }
        const auto t0 = std::chrono::steady_clock::now();
        const auto spec = sdc::SpecFile::load(a.corpus + "/" + row + ".spec");
        sdc::EvaluateOptions opt;
        opt.full = a.full;
        std::vector<std::string> diffs;
        std::string desc;
        for (const auto& r : sdc::evaluate_spec(spec, opt)) {
            if (!r.built()) diffs.push_back("conditions failed: " + r.conditions.summary());
            else if (!r.self_dual) diffs.push_back("not self-dual");
            else {
                for (auto& d : sdc::compare_expectations(spec, r)) diffs.push_back(std::move(d));
                desc = describe(r);
            }
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream line;
        line << std::left << std::setw(8) << row << " " << (diffs.empty() ? "PASS" : "FAIL") << "  " << desc
             << std::fixed << std::setprecision(2) << " (" << secs << " s)";
        for (const auto& d : diffs) line << "\n         " << d;
        out.line(line.str());
        if (diffs.empty()) ++passed;
    }
    out.line("reproduce: " + std::to_string(passed) + "/" + std::to_string(total) + " rows match");
    return passed == total ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-dual codes over F2, F3 and F2+uF2 from four-circulant arrays"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--threads", common.threads, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
    app.add_option("--out", common.out, "Write records to this file instead of stdout");
    app.add_option("--known-table", common.known_table, "Known-parameter table for novelty verdicts");
    app.add_flag("--include-additions", common.include_additions, "Treat table entries marked added= as known");

    SpecArgs construct_args, distance_args;
    auto* construct = app.add_subcommand("construct", "Build a spec, verify self-duality, print a hit record");
    construct->add_option("--spec", construct_args.spec, "Spec file")->required();
    construct->add_flag("--full", construct_args.full, "Full 2^k enumeration for binary codes");
    construct->add_option("--through", construct_args.through, "Largest weight counted")->capture_default_str();

    auto* distance = app.add_subcommand("distance", "Weight report of a spec's code");
    distance->add_option("--spec", distance_args.spec, "Spec file")->required();
    distance->add_flag("--full", distance_args.full, "Full 2^k enumeration for binary codes");
    distance->add_option("--through", distance_args.through, "Largest weight counted")->capture_default_str();

    ClassifyArgs classify_args;
    auto* classify = app.add_subcommand("classify", "Classify (A_12, A_14) for length 64 or 68");
    classify->add_option("a12", classify_args.a12, "A_12")->required();
    classify->add_option("a14", classify_args.a14, "A_14")->required();
    classify->add_option("n", classify_args.n, "Length (64 or 68)")->required();

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "Run a construction search job");
    search->add_option("--spec", search_args.spec, "Job file")->required();
    search->add_option("--seed", search_args.seed, "PRNG seed");
    search->add_option("--budget", search_args.budget, "Candidate budget (exhaustive: 0 = whole space)");
    search->add_option("--strategy", search_args.strategy, "exhaustive, random or cd_fixed");
    search->add_option("--min-d", search_args.min_d, "Minimum distance threshold");
    search->add_option("--target", search_args.target, "Filter, e.g. \"W64_2 beta=8\"");
    search->add_flag("--serial", search_args.serial, "Serial reference path");

    ExtendArgs extend_args;
    auto* extend = app.add_subcommand("extend", "Extend a spec's code by two coordinates");
    extend->add_option("--spec", extend_args.spec, "Base spec (extension= lines feed the list sampler)")->required();
    extend->add_option("--sampler", extend_args.sampler, "list, random or exhaustive")->capture_default_str();
    extend->add_option("--c", extend_args.c_list, "Comma-separated c values (default: every unit with c^2=1)");
    extend->add_option("--seed", extend_args.seed, "PRNG seed");
    extend->add_option("--budget", extend_args.budget, "Candidate budget");
    extend->add_option("--min-d", extend_args.min_d, "Minimum distance threshold");
    extend->add_option("--target", extend_args.target, "Filter, e.g. \"W68_2 gamma=0\"");
    extend->add_flag("--serial", extend_args.serial, "Serial reference path");

    ReproduceArgs reproduce_args;
    auto* reproduce = app.add_subcommand("reproduce", "Check bundled corpus rows against published values");
    reproduce->add_option("--table", reproduce_args.table, "1,2,3,4,5,ex5,ex6,ex7 or all")->capture_default_str();
    reproduce->add_option("--corpus", reproduce_args.corpus, "Corpus directory")->capture_default_str();
    reproduce->add_flag("--full", reproduce_args.full, "Full 2^k enumeration for binary codes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }
    if (common.threads > 0) omp_set_num_threads(common.threads);

    try {
        if (*construct) return cmd_construct(common, construct_args);
        if (*distance) return cmd_distance(common, distance_args);
        if (*classify) return cmd_classify(common, classify_args);
        if (*search) return cmd_search(common, search_args);
        if (*extend) return cmd_extend(common, extend_args);
        if (*reproduce) return cmd_reproduce(common, reproduce_args);
    } catch (const sdc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const sdc::ConstructionError& e) {
        std::cerr << "conditions failed: " << e.what() << "\n";
        return kConditions;
    } catch (const sdc::ResourceRefusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kRefused;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOther;
    }
    return kOther;
}
