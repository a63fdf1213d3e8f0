#include "sdc/weights.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "sdc/kernels.hpp"
#include "sdc/packed.hpp"

namespace sdc {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::W64_1: return "W64_1";
        case Family::W64_2: return "W64_2";
        case Family::W68_1: return "W68_1";
        case Family::W68_2: return "W68_2";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    if (name == "W64_1") return Family::W64_1;
    if (name == "W64_2") return Family::W64_2;
    if (name == "W68_1") return Family::W68_1;
    if (name == "W68_2") return Family::W68_2;
    throw ParseError("unknown family '" + std::string(name) + "'", 0);
}

std::uint64_t WeightReport::count(std::size_t weight) const {
    if (distribution.empty() || weight > known_through())
        throw std::out_of_range("A_" + std::to_string(weight) + " not computed (known through " +
                                std::to_string(known_through()) + ")");
    return distribution[weight];
}

namespace {

std::size_t first_nonzero_weight(const std::vector<std::uint64_t>& dist) {
    for (std::size_t w = 1; w < dist.size(); ++w)
        if (dist[w] != 0) return w;
    return 0;
}

// A self-orthogonal binary code is doubly even iff its generators are.
bool binary_type_two(const LinearCode& code) {
    if (!is_self_orthogonal(code)) return false;
    const auto& g = code.generator();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        std::size_t w = 0;
        for (std::size_t j = 0; j < g.cols(); ++j) w += g(i, j) != 0;
        if (w % 4 != 0) return false;
    }
    return true;
}

void attach_classification(WeightReport& rep) {
    const bool shape = (rep.length == 64 && rep.dimension == 32) || (rep.length == 68 && rep.dimension == 34);
    if (!shape || rep.known_through() < 14) return;
    try {
        rep.classification = classify(rep);
    } catch (const ClassificationError&) {
    }
}

}  // namespace

WeightReport weight_distribution(const LinearCode& code, bool parallel) {
    if (code.ring() != RingKind::F2) throw DomainError("weight_distribution needs a binary code");
    if (code.dimension() > kFullPassMaxDimension)
        throw ResourceRefusal("full enumeration refused for k = " + std::to_string(code.dimension()) +
                              " > 40; use the low-weight (information set) engine");
    const PackedCode pc = PackedCode::from(code);
    WeightReport rep;
    rep.length = code.length();
    rep.dimension = code.dimension();
    rep.distribution = parallel ? kernels::weight_distribution_parallel(pc) : kernels::weight_distribution_serial(pc);
    rep.min_distance = first_nonzero_weight(rep.distribution);
    rep.type_two = true;
    for (std::size_t w = 0; w < rep.distribution.size(); ++w)
        if (w % 4 != 0 && rep.distribution[w] != 0) rep.type_two = false;
    attach_classification(rep);
    return rep;
}

WeightReport low_weight_report(const LinearCode& code, std::size_t through, bool parallel) {
    if (code.ring() == RingKind::F2U) throw DomainError("low_weight_report needs a binary or ternary code");
    through = std::min(through, code.length());
    const InfoSetPlan plan = make_info_sets(code);
    WeightReport rep;
    rep.length = code.length();
    rep.dimension = code.dimension();
    rep.distribution = parallel ? kernels::low_weight_counts_parallel(plan, through)
                                : kernels::low_weight_counts_serial(plan, through);
    rep.min_distance = first_nonzero_weight(rep.distribution);
    if (rep.min_distance == 0 && code.dimension() > 0)
        rep.min_distance = parallel ? kernels::min_distance_parallel(plan) : kernels::min_distance_serial(plan);
    if (code.ring() == RingKind::F2) {
        rep.type_two = binary_type_two(code);
        attach_classification(rep);
    }
    return rep;
}

TernaryDistance min_distance_ternary(const LinearCode& code, bool count_min_weight, bool parallel) {
    if (code.ring() != RingKind::F3) throw DomainError("min_distance_ternary needs a code over F3");
    if (code.dimension() > 30) throw ResourceRefusal("ternary distance supports k <= 30");
    const InfoSetPlan plan = make_info_sets(code);
    TernaryDistance out;
    out.distance = parallel ? kernels::min_distance_parallel(plan) : kernels::min_distance_serial(plan);
    if (count_min_weight && out.distance > 0) {
        const auto counts = parallel ? kernels::low_weight_counts_parallel(plan, out.distance)
                                     : kernels::low_weight_counts_serial(plan, out.distance);
        out.min_weight_words = counts[out.distance];
    }
    return out;
}

WeightReport ternary_weight_distribution(const LinearCode& code, bool parallel) {
    if (code.ring() != RingKind::F3) throw DomainError("ternary_weight_distribution needs a code over F3");
    if (code.dimension() > 20) throw ResourceRefusal("full ternary enumeration refused for k > 20");
    const PackedCode pc = PackedCode::from(code);
    WeightReport rep;
    rep.length = code.length();
    rep.dimension = code.dimension();
    rep.distribution = parallel ? kernels::weight_distribution_parallel(pc) : kernels::weight_distribution_serial(pc);
    rep.min_distance = first_nonzero_weight(rep.distribution);
    return rep;
}

EnumeratorClass classify_counts(std::size_t n, std::uint64_t a12, std::uint64_t a14) {
    const auto A12 = static_cast<std::int64_t>(a12);
    const auto A14 = static_cast<std::int64_t>(a14);
    auto fail = [&](const std::string& why) {
        return ClassificationError("unclassifiable: " + why + " (n=" + std::to_string(n) +
                                       ", A12=" + std::to_string(a12) + ", A14=" + std::to_string(a14) + ")",
                                   a12, a14);
    };
    EnumeratorClass cls;
    if (n == 64) {
        if ((A12 - 1312) % 16 != 0) throw fail("A12 - 1312 not divisible by 16");
        cls.beta = (A12 - 1312) / 16;
        if (A14 == 22016 - 64 * cls.beta) {
            cls.family = Family::W64_1;
            cls.in_published_range = cls.beta >= 14 && cls.beta <= 284;
        } else if (A14 == 23040 - 64 * cls.beta) {
            cls.family = Family::W64_2;
            cls.in_published_range = cls.beta >= 0 && cls.beta <= 277;
        } else {
            throw fail("A14 matches neither W64 family");
        }
        return cls;
    }
    if (n == 68) {
        if ((A12 - 442) % 4 != 0) throw fail("A12 - 442 not divisible by 4");
        cls.beta = (A12 - 442) / 4;
        const std::int64_t rest = 14960 - 8 * cls.beta - A14;
        if (rest % 256 == 0 && rest / 256 >= 0 && rest / 256 <= 11) {
            cls.family = Family::W68_2;
            cls.gamma = rest / 256;
            cls.in_published_range = cls.beta >= 14 * *cls.gamma && cls.beta <= 1870 - 32 * *cls.gamma;
        } else if (A14 == 10864 - 8 * cls.beta) {
            cls.family = Family::W68_1;
            cls.in_published_range = cls.beta >= 104 && cls.beta <= 1358;
        } else {
            throw fail("A14 matches neither W68 family");
        }
        return cls;
    }
    throw fail("classification is defined for lengths 64 and 68");
}

EnumeratorClass classify(const WeightReport& report) {
    const bool shape =
        (report.length == 64 && report.dimension == 32) || (report.length == 68 && report.dimension == 34);
    if (!shape)
        throw ClassificationError("classification needs a [64,32] or [68,34] code", 0, 0);
    if (report.known_through() < 14) throw ClassificationError("report does not reach weight 14", 0, 0);
    return classify_counts(report.length, report.count(12), report.count(14));
}

std::size_t extremal_bound(std::size_t n, bool type_two) {
    const std::size_t base = 4 * (n / 24) + 4;
    if (!type_two && n % 24 == 22) return base + 2;
    return base;
}

bool is_extremal(std::size_t n, std::size_t d, bool type_two) {
    const std::size_t bound = extremal_bound(n, type_two);
    if (d > bound)
        throw DomainError("d = " + std::to_string(d) + " exceeds the self-dual bound " + std::to_string(bound) +
                          " for n = " + std::to_string(n));
    return d == bound;
}

bool is_extremal_ternary(std::size_t n, std::size_t d) { return d == 3 * (n / 12) + 3; }

std::string_view novelty_name(Novelty v) {
    switch (v) {
        case Novelty::Known: return "known";
        case Novelty::New: return "new";
        case Novelty::OutOfFamily: return "out_of_family";
        case Novelty::AmbiguousKnown: return "ambiguous-known";
    }
    return "?";
}

KnownParameterTable KnownParameterTable::parse(std::istream& in) {
    KnownParameterTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string family, gamma, beta;
        if (!(fields >> family)) continue;
        if (!(fields >> gamma >> beta))
            throw ParseError("known-parameter record needs 'family gamma beta' (line " + std::to_string(lineno) + ")", 0);
        KnownEntry e;
        e.family = parse_family(family);
        try {
            if (gamma != "-") e.gamma = std::stoll(gamma);
            e.beta = std::stoll(beta);
        } catch (const std::exception&) {
            throw ParseError("bad number in known-parameter table (line " + std::to_string(lineno) + ")", 0);
        }
        std::string flag;
        while (fields >> flag) {
            if (flag == "ambiguous")
                e.ambiguous = true;
            else if (flag.rfind("added=", 0) == 0)
                e.added = flag.substr(6);
            else
                throw ParseError("unknown flag '" + flag + "' (line " + std::to_string(lineno) + ")", 0);
        }
        table.entries_.push_back(std::move(e));
    }
    return table;
}

KnownParameterTable KnownParameterTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open known-parameter table '" + path + "'");
    return parse(in);
}

const KnownEntry* KnownParameterTable::find(const EnumeratorClass& cls, bool include_additions) const {
    const KnownEntry* hit = nullptr;
    for (const auto& e : entries_) {
        if (e.family != cls.family || e.beta != cls.beta || e.gamma != cls.gamma) continue;
        if (!e.added.empty() && !include_additions) continue;
        // an unambiguous record wins over an ambiguous duplicate
        if (!hit || (hit->ambiguous && !e.ambiguous)) hit = &e;
    }
    return hit;
}

std::size_t KnownParameterTable::count(Family family, bool include_additions) const {
    std::size_t c = 0;
    for (const auto& e : entries_)
        if (e.family == family && (include_additions || e.added.empty())) ++c;
    return c;
}

Novelty novelty_check(const EnumeratorClass& cls, const KnownParameterTable& table, bool include_additions) {
    if (!cls.in_published_range) return Novelty::OutOfFamily;
    const KnownEntry* e = table.find(cls, include_additions);
    if (!e) return Novelty::New;
    return e->ambiguous ? Novelty::AmbiguousKnown : Novelty::Known;
}

}  // namespace sdc
