#include "sdc/pipeline.hpp"

namespace sdc {

LinearCode reported_code(const LinearCode& code) {
    return code.ring() == RingKind::F2U ? gray_image_code(code) : code;
}

bool self_dual_any_form(const LinearCode& code) {
    if (code.length() != 2 * code.dimension()) return false;
    try {
        return is_self_dual(systematic_form(code).code);
    } catch (const UnsupportedShape&) {
        return false;
    }
}

namespace {

SpecResult weigh(const std::string& label, const LinearCode& code, const EvaluateOptions& opt) {
    SpecResult res;
    res.label = label;
    res.conditions.gram_ok = res.conditions.skew_ok = true;
    const LinearCode image = reported_code(code);
    res.self_dual = self_dual_any_form(code) && (code.ring() != RingKind::F2U || self_dual_any_form(image));
    if (!res.self_dual) return res;

    if (image.ring() == RingKind::F3) {
        if (image.dimension() <= 12) {
            res.report = ternary_weight_distribution(image, opt.parallel);
            if (opt.count_min_weight) res.min_weight_words = res.report.count(res.report.min_distance);
        } else {
            const auto td = min_distance_ternary(image, opt.count_min_weight, opt.parallel);
            res.report.length = image.length();
            res.report.dimension = image.dimension();
            res.report.min_distance = td.distance;
            res.min_weight_words = td.min_weight_words;
        }
    } else if (opt.full) {
        res.report = weight_distribution(image, opt.parallel);
    } else {
        res.report = low_weight_report(image, opt.through, opt.parallel);
    }
    if (opt.known && res.report.classification)
        res.novelty = novelty_check(*res.report.classification, *opt.known, opt.include_additions);
    return res;
}

}  // namespace

std::vector<SpecResult> evaluate_spec(const SpecFile& spec, const EvaluateOptions& opt) {
    LinearCode base;
    if (spec.construction) {
        const CirculantQuad q = spec.quad();
        ConditionReport cond = check_conditions(*spec.construction, q);
        if (!cond.ok()) {
            SpecResult res;
            res.label = spec.label;
            res.conditions = std::move(cond);
            return {res};
        }
        base = LinearCode(build(*spec.construction, q, false));
    } else {
        base = spec.base_code();
    }
    if (spec.extensions.empty()) return {weigh(spec.label, base, opt)};

    std::vector<SpecResult> out;
    for (const auto& ext : spec.extensions) {
        auto res = weigh(spec.label, extend_code({base, ext.c, ext.x}), opt);
        res.extension = ext;
        out.push_back(std::move(res));
    }
    return out;
}

std::vector<std::string> compare_expectations(const SpecFile& spec, const SpecResult& result) {
    std::vector<std::string> diffs;
    const auto& rep = result.report;
    const auto& cls = rep.classification;
    for (const auto& [key, want] : spec.expect) {
        std::optional<std::string> got;
        if (key == "d") got = std::to_string(rep.min_distance);
        else if (key == "length") got = std::to_string(rep.length);
        else if (key == "dimension") got = std::to_string(rep.dimension);
        else if (key == "family" && cls) got = std::string(family_name(cls->family));
        else if (key == "beta" && cls) got = std::to_string(cls->beta);
        else if (key == "gamma" && cls && cls->gamma) got = std::to_string(*cls->gamma);
        else if (key == "min_weight_words" && result.min_weight_words) got = std::to_string(*result.min_weight_words);
        else if (key.size() > 2 && key[0] == 'A' && key[1] == '_') {
            const auto w = static_cast<std::size_t>(std::stoul(key.substr(2)));
            if (!rep.distribution.empty() && w <= rep.known_through()) got = std::to_string(rep.distribution[w]);
        }
        if (!got && !cls && (key == "family" || key == "beta" || key == "gamma") && rep.known_through() >= 14) {
            try {
                classify_counts(rep.length, rep.count(12), rep.count(14));
            } catch (const ClassificationError& e) {
                got = std::string(e.what());
            }
        }
        if (!got) diffs.push_back(key + ": expected " + want + ", not computed");
        else if (*got != want) diffs.push_back(key + ": expected " + want + ", got " + *got);
    }
    return diffs;
}

HitRecord to_record(const SpecFile& spec, const SpecResult& result) {
    SearchHit hit;
    if (spec.construction) {
        hit.quad = spec.quad();
        hit.construction = *spec.construction;
    }
    hit.extension = result.extension;
    hit.report = result.report;
    hit.classification = result.report.classification;
    hit.novelty = result.novelty;
    HitRecord rec = HitRecord::from_hit(hit, result.label);
    rec.ring = ring_name(spec.ring);
    if (!spec.construction) rec.construction = "explicit";
    return rec;
}

}  // namespace sdc
