#include "sdc/search.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

namespace sdc {

std::string_view strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Exhaustive: return "exhaustive";
        case Strategy::Random: return "random";
        case Strategy::CdFixed: return "cd_fixed";
    }
    return "?";
}

Strategy parse_strategy(std::string_view name) {
    if (name == "exhaustive") return Strategy::Exhaustive;
    if (name == "random") return Strategy::Random;
    if (name == "cd_fixed") return Strategy::CdFixed;
    throw ParseError("unknown strategy '" + std::string(name) + "'", 0);
}

bool TargetFilter::matches(const std::optional<EnumeratorClass>& cls) const {
    if (!cls || cls->family != family) return false;
    if (beta && cls->beta != *beta) return false;
    if (gamma && cls->gamma != gamma) return false;
    return true;
}

std::array<std::int64_t, 4> SearchHit::fingerprint() const {
    auto at = [&](std::size_t w) -> std::int64_t {
        return w <= report.known_through() ? static_cast<std::int64_t>(report.distribution[w]) : -1;
    };
    return {static_cast<std::int64_t>(report.min_distance), at(12), at(14), at(16)};
}

namespace {

using u128 = unsigned __int128;

std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return {s.rbegin(), s.rend()};
}

// |R|^exponent * factor, saturating at 2^127.
u128 space_size(int radix, std::size_t exponent, std::size_t factor) {
    u128 v = factor;
    const u128 cap = u128{1} << 126;
    for (std::size_t i = 0; i < exponent; ++i) {
        v *= static_cast<u128>(radix);
        if (v > cap) return cap;
    }
    return v;
}

std::mt19937_64 candidate_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

std::vector<int> free_rows(const SearchJob& job) {
    std::vector<int> rows;
    for (int r = 0; r < 4; ++r)
        if (!job.fixed[static_cast<std::size_t>(r)]) rows.push_back(r);
    return rows;
}

bool exhaustive_like(Strategy s) { return s == Strategy::Exhaustive || s == Strategy::CdFixed; }

enum class Outcome { ConditionFail, SelfDualFail, BelowThreshold, Filtered, Hit };

struct Evaluated {
    Outcome outcome = Outcome::ConditionFail;
    SearchHit hit;
};

// Exact low-weight report of a binary or ternary code. With a threshold, a
// cheap pass through min_distance - 1 rejects short codes first; the returned
// report then stops at the first nonzero weight.
WeightReport report_for(const LinearCode& code, std::size_t through, std::size_t min_distance) {
    if (min_distance > 1 && min_distance - 1 < through) {
        auto quick = low_weight_report(code, min_distance - 1, false);
        for (std::size_t w = 1; w < quick.distribution.size(); ++w)
            if (quick.distribution[w] != 0) {
                quick.distribution.resize(w + 1);
                quick.min_distance = w;
                return quick;
            }
    }
    return low_weight_report(code, through, false);
}

bool verify_self_dual(const LinearCode& code) {
    if (code.length() != 2 * code.dimension()) return false;
    try {
        return is_self_dual(systematic_form(code).code);
    } catch (const UnsupportedShape&) {
        return false;
    }
}

void finish(Evaluated& ev, std::size_t min_distance, const std::optional<TargetFilter>& target,
            const NoveltyOptions& novelty) {
    if (ev.hit.report.min_distance < min_distance) {
        ev.outcome = Outcome::BelowThreshold;
        return;
    }
    ev.hit.classification = ev.hit.report.classification;
    if (target && !target->matches(ev.hit.classification)) {
        ev.outcome = Outcome::Filtered;
        return;
    }
    if (novelty.table && ev.hit.classification)
        ev.hit.novelty = novelty_check(*ev.hit.classification, *novelty.table, novelty.include_additions);
    ev.outcome = Outcome::Hit;
}

Evaluated evaluate_construction(const SearchJob& job, std::uint64_t index, const NoveltyOptions& novelty) {
    Evaluated ev;
    const CirculantQuad q = job.candidate(index);
    if (!check_conditions(job.construction, q).ok()) return ev;
    const LinearCode code(build(job.construction, q, false));
    if (!is_self_dual(code)) {
        ev.outcome = Outcome::SelfDualFail;
        return ev;
    }
    ev.hit.quad = q;
    ev.hit.construction = job.construction;
    ev.hit.seed = job.seed;
    ev.hit.index = index;
    const std::size_t through = code.ring() == RingKind::F3 ? std::max(job.min_distance, std::size_t{1}) : job.count_through;
    ev.hit.report = report_for(code.ring() == RingKind::F2U ? gray_image_code(code) : code, through, job.min_distance);
    finish(ev, job.min_distance, job.target, novelty);
    return ev;
}

template <class Eval>
SearchResult run(std::uint64_t count, bool parallel, std::uint64_t max_hits, Eval&& eval) {
    const auto start = std::chrono::steady_clock::now();
    SearchResult result;
    auto& sum = result.summary;
    // fingerprint -> position in result.hits
    std::map<std::array<std::int64_t, 4>, std::size_t> seen;

    constexpr std::uint64_t kBlock = 4096;
    for (std::uint64_t base = 0; base < count; base += kBlock) {
        const std::uint64_t len = std::min(kBlock, count - base);
        std::vector<Evaluated> block(len);
        if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(len); ++i)
                block[static_cast<std::size_t>(i)] = eval(base + static_cast<std::uint64_t>(i));
        } else {
            for (std::uint64_t i = 0; i < len; ++i) block[i] = eval(base + i);
        }
        // ordered merge by candidate index
        for (auto& ev : block) {
            ++sum.candidates;
            switch (ev.outcome) {
                case Outcome::ConditionFail: continue;
                case Outcome::SelfDualFail: ++sum.conditions_passed; ++sum.self_dual_failures; continue;
                case Outcome::BelowThreshold: ++sum.conditions_passed; ++sum.below_threshold; continue;
                case Outcome::Filtered: ++sum.conditions_passed; ++sum.filtered; continue;
                case Outcome::Hit: ++sum.conditions_passed; break;
            }
            const auto fp = ev.hit.fingerprint();
            if (auto it = seen.find(fp); it != seen.end()) {
                ++result.hits[it->second].duplicates;
                ++sum.duplicates;
                continue;
            }
            seen.emplace(fp, result.hits.size());
            result.hits.push_back(std::move(ev.hit));
        }
        if (max_hits && result.hits.size() >= max_hits) break;
    }
    if (max_hits && result.hits.size() > max_hits) result.hits.resize(max_hits);
    sum.hits = result.hits.size();
    sum.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace

void SearchJob::validate() const {
    if (partial_c) throw DomainError("job has a partial row C; resolve its completions first");
    if (n == 0) throw DomainError("search job needs n > 0");
    if (lambdas.empty()) throw DomainError("search job needs at least one lambda");
    const Ring r(ring);
    for (const auto& l : lambdas) {
        if (l.ring != ring || !is_unit(l)) throw DomainError("lambda '" + l.str() + "' is not a unit");
        if (construction == Construction::II && r.mul(l.value, l.value) != 1)
            throw DomainError("construction II needs lambda^2 = 1, lambda = '" + l.str() + "'");
    }
    for (std::size_t i = 0; i < 4; ++i)
        if (fixed[i] && (fixed[i]->ring() != ring || fixed[i]->size() != n))
            throw DomainError(std::string("fixed row ") + "ABCD"[i] + " has the wrong ring or length");
    if (strategy == Strategy::CdFixed) {
        if (!fixed[2] || !fixed[3]) throw DomainError("cd_fixed needs fixed rows C and D");
        for (const auto& l : lambdas) {
            const auto C = lambda_circulant(*fixed[2], l);
            const auto D = lambda_circulant(*fixed[3], l);
            if (!(C * D.transpose() - D * C.transpose()).is_zero())
                throw DomainError("cd_fixed: fixed C and D violate CD^T = DC^T for lambda '" + l.str() + "'");
        }
    }
    if (exhaustive_like(strategy)) {
        const std::size_t exponent = free_rows(*this).size() * n;
        const u128 size = space_size(r.size(), exponent, lambdas.size());
        if (size > max_exhaustive)
            throw ResourceRefusal("exhaustive space " + std::to_string(r.size()) + "^" + std::to_string(exponent) +
                                  " x " + std::to_string(lambdas.size()) + " = " + to_string_u128(size) +
                                  " exceeds the bound " + std::to_string(max_exhaustive));
    }
}

std::uint64_t SearchJob::candidate_count() const {
    if (!exhaustive_like(strategy)) return budget;
    const u128 size = space_size(Ring(ring).size(), free_rows(*this).size() * n, lambdas.size());
    const auto whole = static_cast<std::uint64_t>(std::min<u128>(size, ~std::uint64_t{0}));
    return budget ? std::min(budget, whole) : whole;
}

CirculantQuad SearchJob::candidate(std::uint64_t index) const {
    const Ring r(ring);
    const auto rows = free_rows(*this);
    CirculantQuad q;
    q.ring = ring;
    q.n = n;
    std::array<std::vector<std::uint8_t>, 4> symbols;
    for (auto& s : symbols) s.assign(n, 0);

    if (exhaustive_like(strategy)) {
        const auto radix = static_cast<std::uint64_t>(r.size());
        std::uint64_t rest = index;
        // least significant digit = last symbol of the last free row
        for (auto it = rows.rbegin(); it != rows.rend(); ++it)
            for (std::size_t j = n; j-- > 0;) {
                symbols[static_cast<std::size_t>(*it)][j] = static_cast<std::uint8_t>(rest % radix);
                rest /= radix;
            }
        q.lambda = lambdas[static_cast<std::size_t>(rest % lambdas.size())];
    } else {
        auto rng = candidate_rng(seed, index);
        std::uniform_int_distribution<int> sym(0, r.size() - 1);
        std::uniform_int_distribution<std::size_t> lam(0, lambdas.size() - 1);
        q.lambda = lambdas[lam(rng)];
        for (int row : rows)
            for (std::size_t j = 0; j < n; ++j)
                symbols[static_cast<std::size_t>(row)][j] = static_cast<std::uint8_t>(sym(rng));
    }
    RingVector* out[] = {&q.a, &q.b, &q.c, &q.d};
    for (std::size_t i = 0; i < 4; ++i)
        *out[i] = fixed[i] ? *fixed[i] : RingVector(ring, std::move(symbols[i]));
    return q;
}

std::vector<RingVector> insertion_completions(const RingVector& partial, std::size_t n) {
    if (partial.size() + 1 != n)
        throw DomainError("partial row has " + std::to_string(partial.size()) + " symbols, expected " +
                          std::to_string(n - 1));
    const Ring r(partial.ring());
    std::set<std::vector<std::uint8_t>> seen;
    for (std::size_t pos = 0; pos <= partial.size(); ++pos)
        for (std::uint8_t s : r.elements()) {
            auto e = partial.entries();
            e.insert(e.begin() + static_cast<std::ptrdiff_t>(pos), s);
            seen.insert(std::move(e));
        }
    std::vector<RingVector> out;
    for (const auto& e : seen) out.emplace_back(partial.ring(), e);
    return out;
}

std::vector<SearchJob> resolve_partial_c(const SearchJob& job) {
    if (!job.partial_c) return {job};
    if (!job.fixed[3]) throw DomainError("resolving a partial row C needs a fixed row D");
    std::vector<SearchJob> out;
    for (const auto& c : insertion_completions(*job.partial_c, job.n)) {
        bool ok = true;
        for (const auto& l : job.lambdas) {
            const auto C = lambda_circulant(c, l);
            const auto D = lambda_circulant(*job.fixed[3], l);
            ok = ok && (C * D.transpose() - D * C.transpose()).is_zero();
        }
        if (!ok) continue;
        SearchJob concrete = job;
        concrete.partial_c.reset();
        concrete.fixed[2] = c;
        out.push_back(std::move(concrete));
    }
    return out;
}

SearchResult search_constructions(const SearchJob& job, const NoveltyOptions& novelty) {
    job.validate();
    return run(job.candidate_count(), job.parallel, job.strategy == Strategy::Random ? job.max_hits : 0,
               [&](std::uint64_t i) { return evaluate_construction(job, i, novelty); });
}

std::optional<SearchHit> replay_candidate(const SearchJob& job, std::uint64_t index, const NoveltyOptions& novelty) {
    job.validate();
    auto ev = evaluate_construction(job, index, novelty);
    if (ev.outcome != Outcome::Hit) return std::nullopt;
    return std::move(ev.hit);
}

// --- extensions --------------------------------------------------------------

namespace {

std::optional<ExtensionCandidate> extension_candidate(const ExtensionJob& job, std::uint64_t index) {
    const RingKind ring = job.base.ring();
    const Ring r(ring);
    const std::size_t n = job.base.length();
    switch (job.sampler) {
        case Sampler::List:
            return job.list[static_cast<std::size_t>(index)];
        case Sampler::ExhaustiveSmall: {
            const std::size_t cs = job.c_candidates.size();
            const RingElement c = job.c_candidates[static_cast<std::size_t>(index % cs)];
            std::uint64_t rest = index / cs;
            RingVector x(ring, n);
            for (std::size_t j = n; j-- > 0;) {
                x.set(j, static_cast<std::uint8_t>(rest % static_cast<std::uint64_t>(r.size())));
                rest /= static_cast<std::uint64_t>(r.size());
            }
            if (inner_product(x, x).value != 1) return std::nullopt;
            return ExtensionCandidate{c, std::move(x)};
        }
        case Sampler::Random: {
            auto rng = candidate_rng(job.seed, index);
            std::uniform_int_distribution<std::size_t> pick(0, job.c_candidates.size() - 1);
            std::uniform_int_distribution<int> sym(0, r.size() - 1);
            const RingElement c = job.c_candidates[pick(rng)];
            std::vector<std::uint8_t> e(n);
            while (true) {
                for (auto& v : e) v = static_cast<std::uint8_t>(sym(rng));
                RingVector x(ring, e);
                if (inner_product(x, x).value == 1) return ExtensionCandidate{c, std::move(x)};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

SearchResult search_extensions(const ExtensionJob& job, const NoveltyOptions& novelty) {
    const RingKind ring = job.base.ring();
    if (job.base.length() != 2 * job.base.dimension() || !is_self_orthogonal(job.base))
        throw DomainError("extension base code is not self-dual");
    if (job.sampler != Sampler::List) {
        if (job.c_candidates.empty()) throw DomainError("no candidate c with c^2 = 1");
        for (const auto& c : job.c_candidates)
            if (c.ring != ring || !is_unit_square_one(c))
                throw DomainError("candidate c = '" + c.str() + "' is not a unit with c^2 = 1");
    }
    std::uint64_t count = job.budget;
    if (job.sampler == Sampler::List) {
        count = job.budget ? std::min<std::uint64_t>(job.budget, job.list.size()) : job.list.size();
    } else if (job.sampler == Sampler::ExhaustiveSmall) {
        const u128 size = space_size(Ring(ring).size(), job.base.length(), job.c_candidates.size());
        if (size > job.max_exhaustive)
            throw ResourceRefusal("exhaustive extension space " + to_string_u128(size) + " exceeds the bound " +
                                  std::to_string(job.max_exhaustive));
        count = job.budget ? std::min<std::uint64_t>(job.budget, static_cast<std::uint64_t>(size))
                           : static_cast<std::uint64_t>(size);
    }

    return run(count, job.parallel, 0, [&](std::uint64_t index) {
        Evaluated ev;
        auto cand = extension_candidate(job, index);
        if (!cand) return ev;
        LinearCode ext;
        try {
            ext = extend_code({job.base, cand->c, cand->x});
        } catch (const PreconditionError&) {
            return ev;
        }
        const LinearCode image = ring == RingKind::F2U ? gray_image_code(ext) : ext;
        if (!verify_self_dual(image)) {
            ev.outcome = Outcome::SelfDualFail;
            return ev;
        }
        ev.hit.extension = std::move(*cand);
        ev.hit.seed = job.seed;
        ev.hit.index = index;
        ev.hit.report = report_for(image, job.count_through, job.min_distance);
        finish(ev, job.min_distance, job.target, novelty);
        return ev;
    });
}

}  // namespace sdc
