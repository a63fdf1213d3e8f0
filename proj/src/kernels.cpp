#include "sdc/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <limits>

namespace sdc::kernels {

namespace {

template <std::size_t W>
struct Binary {
    using Vec = std::array<std::uint64_t, W>;
    static constexpr int kScalars = 1;

    static Vec load(const PackedCode& c, std::size_t row, int) {
        Vec v{};
        for (std::size_t i = 0; i < W; ++i) v[i] = c.plus[row * c.words + i];
        return v;
    }
    static Vec zero() { return Vec{}; }
    static void add(Vec& acc, const Vec& x) {
        for (std::size_t i = 0; i < W; ++i) acc[i] ^= x[i];
    }
    static unsigned weight(const Vec& v) {
        unsigned w = 0;
        for (std::size_t i = 0; i < W; ++i) w += static_cast<unsigned>(std::popcount(v[i]));
        return w;
    }
    static unsigned weight_on(const Vec& v, const std::uint64_t* mask) {
        unsigned w = 0;
        for (std::size_t i = 0; i < W; ++i) w += static_cast<unsigned>(std::popcount(v[i] & mask[i]));
        return w;
    }
};

// Bit-sliced F3: p marks entries equal to 1, m entries equal to 2.
template <std::size_t W>
struct Ternary {
    struct Vec {
        std::array<std::uint64_t, W> p{}, m{};
    };
    static constexpr int kScalars = 2;

    static Vec load(const PackedCode& c, std::size_t row, int scalar) {
        Vec v;
        for (std::size_t i = 0; i < W; ++i) {
            v.p[i] = c.plus[row * c.words + i];
            v.m[i] = c.minus[row * c.words + i];
        }
        if (scalar == 1) std::swap(v.p, v.m);
        return v;
    }
    static Vec zero() { return Vec{}; }
    static void add(Vec& acc, const Vec& x) {
        for (std::size_t i = 0; i < W; ++i) {
            const std::uint64_t t = (acc.p[i] | x.m[i]) ^ (acc.m[i] | x.p[i]);
            const std::uint64_t p = (acc.m[i] | x.m[i]) ^ t;
            const std::uint64_t m = (acc.p[i] | x.p[i]) ^ t;
            acc.p[i] = p;
            acc.m[i] = m;
        }
    }
    static unsigned weight(const Vec& v) {
        unsigned w = 0;
        for (std::size_t i = 0; i < W; ++i) w += static_cast<unsigned>(std::popcount(v.p[i] | v.m[i]));
        return w;
    }
    static unsigned weight_on(const Vec& v, const std::uint64_t* mask) {
        unsigned w = 0;
        for (std::size_t i = 0; i < W; ++i) w += static_cast<unsigned>(std::popcount((v.p[i] | v.m[i]) & mask[i]));
        return w;
    }
};

template <class A>
std::vector<typename A::Vec> load_rows(const PackedCode& c) {
    std::vector<typename A::Vec> rows;
    rows.reserve(c.k);
    for (std::size_t i = 0; i < c.k; ++i) rows.push_back(A::load(c, i, 0));
    return rows;
}

// --- full distribution -----------------------------------------------------

template <class A>
void walk_binary(const std::vector<typename A::Vec>& rows, std::size_t low, typename A::Vec acc, std::uint64_t* hist) {
    ++hist[A::weight(acc)];
    const std::uint64_t steps = std::uint64_t{1} << low;
    for (std::uint64_t i = 1; i < steps; ++i) {
        A::add(acc, rows[static_cast<std::size_t>(std::countr_zero(i))]);
        ++hist[A::weight(acc)];
    }
}

template <class A>
void walk_ternary(const std::vector<typename A::Vec>& rows, std::size_t low, typename A::Vec acc, std::uint64_t* hist) {
    ++hist[A::weight(acc)];
    std::vector<std::uint8_t> digit(low + 1, 0);
    std::uint64_t steps = 1;
    for (std::size_t i = 0; i < low; ++i) steps *= 3;
    for (std::uint64_t s = 1; s < steps; ++s) {
        std::size_t j = 0;
        while (true) {
            // a digit step v -> v+1 (mod 3) always adds the row once
            A::add(acc, rows[j]);
            if (++digit[j] < 3) break;
            digit[j] = 0;
            ++j;
        }
        ++hist[A::weight(acc)];
    }
}

template <class A>
typename A::Vec chunk_start(const std::vector<typename A::Vec>& rows, std::size_t low, std::uint64_t chunk, int radix) {
    auto acc = A::zero();
    for (std::size_t b = low; chunk != 0; ++b, chunk /= static_cast<std::uint64_t>(radix))
        for (std::uint64_t t = 0; t < chunk % static_cast<std::uint64_t>(radix); ++t) A::add(acc, rows[b]);
    return acc;
}

template <class A>
std::vector<std::uint64_t> distribution_impl(const PackedCode& c, bool parallel) {
    const auto rows = load_rows<A>(c);
    const int radix = c.field == Field::F2 ? 2 : 3;
    const std::size_t top = parallel ? std::min<std::size_t>(c.k, radix == 2 ? 10 : 6) : 0;
    const std::size_t low = c.k - top;
    std::uint64_t chunks = 1;
    for (std::size_t i = 0; i < top; ++i) chunks *= static_cast<std::uint64_t>(radix);

    auto walk = [&](std::uint64_t chunk, std::uint64_t* hist) {
        const auto start = chunk_start<A>(rows, low, chunk, radix);
        if (radix == 2)
            walk_binary<A>(rows, low, start, hist);
        else
            walk_ternary<A>(rows, low, start, hist);
    };

    std::vector<std::uint64_t> total(c.n + 1, 0);
    if (!parallel) {
        walk(0, total.data());
        return total;
    }
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(c.n + 1, 0);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t chunk = 0; chunk < static_cast<std::int64_t>(chunks); ++chunk)
            walk(static_cast<std::uint64_t>(chunk), local.data());
#pragma omp critical
        for (std::size_t w = 0; w <= c.n; ++w) total[w] += local[w];
    }
    return total;
}

// --- information-set enumeration ---------------------------------------------

template <class A>
struct SetData {
    std::vector<typename A::Vec> addends;  // row-major: row * kScalars + scalar
    const std::uint64_t* mask;
};

template <class A>
std::vector<SetData<A>> load_sets(const InfoSetPlan& plan) {
    std::vector<SetData<A>> sets;
    for (std::size_t s = 0; s < plan.sets(); ++s) {
        SetData<A> d;
        const auto& g = plan.generators[s];
        for (std::size_t i = 0; i < g.k; ++i)
            for (int sc = 0; sc < A::kScalars; ++sc) d.addends.push_back(A::load(g, i, sc));
        d.mask = plan.masks[s].data();
        sets.push_back(std::move(d));
    }
    return sets;
}

// Visits every combination of `remaining` further rows with index >= start.
template <class A, class Visit>
void enumerate(const std::vector<typename A::Vec>& addends, std::size_t k, std::size_t start, std::size_t remaining,
               const typename A::Vec& acc, Visit& visit) {
    if (remaining == 0) {
        visit(acc);
        return;
    }
    for (std::size_t p = start; p + remaining <= k; ++p)
        for (int sc = 0; sc < A::kScalars; ++sc) {
            auto next = acc;
            A::add(next, addends[p * A::kScalars + static_cast<std::size_t>(sc)]);
            enumerate<A>(addends, k, p + 1, remaining - 1, next, visit);
        }
}

// One unit of work: messages of weight `w` on set `set` whose first nonzero
// position is `first` with scalar `scalar`.
struct Task {
    std::size_t set, w, first;
    int scalar;
};

// The first nonzero coefficient is normalised to 1: the other scalar
// multiples of a codeword have the same weight and the same restrictions.
std::vector<Task> make_tasks(std::size_t sets, std::size_t k, std::size_t w) {
    std::vector<Task> tasks;
    for (std::size_t s = 0; s < sets; ++s)
        for (std::size_t p = 0; p + w <= k; ++p) tasks.push_back({s, w, p, 0});
    return tasks;
}

template <class A, class Visit>
void run_task(const std::vector<SetData<A>>& sets, std::size_t k, const Task& t, Visit& visit) {
    const auto& addends = sets[t.set].addends;
    const auto& first = addends[t.first * A::kScalars + static_cast<std::size_t>(t.scalar)];
    enumerate<A>(addends, k, t.first + 1, t.w - 1, first, visit);
}

template <class A>
std::vector<std::uint64_t> low_counts_impl(const InfoSetPlan& plan, std::size_t max_weight, bool parallel) {
    const auto sets = load_sets<A>(plan);
    const std::size_t m = sets.size();
    const std::size_t k = plan.generators.front().k;
    const std::size_t n = plan.generators.front().n;
    const std::size_t bound = std::min(max_weight, n);
    const std::size_t t = std::min(bound / m, k);

    std::vector<Task> tasks;
    for (std::size_t w = 1; w <= t; ++w) {
        auto more = make_tasks(m, k, w);
        tasks.insert(tasks.end(), more.begin(), more.end());
    }

    auto tally = [&](const Task& task, std::uint64_t* hist) {
        auto visit = [&](const typename A::Vec& c) {
            const unsigned wt = A::weight(c);
            if (wt > bound) return;
            for (std::size_t j = 0; j < task.set; ++j)
                if (A::weight_on(c, sets[j].mask) <= t) return;
            hist[wt] += A::kScalars;
        };
        run_task<A>(sets, k, task, visit);
    };

    std::vector<std::uint64_t> total(max_weight + 1, 0);
    total[0] = 1;
    if (!parallel) {
        for (const auto& task : tasks) tally(task, total.data());
        return total;
    }
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(max_weight + 1, 0);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(tasks.size()); ++i)
            tally(tasks[static_cast<std::size_t>(i)], local.data());
#pragma omp critical
        for (std::size_t w = 0; w <= max_weight; ++w) total[w] += local[w];
    }
    return total;
}

template <class A>
std::size_t min_distance_impl(const InfoSetPlan& plan, bool parallel) {
    const auto sets = load_sets<A>(plan);
    const std::size_t m = sets.size();
    const std::size_t k = plan.generators.front().k;
    if (k == 0) return 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();

    for (std::size_t t = 1; t <= k; ++t) {
        for (std::size_t s = 0; s < m; ++s) {
            const auto tasks = make_tasks(1, k, t);
            auto search = [&](const Task& base, std::size_t& local_best) {
                Task task = base;
                task.set = s;
                auto visit = [&](const typename A::Vec& c) {
                    const std::size_t wt = A::weight(c);
                    if (wt < local_best) local_best = wt;
                };
                run_task<A>(sets, k, task, visit);
            };
            if (parallel) {
                std::size_t round_best = best;
#pragma omp parallel for schedule(dynamic, 1) reduction(min : round_best)
                for (std::int64_t i = 0; i < static_cast<std::int64_t>(tasks.size()); ++i)
                    search(tasks[static_cast<std::size_t>(i)], round_best);
                best = round_best;
            } else {
                for (const auto& task : tasks) search(task, best);
            }
            // unseen codewords weigh >= t+1 on sets 0..s and >= t on the rest
            const std::size_t lower = (s + 1) * (t + 1) + (m - s - 1) * t;
            if (best <= lower) return best;
        }
    }
    return best;
}

template <template <std::size_t> class A, class Fn>
auto dispatch_words(std::size_t words, Fn&& fn) {
    switch (words) {
        case 1: return fn(A<1>{});
        case 2: return fn(A<2>{});
        case 3: return fn(A<3>{});
        default: return fn(A<4>{});
    }
}

template <class Fn>
auto dispatch(Field field, std::size_t words, Fn&& fn) {
    if (field == Field::F2) return dispatch_words<Binary>(words, fn);
    return dispatch_words<Ternary>(words, fn);
}

const PackedCode& first_generator(const InfoSetPlan& plan) {
    if (plan.sets() == 0) throw UnsupportedShape("information-set plan is empty");
    return plan.generators.front();
}

}  // namespace

std::vector<std::uint64_t> weight_distribution_serial(const PackedCode& code) {
    return dispatch(code.field, code.words,
                    [&](auto a) { return distribution_impl<decltype(a)>(code, false); });
}

std::vector<std::uint64_t> weight_distribution_parallel(const PackedCode& code) {
    return dispatch(code.field, code.words, [&](auto a) { return distribution_impl<decltype(a)>(code, true); });
}

std::vector<std::uint64_t> low_weight_counts_serial(const InfoSetPlan& plan, std::size_t max_weight) {
    const auto& g = first_generator(plan);
    return dispatch(g.field, g.words, [&](auto a) { return low_counts_impl<decltype(a)>(plan, max_weight, false); });
}

std::vector<std::uint64_t> low_weight_counts_parallel(const InfoSetPlan& plan, std::size_t max_weight) {
    const auto& g = first_generator(plan);
    return dispatch(g.field, g.words, [&](auto a) { return low_counts_impl<decltype(a)>(plan, max_weight, true); });
}

std::size_t min_distance_serial(const InfoSetPlan& plan) {
    const auto& g = first_generator(plan);
    return dispatch(g.field, g.words, [&](auto a) { return min_distance_impl<decltype(a)>(plan, false); });
}

std::size_t min_distance_parallel(const InfoSetPlan& plan) {
    const auto& g = first_generator(plan);
    return dispatch(g.field, g.words, [&](auto a) { return min_distance_impl<decltype(a)>(plan, true); });
}

}  // namespace sdc::kernels
