#include "talex/homsearch.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>

#include "talex/error.hpp"

namespace talex {

void Homomorphism::validate(const KnotPresentation& p) const
{
    if (!target)
        throw InvalidArgument("homomorphism without a target group");
    if (images.size() != static_cast<std::size_t>(p.generator_count))
        throw InvalidArgument("homomorphism has " + std::to_string(images.size()) + " images for "
            + std::to_string(p.generator_count) + " generators");
    for (Element x : images)
        if (x >= target->order())
            throw InvalidArgument("image outside the target group");
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        if (evaluate_word(*target, images, p.relators[r]) != target->identity())
            throw InvalidArgument("relator " + std::to_string(r + 1) + " does not map to the identity");
}

Element evaluate_word(const FiniteGroup& g, const std::vector<Element>& images, const FreeWord& w)
{
    Element x = g.identity();
    for (int letter : w) {
        const auto j = static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1;
        x = g.mul(x, letter > 0 ? images.at(j) : g.inverse(images.at(j)));
    }
    return x;
}

std::vector<Element> image_subgroup(const FiniteGroup& g, const std::vector<Element>& images)
{
    return generated_subgroup(g, images);
}

namespace {

    struct Plan {
        std::vector<std::size_t> order;               // generator indices, assignment order
        std::vector<std::vector<std::size_t>> checks; // relators completed at each step
    };

    // Greedy order: next is the generator completing the most relators, then
    // the one sharing the most relators with assigned generators.
    Plan plan_search(const KnotPresentation& p)
    {
        const auto m = static_cast<std::size_t>(p.generator_count);
        std::vector<std::set<std::size_t>> uses(p.relators.size());
        for (std::size_t r = 0; r < p.relators.size(); ++r)
            for (int letter : p.relators[r])
                uses[r].insert(static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1);
        Plan plan;
        std::vector<bool> assigned(m, false);
        std::vector<bool> done(p.relators.size(), false);
        for (std::size_t step = 0; step < m; ++step) {
            std::size_t best = m;
            std::pair<std::size_t, std::size_t> best_score { 0, 0 };
            for (std::size_t x = 0; x < m; ++x) {
                if (assigned[x])
                    continue;
                std::size_t completes = 0, touches = 0;
                for (std::size_t r = 0; r < uses.size(); ++r) {
                    if (done[r] || !uses[r].count(x))
                        continue;
                    bool rest = true;
                    bool any = false;
                    for (auto y : uses[r]) {
                        if (y == x)
                            continue;
                        rest = rest && assigned[y];
                        any = any || assigned[y];
                    }
                    completes += rest;
                    touches += any;
                }
                const std::pair<std::size_t, std::size_t> score { completes, touches };
                if (best == m || score > best_score) {
                    best = x;
                    best_score = score;
                }
            }
            assigned[best] = true;
            plan.order.push_back(best);
            std::vector<std::size_t> now;
            for (std::size_t r = 0; r < uses.size(); ++r) {
                if (done[r])
                    continue;
                if (std::all_of(uses[r].begin(), uses[r].end(), [&](std::size_t y) { return assigned[y]; })) {
                    done[r] = true;
                    now.push_back(r);
                }
            }
            plan.checks.push_back(std::move(now));
        }
        return plan;
    }

    struct ClassSearch {
        const FiniteGroup& group;
        const KnotPresentation& presentation;
        const Plan& plan;
        const std::vector<Element>& members;
        std::atomic<std::uint64_t>& nodes;
        std::uint64_t budget;
        std::vector<Element> images;
        std::vector<std::vector<Element>> found;

        void run(std::size_t step)
        {
            if (step == plan.order.size()) {
                if (image_subgroup(group, images).size() == group.order())
                    found.push_back(images);
                return;
            }
            const auto x = plan.order[step];
            for (Element candidate : members) {
                if (nodes.fetch_add(1, std::memory_order_relaxed) >= budget)
                    throw BudgetExceeded(budget);
                images[x] = candidate;
                bool ok = true;
                for (auto r : plan.checks[step])
                    if (evaluate_word(group, images, presentation.relators[r]) != group.identity()) {
                        ok = false;
                        break;
                    }
                if (ok)
                    run(step + 1);
            }
        }
    };

    std::vector<Element> canonical_conjugate(const FiniteGroup& g, const std::vector<Element>& images)
    {
        std::vector<Element> best = images, trial(images.size());
        for (Element h = 0; h < g.order(); ++h) {
            for (std::size_t i = 0; i < images.size(); ++i)
                trial[i] = g.conjugate(images[i], h);
            if (trial < best)
                best = trial;
        }
        return best;
    }

} // namespace

std::vector<Homomorphism> find_meridional_surjections(const KnotPresentation& p, const FiniteGroup& g,
    const SearchOptions& options)
{
    p.validate();
    if (!p.meridional)
        throw InvalidArgument("surjection search needs a meridional presentation");
    std::vector<ConjugacyClass> classes;
    for (auto& c : conjugacy_classes(g))
        if (normal_closure(g, { c.representative }).size() == g.order())
            classes.push_back(std::move(c));

    const auto plan = plan_search(p);
    const auto m = static_cast<std::size_t>(p.generator_count);
    std::atomic<std::uint64_t> nodes { 0 };
    std::vector<std::vector<std::vector<Element>>> per_class(classes.size());
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(classes.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t ci = 0; ci < count; ++ci) {
        try {
            const auto& cls = classes[static_cast<std::size_t>(ci)];
            ClassSearch search { g, p, plan, cls.members, nodes, options.budget, std::vector<Element>(m, g.identity()), {} };
            if (options.up_to_conjugacy) {
                // Every orbit meets the tuples whose first assigned generator is the representative.
                search.images[plan.order[0]] = cls.representative;
                bool ok = true;
                for (auto r : plan.checks[0])
                    ok = ok && evaluate_word(g, search.images, p.relators[r]) == g.identity();
                if (ok)
                    search.run(1);
            } else {
                search.run(0);
            }
            per_class[static_cast<std::size_t>(ci)] = std::move(search.found);
        } catch (...) {
#pragma omp critical
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    std::set<std::vector<Element>> tuples;
    for (const auto& found : per_class)
        for (const auto& images : found)
            tuples.insert(options.up_to_conjugacy ? canonical_conjugate(g, images) : images);

    auto target = std::make_shared<const FiniteGroup>(g);
    std::vector<Homomorphism> out;
    out.reserve(tuples.size());
    for (const auto& images : tuples)
        out.push_back(Homomorphism { target, images });
    return out;
}

} // namespace talex
