#include "intlab/verify.hpp"

#include "intlab/errors.hpp"
#include "intlab/measure.hpp"
#include "intlab/modal.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <thread>

namespace intlab {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

/// Type-directed expression generator over a model signature.
class ExprGen {
public:
    ExprGen(const IntensionalModel& model, std::uint64_t seed, unsigned depth)
        : model_(model), rng_(seed), depth_(depth) {
        for (const auto& [name, c] : model.constants) {
            by_type_[c.type].push_back(name);
        }
        for (const auto& sort : model.sorts) {
            if (std::holds_alternative<FiniteFrame>(model.frame(sort))) {
                finite_sorts_.push_back(sort);
            }
        }
    }

    ExprPtr gen_any() {
        const std::size_t roll = pick(rng_, 10);
        if (roll < 8) return gen(SemType::truth(), depth_);
        if (roll == 8) return gen(SemType::entity(), depth_);
        return gen(SemType::func(SemType::entity(), SemType::truth()), depth_);
    }

    ExprPtr gen(const SemType& type, unsigned depth) {
        if (depth == 0) return leaf(type);
        const std::size_t roll = pick(rng_, 100);
        if (type.is_truth()) {
            if (roll < 12) return leaf(type);
            if (roll < 22) {
                return Expr::logic(LogicBuiltin::Not, {gen(type, depth - 1)});
            }
            if (roll < 52) {
                static const LogicBuiltin binary[] = {LogicBuiltin::And, LogicBuiltin::Or,
                                                      LogicBuiltin::Implies, LogicBuiltin::Iff,
                                                      LogicBuiltin::Xor};
                const LogicBuiltin op = binary[pick(rng_, 5)];
                return Expr::logic(op, {gen(type, depth - 1), gen(type, depth - 1)});
            }
            if (roll < 72 && !finite_sorts_.empty()) {
                const SortId& sort = finite_sorts_[pick(rng_, finite_sorts_.size())];
                const ModalKind kind = pick(rng_, 2) == 0 ? ModalKind::Box : ModalKind::Dia;
                return Expr::modal(kind, sort, gen(type, depth - 1));
            }
            // Application producing t.
            const SemType arg = pick(rng_, 2) == 0 ? SemType::entity() : SemType::truth();
            return Expr::app(gen(SemType::func(arg, type), depth - 1), gen(arg, depth - 1));
        }
        if (type.is_func()) {
            if (roll < 30) {
                if (const ExprPtr c = constant_leaf(type)) return c;
            }
            const std::string var = fresh_var();
            scope_.emplace_back(var, type.arg());
            ExprPtr body = gen(type.result(), depth - 1);
            scope_.pop_back();
            return Expr::lam(var, type.arg(), std::move(body));
        }
        // Entities (and index types, when asked for): prefer leaves.
        return leaf(type);
    }

private:
    ExprPtr constant_leaf(const SemType& type) {
        const auto it = by_type_.find(type);
        if (it == by_type_.end() || it->second.empty()) return nullptr;
        return Expr::constant(it->second[pick(rng_, it->second.size())]);
    }

    ExprPtr scope_leaf(const SemType& type) {
        std::vector<const std::string*> hits;
        for (const auto& [name, t] : scope_) {
            if (t == type) hits.push_back(&name);
        }
        if (hits.empty()) return nullptr;
        return Expr::var(*hits[pick(rng_, hits.size())]);
    }

    ExprPtr leaf(const SemType& type) {
        // Bound variables first, then constants, then free entity variables.
        if (pick(rng_, 3) == 0) {
            if (const ExprPtr v = scope_leaf(type)) return v;
        }
        if (const ExprPtr c = constant_leaf(type)) return c;
        if (const ExprPtr v = scope_leaf(type)) return v;
        if (type.is_entity() && !model_.entities.empty()) {
            static const char* frees[] = {"x", "y"};
            return Expr::var(frees[pick(rng_, 2)]);
        }
        if (type.is_truth()) {
            // p or (not p) stands in when the signature has no t-typed leaf.
            if (const ExprPtr viaPred = pred_of_entity()) return viaPred;
            throw ModelError("expression generator needs a truth-valued constant or an "
                             "entity predicate in the model signature");
        }
        if (type.is_func()) {
            const std::string var = fresh_var();
            scope_.emplace_back(var, type.arg());
            ExprPtr body = leaf(type.result());
            scope_.pop_back();
            return Expr::lam(var, type.arg(), std::move(body));
        }
        throw ModelError("expression generator cannot produce a leaf of type " + type.to_string());
    }

    ExprPtr pred_of_entity() {
        const auto it = by_type_.find(SemType::func(SemType::entity(), SemType::truth()));
        if (it == by_type_.end() || it->second.empty() || model_.entities.empty()) return nullptr;
        ExprPtr pred = Expr::constant(it->second[pick(rng_, it->second.size())]);
        ExprPtr ent = leaf(SemType::entity());
        return Expr::app(std::move(pred), std::move(ent));
    }

    std::string fresh_var() {
        std::string name;
        do {
            name = "v" + std::to_string(counter_++);
        } while (model_.constants.count(name));
        return name;
    }

    const IntensionalModel& model_;
    std::mt19937_64 rng_;
    unsigned depth_;
    std::map<SemType, std::vector<std::string>> by_type_;
    std::vector<SortId> finite_sorts_;
    std::vector<std::pair<std::string, SemType>> scope_;
    unsigned counter_ = 0;
};

FiniteFrame random_frame(std::mt19937_64& rng, const SortId& sort, std::size_t n) {
    std::vector<std::string> worlds;
    for (std::size_t i = 1; i <= n; ++i) worlds.push_back("w" + std::to_string(i));
    std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
    for (auto& row : adj) {
        for (auto& x : row) x = static_cast<int>(rng() % 2);
    }
    return FiniteFrame(sort, std::move(worlds), std::move(adj));
}

std::vector<int> bits_of(std::size_t mask, std::size_t n) {
    std::vector<int> bits(n, 0);
    for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1 ? 1 : 0;
    return bits;
}

bool leq(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

}  // namespace

std::vector<ExprPtr> generate_expressions(const IntensionalModel& model,
                                          const VerifyOptions& options) {
    ExprGen gen(model, options.seed, options.depth);
    std::vector<ExprPtr> out;
    std::set<std::string> seen;
    const std::size_t max_tries = options.expr_count * 60 + 1000;
    for (std::size_t tries = 0; out.size() < options.expr_count && tries < max_tries; ++tries) {
        ExprPtr e = gen.gen_any();
        if (seen.insert(print_expr(e)).second) out.push_back(std::move(e));
    }
    return out;
}

SuiteResult run_hom_suite(const IntensionalModel& model, const VerifyOptions& options,
                          const EmbedCache* stale_cache) {
    SuiteResult result{"hom", 0, {}};
    const std::vector<ExprPtr> corpus = generate_expressions(model, options);

    const int jobs = std::max(1, options.jobs);
    std::vector<std::vector<std::string>> violations(jobs);
    std::vector<std::size_t> checks(jobs, 0);

    const auto worker = [&](int w) {
        for (std::size_t i = w; i < corpus.size(); i += jobs) {
            const std::string text = print_expr(corpus[i]);
            try {
                const TypedExpr typed = typecheck(corpus[i], model);
                const HomReport report = stale_cache ? check_hom(typed, model, *stale_cache)
                                                     : check_hom(typed, model);
                checks[w] += report.cases_checked;
                for (const auto& v : report.violations) {
                    violations[w].push_back("expr '" + text + "' at s=" + v.s.to_string() +
                                            ": disagreement");
                }
            } catch (const Error& err) {
                violations[w].push_back("expr '" + text + "': " + err.what());
            }
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto& t : threads) t.join();
    }
    for (int w = 0; w < jobs; ++w) {
        result.checks += checks[w];
        result.violations.insert(result.violations.end(), violations[w].begin(),
                                 violations[w].end());
    }
    std::sort(result.violations.begin(), result.violations.end());
    return result;
}

SuiteResult run_duality_suite(const IntensionalModel& model, const VerifyOptions& options) {
    SuiteResult result{"duality", 0, {}};
    const auto record = [&](const FiniteFrame& frame, const std::string& what) {
        const std::size_t n = frame.size();
        const std::size_t props = std::size_t{1} << n;
        for (std::size_t mask = 0; mask < props; ++mask) {
            const Vec v = proposition_vec(frame, bits_of(mask, n));
            ++result.checks;
            for (const auto& viol : duality_check(frame, v)) {
                result.violations.push_back(what + " world " + viol.where + " prop mask " +
                                            std::to_string(mask));
            }
        }
    };

    for (const auto& sort : model.sorts) {
        if (const auto* ff = std::get_if<FiniteFrame>(&model.frame(sort))) {
            if (ff->size() <= 12) record(*ff, "model frame '" + sort.label() + "'");
        }
    }

    std::mt19937_64 rng(options.seed);
    for (int k = 0; k < 20; ++k) {
        record(random_frame(rng, SortId("w"), 4), "random frame #" + std::to_string(k));
    }

    // Continuous fixture: truth on [0,10) except a Cantor set, proximity
    // window of radius 1, negation within the [0,10) universe.
    const ContinuousFrame frame(SortId("time"), Rational(-1), Rational(1));
    const MeasurableProp p =
        MeasurableProp(IntervalSet::interval(0, 10))
            .with_exception(NullSet::cantor(3, 5), Polarity::Remove);
    const IntervalSet universe = IntervalSet::interval(0, 10);
    const std::vector<Rational> ts{3, 4, 5};
    ++result.checks;
    for (const auto& viol : duality_check(frame, p, universe, ts)) {
        result.violations.push_back("continuous fixture at " + viol.where);
    }

    std::sort(result.violations.begin(), result.violations.end());
    return result;
}

SuiteResult run_axioms_suite(const IntensionalModel& model, const VerifyOptions& options) {
    SuiteResult result{"axioms", 0, {}};
    std::mt19937_64 rng(options.seed);

    // K: box(v -> w) and box(v) entail box(w), componentwise.
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + pick(rng, 4);  // 2..5 worlds
        const FiniteFrame frame = random_frame(rng, SortId("w"), n);
        const auto v = bits_of(rng() & ((1u << n) - 1), n);
        const auto w = bits_of(rng() & ((1u << n) - 1), n);
        std::vector<int> impl(n);
        for (std::size_t i = 0; i < n; ++i) impl[i] = (1 - v[i]) | w[i];

        const auto box_impl = proposition_bits(frame, box_finite(frame, proposition_vec(frame, impl)));
        const auto box_v = proposition_bits(frame, box_finite(frame, proposition_vec(frame, v)));
        const auto box_w = proposition_bits(frame, box_finite(frame, proposition_vec(frame, w)));
        ++result.checks;
        for (std::size_t i = 0; i < n; ++i) {
            if ((box_impl[i] & box_v[i]) > box_w[i]) {
                result.violations.push_back("K fails at trial " + std::to_string(trial) +
                                            " world " + std::to_string(i + 1));
            }
        }

        // Monotonicity on the same frame: v and (v or w) are ordered.
        std::vector<int> vw(n);
        for (std::size_t i = 0; i < n; ++i) vw[i] = v[i] | w[i];
        const auto box_vw = proposition_bits(frame, box_finite(frame, proposition_vec(frame, vw)));
        const auto dia_v = proposition_bits(frame, dia_finite(frame, proposition_vec(frame, v)));
        const auto dia_vw = proposition_bits(frame, dia_finite(frame, proposition_vec(frame, vw)));
        ++result.checks;
        if (!leq(box_v, box_vw) || !leq(dia_v, dia_vw)) {
            result.violations.push_back("monotonicity fails at trial " + std::to_string(trial));
        }
    }

    // Coincidence of box and dia on every out-degree-one frame with <= 4
    // worlds, all propositions (exhaustive).
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::size_t> target(n, 0);
        while (true) {
            std::vector<std::string> worlds;
            for (std::size_t i = 1; i <= n; ++i) worlds.push_back("w" + std::to_string(i));
            std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
            for (std::size_t i = 0; i < n; ++i) adj[i][target[i]] = 1;
            const FiniteFrame frame(SortId("w"), worlds, adj);
            for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
                const Vec v = proposition_vec(frame, bits_of(mask, n));
                ++result.checks;
                if (!(box_finite(frame, v) == dia_finite(frame, v))) {
                    result.violations.push_back("chain coincidence fails on " +
                                                std::to_string(n) + " worlds, prop mask " +
                                                std::to_string(mask));
                }
            }
            std::size_t i = n;
            bool advanced = false;
            while (i > 0) {
                --i;
                if (++target[i] < n) {
                    advanced = true;
                    break;
                }
                target[i] = 0;
            }
            if (!advanced) break;
        }
    }

    // T on reflexive frames: box(v) <= v.
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + pick(rng, 4);
        FiniteFrame base = random_frame(rng, SortId("w"), n);
        auto adj = base.adjacency();
        for (std::size_t i = 0; i < n; ++i) adj[i][i] = 1;
        const FiniteFrame frame(SortId("w"), base.worlds(), adj);
        const auto v = bits_of(rng() & ((1u << n) - 1), n);
        const auto box_v = proposition_bits(frame, box_finite(frame, proposition_vec(frame, v)));
        ++result.checks;
        if (!leq(box_v, v)) {
            result.violations.push_back("T fails on a reflexive frame at trial " +
                                        std::to_string(trial));
        }
    }

    if (options.reflexive) {
        for (const auto& sort : model.sorts) {
            const auto* ff = std::get_if<FiniteFrame>(&model.frame(sort));
            if (!ff) continue;
            bool reflexive = true;
            for (std::size_t i = 0; i < ff->size(); ++i) {
                if (!ff->accessible(i, i)) reflexive = false;
            }
            if (!reflexive) {
                result.violations.push_back("frame '" + sort.label() +
                                            "' is not reflexive (T subcheck requested)");
                continue;
            }
            const std::size_t props = std::size_t{1} << ff->size();
            for (std::size_t mask = 0; mask < props && mask < 4096; ++mask) {
                const auto v = bits_of(mask, ff->size());
                const auto bx =
                    proposition_bits(*ff, box_finite(*ff, proposition_vec(*ff, v)));
                ++result.checks;
                if (!leq(bx, v)) {
                    result.violations.push_back("T fails on model frame '" + sort.label() +
                                                "' prop mask " + std::to_string(mask));
                }
            }
        }
    }

    std::sort(result.violations.begin(), result.violations.end());
    return result;
}

std::vector<SuiteResult> run_suites(const IntensionalModel& model, const std::string& which,
                                    const VerifyOptions& options) {
    std::vector<SuiteResult> out;
    const bool all = which == "all";
    if (all || which == "hom") out.push_back(run_hom_suite(model, options));
    if (all || which == "duality") out.push_back(run_duality_suite(model, options));
    if (all || which == "axioms") out.push_back(run_axioms_suite(model, options));
    if (out.empty()) {
        throw ModelError("unknown suite '" + which + "' (expected hom | duality | axioms | all)");
    }
    return out;
}

}  // namespace intlab
