#include "intlab/eval.hpp"

#include "intlab/errors.hpp"
#include "intlab/modal.hpp"
#include "intlab/multisort.hpp"

namespace intlab {

EmbedCache EmbedCache::build(const IntensionalModel& model) {
    EmbedCache cache;
    for (const auto& [name, c] : model.constants) {
        cache.intensions.emplace(name, intension_operator(c, model));
    }
    return cache;
}

namespace {

const void* node_id(const TypedExpr& e) { return e.expr().get(); }

}  // namespace

DomainValue Evaluator::formal(const TypedExpr& e, const Assignment& g, const DomainValue& s) {
    const Key key{node_id(e), g, s};
    if (const auto it = formal_memo_.find(key); it != formal_memo_.end()) return it->second;

    DomainValue out = DomainValue::tru(0);
    switch (e.expr()->kind()) {
        case Expr::Kind::Ident:
            throw UnboundVariable("unresolved identifier '" + e.expr()->name() + "'");
        case Expr::Kind::Const: out = model_.intension_at(e.expr()->name(), s); break;
        case Expr::Kind::Var: out = g.at(e.expr()->name()); break;
        case Expr::Kind::App: {
            const DomainValue fnv = formal(e.children()[0], g, s);
            const DomainValue argv = formal(e.children()[1], g, s);
            out = fnv.func_apply(argv);
            break;
        }
        case Expr::Kind::Lam: {
            const SemType& ann = e.expr()->lam_ann();
            const SemType& res = e.children()[0].type();
            std::vector<FuncEntry> entries;
            for (const auto& d : enumerate_domain(ann, model_)) {
                const Assignment gx =
                    d.is_ent() ? variant(g, e.expr()->name(), d) : g.bind(e.expr()->name(), d);
                entries.push_back(FuncEntry{d, formal(e.children()[0], gx, s)});
            }
            out = DomainValue::func(ann, res, std::move(entries));
            break;
        }
        case Expr::Kind::Logic: {
            std::vector<int> bits;
            for (const auto& c : e.children()) bits.push_back(formal(c, g, s).tru_bit());
            out = DomainValue::tru(builtin_table(e.expr()->logic_op()).eval(bits));
            break;
        }
        case Expr::Kind::Modal: {
            const SortId& sort = e.expr()->modal_sort();
            const CompoundPred pred = [&](const DomainValue& sp) {
                return formal(e.children()[0], g, sp).tru_bit();
            };
            const int v = e.expr()->modal_kind() == ModalKind::Box
                              ? box_sort(model_, sort, pred, s)
                              : dia_sort(model_, sort, pred, s);
            out = DomainValue::tru(v);
            break;
        }
    }
    formal_memo_.emplace(key, out);
    return out;
}

int Evaluator::body_bit_at(const TypedExpr& body, const Assignment& g, const DomainValue& s) {
    return truth_bit(vector(body, g, s).vec());
}

VecValue Evaluator::vector(const TypedExpr& e, const Assignment& g, const DomainValue& s) {
    const Key key{node_id(e), g, s};
    if (const auto it = vector_memo_.find(key); it != vector_memo_.end()) return it->second;

    VecValue out = Vec::zero(VSpace::of(SemType::truth()));
    switch (e.expr()->kind()) {
        case Expr::Kind::Ident:
            throw UnboundVariable("unresolved identifier '" + e.expr()->name() + "'");
        case Expr::Kind::Const: {
            const std::string& name = e.expr()->name();
            if (cache_) {
                const auto it = cache_->intensions.find(name);
                if (it == cache_->intensions.end()) {
                    throw ModelError("no cached intension for constant '" + name + "'");
                }
                out = apply_lin(it->second, embed_compound(s));
            } else {
                out = embed(model_.intension_at(name, s), e.type(), model_);
            }
            break;
        }
        case Expr::Kind::Var: out = embed(g.at(e.expr()->name()), e.type(), model_); break;
        case Expr::Kind::App: {
            const VecValue fnv = vector(e.children()[0], g, s);
            const VecValue argv = vector(e.children()[1], g, s);
            out = apply_lin_value(fnv.lin(), argv);
            break;
        }
        case Expr::Kind::Lam: {
            // The lift of the table built by the set-theoretic lambda clause.
            out = embed(formal(e, g, s), e.type(), model_);
            break;
        }
        case Expr::Kind::Logic: {
            std::vector<Vec> args;
            for (const auto& c : e.children()) args.push_back(vector(c, g, s).vec());
            out = apply_logic(op_matrix(builtin_table(e.expr()->logic_op())), args);
            break;
        }
        case Expr::Kind::Modal: {
            const SortId& sort = e.expr()->modal_sort();
            const SortFrame& f = model_.frame(sort);
            if (const auto* ff = std::get_if<FiniteFrame>(&f)) {
                // Embedded proposition vector over the sort's slice at s,
                // thresholded, projected back to the s-component.
                std::vector<int> bits(ff->size());
                for (std::size_t i = 0; i < ff->size(); ++i) {
                    bits[i] = body_bit_at(e.children()[0], g,
                                          s.compound_with(sort, ff->worlds()[i]));
                }
                const Vec prop = proposition_vec(*ff, bits);
                const Vec modal = e.expr()->modal_kind() == ModalKind::Box
                                      ? box_finite(*ff, prop)
                                      : dia_finite(*ff, prop);
                const BasisLabel at(DomainValue::idx(sort, s.compound_at(sort)));
                out = truth_vec(modal.coeff(at) == 1 ? 1 : 0);
            } else if (const auto* cf = std::get_if<CountableFrame>(&f)) {
                const CountableProp prop = CountableProp::rule([&](long long i) {
                    return body_bit_at(e.children()[0], g,
                                       s.compound_with(sort, std::to_string(i)));
                });
                long long i = 0;
                try {
                    i = std::stoll(s.compound_at(sort));
                } catch (const std::exception&) {
                    throw ModelError("countable index label '" + s.compound_at(sort) +
                                     "' is not an integer");
                }
                const int v = e.expr()->modal_kind() == ModalKind::Box
                                  ? box_countable(*cf, prop, i)
                                  : dia_countable(*cf, prop, i);
                out = truth_vec(v);
            } else {
                throw ModelError("modal operators over continuous sorts are not supported in "
                                 "expressions; use the modal command/API directly");
            }
            break;
        }
    }
    vector_memo_.emplace(key, out);
    return out;
}

DomainValue eval_formal(const TypedExpr& e, const IntensionalModel& model, const Assignment& g,
                        const DomainValue& s) {
    Evaluator ev(model);
    return ev.formal(e, g, s);
}

VecValue eval_vector(const TypedExpr& e, const IntensionalModel& model, const Assignment& g,
                     const DomainValue& s) {
    Evaluator ev(model);
    return ev.vector(e, g, s);
}

namespace {

HomReport check_hom_impl(const TypedExpr& e, const IntensionalModel& model,
                         std::optional<EmbedCache> cache) {
    Evaluator ev = cache ? Evaluator(model, std::move(*cache)) : Evaluator(model);
    HomReport report;

    const auto space = compound_index_space(model);
    const auto vars = free_vars(e.expr());
    std::vector<Assignment> assignments;
    assignments.emplace_back();
    for (const auto& v : vars) {
        std::vector<Assignment> next;
        for (const auto& g : assignments) {
            for (const auto& ent : model.entities) {
                next.push_back(variant(g, v, DomainValue::ent(ent)));
            }
        }
        assignments = std::move(next);
        if (assignments.empty()) break;  // no entities: nothing to check
    }

    for (const auto& s : space) {
        for (const auto& g : assignments) {
            const DomainValue f = ev.formal(e, g, s);
            const VecValue lhs = embed(f, e.type(), model);
            const VecValue rhs = ev.vector(e, g, s);
            ++report.cases_checked;
            if (!(lhs == rhs)) {
                report.violations.push_back(HomViolation{
                    s, g,
                    "formal embeds to:\n" + lhs.to_text() + "vector route gives:\n" +
                        rhs.to_text()});
            }
        }
    }
    return report;
}

}  // namespace

HomReport check_hom(const TypedExpr& e, const IntensionalModel& model) {
    return check_hom_impl(e, model, std::nullopt);
}

HomReport check_hom(const TypedExpr& e, const IntensionalModel& model, const EmbedCache& cache) {
    return check_hom_impl(e, model, cache);
}

}  // namespace intlab
