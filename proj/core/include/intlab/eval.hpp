#ifndef INTLAB_EVAL_HPP
#define INTLAB_EVAL_HPP

#include "intlab/embed.hpp"
#include "intlab/lambda.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace intlab {

/// Precomputed intension operators (one linear map per constant). The vector
/// evaluator reads constants through this cache when present, so a model
/// edited after the cache was built is detectable by the homomorphism check.
struct EmbedCache {
    std::map<std::string, LinMap> intensions;
    static EmbedCache build(const IntensionalModel& model);
};

/// Evaluates typed expressions both set-theoretically and vector-
/// algebraically. Results are memoized per (node, assignment, index); use
/// one Evaluator per worker thread.
class Evaluator {
public:
    explicit Evaluator(const IntensionalModel& model) : model_(model) {}
    Evaluator(const IntensionalModel& model, EmbedCache cache)
        : model_(model), cache_(std::move(cache)) {}

    /// The set-theoretic denotation at compound index s under assignment g.
    DomainValue formal(const TypedExpr& e, const Assignment& g, const DomainValue& s);

    /// The vector-model denotation: constants embed their extensions,
    /// application is linear-map application, connectives are operator
    /// matrices on tensored truth vectors, modal operators threshold the
    /// accumulated proposition vector, and lambdas lift their tables.
    VecValue vector(const TypedExpr& e, const Assignment& g, const DomainValue& s);

    const IntensionalModel& model() const { return model_; }

private:
    int body_bit_at(const TypedExpr& body, const Assignment& g, const DomainValue& s);

    const IntensionalModel& model_;
    std::optional<EmbedCache> cache_;
    using Key = std::tuple<const void*, Assignment, DomainValue>;
    std::map<Key, DomainValue> formal_memo_;
    std::map<Key, VecValue> vector_memo_;
};

/// Convenience single-shot wrappers.
DomainValue eval_formal(const TypedExpr& e, const IntensionalModel& model, const Assignment& g,
                        const DomainValue& s);
VecValue eval_vector(const TypedExpr& e, const IntensionalModel& model, const Assignment& g,
                     const DomainValue& s);

struct HomViolation {
    DomainValue s;
    Assignment g;
    std::string detail;
};

struct HomReport {
    std::size_t cases_checked = 0;
    std::vector<HomViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Exhaustively asserts embed(formal(e,g,s)) == vector(e,g,s) over every
/// compound index and every assignment of entities to the free variables.
/// Violations are data, not errors.
HomReport check_hom(const TypedExpr& e, const IntensionalModel& model);
HomReport check_hom(const TypedExpr& e, const IntensionalModel& model, const EmbedCache& cache);

}  // namespace intlab

#endif  // INTLAB_EVAL_HPP
