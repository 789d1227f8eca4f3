#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <intlab/errors.hpp>
#include <intlab/eval.hpp>
#include <intlab/verify.hpp>

#include "helpers.hpp"

using namespace intlab;
using testutil::four_world_model;
using testutil::two_sort_model;

namespace {

DomainValue world(const std::string& label) {
    return DomainValue::compound({{SortId("w"), label}});
}

TypedExpr typed(const std::string& text, const IntensionalModel& m) {
    return typecheck(parse_expr(text), m);
}

}  // namespace

TEST_CASE("parsing application and lambda shapes") {
    const auto m = four_world_model();
    SUBCASE("P(x): constant applied to a free variable") {
        const ExprPtr e = resolve(parse_expr("happy(x)"), m);
        REQUIRE(e->kind() == Expr::Kind::App);
        CHECK(e->fn()->kind() == Expr::Kind::Const);
        CHECK(e->fn()->name() == "happy");
        CHECK(e->arg()->kind() == Expr::Kind::Var);
        CHECK(e->arg()->name() == "x");
    }
    SUBCASE("lambda with entity annotation") {
        const ExprPtr e = resolve(parse_expr("\\x:e. happy(x)"), m);
        REQUIRE(e->kind() == Expr::Kind::Lam);
        CHECK(e->name() == "x");
        CHECK(e->lam_ann() == SemType::entity());
        REQUIRE(e->body()->kind() == Expr::Kind::App);
        CHECK(e->body()->arg()->kind() == Expr::Kind::Var);
    }
    SUBCASE("modal over a conjunction") {
        const ExprPtr e = parse_expr("box[w] (p and q)");
        REQUIRE(e->kind() == Expr::Kind::Modal);
        CHECK(e->modal_kind() == ModalKind::Box);
        CHECK(e->modal_sort() == SortId("w"));
        REQUIRE(e->body()->kind() == Expr::Kind::Logic);
        CHECK(e->body()->logic_op() == LogicBuiltin::And);
    }
    SUBCASE("precedence: not > and > or > xor > implies > iff") {
        const ExprPtr e = parse_expr("not p and q or p xor q implies p iff q");
        REQUIRE(e->kind() == Expr::Kind::Logic);
        CHECK(e->logic_op() == LogicBuiltin::Iff);
        CHECK(e->args()[0]->logic_op() == LogicBuiltin::Implies);
        CHECK(e->args()[0]->args()[0]->logic_op() == LogicBuiltin::Xor);
    }
    SUBCASE("implies is right-associative") {
        const ExprPtr e = parse_expr("p implies q implies phi");
        CHECK(e->args()[1]->kind() == Expr::Kind::Logic);
        CHECK(e->args()[1]->logic_op() == LogicBuiltin::Implies);
    }
    SUBCASE("comma application curries") {
        const ExprPtr e = parse_expr("f(a,b)");
        REQUIRE(e->kind() == Expr::Kind::App);
        CHECK(e->fn()->kind() == Expr::Kind::App);
    }
    SUBCASE("unicode aliases") {
        CHECK(parse_expr("λx:e. ¬ happy(x)")->kind() == Expr::Kind::Lam);
        CHECK(parse_expr("□[w] p")->kind() == Expr::Kind::Modal);
        CHECK(parse_expr("p ∧ q")->logic_op() == LogicBuiltin::And);
    }
    SUBCASE("syntax errors carry positions") {
        try {
            parse_expr("box[w p");
            FAIL("expected a syntax error");
        } catch (const SyntaxError& e) {
            CHECK(e.line() == 1);
            CHECK(e.column() >= 5);
        }
        CHECK_THROWS_AS(parse_expr("p and"), SyntaxError);
        CHECK_THROWS_AS(parse_expr(""), SyntaxError);
        CHECK_THROWS_AS(parse_expr("(p"), SyntaxError);
        CHECK_THROWS_AS(parse_expr("\\x:<e. p"), SyntaxError);
    }
}

TEST_CASE("printing round-trips") {
    const char* corpus[] = {
        "p", "not p", "p and q", "p or q", "p implies q", "p iff q", "p xor q",
        "not p and q", "not (p and q)", "p and q or phi", "p and (q or phi)",
        "p implies q implies phi", "(p implies q) implies phi",
        "p iff q iff phi", "box[w] p", "dia[w] p", "box[w] (p and q)",
        "box[w] not p", "not box[w] p", "box[w] dia[w] p", "dia[w] box[w] p",
        "box[w] p and q", "happy(ann)", "happy(x)", "not happy(bob)",
        "happy(ann) and happy(bob)", "(\\x:e. happy(x))(ann)",
        "\\x:e. happy(x)", "\\x:e. not happy(x)", "\\x:e. happy(x) and p",
        "\\x:e. \\y:e. happy(x) and happy(y)", "(\\x:e. \\y:e. happy(y))(ann)(bob)",
        "\\p':t. p' and q", "(\\p':t. p' or p)(q)", "\\f:<e,t>. f(ann)",
        "(\\f:<e,t>. f(ann))(happy)", "(\\f:<e,t>. f(x))(\\y:e. happy(y))",
        "box[w] happy(ann)", "dia[w] happy(x)", "box[w] (happy(ann) implies happy(bob))",
        "p implies box[w] p", "box[w] (p iff q)", "dia[w] (p xor q)",
        "not not p", "not not not p", "((p))", "(p and q) and phi",
        "phi and (q and p)", "box[w] box[w] box[w] phi",
        "(\\x:e. (\\y:e. loves'(x))(x))(ann)",
    };
    const auto m = four_world_model();
    int count = 0;
    for (const char* text : corpus) {
        ++count;
        const ExprPtr e = resolve(parse_expr(text), m);
        const std::string printed = print_expr(e);
        // parse . print is the identity on resolved ASTs
        const ExprPtr again = resolve(parse_expr(printed), m);
        CHECK_MESSAGE(e->equals(*again), "round-trip failed for: ", text, " -> ", printed);
        // print . parse normalizes: printing is a fixed point
        CHECK(print_expr(again) == printed);
    }
    CHECK(count == 50);
}

TEST_CASE("typecheck assigns the expected types") {
    const auto m = four_world_model();
    CHECK(typed("happy(x)", m).type() == SemType::truth());
    CHECK(typed("\\x:e. happy(x)", m).type() ==
          SemType::func(SemType::entity(), SemType::truth()));
    CHECK(typed("happy", m).type() == SemType::func(SemType::entity(), SemType::truth()));
    CHECK(typed("box[w] (p and q)", m).type() == SemType::truth());

    SUBCASE("application of a non-function fails") {
        CHECK_THROWS_AS(typed("p(q)", m), TypeError);
    }
    SUBCASE("argument type mismatches fail") {
        try {
            typed("happy(p)", m);
            FAIL("expected a type error");
        } catch (const TypeError& e) {
            CHECK(e.expected() == "e");
            CHECK(e.found() == "t");
        }
    }
    SUBCASE("logic needs truth arguments") { CHECK_THROWS_AS(typed("p and ann", m), TypeError); }
    SUBCASE("modal needs a truth body") { CHECK_THROWS_AS(typed("box[w] ann", m), TypeError); }
    SUBCASE("modal needs a declared sort") {
        CHECK_THROWS_AS(typed("box[v] p", m), UnknownSort);
    }
    SUBCASE("lambda annotations must use declared sorts") {
        CHECK_THROWS_AS(typed("\\x:zzz. p", m), UnknownSort);
    }
    SUBCASE("free variables type as entities") {
        CHECK(typed("happy(someone)", m).type() == SemType::truth());
    }
}

TEST_CASE("formal evaluation follows the denotation clauses") {
    const auto m = four_world_model();
    const Assignment g;

    SUBCASE("constants look up their intension at s") {
        CHECK(eval_formal(typed("phi", m), m, g, world("w1")) == DomainValue::tru(1));
        CHECK(eval_formal(typed("phi", m), m, g, world("w3")) == DomainValue::tru(0));
        CHECK(eval_formal(typed("ann", m), m, g, world("w2")) == DomainValue::ent("ann"));
    }
    SUBCASE("variables look up the assignment") {
        const Assignment gx = variant(g, "x", DomainValue::ent("bob"));
        CHECK(eval_formal(typed("happy(x)", m), m, gx, world("w2")) == DomainValue::tru(1));
        CHECK(eval_formal(typed("happy(x)", m), m, gx, world("w1")) == DomainValue::tru(0));
        CHECK_THROWS_AS(eval_formal(typed("happy(x)", m), m, g, world("w1")), UnboundVariable);
    }
    SUBCASE("necessity on the four-world frame at w1") {
        CHECK(eval_formal(typed("box[w] phi", m), m, g, world("w1")) == DomainValue::tru(1));
        CHECK(eval_formal(typed("box[w] phi", m), m, g, world("w2")) == DomainValue::tru(0));
        CHECK(eval_formal(typed("dia[w] phi", m), m, g, world("w2")) == DomainValue::tru(0));
        CHECK(eval_formal(typed("dia[w] phi", m), m, g, world("w4")) == DomainValue::tru(1));
    }
    SUBCASE("lambda materializes a total table") {
        const DomainValue f = eval_formal(typed("\\x:e. happy(x)", m), m, g, world("w1"));
        REQUIRE(f.is_func());
        CHECK(f.func_apply(DomainValue::ent("ann")) == DomainValue::tru(1));
        CHECK(f.func_apply(DomainValue::ent("bob")) == DomainValue::tru(0));
        CHECK(f == m.intension_at("happy", world("w1")));
    }
    SUBCASE("beta agreement, exhaustively over entities and worlds") {
        const TypedExpr redex = typed("(\\x:e. happy(x) and dia[w] happy(x))(y)", m);
        const TypedExpr body = typed("happy(x) and dia[w] happy(x)", m);
        for (const auto& s : compound_index_space(m)) {
            for (const auto& ent : m.entities) {
                const Assignment gy = variant(g, "y", DomainValue::ent(ent));
                const Assignment gx = variant(g, "x", DomainValue::ent(ent));
                CHECK(eval_formal(redex, m, gy, s) == eval_formal(body, m, gx, s));
            }
        }
    }
}

TEST_CASE("vector evaluation mirrors the formal clauses") {
    const auto m = four_world_model();
    const Assignment g;

    SUBCASE("entity constants embed to unit basis vectors") {
        const VecValue v = eval_vector(typed("ann", m), m, g, world("w1"));
        REQUIRE(v.is_vec());
        CHECK(v.vec().coeff(BasisLabel(DomainValue::ent("ann"))) == 1);
        CHECK(v.vec().entries().size() == 1);
    }
    SUBCASE("negation via the operator matrix") {
        CHECK(eval_vector(typed("not p", m), m, g, world("w1")).vec() == truth_vec(0));
        CHECK(eval_vector(typed("not p", m), m, g, world("w2")).vec() == truth_vec(1));
    }
    SUBCASE("box over the frame: the component at s") {
        // v(box phi) = (1,0,1,1) on the four-world frame
        CHECK(eval_vector(typed("box[w] phi", m), m, g, world("w1")).vec() == truth_vec(1));
        CHECK(eval_vector(typed("box[w] phi", m), m, g, world("w2")).vec() == truth_vec(0));
        CHECK(eval_vector(typed("box[w] phi", m), m, g, world("w3")).vec() == truth_vec(1));
        CHECK(eval_vector(typed("box[w] phi", m), m, g, world("w4")).vec() == truth_vec(1));
    }
    SUBCASE("constants through the intension operator applied to b_s") {
        Evaluator ev(m, EmbedCache::build(m));
        for (const auto& s : compound_index_space(m)) {
            CHECK(ev.vector(typed("phi", m), g, s) ==
                  embed(m.intension_at("phi", s), SemType::truth(), m));
        }
    }
}

TEST_CASE("the homomorphism check passes on well-typed fixtures") {
    const auto m = four_world_model();
    const char* fixtures[] = {
        "p", "not p", "p and q", "phi implies p", "box[w] phi", "dia[w] (p or q)",
        "happy(ann)", "happy(x)", "box[w] happy(x)", "(\\x:e. happy(x))(ann)",
        "\\x:e. happy(x)", "\\x:e. x", "\\p':t. not p'", "happy",
        "(\\f:<e,t>. f(ann))(happy)", "box[w] (happy(ann) iff dia[w] p)",
    };
    for (const char* text : fixtures) {
        const HomReport report = check_hom(typed(text, m), m);
        CHECK_MESSAGE(report.ok(), "violations for: ", text);
        CHECK(report.cases_checked > 0);
    }
}

TEST_CASE("the homomorphism check runs assignments over free variables") {
    const auto m = four_world_model();
    const HomReport report = check_hom(typed("happy(x) and happy(y)", m), m);
    CHECK(report.ok());
    // 4 worlds x 2 entities for x x 2 entities for y
    CHECK(report.cases_checked == 16);
}

TEST_CASE("a model edited after the embed cache was built is detected") {
    const auto m = two_sort_model();
    const EmbedCache cache = EmbedCache::build(m);

    IntensionalModel corrupted = m;
    Constant& phi = corrupted.constants.at("phi");
    const auto key = corrupted.compound_key(
        DomainValue::compound({{SortId("w"), "w1"}, {SortId("i"), "t1"}}));
    const int old_bit = phi.intension.table.at(key).tru_bit();
    phi.intension.table.insert_or_assign(key, DomainValue::tru(1 - old_bit));

    const TypedExpr e = typed("phi", corrupted);
    const HomReport report = check_hom(e, corrupted, cache);
    REQUIRE(!report.ok());
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].s ==
          DomainValue::compound({{SortId("w"), "w1"}, {SortId("i"), "t1"}}));

    SUBCASE("the same check passes against an untouched model") {
        CHECK(check_hom(typed("phi", m), m, cache).ok());
    }
}

TEST_CASE("two-sort models evaluate nested modalities") {
    const auto m = two_sort_model();
    const Assignment g;
    const auto s11 = DomainValue::compound({{SortId("w"), "w1"}, {SortId("i"), "t1"}});

    // box[i] phi at (w1,t1): i-successors of t1 are {t1,t2}; phi(w1,t1)=1,
    // phi(w1,t2)=0, so necessity fails.
    CHECK(eval_formal(typed("box[i] phi", m), m, g, s11) == DomainValue::tru(0));
    // dia[i] phi at (w1,t1): phi is true at (w1,t1).
    CHECK(eval_formal(typed("dia[i] phi", m), m, g, s11) == DomainValue::tru(1));
    // box[w] phi at (w1,t1): w-successor of w1 is w2; phi(w2,t1)=1.
    CHECK(eval_formal(typed("box[w] phi", m), m, g, s11) == DomainValue::tru(1));
    CHECK(check_hom(typed("box[w] dia[i] (phi and q)", m), m).ok());

    SUBCASE("individual concepts and binary relations") {
        CHECK(eval_formal(typed("teacher", m), m, g, s11) == DomainValue::ent("a"));
        CHECK(check_hom(typed("loves(teacher)(ann)", m), m).ok());
        CHECK(check_hom(typed("loves(x)(y)", m), m).ok());
    }
}

TEST_CASE("index-typed lambdas are accepted and evaluate over the frame's worlds") {
    const auto m = four_world_model();
    const Assignment g;
    const TypedExpr e = typed("\\v:w. box[w] phi", m);
    CHECK(e.type() == SemType::func(SemType::idx(SortId("w")), SemType::truth()));
    // The modal anchors at the ambient compound index; the bound index
    // variable does not shift it, so the table is constant per s.
    const DomainValue f = eval_formal(e, m, g, world("w1"));
    for (const auto& entry : f.func_entries()) {
        CHECK(entry.result == DomainValue::tru(1));
    }
    CHECK(check_hom(e, m).ok());
}

TEST_CASE("composition transfer for chains of unary constants") {
    // Chain f1: e -> e (successor-ish), f2: e -> t, on a zero-sort model.
    auto m = testutil::entities_model(3);
    const SemType e = SemType::entity();
    const SemType t = SemType::truth();

    Constant f1{"f1", SemType::func(e, e), {}};
    Constant f2{"f2", SemType::func(e, t), {}};
    std::vector<FuncEntry> f1e = {{DomainValue::ent("a"), DomainValue::ent("b")},
                                  {DomainValue::ent("b"), DomainValue::ent("c")},
                                  {DomainValue::ent("c"), DomainValue::ent("a")}};
    std::vector<FuncEntry> f2e = {{DomainValue::ent("a"), DomainValue::tru(0)},
                                  {DomainValue::ent("b"), DomainValue::tru(1)},
                                  {DomainValue::ent("c"), DomainValue::tru(0)}};
    f1.intension.table.emplace(std::vector<std::string>{},
                               DomainValue::func(e, e, f1e));
    f2.intension.table.emplace(std::vector<std::string>{},
                               DomainValue::func(e, t, f2e));
    m.constants.emplace("f1", f1);
    m.constants.emplace("f2", f2);
    m.validate();

    const Assignment g;
    const DomainValue s = compound_index_space(m)[0];
    const TypedExpr nested = typecheck(parse_expr("f2(f1(f1(x)))"), m);

    Evaluator ev(m);
    const LinMap l1 = lift(m.intension_at("f1", s), m);
    const LinMap l2 = lift(m.intension_at("f2", s), m);
    const LinMap chain = compose_lin(l2, compose_lin(l1, l1));
    for (const auto& ent : m.entities) {
        const Assignment gx = variant(g, "x", DomainValue::ent(ent));
        const VecValue via_eval = ev.vector(nested, gx, s);
        const VecValue via_compose =
            apply_lin(chain, embed(DomainValue::ent(ent), e, m).vec());
        CHECK(via_eval == via_compose);
    }
}
