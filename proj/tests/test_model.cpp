#include "doctest.h"
#include "oracles.hpp"
#include "sgeval/model.hpp"
#include "support.hpp"

using namespace sgeval;

namespace {

ModelErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const ModelError& e) {
        return e.kind();
    }
    FAIL("no ModelError thrown");
    return ModelErrorKind::UnknownId;
}

}  // namespace

TEST_CASE("literals negate and print") {
    const Literal a = make_literal("a");
    CHECK(negate(a).str() == "~a");
    CHECK(negate(negate(a)) == a);
    CHECK(top_literal().is_top());
    CHECK(kind_of([] { make_literal(""); }) == ModelErrorKind::EmptyAtom);
    CHECK(kind_of([] { make_literal("T", true); }) == ModelErrorKind::NegatedTop);
    CHECK(kind_of([] { make_literal("~a"); }) == ModelErrorKind::InvalidName);
    CHECK(kind_of([] { make_literal("1a"); }) == ModelErrorKind::InvalidName);
    CHECK(make_literal("_x9").atom == "_x9");
}

TEST_CASE("premise conjunction is sorted and deduplicated") {
    const Premise p = Premise::conjunction({make_literal("b"), make_literal("a"), make_literal("b")});
    REQUIRE(p.size() == 2);
    CHECK(p.literals()[0].atom == "a");
    CHECK(p.str() == "a & b");
    CHECK(Premise::top().is_top());
    CHECK(Premise::top().literals().empty());
    CHECK(kind_of([] { Premise::conjunction({make_literal("a"), make_literal("a", true)}); }) ==
          ModelErrorKind::InconsistentPremise);
    CHECK(kind_of([] { Premise::conjunction({}); }) == ModelErrorKind::EmptyPremise);
}

TEST_CASE("statement construction rejects misuse of T") {
    CHECK(kind_of([] { make_statement("s", {top_literal(), make_literal("a")}, make_literal("b")); }) ==
          ModelErrorKind::TopInConjunction);
    CHECK(kind_of([] { make_statement("s", {make_literal("a")}, top_literal()); }) == ModelErrorKind::TopClaim);
    CHECK(kind_of([] { make_statement("", {make_literal("a")}, make_literal("b")); }) == ModelErrorKind::EmptyId);
    CHECK(kind_of([] { make_statement("a'1", {make_literal("a")}, make_literal("b")); }) ==
          ModelErrorKind::InvalidName);
    CHECK(kind_of([] { make_statement("s", {Literal{"a b", false}}, make_literal("b")); }) ==
          ModelErrorKind::InvalidName);
    const Statement fact = make_statement("f", {top_literal()}, make_literal("a"));
    CHECK(fact.premise.is_top());
    CHECK(fact.str() == "f: T => a");
}

TEST_CASE("relations follow claims into premises") {
    const auto g = testing::sg(testing::kFig1);
    const Relations r = derive_relations(g.statements());
    CHECK(r.attacks == std::vector<IdEdge>{{"a4", "a1"}});
    CHECK(r.supports == std::vector<IdEdge>{{"a2", "a1"}, {"a3", "a1"}});
}

TEST_CASE("a claim attacks premises holding its negation and supports those holding it") {
    const auto g = testing::sg("s: T => a @ 1\nt: ~a => b @ 1\nu: a => c @ 1\n");
    const Relations r = derive_relations(g.statements());
    CHECK(r.attacks == std::vector<IdEdge>{{"s", "t"}});
    CHECK(r.supports == std::vector<IdEdge>{{"s", "u"}});
}

TEST_CASE("attacks and supports never overlap and match the oracle") {
    for (std::uint64_t k = 0; k < 300; ++k) {
        const auto g = testing::seeded_graph(11, k);
        const Relations r = derive_relations(g.statements());
        for (const auto& e : r.attacks)
            CHECK(std::find(r.supports.begin(), r.supports.end(), e) == r.supports.end());
        std::size_t att = 0, sup = 0;
        for (const auto& s : g.statements())
            for (const auto& t : g.statements()) {
                att += oracle::attacks(s, t);
                sup += oracle::supports(s, t);
            }
        CHECK(att == r.attacks.size());
        CHECK(sup == r.supports.size());
    }
}
