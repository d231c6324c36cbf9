#include <doctest.h>

#include "scm/instance.hpp"
#include "support/fixtures.hpp"

using namespace scm;
using namespace scm::tests;

TEST_CASE("sign multiplication") {
    CHECK(influence(Sign::plus, Sign::plus) == Sign::plus);
    CHECK(influence(Sign::plus, Sign::minus) == Sign::minus);
    CHECK(influence(Sign::minus, Sign::plus) == Sign::minus);
    CHECK(influence(Sign::minus, Sign::minus) == Sign::plus);
}

TEST_CASE("signs form the two-element group") {
    const Sign all[] = {Sign::plus, Sign::minus};
    for (Sign s : all) {
        CHECK(s * Sign::plus == s); // identity
        CHECK(s * s == Sign::plus); // involution
        for (Sign t : all) {
            CHECK(s * t == t * s);
            for (Sign u : all) CHECK((s * t) * u == s * (t * u));
        }
    }
}

TEST_CASE("validate interns the operon model") {
    Instance inst = operon();
    CHECK(inst.vertex_count() == 8);
    CHECK(inst.edge_count() == 13);
    CHECK(inst.is_input(vid(inst, "G")));
    CHECK(inst.is_input(vid(inst, "Le")));
    CHECK(inst.non_input_vertices().size() == 6);

    // names are interned in lexicographic order
    for (int v = 1; v < inst.vertex_count(); ++v) CHECK(inst.name(v - 1) < inst.name(v));

    // adjacency matches the model: LacY is repressed by LacI, activated by cAMP-CRP
    auto in = inst.in_edges(vid(inst, "LacY"));
    REQUIRE(in.size() == 2);
    CHECK(inst.edge(in[0]).src == vid(inst, "LacI"));
    CHECK(inst.edge(in[0]).sign == Sign::minus);
    CHECK(inst.edge(in[1]).src == vid(inst, "cAMP-CRP"));
    CHECK(inst.edge(in[1]).sign == Sign::plus);
}

TEST_CASE("validate rejects duplicate ordered pairs") {
    RawInstance raw;
    raw.vertices = {"a", "b"};
    raw.edges.push_back({"a", "b", Sign::plus});
    raw.edges.push_back({"a", "b", Sign::minus});
    CHECK_THROWS_AS(validate(raw), ValidationError);
    try {
        validate(raw);
    } catch (const ValidationError& e) {
        CHECK(e.kind == ValidationError::Kind::duplicate_edge);
        CHECK(std::string(e.what()).find("a -> b") != std::string::npos);
    }
}

TEST_CASE("validate rejects references to undeclared vertices") {
    RawInstance raw;
    raw.vertices = {"a"};
    raw.observations.emplace_back("ghost", Sign::plus);
    CHECK_THROWS_AS(validate(raw), ValidationError);
    try {
        validate(raw);
    } catch (const ValidationError& e) {
        CHECK(e.kind == ValidationError::Kind::unknown_vertex);
        CHECK(std::string(e.what()).find("ghost") != std::string::npos);
    }
}

TEST_CASE("validate rejects conflicting observations, accepts repeats") {
    RawInstance raw;
    raw.vertices = {"a"};
    raw.observations.emplace_back("a", Sign::plus);
    raw.observations.emplace_back("a", Sign::plus);
    CHECK(validate(raw).observation(0) == Sign::plus);
    raw.observations.emplace_back("a", Sign::minus);
    CHECK_THROWS_AS(validate(raw), ValidationError);
}

TEST_CASE("validate permits self-loops and antiparallel edges") {
    RawInstance raw;
    raw.vertices = {"a", "b"};
    raw.edges.push_back({"a", "a", Sign::plus});
    raw.edges.push_back({"a", "b", Sign::plus});
    raw.edges.push_back({"b", "a", Sign::minus});
    Instance inst = validate(raw);
    CHECK(inst.edge_count() == 3);
}

TEST_CASE("validate is idempotent") {
    Instance inst = operon(operon_mu3());
    CHECK(validate(inst.to_raw()) == inst);
}

TEST_CASE("guess_inputs leaves the operon unchanged") {
    // every operon vertex has a predecessor
    Instance inst = operon();
    CHECK(guess_inputs(inst) == inst);
}

TEST_CASE("guess_inputs marks isolated and source vertices") {
    Instance lone = parse_instance("vertex v\n");
    CHECK(guess_inputs(lone).is_input(0));

    Instance chain = parse_instance("edge a b +\nedge b c +\n");
    Instance guessed = guess_inputs(chain);
    CHECK(guessed.is_input(vid(guessed, "a")));
    CHECK(!guessed.is_input(vid(guessed, "b")));
    CHECK(!guessed.is_input(vid(guessed, "c")));
}

TEST_CASE("guess_inputs is monotone and idempotent") {
    Instance inst = demo5().with_inputs(vids(demo5(), {"C"}));
    Instance once = guess_inputs(inst);
    for (int v : inst.input_vertices()) CHECK(once.is_input(v));
    CHECK(guess_inputs(once) == once);
}
