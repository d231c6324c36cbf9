#include <doctest.h>

#include <algorithm>
#include <random>

#include "scm/diagnose.hpp"
#include "scm/io.hpp"
#include "scm/reduce.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace scm;
using namespace scm::tests;

namespace {

std::vector<std::vector<int>> member_sets(const DiagnosisReport& report) {
    std::vector<std::vector<int>> out;
    for (const auto& mic : report.mics) out.push_back(mic.members);
    return out;
}

} // namespace

TEST_CASE("over-approximation digraph of the reduced five-vertex example") {
    auto [reduced, report] = reduce_inputs(demo5());
    Digraph g = overapprox_digraph(reduced);
    int a = vid(reduced, "A"), b = vid(reduced, "B"), d = vid(reduced, "D");
    std::vector<std::pair<int, int>> expected = {{b, a}, {a, d}, {d, a}};
    std::sort(expected.begin(), expected.end());
    CHECK(g.edges == expected);
}

TEST_CASE("over-approximation digraph of the unreduced five-vertex example") {
    Instance inst = demo5();
    Digraph g = overapprox_digraph(inst);
    // all nine regulations forward, plus inverse edges toward the
    // unobserved regulators A (of B, D, E) and C (of E)
    auto e = [&](const char* s, const char* t) {
        return std::pair(vid(inst, s), vid(inst, t));
    };
    std::vector<std::pair<int, int>> expected = {
        e("A", "B"), e("A", "D"), e("A", "E"), e("B", "A"), e("B", "C"), e("C", "E"),
        e("D", "B"), e("D", "C"), e("D", "E"), e("D", "A"), e("E", "A"), e("E", "C")};
    std::sort(expected.begin(), expected.end());
    CHECK(g.edges == expected);
}

TEST_CASE("over-approximation digraph is empty when everything is input") {
    Instance inst = demo5();
    Instance all_inputs = inst.with_inputs(inst.non_input_vertices());
    CHECK(overapprox_digraph(all_inputs).edges.empty());
}

TEST_CASE("cycle relation of the reduced five-vertex example is {{A,D}}") {
    auto [reduced, report] = reduce_inputs(demo5());
    CycleRelation rel = cycle_relation(reduced);
    std::vector<std::pair<int, int>> expected = {
        {std::min(vid(reduced, "A"), vid(reduced, "D")),
         std::max(vid(reduced, "A"), vid(reduced, "D"))}};
    CHECK(rel.pairs() == expected);
    CHECK(rel.related(vid(reduced, "A"), vid(reduced, "D")));
    CHECK(!rel.related(vid(reduced, "A"), vid(reduced, "A")));
    CHECK(!rel.related(vid(reduced, "A"), vid(reduced, "B")));
}

TEST_CASE("a DAG with observed sources has an empty cycle relation") {
    Instance inst = parse_instance(
        "edge a b +\nedge b c -\nobs a +\nobs b +\nobs c -\ninput a\n");
    CHECK(cycle_relation(inst).pairs().empty());
}

TEST_CASE("mic graph of {A,D} matches the worked construction") {
    Instance inst = demo5();
    MicGraph g = mic_graph(inst, vids(inst, {"A", "D"}));
    CHECK(g.vertices == vids(inst, {"A", "B", "D"}));
    std::vector<std::pair<int, int>> expected = {
        {vid(inst, "B"), vid(inst, "A")},
        {vid(inst, "A"), vid(inst, "D")},
        {vid(inst, "D"), vid(inst, "A")}};
    std::sort(expected.begin(), expected.end());
    CHECK(g.edges == expected);
    CHECK(members_in_one_scc(g, vids(inst, {"A", "D"})));

    CHECK(mic_graph(inst, {}).vertices.empty());
    Instance lone = parse_instance("vertex v\n");
    MicGraph single = mic_graph(lone, vids(lone, {"v"}));
    CHECK(single.vertices == vids(lone, {"v"}));
    CHECK(single.edges.empty());
}

TEST_CASE("is_mic on the five-vertex example") {
    Instance inst = demo5();
    MicCheck both = is_mic(inst, vids(inst, {"A", "D"}));
    CHECK(both.is_mic);
    REQUIRE(both.removal_witnesses.size() == 2);
    // each removal witness explains the surviving vertex
    for (const auto& [removed, w] : both.removal_witnesses) {
        std::vector<int> rest;
        for (int v : vids(inst, {"A", "D"}))
            if (v != removed) rest.push_back(v);
        CHECK(verify_witness(inst, rest, w));
    }

    CHECK(!is_mic(inst, vids(inst, {"A"})).is_mic);
    CHECK(!is_mic(inst, vids(inst, {"A", "B", "D"})).is_mic); // inconsistent but not minimal
}

TEST_CASE("find_one_mic returns {A,D} and nothing on consistent input") {
    DiagnosisReport one = find_one_mic(demo5());
    REQUIRE(one.mics.size() == 1);
    CHECK(one.mics[0].members == vids(demo5(), {"A", "D"}));

    CHECK(find_one_mic(operon(operon_mu1())).mics.empty());
}

TEST_CASE("find_all_mics on the five-vertex example is complete") {
    DiagnosisReport report = find_all_mics(demo5());
    CHECK(report.complete);
    REQUIRE(report.mics.size() == 1);
    CHECK(report.mics[0].members == vids(demo5(), {"A", "D"}));
    CHECK(member_sets(report) == oracle_all_mics(demo5()));
}

TEST_CASE("the unsatisfiable operon profile has one three-vertex core") {
    Instance inst = operon(operon_mu4());
    DiagnosisReport report = find_all_mics(inst);
    CHECK(report.complete);
    CHECK(member_sets(report) == oracle_all_mics(inst));
    REQUIRE(report.mics.size() == 1);
    CHECK(report.mics[0].members == vids(inst, {"A", "LacI", "LacY"}));
}

TEST_CASE("consistent instances yield empty complete reports") {
    DiagnosisReport report = find_all_mics(operon(operon_mu3()));
    CHECK(report.mics.empty());
    CHECK(report.complete);
}

TEST_CASE("find_all_mics equals exhaustive enumeration on random instances") {
    std::mt19937_64 rng(11188);
    int with_mics = 0;
    for (int i = 0; i < 150; ++i) {
        Instance inst = random_partial_instance(rng, 8);
        auto expected = oracle_all_mics(inst);
        DiagnosisReport report = find_all_mics(inst);
        CHECK(report.complete);
        CHECK(member_sets(report) == expected);
        with_mics += !expected.empty();

        for (const auto& mic : report.mics) {
            CHECK(is_mic(inst, mic.members).is_mic);
            CHECK(members_in_one_scc(mic_graph(inst, mic.members), mic.members));
        }
        // no reported core is contained in another
        for (const auto& a : report.mics)
            for (const auto& b : report.mics)
                if (a.members != b.members)
                    CHECK(!std::includes(b.members.begin(), b.members.end(),
                                         a.members.begin(), a.members.end()));
    }
    CHECK(with_mics > 15);
}

TEST_CASE("cycle relation never separates the members of any true core") {
    std::mt19937_64 rng(22299);
    for (int i = 0; i < 150; ++i) {
        Instance inst = random_partial_instance(rng, 8);
        CycleRelation rel = cycle_relation(inst);
        for (const auto& mic : oracle_all_mics(inst))
            for (size_t a = 0; a < mic.size(); ++a)
                for (size_t b = a + 1; b < mic.size(); ++b)
                    CHECK(rel.related(mic[a], mic[b]));
    }
}

TEST_CASE("diagnosis commutes with input reduction") {
    std::mt19937_64 rng(333);
    for (int i = 0; i < 100; ++i) {
        Instance inst = random_partial_instance(rng, 8);
        auto [reduced, trace] = reduce_inputs(inst);
        CHECK(member_sets(find_all_mics(inst)) == member_sets(find_all_mics(reduced)));
    }
}

TEST_CASE("the scc precheck changes nothing but the work") {
    std::mt19937_64 rng(444);
    DiagnoseOptions with_precheck;
    with_precheck.scc_precheck = true;
    for (int i = 0; i < 60; ++i) {
        Instance inst = random_partial_instance(rng, 8);
        CHECK(member_sets(find_all_mics(inst)) ==
              member_sets(find_all_mics(inst, with_precheck)));
    }
}

TEST_CASE("find_one_mic results always pass post-hoc verification") {
    std::mt19937_64 rng(909);
    int found = 0;
    for (int i = 0; i < 120; ++i) {
        Instance inst = random_partial_instance(rng, 9);
        DiagnosisReport one = find_one_mic(inst);
        if (one.mics.empty()) {
            CHECK(check_consistency(inst).status == Status::consistent);
            continue;
        }
        ++found;
        CHECK(is_mic(inst, one.mics[0].members).is_mic);
    }
    CHECK(found > 10);
}

TEST_CASE("approximate mode finds the unique core then stops") {
    DiagnosisReport report = approximate_all_mics(demo5());
    CHECK(report.order_dependent);
    REQUIRE(report.mics.size() == 1);
    CHECK(report.mics[0].members == vids(demo5(), {"A", "D"}));

    CHECK(approximate_all_mics(operon(operon_mu1())).mics.empty());
}

TEST_CASE("approximate mode reports verified stage-wise cores") {
    std::mt19937_64 rng(808);
    for (int i = 0; i < 80; ++i) {
        Instance inst = random_partial_instance(rng, 8);
        DiagnosisReport report = approximate_all_mics(inst);
        Instance stage = inst;
        for (const auto& mic : report.mics) {
            CHECK(is_mic(stage, mic.members).is_mic); // valid at discovery time
            stage = stage.with_inputs(mic.members);
        }
        CHECK(check_consistency(stage).status == Status::consistent);
    }
}

TEST_CASE("merge_mics unions neighborhoods") {
    Instance inst = demo5();
    Mic mic;
    mic.members = vids(inst, {"A", "D"});
    MicGraph merged = merge_mics(inst, std::span(&mic, 1));
    CHECK(merged.vertices == mic_graph(inst, mic.members).vertices);
    CHECK(merged.edges == mic_graph(inst, mic.members).edges);

    // two disjoint cores merge disjointly
    Instance two = parse_instance(
        "edge i1 a -\nedge i2 b -\nobs i1 +\nobs a +\nobs i2 +\nobs b +\ninput i1\ninput i2\n");
    Mic ma, mb;
    ma.members = vids(two, {"a"});
    mb.members = vids(two, {"b"});
    std::vector<Mic> mics = {ma, mb};
    MicGraph m = merge_mics(two, mics);
    CHECK(m.vertices == vids(two, {"a", "b", "i1", "i2"}));
    CHECK(m.edges.size() == 2);
}

TEST_CASE("budget exhaustion reports partial incomplete results") {
    DiagnoseOptions opts;
    opts.max_solver_calls = 1;
    DiagnosisReport report = find_all_mics(demo5(), opts);
    CHECK(report.budget_exceeded);
    CHECK(!report.complete);
}

TEST_CASE("max cardinality caps completeness claims") {
    DiagnoseOptions opts;
    opts.max_cardinality = 1;
    Instance inst = demo5();
    DiagnosisReport report = find_all_mics(inst, opts);
    CHECK(report.mics.empty()); // {A,D} is out of reach at cardinality 1
    CHECK(!report.complete);
}
