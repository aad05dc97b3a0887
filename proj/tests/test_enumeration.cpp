#include <catch2/catch_amalgamated.hpp>

#include "macx/enumeration.hpp"
#include "oracles.hpp"

using namespace macx;

TEST_CASE("graph codes") {
    CHECK(edge_index(0, 1) == 0);
    CHECK(edge_index(0, 2) == 1);
    CHECK(edge_index(1, 2) == 2);
    CHECK(edge_count(7) == 21);
    for (std::uint32_t code = 0; code < 64; ++code) CHECK(code_of(graph_from_code(4, code)) == code);
}

TEST_CASE("labelled counts") {
    for (int n = 1; n <= 5; ++n) CHECK(enumerate_flag_complexes(n).size() == (std::size_t{1} << edge_count(n)));
    CHECK_THROWS_AS(enumerate_flag_complexes(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_flag_complexes(8), std::invalid_argument);
}

TEST_CASE("isomorphism classes agree with a Burnside count") {
    CHECK(enumerate_flag_complexes(3, true).size() == 4);
    CHECK(enumerate_flag_complexes(4, true).size() == 11);
    for (int n = 1; n <= 6; ++n) CHECK(enumerate_flag_complexes(n, true).size() == oracle::unlabelled_graphs(n));
}

TEST_CASE("canonical forms are invariant under relabelling") {
    PermutationTable perms(5);
    CHECK(perms.size() == 120);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint32_t code = rng() & full_mask(edge_count(5));
        std::uint32_t canon = perms.canonical(code);
        CHECK(perms.is_canonical(canon));
        for (std::size_t p = 0; p < perms.size(); p += 17) REQUIRE(perms.canonical(perms.apply(p, code)) == canon);
        // relabelling preserves the edge count
        REQUIRE(std::popcount(perms.apply(trial % 120, code)) == std::popcount(code));
    }
}

TEST_CASE("sweeps up to five vertices find no counterexamples") {
    SweepConfig cfg;
    cfg.max_vertices = 5;
    cfg.threads = 1;
    auto rep = run_sweep(cfg);
    CHECK(rep.ok());
    CHECK(rep.complexes_checked == 1 + 2 + 8 + 64 + 1024);
    CHECK(rep.per_vertex_count.at(4).star_matches == 3);
    CHECK(rep.per_vertex_count.at(5).star_matches == 27);
    CHECK(rep.per_vertex_count.at(5).minimally_non_golod == 12);
    CHECK(rep.per_vertex_count.at(4).chordal == 61);
    CHECK(rep.per_vertex_count.at(5).chordal == 822);
    CHECK(rep.per_vertex_count.at(5).one_relator_group == 27);
    CHECK(rep.per_vertex_count.at(5).one_relator_algebra == 27);
}

TEST_CASE("iso-deduplicated star counts") {
    SweepConfig cfg;
    cfg.max_vertices = 6;
    cfg.dedup_isomorphism = true;
    cfg.checks = {SweepCheck::Thm5};
    auto rep = run_sweep(cfg);
    CHECK(rep.ok());
    CHECK(rep.per_vertex_count.at(4).star_matches == 1);
    CHECK(rep.per_vertex_count.at(5).star_matches == 2);
    CHECK(rep.per_vertex_count.at(6).star_matches == 3);
    CHECK(rep.per_vertex_count.at(6).complexes == 156);
}

TEST_CASE("sweep report does not depend on the number of workers") {
    SweepConfig cfg;
    cfg.min_vertices = 3;
    cfg.max_vertices = 5;
    cfg.threads = 1;
    auto one = run_sweep(cfg);
    cfg.threads = 3;
    auto three = run_sweep(cfg);
    CHECK(one.complexes_checked == three.complexes_checked);
    CHECK(one.per_vertex_count == three.per_vertex_count);
    CHECK(one.counterexamples == three.counterexamples);
}

TEST_CASE("a broken classifier is caught") {
    SweepConfig cfg;
    cfg.max_vertices = 5;
    cfg.checks = {SweepCheck::ChordalFree, SweepCheck::FlagMng};
    SweepClassifiers broken;
    broken.chordal = [](const SimplicialComplex& k) { return !is_chordal(one_skeleton(k)).chordal; };
    for (unsigned threads : {1u, 2u}) {
        cfg.threads = threads;
        auto rep = run_sweep(cfg, broken);
        CHECK_FALSE(rep.ok());
        REQUIRE_FALSE(rep.counterexamples.empty());
        // each record reproduces on its own
        const auto& c = rep.counterexamples.front();
        auto k = SimplicialComplex::from_facets(c.n, c.facets);
        CHECK(k == clique_complex(graph_from_code(c.n, c.graph_code)));
        CHECK_FALSE(c.verdicts.empty());
        CHECK_FALSE(c.h_r.empty());
        CHECK(c.verdicts.at("chordal") != is_chordal(one_skeleton(k)).chordal);
    }

    SweepClassifiers bad_star;
    bad_star.star = [](const SimplicialComplex&) { return StarClassification{}; };
    cfg.checks = {SweepCheck::Thm3, SweepCheck::Thm5};
    auto rep = run_sweep(cfg, bad_star);
    // one thm3 and one thm5 disagreement per (*)-complex
    CHECK(rep.counterexamples.size() == 2 * (3 + 27));
}

TEST_CASE("sweep range validation") {
    SweepConfig cfg;
    cfg.max_vertices = 8;
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
    CHECK(parse_sweep_check("chordal_free") == SweepCheck::ChordalFree);
    CHECK_THROWS(parse_sweep_check("thm4"));
    for (auto c : all_sweep_checks()) CHECK(parse_sweep_check(to_string(c)) == c);
}
