#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "macx/classifier.hpp"
#include "macx/enumeration.hpp"
#include "macx/generators.hpp"
#include "oracles.hpp"

using namespace macx;

namespace {

SimplicialComplex fig1a() { return SimplicialComplex::from_facets(5, {{1, 2, 5}, {2, 3, 5}, {1, 4}, {3, 4}}); }
SimplicialComplex fig1b() { return SimplicialComplex::from_facets(5, {{1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}}); }

std::vector<std::string> rendered(const GeneratorSet& s) {
    std::vector<std::string> out;
    for (const auto& w : s.words) out.push_back(render_word(w));
    return out;
}

// all candidate words by letters: i < j, prefix an increasing list below j avoiding i,
// kept when i is the least vertex of its component in the full subcomplex and that component misses j
std::size_t brute_force_words(const SimplicialComplex& k) {
    const auto& labels = k.vertices().labels();
    const int m = k.num_vertices();
    std::size_t count = 0;
    for (int jp = 0; jp < m; ++jp)
        for (int ip = 0; ip < jp; ++ip)
            for (Mask pre = 0; pre < bit(jp); ++pre) {
                if (pre & bit(ip)) continue;
                CommutatorWord w;
                w.prefix = k.vertices().labels_of(pre);
                w.j = labels[static_cast<std::size_t>(jp)];
                w.i = labels[static_cast<std::size_t>(ip)];
                if (satisfies_generator_conditions(k, w)) ++count;
            }
    return count;
}

} // namespace

TEST_CASE("figure generators") {
    auto a = enumerate_generators(fig1a(), CommutatorKind::Group);
    CHECK(rendered(a) == std::vector<std::string>{"(g_3,g_1)", "(g_4,g_2)", "(g_5,g_4)", "(g_2,(g_5,g_4))"});
    auto b = enumerate_generators(fig1b(), CommutatorKind::Algebra);
    CHECK(rendered(b) == std::vector<std::string>{"[u_3,u_1]", "[u_4,u_2]"});
    CHECK(generator_count(fig1a()) == 4);
    CHECK(generator_count(fig1b()) == 2);
}

TEST_CASE("cycle generator counts") {
    CHECK(generator_count(SimplicialComplex::cycle(5)) == 10);
    CHECK(generator_count(SimplicialComplex::cycle(6)) == 34);
    for (int p = 4; p <= 8; ++p) {
        auto c = SimplicialComplex::cycle(p);
        CHECK(generator_count(c) == 2 * surface_genus(p));
        CHECK(generator_count(c) == homology_R(c)[1].free_rank);
    }
}

TEST_CASE("rendering nests the prefix from the outside") {
    CommutatorWord w{CommutatorKind::Group, {1, 3}, 6, 2};
    CHECK(render_word(w) == "(g_1,(g_3,(g_6,g_2)))");
    w.kind = CommutatorKind::Algebra;
    CHECK(render_word(w) == "[u_1,[u_3,[u_6,u_2]]]");
}

TEST_CASE("counts, kinds and side conditions on all complexes up to 5 vertices") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& k : enumerate_flag_complexes(n)) {
            auto g = enumerate_generators(k, CommutatorKind::Group);
            auto a = enumerate_generators(k, CommutatorKind::Algebra);
            REQUIRE(g.count() == generator_count(k));
            REQUIRE(a.count() == g.count());
            for (std::size_t t = 0; t < g.count(); ++t) {
                REQUIRE(g.words[t].prefix == a.words[t].prefix);
                REQUIRE(g.words[t].j == a.words[t].j);
                REQUIRE(g.words[t].i == a.words[t].i);
                REQUIRE(satisfies_generator_conditions(k, g.words[t]));
            }
            REQUIRE(brute_force_words(k) == g.count());
            REQUIRE((generator_count(k) == 0) == homology_R(k)[1].is_zero());
        }
}

TEST_CASE("counts on random 6-vertex complexes, including non-flag ones") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        auto k = oracle::random_complex(rng, 6, 3 + static_cast<int>(rng() % 4), 3);
        auto g = enumerate_generators(k, CommutatorKind::Group);
        REQUIRE(g.count() == generator_count(k));
        REQUIRE(g.count() == brute_force_words(k));
        REQUIRE(g.count() == homology_R(k)[1].free_rank);
        for (const auto& w : g.words) REQUIRE(satisfies_generator_conditions(k, w));
    }
}

TEST_CASE("words violating the side conditions are rejected") {
    auto k = fig1a();
    CHECK_FALSE(satisfies_generator_conditions(k, {CommutatorKind::Group, {}, 1, 3}));    // i > j
    CHECK_FALSE(satisfies_generator_conditions(k, {CommutatorKind::Group, {}, 5, 1}));    // 1 joins 5
    CHECK_FALSE(satisfies_generator_conditions(k, {CommutatorKind::Group, {4}, 3, 1}));   // prefix above j
    CHECK_FALSE(satisfies_generator_conditions(k, {CommutatorKind::Group, {2, 1}, 5, 4}));  // unsorted
    CHECK_FALSE(satisfies_generator_conditions(k, {CommutatorKind::Group, {}, 9, 1}));    // not a vertex
    CHECK(satisfies_generator_conditions(k, {CommutatorKind::Group, {2}, 5, 4}));
}

TEST_CASE("connected full subcomplexes give no generators") {
    CHECK(generator_count(SimplicialComplex::simplex(4)) == 0);
    CHECK(enumerate_generators(SimplicialComplex::simplex(-1), CommutatorKind::Group).count() == 0);
    CHECK(generator_count(SimplicialComplex::from_facets(3, {})) == 5);  // 3 pairs + 2 * (J = all)
}
