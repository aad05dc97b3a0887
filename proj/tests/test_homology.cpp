#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "macx/enumeration.hpp"
#include "macx/homology.hpp"
#include "oracles.hpp"

using namespace macx;

namespace {

SimplicialComplex fig1a() { return SimplicialComplex::from_facets(5, {{1, 2, 5}, {2, 3, 5}, {1, 4}, {3, 4}}); }
SimplicialComplex fig1b() { return SimplicialComplex::from_facets(5, {{1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}}); }
SimplicialComplex fig2() { return SimplicialComplex::from_facets(5, {{1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4}}); }

HomologyGroup Z(std::size_t r) { return free_group_of_rank(r); }

std::vector<std::size_t> ranks(const std::vector<HomologyGroup>& gs) {
    std::vector<std::size_t> out;
    for (const auto& g : gs) out.push_back(g.free_rank);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

template <class V>
V trimmed(V v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

} // namespace

TEST_CASE("boundary matrices") {
    auto edge = SimplicialComplex::simplex(1);
    auto d1 = boundary_matrix(edge, 1);
    REQUIRE(d1.rows() == 2);
    REQUIRE(d1.cols() == 1);
    CHECK(d1(0, 0) == -1);
    CHECK(d1(1, 0) == 1);

    auto aug = boundary_matrix(edge, 0);
    CHECK(aug.rows() == 1);
    CHECK(aug.cols() == 2);

    auto c3 = boundary_matrix(SimplicialComplex::cycle(3), 1);
    CHECK(smith_normal_form(c3).rank == 2);

    auto d2 = boundary_matrix(SimplicialComplex::simplex(2), 2);
    REQUIRE(d2.cols() == 1);
    // edges ordered 12, 13, 23 as masks 011, 101, 110
    CHECK(d2(0, 0) == 1);
    CHECK(d2(1, 0) == -1);
    CHECK(d2(2, 0) == 1);
    CHECK_THROWS_AS(boundary_matrix(edge, -1), std::invalid_argument);
}

TEST_CASE("d squared vanishes on random complexes") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        auto k = oracle::random_complex(rng, 7, 5, 5);
        for (int d = 1; d <= k.dimension(); ++d) REQUIRE((boundary_matrix(k, d - 1) * boundary_matrix(k, d)).is_zero());
    }
}

TEST_CASE("reduced homology of standard complexes") {
    SECTION("void complex") {
        auto h = reduced_homology(SimplicialComplex::simplex(-1));
        CHECK(h.void_complex);
        CHECK(h.at(-1) == Z(1));
        CHECK_FALSE(h.acyclic());
    }
    SECTION("simplices are acyclic") {
        for (int q = 0; q <= 5; ++q) CHECK(reduced_homology(SimplicialComplex::simplex(q)).acyclic());
    }
    SECTION("circles and spheres") {
        CHECK(reduced_homology(SimplicialComplex::cycle(5)).at(1) == Z(1));
        CHECK(reduced_homology(SimplicialComplex::cycle(5)).at(0).is_zero());
        auto s2 = SimplicialComplex::from_facets(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
        CHECK(reduced_homology(s2).at(2) == Z(1));
        CHECK(reduced_homology(s2).at(1).is_zero());
    }
    SECTION("points") {
        auto pts = SimplicialComplex::from_facets(4, {});
        CHECK(reduced_homology(pts).at(0) == Z(3));
    }
    SECTION("projective plane has Z/2 in degree one") {
        auto rp2 = load_complex(MACX_DATA_DIR "/rp2.cx");
        auto h = reduced_homology(rp2);
        CHECK(h.at(0).is_zero());
        CHECK(h.at(1).free_rank == 0);
        CHECK(h.at(1).torsion == std::vector<BigInt>{2});
        CHECK(h.at(1).to_string() == "Z/2");
        CHECK(h.at(2).is_zero());
        // mod 2 and mod 3 ranks seen independently
        CHECK(oracle::reduced_betti(rp2, 2) == std::vector<std::size_t>{0, 1, 1});
        CHECK(oracle::reduced_betti(rp2, 3) == std::vector<std::size_t>{0, 0, 0});
    }
}

TEST_CASE("reduced homology ranks match a mod-p oracle on random complexes") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        auto k = oracle::random_complex(rng, 1 + static_cast<int>(rng() % 7), 6, 4);
        auto h = reduced_homology(k);
        auto b = oracle::reduced_betti(k, oracle::kBigPrime);
        for (std::size_t n = 0; n < b.size(); ++n) REQUIRE(h.at(static_cast<int>(n)).free_rank == b[n]);
        // mod 2 rank = free rank + number of even torsion factors in degrees n and n-1
        auto b2 = oracle::reduced_betti(k, 2);
        for (std::size_t n = 0; n < b2.size(); ++n) {
            std::size_t expected = h.at(static_cast<int>(n)).free_rank;
            for (const auto& t : h.at(static_cast<int>(n)).torsion) expected += t % 2 == 0;
            if (n > 0)
                for (const auto& t : h.at(static_cast<int>(n) - 1).torsion) expected += t % 2 == 0;
            REQUIRE(b2[n] == expected);
        }
    }
}

TEST_CASE("homology group formatting and sums") {
    CHECK(HomologyGroup{}.to_string() == "0");
    CHECK(Z(1).to_string() == "Z");
    CHECK(Z(3).to_string() == "Z^3");
    HomologyGroup g = Z(1);
    g += HomologyGroup{0, {2}};
    CHECK(g.to_string() == "Z + Z/2");
    g += HomologyGroup{0, {3}};
    CHECK(g.torsion == std::vector<BigInt>{6});
    CHECK(g.is_integers() == false);
}

TEST_CASE("homology of R_K on the examples") {
    auto a = homology_R(fig1a());
    CHECK(a[0] == Z(1));
    CHECK(a[1] == Z(4));
    CHECK(a[2] == Z(3));
    auto b = homology_R(fig1b());
    CHECK(b[2] == Z(1));
    CHECK(b[1] == Z(2));
    auto c5 = homology_R(SimplicialComplex::cycle(5));
    CHECK(ranks(c5) == std::vector<std::size_t>{1, 10, 1});
}

TEST_CASE("bigraded homology of Z_K on the examples") {
    auto a = bigraded_homology_Z(fig1a());
    CHECK(a.at(2, 8) == Z(2));
    CHECK(a.at(3, 10) == Z(1));
    CHECK(a.at(0, 0) == Z(1));
    auto b = bigraded_homology_Z(fig1b());
    CHECK(b.at(2, 8) == Z(1));
    CHECK(betti_Z(fig2()) == std::vector<std::size_t>{1, 0, 0, 2, 0, 1, 3, 1});
}

TEST_CASE("Z_K bigraded ranks agree with the cellular chain oracle") {
    std::vector<SimplicialComplex> cases = {fig1a(), fig1b(), fig2(), SimplicialComplex::cycle(4),
                                            SimplicialComplex::cycle(5), SimplicialComplex::simplex(2),
                                            SimplicialComplex::from_facets(3, {})};
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial)
        cases.push_back(oracle::random_complex(rng, 2 + static_cast<int>(rng() % 4), 4, 3));
    for (const auto& k : cases) {
        auto table = bigraded_homology_Z(k);
        auto expected = oracle::bigraded_betti_Z(k);
        std::map<std::pair<int, int>, std::size_t> got;
        for (const auto& [key, g] : table.entries())
            if (g.free_rank) got[key] = g.free_rank;
        INFO(format_complex(k));
        REQUIRE(got == expected);
    }
}

TEST_CASE("R_K ranks agree with the cubical chain oracle") {
    std::vector<SimplicialComplex> cases = {fig1a(), fig1b(), fig2(), SimplicialComplex::cycle(5)};
    std::mt19937 rng(37);
    for (int trial = 0; trial < 25; ++trial)
        cases.push_back(oracle::random_complex(rng, 2 + static_cast<int>(rng() % 4), 4, 3));
    for (const auto& k : cases) {
        INFO(format_complex(k));
        REQUIRE(trimmed(ranks(homology_R(k))) == trimmed(oracle::betti_R(k)));
    }
}

TEST_CASE("total degree reassembly and Euler characteristic") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        auto k = oracle::random_complex(rng, 1 + static_cast<int>(rng() % 6), 4, 4);
        auto table = bigraded_homology_Z(k);
        auto full = homology_Z(table);
        std::size_t sum = 0, parts = 0;
        for (const auto& g : full) sum += g.free_rank;
        for (const auto& [key, g] : table.entries()) parts += g.free_rank;
        REQUIRE(sum == parts);
        // Z_K has Euler characteristic 0 unless K is a simplex; R_K has chi = sum over faces (-1)^|I| 2^{m-|I|}
        long long chi_r = 0;
        for (Mask f : k.faces())
            chi_r += (popcount(f) % 2 ? -1 : 1) * (1LL << (k.num_vertices() - popcount(f)));
        long long alt = 0;
        auto hr = homology_R(k);
        for (std::size_t n = 0; n < hr.size(); ++n) alt += (n % 2 ? -1 : 1) * static_cast<long long>(hr[n].free_rank);
        REQUIRE(alt == chi_r);
    }
}

TEST_CASE("memoised and plain subcomplex homology agree") {
    HomologyCache cache;
    for (const auto& k : enumerate_flag_complexes(5)) {
        SubcomplexHomology plain(k), memo(k, &cache);
        for (Mask j = 0; j <= k.vertices().all(); ++j) REQUIRE(plain.of(j) == memo.of(j));
    }
    CHECK(cache.size() > 0);
}
