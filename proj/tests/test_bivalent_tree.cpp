#include <doctest.h>

#include <stdexcept>

#include <set>

#include "oracles.hpp"
#include "subgroups/bivalent_tree.hpp"

using namespace subgroups;

TEST_CASE("star") {
    BivalentTree s3 = star(3);
    CHECK(s3.adj[0] == std::vector<int>{1, 2, 3});
    CHECK(s3.external_count() == 3);
    CHECK(star(5).vertex_count() == 6);
    CHECK_THROWS_AS(star(1), std::invalid_argument);
}

TEST_CASE("extend") {
    BivalentTree s3 = star(3);
    BivalentTree t = extend(s3, 1);
    CHECK(t.internal_count == 2);
    CHECK(t.vertex_count() == 6);
    // matches the unique Bi(2,3) tree: internal edge 1-2, fibers {3,4}, {5,6}
    CHECK(t.adj[0] == std::vector<int>{1, 2, 3});
    CHECK(t.adj[1] == std::vector<int>{0, 4, 5});
    CHECK_THROWS_AS(extend(s3, 0), std::invalid_argument);
    // extending at two vertices of the same fiber gives isomorphic trees
    CHECK(internal_canonical_code(extend(s3, 1)) == internal_canonical_code(extend(s3, 2)));
    // vertex count (n-1)(m+1)+2
    CHECK(extend(star(4), 1).vertex_count() == 3 * 2 + 2);
}

TEST_CASE("every enumerated tree satisfies the external-count identity") {
    for (int n : {3, 4})
        for (int m = 1; m <= (n == 3 ? 6 : 3); ++m)
            for (const BivalentTree& t : enumerate_trees(m, n)) {
                CHECK(t.external_count() == (n - 2) * m + 2);
                for (int v = 0; v < t.internal_count; ++v)
                    CHECK(static_cast<int>(t.adj[v].size()) == n);
                for (int v = t.internal_count; v < t.vertex_count(); ++v)
                    CHECK(t.adj[v].size() == 1);
            }
}

TEST_CASE("enumerate_trees counts match the brute-force oracle") {
    // oracle: all labeled trees with the required degree sequence, bucketed
    // by isomorphism
    std::vector<long> expected;
    for (int m = 1; m <= 5; ++m) expected.push_back(oracle::brute_force_tree_class_count(m, 3));
    CHECK(expected == std::vector<long>{1, 1, 1, 2, 2});
    for (int m = 1; m <= 5; ++m)
        CHECK(static_cast<long>(enumerate_trees(m, 3).size()) == expected[m - 1]);
    // light n=4 coverage
    for (int m = 1; m <= 3; ++m)
        CHECK(static_cast<long>(enumerate_trees(m, 4).size()) ==
              oracle::brute_force_tree_class_count(m, 4));
}

TEST_CASE("enumerated representatives are pairwise non-isomorphic") {
    for (int m = 1; m <= 6; ++m) {
        std::set<std::string> codes;
        for (const BivalentTree& t : enumerate_trees(m, 3)) codes.insert(internal_canonical_code(t));
        CHECK(codes.size() == enumerate_trees(m, 3).size());
    }
}

TEST_CASE("internal subtree") {
    CHECK(internal_subtree(star(3)) == std::vector<std::vector<int>>{{}});
    BivalentTree t = extend(star(3), 1);
    CHECK(internal_subtree(t) == std::vector<std::vector<int>>{{1}, {0}});
    CHECK(internal_subtree(extend(t, 2)).size() == 3);
    CHECK_THROWS_AS(internal_subtree(single_edge()), std::invalid_argument);
}

TEST_CASE("kernel generators and kernel order") {
    BivalentTree t = extend(star(3), 1);  // Bi(2,3)
    auto gens = aut_kernel_generators(t);
    CHECK(gens.size() == 2);  // one swap per 2-element fiber
    CHECK(oracle::brute_force_kernel_count(t) == 4);
    CHECK(oracle::brute_force_kernel_count(star(3)) == 6);
    // |Aut_e| = prod over fibers of (fiber size)!; singleton fibers contribute
    // nothing
    for (int m = 1; m <= 5; ++m)
        for (const BivalentTree& tree : enumerate_trees(m, 3)) {
            long expect = 1;
            for (const auto& fiber : external_classes(tree))
                for (long k = 2; k <= static_cast<long>(fiber.size()); ++k) expect *= k;
            CHECK(oracle::brute_force_kernel_count(tree) == expect);
        }
}

TEST_CASE("aut_group order equals the brute-force count on small trees") {
    for (int m = 1; m <= 5; ++m)
        for (const BivalentTree& t : enumerate_trees(m, 3)) {
            if (t.vertex_count() > 12) continue;
            CHECK(aut_group(t).order ==
                  static_cast<std::uint64_t>(oracle::brute_force_automorphism_count(t)));
        }
    for (int m = 1; m <= 3; ++m)
        for (const BivalentTree& t : enumerate_trees(m, 4)) {
            if (t.vertex_count() > 12) continue;
            CHECK(aut_group(t).order ==
                  static_cast<std::uint64_t>(oracle::brute_force_automorphism_count(t)));
        }
}

TEST_CASE("aut_group frozen examples") {
    CHECK(aut_group(extend(star(3), 1)).order == 8);
    CHECK(aut_group(star(3)).order == 6);
    // Bi(4,3) tree with internal path: kernel order 4, times path reversal
    for (const BivalentTree& t : enumerate_trees(4, 3)) {
        auto iadj = internal_subtree(t);
        bool is_path = true;
        for (const auto& nb : iadj)
            if (nb.size() > 2) is_path = false;
        if (!is_path) continue;
        std::uint64_t kernel = 1;
        for (const auto& f : external_classes(t))
            for (std::uint64_t k = 2; k <= f.size(); ++k) kernel *= k;
        CHECK(aut_group(t).order == 2 * kernel);
    }
}

TEST_CASE("aut_group generators generate a group of the stated order") {
    // close the generating set and compare sizes (trees kept tiny)
    for (int m = 1; m <= 4; ++m)
        for (const BivalentTree& t : enumerate_trees(m, 3)) {
            AutGroup g = aut_group(t);
            std::set<std::vector<int>> group;
            group.insert(Perm::identity(t.vertex_count()).images());
            bool grew = true;
            while (grew) {
                grew = false;
                auto snapshot = group;
                for (const auto& a : snapshot)
                    for (const Perm& gen : g.generators) {
                        Perm prod = perm_compose(gen, Perm(a));
                        if (group.insert(prod.images()).second) grew = true;
                    }
            }
            CHECK(group.size() == g.order);
        }
}

TEST_CASE("external classes") {
    CHECK(external_classes(star(3)).size() == 1);
    auto classes = external_classes(extend(star(3), 1));
    CHECK(classes == std::vector<std::vector<int>>{{2, 3}, {4, 5}});
}

TEST_CASE("removing the fiber of a removable vertex lands in Bi(m-1,3)") {
    for (int m = 2; m <= 5; ++m) {
        std::set<std::string> smaller;
        for (const BivalentTree& t : enumerate_trees(m - 1, 3))
            smaller.insert(internal_canonical_code(t));
        for (const BivalentTree& t : enumerate_trees(m, 3)) {
            // a vertex v with |Two(v)| = 2 exists; removing its fiber makes the
            // parent external again
            int v = -1;
            for (const auto& fiber : external_classes(t))
                if (fiber.size() == 2) v = fiber[0];
            REQUIRE(v >= 0);
            int parent = t.parent_of(v);
            // internal subtree minus `parent`
            auto iadj = internal_subtree(t);
            std::vector<std::vector<int>> rest;
            std::vector<int> relabel(iadj.size(), -1);
            int next = 0;
            for (int u = 0; u < static_cast<int>(iadj.size()); ++u)
                if (u != parent) relabel[u] = next++;
            rest.resize(static_cast<std::size_t>(next));
            for (int u = 0; u < static_cast<int>(iadj.size()); ++u)
                for (int w : iadj[u])
                    if (u != parent && w != parent) rest[relabel[u]].push_back(relabel[w]);
            std::string code = next == 1 ? "()" : oracle::tree_canonical(rest);
            // compare against the enumerated internal codes of Bi(m-1,3)
            bool found = false;
            for (const BivalentTree& s : enumerate_trees(m - 1, 3))
                if (internal_canonical_code(s) == code ||
                    (s.internal_count == 1 && code == "()"))
                    found = true;
            CHECK(found);
        }
    }
}
