#include "support.hpp"

#include "symhecke/kernels.hpp"

#include <doctest.h>

#include <deque>
#include <map>

using namespace symhecke;
using namespace testsupport;

namespace {

// Word length by breadth-first search on the matrices alone.
std::vector<int> bfs_lengths(const CoxeterGroup& G)
{
    std::map<IntMat, int> dist;
    std::deque<IntMat> q;
    IntMat id = IntMat::identity(G.dim());
    dist[id] = 0;
    q.push_back(id);
    while (!q.empty()) {
        IntMat m = q.front();
        q.pop_front();
        for (int i = 0; i < G.num_generators(); ++i) {
            IntMat n = m * G.matrix(G.generator(i));
            if (dist.emplace(n, dist[m] + 1).second) q.push_back(n);
        }
    }
    std::vector<int> out(G.size());
    for (int w = 0; w < G.size(); ++w) out[w] = dist.at(G.matrix(w));
    return out;
}

// Bruhat order from its definition: the transitive closure of x < xt when l(x) < l(xt).
std::vector<std::vector<char>> bruhat_by_definition(const CoxeterGroup& G)
{
    const int n = G.size();
    std::vector<int> refl;
    for (int w = 0; w < n; ++w)
        if (G.is_reflection(w)) refl.push_back(w);
    std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
    for (int x = 0; x < n; ++x) {
        le[x][x] = 1;
        for (int t : refl) {
            int y = G.multiply(x, t);
            if (G.length(x) < G.length(y)) le[x][y] = 1;
        }
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (le[i][k])
                for (int j = 0; j < n; ++j)
                    if (le[k][j]) le[i][j] = 1;
    return le;
}

}  // namespace

TEST_CASE("little Weyl group orders and degrees")
{
    struct Row {
        const char* name;
        int order;
        std::vector<int> deg;
    };
    for (const Row& r : {Row{"sl2_split", 2, {2}}, Row{"sl3_split", 6, {2, 3}}, Row{"sl4_split", 24, {2, 3, 4}},
                         Row{"sp4_split", 8, {2, 4}}, Row{"su22_quasisplit", 8, {2, 4}}, Row{"f4_split", 1152, {2, 6, 8, 12}}}) {
        CAPTURE(r.name);
        PairData P = pair(r.name);
        CHECK(P.W.size() == r.order);
        CHECK(degrees(P.W.group) == r.deg);
    }
}

TEST_CASE("lengths agree with breadth-first search and with inversion counts")
{
    for (std::string n : {"sl3_split", "sl4_split", "sp4_split", "su22_quasisplit", "f4_split"}) {
        CAPTURE(n);
        PairData P = pair(n);
        const CoxeterGroup& G = P.W.group;
        std::vector<int> bfs = bfs_lengths(G);
        for (int w = 0; w < G.size(); ++w) {
            CHECK(G.length(w) == bfs[w]);
            CHECK(G.length(w) == P.W.separating(P.W.chamber_point, G.matrix(w) * P.W.chamber_point));
            CHECK(G.length(G.inverse(w)) == G.length(w));
            CHECK(int(G.word(w).size()) == G.length(w));
            CHECK(G.from_word(G.word(w)) == w);
        }
    }
}

TEST_CASE("Bruhat order matches the definition")
{
    for (std::string n : {"sl3_split", "sl4_split", "sp4_split"}) {
        CAPTURE(n);
        const CoxeterGroup& G = pair(n).W.group;
        auto le = bruhat_by_definition(G);
        for (int a = 0; a < G.size(); ++a)
            for (int b = 0; b < G.size(); ++b) CHECK(G.bruhat_leq(a, b) == bool(le[a][b]));
    }
}

TEST_CASE("serial and parallel kernels agree")
{
    for (std::string n : {"sl4_split", "f4_split"}) {
        const CoxeterGroup& G = pair(n).W.group;
        std::vector<int> cs = kernels::cayley_serial(G), cp = kernels::cayley_parallel(G);
        CHECK(cs == cp);
        CHECK(cs == G.cayley());
        std::mt19937_64 rng(3);
        for (int t = 0; t < 500; ++t) {
            int a = int(rng() % G.size()), b = int(rng() % G.size());
            CHECK(cs[std::size_t(a) * G.size() + b] == G.find(G.matrix(a) * G.matrix(b)));
        }
        CHECK(kernels::bruhat_serial(G) == kernels::bruhat_parallel(G));
        CHECK(kernels::bruhat_serial(G) == G.bruhat_rows());
    }
}

TEST_CASE("Bruhat-monotone values: serial and parallel reports coincide")
{
    PairData P = pair("sl4_split");
    BruhatValueReport a = check_bruhat_values(P.W, 40, 7), b = check_bruhat_values_serial(P.W, 40, 7);
    CHECK(a.passes == 40);
    CHECK(a.failures == 0);
    CHECK(a.passes == b.passes);
    CHECK(a.comparisons == b.comparisons);
    CHECK(a.witness == b.witness);
    CHECK_THROWS(check_bruhat_values(P.W, 0, 1));
}

TEST_CASE("Bruhat-monotone values from an independent evaluation")
{
    // both a0 and l taken as the chamber point
    for (std::string n : {"sl3_split", "sp4_split", "su22_quasisplit", "sl4_split"}) {
        CAPTURE(n);
        PairData P = pair(n);
        const CoxeterGroup& G = P.W.group;
        RatVec a0 = to_rat(P.W.chamber_point);
        RatVec Gl = to_rat(P.W.gram) * a0;
        std::vector<Rat> val(G.size());
        for (int w = 0; w < G.size(); ++w) val[w] = dot(to_rat(G.matrix(w)) * a0, Gl);
        for (int a = 0; a < G.size(); ++a)
            for (int b = 0; b < G.size(); ++b)
                if (a != b && G.bruhat_leq(a, b)) CHECK(val[a] > val[b]);
    }
}

TEST_CASE("braid words")
{
    BraidWord b{{0, 1}, {1, -1}, {1, 1}, {2, 1}};
    CHECK(free_reduce(b) == BraidWord{{0, 1}, {2, 1}});
    CHECK(braid_inverse(braid_inverse(b)) == b);
    CHECK(free_reduce(concat(b, braid_inverse(b))).empty());
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        BraidWord r = random_braid(rng, 3, int(rng() % 12));
        BraidWord f = free_reduce(r);
        CHECK(free_reduce(f) == f);
        for (std::size_t k = 0; k + 1 < f.size(); ++k) CHECK_FALSE((f[k].gen == f[k + 1].gen && f[k].exp == -f[k + 1].exp));
    }
}

TEST_CASE("simple system of the chi-subgroup for sl3")
{
    PairData P = pair("sl3_split");
    const CoxeterGroup& G = P.W.group;
    std::vector<int> refl;
    for (int w = 0; w < G.size(); ++w)
        if (G.is_reflection(w)) refl.push_back(w);
    CHECK(simple_system_of_subgroup(P.W, refl) == std::vector<int>{G.generator(0), G.generator(1)});
    int longest = G.size() - 1;
    CHECK(simple_system_of_subgroup(P.W, {longest}) == std::vector<int>{longest});
}
