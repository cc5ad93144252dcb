#include "symhecke/kernels.hpp"

namespace symhecke::kernels {

namespace {

// b = parent(b) * letter(b), with parent(b) earlier in canonical order.
void parents(const CoxeterGroup& G, std::vector<int>& parent, std::vector<int>& letter)
{
    const int n = G.size();
    parent.assign(n, 0);
    letter.assign(n, -1);
    for (int b = 1; b < n; ++b) {
        letter[b] = G.word(b).back();
        parent[b] = G.right(b, letter[b]);
    }
}

void cayley_row(const CoxeterGroup& G, const std::vector<int>& parent, const std::vector<int>& letter, int a, int* row)
{
    row[0] = a;
    for (int b = 1; b < G.size(); ++b) row[b] = G.right(row[parent[b]], letter[b]);
}

Bitset bruhat_row(const CoxeterGroup& G, int b)
{
    const int n = G.size();
    Bitset set((n + 63) / 64, 0);
    bit_set(set, 0);
    std::vector<int> members{0};
    for (int s : G.word(b)) {
        std::size_t cur = members.size();
        for (std::size_t k = 0; k < cur; ++k) {
            int y = G.right(members[k], s);
            if (!bit_test(set, y)) {
                bit_set(set, y);
                members.push_back(y);
            }
        }
    }
    return set;
}

}  // namespace

std::vector<int> cayley_serial(const CoxeterGroup& G)
{
    const int n = G.size();
    std::vector<int> parent, letter;
    parents(G, parent, letter);
    std::vector<int> table(std::size_t(n) * n);
    for (int a = 0; a < n; ++a) cayley_row(G, parent, letter, a, table.data() + std::size_t(a) * n);
    return table;
}

std::vector<int> cayley_parallel(const CoxeterGroup& G)
{
    const int n = G.size();
    std::vector<int> parent, letter;
    parents(G, parent, letter);
    std::vector<int> table(std::size_t(n) * n);
#pragma omp parallel for schedule(static)
    for (int a = 0; a < n; ++a) cayley_row(G, parent, letter, a, table.data() + std::size_t(a) * n);
    return table;
}

std::vector<Bitset> bruhat_serial(const CoxeterGroup& G)
{
    std::vector<Bitset> rows(G.size());
    for (int b = 0; b < G.size(); ++b) rows[b] = bruhat_row(G, b);
    return rows;
}

std::vector<Bitset> bruhat_parallel(const CoxeterGroup& G)
{
    std::vector<Bitset> rows(G.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (int b = 0; b < G.size(); ++b) rows[b] = bruhat_row(G, b);
    return rows;
}

}  // namespace symhecke::kernels
