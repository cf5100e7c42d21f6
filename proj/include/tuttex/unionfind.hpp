#ifndef TUTTEX_UNIONFIND_HPP
#define TUTTEX_UNIONFIND_HPP

#include <numeric>
#include <vector>

namespace tuttex {

struct UnionFind {
    std::vector<int> parent;
    int groups;

    explicit UnionFind(int n) : parent(n), groups(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }

    // Returns false if a and b were already in the same set.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        --groups;
        return true;
    }
};

} // namespace tuttex

#endif
