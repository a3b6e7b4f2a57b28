// Counts the DAGs of a small CPDAG and draws a few of them uniformly.
//
//   ./build/count_example            uses the built-in graph below
//   ./build/count_example file.txt   reads a graph file instead

#include <fstream>
#include <iostream>

#include "cliquepick/cliquepick.hpp"

using namespace cliquepick;

namespace {

// Undirected part with maximal cliques {1,2,3}, {2,3,4,5}, {2,3,5,6},
// next to a compelled v-structure 7 -> 9 <- 8.
constexpr const char* kGraph = R"(# n, undirected edges, directed edges
9 11 2
1 2
1 3
2 3
2 4
2 5
2 6
3 4
3 5
3 6
4 5
5 6
7 9
8 9
)";

}  // namespace

int main(int argc, char** argv) {
    PartialGraph g;
    try {
        if (argc > 1) {
            std::ifstream in(argv[1]);
            g = parse_graph(in);
        } else {
            g = parse_graph(kGraph);
        }
    } catch (const ParseError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }

    try {
        for (const auto& h : undirected_components(g)) {
            if (h.size() == 1) continue;
            auto [count, stats] = count_with_stats(h);
            std::cout << "component of " << h.size() << " vertices: " << count << " orientations, " << stats.cliques
                      << " maximal cliques, " << stats.explored << " subproblems\n";
        }
        std::cout << "class size: " << count_cpdag(g) << "\n\n";

        const CpdagSampler sampler = precount_cpdag(g);
        Rng rng(42);
        for (int i = 0; i < 3; ++i) {
            std::cout << "sample " << i + 1 << ":\n";
            write_graph(std::cout, to_partial(sample_cpdag(sampler, rng)));
        }
    } catch (const NotChordal& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    return 0;
}
