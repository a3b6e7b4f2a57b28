#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "cliquepick/cliquepick.hpp"

using namespace cliquepick;

namespace {

enum Exit { kOk = 0, kInputError = 1, kNotChordal = 2, kGuard = 3 };

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

PartialGraph read_input(const std::string& path) {
    if (path == "-") return parse_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw Usage("cannot open " + path);
    return parse_graph(in);
}

double skeleton_density(const PartialGraph& g) {
    if (g.n < 2) return 0.0;
    const double m = static_cast<double>(g.undirected_edge_count() + g.directed_edge_count());
    return m / (0.5 * g.n * (g.n - 1));
}

int cmd_count(const std::string& file, bool stats) {
    const PartialGraph g = read_input(file);
    const auto comps = undirected_components(g);
    Count total = 1;
    std::size_t explored = 0, cliques = 0;
    for (const auto& h : comps) {
        auto r = count_with_stats(h);
        total *= r.count;
        explored += r.stats.explored;
        cliques += r.stats.cliques;
    }
    std::cout << total << '\n';
    if (stats) {
        std::cerr << "explored=" << explored << '\n';
        std::cerr << "cliques=" << cliques << '\n';
        std::cerr << "density=" << skeleton_density(g) << '\n';
    }
    return kOk;
}

int cmd_sample(const std::string& file, std::size_t samples, std::uint64_t seed) {
    const CpdagSampler sampler = precount_cpdag(read_input(file));
    Rng rng(seed);
    std::ostringstream out;
    for (std::size_t i = 0; i < samples; ++i) {
        if (i > 0) out << '\n';
        write_graph(out, to_partial(sample_cpdag(sampler, rng)));
    }
    std::cout << out.str();
    return kOk;
}

int parse_k(const std::string& text, int n) {
    auto k = gen::resolve_k(text, n);
    if (!k) throw Usage("invalid k: " + text);
    return *k;
}

gen::Model parse_model(const std::string& text) {
    auto m = gen::parse_model(text);
    if (!m) throw Usage("unknown model: " + text + " (subtree, interval, peo, thicken)");
    return *m;
}

int cmd_gen(const std::string& model, int n, const std::string& k_text, std::uint64_t seed, const std::string& out) {
    const gen::Model m = parse_model(model);
    const int k = parse_k(k_text, n);
    const Uccg g = gen::generate(m, n, k, seed);
    const PartialGraph p = to_partial(g.graph());
    if (out.empty() || out == "-") {
        write_graph(std::cout, p);
    } else {
        std::ofstream f(out);
        if (!f) throw Usage("cannot write " + out);
        write_graph(f, p);
    }
    std::cerr << "n=" << g.size() << '\n';
    std::cerr << "edges=" << g.edge_count() << '\n';
    std::cerr << "cliques=" << clique_tree(g.graph()).size() << '\n';
    std::cerr << "density=" << gen::density(g.graph()) << '\n';
    return kOk;
}

int cmd_oracle(const std::string& file, const std::string& method) {
    if (method != "enumerate" && method != "rootpick") throw Usage("unknown method: " + method);
    Count total = 1;
    for (const auto& h : undirected_components(read_input(file))) {
        if (method == "enumerate") total *= static_cast<unsigned long>(oracle::enumerate_amos(h).size());
        else total *= oracle::count_root_picking(h);
    }
    std::cout << total << '\n';
    return kOk;
}

int cmd_validate(const std::string& file) {
    const PartialGraph g = read_input(file);
    const auto comps = undirected_components(g);
    std::size_t nontrivial = 0;
    for (const auto& h : comps) nontrivial += h.size() > 1;
    std::cout << "ok n=" << g.n << " undirected=" << g.undirected_edge_count() << " directed=" << g.directed_edge_count()
              << " components=" << nontrivial << '\n';
    return kOk;
}

// Sizes as a comma list ("16,32,64") or a doubling range ("16..256").
std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> out;
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || v < 1) throw Usage("invalid size: " + s);
        return v;
    };
    if (auto dots = text.find(".."); dots != std::string::npos) {
        const int lo = number(text.substr(0, dots));
        const int hi = number(text.substr(dots + 2));
        for (long v = lo; v <= hi; v *= 2) out.push_back(static_cast<int>(v));
        return out;
    }
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(number(item));
    if (out.empty()) throw Usage("no sizes given");
    return out;
}

std::uint64_t instance_seed(std::uint64_t base, int n, int rep) {
    std::uint64_t x = base ^ (static_cast<std::uint64_t>(n) << 32) ^ static_cast<std::uint64_t>(rep);
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct BenchJob {
    int n, k, rep;
    std::uint64_t seed;
};

int cmd_bench(const std::string& model, const std::string& sizes, const std::string& policy, int reps, double timeout,
              std::uint64_t seed, int jobs) {
    const gen::Model m = parse_model(model);
    std::vector<BenchJob> work;
    for (int n : parse_sizes(sizes))
        for (int r = 0; r < reps; ++r) work.push_back({n, parse_k(policy, n), r, instance_seed(seed, n, r)});

    std::cout << "model,n,k,rep,seed,edges,cliques,density,count_digits,time_ms,status\n" << std::flush;
    std::vector<std::string> rows(work.size());
    std::vector<char> done(work.size(), 0);
    std::size_t printed = 0;
    std::mutex mu;
    std::atomic<std::size_t> next{0};
    std::string failure;

    auto worker = [&] {
        for (std::size_t i = next++; i < work.size(); i = next++) {
            const BenchJob& job = work[i];
            std::string row;
            try {
                const Uccg g = gen::generate(m, job.n, job.k, job.seed);
                CountOptions opts;
                const auto t0 = std::chrono::steady_clock::now();
                opts.deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                         std::chrono::duration<double>(timeout));
                std::string digits, status = "ok";
                std::size_t cliques = 0;
                try {
                    auto r = count_with_stats(g, opts);
                    digits = std::to_string(r.count.get_str().size());
                    cliques = r.stats.cliques;
                } catch (const Timeout&) {
                    status = "timeout";
                }
                const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                if (status != "ok") cliques = clique_tree(g.graph()).size();
                char buf[256];
                std::snprintf(buf, sizeof buf, "%s,%d,%d,%d,%llu,%zu,%zu,%.6f,%s,%.3f,%s\n", gen::to_string(m), job.n, job.k,
                              job.rep, static_cast<unsigned long long>(job.seed), g.edge_count(), cliques,
                              gen::density(g.graph()), digits.c_str(), ms, status.c_str());
                row = buf;
            } catch (const std::exception& e) {
                std::lock_guard lock(mu);
                if (failure.empty()) failure = e.what();
                next = work.size();
                return;
            }
            std::lock_guard lock(mu);
            rows[i] = std::move(row);
            done[i] = 1;
            while (printed < work.size() && done[printed]) std::cout << rows[printed++] << std::flush;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (!failure.empty()) {
        std::cerr << "error: " << failure << '\n';
        return kInputError;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Count and uniformly sample the DAGs of a Markov equivalence class"};
    app.require_subcommand(1);

    std::string file = "-";
    bool stats = false;
    auto* count = app.add_subcommand("count", "Print the number of DAGs represented by a CPDAG");
    count->add_option("file", file, "graph file, - for stdin");
    count->add_flag("--stats", stats, "print explored, cliques and density to stderr");

    std::size_t samples = 1;
    std::uint64_t seed = 1;
    auto* sample = app.add_subcommand("sample", "Draw uniform DAGs from the class");
    sample->add_option("file", file, "graph file, - for stdin");
    sample->add_option("--samples", samples, "number of DAGs")->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed, "random seed");

    std::string model, k_text = "log", out;
    int n = 0;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random connected chordal graph");
    gen_cmd->add_option("--model", model, "subtree, interval, peo or thicken")->required();
    gen_cmd->add_option("--n", n, "number of vertices")->required();
    gen_cmd->add_option("--k", k_text, "density parameter: integer, log, 2log or sqrt");
    gen_cmd->add_option("--seed", seed, "random seed");
    gen_cmd->add_option("-o,--output", out, "output file (stdout if omitted)");

    std::string method = "enumerate";
    auto* oracle_cmd = app.add_subcommand("oracle", "Count with a brute-force oracle");
    oracle_cmd->add_option("file", file, "graph file, - for stdin");
    oracle_cmd->add_option("--method", method, "enumerate or rootpick");

    auto* validate = app.add_subcommand("validate", "Parse a graph file and check its undirected components");
    validate->add_option("file", file, "graph file, - for stdin");

    std::string sizes, policy = "log";
    int reps = 3, jobs = 1;
    double timeout = 60;
    auto* bench = app.add_subcommand("bench", "Time counting on generated graphs, CSV on stdout");
    bench->add_option("--model", model, "subtree, interval, peo or thicken")->required();
    bench->add_option("--sizes", sizes, "comma list (16,32) or doubling range (16..256)")->required();
    bench->add_option("--k-policy", policy, "integer, log, 2log or sqrt");
    bench->add_option("--reps", reps, "instances per size")->check(CLI::PositiveNumber);
    bench->add_option("--timeout", timeout, "seconds per instance")->check(CLI::PositiveNumber);
    bench->add_option("--seed", seed, "base seed");
    bench->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*count) return cmd_count(file, stats);
        if (*sample) return cmd_sample(file, samples, seed);
        if (*gen_cmd) return cmd_gen(model, n, k_text, seed, out);
        if (*oracle_cmd) return cmd_oracle(file, method);
        if (*validate) return cmd_validate(file);
        if (*bench) return cmd_bench(model, sizes, policy, reps, timeout, seed, jobs);
    } catch (const NotChordal& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNotChordal;
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kGuard;
    } catch (const Usage& e) {
        std::cerr << "error: " << e.what() << '\n' << app.help();
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}
