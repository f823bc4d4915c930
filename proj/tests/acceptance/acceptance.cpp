// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "secdom/canonical.hpp"
#include "secdom/constructions.hpp"
#include "secdom/domination.hpp"
#include "secdom/formulas.hpp"
#include "secdom/graph6.hpp"
#include "secdom/mycielskian.hpp"
#include "secdom/oracle.hpp"
#include "secdom/solvers.hpp"

using namespace secdom;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Collects violations; keeps the first few for the report line.
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++violations_;
        if (violations_ <= 3) examples_ += (examples_.empty() ? "" : "; ") + what;
    }
    std::size_t checks() const { return checks_; }
    Outcome outcome(const std::string& extra = {}) const {
        std::ostringstream s;
        s << checks_ << " checks, " << violations_ << " violations";
        if (!examples_.empty()) s << " [" << examples_ << (violations_ > 3 ? "; ..." : "") << "]";
        if (!extra.empty()) s << "; " << extra;
        return {violations_ == 0, s.str()};
    }

private:
    std::size_t checks_ = 0, violations_ = 0;
    std::string examples_;
};

std::size_t gs(const Graph& g) { return min_secure_dominating(g).value; }
std::size_t gs_mu(const Graph& g) { return min_secure_dominating(mycielski_graph(g)).value; }
std::string n_(std::size_t v) { return std::to_string(v); }

std::vector<Graph> connected_up_to(std::size_t hi, std::size_t lo = 1) {
    std::vector<Graph> out;
    for (std::size_t n = lo; n <= hi; ++n)
        for (auto& g : enumerate_graphs(n, true)) out.push_back(std::move(g));
    return out;
}

Outcome c1() {
    Tally t;
    for (std::size_t n = 1; n <= 14; ++n) {
        const auto v = gs(make_path(n));
        t.check(v == formulas::gamma_s_path(n), "P_" + n_(n) + "=" + n_(v));
    }
    for (std::size_t n = 3; n <= 14; ++n) {
        const auto v = gs(make_cycle(n));
        t.check(v == (3 * n + 6) / 7, "C_" + n_(n) + "=" + n_(v));
    }
    return t.outcome();
}

Outcome c2() {
    Tally t;
    auto one = [&](const Graph& g, const std::string& name, std::size_t n) {
        const auto r = min_secure_dominating(mycielski_graph(g));
        t.check(r.value == formulas::gamma_s_mu_path(n) && r.exhausted_below, "mu(" + name + ")=" + n_(r.value));
    };
    for (std::size_t n = 2; n <= 12; ++n) one(make_path(n), "P_" + n_(n), n);
    for (std::size_t n = 3; n <= 12; ++n) one(make_cycle(n), "C_" + n_(n), n);
    return t.outcome();
}

Outcome c3() {
    Tally t;
    std::size_t six = 0;
    for (const auto& g : connected_up_to(6)) {
        six += g.order() == 6;
        const auto a = min_dominating(g).value;
        const auto b = min_dominating(mycielski_graph(g)).value;
        t.check(b == a + 1, to_graph6(g));
    }
    t.check(six == 112, "connected graphs on 6 vertices: " + n_(six));
    return t.outcome();
}

Outcome c4() {
    Tally t;
    for (const auto& g : connected_up_to(6, 2))
        if (has_dominating_vertex(g)) t.check(gs_mu(g) == 3, to_graph6(g));
    return t.outcome();
}

Outcome c5() {
    Tally t;
    for (const auto& g : connected_up_to(6, 2))
        if (max_degree(g) + 2 == g.order()) t.check(gs_mu(g) <= 4, to_graph6(g));
    return t.outcome();
}

Outcome c6() {
    Tally t;
    for (std::size_t m = 1; m <= 5; ++m) {
        for (std::size_t n = m; m + n <= 10; ++n) {
            const auto g = make_complete_bipartite(m, n);
            const auto a = gs(g), b = gs_mu(g);
            const auto ea = formulas::gamma_s_complete_bipartite(m, n);
            const auto eb = formulas::gamma_s_mu_complete_bipartite(m, n);
            const std::string name = "K_{" + n_(m) + "," + n_(n) + "}";
            t.check(a == ea, name + ": gamma_s=" + n_(a) + " expected " + n_(ea));
            t.check(b == eb, name + ": gamma_s(mu)=" + n_(b) + " expected " + n_(eb));
        }
    }
    return t.outcome();
}

Outcome c7() {
    Tally t;
    for (const auto& g : connected_up_to(5)) {
        const auto mu = mycielski_graph(g);
        const auto v = gs(mu);
        t.check(v <= 2 * min_dominating(g).value + 1, to_graph6(g) + " 2gamma+1");
        for (auto s : all_inclusion_minimal_secure_sets(g)) {
            const auto lifted = lift_secure_set(g, s);
            t.check(is_secure(mu, lifted), to_graph6(g) + " " + s.to_string() + " lift not secure");
            t.check(lifted.size() == s.size() + s_isolates(g, s).size() + 1, to_graph6(g) + " |lift|");
            t.check(v <= lifted.size(), to_graph6(g) + " bound");
        }
    }
    return t.outcome();
}

Outcome c8() {
    Tally t;
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& g : enumerate_graphs(n, false)) {
            const auto [mu, lab] = mycielskian(g);
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                const VertexSet s(mask);
                if (!is_dominating(g, s)) continue;
                t.check(epn(mu, lab.cone(), s.with(lab.cone())) == lab.images_of(s_isolates(g, s)),
                        to_graph6(g) + " " + s.to_string());
            }
        }
    }
    return t.outcome();
}

Outcome c9() {
    Tally t;
    std::size_t qualifying = 0;
    for (const auto& g : connected_up_to(6, 4)) {
        if (is_complete(g) || gs(g) != 3) continue;
        const auto [mu, lab] = mycielskian(g);
        if (gs(mu) != 3) continue;
        ++qualifying;
        for (auto s : all_min_secure_sets(mu)) t.check(s.contains(lab.cone()), to_graph6(g) + " " + s.to_string());
        t.check(has_dominating_vertex(g), to_graph6(g) + " no dominating vertex");
    }
    return t.outcome(n_(qualifying) + " qualifying graphs");
}

bool three_consecutive(VertexSet s, std::size_t n) {
    for (Vertex i = 0; i + 2 < n; ++i)
        if (s.contains(i) && s.contains(i + 1) && s.contains(i + 2)) return true;
    return false;
}

Outcome c10() {
    Tally t;
    // Minimum-cardinality sets are reported alongside for comparison.
    std::size_t min_checks = 0, min_violations = 0;
    for (std::size_t n = 6; n <= 12; ++n) {
        const auto p = make_path(n);
        for (auto s : all_inclusion_minimal_secure_sets(p))
            if (s_isolates(p, s).empty()) t.check(!three_consecutive(s, n), "P_" + n_(n) + " " + s.to_string());
        for (auto s : all_min_secure_sets(p)) {
            if (!s_isolates(p, s).empty()) continue;
            ++min_checks;
            min_violations += three_consecutive(s, n);
        }
    }
    return t.outcome("minimum-cardinality reading: " + n_(min_checks) + " isolate-free sets, " + n_(min_violations) +
                     " with three consecutive");
}

Outcome c11() {
    Tally t;
    std::vector<std::string> log;
    auto confirm = [&](const Construction& c, const std::string& label) {
        const auto a = gs(c.graph), b = gs_mu(c.graph);
        t.check(a == c.spec.expected_gamma_s && b == c.spec.expected_gamma_s_mu,
                label + " solved (" + n_(a) + "," + n_(b) + ")");
    };
    for (long k = 1; k <= 3; ++k) confirm(construct_gap_positive(k), "gap+ k=" + std::to_string(k));
    for (long k = 0; k <= 5; ++k) {
        const auto c = construct_gap_nonnegative(k);
        confirm(c, "gap0 k=" + std::to_string(k));
        t.check(static_cast<long>(c.spec.expected_gamma_s) - static_cast<long>(c.spec.expected_gamma_s_mu) == k,
                "gap0 claimed gap");
    }
    for (long a = 2; a <= 4; ++a)
        for (long b = 3; b <= 2 * a - 1; ++b)
            confirm(construct_prescribed(a, b), "prescribed (" + std::to_string(a) + "," + std::to_string(b) + ")");
    for (long k = 4; k <= 6; ++k) {
        const auto spec = construct_gap_positive(k).spec;
        const auto n = gap_positive_path_order(k);
        t.check(spec.expected_gamma_s == formulas::gamma_s_path(n) &&
                    spec.expected_gamma_s_mu == formulas::gamma_s_mu_path(n) &&
                    static_cast<long>(spec.expected_gamma_s_mu) - static_cast<long>(spec.expected_gamma_s) == k,
                "gap+ k=" + std::to_string(k) + " formula");
        log.push_back("k=" + std::to_string(k) + " P_" + n_(n) + " (" + n_(spec.expected_gamma_s) + "," +
                      n_(spec.expected_gamma_s_mu) + ")");
    }
    std::string extra = "gap+ k=3 solved directly (mu order 29); formula oracle substituted for";
    for (const auto& l : log) extra += " " + l;
    return t.outcome(extra);
}

Outcome c12() {
    Tally t;
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_graphs(n, false)) t.check(gs(g) == oracle::min_secure(g), to_graph6(g));
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int i = 0; i < 200; ++i) {
        const auto g = make_random(1 + rng() % 12, density(rng), rng);
        t.check(gs(g) == oracle::min_secure(g), to_graph6(g));
    }
    return t.outcome();
}

Outcome c13() {
    Tally t;
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_graphs(n, false)) t.check(from_graph6(to_graph6(g)) == g, to_graph6(g));
    const std::size_t expected[] = {0, 1, 2, 4, 11, 34, 156, 1044};
    for (std::size_t n = 4; n <= 7; ++n) {
        const auto c = enumerate_graphs(n, false).size();
        t.check(c == expected[n], "n=" + n_(n) + " count " + n_(c));
    }
    const std::pair<const char*, std::size_t> bad[] = {
        {"", 0}, {" h", 0}, {"C\x7f", 1}, {"Dh", 2}, {"Chx", 2}, {"Bx", 1}, {"~??", 3}};
    for (const auto& [text, pos] : bad) {
        bool positioned = false;
        try {
            from_graph6(text);
        } catch (const Graph6Error& e) {
            positioned = e.position() == pos;
        }
        t.check(positioned, std::string("malformed '") + text + "'");
    }
    return t.outcome();
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"path/cycle baseline", c1},
        {"Mycielskian path/cycle", c2},
        {"domination shift", c3},
        {"dominating vertex gives 3", c4},
        {"max degree n-2 gives at most 4", c5},
        {"complete bipartite tables", c6},
        {"lift and bounds", c7},
        {"epn characterisation", c8},
        {"structure of 3-3 graphs", c9},
        {"path minimal-set property", c10},
        {"constructions", c11},
        {"oracle equivalence", c12},
        {"graph6 codec", c13},
    };
    const double budget_s[] = {60, 600, 60, 120, 120, 300, 1e9, 1e9, 1e9, 300, 1800, 1e9, 1e9};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        auto o = criteria[i].second();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > budget_s[i]) {
            o.ok = false;
            o.detail += "; over time budget";
        }
        failed += !o.ok;
        std::printf("%s criterion %zu: %s (%.2fs) %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
