// nsbox: command-line front end for the 2-2-2 no-signaling box toolkit.
//
// Exit codes: 0 success, 1 box-validation failure, 2 argument or I/O error,
// 3 failed --assert-postquantum, 4 reproduction mismatch.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nsbox/json.hpp"
#include "nsbox/nsbox.hpp"

using namespace nsbox;

namespace {

struct Fmt {
    bool full = false;
    std::string operator()(double v) const {
        char buf[48];
        std::snprintf(buf, sizeof buf, full ? "%.17g" : "%.6g", v);
        return buf;
    }
};

void print_table(const Behavior& b, const Fmt& fmt) {
    static const char* rows[4] = {"xy=00", "xy=01", "xy=10", "xy=11"};
    std::printf("%-6s %12s %12s %12s %12s\n", "", "ab=00", "ab=01", "ab=10", "ab=11");
    for (int s = 0; s < 4; ++s) {
        std::printf("%-6s", rows[s]);
        for (int o = 0; o < 4; ++o) std::printf(" %12s", fmt(b.p[s][o]).c_str());
        std::printf("\n");
    }
}

void print_summary(const Behavior& b, const Fmt& fmt) {
    std::printf("chsh = %s\n", fmt(chsh(b)).c_str());
    const auto cert = hardy_test(b);
    std::printf("hardy_success = %s (is_hardy = %s)\n", fmt(cert.success).c_str(),
                cert.is_hardy ? "true" : "false");
}

Behavior load_box(const std::string& name, const std::string& path) {
    if (!name.empty() && !path.empty())
        throw Error("give either a catalog name or an input path, not both");
    if (!name.empty()) return named_box(name);
    if (!path.empty()) return read_behavior_file(path);
    throw Error("no input box given (use --name or --in)");
}

// Prints violations and returns false when the box fails validation.
bool require_valid(const Behavior& b) {
    const auto report = validate(b);
    for (const auto& issue : report.issues)
        std::printf("invalid box: %s\n", issue.detail.c_str());
    return report.ok();
}

distill::AxisSpec parse_axis(const std::string& text) {
    distill::AxisSpec axis;
    const auto c1 = text.find(':');
    try {
        if (c1 == std::string::npos) {
            axis.lo = axis.hi = std::stod(text);
            axis.count = 1;
            return axis;
        }
        const auto c2 = text.find(':', c1 + 1);
        if (c2 == std::string::npos) throw GridError("axis spec must be value or min:max:count");
        axis.lo = std::stod(text.substr(0, c1));
        axis.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        axis.count = std::stoll(text.substr(c2 + 1));
    } catch (const GridError&) {
        throw;
    } catch (const std::exception&) {
        throw GridError("cannot parse axis spec \"" + text + "\"");
    }
    if (axis.count < 1 || axis.hi < axis.lo)
        throw GridError("axis spec needs min <= max and count >= 1");
    return axis;
}

// Deterministic splitmix64 stream for the randomized reproduction targets.
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    SimplexDecomposition simplex_weights9() {
        SimplexDecomposition d;
        double sum = 0.0;
        for (double& w : d.c) {
            w = -std::log(1.0 - uniform());
            sum += w;
        }
        for (double& w : d.c) w /= sum;
        d.residual = 0.0;
        return d;
    }
};

// ---------------------------------------------------------------------------
// reproduce targets

struct ReproCheck {
    std::string name;
    double observed = 0.0;
    double expected = 0.0;
    double tol = 0.0;
    bool pass = false;
};

ReproCheck near(const std::string& name, double observed, double expected, double tol) {
    return {name, observed, expected, tol, std::abs(observed - expected) <= tol};
}

ReproCheck holds(const std::string& name, bool ok) {
    return {name, ok ? 1.0 : 0.0, 1.0, 0.0, ok};
}

std::vector<ReproCheck> repro_thm1_hardy() {
    std::vector<ReproCheck> checks;
    checks.push_back(near("hardy(H_Q_max)", hardy_test(h_q_max(), 1e-12).success,
                          hardy_quantum_bound(), 1e-12));
    const double inv_phi = 2.0 / (1.0 + std::sqrt(5.0));
    for (double sign : {-1.0, 1.0}) {
        const double lambda = inv_phi + sign * 1e-6;
        const Behavior parent = mix({lambda, 1.0 - lambda}, {h_q_max(), local_box(1)});
        const double gain =
            hardy_test(wiring::wire_pair(parent, parent)).success - hardy_test(parent).success;
        checks.push_back(holds(sign < 0 ? "2-copy gain below 1/phi" : "no 2-copy gain above 1/phi",
                               sign < 0 ? gain > 0.0 : gain <= 0.0));
    }
    const auto d = decompose_simplex(mix({1e-6, 1.0 - 1e-6}, {h_q_max(), local_box(1)}));
    checks.push_back(near("distilled success at lambda=1e-6",
                          distill::optimal_copies(d.c[0], d.c[1]).value_opt, 0.0410237, 1e-3));
    return checks;
}

std::vector<ReproCheck> repro_prop1_copies() {
    std::vector<ReproCheck> checks;
    const auto d = decompose_simplex(h_ns());
    const auto opt = distill::optimal_copies(d.c[0], d.c[1]);
    checks.push_back(holds("critical point in (7,8)", opt.n_star > 7.0 && opt.n_star < 8.0));
    checks.push_back(near("floor of the critical point", std::floor(opt.n_star), 7.0, 0.0));
    checks.push_back(near("optimal copies", double(opt.n_opt), 8.0, 0.0));
    checks.push_back(near("optimal success", opt.value_opt, 0.157977, 1e-6));
    checks.push_back(near("matches 8-copy wiring", opt.value_opt,
                          hardy_test(wiring::wire_n_closed(h_ns(), 8)).success, 1e-12));
    return checks;
}

std::vector<ReproCheck> repro_thm2_gain() {
    std::vector<ReproCheck> checks;
    const auto peak = distill::peak_chsh_lambda(1e-7);
    checks.push_back(near("peak CHSH at lambda=1e-7", peak.value, 2.32928, 1e-4));
    checks.push_back(holds("peak copies within 1% of 1.04739e7",
                           std::abs(double(peak.n_opt) - 1.04739e7) / 1.04739e7 <= 0.01));
    checks.push_back(near("Tsirelson gain %",
                          distill::tsirelson_gain(distill::chsh_n_lambda(1e-7, 1), peak.value),
                          39.748, 0.01));
    return checks;
}

std::vector<ReproCheck> repro_thm3_ball() {
    std::vector<ReproCheck> checks;
    Rng rng{211};
    const auto& basis = simplex_basis();
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto w = rng.simplex_weights9();
        const Behavior b = mix(std::span<const double>(w.c.data(), 9),
                               std::span<const Behavior>(basis.data(), 9));
        worst = std::max(worst,
                         std::abs(wiring::chsh_after_two_copy(w) - chsh(wiring::wire_pair(b, b))));
    }
    checks.push_back(near("max |K2 - wired| over 1000 draws", worst, 0.0, 1e-10));

    int strict = 0;
    for (int i = 0; i < 100; ++i) {
        auto w = rng.simplex_weights9();
        w.c[0] = rng.uniform(0.05, 1.0);  // known P_NL fraction
        double rest = 0.0;
        for (int j = 1; j < 9; ++j) rest += w.c[std::size_t(j)];
        for (int j = 1; j < 9; ++j) w.c[std::size_t(j)] *= (1.0 - w.c[0]) / rest;
        const Behavior cbox = mix(std::span<const double>(w.c.data(), 9),
                                  std::span<const Behavior>(basis.data(), 9));
        const double lambda = rng.uniform(0.1, 0.9) * distill::two_copy_ball_radius(w.c[0]);
        const Behavior parent = mix({lambda, 1.0 - lambda}, {cbox, local_box(1)});
        if (chsh(wiring::wire_pair(parent, parent)) > chsh(parent)) ++strict;
    }
    checks.push_back(near("mixtures inside the ball distilling strictly", strict, 100.0, 0.0));
    return checks;
}

std::vector<ReproCheck> repro_figA1() {
    std::vector<ReproCheck> checks;
    const auto recs = distill::sweep_hardy_gap({0.0, 1.0, 200}, {0.0, 1.0, 200});
    const auto& m = distill::max_by_gap(recs);
    checks.push_back(near("max distillation gap", m.gap, 0.0101896, 1e-4));
    checks.push_back(near("argmax r", *m.r, 0.1241, 0.005));
    checks.push_back(near("argmax s", *m.s, 0.8896, 0.005));
    checks.push_back(near("optimal copies at the peak", double(*m.n_opt), 4.0, 0.0));
    return checks;
}

std::vector<ReproCheck> repro_figA2() {
    std::vector<ReproCheck> checks;
    checks.push_back(
        near("limit(1/2, 2/3)", distill::limit_distilled_hardy(0.5, 2.0 / 3.0), 0.0433049, 1e-5));
    const auto recs = distill::sweep_limit_distilled({0.0, 1.0, 200}, {0.0, 1.0, 200});
    const auto& m = distill::max_by_distilled(recs);
    checks.push_back(near("argmax r", *m.r, 0.5, 0.005));
    checks.push_back(near("argmax s", *m.s, 0.667, 0.005));
    return checks;
}

std::vector<ReproCheck> repro_figD1() {
    std::vector<ReproCheck> checks;
    const auto peak = distill::peak_chsh_lambda(1e-7);
    checks.push_back(near("peak CHSH", peak.value, 2.32928, 1e-4));
    checks.push_back(
        holds("CHSH dips below 2 past the peak", distill::chsh_n_lambda(1e-7, 350000000LL) < 2.0));
    checks.push_back(near("late-copy saturation at 2",
                          distill::chsh_n_lambda(1e-7, 1000000000000LL), 2.0, 1e-12));
    return checks;
}

std::vector<ReproCheck> repro_appE() {
    std::vector<ReproCheck> checks;
    checks.push_back(near("chsh(H_NS)", chsh(h_ns()), 2.2, 1e-12));
    const Behavior wired8 = wiring::wire_n_closed(h_ns(), 8);
    checks.push_back(near("hardy(8-copy H_NS)", hardy_test(wired8).success, 0.157977, 1e-6));
    checks.push_back(near("chsh(8-copy H_NS)", chsh(wired8), 2.63088, 1e-5));
    checks.push_back(near("IC on H_NS", detect::ic_check(h_ns()).quantity, 0.9578, 1e-4));
    checks.push_back(near("IC on 8-copy H_NS", detect::ic_check(wired8).quantity, 0.9565, 1e-4));
    checks.push_back(holds("NTCC negative on H_NS", !detect::ntcc_check(h_ns()).positive));
    checks.push_back(holds("NTCC negative on 8-copy H_NS", !detect::ntcc_check(wired8).positive));
    checks.push_back(
        holds("hardy_bound positive on H_NS", detect::hardy_bound_detector(h_ns(), 8).positive));
    const auto prime = detect::hardy_bound_detector(h_ns_prime(), 2);
    checks.push_back(near("2-copy hardy success on H_NS_prime", prime.quantity, 0.0925, 1e-4));
    checks.push_back(holds("hardy_bound positive on H_NS_prime", prime.positive));
    checks.push_back(
        holds("NTCC negative on H_NS_prime", !detect::ntcc_check(h_ns_prime()).positive));
    checks.push_back(holds("IC negative on H_NS_prime", !detect::ic_check(h_ns_prime()).positive));
    return checks;
}

const std::vector<std::pair<std::string, std::vector<ReproCheck> (*)()>>& repro_targets() {
    static const std::vector<std::pair<std::string, std::vector<ReproCheck> (*)()>> targets = {
        {"thm1-hardy", repro_thm1_hardy}, {"thm2-gain", repro_thm2_gain},
        {"thm3-ball", repro_thm3_ball},   {"prop1-copies", repro_prop1_copies},
        {"figA1", repro_figA1},           {"figA2", repro_figA2},
        {"figD1", repro_figD1},           {"appE-postquantum", repro_appE},
    };
    return targets;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-2-2 no-signaling behaviors: measures, OR-AND wiring, sweeps, detection"};
    app.require_subcommand(1);
    Fmt fmt;
    app.add_flag("--full-precision", fmt.full, "print 17 significant digits instead of 6");
    int exit_code = 0;

    // box ------------------------------------------------------------------
    auto* box = app.add_subcommand("box", "show, validate, decompose or canonicalize one box");
    box->require_subcommand(1);
    struct {
        std::string name, in, out;
    } box_args;
    for (const char* sub : {"show", "validate", "decompose", "canonicalize"}) {
        auto* cmd = box->add_subcommand(sub);
        cmd->add_option("--name", box_args.name, "catalog box name");
        cmd->add_option("--in", box_args.in, "behavior JSON path");
        if (std::string(sub) == "show" || std::string(sub) == "canonicalize")
            cmd->add_option("--out", box_args.out, "write resulting behavior JSON here");
    }
    box->callback([&] {
        const Behavior b = load_box(box_args.name, box_args.in);
        const std::string sub = box->get_subcommands().front()->get_name();
        if (sub == "show") {
            print_table(b, fmt);
            print_summary(b, fmt);
            if (!box_args.out.empty()) write_behavior_file(box_args.out, b);
            return;
        }
        if (sub == "validate") {
            if (!require_valid(b)) {
                exit_code = 1;
                return;
            }
            std::printf("valid\n");
            return;
        }
        if (!require_valid(b)) {
            exit_code = 1;
            return;
        }
        if (sub == "decompose") {
            const auto d = decompose_simplex(b);
            static const char* labels[9] = {"P_NL", "P_L1", "P_L2", "P_L3", "P_L4",
                                            "P_L5", "P_L6", "P_L7", "P_L8"};
            for (int i = 0; i < 9; ++i)
                std::printf("c%d (%s) = %s\n", i, labels[i], fmt(d.c[std::size_t(i)]).c_str());
            std::printf("residual = %s\n", fmt(d.residual).c_str());
        } else {  // canonicalize
            const auto canon = canonicalize(b);
            std::printf("chsh_max = %s\n", fmt(canon.chsh_max).c_str());
            std::printf("relabeling code = %d (swap=%d inA=%d inB=%d outA=%d%d outB=%d%d)\n",
                        canon.relabeling.encode(), int(canon.relabeling.swap_parties),
                        int(canon.relabeling.flip_input_a), int(canon.relabeling.flip_input_b),
                        int(canon.relabeling.flip_output_a[0]),
                        int(canon.relabeling.flip_output_a[1]),
                        int(canon.relabeling.flip_output_b[0]),
                        int(canon.relabeling.flip_output_b[1]));
            print_table(canon.box, fmt);
            if (!box_args.out.empty()) write_behavior_file(box_args.out, canon.box);
        }
    });

    // wire -----------------------------------------------------------------
    auto* wire = app.add_subcommand("wire", "apply the OR-AND wiring");
    struct {
        std::vector<std::string> names, ins;
        long long copies = 0;
        std::string method = "auto";
        long long rounds = 1000000;
        std::uint64_t seed = 1;
        std::string out;
    } wire_args;
    wire->add_option("--name", wire_args.names, "catalog parent (repeatable, ordered)");
    wire->add_option("--in", wire_args.ins, "behavior JSON parent (repeatable, after names)");
    wire->add_option("--copies", wire_args.copies, "wire n identical copies of one parent");
    wire->add_option("--method", wire_args.method, "closed | chain | mc (default: closed)")
        ->check(CLI::IsMember({"auto", "closed", "chain", "mc"}));
    wire->add_option("--rounds", wire_args.rounds, "Monte Carlo rounds (method mc)");
    wire->add_option("--seed", wire_args.seed, "Monte Carlo seed (method mc)");
    wire->add_option("--out", wire_args.out, "write the child behavior JSON here");
    wire->callback([&] {
        std::vector<Behavior> parents;
        for (const auto& n : wire_args.names) parents.push_back(named_box(n));
        for (const auto& p : wire_args.ins) parents.push_back(read_behavior_file(p));
        if (parents.empty()) throw Error("no parent boxes given");
        for (const auto& p : parents)
            if (!require_valid(p)) {
                exit_code = 1;
                return;
            }
        std::string method = wire_args.method;
        if (wire_args.copies > 0) {
            if (parents.size() != 1) throw Error("--copies expects exactly one parent box");
            if (method == "auto") method = "closed";
            parents.assign(std::size_t(wire_args.copies), parents[0]);
        } else if (method == "closed" || method == "auto") {
            method = parents.size() == 1 ? "closed" : "chain";
        }
        Behavior child;
        if (method == "closed") {
            child = wiring::wire_n_closed(parents[0], (long long)parents.size());
        } else if (method == "chain") {
            child = wiring::wire_chain(parents);
        } else {
            const auto mc = wiring::monte_carlo_wire(parents, wire_args.rounds, wire_args.seed);
            child = mc.empirical;
            double max_se = 0.0;
            for (int s = 0; s < 4; ++s)
                for (int o = 0; o < 4; ++o) max_se = std::max(max_se, mc.standard_error[s][o]);
            std::printf("monte carlo: rounds = %lld, seed = %llu, max standard error = %s\n",
                        mc.rounds, (unsigned long long)mc.seed, fmt(max_se).c_str());
        }
        print_table(child, fmt);
        print_summary(child, fmt);
        if (!wire_args.out.empty()) write_behavior_file(wire_args.out, child);
    });

    // sweep ------------------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "grid sweeps behind the distillation analyses");
    struct {
        std::string quantity;
        std::string r = "0:1:200", s = "0:1:200", n;
        double lambda = -1.0;
        bool n_around_peak = false;
        std::string out;
    } sweep_args;
    sweep->add_option("--quantity", sweep_args.quantity, "gap | limit | chsh-n")
        ->required()
        ->check(CLI::IsMember({"gap", "limit", "chsh-n"}));
    sweep->add_option("--r", sweep_args.r, "r axis: value or min:max:count (default 0:1:200)");
    sweep->add_option("--s", sweep_args.s, "s axis: value or min:max:count (default 0:1:200)");
    sweep->add_option("--lambda", sweep_args.lambda, "mixing weight (quantity chsh-n)");
    sweep->add_option("--n", sweep_args.n, "copy-count axis min:max:count (quantity chsh-n)");
    sweep->add_flag("--n-around-peak", sweep_args.n_around_peak,
                    "sample copy counts logarithmically around the CHSH peak");
    sweep->add_option("--out", sweep_args.out, "CSV output path")->required();
    sweep->callback([&] {
        std::vector<distill::SweepRecord> records;
        if (sweep_args.quantity == "chsh-n") {
            if (!(sweep_args.lambda > 0.0 && sweep_args.lambda <= 1.0))
                throw GridError("chsh-n sweeps need --lambda in (0,1]");
            std::set<long long> ns;
            if (sweep_args.n_around_peak) {
                const auto peak = distill::peak_chsh_lambda(sweep_args.lambda);
                const double lo = std::max(1.0, double(peak.n_opt) / 10.0);
                const double hi = std::max(lo + 1.0, double(peak.n_opt) * 10.0);
                for (int i = 0; i < 241; ++i)
                    ns.insert((long long)std::llround(
                        std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / 240.0)));
                for (long long d : {-1LL, 0LL, 1LL})
                    if (peak.n_opt + d >= 1) ns.insert(peak.n_opt + d);
            } else if (!sweep_args.n.empty()) {
                const auto axis = parse_axis(sweep_args.n);
                if (axis.lo < 1.0) throw GridError("copy counts start at 1");
                for (long long i = 0; i < axis.count; ++i) {
                    const double t =
                        axis.count == 1
                            ? axis.lo
                            : axis.lo + (axis.hi - axis.lo) * double(i) / double(axis.count - 1);
                    ns.insert((long long)std::llround(t));
                }
            } else {
                throw GridError("chsh-n sweeps need --n or --n-around-peak");
            }
            const std::vector<long long> ns_sorted(ns.begin(), ns.end());
            records = distill::sweep_chsh_copies(sweep_args.lambda, ns_sorted);
            const auto& m = distill::max_by_distilled(records);
            std::printf("peak chsh = %s at n = %lld (parent %s)\n", fmt(m.distilled_value).c_str(),
                        *m.n_opt, fmt(m.parent_value).c_str());
        } else {
            const auto r_axis = parse_axis(sweep_args.r);
            const auto s_axis = parse_axis(sweep_args.s);
            if (sweep_args.quantity == "gap") {
                records = distill::sweep_hardy_gap(r_axis, s_axis);
                const auto& m = distill::max_by_gap(records);
                std::printf("max gap = %s at (r = %s, s = %s), n_opt = %lld\n", fmt(m.gap).c_str(),
                            fmt(*m.r).c_str(), fmt(*m.s).c_str(), *m.n_opt);
            } else {
                records = distill::sweep_limit_distilled(r_axis, s_axis);
                const auto& m = distill::max_by_distilled(records);
                std::printf("max distilled = %s at (r = %s, s = %s)\n",
                            fmt(m.distilled_value).c_str(), fmt(*m.r).c_str(), fmt(*m.s).c_str());
            }
        }
        std::ofstream os(sweep_args.out);
        if (!os) throw Error("cannot open for writing: " + sweep_args.out);
        distill::write_sweep_csv(os, records);
        std::printf("wrote %zu records to %s\n", records.size(), sweep_args.out.c_str());
    });

    // detect -----------------------------------------------------------------
    auto* det = app.add_subcommand("detect", "run the post-quantum detector battery");
    struct {
        std::string name, in;
        long long max_copies = 8;
        bool assert_pq = false;
    } det_args;
    det->add_option("--name", det_args.name, "catalog box name");
    det->add_option("--in", det_args.in, "behavior JSON path");
    det->add_option("--max-copies", det_args.max_copies,
                    "copy budget for the distillation detector");
    det->add_flag("--assert-postquantum", det_args.assert_pq,
                  "exit 3 unless some detector certifies post-quantumness");
    det->callback([&] {
        const Behavior b = load_box(det_args.name, det_args.in);
        if (!require_valid(b)) {
            exit_code = 1;
            return;
        }
        const auto verdicts = detect::detect_all(b, det_args.max_copies);
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        bool any_positive = false;
        for (const auto& v : verdicts) {
            arr.push_back(verdict_to_json(v));
            any_positive = any_positive || v.positive;
        }
        std::printf("%s\n", arr.dump(2).c_str());
        if (det_args.assert_pq && !any_positive) exit_code = 3;
    });

    // reproduce ---------------------------------------------------------------
    auto* rep = app.add_subcommand("reproduce", "re-run the pinned reference results");
    std::string rep_key;
    {
        std::vector<std::string> keys = {"all"};
        for (const auto& [key, fn] : repro_targets()) keys.push_back(key);
        rep->add_option("key", rep_key, "target key or 'all'")
            ->required()
            ->check(CLI::IsMember(keys));
    }
    rep->callback([&] {
        int failures = 0;
        for (const auto& [key, fn] : repro_targets()) {
            if (rep_key != "all" && rep_key != key) continue;
            for (const auto& check : fn()) {
                std::printf("%-18s %-42s observed=%-22s expected=%-22s %s\n", key.c_str(),
                            check.name.c_str(), fmt(check.observed).c_str(),
                            fmt(check.expected).c_str(), check.pass ? "PASS" : "FAIL");
                if (!check.pass) ++failures;
            }
        }
        if (failures > 0) {
            std::printf("%d check(s) failed\n", failures);
            exit_code = 4;
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const NotInSimplexError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return exit_code;
}
