// Pipeline driver: gen -> harvest -> reduce -> verify, plus inspect, with
// reproducible seeds and JSON manifests. Exit codes: 0 success, 1 error,
// 2 verification failure.

#include <cliquespace/harvest.hpp>
#include <cliquespace/io.hpp>
#include <cliquespace/oracle.hpp>
#include <cliquespace/permute.hpp>
#include <cliquespace/reduce.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace cs = cliquespace;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerifyFail = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("CLIQUESPACE_SEED")) return std::strtoull(env, nullptr, 0);
    return 1;
}

cs::Rational parse_rational(const json& j) {
    if (j.is_number_integer()) return cs::Rational(j.get<std::int64_t>());
    if (j.is_array() && j.size() == 2)
        return cs::Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos) return cs::Rational(cs::BigInt(s));
        return cs::Rational(cs::BigInt(s.substr(0, slash)), cs::BigInt(s.substr(slash + 1)));
    }
    throw std::invalid_argument("rational must be an integer, [num, den], or \"num/den\"");
}

cs::GraphVariant parse_graph_variant(const std::string& s) {
    if (s == "er") return cs::GraphVariant::ER;
    if (s == "pc") return cs::GraphVariant::PC;
    if (s == "kpc") return cs::GraphVariant::KPC;
    if (s == "clkpc") return cs::GraphVariant::CLKPC;
    throw std::invalid_argument("unknown graph variant: " + s);
}

cs::HypergraphVariant parse_hyper_variant(const std::string& s) {
    if (s == "her") return cs::HypergraphVariant::HER;
    if (s == "hpc") return cs::HypergraphVariant::HPC;
    if (s == "clhpc") return cs::HypergraphVariant::CLHPC;
    throw std::invalid_argument("unknown hypergraph variant: " + s);
}

bool is_hyper_variant(const std::string& s) { return s == "her" || s == "hpc" || s == "clhpc"; }

// Public sidecar never carries the planted set; that goes to <out>.secret.json.
void write_sidecars(const std::string& out, json sidecar) {
    json pub = sidecar;
    pub.erase("planted");
    cs::write_json(out + ".json", pub);
    if (sidecar.contains("planted")) cs::write_json(out + ".secret.json", sidecar);
}

cs::BitTape tape_from_seed(std::uint64_t seed, std::uint64_t nbits) {
    cs::BitStream stream(seed);
    std::vector<std::uint8_t> bits(nbits);
    for (std::uint64_t i = 0; i < nbits; ++i) bits[i] = std::uint8_t(stream.bit_at(i));
    return cs::BitTape::explicit_tape(std::move(bits), cs::TapePolicy::MultipleAccess);
}

void write_packed_bits(const std::string& path, cs::BitTape& tape) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path);
    std::uint8_t acc = 0;
    int fill = 0;
    for (std::uint64_t i = 0; i < tape.length(); ++i) {
        acc |= std::uint8_t(tape.read(i) << fill);
        if (++fill == 8) {
            os.put(char(acc));
            acc = 0;
            fill = 0;
        }
    }
    if (fill) os.put(char(acc));
}

cs::SubInstanceView view_of(const std::shared_ptr<const cs::GraphInstance>& g) {
    cs::SubInstanceView v;
    v.n = g->n;
    v.k = g->k;
    v.variant = g->variant;
    v.ell = g->ell;
    v.edge = [g](std::uint64_t i, std::uint64_t j) { return g->edge(i, j); };
    return v;
}

// ---- gen ---------------------------------------------------------------

json run_gen(const json& args) {
    std::string variant = args.at("variant").get<std::string>();
    std::uint64_t seed = args.value("seed", default_seed());
    std::string out = args.at("out").get<std::string>();
    cs::BitStream stream(seed);
    json manifest;
    manifest["stage"] = "gen";
    manifest["seed"] = seed;
    manifest["generator"] = cs::BitStream::kGeneratorId;
    manifest["out"] = out;
    if (is_hyper_variant(variant)) {
        auto h = cs::sample_hypergraph(parse_hyper_variant(variant), args.at("n").get<std::uint64_t>(),
                                       args.at("s").get<std::uint64_t>(), args.value("k", std::uint64_t(0)), stream);
        cs::write_file_hpg1(out, h);
        write_sidecars(out, cs::hypergraph_sidecar(h, seed, cs::BitStream::kGeneratorId));
        manifest["variant"] = cs::to_string(h.variant);
        manifest["bits"] = h.hyperedges.size();
    } else {
        auto g = cs::sample_graph(parse_graph_variant(variant), args.at("n").get<std::uint64_t>(),
                                  args.value("k", std::uint64_t(0)), args.value("ell", std::uint64_t(0)), stream);
        cs::write_file_pcg1(out, g);
        write_sidecars(out, cs::graph_sidecar(g, seed, cs::BitStream::kGeneratorId));
        manifest["variant"] = cs::to_string(g.variant);
        manifest["bits"] = g.edges.size();
    }
    manifest["stream_bits_consumed"] = stream.consumed();
    return manifest;
}

// ---- harvest -----------------------------------------------------------

json run_harvest(const json& args) {
    std::string scheme = args.at("scheme").get<std::string>();
    std::string in = args.at("in").get<std::string>();
    std::string out = args.at("out").get<std::string>();

    cs::HarvestView view = [&]() {
        if (scheme == "clhpc") {
            auto src = std::make_shared<cs::HypergraphInstance>(cs::read_file_hpg1(in));
            if (std::filesystem::exists(in + ".secret.json")) cs::apply_sidecar(*src, cs::read_json(in + ".secret.json"));
            return cs::harvest_clhpc(src);
        }
        auto src = std::make_shared<cs::GraphInstance>(cs::read_file_pcg1(in));
        if (std::filesystem::exists(in + ".secret.json")) cs::apply_sidecar(*src, cs::read_json(in + ".secret.json"));
        if (scheme == "pc-basic") return cs::harvest_pc_basic(src, args.at("m").get<std::uint64_t>());
        if (scheme == "kpc-basic")
            return cs::harvest_kpc_basic(src, args.at("ks").get<std::uint64_t>(), args.at("m").get<std::uint64_t>());
        if (scheme == "kpc-advanced") return cs::harvest_kpc_advanced(src, args.at("ks").get<std::uint64_t>());
        if (scheme == "clkpc") return cs::harvest_clkpc(src, args.at("ks").get<std::uint64_t>());
        throw std::invalid_argument("unknown harvest scheme: " + scheme);
    }();

    cs::GraphInstance sub = cs::materialize_sub(view);
    cs::write_file_pcg1(out, sub);
    write_packed_bits(out + ".rand.bin", view.rand);

    json manifest;
    manifest["stage"] = "harvest";
    manifest["scheme"] = cs::to_string(view.scheme);
    manifest["in"] = in;
    manifest["out"] = out;
    manifest["budget"] = view.budget;
    manifest["rand_bits_read"] = view.rand.reads();
    manifest["rand_is_pseudo"] = view.rand_is_pseudo;
    manifest["sub"] = {{"n", sub.n}, {"k", sub.k}, {"ell", sub.ell}, {"variant", cs::to_string(sub.variant)}};
    manifest["rand_ordering"] = "colex rank order of the qualifying edge/hyperedge set";
    cs::write_json(out + ".json", manifest);
    if (view.event_ok) {
        json secret;
        secret["event_ok"] = *view.event_ok;
        cs::write_json(out + ".secret.json", secret);
    }
    return manifest;
}

// ---- reduce ------------------------------------------------------------

json run_reduce(const json& args) {
    std::string target = args.at("target").get<std::string>();
    std::string in = args.at("in").get<std::string>();
    std::string out = args.at("out").get<std::string>();
    std::uint64_t rand_seed = args.value("rand_seed", default_seed());
    json params = args.at("params");
    if (params.is_string()) params = cs::read_json(params.get<std::string>());

    auto src = std::make_shared<cs::GraphInstance>(cs::read_file_pcg1(in));
    cs::SubInstanceView sub = view_of(src);

    json manifest;
    manifest["stage"] = "reduce";
    manifest["target"] = target;
    manifest["in"] = in;
    manifest["out"] = out;
    manifest["rand_seed"] = rand_seed;

    if (target == "spca") {
        cs::SpcaParams p = cs::spca_derive_params(
            params.at("n").get<std::uint64_t>(), params.at("m").get<std::uint64_t>(),
            params.at("k").get<std::uint64_t>(), parse_rational(params.at("mu")),
            params.at("d_bar").get<std::uint64_t>(),
            params.contains("delta") ? parse_rational(params.at("delta")) : cs::Rational(1, 12));
        cs::BitTape rand = tape_from_seed(rand_seed, p.rand_budget());
        auto inst = cs::spca_reduce(sub, p, rand);
        json header = {{"d_bar", p.d_bar},       {"n_bar", p.n_bar},
                       {"k_bar", p.k_bar},       {"theta_bar", cs::Rational(p.theta_bar).str()},
                       {"rmu_ok", p.rmu_ok},     {"rmu_failures", p.rmu_failures},
                       {"rand_seed", rand_seed}, {"rand_budget", p.rand_budget()}};
        cs::write_spca_output(out, p.d_bar, p.n_bar, inst.entry, header);
        manifest["rand_budget"] = p.rand_budget();
        manifest["rand_budget_formula"] = "(d_bar-(n-m)/2)*n_bar + 2*10*d_bar*ceil(log2 d_bar)^2 + n_bar";
    } else if (target == "submat") {
        cs::SubmatParams p = cs::submat_derive_params(
            params.at("ell").get<std::uint64_t>(), params.at("k_s").get<std::uint64_t>(),
            params.at("p_bar").get<std::uint64_t>(), parse_rational(params.at("lambda_bar")));
        cs::DiscretePmf q0 = cs::pmf_from_json(cs::read_json(params.at("q0").get<std::string>()));
        cs::DiscretePmf q1 = cs::pmf_from_json(cs::read_json(params.at("q1").get<std::string>()));
        cs::BitTape rand = tape_from_seed(rand_seed, p.rand_budget());
        auto inst = cs::submat_reduce(sub, p, rand, q0, q1);
        json header = {{"p_bar", p.p_bar}, {"t_bar", p.t_bar}, {"T", p.t_big},
                       {"w_bar", p.w_bar}, {"n2", p.n2},       {"rand_seed", rand_seed},
                       {"rand_budget", p.rand_budget()}};
        cs::write_submat_output(out, p.p_bar, p.t_bar, inst.entry, header);
        manifest["rand_budget"] = p.rand_budget();
        manifest["rand_budget_formula"] = "2*N2^2*T_bar";
    } else if (target == "kwise") {
        cs::KwiseParams p = cs::kwise_derive_params(parse_rational(params.at("alpha")),
                                                    params.at("ell_exp").get<std::uint64_t>(),
                                                    params.at("k").get<std::uint64_t>(),
                                                    params.at("s_bar").get<std::uint64_t>());
        cs::BitTape rand = tape_from_seed(rand_seed, p.rand_budget());
        auto inst = cs::kwise_reduce(sub, p, rand);
        json header = {{"n_bar", p.n_bar}, {"s_bar", p.s_bar},     {"k_bar", p.k_bar},
                       {"eps", p.eps},     {"eps_prime", p.eps_prime}, {"rand_seed", rand_seed},
                       {"rand_budget", p.rand_budget()}};
        cs::write_kwise_output(out, p.s_bar, p.n_bar, inst.sample_bit, header);
        manifest["rand_budget"] = p.rand_budget();
        manifest["rand_budget_formula"] = "n + n*(n_bar-n) + ell_exp*s_bar";
    } else {
        throw std::invalid_argument("unknown reduce target: " + target);
    }
    return manifest;
}

// ---- verify ------------------------------------------------------------

// Returns {manifest, pass}.
std::pair<json, bool> run_verify(const json& args) {
    std::string test = args.at("test").get<std::string>();
    json report;
    report["stage"] = "verify";
    report["test"] = test;
    bool pass = true;

    if (test == "tv") {
        // pc-basic conditional exactness at n=5, m=1, k=2: conditioned on
        // event_ok, (sub, rand) == PC(4,2) x fair bits, TV = 0.
        std::uint64_t n = 5, m = 1, k = 2;
        auto pair_dist = cs::enumerate_graph_projection(
            cs::GraphVariant::PC, n, k, 0, [&](const cs::GraphInstance& g) -> std::optional<std::string> {
                auto src = std::make_shared<cs::GraphInstance>(g);
                auto v = cs::harvest_pc_basic(src, m);
                if (!v.event_ok || !*v.event_ok) return std::nullopt;
                cs::GraphInstance sub = cs::materialize_sub(v);
                std::string key;
                for (std::uint64_t r = 0; r < sub.edges.size(); ++r) key += char('0' + sub.edges.get(r));
                return key + "|" + cs::read_all_rand(v);
            });
        auto target = cs::product_with_fair_bits(cs::enumerate_graph_distribution(cs::GraphVariant::PC, n - m, k, 0),
                                                 cs::budget_pc_basic(n, m));
        cs::Rational tv = cs::tv_distance(pair_dist.conditioned(), target);
        report["tv"] = tv.str();
        pass = tv == 0;
    } else if (test == "marginals") {
        std::string variant = args.at("variant").get<std::string>();
        std::uint64_t n = args.at("n").get<std::uint64_t>();
        std::uint64_t k = args.value("k", std::uint64_t(0));
        std::uint64_t ell = args.value("ell", std::uint64_t(0));
        std::uint64_t trials = args.value("trials", std::uint64_t(20000));
        std::uint64_t seed = args.value("seed", default_seed());
        cs::GraphVariant gv = parse_graph_variant(variant);
        std::uint64_t nbits = n * (n - 1) / 2;
        std::vector<std::uint64_t> ones(nbits, 0);
        for (std::uint64_t t = 0; t < trials; ++t) {
            cs::BitStream stream(seed + t);
            auto g = cs::sample_graph(gv, n, k, ell, stream);
            for (std::uint64_t r = 0; r < nbits; ++r) ones[r] += std::uint64_t(g.edges.get(r));
        }
        cs::StatReport battery;
        for (std::uint64_t r = 0; r < nbits; ++r) {
            auto [i, j] = cs::edge_unrank(r);
            double p = cs::edge_marginal(gv, n, k, ell, i, j).convert_to<double>();
            battery.tests.push_back(
                cs::proportion_test("edge(" + std::to_string(i) + "," + std::to_string(j) + ")", ones[r], trials, p));
        }
        battery.finalize();
        pass = battery.all_pass();
        for (const auto& t : battery.tests)
            report["tests"].push_back({{"name", t.name}, {"stat", t.statistic}, {"p", t.p_value}, {"pass", t.pass}});
    } else if (test == "partite") {
        std::string in = args.at("in").get<std::string>();
        auto g = cs::read_file_pcg1(in);
        if (std::filesystem::exists(in + ".secret.json")) cs::apply_sidecar(g, cs::read_json(in + ".secret.json"));
        if (!g.planted) throw std::invalid_argument("partite check needs the secret sidecar");
        pass = g.planted->size() == g.k;
        if (g.variant == cs::GraphVariant::KPC || g.variant == cs::GraphVariant::CLKPC) {
            for (std::uint64_t b = 0; b < g.k && pass; ++b) {
                std::uint64_t cnt = 0;
                for (std::uint64_t v : *g.planted)
                    if (v > b * g.ell && v <= (b + 1) * g.ell) ++cnt;
                pass = cnt == 1;
            }
            if (g.variant == cs::GraphVariant::CLKPC && pass)
                pass = std::find(g.planted->begin(), g.planted->end(), std::uint64_t(1)) != g.planted->end();
        }
        for (std::size_t x = 0; x < g.planted->size() && pass; ++x)
            for (std::size_t y = x + 1; y < g.planted->size() && pass; ++y)
                pass = g.edge((*g.planted)[x], (*g.planted)[y]) == 1;
        report["structure_ok"] = pass;
    } else if (test == "clique-bound") {
        std::uint64_t n = args.at("n").get<std::uint64_t>();
        std::uint64_t s = args.value("s", std::uint64_t(2));
        std::uint64_t t = args.at("t").get<std::uint64_t>();
        cs::Rational bound = (s == 2) ? cs::graph_clique_union_bound(n, t) : cs::hyper_clique_union_bound(n, s, t);
        report["bound"] = bound.str();
        report["bound_double"] = bound.convert_to<double>();
    } else if (test == "workspace") {
        // pi_eval under a strict meter at a large input size
        std::uint64_t n = args.value("n", std::uint64_t(1024));
        std::uint64_t r = cs::perm_bits(n);
        cs::BitStream stream(default_seed());
        std::vector<std::uint8_t> bits(r);
        for (std::uint64_t i = 0; i < r; ++i) bits[i] = std::uint8_t(stream.bit_at(i));
        cs::PermFn pi(n, std::move(bits));
        cs::WorkspaceMeter meter = cs::WorkspaceMeter::for_input(r, 16, args.value("strict", true));
        for (std::uint64_t i = 1; i <= std::min<std::uint64_t>(n, 8); ++i) pi.eval(i, &meter);
        report["limit_bits"] = meter.limit();
        report["peak_bits"] = meter.peak();
        pass = !meter.violated();
    } else {
        throw std::invalid_argument("unknown verify test: " + test);
    }
    report["pass"] = pass;
    return {report, pass};
}

// ---- pipeline ----------------------------------------------------------

int run_pipeline(const std::string& config_path) {
    json config = cs::read_json(config_path);
    std::string outdir = config.value("output_dir", std::string("."));
    std::filesystem::create_directories(outdir);
    std::uint64_t seed = config.value("seed", default_seed());
    json manifest;
    manifest["seed"] = seed;
    manifest["generator"] = cs::BitStream::kGeneratorId;
    manifest["stages"] = json::array();
    bool all_pass = true;
    for (auto stage : config.at("stages")) {
        std::string type = stage.at("stage").get<std::string>();
        if (!stage.contains("seed")) stage["seed"] = seed;
        if (type == "gen")
            manifest["stages"].push_back(run_gen(stage));
        else if (type == "harvest")
            manifest["stages"].push_back(run_harvest(stage));
        else if (type == "reduce")
            manifest["stages"].push_back(run_reduce(stage));
        else if (type == "verify") {
            auto [rep, ok] = run_verify(stage);
            manifest["stages"].push_back(rep);
            all_pass = all_pass && ok;
        } else {
            throw std::invalid_argument("unknown pipeline stage: " + type);
        }
    }
    manifest["pass"] = all_pass;
    cs::write_json(outdir + "/manifest.json", manifest);
    std::cout << manifest.dump(2) << "\n";
    return all_pass ? kExitOk : kExitVerifyFail;
}

// ---- inspect -----------------------------------------------------------

int run_inspect(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    char magic[4] = {0, 0, 0, 0};
    is.read(magic, 4);
    std::string m(magic, 4);
    is.seekg(0);
    json out;
    if (m == "PCG1") {
        auto g = cs::read_pcg1(is);
        std::uint64_t ones = 0;
        for (std::uint64_t r = 0; r < g.edges.size(); ++r) ones += std::uint64_t(g.edges.get(r));
        out = {{"format", "PCG1"},
               {"n", g.n},
               {"variant", cs::to_string(g.variant)},
               {"k", g.k},
               {"ell", g.ell},
               {"edge_bits", g.edges.size()},
               {"density", g.edges.size() ? double(ones) / double(g.edges.size()) : 0.0}};
    } else if (m == "HPG1") {
        auto h = cs::read_hpg1(is);
        std::uint64_t ones = 0;
        for (std::uint64_t r = 0; r < h.hyperedges.size(); ++r) ones += std::uint64_t(h.hyperedges.get(r));
        out = {{"format", "HPG1"},
               {"n", h.n},
               {"s", h.s},
               {"variant", cs::to_string(h.variant)},
               {"k", h.k},
               {"hyperedge_bits", h.hyperedges.size()},
               {"density", h.hyperedges.size() ? double(ones) / double(h.hyperedges.size()) : 0.0}};
    } else {
        throw cs::MalformedFile("unrecognized magic in " + path);
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planted-clique reduction toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "sample an instance to a PCG1/HPG1 file");
    std::string g_variant, g_out;
    std::uint64_t g_n = 0, g_k = 0, g_ell = 0, g_s = 3, g_seed = default_seed();
    gen->add_option("--variant", g_variant, "er|pc|kpc|clkpc|her|hpc|clhpc")->required();
    gen->add_option("--n", g_n)->required();
    gen->add_option("--k", g_k);
    gen->add_option("--ell", g_ell);
    gen->add_option("--s", g_s);
    gen->add_option("--seed", g_seed);
    gen->add_option("--out", g_out)->required();

    // harvest
    auto* harvest = app.add_subcommand("harvest", "carve a sub-instance plus randomness tape");
    std::string h_scheme, h_in, h_out;
    std::uint64_t h_m = 0, h_ks = 0;
    harvest->add_option("--scheme", h_scheme, "pc-basic|kpc-basic|kpc-advanced|clkpc|clhpc")->required();
    harvest->add_option("--in", h_in)->required();
    harvest->add_option("--out", h_out)->required();
    harvest->add_option("--m", h_m);
    harvest->add_option("--ks", h_ks);

    // reduce
    auto* reduce = app.add_subcommand("reduce", "run a downstream reduction");
    std::string r_target, r_in, r_out, r_params;
    std::uint64_t r_seed = default_seed();
    reduce->add_option("--target", r_target, "spca|submat|kwise")->required();
    reduce->add_option("--params", r_params, "JSON file or inline JSON object")->required();
    reduce->add_option("--in", r_in)->required();
    reduce->add_option("--rand-seed", r_seed);
    reduce->add_option("--out", r_out)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification oracle");
    std::string v_test, v_in, v_variant;
    std::uint64_t v_n = 0, v_k = 0, v_ell = 0, v_s = 2, v_t = 0, v_trials = 20000, v_seed = default_seed();
    verify->add_option("--test", v_test, "tv|marginals|partite|clique-bound|workspace")->required();
    verify->add_option("--in", v_in);
    verify->add_option("--variant", v_variant);
    verify->add_option("--n", v_n);
    verify->add_option("--k", v_k);
    verify->add_option("--ell", v_ell);
    verify->add_option("--s", v_s);
    verify->add_option("--t", v_t);
    verify->add_option("--trials", v_trials);
    verify->add_option("--seed", v_seed);

    // pipeline
    auto* pipeline = app.add_subcommand("pipeline", "run a staged pipeline from a JSON config");
    std::string p_config;
    pipeline->add_option("--config", p_config)->required();

    // inspect
    auto* inspect = app.add_subcommand("inspect", "print header and bit statistics of a file");
    std::string i_path;
    inspect->add_option("path", i_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            json args = {{"variant", g_variant}, {"n", g_n},       {"k", g_k},  {"ell", g_ell},
                         {"s", g_s},             {"seed", g_seed}, {"out", g_out}};
            std::cout << run_gen(args).dump(2) << "\n";
            return kExitOk;
        }
        if (harvest->parsed()) {
            json args = {{"scheme", h_scheme}, {"in", h_in}, {"out", h_out}, {"m", h_m}, {"ks", h_ks}};
            std::cout << run_harvest(args).dump(2) << "\n";
            return kExitOk;
        }
        if (reduce->parsed()) {
            json params;
            if (!r_params.empty() && r_params.front() == '{')
                params = json::parse(r_params);
            else
                params = r_params;
            json args = {{"target", r_target}, {"in", r_in}, {"out", r_out}, {"rand_seed", r_seed}, {"params", params}};
            std::cout << run_reduce(args).dump(2) << "\n";
            return kExitOk;
        }
        if (verify->parsed()) {
            json args = {{"test", v_test},     {"n", v_n}, {"k", v_k}, {"ell", v_ell},
                         {"s", v_s},           {"t", v_t}, {"trials", v_trials}, {"seed", v_seed}};
            if (!v_in.empty()) args["in"] = v_in;
            if (!v_variant.empty()) args["variant"] = v_variant;
            auto [report, ok] = run_verify(args);
            std::cout << report.dump(2) << "\n";
            return ok ? kExitOk : kExitVerifyFail;
        }
        if (pipeline->parsed()) return run_pipeline(p_config);
        if (inspect->parsed()) return run_inspect(i_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
