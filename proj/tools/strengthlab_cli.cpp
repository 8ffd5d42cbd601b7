// Command-line front end: every subcommand prints one deterministic JSON
// report {command, inputs, result, provenance, seed, exit_status} and
// exits 0 on success, 2 on reported mathematical infeasibility, 3 when
// the decision budget is exhausted, 64 on usage errors. `corpus run`
// executes a JSONL case file in parallel and aggregates pass/fail.

#include "CLI11.hpp"
#include "json.hpp"

#include "strengthlab/cohomology.hpp"
#include "strengthlab/ideal.hpp"
#include "strengthlab/loci.hpp"
#include "strengthlab/multmap.hpp"
#include "strengthlab/numeric.hpp"
#include "strengthlab/parse.hpp"
#include "strengthlab/strength.hpp"
#include "strengthlab/surface.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace strengthlab;

namespace {

constexpr std::uint64_t kDefaultSeed = 20260822;

json int_json(const Integer& v) {
    static const Integer lo = Integer(std::numeric_limits<long long>::min());
    static const Integer hi = Integer(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<unsigned> parse_unsigned_list(const std::string& s) {
    std::vector<unsigned> out;
    for (const std::string& part : split(s, ',')) {
        const long v = std::stol(part);
        if (v < 0) throw std::invalid_argument("expected a nonnegative entry: " + part);
        out.push_back(static_cast<unsigned>(v));
    }
    return out;
}

std::vector<long long> parse_int_list(const std::string& s) {
    std::vector<long long> out;
    for (const std::string& part : split(s, ',')) out.push_back(std::stoll(part));
    return out;
}

json certificate_to_json(const StrengthCertificate& cert) {
    json pairs = json::array();
    for (const auto& [f, g] : cert.pairs) {
        pairs.push_back({{"f", print_poly(f)}, {"g", print_poly(g)}});
    }
    return {{"n", cert.target.num_vars()},
            {"d", cert.target.degree()},
            {"target", print_poly(cert.target)},
            {"type", cert.type_vector},
            {"pairs", pairs}};
}

// Outcome of one executed subcommand, before report assembly.
struct CommandOutcome {
    json inputs = json::object();
    json result = json::object();
    json provenance = json::array();
    int exit_status = 0;
};

int classify_error(const std::exception& e) {
    if (dynamic_cast<const NoRationalPoint*>(&e)) return 2;
    if (dynamic_cast<const DegenerateSamples*>(&e)) return 2;
    if (dynamic_cast<const NotRealTarget*>(&e)) return 2;
    if (dynamic_cast<const BudgetExceeded*>(&e)) return 3;
    if (dynamic_cast<const Error*>(&e)) return 64;
    if (dynamic_cast<const std::invalid_argument*>(&e)) return 64;
    if (dynamic_cast<const std::out_of_range*>(&e)) return 64;
    return 70;
}

json make_report(const std::string& command, const CommandOutcome& out, std::uint64_t seed) {
    return {{"command", command},
            {"inputs", out.inputs},
            {"result", out.result},
            {"provenance", out.provenance},
            {"seed", seed},
            {"exit_status", out.exit_status}};
}

// ---- individual subcommand handlers ------------------------------------

struct SliceRankArgs {
    int n = 0;
    std::string f;
};

CommandOutcome run_slice_rank(const SliceRankArgs& a) {
    CommandOutcome out;
    const std::size_t nv = static_cast<std::size_t>(a.n) + 1;
    const HomogeneousPolynomial f = parse_poly(a.f, nv);
    out.inputs = {{"n", a.n}, {"f", print_poly(f)}};
    const SliceRankResult r = slice_rank(f);
    json witness = nullptr;
    if (r.witness) {
        witness = json::array();
        for (const auto& form : *r.witness) witness.push_back(print_poly(form));
    }
    out.result = {{"value", r.value},
                  {"witness_subspace_dim", r.witness_subspace_dim},
                  {"witness", witness}};
    return out;
}

struct DecideArgs {
    int n = 0;
    std::string f;
    unsigned k = 1;
    std::string type;       // "i1,i2,..." or empty for all types
    std::size_t budget = DecideOptions{}.unknown_budget;
};

CommandOutcome run_decide(const DecideArgs& a) {
    CommandOutcome out;
    const std::size_t nv = static_cast<std::size_t>(a.n) + 1;
    const HomogeneousPolynomial f = parse_poly(a.f, nv);
    std::optional<std::vector<unsigned>> type;
    if (!a.type.empty()) type = parse_unsigned_list(a.type);
    out.inputs = {{"n", a.n},
                  {"f", print_poly(f)},
                  {"k", a.k},
                  {"type", type ? json(*type) : json(nullptr)},
                  {"budget", a.budget}};
    DecideOptions opts;
    opts.unknown_budget = a.budget;
    const DecideResult r = decide_strength_leq(f, a.k, type, opts);
    out.result = {{"value", r.value},
                  {"certificate",
                   r.certificate ? certificate_to_json(*r.certificate) : json(nullptr)}};
    return out;
}

struct QuadArgs {
    std::string gram;
};

CommandOutcome run_quad(const QuadArgs& a) {
    CommandOutcome out;
    std::vector<std::vector<Rational>> g;
    for (const std::string& row : split(a.gram, ';')) {
        std::vector<Rational> r;
        for (const std::string& entry : split(row, ',')) {
            try {
                r.emplace_back(entry);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad Gram entry: " + entry);
            }
        }
        g.push_back(std::move(r));
    }
    const QuadraticForm q(g);
    out.inputs = {{"gram", a.gram}};
    const RealStrengthBounds b = quadratic_real_strength_bounds(q);
    out.result = {{"rank", q.rank()},
                  {"positives", q.positives()},
                  {"negatives", q.negatives()},
                  {"strength", quadratic_strength(q)},
                  {"real_lower", b.lower},
                  {"real_upper", b.upper},
                  {"achieved_length", b.achieved_length},
                  {"upper_achieved", b.upper_achieved},
                  {"one_term_real_possible", b.one_term_real_possible},
                  {"certificate", certificate_to_json(b.certificate)}};
    return out;
}

struct RealifyArgs {
    std::string cert_path;
};

CommandOutcome run_realify(const RealifyArgs& a) {
    CommandOutcome out;
    std::ifstream in(a.cert_path);
    if (!in) throw std::invalid_argument("cannot open certificate file: " + a.cert_path);
    json j = json::parse(in);
    const std::size_t nv = j.at("n").get<std::size_t>();
    const HomogeneousPolynomial target = parse_poly(j.at("target").get<std::string>(), nv);
    std::vector<std::pair<HomogeneousPolynomial, HomogeneousPolynomial>> pairs;
    for (const json& p : j.at("pairs")) {
        pairs.emplace_back(parse_poly(p.at("f").get<std::string>(), nv),
                           parse_poly(p.at("g").get<std::string>(), nv));
    }
    const StrengthCertificate cert = make_certificate(target, pairs);
    if (j.contains("type") && j.at("type").get<std::vector<unsigned>>() != cert.type_vector) {
        throw std::invalid_argument("certificate type does not match its pairs");
    }
    if (!verify_certificate(cert)) {
        throw std::invalid_argument("certificate does not verify against its target");
    }
    out.inputs = {{"cert", certificate_to_json(cert)}};
    const StrengthCertificate real = realify(cert);
    out.result = {{"certificate", certificate_to_json(real)},
                  {"original_length", cert.pairs.size()},
                  {"length", real.pairs.size()},
                  {"verified", verify_certificate(real)}};
    return out;
}

struct HilbertArgs {
    int n = 0;
    unsigned d = 0;
    std::string ideal; // JSON array of polynomial strings
};

CommandOutcome run_hilbert(const HilbertArgs& a) {
    CommandOutcome out;
    const std::size_t nv = static_cast<std::size_t>(a.n) + 1;
    const json gens_json = json::parse(a.ideal);
    std::vector<HomogeneousPolynomial> gens;
    json canon = json::array();
    for (const json& s : gens_json) {
        gens.push_back(parse_poly(s.get<std::string>(), nv));
        canon.push_back(print_poly(gens.back()));
    }
    out.inputs = {{"n", a.n}, {"d", a.d}, {"ideal", canon}};
    const GradedIdeal ideal(gens);
    const std::size_t ideal_dim = hilbert_function(ideal, a.d);
    const Integer quot = quotient_dimension(ideal, a.d);
    out.result = {{"ideal_dim", ideal_dim}, {"quotient_dim", int_json(quot)}};
    if (gens.size() <= nv) {
        const RegularSequenceReport reg = is_regular_sequence(gens);
        out.result["regular_sequence"] = reg.is_regular;
        if (reg.is_regular) {
            std::vector<unsigned> degs;
            for (const auto& g : gens) degs.push_back(g.degree());
            const Integer series = complete_intersection_series(degs, nv, a.d);
            const bool agree = series == quot;
            out.result["ci_series"] = int_json(series);
            out.provenance.push_back({{"name", "complete_intersection_series"},
                                      {"formula_value", int_json(series)},
                                      {"oracle_value", int_json(quot)},
                                      {"agree", agree}});
        }
    }
    return out;
}

struct MultmapArgs {
    unsigned n = 0;
    unsigned d = 0;
    std::string w; // comma-separated forms
};

CommandOutcome run_multmap(const MultmapArgs& a) {
    CommandOutcome out;
    const std::size_t nv = static_cast<std::size_t>(a.n) + 1;
    std::vector<HomogeneousPolynomial> w_basis;
    json canon = json::array();
    for (const std::string& s : split(a.w, ',')) {
        w_basis.push_back(parse_poly(s, nv));
        canon.push_back(print_poly(w_basis.back()));
    }
    out.inputs = {{"n", a.n}, {"d", a.d}, {"w", canon}};
    const MultiplicationMap map = build_mult_map(w_basis, a.d);
    const std::size_t rank_value = image_dim(map);
    const unsigned e = w_basis.front().degree();
    const unsigned m = static_cast<unsigned>(w_basis.size());
    const SpaceDescriptor pn{{a.n}};
    std::vector<Integer> h_values;
    for (unsigned k = 1; k <= m; ++k) {
        const long long tw = static_cast<long long>(a.d) -
                             static_cast<long long>(k) * static_cast<long long>(e);
        h_values.push_back(h_twist(pn, LineBundleClass{{tw}}, 0));
    }
    const Integer formula = koszul_formula_dim(m, h_values);
    const bool agree = formula == Integer(rank_value);
    out.result = {{"rank", rank_value}, {"koszul_value", int_json(formula)}, {"agree", agree}};
    out.provenance.push_back({{"name", "koszul_formula"},
                              {"formula_value", int_json(formula)},
                              {"oracle_value", rank_value},
                              {"agree", agree}});
    return out;
}

struct CohomologyArgs {
    std::string space;
    std::string bundle;
    unsigned i = 0;
};

CommandOutcome run_cohomology(const CohomologyArgs& a) {
    CommandOutcome out;
    const SpaceDescriptor space{parse_unsigned_list(a.space)};
    const LineBundleClass bundle{parse_int_list(a.bundle)};
    out.inputs = {{"space", space.factor_dims}, {"bundle", bundle.multidegree}, {"i", a.i}};
    out.result = {{"h", int_json(h_twist(space, bundle, a.i))}};
    return out;
}

struct X3Args {
    std::string space;
    std::string m_bundle;
    std::string l_bundle;
};

CommandOutcome run_x3_check(const X3Args& a) {
    CommandOutcome out;
    const SpaceDescriptor space{parse_unsigned_list(a.space)};
    const LineBundleClass mb{parse_int_list(a.m_bundle)};
    const LineBundleClass lb{parse_int_list(a.l_bundle)};
    out.inputs = {{"space", space.factor_dims},
                  {"m_bundle", mb.multidegree},
                  {"l_bundle", lb.multidegree}};
    const X3Report rep = x3_report(space, mb, lb);
    out.result = {{"m", rep.m},
                  {"holds", rep.holds},
                  {"failures", rep.failures},
                  {"bound", rep.holds ? json(rep.m) : json(nullptr)}};
    return out;
}

struct LociArgs {
    unsigned i = 0;
    unsigned j = 0;
    unsigned d = 0;
};

CommandOutcome run_loci_dims(const LociArgs& a, std::uint64_t seed) {
    CommandOutcome out;
    out.inputs = {{"i", a.i}, {"j", a.j}, {"d", a.d}};
    const long long z = dim_Z(a.i, a.j);
    const DimGammaResult gamma = dim_Gamma(a.i, a.j, a.d);
    const long long dec = dim_decomposition_set(a.i, a.j);
    const long long ambient = binomial(a.d + 2, 2).convert_to<long long>() - 1;
    FiberOracleOptions opts;
    opts.seed = seed;
    const long long oracle = fiber_dim_oracle(a.i, a.j, opts);
    const bool agree = oracle == z;
    out.result = {{"dim_Z", z},
                  {"dim_Gamma", gamma.value},
                  {"exceeds_ambient", gamma.exceeds_ambient},
                  {"dim_S", dec},
                  {"ambient", ambient},
                  {"oracle", oracle}};
    out.provenance.push_back({{"name", "dim_Z"},
                              {"formula_value", z},
                              {"oracle_value", oracle},
                              {"agree", agree}});
    if (!agree) out.exit_status = 1;
    return out;
}

struct ConeArgs {
    long long d = 0;
};

CommandOutcome run_cone_obstruct(const ConeArgs& a) {
    CommandOutcome out;
    out.inputs = {{"d", a.d}};
    const LineObstructionCertificate cert = line_obstruction(a.d);
    json candidates = json::array();
    json violations = json::array();
    for (const LineCandidate& c : cert.candidates) {
        json item = {{"b", c.b},
                     {"a_integral", c.a_integral},
                     {"a", c.a ? json(*c.a) : json(nullptr)},
                     {"violation", c.violation}};
        candidates.push_back(item);
        if (!c.violation.empty()) violations.push_back(c.violation);
    }
    violations.push_back(cert.tail_argument);
    out.result = {{"d", cert.d},
                  {"assumption", cert.assumption},
                  {"candidates", candidates},
                  {"candidates_checked", cert.candidates_checked},
                  {"violations", violations},
                  {"tail_argument", cert.tail_argument},
                  {"parity_note", cert.parity_note ? json(*cert.parity_note) : json(nullptr)},
                  {"infeasible", cert.infeasible}};
    return out;
}

// ---- dispatcher ---------------------------------------------------------

struct RunResult {
    json report;
    int exit_status = 0;
    bool help_requested = false;
    std::string help_text;
};

RunResult run_args(const std::vector<std::string>& args,
                   std::optional<std::uint64_t> forced_seed, bool allow_corpus);

CommandOutcome run_corpus(const std::string& path) {
    CommandOutcome out;
    out.inputs = {{"path", path}};
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open corpus file: " + path);

    struct Case {
        std::string id;
        std::string command;
        std::vector<std::string> args;
        json expected;
        std::string tag;
    };
    std::vector<Case> cases;
    json malformed = json::array();
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const json j = json::parse(line);
            Case c;
            c.id = j.at("id").get<std::string>();
            c.command = j.at("command").get<std::string>();
            for (const json& a : j.at("args")) c.args.push_back(a.get<std::string>());
            c.expected = j.at("expected");
            c.tag = j.value("tag", "");
            cases.push_back(std::move(c));
        } catch (const std::exception& e) {
            malformed.push_back({{"line", line_no}, {"error", e.what()}});
            std::cerr << "corpus: malformed line " << line_no << ": " << e.what() << "\n";
        }
    }
    std::sort(cases.begin(), cases.end(),
              [](const Case& a, const Case& b) { return a.id < b.id; });

    auto run_case = [](const Case& c) -> std::pair<bool, std::string> {
        std::vector<std::string> argv;
        for (const std::string& part : split(c.command, ' ')) {
            if (!part.empty()) argv.push_back(part);
        }
        argv.insert(argv.end(), c.args.begin(), c.args.end());
        const RunResult rr = run_args(argv, fnv1a64(c.id), /*allow_corpus=*/false);
        for (const auto& [key, want] : c.expected.items()) {
            if (key == "exit_status") {
                if (rr.exit_status != want.get<int>()) {
                    return {false, "exit_status: expected " + want.dump() + ", got " +
                                       std::to_string(rr.exit_status)};
                }
                continue;
            }
            const json& result = rr.report.at("result");
            if (!result.contains(key)) {
                return {false, key + ": missing from result"};
            }
            if (result.at(key) != want) {
                return {false, key + ": expected " + want.dump() + ", got " +
                                   result.at(key).dump()};
            }
        }
        return {true, ""};
    };

    std::vector<std::future<std::pair<bool, std::string>>> futures;
    futures.reserve(cases.size());
    for (const Case& c : cases) {
        futures.push_back(std::async(std::launch::async, run_case, std::cref(c)));
    }

    json failures = json::array();
    std::size_t passed = 0;
    for (std::size_t k = 0; k < cases.size(); ++k) {
        const auto [ok, reason] = futures[k].get();
        if (ok) {
            ++passed;
        } else {
            failures.push_back({{"id", cases[k].id}, {"reason", reason}});
        }
    }

    out.result = {{"total", cases.size()},
                  {"passed", passed},
                  {"failed", failures.size()},
                  {"failures", failures},
                  {"malformed", malformed}};
    if (cases.empty() && malformed.empty()) {
        out.result["warning"] = "empty corpus: vacuous pass";
        std::cerr << "corpus: warning: empty corpus, vacuous pass\n";
    }
    if (!failures.empty() || !malformed.empty()) out.exit_status = 1;
    return out;
}

RunResult run_args(const std::vector<std::string>& args,
                   std::optional<std::uint64_t> forced_seed, bool allow_corpus) {
    CLI::App app{"exact strength, slice rank, and certificate computations"};
    app.name("strengthlab");
    app.require_subcommand(1);

    std::uint64_t seed = kDefaultSeed;
    if (const char* env = std::getenv("STRENGTHLAB_SEED")) {
        try {
            seed = std::stoull(env);
        } catch (const std::exception&) {
            // an unreadable env seed falls back to the default
        }
    }
    if (forced_seed) seed = *forced_seed;

    auto add_seed = [&seed](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "seed for randomized checks");
    };

    SliceRankArgs slice_args;
    DecideArgs decide_args;
    QuadArgs quad_args;
    RealifyArgs realify_args;
    HilbertArgs hilbert_args;
    MultmapArgs multmap_args;
    CohomologyArgs cohomology_args;
    X3Args x3_args;
    LociArgs loci_args;
    ConeArgs cone_args;
    std::string corpus_path;

    auto wire_slice = [&](CLI::App* cmd) {
        cmd->add_option("-n", slice_args.n, "projective dimension")->required();
        cmd->add_option("-f", slice_args.f, "homogeneous polynomial")->required();
        add_seed(cmd);
    };
    auto wire_decide = [&](CLI::App* cmd) {
        cmd->add_option("-n", decide_args.n, "projective dimension")->required();
        cmd->add_option("-f", decide_args.f, "homogeneous polynomial")->required();
        cmd->add_option("-k", decide_args.k, "strength bound to decide")->required();
        cmd->add_option("--type", decide_args.type, "decomposition type i1,i2,...");
        cmd->add_option("--budget", decide_args.budget, "unknown-count budget");
        add_seed(cmd);
    };
    auto wire_quad = [&](CLI::App* cmd) {
        cmd->add_option("--gram", quad_args.gram, "Gram matrix rows 'a,b;c,d'")->required();
        add_seed(cmd);
    };
    auto wire_realify = [&](CLI::App* cmd) {
        cmd->add_option("--cert", realify_args.cert_path, "certificate JSON file")->required();
        add_seed(cmd);
    };

    CLI::App* slice_cmd = app.add_subcommand("slice-rank", "slice rank with witness");
    wire_slice(slice_cmd);

    CLI::App* strength_cmd =
        app.add_subcommand("strength", "strength computations (see subcommands)");
    strength_cmd->require_subcommand(1);
    CLI::App* s_slice = strength_cmd->add_subcommand("slice-rank", "slice rank with witness");
    wire_slice(s_slice);
    CLI::App* s_decide = strength_cmd->add_subcommand("decide", "decide strength <= k");
    wire_decide(s_decide);
    CLI::App* s_quad = strength_cmd->add_subcommand("quad", "quadratic strength and bounds");
    wire_quad(s_quad);
    CLI::App* s_realify = strength_cmd->add_subcommand("realify", "realify a certificate");
    wire_realify(s_realify);

    CLI::App* quad_cmd = app.add_subcommand("quad", "quadratic strength and bounds");
    wire_quad(quad_cmd);
    CLI::App* realify_cmd = app.add_subcommand("realify", "realify a certificate");
    wire_realify(realify_cmd);

    CLI::App* hilbert_cmd = app.add_subcommand("hilbert", "graded ideal dimensions");
    hilbert_cmd->add_option("-n", hilbert_args.n, "projective dimension")->required();
    hilbert_cmd->add_option("-d", hilbert_args.d, "degree")->required();
    hilbert_cmd->add_option("--ideal", hilbert_args.ideal, "JSON list of generators")
        ->required();
    add_seed(hilbert_cmd);

    CLI::App* multmap_cmd =
        app.add_subcommand("multmap", "multiplication-map rank vs the alternating formula");
    multmap_cmd->add_option("--n", multmap_args.n, "projective dimension")->required();
    multmap_cmd->add_option("--d", multmap_args.d, "target degree")->required();
    multmap_cmd->add_option("--w", multmap_args.w, "comma-separated spanning forms")
        ->required();
    add_seed(multmap_cmd);

    CLI::App* cohomology_cmd = app.add_subcommand("cohomology", "twist cohomology dimension");
    cohomology_cmd->add_option("--space", cohomology_args.space, "factor dimensions n1,n2,...")
        ->required();
    cohomology_cmd->add_option("--bundle", cohomology_args.bundle, "multidegree d1,d2,...")
        ->required();
    cohomology_cmd->add_option("--i", cohomology_args.i, "cohomology degree")->required();
    add_seed(cohomology_cmd);

    CLI::App* x3_cmd = app.add_subcommand("x3-check", "vanishing hypotheses for the bound");
    x3_cmd->add_option("--space", x3_args.space, "factor dimensions n1,n2,...")->required();
    x3_cmd->add_option("--m-bundle", x3_args.m_bundle, "auxiliary multidegree")->required();
    x3_cmd->add_option("--l-bundle", x3_args.l_bundle, "target multidegree")->required();
    add_seed(x3_cmd);

    CLI::App* loci_cmd = app.add_subcommand("loci", "plane decomposition loci");
    loci_cmd->require_subcommand(1);
    CLI::App* dims_cmd = loci_cmd->add_subcommand("dims", "formula values and the oracle");
    dims_cmd->add_option("-i", loci_args.i, "smaller split degree")->required();
    dims_cmd->add_option("-j", loci_args.j, "larger split degree")->required();
    dims_cmd->add_option("-d", loci_args.d, "curve degree")->required();
    add_seed(dims_cmd);

    CLI::App* cone_cmd = app.add_subcommand("cone", "effective-cone arguments");
    cone_cmd->require_subcommand(1);
    CLI::App* obstruct_cmd = cone_cmd->add_subcommand("obstruct", "line-class infeasibility");
    obstruct_cmd->add_option("-d", cone_args.d, "surface degree")->required();
    add_seed(obstruct_cmd);

    CLI::App* corpus_cmd = app.add_subcommand("corpus", "bundled example corpus");
    corpus_cmd->require_subcommand(1);
    CLI::App* corpus_run_cmd = corpus_cmd->add_subcommand("run", "run a JSONL case file");
    corpus_run_cmd->add_option("path", corpus_path, "corpus file")->required();
    add_seed(corpus_run_cmd);

    RunResult rr;
    std::vector<const char*> argv;
    argv.push_back("strengthlab");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        rr.help_requested = true;
        rr.help_text = app.help();
        rr.exit_status = 0;
        return rr;
    } catch (const CLI::ParseError& e) {
        CommandOutcome out;
        out.result = {{"error", e.what()}};
        out.exit_status = 64;
        rr.report = make_report("", out, seed);
        rr.exit_status = 64;
        std::cerr << "usage error: " << e.what() << "\n";
        return rr;
    }

    std::string command;
    CommandOutcome out;
    try {
        if (slice_cmd->parsed() || s_slice->parsed()) {
            command = "slice-rank";
            out = run_slice_rank(slice_args);
        } else if (s_decide->parsed()) {
            command = "strength decide";
            out = run_decide(decide_args);
        } else if (quad_cmd->parsed() || s_quad->parsed()) {
            command = "quad";
            out = run_quad(quad_args);
        } else if (realify_cmd->parsed() || s_realify->parsed()) {
            command = "realify";
            out = run_realify(realify_args);
        } else if (hilbert_cmd->parsed()) {
            command = "hilbert";
            out = run_hilbert(hilbert_args);
        } else if (multmap_cmd->parsed()) {
            command = "multmap";
            out = run_multmap(multmap_args);
        } else if (cohomology_cmd->parsed()) {
            command = "cohomology";
            out = run_cohomology(cohomology_args);
        } else if (x3_cmd->parsed()) {
            command = "x3-check";
            out = run_x3_check(x3_args);
        } else if (dims_cmd->parsed()) {
            command = "loci dims";
            out = run_loci_dims(loci_args, seed);
        } else if (obstruct_cmd->parsed()) {
            command = "cone obstruct";
            out = run_cone_obstruct(cone_args);
        } else if (corpus_run_cmd->parsed()) {
            command = "corpus run";
            if (!allow_corpus) {
                throw std::invalid_argument("corpus cases cannot nest corpus runs");
            }
            out = run_corpus(corpus_path);
        } else {
            throw std::invalid_argument("no subcommand selected");
        }
    } catch (const std::exception& e) {
        out.result = {{"error", e.what()}};
        out.exit_status = classify_error(e);
    }
    rr.report = make_report(command, out, seed);
    rr.exit_status = out.exit_status;
    return rr;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const RunResult rr = run_args(args, std::nullopt, /*allow_corpus=*/true);
    if (rr.help_requested) {
        std::cout << rr.help_text;
        return 0;
    }
    std::cout << rr.report.dump(2) << "\n";
    return rr.exit_status;
}
