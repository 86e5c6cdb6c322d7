#include "cli.hpp"

#include "starmoments/errors.hpp"
#include "starmoments/freegroup.hpp"
#include "starmoments/freeprob.hpp"
#include "starmoments/graph_io.hpp"
#include "starmoments/moments.hpp"
#include "starmoments/parallel.hpp"
#include "starmoments/partitions.hpp"
#include "starmoments/randgraph.hpp"
#include "starmoments/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace starmoments::cli {
namespace {

using Json = nlohmann::ordered_json;

/// Bad flag values that CLI11 cannot validate on its own.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format_double(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string quoted(const Word& w) { return "\"" + w.str() + "\""; }

Json blocks_json(const std::vector<Block>& blocks)
{
    Json j = Json::array();
    for (const auto& b : blocks)
        j.push_back(b);
    return j;
}

std::string blocks_text(const std::vector<Block>& blocks)
{
    if (blocks.empty())
        return "none";
    std::string s;
    for (const auto& b : blocks) {
        s += '{';
        for (std::size_t i = 0; i < b.size(); ++i)
            s += (i ? "," : "") + std::to_string(b[i]);
        s += '}';
    }
    return s;
}

Word parse_word_flag(const std::string& text)
{
    try {
        return parse_word(text);
    } catch (const InvalidCharacter& e) {
        throw UsageError("--word: " + std::string(e.what()));
    }
}

Path parse_path_flag(const std::string& text, int d)
{
    Path path;
    if (text.empty())
        return path;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start);
        int value = 0;
        const auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc{} || end != piece.data() + piece.size() || value < 1 || value > d)
            throw UsageError("--path: entry " + std::to_string(path.size() + 1) + " ('" + piece +
                             "') is not a generator in 1.." + std::to_string(d));
        path.push_back(value);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return path;
}

/// Per-invocation state shared by the command handlers.
struct Context {
    std::string format = "text";
    unsigned threads = 1;
    std::string command;
    std::optional<std::uint64_t> seed;
    Json parameters = Json::object();
    std::ostringstream out;
    int exit_code = kExitOk;
    std::string diagnostic;

    bool json() const { return format == "json"; }

    void emit(Json payload)
    {
        Json doc;
        doc["format"] = "json";
        Json& meta = doc["metadata"];
        meta["tool"] = "starmoments";
        meta["version"] = STARMOMENTS_VERSION;
        meta["command"] = command;
        meta["generator"] = kGeneratorName;
        meta["seed_scheme"] = kSeedScheme;
        meta["seed"] = seed ? Json(*seed) : Json(nullptr);
        meta["parameters"] = parameters;
        doc["payload"] = std::move(payload);
        out << doc.dump(2) << '\n';
    }

    void fail(std::string message)
    {
        exit_code = kExitDomain;
        diagnostic = std::move(message);
    }
};

void require_text_or_json(const Context& ctx)
{
    if (ctx.format == "csv")
        throw UsageError("--format csv is only available for converge");
}

unsigned threads_from_environment()
{
    const char* env = std::getenv("STARMOMENTS_THREADS");
    if (env == nullptr || *env == '\0')
        return default_threads();
    unsigned value = 0;
    const std::string_view text(env);
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || value == 0)
        throw UsageError("STARMOMENTS_THREADS must be a positive integer, got '" +
                         std::string(text) + "'");
    return value;
}

// ---------------------------------------------------------------- commands

struct MmArgs {
    std::string word;
    int degree = 2;
    std::string method = "formula";
};

void cmd_mm(const MmArgs& a, Context& ctx)
{
    require_text_or_json(ctx);
    const Word w = parse_word_flag(a.word);
    ctx.parameters = {{"word", w.str()}, {"degree", a.degree}, {"method", a.method}};

    if (a.method == "all") {
        const auto r = verify_equivalence(w, a.degree);
        const std::pair<const char*, const BigInt*> rows[] = {
            {"brute", &r.brute}, {"anc2", &r.anc2}, {"formula", &r.formula},
            {"cumulant", &r.cumulant}};
        if (ctx.json()) {
            Json values = Json::object();
            for (const auto& [name, v] : rows)
                values[name] = to_string(*v);
            ctx.emit({{"values", values}, {"match", r.match}});
        } else {
            ctx.out << "word     " << quoted(w) << "\ndegree   " << a.degree << '\n';
            for (const auto& [name, v] : rows)
                ctx.out << std::left << std::setw(9) << name << to_string(*v) << '\n';
            ctx.out << "match    " << (r.match ? "yes" : "no") << '\n';
        }
        if (!r.match)
            ctx.fail("the four evaluations of M(" + w.str() + ") disagree");
        return;
    }

    BigInt value;
    if (a.method == "formula")
        value = star_moment_formula(w, a.degree);
    else if (a.method == "anc2")
        value = star_moment_anc2(w, a.degree);
    else if (a.method == "brute")
        value = count_wpaths(w, a.degree);
    else
        value = moment_via_cumulants(w, a.degree);

    if (ctx.json())
        ctx.emit({{"value", to_string(value)}});
    else
        ctx.out << to_string(value) << '\n';
}

struct PathsArgs {
    std::string word;
    int degree = 2;
    bool count_only = false;
};

void cmd_paths(const PathsArgs& a, Context& ctx)
{
    require_text_or_json(ctx);
    const Word w = parse_word_flag(a.word);
    ctx.parameters = {{"word", w.str()}, {"degree", a.degree}, {"count_only", a.count_only}};

    if (a.count_only) {
        const auto count = count_wpaths(w, a.degree);
        if (ctx.json())
            ctx.emit({{"count", count}});
        else
            ctx.out << count << '\n';
        return;
    }
    const auto paths = enumerate_wpaths(w, a.degree);
    if (ctx.json()) {
        ctx.emit({{"count", paths.size()}, {"paths", paths}});
        return;
    }
    for (const auto& p : paths)
        ctx.out << (p.empty() ? "()" : format_path(p)) << '\n';
}

struct SkelArgs {
    std::string word;
    std::string path;
    int degree = 2;
};

void cmd_skel(const SkelArgs& a, Context& ctx)
{
    require_text_or_json(ctx);
    const Word w = parse_word_flag(a.word);
    const Path path = parse_path_flag(a.path, a.degree);
    ctx.parameters = {{"word", w.str()}, {"path", path}, {"degree", a.degree}};

    const Partition skel = skeleton(w, path, a.degree);
    const auto pairs = bad_pairs(skel, w);
    const auto blocks = bad_blocks(skel, w);
    const auto fiber = preimage_size(skel, w, a.degree);

    if (ctx.json()) {
        Json jp = Json::array();
        for (const auto& p : pairs)
            jp.push_back({p.outer, p.inner});
        ctx.emit({{"skeleton", blocks_json(skel.blocks())},
                  {"bad_pairs", jp},
                  {"bad_blocks", blocks_json(blocks)},
                  {"fiber_size", to_string(fiber)}});
        return;
    }
    ctx.out << "skeleton    " << skel.str() << '\n';
    ctx.out << "bad_pairs   ";
    if (pairs.empty())
        ctx.out << "none";
    for (std::size_t i = 0; i < pairs.size(); ++i)
        ctx.out << (i ? " " : "") << '(' << pairs[i].outer << ',' << pairs[i].inner << ')';
    ctx.out << "\nbad_blocks  " << blocks_text(blocks) << '\n';
    ctx.out << "fiber_size  " << to_string(fiber) << '\n';
}

struct AncArgs {
    std::string word;
    bool pairs_only = false;
};

void cmd_enumerate_anc(const AncArgs& a, Context& ctx)
{
    require_text_or_json(ctx);
    const Word w = parse_word_flag(a.word);
    if (w.size() > kFormulaMaxLength)
        throw CapExceeded("word length " + std::to_string(w.size()) + " exceeds " +
                          std::to_string(kFormulaMaxLength));
    ctx.parameters = {{"word", w.str()}, {"pairs_only", a.pairs_only}};

    const auto parts = a.pairs_only ? enumerate_anc2(w) : enumerate_anc(w);
    if (ctx.json()) {
        Json list = Json::array();
        for (const auto& p : parts)
            list.push_back(blocks_json(p.blocks()));
        ctx.emit({{"count", parts.size()}, {"partitions", list}});
        return;
    }
    for (const auto& p : parts)
        ctx.out << p.str() << '\n';
}

struct CumulantArgs {
    std::string word;
    int degree = 2;
};

void cmd_cumulant(const CumulantArgs& a, Context& ctx)
{
    require_text_or_json(ctx);
    const Word w = parse_word_flag(a.word);
    ctx.parameters = {{"word", w.str()}, {"degree", a.degree}};
    const auto value = free_cumulant_ad(w, a.degree);
    if (ctx.json())
        ctx.emit({{"value", to_string(value)}});
    else
        ctx.out << to_string(value) << '\n';
}

struct TraceArgs {
    std::string graph;
    std::string word;
};

void cmd_trace(const TraceArgs& a, Context& ctx)
{
    require_text_or_json(ctx);
    const Word w = parse_word_flag(a.word);
    const auto file = read_graph_file(a.graph);
    ctx.parameters = {{"graph", a.graph}, {"word", w.str()}};

    TraceOptions opts;
    opts.threads = ctx.threads;
    const BigInt trace = star_moment_trace(file.graph, w, opts);
    const int n = file.graph.vertex_count();
    const double normalized = n == 0 ? 0.0 : static_cast<double>(trace) / n;

    if (ctx.json()) {
        ctx.emit({{"vertices", n}, {"trace", to_string(trace)}, {"normalized", normalized}});
        return;
    }
    ctx.out << "vertices    " << n << '\n';
    ctx.out << "trace       " << to_string(trace) << '\n';
    ctx.out << "normalized  " << format_double(normalized) << '\n';
}

struct CyclesArgs {
    std::string graph;
    int max_len = 4;
};

void cmd_cycles(const CyclesArgs& a, Context& ctx)
{
    require_text_or_json(ctx);
    const auto file = read_graph_file(a.graph);
    ctx.parameters = {{"graph", a.graph}, {"max_len", a.max_len}};

    std::vector<CycleCount> counts;
    for (int j = 1; j <= a.max_len; ++j)
        counts.push_back(plain_cycle_count(file.graph, j, CycleMethod::Auto, ctx.threads));

    if (ctx.json()) {
        Json rows = Json::array();
        for (const auto& c : counts)
            rows.push_back({{"length", c.length}, {"count", c.count}});
        ctx.emit({{"vertices", file.graph.vertex_count()}, {"cycles", rows}});
        return;
    }
    ctx.out << "length count\n";
    for (const auto& c : counts)
        ctx.out << std::left << std::setw(7) << c.length << c.count << '\n';
}

struct TreecheckArgs {
    std::string graph;
    std::optional<int> degree;
    int radius = 3;
};

void cmd_treecheck(const TreecheckArgs& a, Context& ctx)
{
    require_text_or_json(ctx);
    const auto file = read_graph_file(a.graph);
    const int d = a.degree.value_or(file.degree);
    ctx.parameters = {{"graph", a.graph}, {"degree", d}, {"radius", a.radius}};

    const auto r = tree_likeness_check(file.graph, d, a.radius, ctx.threads);
    if (ctx.json()) {
        Json violations = Json::array();
        for (const auto& v : r.violations)
            violations.push_back({{"vertex", v.vertex + 1},
                                  {"word", v.word.str()},
                                  {"observed", to_string(v.observed)},
                                  {"expected", to_string(v.expected)}});
        ctx.emit({{"vertices", r.vertices},
                  {"bad_vertices", r.bad_vertices},
                  {"bad_fraction", r.bad_fraction},
                  {"checked_vertices", r.checked_vertices},
                  {"words_per_vertex", r.words_per_vertex},
                  {"violations", violations}});
    } else {
        ctx.out << "vertices          " << r.vertices << '\n';
        ctx.out << "bad_vertices      " << r.bad_vertices << '\n';
        ctx.out << "bad_fraction      " << format_double(r.bad_fraction) << '\n';
        ctx.out << "checked_vertices  " << r.checked_vertices << '\n';
        ctx.out << "words_per_vertex  " << r.words_per_vertex << '\n';
        ctx.out << "violations        " << r.violations.size() << '\n';
        for (const auto& v : r.violations)
            ctx.out << "  vertex " << v.vertex + 1 << " word " << quoted(v.word) << " observed "
                    << to_string(v.observed) << " expected " << to_string(v.expected) << '\n';
    }
    if (!r.violations.empty())
        ctx.fail(std::to_string(r.violations.size()) + " tree-likeness violations");
}

struct SampleArgs {
    int n = 0;
    int degree = 2;
    std::uint64_t seed = 0;
    std::string model = "uniform";
    std::string out;
    int max_attempts = 1000;
};

void cmd_sample(const SampleArgs& a, Context& ctx)
{
    require_text_or_json(ctx);
    const GraphModel model = parse_model(a.model);
    ctx.seed = a.seed;
    ctx.parameters = {{"n", a.n},         {"degree", a.degree},
                      {"model", a.model}, {"max_attempts", a.max_attempts},
                      {"out", a.out}};

    const SamplerConfig cfg{a.n, a.degree, a.seed, a.max_attempts};
    const Digraph g = model == GraphModel::Uniform ? sample_uniform_regular(cfg)
                                                   : sample_configuration_model(cfg);
    if (!a.out.empty())
        write_graph_file(a.out, g, a.degree);

    if (ctx.json()) {
        Json arcs = Json::array();
        for (const auto& [t, h, m] : g.multiplicities())
            arcs.push_back({t + 1, h + 1, m});
        ctx.emit({{"vertices", g.vertex_count()},
                  {"arcs", g.arc_count()},
                  {"simple", is_simple(g)},
                  {"multiplicities", arcs}});
    } else if (a.out.empty()) {
        write_graph(ctx.out, g, a.degree);
    } else {
        ctx.out << "wrote " << a.out << " (" << g.vertex_count() << " vertices, "
                << g.arc_count() << " arcs, " << (is_simple(g) ? "simple" : "not simple")
                << ")\n";
    }
}

struct ConvergeArgs {
    int degree = 2;
    std::string word;
    std::vector<int> sizes{100, 400, 1600};
    int trials = 20;
    std::uint64_t seed = 0;
    std::string model = "uniform";
    int max_attempts = 1000;
};

void cmd_converge(const ConvergeArgs& a, Context& ctx)
{
    const Word w = parse_word_flag(a.word);
    const GraphModel model = parse_model(a.model);
    ctx.seed = a.seed;
    ctx.parameters = {{"degree", a.degree}, {"word", w.str()},   {"sizes", a.sizes},
                      {"trials", a.trials}, {"model", a.model}, {"max_attempts", a.max_attempts}};

    const auto records = convergence_experiment(a.degree, w, a.sizes, a.trials, a.seed, model,
                                                ctx.threads, a.max_attempts);
    if (ctx.format == "csv") {
        write_csv(ctx.out, records);
        return;
    }
    if (ctx.json()) {
        Json rows = Json::array();
        for (const auto& r : records)
            rows.push_back({{"n", r.n},
                            {"d", r.d},
                            {"word", r.word.str()},
                            {"trials", r.trials},
                            {"mean", r.mean},
                            {"stderr", r.std_error},
                            {"target", to_string(r.target)},
                            {"within_3se", r.within_3se}});
        ctx.emit({{"records", rows}});
        return;
    }
    ctx.out << std::left << std::setw(8) << "n" << std::setw(12) << "mean" << std::setw(12)
            << "stderr" << std::setw(10) << "target" << "within_3se\n";
    for (const auto& r : records)
        ctx.out << std::setw(8) << r.n << std::setw(12) << format_double(r.mean) << std::setw(12)
                << format_double(r.std_error) << std::setw(10) << to_string(r.target)
                << (r.within_3se ? "yes" : "no") << '\n';
}

struct VerifyArgs {
    int max_len = 8;
    std::vector<int> degrees{2, 3};
};

void cmd_verify(const VerifyArgs& a, Context& ctx)
{
    require_text_or_json(ctx);
    ctx.parameters = {{"max_len", a.max_len}, {"degrees", a.degrees}};
    const auto report = verify_sweep(a.max_len, a.degrees);

    if (ctx.json()) {
        Json checks = Json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name},
                              {"passed", c.passed},
                              {"failed", c.failed},
                              {"failures", c.failures}});
        ctx.emit({{"checks", checks}, {"ok", report.ok()}});
    } else {
        for (const auto& c : report.checks) {
            ctx.out << std::left << std::setw(28) << c.name << "passed " << std::setw(8)
                    << c.passed << "failed " << c.failed << '\n';
            for (const auto& f : c.failures)
                ctx.out << "  " << f << '\n';
        }
        ctx.out << (report.ok() ? "all checks passed" : "CHECKS FAILED") << '\n';
    }
    if (!report.ok())
        ctx.fail("verification sweep found failures");
}

CLI::Option* add_word(CLI::App* sub, std::string& target)
{
    return sub->add_option("--word", target, "Word over {1,*} ('s' may stand for '*')")
        ->required();
}

CLI::Option* add_degree(CLI::App* sub, int& target, bool required = true)
{
    auto* opt = sub->add_option("--degree,-d", target, "Degree d of the tree or graph")
                    ->check(CLI::Range(1, kMaxDegree));
    return required ? opt->required() : opt;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Star moments of regular directed trees and random regular digraphs",
                 "starmoments"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(STARMOMENTS_VERSION));

    Context ctx;
    std::optional<unsigned> threads;
    app.add_option("--format", ctx.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--threads", threads,
                   "Worker threads (default: $STARMOMENTS_THREADS, else all cores)")
        ->check(CLI::PositiveNumber);

    std::function<void()> action;

    MmArgs mm;
    auto* mm_cmd = app.add_subcommand("mm", "Star moment M(w) of the d-regular directed tree");
    add_word(mm_cmd, mm.word);
    add_degree(mm_cmd, mm.degree);
    mm_cmd->add_option("--method", mm.method, "Evaluation method")
        ->check(CLI::IsMember({"formula", "anc2", "brute", "cumulant", "all"}))
        ->capture_default_str();
    mm_cmd->callback([&] { action = [&] { cmd_mm(mm, ctx); }; });

    PathsArgs paths;
    auto* paths_cmd = app.add_subcommand("paths", "Closed w-paths in the free group");
    add_word(paths_cmd, paths.word);
    add_degree(paths_cmd, paths.degree);
    paths_cmd->add_flag("--count-only", paths.count_only, "Print only the number of paths");
    paths_cmd->callback([&] { action = [&] { cmd_paths(paths, ctx); }; });

    SkelArgs skel;
    auto* skel_cmd = app.add_subcommand("skel", "Skeleton, bad pairs and fiber of a closed path");
    add_word(skel_cmd, skel.word);
    skel_cmd->add_option("--path", skel.path, "Generators i1,i2,...,ik")->required();
    add_degree(skel_cmd, skel.degree);
    skel_cmd->callback([&] { action = [&] { cmd_skel(skel, ctx); }; });

    AncArgs anc;
    auto* anc_cmd =
        app.add_subcommand("enumerate-anc", "Non-crossing partitions with alternating blocks");
    add_word(anc_cmd, anc.word);
    anc_cmd->add_flag("--pairs-only", anc.pairs_only, "Only pair partitions");
    anc_cmd->callback([&] { action = [&] { cmd_enumerate_anc(anc, ctx); }; });

    CumulantArgs cum;
    auto* cum_cmd = app.add_subcommand("cumulant", "Free cumulant of a sum of d Haar unitaries");
    add_word(cum_cmd, cum.word);
    add_degree(cum_cmd, cum.degree);
    cum_cmd->callback([&] { action = [&] { cmd_cumulant(cum, ctx); }; });

    TraceArgs trace;
    auto* trace_cmd = app.add_subcommand("trace", "Trace of A^w for a graph file");
    trace_cmd->add_option("--graph", trace.graph, "Graph file")->required();
    add_word(trace_cmd, trace.word);
    trace_cmd->callback([&] { action = [&] { cmd_trace(trace, ctx); }; });

    CyclesArgs cycles;
    auto* cycles_cmd = app.add_subcommand("cycles", "Plain cycle counts c_1..c_K");
    cycles_cmd->add_option("--graph", cycles.graph, "Graph file")->required();
    cycles_cmd->add_option("--max-len", cycles.max_len, "Largest cycle length K")
        ->check(CLI::Range(1, kMaxCycleLength))
        ->capture_default_str();
    cycles_cmd->callback([&] { action = [&] { cmd_cycles(cycles, ctx); }; });

    TreecheckArgs tree;
    auto* tree_cmd =
        app.add_subcommand("treecheck", "Compare diagonal walk counts with tree moments");
    tree_cmd->add_option("--graph", tree.graph, "Graph file")->required();
    tree_cmd->add_option("--degree,-d", tree.degree, "Degree (default: from the file header)")
        ->check(CLI::Range(1, kMaxDegree));
    tree_cmd->add_option("--radius", tree.radius, "Radius k")
        ->check(CLI::Range(1, kMaxCycleLength))
        ->capture_default_str();
    tree_cmd->callback([&] { action = [&] { cmd_treecheck(tree, ctx); }; });

    SampleArgs sample;
    auto* sample_cmd = app.add_subcommand("sample", "Draw a random d-regular digraph");
    sample_cmd->add_option("--n", sample.n, "Number of vertices")
        ->required()
        ->check(CLI::PositiveNumber);
    add_degree(sample_cmd, sample.degree);
    sample_cmd->add_option("--seed", sample.seed, "Master seed")->required();
    sample_cmd->add_option("--model", sample.model, "Graph model")
        ->check(CLI::IsMember({"cm", "uniform"}))
        ->capture_default_str();
    sample_cmd->add_option("--out", sample.out, "Write the graph to this file");
    sample_cmd->add_option("--max-attempts", sample.max_attempts, "Rejection cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sample_cmd->callback([&] { action = [&] { cmd_sample(sample, ctx); }; });

    ConvergeArgs conv;
    auto* conv_cmd = app.add_subcommand("converge", "Monte Carlo estimates of Tr A^w / n");
    add_degree(conv_cmd, conv.degree);
    add_word(conv_cmd, conv.word);
    conv_cmd->add_option("--sizes", conv.sizes, "Vertex counts, comma separated")
        ->delimiter(',')
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    conv_cmd->add_option("--trials", conv.trials, "Graphs per size")
        ->check(CLI::Range(2, 1'000'000))
        ->capture_default_str();
    conv_cmd->add_option("--seed", conv.seed, "Master seed")->required();
    conv_cmd->add_option("--model", conv.model, "Graph model")
        ->check(CLI::IsMember({"cm", "uniform"}))
        ->capture_default_str();
    conv_cmd->add_option("--max-attempts", conv.max_attempts, "Rejection cap per graph")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    conv_cmd->callback([&] { action = [&] { cmd_converge(conv, ctx); }; });

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "Run the cross-oracle identity sweep");
    ver_cmd->add_option("--max-len", ver.max_len, "Longest word length")
        ->check(CLI::Range(0, 10))
        ->capture_default_str();
    ver_cmd->add_option("--degrees", ver.degrees, "Degrees, comma separated")
        ->delimiter(',')
        ->check(CLI::Range(1, kMaxDegree))
        ->capture_default_str();
    ver_cmd->callback([&] { action = [&] { cmd_verify(ver, ctx); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        ctx.command = app.get_subcommands().front()->get_name();
        ctx.threads = threads ? *threads : threads_from_environment();
        action();
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            std::ostringstream help;
            app.exit(e, help, err);
            out << help.str();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }

    out << ctx.out.str();
    if (ctx.exit_code != kExitOk)
        err << "error: " << ctx.diagnostic << '\n';
    return ctx.exit_code;
}

} // namespace starmoments::cli
