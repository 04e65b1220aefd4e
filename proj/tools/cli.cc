#include "cli.hh"

#include <magiclab/drg.hh>
#include <magiclab/generators.hh>
#include <magiclab/graph6.hh>
#include <magiclab/json_io.hh>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using std::optional;
using std::ostream;
using std::string;
using std::vector;

namespace magiclab::cli
{
    namespace
    {
        struct GraphInput
        {
            string graph6;
            string file;
            string family;
        };

        auto add_graph_input(CLI::App * cmd, GraphInput & in, bool required) -> CLI::Option_group *
        {
            auto group = cmd->add_option_group("graph", "Graph input (exactly one)");
            group->add_option("--graph6", in.graph6, "Inline graph6 string");
            group->add_option("--file", in.file, "Path to a graph6 or JSON graph file");
            group->add_option("--family", in.family, "Generated family, e.g. hamming:3,3 or clebsch");
            if (required)
                group->require_option(1);
            else
                group->require_option(0, 1);
            return group;
        }

        auto read_file(const string & path) -> string
        {
            std::ifstream f(path, std::ios::binary);
            if (! f)
                throw std::invalid_argument("cannot open '" + path + "'");
            std::ostringstream s;
            s << f.rdbuf();
            return s.str();
        }

        auto load_graph(const GraphInput & in) -> Graph
        {
            if (! in.graph6.empty())
                return parse_graph6(in.graph6);
            if (! in.file.empty())
                return read_graph_text(read_file(in.file));
            return generate(in.family);
        }

        auto has_graph(const GraphInput & in) -> bool
        {
            return ! in.graph6.empty() || ! in.file.empty() || ! in.family.empty();
        }

        auto render_scalar(const Json & j) -> string
        {
            if (j.is_string())
                return j.get<string>();
            if (j.is_null())
                return "-";
            return j.dump();
        }

        // Aligned "key  value" lines; nested objects indent, arrays of scalars stay inline.
        auto render_pretty(const Json & j, ostream & out, int indent) -> void
        {
            if (j.is_object()) {
                std::size_t width = 0;
                for (auto & [key, value] : j.items())
                    width = std::max(width, key.size());
                for (auto & [key, value] : j.items()) {
                    bool nested = value.is_object()
                        || (value.is_array() && std::any_of(value.begin(), value.end(), [](auto & e) { return e.is_structured(); }));
                    if (nested) {
                        out << string(indent, ' ') << key << "\n";
                        render_pretty(value, out, indent + 2);
                    }
                    else
                        out << string(indent, ' ') << std::left << std::setw(static_cast<int>(width)) << key
                            << "  " << (value.is_array() ? value.dump() : render_scalar(value)) << "\n";
                }
            }
            else if (j.is_array()) {
                int i = 0;
                for (auto & e : j) {
                    out << string(indent, ' ') << "[" << i++ << "]\n";
                    render_pretty(e, out, indent + 2);
                }
            }
            else
                out << string(indent, ' ') << render_scalar(j) << "\n";
        }

        auto emit(const Json & j, bool pretty, ostream & out) -> void
        {
            if (pretty)
                render_pretty(j, out, 0);
            else
                out << j.dump() << "\n";
        }

        auto default_threads() -> unsigned
        {
            if (auto env = std::getenv("MAGICLAB_THREADS")) {
                try {
                    int n = std::stoi(env);
                    if (n >= 1)
                        return static_cast<unsigned>(n);
                }
                catch (const std::exception &) {
                }
            }
            return 1;
        }

        auto parse_params(const string & text) -> SrgParams
        {
            vector<int> v;
            std::istringstream s(text);
            string item;
            while (std::getline(s, item, ','))
                v.push_back(std::stoi(item));
            if (v.size() != 4)
                throw std::invalid_argument("--params needs n,r,a,c");
            return SrgParams{v[0], v[1], v[2], v[3]};
        }
    }

    auto run(int argc, const char * const argv[], ostream & out, ostream & err) -> int
    {
        CLI::App app{"Search and decide D-magic labelings of graphs", "magiclab"};
        app.require_subcommand(1);
        app.fallthrough();
        bool pretty = false;
        app.add_flag("--pretty", pretty, "Aligned text instead of JSON");

        // generate
        auto gen = app.add_subcommand("generate", "Build a named graph family");
        string gen_family, gen_format = "json";
        gen->add_option("family", gen_family, "Family and parameters, e.g. johnson:7,3")->required();
        gen->add_option("--format", gen_format, "graph6 or json")->check(CLI::IsMember({"graph6", "json"}));

        // info
        auto info = app.add_subcommand("info", "Structural properties of a graph");
        GraphInput info_in;
        add_graph_input(info, info_in, true);

        // search
        auto srch = app.add_subcommand("search", "Search for a D-magic labeling");
        GraphInput search_in;
        add_graph_input(srch, search_in, true);
        string search_d = "1", algo = "backtrack";
        double timeout_secs = 0;
        unsigned threads = default_threads();
        srch->add_option("--d", search_d, "Distance set, e.g. 0,1");
        srch->add_option("--algo", algo, "naive or backtrack")->check(CLI::IsMember({"naive", "backtrack"}));
        srch->add_option("--timeout", timeout_secs, "Seconds before giving up (0 = none)")->check(CLI::NonNegativeNumber);
        srch->add_option("--threads", threads, "Worker threads (default $MAGICLAB_THREADS or 1)")->check(CLI::PositiveNumber);

        // verify
        auto ver = app.add_subcommand("verify", "Check a labeling");
        GraphInput verify_in;
        add_graph_input(ver, verify_in, true);
        string labels, verify_d = "1";
        ver->add_option("--labels", labels, "Comma-separated labels in vertex order")->required();
        ver->add_option("--d", verify_d, "Distance set");

        // spectral
        auto spec = app.add_subcommand("spectral", "Exact integer-eigenvalue tests");
        GraphInput spectral_in;
        add_graph_input(spec, spectral_in, true);
        long long lambda = 0;
        string test;
        auto lambda_opt = spec->add_option("--lambda", lambda, "Integer eigenvalue to test");
        auto test_opt = spec->add_option("--test", test, "zero, minus-one or line-dm")
                            ->check(CLI::IsMember({"zero", "minus-one", "line-dm"}));
        lambda_opt->excludes(test_opt);
        test_opt->excludes(lambda_opt);

        // classify-srg
        auto cls = app.add_subcommand("classify-srg", "D-magic verdicts for a strongly regular graph");
        GraphInput classify_in;
        string params;
        auto graph_group = add_graph_input(cls, classify_in, false);
        auto params_opt = cls->add_option("--params", params, "n,r,a,c");
        graph_group->excludes(params_opt);

        // filter-arrays / cross-check
        auto filt = app.add_subcommand("filter-arrays", "Screen diameter-3 intersection arrays");
        string filter_path;
        filt->add_option("file", filter_path, "Array file")->required();

        auto cross = app.add_subcommand("cross-check", "Match arrays against buildable graph families");
        string cross_path;
        cross->add_option("file", cross_path, "Array file")->required();

        // srg-linegraph
        auto pipe = app.add_subcommand("srg-linegraph", "Replay the elimination for line graphs of SRGs");
        int r_max = 6, desk = 20;
        bool no_search = false;
        double pipe_timeout = 0;
        pipe->add_option("--r-max", r_max, "Largest degree to enumerate")->check(CLI::Range(3, 200));
        pipe->add_option("--max-vertices", desk, "Largest line graph to search");
        pipe->add_flag("--no-search", no_search, "Skip the refutation searches");
        pipe->add_option("--timeout", pipe_timeout, "Seconds per search (0 = none)")->check(CLI::NonNegativeNumber);

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return exit_ok;
        }
        catch (const CLI::ParseError & e) {
            err << "error: " << e.what() << "\n" << app.help();
            return exit_input_error;
        }

        try {
            if (*gen) {
                auto g = generate(gen_family);
                if (gen_format == "graph6")
                    out << write_graph6(g) << "\n";
                else
                    emit(graph_to_json(g), pretty, out);
                return exit_ok;
            }
            if (*info) {
                emit(info_json(load_graph(info_in)), pretty, out);
                return exit_ok;
            }
            if (*srch) {
                SearchConfig cfg;
                cfg.algorithm = algo == "naive" ? SearchAlgorithm::naive : SearchAlgorithm::backtrack;
                cfg.d = DistanceSet::parse(search_d);
                cfg.timeout = std::chrono::milliseconds(static_cast<long long>(timeout_secs * 1000));
                cfg.workers = threads;
                auto outcome = search(load_graph(search_in), cfg);
                emit(to_json(outcome), pretty, out);
                return outcome.verdict == Verdict::indeterminate ? exit_indeterminate : exit_ok;
            }
            if (*ver) {
                emit(verify_json(load_graph(verify_in), DistanceSet::parse(verify_d), parse_labeling(labels)), pretty, out);
                return exit_ok;
            }
            if (*spec) {
                auto g = load_graph(spectral_in);
                if (test == "line-dm")
                    emit(line_dm_json(g), pretty, out);
                else {
                    if (test == "zero")
                        lambda = 0;
                    else if (test == "minus-one")
                        lambda = -1;
                    else if (lambda_opt->count() == 0)
                        throw std::invalid_argument("spectral needs --lambda or --test");
                    emit(spectral_json(g, lambda), pretty, out);
                }
                return exit_ok;
            }
            if (*cls) {
                optional<SrgInput> in;
                if (! params.empty())
                    in = parse_params(params);
                else if (has_graph(classify_in)) {
                    in = srg_input_of(load_graph(classify_in));
                    if (! in)
                        throw std::invalid_argument("graph is neither complete nor strongly regular");
                }
                else
                    throw std::invalid_argument("classify-srg needs --params or a graph");
                emit(classify_json(*in), pretty, out);
                return exit_ok;
            }
            if (*filt) {
                auto records = parse_array_file(read_file(filter_path));
                auto report = diam3_magic_filter(records);
                if (pretty) {
                    out << format_table(cross_check_known(report.surviving));
                    out << report.surviving.size() << " of " << records.size() << " arrays survive\n";
                }
                else
                    emit(to_json(report), false, out);
                return exit_ok;
            }
            if (*cross) {
                auto rows = cross_check_known(parse_array_file(read_file(cross_path)));
                if (pretty)
                    out << format_table(rows);
                else
                    emit(to_json(rows), false, out);
                return exit_ok;
            }
            if (*pipe) {
                PipelineOptions options;
                options.r_max = r_max;
                options.run_searches = ! no_search;
                options.desk_scale_vertices = desk;
                options.search.timeout = std::chrono::milliseconds(static_cast<long long>(pipe_timeout * 1000));
                options.search.workers = default_threads();
                auto result = linegraph_pipeline(options);
                emit(to_json(result), pretty, out);
                for (auto * list : {&result.dm_candidates, &result.cdm_candidates})
                    for (auto & cand : *list)
                        if (cand.status == Refutation::indeterminate && options.run_searches)
                            return exit_indeterminate;
                return exit_ok;
            }
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << "\n";
            return exit_input_error;
        }
        return exit_input_error;
    }

    auto run(const vector<string> & args, ostream & out, ostream & err) -> int
    {
        vector<const char *> argv{"magiclab"};
        for (auto & a : args)
            argv.push_back(a.c_str());
        return run(static_cast<int>(argv.size()), argv.data(), out, err);
    }
}
