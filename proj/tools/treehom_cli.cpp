// Command-line front end. Everything goes through the public C API in
// treehom.h; this file only does argument handling and file I/O.
//
// Exit codes: 0 success (or relation holds), 1 relation fails for yes/no
// queries, 2 usage or parse errors, 3 verification/search failures.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "treehom.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;

[[noreturn]] void die(int code, const std::string& message) {
    std::cerr << "treehom: " << message << "\n";
    std::exit(code);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die(kExitUsage, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) die(kExitUsage, "cannot write " + path);
    out << text;
}

std::string take_string(char* s) {
    std::string result = s ? s : "";
    th_string_free(s);
    return result;
}

int exit_code_for(th_status status) {
    switch (status) {
        case TH_OK: return kExitOk;
        case TH_ERR_PARSE: return kExitUsage;
        case TH_ERR_PRECONDITION: return kExitUsage;
        case TH_ERR_CAP_EXCEEDED: return kExitVerify;
        case TH_ERR_SEARCH_FAILED: return kExitVerify;
        case TH_ERR_INTERNAL: return kExitVerify;
    }
    return kExitVerify;
}

void check(th_status status, char* errmsg) {
    if (status == TH_OK) {
        th_string_free(errmsg);
        return;
    }
    std::string what = take_string(errmsg);
    die(exit_code_for(status), what.empty() ? "operation failed" : what);
}

using GraphPtr = std::unique_ptr<th_digraph, decltype(&th_digraph_free)>;

GraphPtr load_graph(const std::string& path) {
    th_digraph* g = nullptr;
    char* errmsg = nullptr;
    th_status status = th_digraph_parse(read_file(path).c_str(), &g, &errmsg);
    if (status != TH_OK) die(kExitUsage, path + ": " + take_string(errmsg));
    return GraphPtr(g, &th_digraph_free);
}

std::string edge_list(const th_digraph* g) {
    char* text = nullptr;
    check(th_digraph_to_edge_list(g, &text), nullptr);
    return take_string(text);
}

// Writes the main output graph: to stdout when out_path is empty, and
// optionally a DOT rendering next to it.
void emit_graph(const th_digraph* g, const std::string& out_path, const std::string& dot_path) {
    std::string text = edge_list(g);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    if (!dot_path.empty()) {
        char* dot = nullptr;
        check(th_digraph_to_dot(g, &dot), nullptr);
        write_file(dot_path, take_string(dot));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homomorphism order, cores and density witnesses for oriented trees"};
    app.set_version_flag("--version", th_version());
    app.require_subcommand(1);

    std::string path_g, path_h, out_path, dot_path, cert_path, labels_path, paths_dir;
    bool show_witness = false;
    int n_blocks = 1;
    int max_zigzag = 0;
    uint64_t oracle_cap = 0;
    int gen_max = -1;
    int gen_random = 0, gen_max_len = 8;
    uint64_t gen_seed = 1;

    auto* cmd_hom = app.add_subcommand("hom", "decide g -> h, print yes/no and a witness");
    cmd_hom->add_option("g", path_g)->required();
    cmd_hom->add_option("h", path_h)->required();
    cmd_hom->add_flag("--witness", show_witness, "print the vertex map when one exists");

    auto* cmd_compare = app.add_subcommand("compare", "relation of g and h in the homomorphism order");
    cmd_compare->add_option("g", path_g)->required();
    cmd_compare->add_option("h", path_h)->required();

    auto* cmd_core = app.add_subcommand("core", "write the core of g");
    cmd_core->add_option("g", path_g)->required();
    cmd_core->add_option("-o,--out", out_path);
    cmd_core->add_option("--dot", dot_path);

    auto* cmd_rigid = app.add_subcommand("rigid", "is g rigid (a core with trivial automorphisms)");
    cmd_rigid->add_option("g", path_g)->required();

    auto* cmd_proper = app.add_subcommand("proper", "is the tree proper (core not a path)");
    cmd_proper->add_option("t", path_g)->required();

    auto* cmd_dn = app.add_subcommand("dn", "build the labelled gadget D_n over a proper tree");
    cmd_dn->add_option("t2", path_g)->required();
    cmd_dn->add_option("--n", n_blocks, "number of blocks")->required();
    cmd_dn->add_option("-o,--out", out_path);
    cmd_dn->add_option("--labels", labels_path, "write the labelled vertices here");
    cmd_dn->add_option("--dot", dot_path);

    auto* cmd_density = app.add_subcommand("density", "build and verify a witness t1 < T < t2");
    cmd_density->add_option("t1", path_g)->required();
    cmd_density->add_option("t2", path_h)->required();
    cmd_density->add_option("-o,--out", out_path, "write the witness tree here");
    cmd_density->add_option("--cert", cert_path, "write the certificate here");
    cmd_density->add_option("--dot", dot_path);
    cmd_density->add_option("--max-zigzag", max_zigzag, "zig-zag search budget (0 = auto)");
    cmd_density->add_option("--cap", oracle_cap, "also cross-check facts with the brute-force oracle");

    auto* cmd_phi = app.add_subcommand("phi", "map an oriented path into the interval [t1, t2]");
    cmd_phi->add_option("p", path_g)->required();
    std::string phi_t1, phi_t2;
    cmd_phi->add_option("--t1", phi_t1)->required();
    cmd_phi->add_option("--t2", phi_t2)->required();
    cmd_phi->add_option("-o,--out", out_path);
    cmd_phi->add_option("--dot", dot_path);
    cmd_phi->add_option("--max-zigzag", max_zigzag);

    auto* cmd_verify = app.add_subcommand("verify-embedding",
                                          "check order agreement of phi over a set of paths");
    cmd_verify->add_option("--paths", paths_dir, "directory of path files (*.g)")->required();
    cmd_verify->add_option("--t1", phi_t1)->required();
    cmd_verify->add_option("--t2", phi_t2)->required();
    cmd_verify->add_option("-o,--out", out_path, "write the report here");
    cmd_verify->add_option("--max-zigzag", max_zigzag);

    auto* cmd_gen = app.add_subcommand("gen", "generate oriented path families");
    std::string gen_what;
    cmd_gen->add_option("what", gen_what, "only \"paths\" is available")->required();
    cmd_gen->add_option("--max", gen_max, "enumerate all path cores with at most this many arcs");
    cmd_gen->add_option("--random", gen_random, "generate this many random paths instead");
    cmd_gen->add_option("--max-len", gen_max_len, "random path length bound");
    cmd_gen->add_option("--seed", gen_seed, "random seed");
    cmd_gen->add_option("--out", paths_dir, "write one file per path into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" || e.get_name() == "CallForVersion" ? kExitOk
                                                                                 : kExitUsage;
    }

    if (cmd_hom->parsed()) {
        GraphPtr g = load_graph(path_g), h = load_graph(path_h);
        int exists = 0;
        char* witness = nullptr;
        check(th_hom_exists(g.get(), h.get(), &exists, show_witness ? &witness : nullptr), nullptr);
        std::cout << (exists ? "yes" : "no") << "\n";
        if (exists && show_witness) std::cout << take_string(witness);
        return exists ? kExitOk : kExitNo;
    }

    if (cmd_compare->parsed()) {
        GraphPtr g = load_graph(path_g), h = load_graph(path_h);
        th_order rel;
        check(th_compare(g.get(), h.get(), &rel), nullptr);
        std::cout << th_order_name(rel) << "\n";
        return kExitOk;
    }

    if (cmd_core->parsed()) {
        GraphPtr g = load_graph(path_g);
        th_digraph* c = nullptr;
        check(th_core(g.get(), &c), nullptr);
        GraphPtr owned(c, &th_digraph_free);
        emit_graph(c, out_path, dot_path);
        return kExitOk;
    }

    if (cmd_rigid->parsed()) {
        GraphPtr g = load_graph(path_g);
        int result = 0;
        check(th_is_rigid(g.get(), &result), nullptr);
        std::cout << (result ? "yes" : "no") << "\n";
        return result ? kExitOk : kExitNo;
    }

    if (cmd_proper->parsed()) {
        GraphPtr g = load_graph(path_g);
        int result = 0;
        char* errmsg = nullptr;
        check(th_is_proper_tree(g.get(), &result, &errmsg), errmsg);
        std::cout << (result ? "yes" : "no") << "\n";
        return result ? kExitOk : kExitNo;
    }

    if (cmd_dn->parsed()) {
        GraphPtr t2 = load_graph(path_g);
        th_gadget* gadget = nullptr;
        char* errmsg = nullptr;
        check(th_build_dn(t2.get(), n_blocks, &gadget, &errmsg), errmsg);
        std::unique_ptr<th_gadget, decltype(&th_gadget_free)> owned(gadget, &th_gadget_free);
        emit_graph(th_gadget_tree(gadget), out_path, dot_path);
        char* labels = nullptr;
        check(th_gadget_labels_text(gadget, &labels), nullptr);
        std::string labels_text = take_string(labels);
        if (labels_path.empty())
            std::cout << "# labels\n" << labels_text;
        else
            write_file(labels_path, labels_text);
        return kExitOk;
    }

    if (cmd_density->parsed()) {
        GraphPtr t1 = load_graph(path_g), t2 = load_graph(path_h);
        th_certificate* cert = nullptr;
        char* errmsg = nullptr;
        th_status status = th_density_witness(t1.get(), t2.get(), max_zigzag, &cert, &errmsg);
        if (status != TH_OK && cert == nullptr) check(status, errmsg);
        std::unique_ptr<th_certificate, decltype(&th_certificate_free)> owned(cert,
                                                                              &th_certificate_free);
        char* text = nullptr;
        check(th_certificate_text(cert, &text), nullptr);
        std::string cert_text = take_string(text);
        if (cert_path.empty())
            std::cout << cert_text;
        else
            write_file(cert_path, cert_text);
        if (!out_path.empty() || !dot_path.empty())
            emit_graph(th_certificate_witness(cert), out_path, dot_path);

        int ok = 0;
        check(th_certificate_verify(cert, oracle_cap, &ok), nullptr);
        if (!ok) die(kExitVerify, "certificate failed re-verification");
        if (status != TH_OK) {
            std::cerr << "treehom: " << take_string(errmsg) << "\n";
            std::cerr << "treehom: emitted the still-valid forest witness\n";
            return kExitVerify;
        }
        return kExitOk;
    }

    if (cmd_phi->parsed() || cmd_verify->parsed()) {
        GraphPtr t1 = load_graph(phi_t1), t2 = load_graph(phi_t2);
        th_anchored* gadget = nullptr;
        char* errmsg = nullptr;
        check(th_build_phi_gadget(t1.get(), t2.get(), max_zigzag, &gadget, &errmsg), errmsg);
        std::unique_ptr<th_anchored, decltype(&th_anchored_free)> owned(gadget, &th_anchored_free);

        if (cmd_phi->parsed()) {
            GraphPtr p = load_graph(path_g);
            th_digraph* image = nullptr;
            check(th_phi_apply(gadget, p.get(), &image, &errmsg), errmsg);
            GraphPtr owned_image(image, &th_digraph_free);
            emit_graph(image, out_path, dot_path);
            return kExitOk;
        }

        std::vector<std::string> files;
        for (const auto& entry : std::filesystem::directory_iterator(paths_dir))
            if (entry.path().extension() == ".g") files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
        if (files.empty()) die(kExitUsage, "no .g files in " + paths_dir);
        std::vector<GraphPtr> paths;
        std::vector<const th_digraph*> raw;
        for (const std::string& f : files) {
            paths.push_back(load_graph(f));
            raw.push_back(paths.back().get());
        }
        char* report = nullptr;
        int all_ok = 0;
        check(th_verify_embedding(gadget, t1.get(), t2.get(), raw.data(),
                                  static_cast<int>(raw.size()), &report, &all_ok),
              nullptr);
        std::string report_str = take_string(report);
        if (out_path.empty())
            std::cout << report_str;
        else
            write_file(out_path, report_str);
        return all_ok ? kExitOk : kExitVerify;
    }

    if (cmd_gen->parsed()) {
        if (gen_what != "paths") die(kExitUsage, "unknown family: " + gen_what);
        th_pathlist* list = nullptr;
        if (gen_random > 0)
            check(th_random_paths(gen_random, gen_max_len, gen_seed, &list), nullptr);
        else if (gen_max >= 0)
            check(th_enumerate_path_cores(gen_max, &list), nullptr);
        else
            die(kExitUsage, "gen paths needs --max or --random");
        std::unique_ptr<th_pathlist, decltype(&th_pathlist_free)> owned(list, &th_pathlist_free);

        int count = th_pathlist_size(list);
        if (!paths_dir.empty()) std::filesystem::create_directories(paths_dir);
        for (int i = 0; i < count; ++i) {
            std::string text = edge_list(th_pathlist_get(list, i));
            if (paths_dir.empty()) {
                std::cout << "# path " << i << "\n" << text;
            } else {
                char name[32];
                std::snprintf(name, sizeof name, "p%03d.g", i);
                write_file(paths_dir + "/" + name, text);
            }
        }
        if (!paths_dir.empty())
            std::cout << "wrote " << count << " paths to " << paths_dir << "\n";
        return kExitOk;
    }

    return kExitUsage;
}
