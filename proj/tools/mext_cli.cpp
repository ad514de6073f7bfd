// Batch CLI for the modular-extension workbench. Exit codes: 0 on pass,
// 1 on any check failure, 2 on input error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mext/mext.hpp"

namespace fs = std::filesystem;
using namespace mext;

namespace {

struct CheckFailure {
    int code;
    explicit CheckFailure(int c) : code(c) {}
};

bool is_witness_json(const json& j) {
    return j.contains("format") && j["format"] == kWitnessFormat;
}

std::vector<std::pair<std::string, json>> load_dir(const std::string& dir) {
    std::vector<std::pair<std::string, json>> out;
    if (!fs::is_directory(dir))
        throw input_error("'" + dir + "' is not a directory");
    std::vector<fs::path> files;
    for (auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (auto& p : files)
        out.emplace_back(p.filename().string(), load_json(p.string()));
    if (out.empty())
        throw input_error("no .json files in '" + dir + "'");
    return out;
}

std::vector<ExtensionWitness> witnesses_from_dir(const std::string& dir,
                                                 std::vector<std::string>* names = nullptr) {
    std::vector<ExtensionWitness> ws;
    for (auto& [name, j] : load_dir(dir)) {
        if (!is_witness_json(j))
            throw input_error(dir + "/" + name + " is not an extension witness");
        ws.push_back(witness_from_json(j));
        if (names)
            names->push_back(name);
    }
    return ws;
}

std::string fmt_cplx(const cplx& z) {
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

json premodular_report_json(const PreModularData& d, const ModularityReport& rep) {
    json out;
    out["type"] = "premodular";
    out["rank"] = d.rank();
    out["total_dim"] = d.total_dim;
    out["is_modular"] = rep.is_modular;
    json fails = json::array();
    for (auto& [name, r] : rep.failures)
        fails.push_back({{"check", name}, {"residual", r}});
    out["failures"] = std::move(fails);
    if (rep.c) {
        out["c"] = rep.c->str();
        out["xi"] = {rep.xi->real(), rep.xi->imag()};
    }
    return out;
}

void print_modularity(const PreModularData& d, const ModularityReport& rep) {
    std::printf("premodular data: rank %d, D = %.12g\n", d.rank(), d.total_dim);
    std::printf("modular: %s\n", rep.is_modular ? "yes" : "no");
    for (auto& [name, r] : rep.failures)
        std::printf("  failed check %s (residual %.3g)\n", name.c_str(), r);
    if (rep.c)
        std::printf("c = %s mod 8, xi = %s\n", rep.c->str().c_str(), fmt_cplx(*rep.xi).c_str());
}

json witness_report_json(const ExtensionWitness& w, const ExtensionReport& rep) {
    json out;
    out["type"] = "witness";
    out["base_rank"] = w.base.rank();
    out["bulk_rank"] = w.bulk.rank();
    out["ok"] = rep.ok;
    out["extends_base"] = rep.centralizer_is_image;
    json fails = json::array();
    for (auto& [name, r] : rep.failures)
        fails.push_back({{"check", name}, {"residual", r}});
    out["failures"] = std::move(fails);
    out["centralizer"] = rep.centralizer_labels;
    return out;
}

int cmd_validate(const std::string& file, const std::string& json_out) {
    json j = load_json(file);
    json report;
    bool pass = false;
    if (is_witness_json(j)) {
        ExtensionWitness w = witness_from_json(j);
        auto rep = validate_extension(w);
        std::printf("extension witness: base rank %d, bulk rank %d\n", w.base.rank(),
                    w.bulk.rank());
        std::printf("witness checks: %s\n", rep.ok ? "pass" : "fail");
        for (auto& [name, r] : rep.failures)
            std::printf("  failed check %s (residual %.3g)\n", name.c_str(), r);
        std::printf("extends its base: %s (centralizer has %zu labels)\n",
                    rep.centralizer_is_image ? "yes" : "no", rep.centralizer_labels.size());
        report = witness_report_json(w, rep);
        pass = rep.ok && rep.centralizer_is_image;
    } else {
        PreModularData d = premodular_from_json(j);
        auto rep = is_modular(d);
        print_modularity(d, rep);
        report = premodular_report_json(d, rep);
        pass = rep.is_modular;
    }
    if (!json_out.empty())
        save_json(json_out, report);
    return pass ? 0 : 1;
}

void print_info(const PreModularData& d) {
    std::printf("rank: %d\n", d.rank());
    std::printf("labels:");
    for (int i = 0; i < d.rank(); ++i)
        std::printf(" %s", d.ring.label(i).c_str());
    std::printf("\ndims:");
    for (double v : d.dims)
        std::printf(" %.10g", v);
    std::printf("\ntwists:");
    for (auto& t : d.twists)
        std::printf(" %s", t.str().c_str());
    std::printf("\nD: %.12g\n", d.total_dim);
    auto rep = is_modular(d);
    std::printf("modular: %s\n", rep.is_modular ? "yes" : "no");
    if (rep.c)
        std::printf("c: %s mod 8 (xi = %s)\n", rep.c->str().c_str(), fmt_cplx(*rep.xi).c_str());
    auto trans = transparent_objects(d);
    std::printf("transparent labels:");
    for (int x : trans)
        std::printf(" %s", d.ring.label(x).c_str());
    std::printf("\n");
    auto cls = classify_symmetric(d, trans);
    switch (cls.kind) {
    case SymmetricKind::trivial:
        std::printf("center: trivial\n");
        break;
    case SymmetricKind::tannakian:
        std::printf("center: Tannakian, order %ld\n", cls.group_order);
        break;
    case SymmetricKind::super_tannakian:
        std::printf("center: super-Tannakian, order %ld, fermion '%s'\n", cls.group_order,
                    d.ring.label(*cls.fermion_label).c_str());
        break;
    }
}

int cmd_info(const std::string& file) {
    json j = load_json(file);
    if (is_witness_json(j)) {
        ExtensionWitness w = witness_from_json(j);
        std::printf("extension witness over a rank-%d base\n", w.base.rank());
        std::printf("embedding:");
        for (int e = 0; e < w.base.rank(); ++e)
            std::printf(" %s->%s", w.base.ring.label(e).c_str(),
                        w.bulk.ring.label(w.embedding[std::size_t(e)]).c_str());
        std::printf("\n-- bulk --\n");
        print_info(w.bulk);
        return 0;
    }
    print_info(premodular_from_json(j));
    return 0;
}

int cmd_product(const std::string& a_file, const std::string& b_file, const std::string& out) {
    PreModularData a = premodular_from_json(load_json(a_file));
    PreModularData b = premodular_from_json(load_json(b_file));
    PreModularData p = deligne_product(a, b);
    std::printf("product: rank %d, D = %.12g\n", p.rank(), p.total_dim);
    save_json(out, premodular_to_json(p));
    return 0;
}

// split on `sep` at parenthesis depth zero, so tuple label names survive
std::vector<std::string> split_names(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(')
            ++depth;
        if (ch == ')')
            --depth;
        if (ch == sep && depth == 0) {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

int cmd_condense(const std::string& file, const std::string& bosons, const std::string& out) {
    PreModularData d = premodular_from_json(load_json(file));
    std::vector<int> gens;
    for (const std::string& name : split_names(bosons, ',')) {
        auto& labels = d.ring.labels();
        auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end())
            throw input_error("no label named '" + name + "'");
        gens.push_back(int(it - labels.begin()));
    }
    auto b = make_boson_group(d, gens);
    auto r = condense(d, b);
    std::printf("condensed %d bosons: rank %d -> %d, D = %.12g\n", r.boson_count, d.rank(),
                r.condensed.rank(), r.condensed.total_dim);
    for (int i = 0; i < r.condensed.rank(); ++i) {
        std::printf("  %s <- {", r.condensed.ring.label(i).c_str());
        for (std::size_t k = 0; k < r.lift[std::size_t(i)].size(); ++k)
            std::printf("%s%s", k ? ", " : "",
                        d.ring.label(r.lift[std::size_t(i)][k]).c_str());
        std::printf("}%s\n", r.split_index[std::size_t(i)] >= 0 ? " (split)" : "");
    }
    save_json(out, premodular_to_json(r.condensed));
    return 0;
}

int cmd_stack(const std::string& w1f, const std::string& w2f, const std::string& out) {
    ExtensionWitness w1 = witness_from_json(load_json(w1f));
    ExtensionWitness w2 = witness_from_json(load_json(w2f));
    ExtensionWitness w = stack(w1, w2);
    auto rep = validate_extension(w);
    std::printf("stacked witness: bulk rank %d, c = %s\n", w.bulk.rank(),
                central_charge(w.bulk).c.str().c_str());
    save_json(out, witness_to_json(w));
    return rep.ok ? 0 : 1;
}

int cmd_catalog(const std::string& family, int n, const std::string& dir) {
    fs::create_directories(dir);
    std::vector<ExtensionWitness> ws;
    std::string prefix;
    if (family == "svect") {
        ws = mext_svect_catalog();
        prefix = "svect";
    } else if (family == "repzn") {
        if (n < 1)
            throw input_error("catalog repzn requires N >= 1");
        for (int k = 0; k < n; ++k)
            ws.push_back(twisted_double_cyclic(n, k));
        prefix = "repz" + std::to_string(n);
    } else {
        throw input_error("unknown catalog family '" + family + "' (svect or repzn)");
    }
    for (std::size_t i = 0; i < ws.size(); ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%s-%02zu.json", prefix.c_str(), i);
        save_json((fs::path(dir) / buf).string(), witness_to_json(ws[i]));
        std::printf("%s: bulk rank %d, c = %s\n", buf, ws[i].bulk.rank(),
                    central_charge(ws[i].bulk).c.str().c_str());
    }
    std::printf("wrote %zu witnesses to %s\n", ws.size(), dir.c_str());
    return 0;
}

int cmd_identify(const std::string& file, const std::string& dir) {
    json j = load_json(file);
    auto entries = load_dir(dir);
    if (is_witness_json(j)) {
        ExtensionWitness w = witness_from_json(j);
        for (auto& [name, cj] : entries) {
            if (!is_witness_json(cj))
                continue;
            ExtensionWitness c = witness_from_json(cj);
            try {
                if (!extensions_equivalent(w, c))
                    continue;
            } catch (const base_mismatch_error&) {
                continue;
            }
            std::printf("match: %s\n", name.c_str());
            auto sigma = detail::base_match(w.base, c.base);
            std::vector<std::pair<int, int>> pinned;
            for (int e = 0; e < w.base.rank(); ++e)
                pinned.emplace_back(w.embedding[std::size_t(e)],
                                    c.embedding[std::size_t(sigma[std::size_t(e)])]);
            auto pi = find_equivalence(w.bulk, c.bulk, pinned);
            for (int x = 0; x < w.bulk.rank(); ++x)
                std::printf("  %s -> %s\n", w.bulk.ring.label(x).c_str(),
                            c.bulk.ring.label((*pi)[std::size_t(x)]).c_str());
            return 0;
        }
    } else {
        PreModularData d = premodular_from_json(j);
        for (auto& [name, cj] : entries) {
            if (is_witness_json(cj))
                continue;
            PreModularData c = premodular_from_json(cj);
            auto pi = find_equivalence(d, c);
            if (!pi)
                continue;
            std::printf("match: %s\n", name.c_str());
            for (int x = 0; x < d.rank(); ++x)
                std::printf("  %s -> %s\n", d.ring.label(x).c_str(),
                            c.ring.label((*pi)[std::size_t(x)]).c_str());
            return 0;
        }
    }
    std::printf("no match in %s\n", dir.c_str());
    return 1;
}

int cmd_group_table(const std::string& dir, const std::string& json_out) {
    std::vector<std::string> names;
    auto ws = witnesses_from_dir(dir, &names);
    auto gt = group_table(ws);
    std::printf("group of %zu extensions; identity: %s\n", ws.size(),
                names[std::size_t(gt.identity)].c_str());
    std::printf("invariant factors:");
    for (int f : gt.invariant_factors)
        std::printf(" %d", f);
    std::printf("\ncayley table (row x col):\n");
    for (std::size_t i = 0; i < ws.size(); ++i) {
        std::printf("  ");
        for (std::size_t j = 0; j < ws.size(); ++j)
            std::printf("%3d", gt.table[i][j]);
        std::printf("\n");
    }
    if (!json_out.empty()) {
        json out;
        out["names"] = names;
        out["identity"] = gt.identity;
        out["invariant_factors"] = gt.invariant_factors;
        out["table"] = gt.table;
        out["element_orders"] = gt.element_orders;
        save_json(json_out, out);
    }
    return 0;
}

int cmd_torsor(const std::string& c_dir, const std::string& e_dir, const std::string& json_out) {
    auto ext_c = witnesses_from_dir(c_dir);
    auto ext_e = witnesses_from_dir(e_dir);
    auto rep = torsor_check(ext_c, ext_e);
    std::printf("action table (extC rows x extE cols):\n");
    for (auto& row : rep.action) {
        std::printf("  ");
        for (int v : row)
            std::printf("%3d", v);
        std::printf("\n");
    }
    std::printf("free: %s\ntransitive: %s\n", rep.free_action ? "yes" : "no",
                rep.transitive ? "yes" : "no");
    for (auto& f : rep.failures)
        std::printf("  failure: %s\n", f.c_str());
    if (!json_out.empty()) {
        json out;
        out["free"] = rep.free_action;
        out["transitive"] = rep.transitive;
        out["action"] = rep.action;
        out["failures"] = rep.failures;
        save_json(json_out, out);
    }
    return rep.ok ? 0 : 1;
}

std::vector<int> parse_orders(const std::string& spec) {
    std::vector<int> orders;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) {
            try {
                orders.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw input_error("bad cyclic order '" + tok + "'");
            }
        }
    return orders;
}

int cmd_cohomology(const std::string& group_spec, const std::string& restrict_spec,
                   const std::string& json_out) {
    auto orders = parse_orders(group_spec);
    auto h = h3_classes(orders);
    std::printf("H^3(G, U(1)) for G of order %d: ", h.group().size());
    if (h.invariant_factors().empty())
        std::printf("trivial\n");
    else {
        std::printf("Z_%d", h.invariant_factors()[0]);
        for (std::size_t i = 1; i < h.invariant_factors().size(); ++i)
            std::printf(" x Z_%d", h.invariant_factors()[i]);
        std::printf("\n");
    }
    std::printf("order: %ld, representatives: %zu\n", h.order(), h.representatives().size());
    json jreps = json::array();
    if (!restrict_spec.empty()) {
        // subgroup generators: coordinate tuples separated by ';'
        std::vector<int> gens;
        std::stringstream ss(restrict_spec);
        std::string tok;
        while (std::getline(ss, tok, ';'))
            if (!tok.empty()) {
                auto coords = parse_orders(tok);
                if (coords.size() != h.group().orders.size())
                    throw input_error("subgroup generator has the wrong number of coordinates");
                gens.push_back(h.group().from_coords(coords));
            }
        auto elems = subgroup_closure(h.group(), gens);
        auto hb = cyclic_decomposition(h.group(), elems);
        auto hh = h3_classes(hb.orders);
        std::printf("restriction to the subgroup of order %zu:\n", elems.size());
        for (std::size_t i = 0; i < h.representatives().size(); ++i) {
            auto r = restrict_cocycle(h.representatives()[i], gens);
            auto cls = hh.class_of(r);
            std::printf("  class %zu restricts to (", i);
            for (std::size_t k = 0; k < cls.size(); ++k)
                std::printf("%s%ld", k ? "," : "", cls[k]);
            std::printf(")\n");
            jreps.push_back(cls);
        }
    }
    if (!json_out.empty()) {
        json out;
        out["invariant_factors"] = h.invariant_factors();
        out["order"] = h.order();
        if (!restrict_spec.empty())
            out["restricted_classes"] = jreps;
        save_json(json_out, out);
    }
    return 0;
}

int cmd_break_symmetry(const std::string& file, const std::string& subgroup,
                       const std::string& out) {
    ExtensionWitness w = witness_from_json(load_json(file));
    std::vector<int> gens;
    for (const std::string& name : split_names(subgroup, ';')) {
        auto& labels = w.base.ring.labels();
        auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end())
            throw input_error("base has no label named '" + name + "'");
        gens.push_back(int(it - labels.begin()));
    }
    ExtensionWitness broken = break_symmetry(w, gens);
    std::printf("broken to a rank-%d base; bulk rank %d, c = %s\n", broken.base.rank(),
                broken.bulk.rank(), central_charge(broken.bulk).c.str().c_str());
    save_json(out, witness_to_json(broken));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for modular data, bosonic condensation and modular extensions"};
    app.require_subcommand(1);

    std::string file, file2, out_path, json_out, dir, bosons, family, subgroup, group_spec,
        restrict_spec, c_dir, e_dir;
    int repzn_n = 0;

    auto* validate = app.add_subcommand("validate", "run the modularity / witness checks");
    validate->add_option("file", file)->required();
    validate->add_option("--json", json_out, "write a machine-readable report");

    auto* info = app.add_subcommand("info", "rank, dims, twists, charge, center");
    info->add_option("file", file)->required();

    auto* product = app.add_subcommand("product", "Deligne product of two data files");
    product->add_option("a", file)->required();
    product->add_option("b", file2)->required();
    product->add_option("-o,--out", out_path)->required();

    auto* cond = app.add_subcommand("condense", "condense a group of invertible bosons");
    cond->add_option("file", file)->required();
    cond->add_option("--bosons", bosons, "comma-separated label names")->required();
    cond->add_option("-o,--out", out_path)->required();

    auto* stack_cmd = app.add_subcommand("stack", "stacking product of two witnesses");
    stack_cmd->add_option("w1", file)->required();
    stack_cmd->add_option("w2", file2)->required();
    stack_cmd->add_option("-o,--out", out_path)->required();

    auto* catalog = app.add_subcommand("catalog", "write a witness catalog (svect | repzn N)");
    catalog->add_option("family", family)->required();
    catalog->add_option("n", repzn_n, "cyclic order for repzn");
    catalog->add_option("--dir", dir)->required();

    auto* identify = app.add_subcommand("identify", "match a file against a catalog directory");
    identify->add_option("file", file)->required();
    identify->add_option("--against", dir)->required();

    auto* gt = app.add_subcommand("group-table", "Cayley table of a witness directory");
    gt->add_option("dir", dir)->required();
    gt->add_option("--json", json_out);

    auto* torsor = app.add_subcommand("torsor-check", "free/transitive action check");
    torsor->add_option("--extC", c_dir)->required();
    torsor->add_option("--extE", e_dir)->required();
    torsor->add_option("--json", json_out);

    auto* coh = app.add_subcommand("cohomology", "H^3(G,U(1)) of a finite abelian group");
    coh->add_option("--group", group_spec, "comma-separated cyclic orders")->required();
    coh->add_option("--restrict", restrict_spec, "subgroup generators, tuples split by ';'");
    coh->add_option("--json", json_out);

    auto* brk = app.add_subcommand("break-symmetry", "condense down to a subgroup of the base");
    brk->add_option("witness", file)->required();
    brk->add_option("--subgroup", subgroup, "generator label names, split by ';'")->required();
    brk->add_option("-o,--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (validate->parsed())
            return cmd_validate(file, json_out);
        if (info->parsed())
            return cmd_info(file);
        if (product->parsed())
            return cmd_product(file, file2, out_path);
        if (cond->parsed())
            return cmd_condense(file, bosons, out_path);
        if (stack_cmd->parsed())
            return cmd_stack(file, file2, out_path);
        if (catalog->parsed())
            return cmd_catalog(family, repzn_n, dir);
        if (identify->parsed())
            return cmd_identify(file, dir);
        if (gt->parsed())
            return cmd_group_table(dir, json_out);
        if (torsor->parsed())
            return cmd_torsor(c_dir, e_dir, json_out);
        if (coh->parsed())
            return cmd_cohomology(group_spec, restrict_spec, json_out);
        if (brk->parsed())
            return cmd_break_symmetry(file, subgroup, out_path);
    } catch (const input_error& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const error& e) {
        std::fprintf(stderr, "check failed: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
