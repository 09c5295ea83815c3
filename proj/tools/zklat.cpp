// zklat command-line tool.
//
// Exit codes: 0 success, 1 claim mismatch or failed stage, 2 usage or reference
// error, 3 resource exhaustion (a partial report is still printed).

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "zklat/catalog.hpp"
#include "zklat/code.hpp"
#include "zklat/constructions.hpp"
#include "zklat/enumerate.hpp"
#include "zklat/errors.hpp"
#include "zklat/frame.hpp"
#include "zklat/lattice.hpp"
#include "zklat/modforms.hpp"

using nlohmann::json;
using namespace zklat;

namespace {

enum Exit : int { kOk = 0, kMismatch = 1, kUsage = 2, kResource = 3 };

struct Globals {
    std::string catalog_path;
    std::optional<std::int64_t> precision;
    std::uint64_t budget = 0;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t seed = 1;
    bool json_output = false;
};

Catalog load_catalog(const Globals& g) {
    return g.catalog_path.empty() ? Catalog::load_default() : Catalog::from_file(g.catalog_path);
}

/// "catalog:NAME", a bare catalog name, or a path to a JSON file holding one entry.
CatalogEntry resolve(const Catalog& cat, const std::string& ref) {
    const std::string prefix = "catalog:";
    if (ref.rfind(prefix, 0) == 0) return cat.find(ref.substr(prefix.size()));
    if (const auto* e = cat.try_find(ref)) return *e;
    if (std::filesystem::is_regular_file(ref)) {
        std::ifstream in(ref);
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::exception& e) {
            throw InputError("spec file " + ref + " is not valid JSON: " + e.what());
        }
        return entry_from_json(doc);
    }
    throw NotFoundError("cannot resolve code reference '" + ref + "'");
}

EnumerationOptions enumeration_options(const Globals& g) {
    EnumerationOptions o;
    o.node_budget = g.budget;
    o.threads = g.threads;
    o.checkpoint = [](const EnumerationProgress& p) {
        std::cerr << "checkpoint nodes=" << p.nodes << " subtrees=" << p.subtrees_done << "/" << p.subtrees_total
                  << std::endl;
    };
    return o;
}

void render(std::ostream& os, const json& j, const std::string& indent = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        const std::string key = j.is_array() ? "-" : it.key() + ":";
        if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_structured())) {
            os << indent << key << "\n";
            render(os, v, indent + "  ");
        } else {
            os << indent << key << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

void emit(const Globals& g, const json& report) {
    if (g.json_output) {
        std::cout << report.dump(2) << std::endl;
    } else {
        render(std::cout, report);
    }
}

class StageLog {
public:
    explicit StageLog(json& report) : report_(report) { report_["stages"] = json::array(); }

    void pass(const std::string& name, json detail = json::object()) { push(name, true, std::move(detail)); }

    bool check(const std::string& name, bool ok, json detail = json::object()) {
        push(name, ok, std::move(detail));
        if (!ok) report_["failed_stage"] = name;
        return ok;
    }

private:
    void push(const std::string& name, bool ok, json detail) {
        detail["stage"] = name;
        detail["ok"] = ok;
        report_["stages"].push_back(std::move(detail));
    }

    json& report_;
};

// ---- verify ----

int cmd_verify(const Globals& g, const std::string& ref, bool certify) {
    const auto cat = load_catalog(g);
    const auto entry = resolve(cat, ref);
    const auto code = entry.code();

    json report;
    report["command"] = "verify";
    report["catalog_version"] = cat.version();
    report["code"] = entry_to_json(entry);

    json checks;
    checks["self_dual"] = is_self_dual(code);
    checks["type_ii"] = is_type_ii(code);
    std::optional<std::int64_t> bound;
    if (code.modulus().is_even() && code.modulus().k() <= 6) bound = extremal_bound(code.length(), code.modulus());
    checks["bound_value"] = bound ? json(*bound) : json(nullptr);

    int exit = kOk;
    std::optional<Extremality> extremality;
    if (!certify) {
        checks["d_E"] = nullptr;
        checks["d_E_status"] = "not_computed";
        checks["extremal"] = bound ? to_string(Extremality::unresolved) : "undefined";
    } else {
        const auto m = code.modulus().value();
        WeightCertificate cert;
        try {
            const auto mn = min_norm(construction_a(code), enumeration_options(g));
            cert = mn.value() < m ? WeightCertificate{m * mn.value(), true} : WeightCertificate{m * m, false};
            checks["min_norm"] = mn.value();
        } catch (const ResourceError& e) {
            cert = {m * std::min<std::int64_t>(e.certified_floor(), m), false};
            report["resource"] = e.what();
            exit = kResource;
        }
        checks["d_E"] = cert.value;
        checks["d_E_status"] = cert.exact ? "exact" : "lower_bound";
        if (bound) {
            extremality = classify_extremality(code, cert);
            checks["extremal"] = to_string(*extremality);
        } else {
            checks["extremal"] = "undefined";
        }
    }
    report["checks"] = checks;

    json mismatches = json::array();
    if (checks["self_dual"].get<bool>() != entry.claims.self_dual) mismatches.push_back("self_dual");
    if (checks["type_ii"].get<bool>() != entry.claims.type_ii) mismatches.push_back("type_ii");
    if (extremality && *extremality != Extremality::unresolved && entry.claims.extremal &&
        (*extremality == Extremality::extremal) != *entry.claims.extremal)
        mismatches.push_back("extremal");
    report["mismatches"] = mismatches;
    if (!mismatches.empty()) exit = kMismatch;
    report["status"] = exit == kOk ? "ok" : exit == kMismatch ? "mismatch" : "resource_exhausted";
    emit(g, report);
    return exit;
}

// ---- reproduce ----

int reproduce_thm1(const Globals& g, json& report) {
    json rows = json::array();
    bool all_positive = true;
    for (std::int64_t n = 8; n <= 72; n += 8) {
        json row;
        row["n"] = n;
        json vals = json::array();
        for (std::int64_t k = 1; k <= 6; ++k) {
            const auto d = extremal_defect(n, k, g.precision);
            all_positive = all_positive && d > 0;
            vals.push_back(d.get_str());
        }
        row["defects_k1_to_k6"] = vals;
        rows.push_back(row);
    }
    report["table"] = rows;
    report["all_positive"] = all_positive;
    return all_positive ? kOk : kMismatch;
}

int reproduce_e4(const Globals& g, json& report, std::int64_t k) {
    const auto cat = load_catalog(g);
    const auto& seed = cat.seed_for(k);
    const auto p = g.precision.value_or(10);
    const auto code = seed.code();
    const auto eis = e4(p);
    const auto from_swe = theta_from_swe(swe(code), p);
    const auto shells = shell_sizes(construction_a(code), p, enumeration_options(g));
    QSeries from_shells(1, p);
    for (std::int64_t i = 0; i <= p; ++i) from_shells.set(i, static_cast<unsigned long>(shells.count(i)));
    report["seed"] = seed.name;
    report["e4"] = eis.to_string();
    report["swe_substitution"] = from_swe.to_string();
    report["lattice_shells"] = from_shells.to_string();
    StageLog log(report);
    if (!log.check("swe substitution equals E4", from_swe.agrees_with(eis))) return kMismatch;
    if (!log.check("lattice shells equal E4", from_shells.agrees_with(eis))) return kMismatch;
    return kOk;
}

int reproduce_prop43_small(const Globals& g, json& report, std::int64_t k) {
    const auto cat = load_catalog(g);
    const auto& seed = cat.seed_for(k);
    StageLog log(report);
    const auto code = seed.code();
    if (!log.check("seed is Type II", is_type_ii(code), {{"seed", seed.name}})) return kMismatch;
    const auto lattice = construction_a(code);
    const auto inv = lattice_invariants(lattice);
    if (!log.check("construction A is even unimodular", inv.even && inv.unimodular)) return kMismatch;
    const auto frame = double_frame(standard_frame(code));
    if (!log.check("doubled frame", is_frame(frame), {{"norm", frame.norm}})) return kMismatch;
    if (!log.check("frame lies in the lattice", frame_in_lattice(lattice, frame))) return kMismatch;
    const auto target = Modulus::from_k(2 * k);
    const auto produced = code_from_frame(lattice, frame, target);
    if (!log.check("code from frame is Type II", is_type_ii(produced), {{"modulus", target.value()}}))
        return kMismatch;
    const auto image = frame_coordinates(lattice, frame);
    if (!log.check("Gram preserved", same_gram(image, lattice) && same_lattice(image, construction_a(produced))))
        return kMismatch;
    json rows = json::array();
    for (const auto& h : produced.howell_form()) rows.push_back(h.to_string());
    report["produced_code"] = {{"modulus", target.value()}, {"length", produced.length()}, {"howell_rows", rows}};
    return kOk;
}

int reproduce_prop42(const Globals& g, json& report, bool full) {
    const auto cat = load_catalog(g);
    const auto& entry = cat.find("C_{5,48}");
    const auto code = entry.code();
    StageLog log(report);
    if (!log.check("self-dual over Z_5", is_self_dual(code))) return kMismatch;
    const auto lattice = construction_a(code);
    const auto inv = lattice_invariants(lattice);
    if (!log.check("A_5 is odd unimodular", inv.unimodular && inv.odd)) return kMismatch;

    const std::int64_t radius = full ? 5 : 3;
    try {
        const auto sh = shell_sizes(lattice, radius, enumeration_options(g));
        json counts = json::object();
        bool ok = true;
        for (std::int64_t m = 1; m <= radius; ++m) {
            counts[std::to_string(m)] = sh.count(m);
            if (m < 5 && sh.count(m) != 0) ok = false;
        }
        if (full && sh.count(5) != 393216) ok = false;
        if (!log.check(full ? "shells through norm 5" : "shells through norm 3 (partial)", ok,
                       {{"counts", counts}, {"nodes", sh.nodes()}}))
            return kMismatch;
    } catch (const ResourceError& e) {
        log.check("shell enumeration", false, {{"certified_floor", e.certified_floor()}, {"error", e.what()}});
        report["status"] = "resource_exhausted";
        return kResource;
    }

    const auto nbrs = even_neighbors(lattice);
    if (!log.check("even unimodular neighbor exists", !nbrs.empty(), {{"count", nbrs.size()}})) return kMismatch;
    const auto frame = double_frame(standard_frame(code));
    log.pass("doubled 10-frame", {{"norm", frame.norm}});
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const auto label = "neighbor " + std::to_string(i);
        if (!frame_in_lattice(nbrs[i], frame)) {
            log.pass(label + " does not contain the frame");
            continue;
        }
        const auto z10 = code_from_frame(nbrs[i], frame, Modulus(10));
        if (!log.check(label + ": Z_10 code from the frame is Type II", is_type_ii(z10))) return kMismatch;
    }
    report["extremality"] =
        "min norm 6 of the neighbor is not certified here; enumeration to norm 4 in dimension 48 exceeds desk budgets";
    return kOk;
}

int cmd_reproduce(const Globals& g, const std::string& id, std::int64_t k, bool full) {
    json report;
    report["command"] = "reproduce";
    report["pipeline"] = id;
    int exit;
    if (id == "thm1-table") {
        exit = reproduce_thm1(g, report);
    } else if (id == "e4-identity") {
        exit = reproduce_e4(g, report, k);
    } else if (id == "prop4.3-small") {
        exit = reproduce_prop43_small(g, report, k);
    } else if (id == "prop4.2") {
        exit = reproduce_prop42(g, report, full);
    } else {
        throw InputError("unknown pipeline '" + id + "'; expected prop4.2, prop4.3-small, thm1-table or e4-identity");
    }
    if (!report.contains("status")) report["status"] = exit == kOk ? "ok" : "failed";
    emit(g, report);
    return exit;
}

// ---- theta, shells, defect ----

int cmd_theta(const Globals& g, const std::string& ref, bool with_shells) {
    const auto cat = load_catalog(g);
    const auto entry = resolve(cat, ref);
    const auto code = entry.code();
    const auto p = g.precision.value_or(8);
    json report;
    report["command"] = "theta";
    report["code"] = entry.name;
    const auto th = theta_from_swe(swe(code), p);
    report["theta"] = th.to_string();
    report["series"] = th.to_json();
    int exit = kOk;
    if (with_shells) {
        const auto l = construction_a(code);
        const auto sh = shell_sizes_scaled(l, p * l.scale(), enumeration_options(g));
        bool agree = true;
        for (std::int64_t num = 0; num <= th.precision(); ++num) {
            const auto scaled = num * l.scale();
            const auto expect = scaled % th.denominator() == 0 ? sh.count_scaled(scaled / th.denominator()) : 0;
            agree = agree && th.coefficient(num) == expect;
        }
        report["shells_agree"] = agree;
        if (!agree) exit = kMismatch;
    }
    emit(g, report);
    return exit;
}

int cmd_shells(const Globals& g, const std::string& ref, const std::string& lattice_file, std::int64_t max_norm) {
    std::optional<LatticeBasis> lattice;
    json report;
    report["command"] = "shells";
    if (!lattice_file.empty()) {
        std::ifstream in(lattice_file);
        if (!in) throw NotFoundError("cannot open lattice file " + lattice_file);
        lattice = read_lattice(in);
        report["lattice"] = lattice_file;
    } else {
        const auto cat = load_catalog(g);
        const auto entry = resolve(cat, ref);
        lattice = construction_a(entry.code());
        report["code"] = entry.name;
    }
    report["scale"] = lattice->scale();
    try {
        const auto sh = shell_sizes(*lattice, max_norm, enumeration_options(g));
        json counts = json::object();
        for (const auto& [scaled, n] : sh.counts()) {
            std::string key = scaled % sh.scale() == 0 ? std::to_string(scaled / sh.scale())
                                                       : std::to_string(scaled) + "/" + std::to_string(sh.scale());
            counts[key] = n;
        }
        report["max_norm"] = max_norm;
        report["counts"] = counts;
        report["nodes"] = sh.nodes();
    } catch (const ResourceError& e) {
        report["status"] = "resource_exhausted";
        report["error"] = e.what();
        emit(g, report);
        return kResource;
    }
    emit(g, report);
    return kOk;
}

int cmd_defect(const Globals& g, std::int64_t n, std::int64_t k) {
    json report;
    report["command"] = "defect";
    report["n"] = n;
    report["k"] = k;
    const auto d = extremal_defect(n, k, g.precision);
    report["defect"] = d.get_str();
    report["positive"] = d > 0;
    emit(g, report);
    return kOk;
}

// ---- search, export ----

int cmd_search(const Globals& g, std::int64_t modulus, std::size_t length, std::size_t max_results) {
    SearchOptions opts;
    opts.budget = g.budget == 0 ? (1u << 16) : g.budget;
    opts.seed = g.seed;
    opts.threads = g.threads;
    opts.max_results = max_results;
    const Modulus mod(modulus);
    const auto found = search_negacirculant(mod, length, opts);
    json report;
    report["command"] = "search";
    report["modulus"] = modulus;
    report["length"] = length;
    report["seed"] = g.seed;
    report["candidates"] = opts.budget;
    json codes = json::array();
    for (std::size_t i = 0; i < found.size(); ++i) {
        const auto code = four_negacirculant_code(found[i]);
        CatalogEntry e{"found_" + std::to_string(i), found[i], {is_self_dual(code), is_type_ii(code), std::nullopt},
                       "artifact-search"};
        auto j = entry_to_json(e);
        if (code.cardinality() <= kDefaultEnumerationCap) j["d_E"] = min_euclidean_weight_bruteforce(code);
        codes.push_back(j);
    }
    report["codes"] = codes;
    emit(g, report);
    return kOk;
}

int cmd_export(const Globals& g, const std::string& ref, const std::string& output) {
    const auto cat = load_catalog(g);
    const auto entry = resolve(cat, ref);
    const auto lattice = construction_a(entry.code());
    if (output.empty() || output == "-") {
        std::cout << "# Construction A of " << entry.name << "\n";
        write_lattice(std::cout, lattice);
    } else {
        std::ofstream out(output);
        if (!out) throw InputError("cannot write " + output);
        out << "# Construction A of " << entry.name << "\n";
        write_lattice(out, lattice);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Codes over Z_m, Construction A lattices and theta-series certificates"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    std::int64_t precision = -1;
    app.add_option("--catalog", g.catalog_path, "Catalog JSON file (default: bundled, or $ZKLAT_CATALOG)");
    app.add_option("--precision", precision, "Series precision exponent");
    app.add_option("--budget", g.budget, "Enumeration node budget (search: candidate count); 0 is unlimited");
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Search seed");
    app.add_flag("--json", g.json_output, "Emit the report as JSON");

    std::string ref;
    bool certify = false;
    auto* verify = app.add_subcommand("verify", "Recompute a code's claims");
    verify->add_option("code", ref, "catalog:NAME, NAME or an entry JSON file")->required();
    verify->add_flag("--certify-min-weight", certify, "Certify d_E by lattice enumeration");

    std::string pipeline;
    std::int64_t seed_k = 3;
    bool full = false;
    auto* reproduce = app.add_subcommand("reproduce", "Run a reproduction pipeline");
    reproduce->add_option("pipeline", pipeline, "prop4.2 | prop4.3-small | thm1-table | e4-identity")->required();
    reproduce->add_option("--k", seed_k, "Seed index k (modulus 2k)")->check(CLI::Range(1, 6));
    reproduce->add_flag("--full", full, "prop4.2: enumerate through norm 5 (hours)");

    bool with_shells = false;
    auto* theta = app.add_subcommand("theta", "Theta series from the symmetrized weight enumerator");
    theta->add_option("code", ref)->required();
    theta->add_flag("--shells", with_shells, "Cross-check against lattice enumeration");

    std::string lattice_file;
    std::int64_t max_norm = 4;
    auto* shells = app.add_subcommand("shells", "Shell sizes of a Construction A or stored lattice");
    shells->add_option("code", ref);
    shells->add_option("--lattice", lattice_file, "Lattice file instead of a code");
    shells->add_option("--max-norm", max_norm)->check(CLI::NonNegativeNumber);

    std::int64_t n = 8, k = 1;
    auto* defect = app.add_subcommand("defect", "Extremal defect for length n over Z_2k");
    defect->add_option("--n", n)->required();
    defect->add_option("--k", k)->required();

    std::int64_t modulus = 4;
    std::size_t length = 8, max_results = 0;
    auto* search = app.add_subcommand("search", "Random search for four-negacirculant self-dual codes");
    search->add_option("--modulus", modulus)->check(CLI::Range(2, 1 << 20));
    search->add_option("--length", length);
    search->add_option("--max-results", max_results);

    std::string output;
    auto* exporter = app.add_subcommand("export-lattice", "Write the Construction A basis");
    exporter->add_option("code", ref)->required();
    exporter->add_option("-o,--output", output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    if (precision >= 0) g.precision = precision;

    try {
        if (*verify) return cmd_verify(g, ref, certify);
        if (*reproduce) return cmd_reproduce(g, pipeline, seed_k, full);
        if (*theta) return cmd_theta(g, ref, with_shells);
        if (*shells) {
            if (ref.empty() == lattice_file.empty()) throw InputError("give either a code or --lattice");
            return cmd_shells(g, ref, lattice_file, max_norm);
        }
        if (*defect) return cmd_defect(g, n, k);
        if (*search) return cmd_search(g, modulus, length, max_results);
        if (*exporter) return cmd_export(g, ref, output);
    } catch (const NotFoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ResourceError& e) {
        std::cerr << "resource exhausted: " << e.what() << "\n";
        return kResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMismatch;
    }
    return kUsage;
}
