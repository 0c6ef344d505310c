#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spherical/dinv.hpp"
#include "spherical/lattice.hpp"
#include "spherical/numtheory.hpp"
#include "spherical/obstruct.hpp"
#include "spherical/seifert.hpp"
#include "spherical/surgery.hpp"

namespace {

using namespace spherical;

constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 verdict reached, 2 parse error, 3 inconclusive within budget.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInconclusive = 3;

int fail_parse(const std::string& message) {
    std::cerr << "parse error: " << message << "\n";
    return kExitParse;
}

std::optional<SphericalName> resolve_name(const std::string& text, std::string& error) {
    if (std::optional<SphericalName> name = SphericalName::parse(text)) return name;
    if (std::optional<SeifertInvariant> inv = SeifertInvariant::parse(text)) {
        NameResult result = spherical_name(*inv);
        if (!result.name) {
            error = "not a spherical space form: " + result.reason;
            return std::nullopt;
        }
        return result.name;
    }
    error = "expected a catalog name such as I_49 or L_9_2, or Seifert invariants "
            "such as (2; 2/1, 3/1, 5/1)";
    return std::nullopt;
}

std::string order_string(const OrderVerdict& verdict) {
    switch (verdict.kind) {
        case OrderKind::order_1: return "1";
        case OrderKind::order_2: return "2";
        case OrderKind::infinite: return "infinite";
        case OrderKind::reduction_to_lens:
            return verdict.lens ? "order of " + verdict.lens->str() : "order of a lens space";
        case OrderKind::excluded_up_to:
            return "unknown (orders <= " + std::to_string(verdict.excluded_up_to) + " excluded)";
        case OrderKind::unknown: return "unknown";
    }
    return "unknown";
}

std::string provenance_string(const Classification& c) {
    for (const ObstructionReport& r : c.reports) {
        if (r.decisive) return r.id;
    }
    if (c.verdict.kind == OrderKind::order_1) return "external";
    return "none";
}

bool budget_limited(const Classification& c) {
    if (c.verdict.kind != OrderKind::unknown && c.verdict.kind != OrderKind::excluded_up_to) {
        return false;
    }
    for (const ObstructionReport& r : c.reports) {
        if (r.verdict == ObstructionVerdict::inconclusive) return true;
    }
    return false;
}

nlohmann::json envelope(const std::string& command, const std::string& input) {
    nlohmann::json doc;
    doc["command"] = command;
    doc["input"] = input;
    doc["version"] = kVersion;
    return doc;
}

void print_reports_text(const Classification& c) {
    std::cout << "reports:\n";
    for (const ObstructionReport& r : c.reports) {
        std::cout << "  " << r.id << ": " << to_string(r.verdict);
        if (r.decisive) std::cout << " (decisive)";
        if (!r.witness.empty()) std::cout << " | " << r.witness;
        if (!r.params.empty()) std::cout << " | " << r.params;
        std::cout << "\n";
    }
}

int cmd_classify(const std::string& target, const ClassifyCaps& caps, const std::string& format) {
    std::string error;
    std::optional<SphericalName> name = resolve_name(target, error);
    if (!name) return fail_parse(error);

    Classification c = classify_order(*name, caps);
    if (format == "json") {
        std::cout << classification_to_json(c) << "\n";
    } else if (format == "csv") {
        std::cout << "name,order,provenance\n"
                  << c.name.str() << "," << order_string(c.verdict) << ","
                  << provenance_string(c) << "\n";
    } else {
        std::cout << "manifold: " << c.name.str() << "\n"
                  << "order: " << order_string(c.verdict) << "\n";
        if (!c.verdict.detail.empty()) std::cout << "detail: " << c.verdict.detail << "\n";
        print_reports_text(c);
    }
    return budget_limited(c) ? kExitInconclusive : kExitOk;
}

struct DTarget {
    std::string display;
    // Lens spaces evaluate through the closed form, surgeries through the
    // correction-term formula; both enumerate labels 0..|H1|-1.
    bool lens = false;
    Integer p, q;
    std::optional<SurgeryDescription> desc;
};

std::optional<DTarget> resolve_d_target(const std::string& text, std::string& error) {
    DTarget out;
    if (std::optional<SurgeryDescription> desc = SurgeryDescription::parse(text)) {
        out.display = desc->str();
        out.desc = desc;
        return out;
    }
    std::optional<SphericalName> name = SphericalName::parse(text);
    if (!name) {
        if (std::optional<SeifertInvariant> inv = SeifertInvariant::parse(text)) {
            NameResult result = spherical_name(*inv);
            if (!result.name) {
                error = "not a spherical space form: " + result.reason;
                return std::nullopt;
            }
            name = result.name;
        }
    }
    if (!name) {
        error = "expected a surgery description, a catalog name, or Seifert invariants";
        return std::nullopt;
    }
    out.display = name->str();
    if (name->family == Family::C) {
        out.lens = true;
        out.p = name->p;
        out.q = name->q;
        if (name->sign < 0) {
            out.q = mod_floor(-name->q, name->p);
        }
        return out;
    }
    if (name->family == Family::D) {
        error = "no torus-knot surgery description is available for prism manifolds";
        return std::nullopt;
    }
    out.desc = surgery_of_spherical(*name);
    return out;
}

int cmd_d(const std::string& target, bool all, const std::string& label_text, bool extendable,
          const std::string& format) {
    std::string error;
    std::optional<DTarget> t = resolve_d_target(target, error);
    if (!t) return fail_parse(error);

    Integer order;     // number of spin-c labels
    Integer orbit_mod; // label arithmetic for extendable orbits runs mod order
    std::function<Rational(const Integer&)> eval;
    if (t->lens) {
        order = t->p;
        orbit_mod = t->q;
        Integer p = t->p;
        Integer q = t->q;
        eval = [p, q](const Integer& i) { return d_lens(p, q, i); };
    } else {
        SurgeryDescription desc = *t->desc;
        order = abs(desc.r.num());
        orbit_mod = desc.r.den();
        eval = [desc](const Integer& i) { return d_surgery(desc, i); };
    }

    std::vector<std::pair<Integer, Rational>> rows;
    if (!label_text.empty()) {
        Integer i;
        try {
            i = Integer(label_text);
        } catch (const std::invalid_argument&) {
            return fail_parse("bad label '" + label_text + "'");
        }
        if (i < 0 || i >= order) {
            return fail_parse("label out of range [0, " + order.get_str() + ")");
        }
        rows.emplace_back(i, eval(i));
    } else if (extendable) {
        std::optional<Integer> m = is_perfect_square(order);
        if (!m) {
            return fail_parse("extendable labels require square first homology; |H1| = " +
                              order.get_str());
        }
        std::vector<SpincOrbit> orbits = extendable_spinc(*m, orbit_mod);
        // With even m two parity classes are candidates; the orbit whose
        // d-values are all integral is the one carried by extensions.
        const SpincOrbit* chosen = nullptr;
        std::vector<std::pair<Integer, Rational>> best;
        for (const SpincOrbit& orbit : orbits) {
            std::vector<std::pair<Integer, Rational>> vals;
            bool integral = true;
            for (const Integer& lab : orbit.labels) {
                Rational d = eval(lab);
                if (!d.is_integer()) integral = false;
                vals.emplace_back(lab, d);
            }
            if (integral || orbits.size() == 1) {
                chosen = &orbit;
                best = std::move(vals);
                if (integral) break;
            }
        }
        if (!chosen) return fail_parse("no extendable orbit with integral correction terms");
        rows = std::move(best);
    } else {
        (void)all;
        for (Integer i = 0; i < order; ++i) rows.emplace_back(i, eval(i));
    }

    if (format == "json") {
        nlohmann::json doc = envelope("d", t->display);
        nlohmann::json out = nlohmann::json::array();
        for (const auto& [i, d] : rows) {
            out.push_back({i.get_str(), d.str()});
        }
        doc["rows"] = out;
        std::cout << doc.dump(2) << "\n";
    } else if (rows.size() == 1 && !label_text.empty()) {
        std::cout << rows[0].second.str() << "\n";
    } else {
        std::cout << "label,d\n";
        for (const auto& [i, d] : rows) {
            std::cout << i.get_str() << "," << d.str() << "\n";
        }
    }
    return kExitOk;
}

std::optional<GramLattice> resolve_lattice(const std::string& text, std::string& display,
                                           std::string& error) {
    if (text.rfind("chain:", 0) == 0) {
        std::vector<Integer> terms;
        std::stringstream ss(text.substr(6));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                terms.emplace_back(item);
            } catch (const std::invalid_argument&) {
                error = "bad chain coefficient '" + item + "'";
                return std::nullopt;
            }
            if (terms.back() < 2) {
                error = "chain coefficients must be >= 2";
                return std::nullopt;
            }
        }
        if (terms.empty()) {
            error = "empty chain";
            return std::nullopt;
        }
        display = text;
        return gram_from_plumbing(PlumbingGraph::chain(terms));
    }

    std::optional<SphericalName> name = SphericalName::parse(text);
    std::optional<SeifertInvariant> inv;
    if (name) {
        if (name->family == Family::C) {
            Integer q = name->sign < 0 ? mod_floor(-name->q, name->p) : name->q;
            display = name->str();
            return gram_from_plumbing(PlumbingGraph::chain(hj_cf(name->p, q)));
        }
        inv = spherical_from_name(*name);
        display = name->str();
    } else if ((inv = SeifertInvariant::parse(text))) {
        display = inv->str();
    }
    if (inv) {
        // The intersection lattice is negative definite only on the e > 0
        // side; embedding questions are insensitive to which side we take.
        if (euler_number(*inv).sign() < 0) *inv = normalize(reverse_orientation(*inv));
        return gram_from_plumbing(canonical_plumbing(*inv));
    }

    std::ifstream in(text);
    if (!in) {
        error = "cannot open '" + text + "' (expected chain:..., a manifold name, or a "
                "JSON Gram-matrix file)";
        return std::nullopt;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        display = text;
        return gram_from_json(buffer.str());
    } catch (const std::exception& e) {
        error = std::string("bad Gram-matrix file: ") + e.what();
        return std::nullopt;
    }
}

void print_embedding_text(const GramLattice& l, const DiagonalEmbedding& e) {
    for (std::size_t j = 0; j < e.cols.size(); ++j) {
        std::cout << "  v" << j + 1 << " -> (";
        for (std::size_t i = 0; i < e.cols[j].size(); ++i) {
            if (i) std::cout << ",";
            std::cout << e.cols[j][i];
        }
        std::cout << ")\n";
    }
    (void)l;
}

int cmd_embed(const std::string& target, long long rank, long long copies, bool enumerate,
              std::uint64_t budget, const std::string& format) {
    std::string display;
    std::string error;
    std::optional<GramLattice> base = resolve_lattice(target, display, error);
    if (!base) return fail_parse(error);
    if (copies < 1) return fail_parse("--copies must be >= 1");
    GramLattice lattice = copies == 1 ? *base : direct_sum(*base, static_cast<int>(copies));
    int n = rank > 0 ? static_cast<int>(rank) : lattice.rank();
    if (n < lattice.rank()) {
        return fail_parse("target rank " + std::to_string(n) + " is below the lattice rank " +
                          std::to_string(lattice.rank()));
    }

    if (enumerate) {
        EnumerationOutcome out = all_embeddings(lattice, n, budget);
        if (format == "json") {
            nlohmann::json doc = envelope("embed", display);
            doc["copies"] = copies;
            doc["rank"] = n;
            doc["complete"] = out.complete;
            doc["count"] = out.reps.size();
            nlohmann::json reps = nlohmann::json::array();
            for (const DiagonalEmbedding& e : out.reps) {
                reps.push_back(nlohmann::json::parse(embedding_to_json(lattice, e)));
            }
            doc["embeddings"] = reps;
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << "lattice: " << display << " (rank " << lattice.rank() << " into Z^"
                      << n << ")\n";
            std::cout << (out.complete ? "enumeration: complete" : "enumeration: budget exhausted")
                      << "\n";
            std::cout << "count: " << out.reps.size() << "\n";
            for (std::size_t k = 0; k < out.reps.size(); ++k) {
                std::cout << "embedding " << k + 1 << ":\n";
                print_embedding_text(lattice, out.reps[k]);
            }
        }
        return out.complete ? kExitOk : kExitInconclusive;
    }

    SearchOutcome out = find_embedding(lattice, n, budget);
    if (format == "json") {
        nlohmann::json doc = envelope("embed", display);
        doc["copies"] = copies;
        doc["rank"] = n;
        doc["nodes"] = out.nodes;
        switch (out.status) {
            case SearchOutcome::Status::found:
                doc["status"] = "found";
                doc["embedding"] = nlohmann::json::parse(embedding_to_json(lattice, *out.embedding));
                break;
            case SearchOutcome::Status::none: doc["status"] = "none"; break;
            case SearchOutcome::Status::inconclusive: doc["status"] = "inconclusive"; break;
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "lattice: " << display << " (rank " << lattice.rank() << " into Z^" << n
                  << ")\n";
        switch (out.status) {
            case SearchOutcome::Status::found:
                std::cout << "embedding: found\n";
                print_embedding_text(lattice, *out.embedding);
                break;
            case SearchOutcome::Status::none:
                std::cout << "embedding: none (exhaustive)\n";
                break;
            case SearchOutcome::Status::inconclusive:
                std::cout << "embedding: inconclusive (budget exhausted)\n";
                break;
        }
    }
    return out.status == SearchOutcome::Status::inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_table(long long b_max, const ClassifyCaps& caps, const std::string& format) {
    if (b_max < 2) return fail_parse("--b-max must be >= 2");
    std::vector<Classification> rows = order_table(static_cast<int>(b_max), caps);
    bool limited = false;
    for (const Classification& c : rows) {
        if (budget_limited(c)) limited = true;
    }

    if (format == "json") {
        nlohmann::json doc = envelope("table", "b <= " + std::to_string(b_max));
        nlohmann::json arr = nlohmann::json::array();
        for (const Classification& c : rows) {
            nlohmann::json row = nlohmann::json::parse(classification_to_json(c));
            row["provenance"] = provenance_string(c);
            arr.push_back(row);
        }
        doc["rows"] = arr;
        std::cout << doc.dump(2) << "\n";
    } else if (format == "text") {
        for (const Classification& c : rows) {
            std::cout << c.name.str() << "\t" << order_string(c.verdict) << "\t"
                      << provenance_string(c) << "\n";
        }
    } else {
        std::cout << "name,b,order,provenance\n";
        for (const Classification& c : rows) {
            SeifertInvariant inv = spherical_from_name(c.name);
            std::cout << c.name.str() << "," << inv.b.get_str() << ","
                      << order_string(c.verdict) << "," << provenance_string(c) << "\n";
        }
    }
    return limited ? kExitInconclusive : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for spherical space forms in the rational homology "
                 "cobordism group"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string classify_target;
    ClassifyCaps classify_caps;
    std::string classify_format = "text";
    CLI::App* classify = app.add_subcommand("classify", "decide the cobordism order of a "
                                            "spherical space form");
    classify->add_option("manifold", classify_target, "catalog name or Seifert invariants")
        ->required();
    classify->add_option("--n-max", classify_caps.n_max, "largest order tested by embedding "
                         "searches");
    classify->add_option("--budget", classify_caps.budget, "node budget per lattice search");
    classify->add_option("--format", classify_format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    std::string d_target;
    bool d_all = false;
    std::string d_label;
    bool d_extendable = false;
    std::string d_format = "text";
    CLI::App* dcmd = app.add_subcommand("d", "correction terms of a lens space or torus-knot "
                                        "surgery");
    dcmd->add_option("manifold", d_target, "surgery description, catalog name, or Seifert "
                     "invariants")->required();
    CLI::Option* opt_all = dcmd->add_flag("--all", d_all, "every spin-c label (default)");
    CLI::Option* opt_label = dcmd->add_option("--label", d_label, "a single spin-c label");
    CLI::Option* opt_ext = dcmd->add_flag("--extendable", d_extendable, "only labels that "
                                          "extend over a rational-ball filling");
    opt_all->excludes(opt_label)->excludes(opt_ext);
    opt_label->excludes(opt_ext);
    dcmd->add_option("--format", d_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string embed_target;
    long long embed_rank = 0;
    long long embed_copies = 1;
    bool embed_enumerate = false;
    std::uint64_t embed_budget = kDefaultBudget;
    std::string embed_format = "text";
    CLI::App* embed = app.add_subcommand("embed", "search for embeddings of an intersection "
                                         "lattice into a diagonal lattice");
    embed->add_option("lattice", embed_target, "chain:a1,a2,..., a manifold name, or a JSON "
                      "Gram-matrix file")->required();
    embed->add_option("--rank", embed_rank, "rank of the diagonal target (default: lattice "
                      "rank)");
    embed->add_option("--copies", embed_copies, "number of direct-sum copies of the lattice");
    embed->add_flag("--enumerate", embed_enumerate, "list all embeddings up to symmetry");
    embed->add_option("--budget", embed_budget, "node budget for the search");
    embed->add_option("--format", embed_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    long long table_b_max = 12;
    ClassifyCaps table_caps;
    std::string table_format = "csv";
    CLI::App* table = app.add_subcommand("table", "classify every catalog family across a "
                                         "range of central weights");
    table->add_option("--b-max", table_b_max, "largest central weight");
    table->add_option("--n-max", table_caps.n_max, "largest order tested by embedding "
                      "searches");
    table->add_option("--budget", table_caps.budget, "node budget per lattice search");
    table->add_option("--format", table_format, "csv, text, or json")
        ->check(CLI::IsMember({"csv", "text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (*classify) return cmd_classify(classify_target, classify_caps, classify_format);
        if (*dcmd) return cmd_d(d_target, d_all, d_label, d_extendable, d_format);
        if (*embed) {
            return cmd_embed(embed_target, embed_rank, embed_copies, embed_enumerate,
                             embed_budget, embed_format);
        }
        if (*table) return cmd_table(table_b_max, table_caps, table_format);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitParse;
}
