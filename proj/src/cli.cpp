#include "abcov/cli.hpp"

#include "abcov/certify.hpp"
#include "abcov/cover.hpp"
#include "abcov/enumerate.hpp"
#include "abcov/error.hpp"
#include "abcov/higgs.hpp"
#include "abcov/io.hpp"
#include "abcov/prym.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>

namespace abcov::cli {

namespace {

enum class Format { json, md, csv };

struct Options {
    std::string input;
    std::string format = "json";
    std::string character;
    std::string verify;
    std::int64_t p = 0;
    std::int64_t m = 0;
    std::int64_t max_s = 0;
    std::vector<std::int64_t> counts;
    std::optional<std::string> seed;
};

Format parse_format(const std::string& f, std::initializer_list<Format> allowed) {
    Format out;
    if (f == "json")
        out = Format::json;
    else if (f == "md")
        out = Format::md;
    else if (f == "csv")
        out = Format::csv;
    else
        throw InvalidInput("unknown --format '" + f + "' (expected json, md or csv)");
    for (auto a : allowed)
        if (a == out) return out;
    throw InvalidInput("--format " + f + " is not supported by this subcommand");
}

struct Family {
    CoveringMatrix matrix;
    std::optional<Character> sigma;
};

Family load_family(const Options& o) {
    if (o.input.empty()) throw InvalidInput("--input is required");
    const Json j = read_json_file(o.input);
    auto m = matrix_from_json(j);
    auto sigma = sigma_from_json(j, m.moduli());
    return {std::move(m), std::move(sigma)};
}

// Full-span, valid matrix; the CLI does not expose proper-subgroup families
// for table-shaped queries.
void require_full(const CoveringMatrix& m) {
    require_valid(m);
    if (!is_full_span(m))
        throw PreconditionError("columns do not generate the full product group (required here)");
}

PrymDatum make_datum(const Family& f) {
    Character sigma = f.sigma ? *f.sigma : default_sigma(f.matrix.moduli());
    return PrymDatum(f.matrix, std::move(sigma));
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// ------------------------------------------------------------------ analyze

int cmd_analyze(const Options& o, std::ostream& out) {
    const Format fmt = parse_format(o.format, {Format::json, Format::md, Format::csv});
    const Family f = load_family(o);
    const auto& m = f.matrix;
    const auto report = validate(m);

    Json j = to_json(m);
    j["validation"] = to_json(report);
    std::optional<PrymProfile> profile;
    std::optional<DoubleCoverClass> dc;
    std::string prym_note;
    if (report.valid) {
        j["group_order"] = group_order(m);
        std::vector<std::int64_t> orders;
        for (std::size_t c = 0; c < m.branch_count(); ++c) orders.push_back(ramification_order(m, c));
        j["ramification_orders"] = orders;
        j["genus"] = genus_cover(m);
        try {
            const PrymDatum d = make_datum(f);
            j["sigma"] = to_json(d.sigma());
            dc = check_prym_datum(d);
            profile = prym_profile(d);
            j["prym"] = to_json(*profile, *dc);
        } catch (const Error& e) {
            prym_note = e.what();
            j["prym"] = nullptr;
            j["prym_unavailable"] = prym_note;
        }
    }

    if (fmt == Format::json) {
        out << j.dump(2) << '\n';
    } else if (fmt == Format::md) {
        out << "# Cover analysis\n\n";
        out << "| field | value |\n|---|---|\n";
        out << "| moduli | " << m.moduli() << " |\n";
        out << "| branch points | " << m.branch_count() << " |\n";
        out << "| valid | " << bool_str(report.valid) << " |\n";
        out << "| totally ramified | " << bool_str(report.totally_ramified) << " |\n";
        out << "| full product group | " << bool_str(report.group_is_full_product) << " |\n";
        if (report.valid) {
            out << "| group order | " << j["group_order"] << " |\n";
            out << "| genus | " << j["genus"] << " |\n";
        }
        if (profile) {
            out << "| quotient genus | " << profile->quotient_genus << " |\n";
            out << "| Prym dimension | " << profile->prym_dimension << " |\n";
            out << "| fixed points of sigma | " << dc->fixed_point_count << " |\n";
            out << "| double cover | " << to_string(dc->kind) << " |\n";
        }
        if (!report.messages.empty()) {
            out << "\n## Messages\n\n";
            for (const auto& msg : report.messages) out << "- " << msg << '\n';
        }
        if (!prym_note.empty()) out << "\nPrym profile unavailable: " << prym_note << '\n';
    } else {
        out << "field,value\n";
        out << "valid," << bool_str(report.valid) << '\n';
        out << "totally_ramified," << bool_str(report.totally_ramified) << '\n';
        out << "group_is_full_product," << bool_str(report.group_is_full_product) << '\n';
        if (report.valid) {
            out << "group_order," << j["group_order"] << '\n';
            out << "genus," << j["genus"] << '\n';
        }
        if (profile) {
            out << "quotient_genus," << profile->quotient_genus << '\n';
            out << "prym_dim," << profile->prym_dimension << '\n';
            out << "fixed_points," << dc->fixed_point_count << '\n';
            out << "double_cover_kind," << to_string(dc->kind) << '\n';
        }
    }
    return report.valid ? kOk : kInputError;
}

// --------------------------------------------------------------------- dims

int cmd_dims(const Options& o, std::ostream& out) {
    const Format fmt = parse_format(o.format, {Format::json, Format::md, Format::csv});
    const Family f = load_family(o);
    require_full(f.matrix);
    const auto table = eigenspace_table(f.matrix);
    std::int64_t total = 0;
    for (const auto& [chi, d] : table) total += d;

    if (fmt == Format::json) {
        Json j = to_json(f.matrix);
        j["genus"] = genus_cover(f.matrix);
        j["dims"] = to_json(table);
        j["total"] = total;
        out << j.dump(2) << '\n';
    } else if (fmt == Format::md) {
        out << "| character | dim |\n|---|---|\n";
        for (const auto& [chi, d] : table) out << "| " << chi.str() << " | " << d << " |\n";
        out << "\ntotal " << total << ", genus " << genus_cover(f.matrix) << '\n';
    } else {
        out << "character,dim\n";
        for (const auto& [chi, d] : table) out << '"' << chi.str() << "\"," << d << '\n';
    }
    return kOk;
}

// -------------------------------------------------------------------- basis

int cmd_basis(const Options& o, std::ostream& out) {
    const Format fmt = parse_format(o.format, {Format::json, Format::md, Format::csv});
    const Family f = load_family(o);
    require_full(f.matrix);
    if (o.character.empty()) throw InvalidInput("--char is required");
    const Character chi = Character::parse(o.character, f.matrix.moduli());
    const auto basis = eigenform_basis(f.matrix, chi);

    auto exps_str = [](const EigenformDescriptor& e, char sep) {
        std::string s;
        for (std::size_t i = 0; i < e.floor_exponents.size(); ++i) {
            if (i) s += sep;
            s += std::to_string(e.floor_exponents[i]);
        }
        return s;
    };
    if (fmt == Format::json) {
        Json j;
        j["character"] = to_json(chi);
        j["dim"] = basis.size();
        Json forms = Json::array();
        for (const auto& e : basis) forms.push_back(to_json(e));
        j["forms"] = std::move(forms);
        out << j.dump(2) << '\n';
    } else if (fmt == Format::md) {
        out << "| nu | floor exponents |\n|---|---|\n";
        for (const auto& e : basis) out << "| " << e.nu << " | " << exps_str(e, ',') << " |\n";
    } else {
        out << "nu,floor_exponents\n";
        for (const auto& e : basis) out << e.nu << ',' << exps_str(e, ';') << '\n';
    }
    return kOk;
}

// ------------------------------------------------------------------ certify

int cmd_certify(const Options& o, std::ostream& out) {
    parse_format(o.format, {Format::json});
    if (!o.verify.empty()) {
        const auto check = verify_certificate(read_json_file(o.verify));
        Json j;
        j["ok"] = check.ok;
        j["problems"] = check.problems;
        out << j.dump(2) << '\n';
        return check.ok ? kOk : kInputError;
    }

    std::optional<Family> fam;
    if (!o.input.empty()) {
        if (!o.counts.empty() || o.p != 0)
            throw InvalidInput("give either --input or --p/--m/--counts, not both");
        fam = load_family(o);
    } else {
        if (o.p == 0 || o.counts.empty())
            throw InvalidInput("certify needs --input, or --p and --counts");
        if (o.m != 0 && o.m != static_cast<std::int64_t>(o.counts.size()))
            throw InvalidInput("--m " + std::to_string(o.m) + " does not match " +
                               std::to_string(o.counts.size()) + " counts");
        fam = Family{totally_ramified_matrix(o.p, o.counts), std::nullopt};
    }
    require_valid(fam->matrix);
    const auto cert = certify_family(make_datum(*fam));
    out << to_json(cert).dump(2) << '\n';
    return cert.verdict == Verdict::obstructed ? kOk : kNotObstructed;
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const Options& o, std::ostream& out) {
    // table-shaped output, so csv is the default here
    const Format fmt = parse_format(o.format.empty() ? "csv" : o.format,
                                    {Format::json, Format::md, Format::csv});
    if (o.p == 0 || o.m == 0 || o.max_s == 0) throw InvalidInput("enumerate needs --p, --m and --max-s");
    const auto rows = scan(o.p, o.m, o.max_s);
    if (fmt == Format::csv)
        write_csv(out, rows);
    else if (fmt == Format::md)
        write_markdown(out, rows);
    else
        out << to_json(rows).dump(2) << '\n';
    return kOk;
}

// ------------------------------------------------------------------- orbits

int cmd_orbits(const Options& o, std::ostream& out) {
    const Format fmt = parse_format(o.format, {Format::json, Format::md, Format::csv});
    const Family f = load_family(o);
    require_full(f.matrix);
    const PrymDatum d = make_datum(f);
    const auto orbits = galois_orbits(d);
    const auto ranks = rank_profile(d);

    auto member_list = [](const std::vector<Character>& orbit, const char* sep) {
        std::string s;
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            if (i) s += sep;
            s += "(" + orbit[i].str() + ")";
        }
        return s;
    };
    if (fmt == Format::json) {
        Json j = to_json(orbits);
        Json sums = Json::array();
        for (const auto& orbit : orbits.orbits) {
            Json per = Json::array();
            for (const auto& chi : orbit) per.push_back(ranks.ranks.at(chi).e10 + ranks.ranks.at(chi).e01);
            sums.push_back(std::move(per));
        }
        j["e10_plus_e01"] = std::move(sums);
        out << j.dump(2) << '\n';
    } else if (fmt == Format::md) {
        out << "| orbit | size | members |\n|---|---|---|\n";
        for (std::size_t i = 0; i < orbits.orbits.size(); ++i)
            out << "| " << i + 1 << " | " << orbits.orbits[i].size() << " | "
                << member_list(orbits.orbits[i], " ") << " |\n";
        out << "\nacting group order " << orbits.acting_group_order << '\n';
    } else {
        out << "orbit,size,members\n";
        for (std::size_t i = 0; i < orbits.orbits.size(); ++i)
            out << i + 1 << ',' << orbits.orbits[i].size() << ",\"" << member_list(orbits.orbits[i], " ")
                << "\"\n";
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants and obstruction certificates for abelian covers of the projective line",
                 "abcov"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool with_input) {
        if (with_input) sub->add_option("--input", o.input, "family JSON file");
        sub->add_option("--format", o.format, "json, md or csv");
        sub->add_option("--seed", o.seed, "reserved; always rejected");
    };

    auto* analyze = app.add_subcommand("analyze", "validation report, genus and Prym profile");
    add_common(analyze, true);
    auto* dims = app.add_subcommand("dims", "full eigenspace dimension table");
    add_common(dims, true);
    auto* basis = app.add_subcommand("basis", "eigenform basis descriptors of one character");
    add_common(basis, true);
    basis->add_option("--char", o.character, "character components in row order, e.g. 1,0");
    auto* certify = app.add_subcommand("certify", "obstruction certificate");
    add_common(certify, true);
    certify->add_option("--p", o.p, "prime p of a (2p, p, ..., p) family");
    certify->add_option("--m", o.m, "number of rows");
    certify->add_option("--counts", o.counts, "column counts per row")->delimiter(',');
    certify->add_option("--verify", o.verify, "re-check an existing certificate file");
    auto* enumerate = app.add_subcommand("enumerate", "scan all totally ramified signatures");
    add_common(enumerate, false);
    enumerate->add_option("--p", o.p, "prime p")->required();
    enumerate->add_option("--m", o.m, "number of rows")->required();
    enumerate->add_option("--max-s", o.max_s, "largest total number of branch points")->required();
    auto* orbits = app.add_subcommand("orbits", "Galois orbits of odd characters");
    add_common(orbits, true);

    std::vector<std::string> argv_store{"abcov"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (o.seed)
            throw InvalidInput("--seed is reserved and not accepted: every computation is deterministic");
        if (enumerate->parsed() && enumerate->count("--format") == 0) o.format.clear();
        if (analyze->parsed()) return cmd_analyze(o, out);
        if (dims->parsed()) return cmd_dims(o, out);
        if (basis->parsed()) return cmd_basis(o, out);
        if (certify->parsed()) return cmd_certify(o, out);
        if (enumerate->parsed()) return cmd_enumerate(o, out);
        if (orbits->parsed()) return cmd_orbits(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace abcov::cli
