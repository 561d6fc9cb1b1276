#pragma once

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gnshom/assembly.hpp"
#include "gnshom/gamma.hpp"
#include "gnshom/modular_forms.hpp"
#include "gnshom/partition.hpp"
#include "gnshom/rep_ring.hpp"
#include "gnshom/selfcheck.hpp"

namespace gnshom::cli {

namespace detail {

inline std::string kind_name(FormKind k) { return k == FormKind::cusp ? "cusp" : "full"; }

inline void print_module_line(std::ostream& out, const ModuleSum& m) {
    out << format_module_sum(m) << "  dim=" << m.dimension().to_decimal() << '\n';
}

inline void print_verdict(std::ostream& out, const Verdict& v) {
    out << "verdict: " << (v.forced_zero() ? "ForcedZero" : "Inconclusive") << '\n';
    if (!v.criterion.empty())
        out << "criterion: " << v.criterion << " (at " << signature_string(v.signature) << ")\n";
    for (const auto& line : v.trace) out << "  " << line << '\n';
    if (!v.witnesses.empty()) {
        out << "witnesses:\n";
        for (const auto& w : v.witnesses)
            out << "  " << format_partition(w.part) << "  domain=" << w.in_domain.to_decimal()
                << " target=" << w.in_target.to_decimal() << '\n';
    }
    if (v.budget_exhausted) out << "note: sub-gluing enumeration budget exhausted\n";
}

struct TableSpec {
    int n;
    int max_s;
    int max_i;
    bool dims;  // dimension table instead of module table
};

inline TableSpec table_spec(int which) {
    switch (which) {
        case 1: return {1, 8, 7, false};
        case 2: return {1, 8, 7, true};
        case 3: return {2, 10, 10, false};
        case 4: return {2, 10, 10, true};
        default: throw std::invalid_argument("tables: --which must be 1, 2, 3 or 4");
    }
}

inline int visible_max_i(const TableSpec& t, int s) {
    return std::min(t.max_i, std::max(0, 2 * t.n + s - 3));
}

inline void print_table_tsv(std::ostream& out, const TableSpec& t) {
    out << "s\ti\tmodule\tdim\n";
    for (int s = 0; s <= t.max_s; ++s)
        for (int i = 0; i <= visible_max_i(t, s); ++i) {
            ModuleSum m = gamma_cohomology(t.n, s, i);
            out << s << '\t' << i << '\t' << format_module_sum(m) << '\t'
                << m.dimension().to_decimal() << '\n';
        }
}

inline void print_table_text(std::ostream& out, const TableSpec& t, int which) {
    out << "Table " << which << ": " << (t.dims ? "dim " : "") << "H^i(Gamma_{" << t.n
        << ",s}) for s <= " << t.max_s << ", i <= " << t.max_i
        << (t.dims ? "" : ", as S_s-modules") << '\n';
    if (t.dims) {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> head{""};
        for (int i = 0; i <= t.max_i; ++i) head.push_back("H^" + std::to_string(i));
        rows.push_back(head);
        for (int s = 0; s <= t.max_s; ++s) {
            std::vector<std::string> row{"Gamma_{" + std::to_string(t.n) + "," +
                                         std::to_string(s) + "}"};
            for (int i = 0; i <= t.max_i; ++i)
                row.push_back(i <= visible_max_i(t, s)
                                  ? gamma_cohomology(t.n, s, i).dimension().to_decimal()
                                  : "");
            rows.push_back(row);
        }
        std::vector<std::size_t> width(rows[0].size(), 0);
        for (const auto& row : rows)
            for (std::size_t c = 0; c < row.size(); ++c)
                width[c] = std::max(width[c], row[c].size());
        for (const auto& row : rows) {
            std::string line;
            for (std::size_t c = 0; c < row.size(); ++c) {
                std::string cell = row[c];
                cell.insert(0, width[c] - cell.size(), ' ');  // right-align
                line += cell;
                if (c + 1 < row.size()) line += "  ";
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out << line << '\n';
        }
    } else {
        for (int s = 0; s <= t.max_s; ++s)
            for (int i = 0; i <= visible_max_i(t, s); ++i) {
                ModuleSum m = gamma_cohomology(t.n, s, i);
                std::ostringstream name;
                name << "Gamma_{" << t.n << "," << s << "}";
                out << std::left << std::setw(13) << name.str() << std::setw(5)
                    << ("H^" + std::to_string(i)) << format_module_sum(m) << '\n';
            }
    }
}

}  // namespace detail

// Command-line front end.  Returns 0 on success, 1 on domain errors, 2 on
// usage errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"symmetric-group module structure of the homology of the groups Gamma_{n,s} "
                 "(n <= 2) and vanishing analysis for assembly maps"};
    app.name("gnshom");
    app.require_subcommand(1);
    int rc = 0;

    // gamma
    int g_n = 0, g_s = 0, g_i = 0;
    auto* gamma_cmd =
        app.add_subcommand("gamma", "H^i(Gamma_{n,s}) as an S_s-module (H^i = H_i here)");
    gamma_cmd->add_option("--n", g_n, "rank (0, 1 or 2)")->required();
    gamma_cmd->add_option("--s", g_s, "number of leaves")->required();
    gamma_cmd->add_option("--i", g_i, "cohomological degree")->required();
    gamma_cmd->callback([&] { detail::print_module_line(out, gamma_cohomology(g_n, g_s, g_i)); });

    // tables
    int t_which = 0;
    std::string t_format = "text";
    auto* tables_cmd = app.add_subcommand("tables", "print a full homology table");
    tables_cmd->add_option("--which", t_which, "table number (1-4)")->required();
    tables_cmd->add_option("--format", t_format, "text or tsv")
        ->check(CLI::IsMember({"text", "tsv"}));
    tables_cmd->callback([&] {
        detail::TableSpec t = detail::table_spec(t_which);
        if (t_format == "tsv")
            detail::print_table_tsv(out, t);
        else
            detail::print_table_text(out, t, t_which);
    });

    // pieri
    std::string p_lambda;
    int p_k = 0;
    auto* pieri_cmd = app.add_subcommand("pieri", "decompose P_lambda o P_(k)");
    pieri_cmd->add_option("--lambda", p_lambda, "partition, e.g. (2,2)")->required();
    pieri_cmd->add_option("--k", p_k, "size of the trivial factor")->required();
    pieri_cmd->callback([&] {
        ModuleSum m = induction_product(irreducible(parse_partition(p_lambda)),
                                        irreducible(rectangle(p_k, p_k > 0 ? 1 : 0)));
        detail::print_module_line(out, m);
    });

    // lr
    std::string l_lambda, l_mu, l_nu;
    auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^nu_{lambda,mu}");
    lr_cmd->add_option("--lambda", l_lambda)->required();
    lr_cmd->add_option("--mu", l_mu)->required();
    lr_cmd->add_option("--nu", l_nu)->required();
    lr_cmd->callback([&] {
        out << lr_coefficient(parse_partition(l_lambda), parse_partition(l_mu),
                              parse_partition(l_nu))
                   .to_decimal()
            << '\n';
    });

    // dim
    std::string d_lambda;
    auto* dim_cmd = app.add_subcommand("dim", "dimension of the irreducible P_lambda");
    dim_cmd->add_option("--lambda", d_lambda)->required();
    dim_cmd->callback([&] { out << dim_irreducible(parse_partition(d_lambda)).to_decimal() << '\n'; });

    // modular
    int mo_k = 0;
    auto* mod_cmd = app.add_subcommand("modular", "dimensions of weight-k modular and cusp forms");
    mod_cmd->add_option("--k", mo_k, "weight")->required();
    mod_cmd->callback([&] {
        FormDims f = modular_dims(mo_k);
        out << "M=" << f.dim_full << " S=" << f.dim_cusp << '\n';
    });

    // wmod
    int w_q = 0;
    auto* wmod_cmd = app.add_subcommand("wmod", "layered module W_q = H^1(GL_2(Z); H^{wedge q})");
    wmod_cmd->add_option("--q", w_q, "even tensor degree")->required();
    wmod_cmd->callback([&] {
        ModularLayeredSum w = w_module(w_q);
        for (const auto& layer : w.layers)
            out << "layer i=" << layer.index << " kind=" << detail::kind_name(layer.kind)
                << " weight=" << layer.weight << " formdim=" << layer.form_dim
                << " partition=" << format_partition(layer.part) << '\n';
        out << "flattened: ";
        detail::print_module_line(out, w.flattened);
        out << "parabolic image: " << format_module_sum(parabolic_image(w)) << '\n';
    });

    // detect-2mn
    int dm_n = 0, dm_m = 0, dm_s = 0;
    auto* dm_cmd = app.add_subcommand(
        "detect-2mn", "multiplicity of the surviving summand in H^{2mn}(Gamma_{n,s})");
    dm_cmd->add_option("--n", dm_n)->required();
    dm_cmd->add_option("--m", dm_m)->required();
    dm_cmd->add_option("--s", dm_s)->required();
    dm_cmd->callback([&] {
        const int head = dm_s - 2 * dm_m * dm_n;
        BigNat mult = theorem_2mn_summand(dm_n, dm_m, dm_s);
        std::vector<int> parts;
        if (head > 0) parts.push_back(head);
        for (int i = 0; i < 2 * dm_m && head >= dm_n; ++i) parts.push_back(dm_n);
        out << "summand=" << (head >= dm_n ? format_partition(Partition(parts)) : "(none)")
            << " multiplicity=" << mult.to_decimal() << '\n';
    });

    // cusp-pairs
    int cp_m = 0;
    auto* cp_cmd = app.add_subcommand("cusp-pairs",
                                      "domain of the form-pair map into H_{4m+2}(Out(F_{2m+3}))");
    cp_cmd->add_option("--m", cp_m)->required();
    cp_cmd->callback([&] {
        CuspPairDomain d = cusp_pair_domain(cp_m);
        for (const auto& layer : d.layers)
            out << "layer i=" << layer.index << " weight=" << layer.weight
                << " kind=" << detail::kind_name(layer.kind) << " formdim=" << layer.form_dim
                << " wedge2=" << layer.wedge2_dim.to_decimal() << '\n';
        out << "total=" << d.total.to_decimal() << "  target=H_" << d.target_degree << "(Out(F_"
            << d.target_rank << "))\n";
    });

    // hairy
    int h_n = 0, h_s = 0, h_k = 0, h_N = 0;
    auto* hairy_cmd =
        app.add_subcommand("hairy", "hairy Lie graph homology H_k for rank n, s hairs, dim V = N");
    hairy_cmd->add_option("--n", h_n)->required();
    hairy_cmd->add_option("--s", h_s)->required();
    hairy_cmd->add_option("--k", h_k)->required();
    hairy_cmd->add_option("--N", h_N)->required();
    hairy_cmd->callback([&] {
        HairyDim h = hairy_dim(h_n, h_s, h_k, h_N);
        if (h.terms.empty()) {
            out << "0  dim=0\n";
            return;
        }
        std::string line;
        for (const auto& term : h.terms) {
            if (!line.empty()) line += " + ";
            if (term.mult != BigNat(1)) line += term.mult.to_decimal() + "*";
            line += "S" + format_partition(term.gl_weight);
        }
        out << line << "  dim=" << h.total.to_decimal() << '\n';
    });

    // schur-dim
    std::string sd_lambda;
    int sd_N = 0;
    auto* sd_cmd = app.add_subcommand("schur-dim", "dimension of the Schur functor S_lambda(C^N)");
    sd_cmd->add_option("--lambda", sd_lambda)->required();
    sd_cmd->add_option("--N", sd_N)->required();
    sd_cmd->callback([&] { out << schur_dim(parse_partition(sd_lambda), sd_N).to_decimal() << '\n'; });

    // sp-detect
    int sp_n = 0, sp_m = 0, sp_d = 0;
    auto* sp_cmd = app.add_subcommand(
        "sp-detect", "degree and weight detected in symplectic-derivation homology");
    sp_cmd->add_option("--n", sp_n)->required();
    sp_cmd->add_option("--m", sp_m)->required();
    sp_cmd->add_option("--d", sp_d)->required();
    sp_cmd->callback([&] {
        SymplecticDetection det = symplectic_detection(sp_n, sp_m, sp_d);
        out << "degree=" << det.degree << " weight=" << format_partition(det.weight) << '\n';
    });

    // assembly check | morita
    std::string a_file;
    std::size_t a_budget = VerdictOptions{}.subgluing_budget;
    auto* asm_cmd = app.add_subcommand("assembly", "analyze a gluing-pattern file");
    asm_cmd->require_subcommand(1);
    auto* check_cmd = asm_cmd->add_subcommand("check", "vanishing verdict for a pattern");
    check_cmd->add_option("file", a_file, "pattern file")->required();
    check_cmd->add_option("--budget", a_budget, "sub-gluing enumeration budget");
    auto* morita_cmd = asm_cmd->add_subcommand("morita", "generalized Morita verdict for a pattern");
    morita_cmd->add_option("file", a_file, "pattern file")->required();
    auto load = [&]() -> GluingPattern {
        std::ifstream in(a_file);
        if (!in) throw std::invalid_argument("cannot open pattern file '" + a_file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_pattern_text(buf.str());
    };
    check_cmd->callback([&] {
        GluingPattern p = load();
        out << "signature: " << signature_string(validate_pattern(p)) << '\n';
        detail::print_verdict(out, assembly_verdict(p, VerdictOptions{a_budget}));
    });
    morita_cmd->callback([&] {
        GluingPattern p = load();
        out << "signature: " << signature_string(validate_pattern(p)) << '\n';
        detail::print_verdict(out, morita_verdict(p));
    });

    // selfcheck
    auto* self_cmd = app.add_subcommand("selfcheck", "run the built-in oracle and invariant suites");
    self_cmd->callback([&] { rc = run_selfcheck(out) == 0 ? 0 : 1; });

    std::vector<const char*> argv;
    argv.push_back("gnshom");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}

}  // namespace gnshom::cli
