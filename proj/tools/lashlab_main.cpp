#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lashlab/braidkit.hpp"
#include "lashlab/contfrac.hpp"
#include "lashlab/family.hpp"
#include "lashlab/surgdesc.hpp"
#include "lashlab/traintrack.hpp"
#include "lashlab/twistcalc.hpp"

namespace {

using namespace lashlab;

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError("'" + s + "' is not an integer");
    }
}

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty())
            out.push_back(parse_int(tok));
    if (out.empty())
        throw CLI::ValidationError("'" + s + "' is not a comma-separated integer list");
    return out;
}

std::pair<Int, Int> parse_int_pair(const std::string& s) {
    std::vector<Int> v = parse_int_list(s);
    if (v.size() != 2)
        throw CLI::ValidationError("'" + s + "' must be two comma-separated integers");
    return {v[0], v[1]};
}

std::string cf_str(const ContinuedFraction& cf) {
    std::string out;
    for (const Int& c : cf.coeffs) {
        if (!out.empty())
            out += " ";
        out += c.str();
    }
    return out;
}

std::string join_ints(const std::vector<Int>& v) {
    std::string out;
    for (const Int& c : v) {
        if (!out.empty())
            out += " ";
        out += c.str();
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lashlab: exact invariants of lashing families and their alternating surgeries"};
    app.require_subcommand(1);

    // slope
    std::string slope_p, slope_q;
    CLI::App* cmd_slope = app.add_subcommand(
        "slope", "Montesinos surgery triple and continued fraction forms for p/q");
    cmd_slope->add_option("--p", slope_p, "numerator p >= 0")->required();
    cmd_slope->add_option("--q", slope_q, "denominator q >= 1")->required();

    // profile / threshold
    std::string prof_K, prof_L, prof_n, thr_bound;
    CLI::App* cmd_profile =
        app.add_subcommand("profile", "intersection numbers of the twisted lashing");
    cmd_profile->add_option("--K", prof_K, "class p,q")->required();
    cmd_profile->add_option("--L", prof_L, "twisting class r,s")->required();
    cmd_profile->add_option("--n", prof_n, "twist count")->required();
    CLI::App* cmd_threshold =
        app.add_subcommand("threshold", "least stable twist index for the profile");
    cmd_threshold->add_option("--K", prof_K, "class p,q")->required();
    cmd_threshold->add_option("--L", prof_L, "twisting class r,s")->required();
    cmd_threshold->add_option("--bound", thr_bound, "search bound >= 1")->required();

    // weights
    std::string w_a, w_m, w_p, w_q;
    CLI::App* cmd_weights =
        app.add_subcommand("weights", "train-track weights, surgery slope and genus formula");
    cmd_weights->add_option("--a", w_a, "twist coefficients a1,a2,...")->required();
    cmd_weights->add_option("--m", w_m, "extra twisting m")->required();
    cmd_weights->add_option("--p", w_p, "slope numerator")->required();
    cmd_weights->add_option("--q", w_q, "slope denominator")->required();

    // surgery
    std::string s_a1, s_a2, s_a3, s_m, s_b1, s_b2 = "0", s_r = "0", s_export;
    bool s_s1xs2 = false;
    CLI::App* cmd_surgery =
        app.add_subcommand("surgery", "16-component surgery diagram and its homology");
    cmd_surgery->add_option("--a1", s_a1)->required();
    cmd_surgery->add_option("--a2", s_a2)->required();
    cmd_surgery->add_option("--a3", s_a3)->required();
    cmd_surgery->add_option("--m", s_m)->required();
    cmd_surgery->add_option("--b1", s_b1)->required();
    cmd_surgery->add_option("--b2", s_b2);
    cmd_surgery->add_option("--r", s_r, "surgery coefficient on the lashing (integer or p/q)");
    cmd_surgery->add_flag("--s1xs2", s_s1xs2, "use the S1xS2 variant");
    cmd_surgery->add_option("--export", s_export, "write the diagram to this path");

    // decompose
    std::string d_xi, d_aprime = "1,1,1";
    int d_strands = 3;
    CLI::App* cmd_decompose =
        app.add_subcommand("decompose", "plat decomposition xi = sigma_1^{-1} alpha omega");
    cmd_decompose->add_option("--xi", d_xi, "alternating 3-braid letters, e.g. \"-1 2 -1\"")
        ->required();
    cmd_decompose->add_option("--aprime", d_aprime, "alpha-form coefficients of alpha'");
    cmd_decompose->add_option("--strands", d_strands, "strand count (the decomposition needs 3)");

    // row / table / check / export
    std::string f_a3, f_a2, f_a1, f_m, f_b1, f_b2 = "0", f_grid, f_out;
    bool f_s1xs2 = false;
    std::string f_format = "tsv";
    CLI::App* cmd_row = app.add_subcommand("row", "one cross-validated family row");
    cmd_row->add_option("--a3", f_a3)->required();
    cmd_row->add_option("--a2", f_a2)->required();
    cmd_row->add_option("--a1", f_a1)->required();
    cmd_row->add_option("--m", f_m)->required();
    cmd_row->add_option("--b1", f_b1)->required();
    cmd_row->add_option("--b2", f_b2);
    cmd_row->add_flag("--s1xs2", f_s1xs2);
    cmd_row->add_option("--format", f_format)->check(CLI::IsMember({"tsv", "kv"}));

    CLI::App* cmd_table = app.add_subcommand("table", "sweep a parameter grid");
    cmd_table->add_option("--grid", f_grid, "e.g. \"a3=0..1,a2=1,a1=1,m=1,b1=1..3\"")
        ->required();
    cmd_table->add_flag("--s1xs2", f_s1xs2);
    cmd_table->add_option("--format", f_format)->check(CLI::IsMember({"tsv", "kv"}));

    bool check_verbose = false;
    CLI::App* cmd_check = app.add_subcommand("check", "run the built-in fixture suite");
    cmd_check->add_flag("--verbose", check_verbose);

    CLI::App* cmd_export = app.add_subcommand("export", "write a family diagram file");
    cmd_export->add_option("--a3", f_a3)->required();
    cmd_export->add_option("--a2", f_a2)->required();
    cmd_export->add_option("--a1", f_a1)->required();
    cmd_export->add_option("--m", f_m)->required();
    cmd_export->add_option("--b1", f_b1)->required();
    cmd_export->add_option("--b2", f_b2);
    cmd_export->add_flag("--s1xs2", f_s1xs2);
    cmd_export->add_option("--out", f_out, "output path")->required();

    try {
        app.parse(argc, argv);

        if (cmd_slope->parsed()) {
            Slope s(parse_int(slope_p), parse_int(slope_q));
            MontesinosTriple t = montesinos_triple(s);
            auto [cf_lambda, cf_mu] = montesinos_triple_cf(s);
            std::cout << "p/q: " << s << "\n"
                      << "nu: " << t.nu << "\n"
                      << "mu: " << t.mu << "\n"
                      << "lambda: " << t.lambda << "\n"
                      << "cf_lambda: " << cf_str(cf_lambda) << "\n"
                      << "cf_mu: " << cf_str(cf_mu) << "\n";
        } else if (cmd_profile->parsed()) {
            auto [kp, kq] = parse_int_pair(prof_K);
            auto [lr, ls] = parse_int_pair(prof_L);
            IntersectionProfile pr =
                intersection_profile(CurveClass(kp, kq), CurveClass(lr, ls), parse_int(prof_n));
            std::cout << "delta_mu: " << pr.delta_mu << "\n"
                      << "delta_lambda: " << pr.delta_lambda << "\n"
                      << "delta_nu: " << pr.delta_nu << "\n";
        } else if (cmd_threshold->parsed()) {
            auto [kp, kq] = parse_int_pair(prof_K);
            auto [lr, ls] = parse_int_pair(prof_L);
            Int n0 = stability_threshold(CurveClass(kp, kq), CurveClass(lr, ls),
                                         parse_int(thr_bound));
            std::cout << "threshold: " << n0 << "\n";
        } else if (cmd_weights->parsed()) {
            LashingParams params(parse_int_list(w_a), parse_int(w_m), parse_int(w_p),
                                 parse_int(w_q));
            TrackWeights w = weights(params);
            SwitchCondition sc = switch_condition(params);
            std::cout << "xs: " << join_ints(w.xs) << "\n"
                      << "ys: " << join_ints(w.ys) << "\n"
                      << "lambda_alt: " << lambda_alt(params) << "\n"
                      << "genus_formula: " << genus_formula(params) << "\n"
                      << "switch_holds: " << (sc.holds ? "true" : "false") << "\n"
                      << "switch_equality: " << (sc.equality ? "true" : "false") << "\n"
                      << "strand_count_model: " << strand_count_model(params) << "\n";
        } else if (cmd_surgery->parsed()) {
            RationalSurgeryDiagram d = family_surgery_diagram(
                parse_int(s_a1), parse_int(s_a2), parse_int(s_a3), parse_int(s_m),
                parse_int(s_b1), parse_int(s_b2), Slope::parse(s_r),
                s_s1xs2 ? SurgeryVariant::S1xS2 : SurgeryVariant::S3);
            std::optional<Int> order = h1_order(d);
            std::cout << "order: " << (order ? order->str() : "infinite") << "\n"
                      << "group: " << h1_group(d).str() << "\n";
            if (!s_export.empty()) {
                std::ofstream file(s_export, std::ios::binary);
                if (!file)
                    throw std::runtime_error("cannot open '" + s_export + "' for writing");
                write_diagram(file, d);
            }
        } else if (cmd_decompose->parsed()) {
            BraidWord xi = BraidWord::parse(d_xi, d_strands);
            std::vector<Int> ap = parse_int_list(d_aprime);
            std::vector<int> ap_small;
            for (const Int& v : ap) {
                if (v < 1 || v > 1000000)
                    throw std::invalid_argument("aprime coefficients must be in [1, 1000000]");
                ap_small.push_back(static_cast<int>(v));
            }
            PlatDecomposition pd = decompose_two_bridge(xi, ap_small);
            std::cout << "alpha: " << pd.alpha.str() << "\n"
                      << "omega: " << pd.omega.str() << "\n"
                      << "certificate: " << (pd.certificate_ok ? "ok" : "FAIL") << "\n"
                      << "detail: " << pd.detail << "\n";
            if (!pd.certificate_ok)
                return 1;
        } else if (cmd_row->parsed()) {
            FamilyParams p{parse_int(f_a3), parse_int(f_a2), parse_int(f_a1), parse_int(f_m),
                           parse_int(f_b1), parse_int(f_b2),
                           f_s1xs2 ? SurgeryVariant::S1xS2 : SurgeryVariant::S3};
            ReportRow r = row(p);
            if (f_format == "kv")
                std::cout << format_row_kv(r);
            else
                std::cout << format_table({r}, TableFormat::Tsv);
            if (!r.error.empty())
                return 1;
        } else if (cmd_table->parsed()) {
            auto grid = parse_grid(f_grid);
            auto rows = table(grid, f_s1xs2 ? SurgeryVariant::S1xS2 : SurgeryVariant::S3);
            std::cout << format_table(rows,
                                      f_format == "kv" ? TableFormat::Kv : TableFormat::Tsv);
        } else if (cmd_check->parsed()) {
            CheckReport report = run_check(check_verbose);
            std::cout << report.text;
            std::cout << (report.all_pass ? "CHECK PASS" : "CHECK FAIL") << " ("
                      << (report.fixtures - report.failures) << "/" << report.fixtures
                      << " fixtures)\n";
            return report.all_pass ? 0 : 1;
        } else if (cmd_export->parsed()) {
            FamilyParams p{parse_int(f_a3), parse_int(f_a2), parse_int(f_a1), parse_int(f_m),
                           parse_int(f_b1), parse_int(f_b2),
                           f_s1xs2 ? SurgeryVariant::S1xS2 : SurgeryVariant::S3};
            export_diagram_file(p, f_out);
            std::cout << "wrote " << f_out << "\n";
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
