#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entcone/derivation.hpp"
#include "entcone/io.hpp"
#include "entcone/sequence.hpp"

using namespace entcone;
namespace fs = std::filesystem;

namespace {

SubsetMask parse_variable_list(const std::string& text)
{
    std::vector<int> vars;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        vars.push_back(std::stoi(item));
    }
    if (vars.empty())
        throw std::invalid_argument("empty variable list");
    return SubsetMask::of(vars);
}

void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_text_file(path, text);
}

json report_to_json(const FacetReport& r)
{
    json out;
    out["class"] = to_string(r.classification);
    out["facet"] = form_to_json(r.facet);
    out["orbit_representative"] = form_to_json(r.orbit_representative);
    out["raw_count"] = r.raw_count;
    out["orbit_size"] = r.orbit_size;
    if (r.independence_witness)
        out["witness"] = vector_to_json(*r.independence_witness);
    return out;
}

json summary_json(const DeriveResult& d)
{
    json s;
    s["targeted"] = d.targeted;
    s["scenario_inequalities"] = d.scenario_cone.ineqs.size();
    s["scenario_equalities"] = d.scenario_cone.eqs.size();
    if (d.projection) {
        s["raw_facets"] = d.projection->ineqs.size();
        s["projection_equalities"] = d.projection->eqs.size();
        if (d.projection->rays)
            s["rays"] = d.projection->rays->size();
    }
    s["classes"] = d.reports.size();
    s["shannon_classes"] = d.count(FacetClass::shannon);
    s["known_classes"] = d.count(FacetClass::known);
    s["new_classes"] = d.count(FacetClass::novel);
    s["refuted_candidates"] = d.refuted_candidates.size();
    s["lp_calls"] = d.stats.lp_calls;
    s["pivots"] = d.stats.pivots;
    return s;
}

void write_report(const fs::path& dir, const DeriveResult& d)
{
    fs::create_directories(dir);
    if (d.projection) {
        write_text_file(dir / "facets.jsonl", format_cone(*d.projection));
        if (d.projection->rays)
            write_text_file(dir / "rays.jsonl", format_vectors(*d.projection->rays));
    }
    std::string certs, classes;
    for (const auto& c : d.raw_certificates)
        certs += certificate_to_json(c).dump() + "\n";
    for (const auto& r : d.reports) {
        classes += report_to_json(r).dump() + "\n";
        if (!d.projection)
            certs += certificate_to_json(r.proof).dump() + "\n";
    }
    write_text_file(dir / "certificates.jsonl", certs);
    write_text_file(dir / "classes.jsonl", classes);
    if (!d.refuted_candidates.empty())
        write_text_file(dir / "refuted.jsonl", format_forms(d.refuted_candidates));
    write_text_file(dir / "summary.json", summary_json(d).dump(2) + "\n");
}

void print_classes(const DeriveResult& d)
{
    for (const auto& r : d.reports) {
        std::cout << "  " << to_string(r.classification) << " x" << r.raw_count << "  "
                  << pretty(r.facet) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with entropy cones and copy-lemma projections"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "Progress messages on stderr");

    auto logger = [&](std::string_view msg) {
        if (verbose)
            std::cerr << msg << "\n";
    };

    // gen-cone
    int gen_n = 4;
    std::string gen_adjoin, gen_out;
    bool gen_substituted = false;
    auto* gen = app.add_subcommand("gen-cone", "Shannon cone, optionally with extra inequalities");
    gen->add_option("--n", gen_n, "Number of variables")->required()->check(CLI::Range(1, kMaxVariables));
    gen->add_option("--adjoin", gen_adjoin, "Inequalities to append");
    gen->add_flag("--substituted", gen_substituted, "Append every substituted form");
    gen->add_option("--out", gen_out, "Output file (default stdout)");

    // verify
    std::string ver_cone, ver_target, ver_cert;
    auto* ver = app.add_subcommand("verify", "Decide whether target inequalities follow from a cone");
    ver->add_option("--cone", ver_cone)->required();
    ver->add_option("--target", ver_target)->required();
    ver->add_option("--emit-certificate", ver_cert, "Certificates or witnesses, one per target");

    // project
    std::string proj_cone, proj_keep, proj_method = "chm", proj_warm, proj_out;
    std::size_t proj_budget = 0;
    auto* proj = app.add_subcommand("project", "Project a cone onto a subset of its variables");
    proj->add_option("--cone", proj_cone)->required();
    proj->add_option("--keep-vars", proj_keep, "Comma-separated variables, e.g. 1,2,3,4")->required();
    proj->add_option("--method", proj_method)->check(CLI::IsMember({"chm", "fm"}));
    proj->add_option("--warm-start", proj_warm, "Points of the projection (vectors file)");
    proj->add_option("--max-lps", proj_budget, "LP budget for chm (0 = unlimited)");
    proj->add_option("--out", proj_out)->required();

    // derive
    std::string der_scenario, der_base, der_known, der_report, der_candidates;
    bool der_targeted = false, der_no_witness = false, der_no_rays = false;
    std::size_t der_budget = 0;
    auto* der = app.add_subcommand("derive", "Project a copy scenario and classify the facets");
    der->add_option("--scenario", der_scenario)->required();
    der->add_option("--base", der_base, "Outer bound over the original variables (default: Shannon)");
    der->add_option("--known", der_known, "Known inequalities for classification");
    der->add_option("--report", der_report, "Report directory")->required();
    der->add_option("--candidates", der_candidates, "Candidates for targeted mode");
    der->add_flag("--targeted", der_targeted, "Check candidates only, skip the projection");
    der->add_option("--max-lps", der_budget, "LP budget before falling back to candidates");
    der->add_flag("--no-witnesses", der_no_witness);
    der->add_flag("--no-certify-rays", der_no_rays);

    // iterate
    std::string it_scenario, it_base, it_report;
    int it_steps = 1;
    auto* it = app.add_subcommand("iterate", "Apply the outer-bound map repeatedly");
    it->add_option("--scenario", it_scenario)->required();
    it->add_option("--steps", it_steps)->required()->check(CLI::PositiveNumber);
    it->add_option("--base", it_base, "Starting bound (default: Shannon)");
    it->add_option("--report", it_report, "Directory for per-step reports");

    // sequence
    int seq_s = 1;
    bool seq_verify = false;
    std::string seq_emit;
    auto* seq = app.add_subcommand("sequence", "Members of the 4-variable inequality family");
    seq->add_option("--s", seq_s, "Index of the member")->required()->check(CLI::PositiveNumber);
    seq->add_flag("--verify", seq_verify, "Certify each step 2..s from its predecessor");
    seq->add_option("--emit", seq_emit, "Write members 1..s to a forms file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            Cone cone = shannon_cone(gen_n);
            if (!gen_adjoin.empty())
                cone = adjoin(cone, read_forms_file(gen_adjoin), gen_substituted);
            emit(gen_out, format_cone(cone));
            return 0;
        }

        if (*ver) {
            Cone cone = read_cone_file(ver_cone);
            bool all = true;
            std::string out;
            for (const auto& target : read_forms_file(ver_target)) {
                LinForm t = target.n() < cone.n ? lift(target, cone.n) : target;
                InferResult r = infer(cone, t);
                std::cout << (r.implied ? "implied      " : "not implied  ") << pretty(target) << "\n";
                json rec;
                rec["implied"] = r.implied;
                if (r.implied)
                    rec["certificate"] = certificate_to_json(*r.certificate);
                else
                    rec["witness"] = vector_to_json(*r.witness);
                out += rec.dump() + "\n";
                all = all && r.implied;
            }
            if (!ver_cert.empty())
                write_text_file(ver_cert, out);
            return all ? 0 : 1;
        }

        if (*proj) {
            Cone cone = read_cone_file(proj_cone);
            SubsetMask keep = parse_variable_list(proj_keep);
            Cone result;
            if (proj_method == "fm") {
                std::vector<SubsetMask> drop;
                for (std::uint32_t b = 1; b < (1u << cone.n); ++b) {
                    if (!SubsetMask(b).is_subset_of(keep))
                        drop.emplace_back(b);
                }
                Cone eliminated = fm_eliminate(cone, drop);
                result.n = keep.size();
                for (const auto& f : eliminated.ineqs)
                    result.add_inequality(compress(f, keep));
                for (const auto& f : eliminated.eqs)
                    result.add_equality(compress(f, keep));
                result = normalize(result);
            } else {
                ChmOptions opts;
                opts.log = logger;
                opts.max_lp_calls = proj_budget;
                if (!proj_warm.empty())
                    opts.warm_start = read_vectors_file(proj_warm);
                ProjectionResult p = chm_project_vars(cone, keep, opts);
                result = p.cone;
                std::cerr << "lp calls " << p.stats.lp_calls << ", pivots " << p.stats.pivots << "\n";
            }
            write_text_file(proj_out, format_cone(result));
            if (result.rays)
                write_text_file(proj_out + ".rays", format_vectors(*result.rays));
            std::cout << result.ineqs.size() << " inequalities, " << result.eqs.size()
                      << " equalities\n";
            return 0;
        }

        if (*der) {
            Scenario scenario = read_scenario_file(der_scenario);
            Cone base = der_base.empty() ? shannon_cone(scenario.m) : read_cone_file(der_base);
            std::vector<LinForm> known;
            if (!der_known.empty())
                known = read_forms_file(der_known);
            DeriveOptions opts;
            opts.chm.log = logger;
            opts.chm.max_lp_calls = der_budget;
            opts.chm.certify_rays = !der_no_rays;
            opts.witnesses = !der_no_witness;
            opts.targeted = der_targeted;
            if (!der_candidates.empty())
                opts.candidates = read_forms_file(der_candidates);
            auto t0 = std::chrono::steady_clock::now();
            DeriveResult d = derive(scenario, base, known, opts);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            write_report(der_report, d);
            if (d.projection)
                std::cout << d.raw_facet_count() << " facets in " << d.reports.size() << " classes";
            else
                std::cout << "targeted: " << d.reports.size() << " candidates certified, "
                          << d.refuted_candidates.size() << " refuted";
            std::cout << " (" << d.count(FacetClass::novel) << " new), " << secs << " s\n";
            print_classes(d);
            return 0;
        }

        if (*it) {
            Scenario scenario = read_scenario_file(it_scenario);
            Cone base = it_base.empty() ? shannon_cone(scenario.m) : read_cone_file(it_base);
            DeriveOptions opts;
            opts.chm.log = logger;
            opts.chm.certify_rays = false;
            auto steps = iterate(base, scenario, it_steps, opts);
            for (std::size_t i = 0; i < steps.size(); ++i) {
                const auto& st = steps[i];
                std::cout << "step " << i + 1 << ": " << st.derivation.raw_facet_count()
                          << " facets, " << st.derivation.count(FacetClass::novel)
                          << " new classes, bound now " << st.bound.ineqs.size()
                          << " inequalities\n";
                for (const auto& r : st.derivation.reports) {
                    if (r.classification == FacetClass::novel)
                        std::cout << "  x" << r.raw_count << "  " << pretty(r.facet) << "\n";
                }
                if (!it_report.empty()) {
                    fs::path dir = fs::path(it_report) / ("step" + std::to_string(i + 1));
                    write_report(dir, st.derivation);
                    write_text_file(dir / "bound.jsonl", format_cone(st.bound));
                }
            }
            return 0;
        }

        if (*seq) {
            std::vector<LinForm> members;
            for (int s = 1; s <= seq_s; ++s)
                members.push_back(seq_inequality(SeqIndex(s)));
            std::cout << pretty(members.back()) << "\n";
            if (!seq_emit.empty())
                write_text_file(seq_emit, format_forms(members));
            if (seq_verify) {
                for (int s = 2; s <= seq_s; ++s) {
                    Certificate c = verify_seq_step(SeqIndex(s));
                    std::cout << "s = " << s << ": certified with "
                              << c.ineq_multipliers.size() << " inequalities and "
                              << c.eq_multipliers.size() << " equalities\n";
                }
            }
            return 0;
        }
    } catch (const SequenceStepFailure& e) {
        std::cerr << "sequence: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
