/*
   Copyright 2026 The spa authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spa/dims.hpp"
#include "spa/format.hpp"
#include "spa/parse.hpp"
#include "spa/quantum.hpp"
#include "spa/verify.hpp"

using json = nlohmann::json;

namespace {

// Exit codes: 0 success, 1 mathematical "false"/violation findings,
// 2 usage errors, 3 step-budget exhaustion.
constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Options {
    std::string algebra;
    std::string q = "symbolic";
    std::string ordering; // empty = command default
    std::string side = "left";
    std::string format = "text";
    std::string gens_file;
    std::string poly;
    std::string keep;
    bool lemma = false;
    int dmax = 8;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
    std::uint64_t budget = spa::Budget::kDefaultSteps;
};

std::uint64_t default_budget() {
    if (const char* env = std::getenv("SPA_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return spa::Budget::kDefaultSteps;
}

spa::QMode make_qmode(const std::string& q) {
    if (q == "symbolic") return spa::QMode::symbolic();
    return spa::QMode::specialized(spa::parse_rational(q));
}

struct Context {
    spa::QMode qmode;
    spa::Algebra algebra;
    spa::Budget budget;
};

Context make_context(const Options& opt, const std::string& default_ordering = "paper") {
    spa::QMode qmode = make_qmode(opt.q);
    spa::Algebra a = spa::parse_algebra_spec(opt.algebra, qmode);
    std::string ordering = opt.ordering.empty() ? default_ordering : opt.ordering;
    if (ordering != "default") {
        spa::OrderingSpec spec = spa::parse_ordering_name(ordering, a);
        if (!(spec == a.ordering())) a = a.with_ordering(spec);
    }
    return {std::move(qmode), std::move(a), spa::Budget(opt.budget)};
}

std::vector<spa::Element> load_gens(const Options& opt, Context& ctx, bool required) {
    if (opt.gens_file.empty()) {
        if (required) throw spa::BadArgument("--gens FILE is required for this command");
        return {};
    }
    std::ifstream in(opt.gens_file);
    if (!in) throw spa::BadArgument("cannot open generators file " + opt.gens_file);
    return spa::parse_ideal_file(in, ctx.algebra, ctx.budget);
}

spa::Side make_side(const std::string& s) {
    if (s == "left") return spa::Side::Left;
    if (s == "twosided") return spa::Side::TwoSided;
    throw spa::BadArgument("--side must be left or twosided");
}

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_check_solvable(const Options& opt) {
    Context ctx = make_context(opt);
    spa::SolvabilityReport report = ctx.algebra.check_solvable();
    json j{{"command", "check-solvable"},
           {"algebra", opt.algebra},
           {"q", ctx.qmode.to_string()},
           {"ordering", ctx.algebra.ordering().name()},
           {"solvable", report.ok()}};
    std::ostringstream text;
    text << "solvable: " << (report.ok() ? "yes" : "no") << "\n";
    j["violations"] = json::array();
    for (const auto& v : report.violations) {
        j["violations"].push_back(v.detail);
        text << "violation: " << v.detail << "\n";
    }
    j["notes"] = report.notes;
    for (const auto& n : report.notes) text << "note: " << n << "\n";
    emit(opt, j, text.str());
    return report.ok() ? kOk : kViolation;
}

int cmd_verify_ordering(const Options& opt) {
    Context ctx = make_context(opt);
    spa::OrderingAxiomReport report =
        spa::verify_ordering_axioms(ctx.algebra, ctx.algebra.ordering(), opt.samples, opt.seed);
    json j{{"command", "verify-ordering"},
           {"algebra", opt.algebra},
           {"ordering", ctx.algebra.ordering().name()},
           {"samples", opt.samples},
           {"order_tuples", report.order_tuples_checked},
           {"condition2_tuples", report.cond2_checked},
           {"condition3_tuples", report.cond3_checked},
           {"descent_chains", report.descent_chains_checked},
           {"monotonicity_triples", report.monotonicity_triples_checked},
           {"pass", report.ok()},
           {"warning_empty_budget", report.empty_budget_warning},
           {"violations", report.violations}};
    std::ostringstream text;
    text << "ordering axioms: " << (report.ok() ? "pass" : "fail") << "\n";
    if (report.empty_budget_warning) text << "warning: empty sample budget, vacuous pass\n";
    text << "order tuples: " << report.order_tuples_checked
         << ", condition (2): " << report.cond2_checked << ", condition (3): " << report.cond3_checked
         << ", descent chains: " << report.descent_chains_checked
         << ", generator triples: " << report.monotonicity_triples_checked << "\n";
    for (const auto& v : report.violations) text << "violation: " << v << "\n";
    emit(opt, j, text.str());
    return report.ok() ? kOk : kViolation;
}

int cmd_gb(const Options& opt) {
    Context ctx = make_context(opt);
    std::vector<spa::Element> gens = load_gens(opt, ctx, true);
    spa::Side side = make_side(opt.side);
    try {
        spa::GroebnerBasis basis =
            spa::reduce_basis(ctx.algebra, spa::buchberger(ctx.algebra, gens, side, ctx.budget), ctx.budget);
        std::ostringstream text;
        text << spa::gb_header(ctx.algebra, basis, opt.algebra) << "\n";
        json j{{"command", "gb"},
               {"algebra", opt.algebra},
               {"q", ctx.qmode.to_string()},
               {"ordering", basis.ordering.name()},
               {"side", spa::to_string(basis.side)},
               {"reduced", basis.reduced}};
        j["elements"] = json::array();
        for (const auto& g : basis.elements) {
            std::string s = spa::to_string(ctx.algebra, g);
            j["elements"].push_back(s);
            text << s << "\n";
        }
        emit(opt, j, text.str());
        return kOk;
    } catch (const spa::BuchbergerLimit& e) {
        std::cout << "# budget exhausted after " << e.steps() << " steps; partial basis:\n";
        for (const auto& g : e.partial()) std::cout << spa::to_string(ctx.algebra, g) << "\n";
        return kBudget;
    }
}

int cmd_nf(const Options& opt) {
    Context ctx = make_context(opt);
    std::vector<spa::Element> gens = load_gens(opt, ctx, true);
    spa::Element f = spa::parse_polynomial(opt.poly, ctx.algebra, ctx.budget);
    spa::Side side = make_side(opt.side);
    spa::GroebnerBasis basis =
        spa::reduce_basis(ctx.algebra, spa::buchberger(ctx.algebra, gens, side, ctx.budget), ctx.budget);
    spa::Element r = spa::normal_form(ctx.algebra, f, basis.elements, ctx.budget);
    std::string s = spa::to_string(ctx.algebra, r);
    emit(opt, json{{"command", "nf"}, {"normal_form", s}}, s + "\n");
    return kOk;
}

int cmd_member(const Options& opt) {
    Context ctx = make_context(opt);
    std::vector<spa::Element> gens = load_gens(opt, ctx, true);
    spa::Element f = spa::parse_polynomial(opt.poly, ctx.algebra, ctx.budget);
    spa::Side side = make_side(opt.side);
    spa::GroebnerBasis basis =
        spa::reduce_basis(ctx.algebra, spa::buchberger(ctx.algebra, gens, side, ctx.budget), ctx.budget);
    bool member = spa::ideal_membership(ctx.algebra, f, basis, ctx.budget);
    emit(opt, json{{"command", "member"}, {"member", member}}, std::string(member ? "true" : "false") + "\n");
    return member ? kOk : kViolation;
}

int cmd_gkdim(const Options& opt) {
    // Dimensions default to the degree-compatible graded ordering, where
    // the staircase argument is standard; the algebra's own ordering is
    // cross-checked and any discrepancy reported.
    Context ctx = make_context(opt, "graded");
    std::vector<spa::Element> gens = load_gens(opt, ctx, false);
    spa::Side side = make_side(opt.side);
    spa::GroebnerBasis basis =
        spa::reduce_basis(ctx.algebra, spa::buchberger(ctx.algebra, gens, side, ctx.budget), ctx.budget);
    int d = spa::gk_dimension(ctx.algebra, basis);

    std::optional<int> cross;
    if (opt.ordering.empty() && !gens.empty()) {
        spa::Algebra paper = ctx.algebra.with_ordering(spa::OrderingSpec::paper());
        try {
            spa::GroebnerBasis pb =
                spa::reduce_basis(paper, spa::buchberger(paper, gens, side, ctx.budget), ctx.budget);
            cross = spa::gk_dimension(paper, pb);
        } catch (const spa::NontermLimit&) {
            // The paper ordering is not degree-compatible; cross-check
            // abandoned when its completion exceeds the budget.
        }
    }

    json j{{"command", "gkdim"}, {"gkdim", d}};
    std::ostringstream text;
    text << d << "\n";
    if (cross && *cross != d) {
        j["cross_check_paper_ordering"] = *cross;
        text << "WARNING: gkdim disagrees across orderings: graded=" << d << " paper=" << *cross << "\n";
        emit(opt, j, text.str());
        return kViolation;
    }
    emit(opt, j, text.str());
    return kOk;
}

int cmd_hilbert(const Options& opt) {
    Context ctx = make_context(opt, "graded");
    std::vector<spa::Element> gens = load_gens(opt, ctx, false);
    spa::Side side = make_side(opt.side);
    spa::GroebnerBasis basis =
        spa::reduce_basis(ctx.algebra, spa::buchberger(ctx.algebra, gens, side, ctx.budget), ctx.budget);
    std::vector<long long> counts = spa::hilbert_truncated(ctx.algebra, basis, opt.dmax);
    std::ostringstream text;
    for (std::size_t k = 0; k < counts.size(); ++k) text << (k ? " " : "") << counts[k];
    text << "\n";
    emit(opt, json{{"command", "hilbert"}, {"dmax", opt.dmax}, {"counts", counts}}, text.str());
    return kOk;
}

int cmd_eliminate(const Options& opt) {
    Context ctx = make_context(opt, "graded");
    std::vector<spa::Element> gens = load_gens(opt, ctx, true);
    spa::Side side = make_side(opt.side);

    if (opt.lemma) {
        spa::GroebnerBasis basis =
            spa::reduce_basis(ctx.algebra, spa::buchberger(ctx.algebra, gens, side, ctx.budget), ctx.budget);
        spa::EliminationLemmaReport report = spa::check_elimination_lemma(ctx.algebra, basis, ctx.budget);
        std::ostringstream text;
        text << "gkdim: " << report.gk_dim << "\n";
        for (const auto& s : report.subsets) {
            // JSON-lines: one object per subset.
            json line{{"subset", json::array()},
                      {"found_nonzero", s.found_nonzero},
                      {"method", s.method == spa::ElimMethod::EliminationOrdering ? "elimination-ordering"
                                                                                  : "kernel-search"}};
            std::string names;
            for (std::size_t slot : s.subset) {
                line["subset"].push_back(ctx.algebra.generator(slot).name);
                names += (names.empty() ? "" : ",") + ctx.algebra.generator(slot).name;
            }
            if (opt.format == "json")
                std::cout << line.dump() << "\n";
            else
                text << "subset {" << names << "}: " << (s.found_nonzero ? "nonzero" : "NOT FOUND") << " ("
                     << line["method"].get<std::string>() << ")\n";
        }
        if (opt.format != "json") std::cout << text.str();
        return report.ok() ? kOk : kViolation;
    }

    if (opt.keep.empty()) throw spa::BadArgument("--keep is required unless --lemma is given");
    std::vector<bool> keep(ctx.algebra.ngens(), false);
    for (const std::string& name : spa::split_generator_list(opt.keep)) {
        auto slot = ctx.algebra.find_generator(name);
        if (!slot) throw spa::UnknownGenerator("unknown generator " + name + " in --keep");
        keep[*slot] = true;
    }

    spa::EliminationResult res = spa::eliminate(ctx.algebra, gens, keep, side, ctx.budget);
    json j{{"command", "eliminate"},
           {"keep", opt.keep},
           {"method", res.method == spa::ElimMethod::EliminationOrdering ? "elimination-ordering"
                                                                         : "kernel-search"},
           {"certified_empty", res.certified_empty()}};
    std::ostringstream text;
    text << "# method: " << j["method"].get<std::string>() << "\n";
    if (res.elements.empty())
        text << (res.certified_empty() ? "# intersection is zero (certified)\n"
                                       : "# no element found up to the degree cap (not a certificate)\n");
    j["elements"] = json::array();
    for (const auto& g : res.elements) {
        std::string s = spa::to_string(ctx.algebra, g);
        j["elements"].push_back(s);
        text << s << "\n";
    }
    emit(opt, j, text.str());
    return kOk;
}

int cmd_pbw_check(const Options& opt) {
    Context ctx = make_context(opt);
    spa::ConsistencyReport report = spa::pbw_consistency(ctx.algebra, ctx.budget);
    json j{{"command", "pbw-check"},
           {"triples", report.triples_checked},
           {"failures", report.failures.size()},
           {"pass", report.ok()}};
    std::ostringstream text;
    text << "overlap triples: " << report.triples_checked << ", failures: " << report.failures.size()
         << "\n";
    for (const auto& f : report.failures)
        text << "ambiguity at " << ctx.algebra.generator(f.a).name << " " << ctx.algebra.generator(f.b).name
             << " " << ctx.algebra.generator(f.c).name << ": "
             << spa::to_string(ctx.algebra, f.left_first) << " vs "
             << spa::to_string(ctx.algebra, f.right_first) << "\n";
    emit(opt, j, text.str());
    return report.ok() ? kOk : kViolation;
}

int cmd_gr(const Options& opt) {
    Context ctx = make_context(opt);
    spa::Algebra graded = spa::associated_graded(ctx.algebra);
    spa::SolvabilityReport report = graded.check_solvable();
    json j{{"command", "gr"},
           {"algebra", opt.algebra},
           {"ordering", graded.ordering().name()},
           {"solvable", report.ok()}};
    std::ostringstream text;
    j["rules"] = json::array();
    for (std::size_t hi = 1; hi < graded.ngens(); ++hi)
        for (std::size_t lo = 0; lo < hi; ++lo) {
            std::string s = spa::rule_to_string(graded, lo, hi);
            j["rules"].push_back(s);
            text << s << "\n";
        }
    text << "solvable under graded ordering: " << (report.ok() ? "yes" : "no") << "\n";
    emit(opt, j, text.str());
    return report.ok() ? kOk : kViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spa: exact Groebner-basis engine for solvable polynomial algebras"};
    app.require_subcommand(1);

    Options opt;
    opt.budget = default_budget();

    auto add_common = [&](CLI::App* cmd, bool needs_algebra = true) {
        auto* a = cmd->add_option("--algebra", opt.algebra,
                                  "algebra specifier: 'uq+ N', 'uq- N', 'gr(uq+ N)', 'uq+ N (x) uq- N'");
        if (needs_algebra) a->required();
        cmd->add_option("--q", opt.q, "q value: 'symbolic' or a rational like 2 or 3/2");
        cmd->add_option("--ordering", opt.ordering, "paper | lexword | graded | elim:<vars> | tensor");
        cmd->add_option("--side", opt.side, "left | twosided");
        cmd->add_option("--budget", opt.budget, "step budget (default from SPA_BUDGET)");
        cmd->add_option("--format", opt.format, "text | json");
    };

    auto* solv = app.add_subcommand("check-solvable", "verify the solvability axioms of the presentation");
    add_common(solv);

    auto* vord = app.add_subcommand("verify-ordering", "sampled monomial-ordering axiom checks");
    add_common(vord);
    vord->add_option("--samples", opt.samples, "sample budget for the axiom tuples");
    vord->add_option("--seed", opt.seed, "RNG seed");

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
    add_common(gb);
    gb->add_option("--gens", opt.gens_file, "ideal file: one polynomial per line, # comments")->required();

    auto* nf = app.add_subcommand("nf", "normal form of a polynomial modulo an ideal");
    add_common(nf);
    nf->add_option("--gens", opt.gens_file, "ideal file")->required();
    nf->add_option("--poly", opt.poly, "polynomial to reduce")->required();

    auto* member = app.add_subcommand("member", "ideal membership test");
    add_common(member);
    member->add_option("--gens", opt.gens_file, "ideal file")->required();
    member->add_option("--poly", opt.poly, "polynomial to test")->required();

    auto* gkdim = app.add_subcommand("gkdim", "Gelfand-Kirillov dimension of A/L");
    add_common(gkdim);
    gkdim->add_option("--gens", opt.gens_file, "ideal file (omit for the zero ideal)");

    auto* hilbert = app.add_subcommand("hilbert", "normal-monomial counts per degree");
    add_common(hilbert);
    hilbert->add_option("--gens", opt.gens_file, "ideal file (omit for the zero ideal)");
    hilbert->add_option("--dmax", opt.dmax, "maximum degree (default 8)");

    auto* elim = app.add_subcommand("eliminate", "intersection of an ideal with a variable subalgebra");
    add_common(elim);
    elim->add_option("--gens", opt.gens_file, "ideal file")->required();
    elim->add_option("--keep", opt.keep, "comma-separated kept generators, e.g. x[1,3],x[2,3]");
    elim->add_flag("--lemma", opt.lemma, "run the elimination-lemma check over all (d+1)-subsets");

    auto* pbw = app.add_subcommand("pbw-check", "diamond-lemma overlap consistency of the relations");
    add_common(pbw);

    auto* gr = app.add_subcommand("gr", "associated graded presentation");
    add_common(gr);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solv->parsed()) return cmd_check_solvable(opt);
        if (vord->parsed()) return cmd_verify_ordering(opt);
        if (gb->parsed()) return cmd_gb(opt);
        if (nf->parsed()) return cmd_nf(opt);
        if (member->parsed()) return cmd_member(opt);
        if (gkdim->parsed()) return cmd_gkdim(opt);
        if (hilbert->parsed()) return cmd_hilbert(opt);
        if (elim->parsed()) return cmd_eliminate(opt);
        if (pbw->parsed()) return cmd_pbw_check(opt);
        if (gr->parsed()) return cmd_gr(opt);
        std::cerr << "no subcommand\n";
        return kUsage;
    } catch (const spa::BuchbergerLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const spa::NontermLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const spa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
