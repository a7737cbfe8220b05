// gerst: command-line front end for the Gerstenhaber algebra of
// polydifferential operators.
//
// Exit codes: 0 success, 1 precondition or parse failure, 2 a checked law
// failed, 3 a semigroup decision was needed but came back inconclusive.

#include <gerst/axioms.hpp>
#include <gerst/document.hpp>
#include <gerst/gerstenhaber.hpp>
#include <gerst/grading.hpp>
#include <gerst/maurer_cartan.hpp>
#include <gerst/sampling.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace gerst;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitLaw = 2;
constexpr int kExitInconclusive = 3;

struct Options {
    bool json = false;
    std::vector<std::string> inputs;
    std::string delta;
    int cap = 64;
    int r = 2;
    std::string indices;
    std::string mode = "cumulative";
    std::string alpha;
    std::string weight;
    bool via_bracket = false;
    bool inverse = false;
    int slot = 1;
    std::string pi1;
    std::string def;
    int order = 1;
    bool check_assoc = false;
    bool expect_zero = false;
    std::uint64_t seed = 1;
    int trials = 20;
    int max_block_order = SolverOptions{}.max_block_order;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Document load(const std::string& path) {
    try {
        return parse_document(read_input(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ":" + e.what(), e.line(), e.column());
    }
}

Cochain load_cochain(const std::string& path) { return load(path).cochain(); }
Polynomial load_polynomial(const std::string& path) { return load(path).polynomial(); }

void emit(const Options& opt, const Document& doc) {
    if (opt.json) {
        std::cout << to_json(doc).dump() << "\n";
    } else {
        std::cout << print_document(doc);
    }
}

void require_inputs(const Options& opt, std::size_t count, const char* usage) {
    if (opt.inputs.size() != count) throw PreconditionError(std::string("expected ") + usage);
}

Semigroup load_semigroup(const Options& opt, int dim) {
    if (opt.delta.empty()) throw PreconditionError("--delta is required");
    return Semigroup(dim, parse_index_list(opt.delta, dim), opt.cap);
}

SExpr membership_sexpr(const IntIndex& w, const MembershipResult& r) {
    SExpr e = SExpr::list({SExpr::symbol("weight"), index_sexpr(w), SExpr::symbol(to_string(r.status))});
    if (r.status == Membership::yes) {
        SExpr cert = SExpr::list({SExpr::symbol("certificate")});
        for (int c : r.certificate) cert.push(SExpr::integer(c));
        e.push(std::move(cert));
    }
    e.push(SExpr::string(r.reason));
    return e;
}

int decision_report(const Options& opt, int dim, const char* name, const SubspaceDecision& d) {
    std::vector<SExpr> body{SExpr::list({SExpr::symbol(name), SExpr::symbol(to_string(d.status))})};
    for (const auto& [w, r] : d.per_weight) body.push_back(membership_sexpr(w, r));
    emit(opt, Document::report(dim, std::move(body)));
    return d.status == Membership::inconclusive ? kExitInconclusive : kExitOk;
}

SExpr series_sexpr(const TSeries& s) {
    SExpr e = SExpr::list({SExpr::symbol("series")});
    for (std::size_t k = 0; k < s.size(); ++k) {
        e.push(SExpr::list({SExpr::symbol("t"), SExpr::integer(static_cast<long>(k)), polynomial_sexpr(s[k])}));
    }
    return e;
}

FiltrationMode parse_mode(const std::string& mode) {
    if (mode == "literal") return FiltrationMode::literal;
    if (mode == "cumulative") return FiltrationMode::cumulative;
    throw PreconditionError("--mode must be literal or cumulative");
}

SExpr filtration_sexpr(const FiltrationIndex& alpha) {
    return SExpr::list({SExpr::symbol("alpha"), index_sexpr(alpha.a), index_sexpr(alpha.b)});
}

int run(const std::string& command, const Options& opt) {
    if (command == "cup" || command == "bracket") {
        require_inputs(opt, 2, "two cochain files");
        const Cochain f = load_cochain(opt.inputs[0]), g = load_cochain(opt.inputs[1]);
        emit(opt, Document::of(command == "cup" ? cup(f, g) : bracket(f, g)));
        return kExitOk;
    }
    if (command == "insert") {
        require_inputs(opt, 2, "two cochain files");
        emit(opt, Document::of(insert(load_cochain(opt.inputs[0]), opt.slot, load_cochain(opt.inputs[1]))));
        return kExitOk;
    }
    if (command == "delta") {
        require_inputs(opt, 1, "one cochain file");
        const Cochain f = load_cochain(opt.inputs[0]);
        if (opt.inverse) {
            emit(opt, Document::of(solve_delta(f, SolverOptions{opt.max_block_order})));
        } else {
            emit(opt, Document::of(opt.via_bracket ? delta_via_bracket(f) : hochschild_delta(f)));
        }
        return kExitOk;
    }
    if (command == "apply") {
        if (opt.inputs.empty()) throw PreconditionError("expected a cochain file followed by polynomial files");
        const Cochain c = load_cochain(opt.inputs[0]);
        std::vector<Polynomial> args;
        for (std::size_t i = 1; i < opt.inputs.size(); ++i) args.push_back(load_polynomial(opt.inputs[i]));
        emit(opt, Document::of(gerst::apply(c, args)));
        return kExitOk;
    }
    if (command == "weight") {
        require_inputs(opt, 1, "one cochain file");
        const Cochain c = load_cochain(opt.inputs[0]);
        std::vector<SExpr> body;
        for (const auto& [w, part] : decompose_by_weight(c)) {
            body.push_back(SExpr::list({SExpr::symbol("weight"), index_sexpr(w), cochain_sexpr(part)}));
        }
        emit(opt, Document::report(c.dimension(), std::move(body)));
        return kExitOk;
    }
    if (command == "bigrade") {
        require_inputs(opt, 1, "one cochain file");
        const Cochain c = load_cochain(opt.inputs[0]);
        std::vector<SExpr> body;
        for (const auto& [g, part] : decompose_by_bigrade(c)) {
            body.push_back(SExpr::list({SExpr::symbol("bigrade"), index_sexpr(g.a), index_sexpr(g.b), cochain_sexpr(part)}));
        }
        emit(opt, Document::report(c.dimension(), std::move(body)));
        return kExitOk;
    }
    if (command == "project") {
        require_inputs(opt, 1, "one cochain file");
        const Cochain c = load_cochain(opt.inputs[0]);
        emit(opt, Document::of(project_c_delta(c, load_semigroup(opt, c.dimension()))));
        return kExitOk;
    }
    if (command == "member") {
        if (!opt.weight.empty()) {
            if (!opt.inputs.empty()) throw PreconditionError("--weight takes no cochain file");
            const auto weights = parse_index_list(opt.weight);
            if (weights.size() != 1) throw PreconditionError("--weight takes exactly one multi-index");
            const int dim = weights[0].dim();
            const auto r = semigroup_member(load_semigroup(opt, dim), weights[0]);
            emit(opt, Document::report(dim, {membership_sexpr(weights[0], r)}));
            return r.status == Membership::inconclusive ? kExitInconclusive : kExitOk;
        }
        require_inputs(opt, 1, "one cochain file (or --weight)");
        const Cochain c = load_cochain(opt.inputs[0]);
        return decision_report(opt, c.dimension(), "member", in_c_delta(c, load_semigroup(opt, c.dimension())));
    }
    if (command == "ideal-member") {
        require_inputs(opt, 1, "one cochain file");
        const Cochain c = load_cochain(opt.inputs[0]);
        return decision_report(opt, c.dimension(), "ideal-member", in_ideal(c, load_semigroup(opt, c.dimension()), opt.r));
    }
    if (command == "theta" || command == "theta-split") {
        require_inputs(opt, 1, "one cochain file");
        const Cochain c = load_cochain(opt.inputs[0]);
        std::vector<int> indices;
        SExpr list = parse_sexpr("(" + opt.indices + ")");
        if (list.items().size() == 1 && list.items()[0].is_list()) list = list.items()[0];  // "(1 2)" as well as "1 2"
        for (const auto& item : list.items()) indices.push_back(static_cast<int>(item.as_integer()));
        const IndexSet I(c.dimension(), indices);
        if (command == "theta") {
            emit(opt, Document::of(theta_apply(c, I)));
        } else {
            const auto split = theta_split(c, I);
            emit(opt, Document::report(c.dimension(), {SExpr::list({SExpr::symbol("plus"), cochain_sexpr(split.plus)}),
                                                      SExpr::list({SExpr::symbol("minus"), cochain_sexpr(split.minus)})}));
        }
        return kExitOk;
    }
    if (command == "filtration") {
        require_inputs(opt, 1, "one cochain file");
        const Cochain c = load_cochain(opt.inputs[0]);
        const FiltrationMode mode = parse_mode(opt.mode);
        const SExpr mode_sexpr = SExpr::list({SExpr::symbol("mode"), SExpr::symbol(opt.mode)});
        if (!opt.alpha.empty()) {
            const auto ab = parse_index_list(opt.alpha, c.dimension());
            if (ab.size() != 2) throw PreconditionError("--alpha takes two multi-indices a and b");
            const FiltrationIndex alpha{ab[0], ab[1]};
            const bool in = filtration_contains(c, alpha, mode);
            emit(opt, Document::report(c.dimension(), {mode_sexpr, filtration_sexpr(alpha),
                                                      SExpr::list({SExpr::symbol("contains"), SExpr::symbol(in ? "yes" : "no")})}));
            return kExitOk;
        }
        const auto index = filtration_index(c, mode);
        emit(opt, Document::report(c.dimension(), {mode_sexpr, index ? filtration_sexpr(*index)
                                                                     : SExpr::list({SExpr::symbol("alpha"), SExpr::symbol("none")})}));
        return kExitOk;
    }
    if (command == "subgroup-check") {
        if (opt.delta.empty()) throw PreconditionError("--delta gives the generators of H");
        const auto gens = parse_index_list(opt.delta);
        if (gens.empty()) throw PreconditionError("--delta needs at least one generator");
        const int dim = gens.front().dim();
        const Semigroup h(dim, gens, opt.cap);
        const auto report = subgroup_complement_check(h, opt.trials, opt.seed);
        std::vector<SExpr> body{
            SExpr::list({SExpr::symbol("subgroup"), SExpr::symbol(report.is_subgroup ? "yes" : "no")}),
            SExpr::list({SExpr::symbol("samples"), SExpr::integer(report.samples_checked)}),
            SExpr::list({SExpr::symbol("undecided-weights"), SExpr::integer(report.undecided)}),
            SExpr::list({SExpr::symbol("closure"), SExpr::symbol(report.passed() ? "pass" : "fail")})};
        if (report.counterexample) {
            const auto& cx = *report.counterexample;
            body.push_back(SExpr::list({SExpr::symbol("counterexample"), SExpr::string(cx.operation),
                                        SExpr::list({SExpr::symbol("h"), index_sexpr(cx.h)}),
                                        SExpr::list({SExpr::symbol("k"), index_sexpr(cx.k)}), cochain_sexpr(cx.f),
                                        cochain_sexpr(cx.g), cochain_sexpr(cx.result)}));
        }
        emit(opt, Document::report(dim, std::move(body)));
        return kExitOk;
    }
    if (command == "mc-solve") {
        if (opt.pi1.empty()) throw PreconditionError("--pi1 is required");
        const Cochain pi1 = load_cochain(opt.pi1);
        std::optional<Semigroup> delta;
        if (!opt.delta.empty()) delta = load_semigroup(opt, pi1.dimension());
        const Deformation def = solve_maurer_cartan(pi1, opt.order, delta, SolverOptions{opt.max_block_order});
        int status = kExitOk;
        std::string note;
        if (opt.check_assoc) {
            Sampler s(opt.seed, SampleBounds{.dim = 2});
            bool zero = true;
            for (int t = 0; t < opt.trials && zero; ++t) {
                const Polynomial f = s.polynomial(3, 3), g = s.polynomial(3, 3), h = s.polynomial(3, 3);
                for (const auto& coeff : associativity_defect(def, f, g, h)) zero = zero && coeff.is_zero();
            }
            note = std::string("associativity defect ") + (zero ? "zero" : "NONZERO") + " through t^" +
                   std::to_string(opt.order) + " on " + std::to_string(opt.trials) + " random triples (seed " +
                   std::to_string(opt.seed) + ")";
            if (!zero) status = kExitLaw;
        }
        if (opt.json) {
            if (!note.empty()) std::cerr << note << "\n";
        } else if (!note.empty()) {
            std::cout << "; " << note << "\n";
        }
        emit(opt, Document::of(def));
        return status;
    }
    if (command == "star-apply" || command == "assoc-defect") {
        if (opt.def.empty()) throw PreconditionError("--def is required");
        const Deformation def = load(opt.def).deformation();
        const bool star = command == "star-apply";
        require_inputs(opt, star ? 2 : 3, star ? "two polynomial files" : "three polynomial files");
        std::vector<Polynomial> u;
        for (const auto& path : opt.inputs) u.push_back(load_polynomial(path));
        const TSeries s = star ? star_apply(def, u[0], u[1]) : associativity_defect(def, u[0], u[1], u[2]);
        emit(opt, Document::report(def.dimension(), {series_sexpr(s)}));
        if (!star && opt.expect_zero) {
            for (const auto& coeff : s) {
                if (!coeff.is_zero()) return kExitLaw;
            }
        }
        return kExitOk;
    }
    if (command == "verify-axioms") {
        const auto results = run_all_laws(opt.seed, opt.trials);
        std::vector<SExpr> body{SExpr::list({SExpr::symbol("seed"), SExpr::integer(static_cast<long>(opt.seed))}),
                                SExpr::list({SExpr::symbol("trials"), SExpr::integer(opt.trials)})};
        bool all = true;
        for (const auto& r : results) {
            SExpr law = SExpr::list({SExpr::symbol("law"), SExpr::string(r.name), SExpr::symbol(r.passed ? "pass" : "fail")});
            if (!r.passed) {
                all = false;
                law.push(SExpr::string(r.detail));
                for (const auto& [name, c] : r.witnesses) law.push(SExpr::list({SExpr::symbol(name), cochain_sexpr(c)}));
            }
            body.push_back(std::move(law));
        }
        emit(opt, Document::report(2, std::move(body)));
        return all ? kExitOk : kExitLaw;
    }
    throw PreconditionError("unknown command '" + command + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the Gerstenhaber algebra of polydifferential operators"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.json, "Emit JSON instead of s-expressions");

    auto files = [&](CLI::App* sub, const char* what) { sub->add_option("files", opt.inputs, what); };
    auto semigroup = [&](CLI::App* sub) {
        sub->add_option("--delta", opt.delta, "Semigroup generators, e.g. \"(-1 -1) (0 1)\"");
        sub->add_option("--cap", opt.cap, "Bound on the number of summands searched")->capture_default_str();
    };

    files(app.add_subcommand("cup", "Cup product of two cochains"), "Cochain files ('-' for stdin)");
    files(app.add_subcommand("bracket", "Gerstenhaber bracket of two cochains"), "Cochain files");
    auto* insert_cmd = app.add_subcommand("insert", "Substitute the second cochain into a slot of the first");
    files(insert_cmd, "Cochain files");
    insert_cmd->add_option("--slot", opt.slot, "1-based slot")->capture_default_str();
    auto* delta_cmd = app.add_subcommand("delta", "Hochschild coboundary");
    files(delta_cmd, "Cochain file");
    delta_cmd->add_flag("--via-bracket", opt.via_bracket, "Compute as -[f, m]");
    delta_cmd->add_flag("--inverse", opt.inverse, "Solve delta X = B for X instead");
    delta_cmd->add_option("--max-block-order", opt.max_block_order, "Slot-order bound for --inverse");
    files(app.add_subcommand("apply", "Evaluate a cochain on polynomials"), "Cochain file then polynomial files");
    files(app.add_subcommand("weight", "Decompose by weight"), "Cochain file");
    files(app.add_subcommand("bigrade", "Decompose by bigrade"), "Cochain file");
    auto* project_cmd = app.add_subcommand("project", "Projection onto C_Delta");
    files(project_cmd, "Cochain file");
    semigroup(project_cmd);
    auto* member_cmd = app.add_subcommand("member", "Membership in C_Delta, or of a weight in Delta");
    files(member_cmd, "Cochain file");
    semigroup(member_cmd);
    member_cmd->add_option("--weight", opt.weight, "Decide a single weight instead of a cochain");
    auto* ideal_cmd = app.add_subcommand("ideal-member", "Membership in I^(r)_Delta");
    files(ideal_cmd, "Cochain file");
    semigroup(ideal_cmd);
    ideal_cmd->add_option("--r", opt.r, "Ideal order")->capture_default_str();
    for (const char* name : {"theta", "theta-split"}) {
        auto* cmd = app.add_subcommand(name, name == std::string("theta") ? "Apply the involution theta_I"
                                                                         : "Split into theta_I = +1 and -1 parts");
        files(cmd, "Cochain file");
        cmd->add_option("--indices", opt.indices, "Index set I, e.g. \"1 2\"")->required();
    }
    auto* filt_cmd = app.add_subcommand("filtration", "Filtration index or membership");
    files(filt_cmd, "Cochain file");
    filt_cmd->add_option("--mode", opt.mode, "literal or cumulative")->capture_default_str();
    filt_cmd->add_option("--alpha", opt.alpha, "Index pair \"(a...) (b...)\" to test membership");
    auto* sub_cmd = app.add_subcommand("subgroup-check", "Complement criterion for the semigroup H given by --delta");
    semigroup(sub_cmd);
    sub_cmd->add_option("--seed", opt.seed)->capture_default_str();
    sub_cmd->add_option("--trials", opt.trials)->capture_default_str();
    auto* mc_cmd = app.add_subcommand("mc-solve", "Order-by-order star product on R^2");
    mc_cmd->add_option("--pi1", opt.pi1, "Poisson bivector cochain file")->required();
    mc_cmd->add_option("--order", opt.order, "Truncation order N")->capture_default_str();
    semigroup(mc_cmd);
    mc_cmd->add_flag("--check-assoc", opt.check_assoc, "Check associativity on random triples");
    mc_cmd->add_option("--seed", opt.seed)->capture_default_str();
    mc_cmd->add_option("--trials", opt.trials)->capture_default_str();
    mc_cmd->add_option("--max-block-order", opt.max_block_order)->capture_default_str();
    auto* star_cmd = app.add_subcommand("star-apply", "Evaluate f * g");
    star_cmd->add_option("--def", opt.def, "Deformation file")->required();
    files(star_cmd, "Two polynomial files");
    auto* assoc_cmd = app.add_subcommand("assoc-defect", "(f * g) * h - f * (g * h)");
    assoc_cmd->add_option("--def", opt.def, "Deformation file")->required();
    assoc_cmd->add_flag("--expect-zero", opt.expect_zero, "Exit 2 when the defect is nonzero");
    files(assoc_cmd, "Three polynomial files");
    auto* verify_cmd = app.add_subcommand("verify-axioms", "Run the seeded law suites");
    verify_cmd->add_option("--seed", opt.seed)->capture_default_str();
    verify_cmd->add_option("--trials", opt.trials)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), opt);
    } catch (const InconclusiveError& e) {
        std::cerr << "gerst: inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const Error& e) {
        std::cerr << "gerst: " << e.what() << "\n";
        return kExitInput;
    }
}
