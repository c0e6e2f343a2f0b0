#include "detrep/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "detrep/decomp.hpp"
#include "detrep/errors.hpp"
#include "detrep/hyperbolic.hpp"
#include "detrep/kernel.hpp"
#include "detrep/linearize.hpp"
#include "detrep/localred.hpp"
#include "detrep/matrix.hpp"
#include "detrep/parser.hpp"
#include "detrep/symmetric.hpp"

namespace detrep {

namespace {

using json = nlohmann::ordered_json;

// Inline expression, or @path to read the expression from a file.
std::string read_input(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1), std::ios::binary);
    if (!in) throw InputError("FileError", "cannot read file: " + arg.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_matrix(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '[';
    }
    return false;
}

struct Output {
    std::string command;
    json inputs = json::object();
    std::string verdict = "ok";
    json data = json::object();
    std::vector<std::string> assertions;
    std::vector<std::string> text;
};

void emit(const Output& o, bool structured, std::ostream& out) {
    if (structured) {
        json j;
        j["command"] = o.command;
        j["inputs"] = o.inputs;
        j["verdict"] = o.verdict;
        j["data"] = o.data;
        j["assertions_checked"] = o.assertions;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& line : o.text) out << line << "\n";
    }
}

json rat_list(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rational_to_string(x));
    return a;
}

std::string point_text(const std::vector<Rat>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rational_to_string(v[i]);
    }
    return s;
}

// Lift a polynomial and a matrix to a shared ambient variable count.
void align(PolyMatrix& M, Polynomial& f) {
    const std::size_t n = std::max(M.nvars(), f.nvars());
    M = M.extended(n);
    f = f.extended(n);
}

Output cmd_det(const std::string& m_text) {
    PolyMatrix M = parse_matrix(m_text);
    Polynomial f = determinant(M);
    Output o;
    o.command = "det";
    o.inputs["matrix"] = M.to_string();
    o.data["determinant"] = f.to_string();
    o.text = {f.to_string()};
    return o;
}

Output cmd_adj(const std::string& m_text) {
    PolyMatrix M = parse_matrix(m_text);
    PolyMatrix A = adjugate(M);
    Polynomial f = determinant(M);
    if (!(M * A == PolyMatrix::scalar(M.size(), f)))
        throw InternalError("adjugate identity M*adj(M) = det(M)*I failed");
    Output o;
    o.command = "adj";
    o.inputs["matrix"] = M.to_string();
    o.data["adjugate"] = A.to_string();
    o.data["determinant"] = f.to_string();
    o.assertions = {"M*adj(M) == det(M)*identity"};
    o.text = {A.to_string()};
    return o;
}

Output cmd_reduce(const std::string& m_text, const std::string& pt_text) {
    PolyMatrix M = parse_matrix(m_text);
    ProjectivePoint pt = parse_point(pt_text);
    LocalReduction red = local_reduce(M, pt);
    Output o;
    o.command = "reduce";
    o.inputs["matrix"] = M.to_string();
    o.inputs["point"] = pt.to_string();
    o.data["p"] = red.p;
    o.data["N"] = red.N.to_string();
    o.data["left"] = red.left.to_string();
    o.data["right"] = red.right.to_string();
    o.assertions = {"left*M*right == identity (+) N", "N vanishes at the center",
                    "p == corank at the center"};
    o.text = {"p = " + std::to_string(red.p), "N = " + red.N.to_string(),
              "left = " + red.left.to_string(), "right = " + red.right.to_string()};
    return o;
}

Output cmd_linearize(const std::string& m_text, bool symmetric) {
    PolyMatrix M = parse_matrix(m_text);
    LinearizationResult res = symmetric ? sym_linearize(M) : linearize(M);
    Output o;
    o.command = "linearize";
    o.inputs["matrix"] = M.to_string();
    o.inputs["symmetric"] = symmetric;
    o.data["matrix"] = res.L.to_string();
    o.data["unit"] = rational_to_string(res.unit);
    o.data["step_count"] = res.step_count;
    json trace = json::array();
    for (const auto& [deg, cnt] : res.measure_trace) trace.push_back(json::array({deg, cnt}));
    o.data["measure_trace"] = trace;
    o.assertions = {"det(L) == unit * det(M)", "entries have degree <= 1",
                    "size growth == step count"};
    o.text = {res.L.to_string(), "unit = " + rational_to_string(res.unit),
              "steps = " + std::to_string(res.step_count)};
    return o;
}

Output cmd_homogenize(const std::string& text, std::size_t var) {
    Output o;
    o.command = "homogenize";
    o.inputs["var"] = var;
    if (looks_like_matrix(text)) {
        PolyMatrix L = parse_matrix(text);
        L = L.extended(std::max(L.nvars(), var + 1));
        PolyMatrix H = homogenize_matrix(L, var);
        o.inputs["matrix"] = L.to_string();
        o.data["matrix"] = H.to_string();
        o.assertions = {"det(H) == x_v^(d-D) * homogenization of det(L)"};
        o.text = {H.to_string()};
    } else {
        Polynomial p = parse_polynomial(text);
        p = p.extended(std::max(p.nvars(), var + 1));
        Polynomial h = homogenize(p, var);
        o.inputs["polynomial"] = p.to_string();
        o.data["polynomial"] = h.to_string();
        o.text = {h.to_string()};
    }
    return o;
}

json blocks_json(const DecompositionResult& r) {
    json blocks = json::array();
    for (std::size_t a = 0; a < r.blocks.size(); ++a) {
        json b;
        b["matrix"] = r.blocks[a].to_string();
        b["determinant"] = r.block_dets[a].to_string();
        blocks.push_back(b);
    }
    return blocks;
}

Output cmd_decompose(const std::string& m_text, const std::string& f1_text,
                     const std::string& f2_text, const std::string& factors_text) {
    PolyMatrix M = parse_matrix(m_text);
    Output o;
    o.command = "decompose";
    DecomposeOutcome outcome;
    if (!factors_text.empty()) {
        HypersurfaceSpec spec = parse_factors(factors_text);
        const std::size_t n = std::max(M.nvars(), spec.factors().front().first.nvars());
        M = M.extended(n);
        o.inputs["matrix"] = M.to_string();
        o.inputs["factors"] = spec.to_string();
        outcome = decompose_completely(M, spec);
    } else {
        Polynomial f1 = parse_polynomial(f1_text);
        Polynomial f2 = parse_polynomial(f2_text);
        align(M, f1);
        align(M, f2);
        f1 = f1.extended(M.nvars());
        o.inputs["matrix"] = M.to_string();
        o.inputs["f1"] = f1.to_string();
        o.inputs["f2"] = f2.to_string();
        outcome = decompose(M, f1, f2);
    }
    o.assertions = {"adj(M) == f2*N1 + f1*N2", "A1 + A2 == identity",
                    "A1*A2 == 0 and idempotence", "U1*M*U2 exactly block diagonal",
                    "block determinants proportional to the factors"};
    if (outcome.ok()) {
        const DecompositionResult& r = *outcome.result;
        o.verdict = "Decomposed";
        o.data["U1"] = r.U1.to_string();
        o.data["U2"] = r.U2.to_string();
        o.data["blocks"] = blocks_json(r);
        o.text = {"verdict: Decomposed", "U1 = " + r.U1.to_string(),
                  "U2 = " + r.U2.to_string()};
        for (std::size_t a = 0; a < r.blocks.size(); ++a)
            o.text.push_back("block[" + std::to_string(a) + "] = " + r.blocks[a].to_string() +
                             "  (det = " + r.block_dets[a].to_string() + ")");
    } else {
        o.verdict = "NotDecomposable";
        o.data["witness"] = json::array({outcome.witness.first, outcome.witness.second});
        o.text = {"verdict: NotDecomposable",
                  "witness: (" + std::to_string(outcome.witness.first) + ", " +
                      std::to_string(outcome.witness.second) + ")"};
        if (outcome.partial) {
            o.data["partial_blocks"] = blocks_json(*outcome.partial);
            o.text.push_back("partial blocks: " + std::to_string(outcome.partial->blocks.size()));
        }
    }
    return o;
}

json mg_report_json(const MGReport& rep) {
    json data;
    json factors = json::array();
    for (const auto& rec : rep.factors) {
        json f;
        f["factor"] = rec.factor.to_string();
        f["multiplicity"] = rec.declared_multiplicity;
        f["generic_corank"] = rec.generic_corank;
        f["mg"] = rec.mg;
        factors.push_back(f);
    }
    if (!factors.empty()) data["factors"] = factors;
    json points = json::array();
    for (const auto& rec : rep.points) {
        json p;
        p["point"] = point_text(rec.point);
        p["corank"] = rec.corank;
        p["multiplicity"] = rec.multiplicity;
        p["mg"] = rec.mg;
        points.push_back(p);
    }
    if (!points.empty()) data["points"] = points;
    return data;
}

Output cmd_maxgen(const std::string& m_text, const std::string& factors_text,
                  const std::string& pt_text) {
    PolyMatrix M = parse_matrix(m_text);
    HypersurfaceSpec spec = parse_factors(factors_text);
    std::size_t n = std::max(M.nvars(), spec.factors().front().first.nvars());
    Output o;
    o.command = "maxgen";
    o.inputs["matrix"] = M.to_string();
    o.inputs["factors"] = spec.to_string();
    MGReport rep;
    if (!pt_text.empty()) {
        ProjectivePoint pt = parse_point(pt_text);
        n = std::max(n, pt.nvars());
        M = M.extended(n);
        o.inputs["matrix"] = M.to_string();
        o.inputs["point"] = pt.to_string();
        rep = is_mg_at(M, spec.full_product().extended(n), pt);
        o.assertions = {"corank at the point vs multiplicity"};
    } else {
        M = M.extended(n);
        o.inputs["matrix"] = M.to_string();
        rep = is_generically_mg(M, spec);
        o.assertions = {"det(M) proportional to the declared product",
                        "generic corank per factor vs declared multiplicity"};
    }
    o.verdict = rep.verdict ? "MaximallyGenerated" : "NotMaximallyGenerated";
    o.data = mg_report_json(rep);
    o.text = {"verdict: " + o.verdict};
    for (const auto& rec : rep.factors)
        o.text.push_back("factor " + rec.factor.to_string() + " ^ " +
                         std::to_string(rec.declared_multiplicity) + ": generic corank " +
                         std::to_string(rec.generic_corank) + (rec.mg ? " (mg)" : " (not mg)"));
    for (const auto& rec : rep.points)
        o.text.push_back("point " + point_text(rec.point) + ": corank " +
                         std::to_string(rec.corank) + ", multiplicity " +
                         std::to_string(rec.multiplicity) + (rec.mg ? " (mg)" : " (not mg)"));
    return o;
}

Output cmd_mf(const std::string& m_text, const std::string& factors_text) {
    PolyMatrix M = parse_matrix(m_text);
    HypersurfaceSpec spec = parse_factors(factors_text);
    const std::size_t n = std::max(M.nvars(), spec.factors().front().first.nvars());
    M = M.extended(n);
    PolyMatrix N = matrix_factorization(M, spec);
    Output o;
    o.command = "mf";
    o.inputs["matrix"] = M.to_string();
    o.inputs["factors"] = spec.to_string();
    o.data["N"] = N.to_string();
    o.data["product"] = spec.reduced_product().to_string();
    o.assertions = {"M*N == N*M == (product of the factors)*identity"};
    o.text = {"N = " + N.to_string(), "product = " + spec.reduced_product().to_string()};
    return o;
}

Output cmd_recover(const std::string& a_text, const std::string& f_text) {
    PolyMatrix A = parse_matrix(a_text);
    Polynomial f = parse_polynomial(f_text);
    align(A, f);
    PolyMatrix M = recover_from_adjoint(A, f);
    Output o;
    o.command = "recover";
    o.inputs["adjugate"] = A.to_string();
    o.inputs["f"] = f.to_string();
    o.data["matrix"] = M.to_string();
    o.assertions = {"det(input) proportional to f^(d-1)", "det(result) == f"};
    o.text = {M.to_string()};
    return o;
}

Output cmd_symreduce(const std::string& m_text, const std::string& pt_text) {
    PolyMatrix M = parse_matrix(m_text);
    ProjectivePoint pt = parse_point(pt_text);
    SymmetricReduction red = sym_reduce(M, pt);
    Output o;
    o.command = "symreduce";
    o.inputs["matrix"] = M.to_string();
    o.inputs["point"] = pt.to_string();
    o.data["rank"] = red.rank;
    o.data["D_center"] = rat_list(red.d_center);
    o.data["D"] = red.D.to_string();
    o.data["N"] = red.N.to_string();
    o.data["A"] = red.A.to_string();
    o.assertions = {"A*M*A^T == D (+) N", "det(D (+) N) == det(A)^2 * det(M)",
                    "N symmetric and vanishing at the center",
                    "size of D == rank of M at the center"};
    o.text = {"rank = " + std::to_string(red.rank), "D(center) = " + point_text(red.d_center),
              "D = " + red.D.to_string(), "N = " + red.N.to_string(),
              "A = " + red.A.to_string()};
    return o;
}

json report_json(const HyperbolicityReport& rep) {
    json data;
    data["trials"] = rep.trials_requested;
    data["seed"] = rep.seed;
    data["trials_run"] = rep.per_trial.size();
    json counts = json::array();
    std::size_t resamples = 0;
    for (const auto& rec : rep.per_trial) {
        counts.push_back(rec.distinct_real_roots);
        resamples += rec.resamples;
    }
    data["distinct_root_counts"] = counts;
    data["resamples"] = resamples;
    if (rep.refuted) {
        json w;
        w["trial"] = *rep.witness_trial;
        w["direction"] = rat_list(*rep.witness_direction);
        w["restriction"] = rep.witness_restriction->to_string();
        data["witness"] = w;
    } else {
        data["witness"] = nullptr;
    }
    return data;
}

Output cmd_hyperbolic(const std::string& f_text, const std::string& pt_text,
                      std::size_t trials, std::uint64_t seed) {
    Polynomial f = parse_polynomial(f_text);
    ProjectivePoint pt = parse_point(pt_text);
    f = f.extended(std::max(f.nvars(), pt.nvars()));
    HyperbolicityReport rep = is_hyperbolic_at(f, pt, trials, seed);
    Output o;
    o.command = "hyperbolic";
    o.inputs["polynomial"] = f.to_string();
    o.inputs["point"] = pt.to_string();
    o.inputs["trials"] = trials;
    o.inputs["seed"] = seed;
    o.verdict = rep.verdict();
    o.data = report_json(rep);
    o.assertions = {"per-line Sturm root count is exact"};
    o.text = {"verdict: " + o.verdict, "trials = " + std::to_string(rep.per_trial.size())};
    if (rep.refuted) {
        o.text.push_back("witness trial = " + std::to_string(*rep.witness_trial));
        o.text.push_back("witness direction = " + point_text(*rep.witness_direction));
        o.text.push_back("restriction = " + rep.witness_restriction->to_string());
    }
    return o;
}

Output cmd_pdcoords(const std::string& m_text, const std::string& pt_text) {
    PolyMatrix M = parse_matrix(m_text);
    ProjectivePoint pt = parse_point(pt_text);
    M = M.extended(std::max(M.nvars(), pt.nvars()));
    PDVerdict verdict = pd_verdict(M, pt);
    RatMatrix T = pd_coordinates(M, pt);
    Output o;
    o.command = "pdcoords";
    o.inputs["matrix"] = M.to_string();
    o.inputs["point"] = pt.to_string();
    o.data["T"] = T.to_string();
    o.data["pd_at_point"] = verdict.at_point;
    o.data["pd_at_antipode"] = verdict.at_antipode;
    o.assertions = {"T invertible", "all transformed coefficient matrices PD"};
    o.text = {"T = " + T.to_string(),
              std::string("pd at point: ") + (verdict.at_point ? "true" : "false"),
              std::string("pd at antipode: ") + (verdict.at_antipode ? "true" : "false")};
    return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact determinantal representations of projective hypersurfaces"};
    app.require_subcommand(1);
    bool structured = false;
    app.add_flag("--json", structured, "structured JSON output");

    std::string input, point, f1, f2, factors, fpoly;
    std::size_t var = 0, trials = 256;
    std::uint64_t seed = 0;
    bool symmetric = false;

    auto* det = app.add_subcommand("det", "determinant of a matrix");
    det->add_option("matrix", input, "matrix text or @file")->required();

    auto* adj = app.add_subcommand("adj", "adjugate of a matrix");
    adj->add_option("matrix", input, "matrix text or @file")->required();

    auto* reduce = app.add_subcommand("reduce", "split off the unit block at a point");
    reduce->add_option("matrix", input, "matrix text or @file")->required();
    reduce->add_option("--point", point, "comma-separated rational coordinates")->required();

    auto* linearize = app.add_subcommand("linearize", "reduce all entries to degree <= 1");
    linearize->add_option("matrix", input, "matrix text or @file")->required();
    linearize->add_flag("--symmetric", symmetric, "symmetry-preserving variant");

    auto* homogenize = app.add_subcommand("homogenize", "make affine input homogeneous in a chosen variable");
    homogenize->add_option("input", input, "matrix or polynomial text, or @file")->required();
    homogenize->add_option("--var", var, "homogenization variable index")->required();

    auto* decompose = app.add_subcommand("decompose", "block-diagonalize along a factorization");
    decompose->add_option("matrix", input, "matrix text or @file")->required();
    decompose->add_option("--f1", f1, "first factor");
    decompose->add_option("--f2", f2, "second factor");
    decompose->add_option("--factors", factors, "semicolon-separated 'poly ^ mult' entries");

    auto* maxgen = app.add_subcommand("maxgen", "maximal generation report");
    maxgen->add_option("matrix", input, "matrix text or @file")->required();
    maxgen->add_option("--factors", factors, "declared factorization")->required();
    maxgen->add_option("--point", point, "optional point for the local test");

    auto* mf = app.add_subcommand("mf", "matrix factorization partner");
    mf->add_option("matrix", input, "matrix text or @file")->required();
    mf->add_option("--factors", factors, "declared factorization")->required();

    auto* recover = app.add_subcommand("recover", "rebuild a representation from its adjugate");
    recover->add_option("adjugate", input, "matrix text or @file")->required();
    recover->add_option("--f", fpoly, "defining polynomial")->required();

    auto* symreduce = app.add_subcommand("symreduce", "symmetric congruence reduction at a point");
    symreduce->add_option("matrix", input, "matrix text or @file")->required();
    symreduce->add_option("--point", point, "comma-separated rational coordinates")->required();

    auto* hyperbolic = app.add_subcommand("hyperbolic", "sampled hyperbolicity certificate");
    hyperbolic->add_option("polynomial", input, "polynomial text or @file")->required();
    hyperbolic->add_option("--point", point, "base point")->required();
    hyperbolic->add_option("--trials", trials, "number of sampled lines");
    hyperbolic->add_option("--seed", seed, "sampling seed");

    auto* pdcoords = app.add_subcommand("pdcoords", "coordinates making every coefficient matrix PD");
    pdcoords->add_option("matrix", input, "matrix text or @file")->required();
    pdcoords->add_option("--point", point, "PD base point")->required();

    for (auto* sc : app.get_subcommands({})) sc->fallthrough();

    std::vector<std::string> argv_storage = args;
    std::vector<char*> argv;
    std::string prog = "detrep";
    argv.push_back(prog.data());
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        Output o;
        if (det->parsed()) {
            o = cmd_det(read_input(input));
        } else if (adj->parsed()) {
            o = cmd_adj(read_input(input));
        } else if (reduce->parsed()) {
            o = cmd_reduce(read_input(input), read_input(point));
        } else if (linearize->parsed()) {
            o = cmd_linearize(read_input(input), symmetric);
        } else if (homogenize->parsed()) {
            o = cmd_homogenize(read_input(input), var);
        } else if (decompose->parsed()) {
            const bool pair = !f1.empty() && !f2.empty();
            if (pair == !factors.empty())
                throw InputError("Usage", "decompose needs either --f1 and --f2, or --factors");
            o = cmd_decompose(read_input(input), read_input(f1), read_input(f2),
                              factors.empty() ? factors : read_input(factors));
        } else if (maxgen->parsed()) {
            o = cmd_maxgen(read_input(input), read_input(factors),
                           point.empty() ? point : read_input(point));
        } else if (mf->parsed()) {
            o = cmd_mf(read_input(input), read_input(factors));
        } else if (recover->parsed()) {
            o = cmd_recover(read_input(input), read_input(fpoly));
        } else if (symreduce->parsed()) {
            o = cmd_symreduce(read_input(input), read_input(point));
        } else if (hyperbolic->parsed()) {
            o = cmd_hyperbolic(read_input(input), read_input(point), trials, seed);
        } else if (pdcoords->parsed()) {
            o = cmd_pdcoords(read_input(input), read_input(point));
        }
        emit(o, structured, out);
        return 0;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    } catch (const InternalError& e) {
        err << e.code() << ": " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << e.code() << ": " << e.what();
        if (e.span()) err << " (at " << e.span()->start << ".." << e.span()->end << ")";
        err << "\n";
        return 1;
    }
}

}  // namespace detrep
