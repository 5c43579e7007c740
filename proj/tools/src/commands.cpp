#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <limits>
#include <sstream>

#include <thincoalg/normal_form.hpp>
#include <thincoalg/random.hpp>
#include <thincoalg/semantics.hpp>
#include <thincoalg/thinness.hpp>
#include <thincoalg/tree_encoding.hpp>

namespace cli {

using namespace thincoalg;
namespace fs = std::filesystem;

namespace {

constexpr std::size_t kMaxGeneratedStates = 10'000'000;
constexpr std::uint32_t kMaxTermDepth = 12;
constexpr std::size_t kMaxOracleStates = 16;

// ---------------------------------------------------------------------------
// Inputs
// ---------------------------------------------------------------------------

SignaturePtr stock_signature(const std::string& name) {
    auto suffix = [&](const std::string& prefix) -> std::optional<std::size_t> {
        if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
        const std::string digits = name.substr(prefix.size());
        if (!std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            return std::nullopt;
        return std::stoul(digits);
    };
    if (name == "poly012") return stock::polynomial012();
    if (name == "server") return stock::server();
    if (auto n = suffix("bag")) return stock::bag(*n);
    if (auto n = suffix("cyclic")) return stock::cyclic(*n);
    if (auto n = suffix("poly0to")) {
        std::vector<std::size_t> arities(*n + 1);
        for (std::size_t k = 0; k <= *n; ++k) arities[k] = k;
        return stock::polynomial(arities);
    }
    throw Error(ErrorKind::invalid_argument,
                "'" + name + "' is neither a signature file nor a stock signature "
                "(poly012, poly0toN, server, bagN, cyclicN)");
}

SignaturePtr signature_arg(const std::string& arg, RunReport& r) {
    if (fs::is_regular_file(arg)) {
        r.inputs.push_back({arg, sha256_file(arg)});
        return signature_from_json(read_json_file(arg));
    }
    return stock_signature(arg);
}

struct Input {
    enum class Kind { signature, coalgebra, term };
    std::string path;
    Kind kind = Kind::signature;
    SignaturePtr sig;
    std::optional<LoadedCoalgebra> coalg;
    std::optional<Term> term;
};

Input load(const std::string& path, const Options& o, RunReport& r) {
    r.inputs.push_back({path, sha256_file(path)});
    const Json j = read_json_file(path);
    const fs::path dir = fs::path(path).parent_path();
    SignaturePtr fallback = o.sig ? signature_arg(*o.sig, r) : nullptr;
    Input in;
    in.path = path;
    if (!j.is_object()) throw Error(ErrorKind::parse, path + ": expected a JSON object");
    if (j.contains("ops")) {
        in.kind = Input::Kind::signature;
        in.sig = signature_from_json(j);
    } else if (j.contains("transitions")) {
        in.kind = Input::Kind::coalgebra;
        in.coalg = coalgebra_from_json(j, dir, fallback);
        in.sig = in.coalg->coalg.signature_ptr();
    } else if (j.contains("term") || j.contains("f") || j.contains("g")) {
        in.kind = Input::Kind::term;
        LoadedTerm lt = term_file_from_json(j, dir, fallback);
        in.sig = lt.sig;
        in.term = lt.term;
    } else {
        throw Error(ErrorKind::parse, path + ": not a signature, coalgebra or term document");
    }
    return in;
}

const std::string& single_file(const Options& o) {
    if (o.files.size() != 1) throw Error(ErrorKind::invalid_argument, "expected exactly one input file");
    return o.files.front();
}

PointedCoalgebra pointed(const Input& in, const Options& o) {
    switch (in.kind) {
    case Input::Kind::coalgebra:
        return in.coalg->pointed(o.root);
    case Input::Kind::term:
        if (o.root) throw Error(ErrorKind::invalid_argument, "--root applies to coalgebra inputs only");
        return unfold(in.sig, *in.term).pc;
    case Input::Kind::signature:
        break;
    }
    throw Error(ErrorKind::invalid_argument, in.path + ": expected a coalgebra or term, got a signature");
}

const Term& term_of(const Input& in) {
    if (in.kind != Input::Kind::term) throw Error(ErrorKind::invalid_argument, in.path + ": expected a term");
    return *in.term;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

Json path_json(const FinitePath& p) { return {{"states", p.states}, {"ks", p.ks}}; }

std::string path_text(const FinitePath& p) {
    std::string s = std::to_string(p.states.front());
    for (std::size_t i = 0; i < p.ks.size(); ++i)
        s += " -" + std::to_string(p.ks[i]) + "-> " + std::to_string(p.states[i + 1]);
    return s;
}

Json witness_json(const ThinWitness& w) {
    return {{"access", path_json(w.access)}, {"cycle1", path_json(w.cycle1)}, {"cycle2", path_json(w.cycle2)}};
}

void print_witness(std::ostream& out, const ThinWitness& w) {
    out << "  access: " << path_text(w.access) << '\n'
        << "  cycle 1: " << path_text(w.cycle1) << '\n'
        << "  cycle 2: " << path_text(w.cycle2) << '\n';
}

// Records a non-thin verdict; the command then exits 1.
void report_not_thin(const NotThinError& e, RunReport& r, std::ostream& out) {
    r.result = {{"thin", false}};
    if (e.verdict().witness) r.result["witness"] = witness_json(*e.verdict().witness);
    out << "not thin\n";
    if (e.verdict().witness) print_witness(out, *e.verdict().witness);
    r.exit_code = kNegative;
}

Json rank_json(const Rank& rank, TermKind kind) {
    return {{"rank", to_string(rank)},
            {"major", rank.major},
            {"minor", rank.minor},
            {"kind", kind == TermKind::g ? "G" : "F"}};
}

std::string transition_text(const Signature& sig, const Transition& t) {
    std::string s = sig.name(t.op);
    if (t.tuple.empty()) return s;
    s += '(';
    for (std::size_t i = 0; i < t.tuple.size(); ++i) s += (i ? ", " : "") + std::to_string(t.tuple[i]);
    return s + ')';
}

std::string class_name(PathCountClass::Kind k) {
    switch (k) {
    case PathCountClass::Kind::zero: return "zero";
    case PathCountClass::Kind::finite: return "finite";
    case PathCountClass::Kind::countably_infinite: return "countably_infinite";
    case PathCountClass::Kind::uncountable: return "uncountable";
    }
    return "zero";
}

} // namespace

// ---------------------------------------------------------------------------

void cmd_validate(const Options& o, RunReport& r, std::ostream& out) {
    if (o.files.empty()) throw Error(ErrorKind::invalid_argument, "expected at least one input file");
    std::vector<std::string> files = o.files;
    std::sort(files.begin(), files.end());
    Json instances = Json::array();
    for (const std::string& f : files) {
        Input in = load(f, o, r);
        Json item = {{"path", f}};
        switch (in.kind) {
        case Input::Kind::signature:
            item["kind"] = "signature";
            item["ops"] = in.sig->size();
            out << f << ": signature with " << in.sig->size() << " ops\n";
            break;
        case Input::Kind::coalgebra:
            item["kind"] = "coalgebra";
            item["states"] = in.coalg->coalg.size();
            item["edges"] = in.coalg->coalg.edge_count();
            out << f << ": coalgebra with " << in.coalg->coalg.size() << " states\n";
            break;
        case Input::Kind::term:
            item["kind"] = "term";
            item["size"] = in.term->size();
            item["rank"] = to_string(in.term->rank());
            out << f << ": term of size " << in.term->size() << ", rank " << to_string(in.term->rank()) << '\n';
            break;
        }
        instances.push_back(std::move(item));
    }
    r.result = {{"valid", true}, {"instances", instances}};
}

void cmd_check_thin(const Options& o, RunReport& r, std::ostream& out) {
    if (o.files.empty()) throw Error(ErrorKind::invalid_argument, "expected at least one input file");
    if (o.expect && *o.expect != "thin" && *o.expect != "nonthin")
        throw Error(ErrorKind::invalid_argument, "--expect takes 'thin' or 'nonthin'");
    std::vector<std::string> files = o.files;
    std::sort(files.begin(), files.end());
    Json instances = Json::array();
    bool all_thin = true, all_expected = true, oracle_ok = true;
    for (const std::string& f : files) {
        Input in = load(f, o, r);
        const PointedCoalgebra pc = pointed(in, o);
        const ThinVerdict v = is_thin(pc);
        Json item = {{"path", f}, {"root", pc.root}, {"thin", v.thin}};
        out << f << ": " << (v.thin ? "thin" : "not thin") << '\n';
        if (v.witness) {
            item["witness"] = witness_json(*v.witness);
            print_witness(out, *v.witness);
        }
        if (o.oracle) {
            if (pc.coalg.size() > kMaxOracleStates) {
                throw Error(ErrorKind::bound_exceeded, "--oracle is limited to coalgebras of at most " +
                                                           std::to_string(kMaxOracleStates) + " states");
            }
            const bool agrees = oracle_is_thin(pc, 2 * pc.coalg.size()) == v.thin;
            item["oracle_agrees"] = agrees;
            out << "  oracle: " << (agrees ? "agrees" : "DISAGREES") << '\n';
            oracle_ok = oracle_ok && agrees;
        }
        if (o.expect) {
            const bool met = v.thin == (*o.expect == "thin");
            item["expected"] = *o.expect;
            item["as_expected"] = met;
            all_expected = all_expected && met;
        }
        all_thin = all_thin && v.thin;
        instances.push_back(std::move(item));
    }
    r.result = {{"instances", instances}};
    const bool ok = (o.expect ? all_expected : all_thin) && oracle_ok;
    r.exit_code = ok ? kOk : kNegative;
}

void cmd_paths(const Options& o, RunReport& r, std::ostream& out) {
    Input in = load(single_file(o), o, r);
    const PointedCoalgebra pc = pointed(in, o);
    const std::size_t depth = o.depth.value_or(4);
    Json counts = Json::array();
    for (std::size_t d = 0; d <= depth; ++d) {
        const std::string c = count_paths(pc, d).str();
        counts.push_back(c);
        out << "length " << d << ": " << c << '\n';
    }
    const PathCountClass cls = count_infinite_paths_class(pc);
    Json inf = {{"class", class_name(cls.kind)}};
    if (cls.kind == PathCountClass::Kind::finite) inf["count"] = cls.count.str();
    out << "infinite paths: " << to_string(cls) << '\n';
    r.result = {{"depth", depth}, {"counts", counts}, {"infinite_paths", inf}};
}

void cmd_rank(const Options& o, RunReport& r, std::ostream& out) {
    Input in = load(single_file(o), o, r);
    if (in.kind == Input::Kind::term) {
        const Term n = normalize(in.sig, *in.term);
        r.result = rank_json(n.rank(), n.kind());
        r.result["input_rank"] = to_string(in.term->rank());
        out << to_string(n.rank()) << '\n';
        return;
    }
    try {
        const PointedCoalgebra pc = pointed(in, o);
        const StateRankTable table = state_ranks(pc);
        const StateRank& sr = table.at(pc.root);
        r.result = rank_json(sr.rank, sr.kind);
        out << to_string(sr.rank) << '\n';
    } catch (const NotThinError& e) {
        report_not_thin(e, r, out);
    }
}

void cmd_normalize(const Options& o, RunReport& r, std::ostream& out) {
    Input in = load(single_file(o), o, r);
    std::optional<Term> n;
    try {
        n = in.kind == Input::Kind::term ? normalize(in.sig, *in.term) : extract_normal(pointed(in, o));
    } catch (const NotThinError& e) {
        report_not_thin(e, r, out);
        return;
    }
    r.result = {{"normal", term_to_json(*in.sig, *n)},
                {"text", format_term(*in.sig, *n)},
                {"rank", to_string(n->rank())}};
    out << format_term(*in.sig, *n) << '\n';
    if (o.oracle) {
        const Term& t = in.term ? *in.term : *n;
        const std::size_t bound = std::max<std::size_t>(t.size(), n->size());
        const bool agrees = brute_force_normal(in.sig, t, bound) == *n;
        r.result["oracle_agrees"] = agrees;
        out << "oracle: " << (agrees ? "agrees" : "DISAGREES") << '\n';
        if (!agrees) r.exit_code = kNegative;
    }
}

void cmd_eq(const Options& o, RunReport& r, std::ostream& out) {
    if (o.files.size() != 2) throw Error(ErrorKind::invalid_argument, "eq takes exactly two input files");
    Input a = load(o.files[0], o, r);
    Input b = load(o.files[1], o, r);
    const bool equal = beh_equal(pointed(a, o), pointed(b, o));
    r.result = {{"equal", equal}};
    out << (equal ? "equal" : "different") << '\n';
    r.exit_code = equal ? kOk : kNegative;
}

void cmd_unfold(const Options& o, RunReport& r, std::ostream& out) {
    Input in = load(single_file(o), o, r);
    const UnfoldResult u = unfold(in.sig, term_of(in));
    Json terms = Json::array();
    for (StateId s = 0; s < u.pc.coalg.size(); ++s) {
        const std::string text = format_term(*in.sig, u.state_terms[s]);
        terms.push_back(text);
        out << s << " = " << transition_text(*in.sig, u.pc.coalg.transition(s)) << "    from " << text << '\n';
    }
    r.result = {{"coalgebra", coalgebra_to_json(u.pc.coalg, u.pc.root)}, {"state_terms", terms}};
}

void cmd_encode(const Options& o, RunReport& r, std::ostream& out) {
    Input in = load(single_file(o), o, r);
    const std::size_t depth = o.depth.value_or(3);
    const WordTree t = in.kind == Input::Kind::term ? enc(*in.sig, *in.term, depth) : dom_tree(pointed(in, o), depth);
    Json words = Json::array();
    for (const Word& w : t.words) {
        words.push_back(format_word(w));
        out << format_word(w) << '\n';
    }
    r.result = {{"depth", depth}, {"words", words}};
}

void cmd_cb_rank(const Options& o, RunReport& r, std::ostream& out) {
    Input in = load(single_file(o), o, r);
    if (!assert_polynomial(*in.sig))
        throw Error(ErrorKind::not_polynomial, "cb-rank requires a polynomial signature");
    try {
        const PointedCoalgebra pc =
            in.kind == Input::Kind::term ? minimize(unfold(in.sig, *in.term).pc).pc : pointed(in, o);
        const std::uint32_t cb = cb_rank(pc);
        r.result = {{"cb_rank", cb}};
        out << cb << '\n';
    } catch (const NotThinError& e) {
        report_not_thin(e, r, out);
    }
}

void cmd_gen(const Options& o, RunReport& r, std::ostream& out) {
    const SignaturePtr sig = signature_arg(o.sig.value_or("poly012"), r);
    Rng rng(o.seed);
    Json doc;
    if (o.kind == "coalgebra") {
        const std::size_t states = o.size.value_or(10);
        if (states == 0 || states > kMaxGeneratedStates) {
            throw Error(ErrorKind::bound_exceeded,
                        "coalgebra size must be in 1.." + std::to_string(kMaxGeneratedStates));
        }
        CoalgebraGenOptions opts;
        opts.mean_degree = o.mean_degree;
        if (o.thin_shape) opts.shape = CoalgebraGenOptions::Shape::thin;
        const Coalgebra c = random_coalgebra(sig, states, rng, opts);
        doc = coalgebra_to_json(c, 0);
        r.result = {{"kind", "coalgebra"}, {"states", c.size()}, {"edges", c.edge_count()}};
    } else if (o.kind == "term") {
        const std::size_t depth = o.size.value_or(3);
        if (depth > kMaxTermDepth)
            throw Error(ErrorKind::bound_exceeded, "term depth must be at most " + std::to_string(kMaxTermDepth));
        TermGenOptions opts;
        opts.max_depth = static_cast<std::uint32_t>(depth);
        const Term t = random_term(*sig, rng, opts);
        doc = term_file_to_json(*sig, t);
        r.result = {{"kind", "term"}, {"size", t.size()}, {"rank", to_string(t.rank())}};
    } else {
        throw Error(ErrorKind::invalid_argument, "--kind takes 'coalgebra' or 'term'");
    }
    r.result["seed"] = o.seed;
    const std::string text = doc.dump(2) + "\n";
    if (o.output) {
        std::ofstream f(*o.output, std::ios::binary);
        if (!f) throw Error(ErrorKind::invalid_argument, "cannot write '" + *o.output + "'");
        f << text;
        f.close();
        r.result["output"] = *o.output;
        r.result["sha256"] = sha256_file(*o.output);
        out << "wrote " << *o.output << '\n';
    } else if (o.json) {
        r.result["document"] = doc;
    } else {
        out << text;
    }
}

void cmd_bench(const Options& o, RunReport& r, std::ostream& out) {
    const SignaturePtr sig = signature_arg(o.sig.value_or("poly0to6"), r);
    const std::size_t states = o.size.value_or(100000);
    if (states == 0 || states > kMaxGeneratedStates)
        throw Error(ErrorKind::bound_exceeded, "state count must be in 1.." + std::to_string(kMaxGeneratedStates));
    if (o.runs == 0) throw Error(ErrorKind::invalid_argument, "--runs must be positive");
    Rng rng(o.seed);
    CoalgebraGenOptions opts;
    opts.mean_degree = o.mean_degree.value_or(3.0);
    const PointedCoalgebra pc(random_coalgebra(sig, states, rng, opts), 0);
    std::vector<double> ms;
    bool thin = false;
    for (std::size_t i = 0; i < o.runs; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        thin = is_thin(pc).thin;
        ms.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    std::sort(ms.begin(), ms.end());
    r.result = {{"states", pc.coalg.size()},
                {"edges", pc.coalg.edge_count()},
                {"mean_degree", *opts.mean_degree},
                {"seed", o.seed},
                {"runs", o.runs},
                {"thin", thin},
                {"median_ms", ms[ms.size() / 2]},
                {"min_ms", ms.front()},
                {"max_ms", ms.back()}};
    out << pc.coalg.size() << " states, " << pc.coalg.edge_count() << " edges: median " << ms[ms.size() / 2]
        << " ms over " << o.runs << " runs (" << (thin ? "thin" : "not thin") << ")\n";
}

} // namespace cli
