#include "thincoalg/io.hpp"

#include <fstream>
#include <sstream>

namespace thincoalg {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::parse, what); }

const Json& member(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where + ": missing \"" + key + "\"");
    return *it;
}

std::uint64_t natural(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || (!j.is_number_unsigned() && j.get<std::int64_t>() < 0))
        fail(where + ": expected a non-negative integer");
    return j.get<std::uint64_t>();
}

const Json& array(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where + ": expected an array");
    return j;
}

std::string text(const Json& j, const std::string& where) {
    if (!j.is_string()) fail(where + ": expected a string");
    return j.get<std::string>();
}

} // namespace

Json parse_json(const std::string& s) {
    try {
        return Json::parse(s);
    } catch (const Json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        fail("malformed JSON in '" + path.string() + "': " + e.what());
    }
}

Json signature_to_json(const Signature& sig) {
    Json ops = Json::array();
    for (const OperationSymbol& op : sig.spec().ops)
        ops.push_back({{"id", op.id}, {"arity", op.arity}, {"generators", op.generators}});
    return {{"ops", ops}};
}

SignatureSpec signature_spec_from_json(const Json& j) {
    SignatureSpec spec;
    const Json& ops = array(member(j, "ops", "signature"), "signature.ops");
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const std::string where = "signature.ops[" + std::to_string(i) + "]";
        OperationSymbol op;
        op.id = text(member(ops[i], "id", where), where + ".id");
        op.arity = natural(member(ops[i], "arity", where), where + ".arity");
        if (auto it = ops[i].find("generators"); it != ops[i].end()) {
            for (const Json& g : array(*it, where + ".generators")) {
                Permutation p;
                for (const Json& x : array(g, where + ".generators"))
                    p.push_back(static_cast<std::uint32_t>(natural(x, where + ".generators")));
                op.generators.push_back(std::move(p));
            }
        }
        spec.ops.push_back(std::move(op));
    }
    return spec;
}

SignaturePtr signature_from_json(const Json& j) { return make_signature(signature_spec_from_json(j)); }

SignaturePtr resolve_signature(const Json& j, const std::filesystem::path& base_dir) {
    if (j.is_string()) {
        std::filesystem::path p = j.get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        return signature_from_json(read_json_file(p));
    }
    return signature_from_json(j);
}

PointedCoalgebra LoadedCoalgebra::pointed(std::optional<StateId> override_root) const {
    StateId r = override_root ? *override_root : root.value_or(0);
    return PointedCoalgebra(coalg, r);
}

Json coalgebra_to_json(const Coalgebra& c, std::optional<StateId> root) {
    const Signature& sig = c.signature();
    Json trans = Json::array();
    for (const Transition& t : c.transitions()) trans.push_back({{"op", sig.name(t.op)}, {"tuple", t.tuple}});
    Json j = {{"signature", signature_to_json(sig)}, {"states", c.size()}, {"transitions", trans}};
    if (root) j["root"] = *root;
    return j;
}

LoadedCoalgebra coalgebra_from_json(const Json& j, const std::filesystem::path& base_dir,
                                    SignaturePtr fallback) {
    if (!j.is_object()) fail("coalgebra: expected an object");
    SignaturePtr sig = j.contains("signature") ? resolve_signature(j["signature"], base_dir) : fallback;
    if (!sig) fail("coalgebra: missing \"signature\"");
    const std::uint64_t n = natural(member(j, "states", "coalgebra"), "coalgebra.states");
    const Json& ts = array(member(j, "transitions", "coalgebra"), "coalgebra.transitions");
    if (ts.size() != n) {
        throw Error(ErrorKind::length_mismatch, "coalgebra declares " + std::to_string(n) +
                                                    " states but lists " + std::to_string(ts.size()) +
                                                    " transitions");
    }
    std::vector<Transition> trans;
    trans.reserve(n);
    for (std::size_t s = 0; s < ts.size(); ++s) {
        const std::string where = "coalgebra.transitions[" + std::to_string(s) + "]";
        const OpIndex op = sig->index_of(text(member(ts[s], "op", where), where + ".op"));
        std::vector<StateId> tuple;
        for (const Json& x : array(member(ts[s], "tuple", where), where + ".tuple")) {
            const std::uint64_t v = natural(x, where + ".tuple");
            if (v >= n) {
                throw Error(ErrorKind::index_out_of_range, where + ": state " + std::to_string(v) +
                                                               " out of range for " +
                                                               std::to_string(n) + " states");
            }
            tuple.push_back(static_cast<StateId>(v));
        }
        trans.push_back({op, std::move(tuple)});
    }
    std::optional<StateId> root;
    if (j.contains("root")) {
        const std::uint64_t r = natural(j["root"], "coalgebra.root");
        if (r >= n) throw Error(ErrorKind::index_out_of_range, "coalgebra.root out of range");
        root = static_cast<StateId>(r);
    }
    return {Coalgebra(std::move(sig), std::move(trans)), root};
}

namespace {

Json ctx_to_json(const Signature& sig, const TermCtx& c) {
    Json sides = Json::array();
    for (const Term& s : c.sides) sides.push_back(term_to_json(sig, s));
    return {{"op", sig.name(c.op)}, {"hole", c.hole}, {"sides", sides}};
}

TermCtx ctx_from_json(const Signature& sig, const Json& j, const std::string& where) {
    const OpIndex op = sig.index_of(text(member(j, "op", where), where + ".op"));
    const std::uint64_t hole = natural(member(j, "hole", where), where + ".hole");
    if (hole >= sig.arity(op)) {
        throw Error(ErrorKind::index_out_of_range, where + ": hole " + std::to_string(hole) +
                                                       " out of range for '" + sig.name(op) + "'");
    }
    std::vector<Term> sides;
    for (const Json& s : array(member(j, "sides", where), where + ".sides"))
        sides.push_back(term_from_json(sig, s));
    return canonical_context(sig, op, static_cast<std::uint32_t>(hole), std::move(sides));
}

} // namespace

Json term_to_json(const Signature& sig, const Term& t) {
    if (t.is_f()) {
        Json children = Json::array();
        for (const Term& c : t.elem().tuple) children.push_back(term_to_json(sig, c));
        return {{"f", {{"op", sig.name(t.elem().op)}, {"children", children}}}};
    }
    Json prefix = Json::array(), period = Json::array();
    for (const TermCtx& c : t.stream().prefix) prefix.push_back(ctx_to_json(sig, c));
    for (const TermCtx& c : t.stream().period) period.push_back(ctx_to_json(sig, c));
    return {{"g", {{"prefix", prefix}, {"period", period}}}};
}

Term term_from_json(const Signature& sig, const Json& j) {
    if (!j.is_object() || j.size() != 1) fail("term: expected an object with a single \"f\" or \"g\" member");
    if (j.contains("f")) {
        const Json& f = j["f"];
        const OpIndex op = sig.index_of(text(member(f, "op", "term.f"), "term.f.op"));
        std::vector<Term> children;
        for (const Json& c : array(member(f, "children", "term.f"), "term.f.children"))
            children.push_back(term_from_json(sig, c));
        return Term::f(sig, op, std::move(children));
    }
    if (j.contains("g")) {
        const Json& g = j["g"];
        std::vector<TermCtx> prefix, period;
        if (g.contains("prefix"))
            for (const Json& c : array(g["prefix"], "term.g.prefix")) prefix.push_back(ctx_from_json(sig, c, "term.g.prefix"));
        for (const Json& c : array(member(g, "period", "term.g"), "term.g.period"))
            period.push_back(ctx_from_json(sig, c, "term.g.period"));
        if (period.empty()) fail("term.g.period: must be nonempty");
        return Term::g(sig, std::move(prefix), std::move(period));
    }
    fail("term: expected \"f\" or \"g\"");
}

Json term_file_to_json(const Signature& sig, const Term& t) {
    return {{"signature", signature_to_json(sig)}, {"term", term_to_json(sig, t)}};
}

LoadedTerm term_file_from_json(const Json& j, const std::filesystem::path& base_dir, SignaturePtr fallback) {
    if (j.is_object() && j.contains("term")) {
        SignaturePtr sig = j.contains("signature") ? resolve_signature(j["signature"], base_dir) : fallback;
        if (!sig) fail("term file: missing \"signature\"");
        Term t = term_from_json(*sig, j["term"]);
        return {std::move(sig), std::move(t)};
    }
    if (!fallback) fail("term file: bare term needs a signature (--sig)");
    Term t = term_from_json(*fallback, j);
    return {std::move(fallback), std::move(t)};
}

namespace {

std::string format_ctx(const Signature& sig, const TermCtx& c) {
    std::string out = sig.name(c.op) + "(";
    for (std::size_t k = 0; k < c.arity(); ++k) {
        if (k > 0) out += ", ";
        const Term* s = c.slot(k);
        out += s == nullptr ? "_" : format_term(sig, *s);
    }
    return out + ")";
}

} // namespace

std::string format_term(const Signature& sig, const Term& t) {
    if (t.is_f()) {
        std::string out = sig.name(t.elem().op);
        if (t.elem().tuple.empty()) return out;
        out += "(";
        for (std::size_t k = 0; k < t.elem().tuple.size(); ++k) {
            if (k > 0) out += ", ";
            out += format_term(sig, t.elem().tuple[k]);
        }
        return out + ")";
    }
    std::string out;
    for (const TermCtx& c : t.stream().prefix) out += format_ctx(sig, c) + "·";
    out += "(";
    for (std::size_t i = 0; i < t.stream().period.size(); ++i) {
        if (i > 0) out += "·";
        out += format_ctx(sig, t.stream().period[i]);
    }
    return out + ")^ω";
}

} // namespace thincoalg
