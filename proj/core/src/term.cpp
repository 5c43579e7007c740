#include "thincoalg/term.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace thincoalg {

std::string to_string(const Rank& r) {
    return "(" + std::to_string(r.major) + "," + std::to_string(r.minor) + ")";
}

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::size_t hash_ctx(std::size_t h, const TermCtx& c) {
    h = mix(h, c.op);
    h = mix(h, c.hole);
    for (const Term& s : c.sides) h = mix(h, s.hash());
    return mix(h, 0x51);
}

struct Entry {
    const TermNode* raw;
    std::weak_ptr<const TermNode> weak;
};

// Never destroyed, so terms that outlive static destruction can still release themselves.
struct InternTable {
    std::mutex mutex;
    std::unordered_multimap<std::size_t, Entry> entries;
};

InternTable& table() {
    static InternTable* t = new InternTable;
    return *t;
}

struct NodeDeleter {
    void operator()(const TermNode* p) const {
        {
            InternTable& tab = table();
            std::lock_guard lock(tab.mutex);
            auto [first, last] = tab.entries.equal_range(p->hash);
            for (auto it = first; it != last; ++it) {
                if (it->second.raw == p) {
                    tab.entries.erase(it);
                    break;
                }
            }
        }
        delete p;
    }
};

bool same_shape(const TermNode& a, const TermNode& b) {
    if (a.kind != b.kind) return false;
    return a.kind == TermKind::f ? a.elem == b.elem : a.stream == b.stream;
}

} // namespace

Term Term::intern(TermNode node) {
    if (node.kind == TermKind::f) {
        Rank r{0, 1};
        std::uint64_t size = 1;
        std::size_t h = mix(0x46, node.elem.op);
        for (const Term& c : node.elem.tuple) {
            r.major = std::max(r.major, c.rank().major);
            r.minor = std::max(r.minor, c.rank().minor + 1);
            size = sat_add(size, c.size());
            h = mix(h, c.hash());
        }
        node.rank = r;
        node.size = size;
        node.hash = h;
    } else {
        Rank r{1, 0};
        std::uint64_t size = 1;
        std::size_t h = 0x47;
        for (const auto* part : {&node.stream.prefix, &node.stream.period}) {
            for (const TermCtx& c : *part) {
                size = sat_add(size, 1);
                for (const Term& s : c.sides) {
                    r.major = std::max(r.major, s.rank().major + 1);
                    size = sat_add(size, s.size());
                }
                h = hash_ctx(h, c);
            }
            h = mix(h, 0x7c);
        }
        node.rank = r;
        node.size = size;
        node.hash = h;
    }

    InternTable& tab = table();
    std::lock_guard lock(tab.mutex);
    auto [first, last] = tab.entries.equal_range(node.hash);
    for (auto it = first; it != last; ++it) {
        if (auto sp = it->second.weak.lock(); sp && same_shape(*sp, node)) return Term(std::move(sp));
    }
    const std::size_t h = node.hash;
    std::shared_ptr<const TermNode> sp(new TermNode(std::move(node)), NodeDeleter{});
    tab.entries.emplace(h, Entry{sp.get(), sp});
    return Term(std::move(sp));
}

Term Term::f(const Signature& sig, OpIndex op, std::vector<Term> children) {
    TermNode node;
    node.kind = TermKind::f;
    node.elem = canonical_tuple(sig, op, std::move(children));
    return intern(std::move(node));
}

Term Term::f(const Signature& sig, TermElem elem) {
    return f(sig, elem.op, std::move(elem.tuple));
}

Term Term::g(const Signature& sig, std::vector<TermCtx> prefix, std::vector<TermCtx> period) {
    return g(sig, TermStream{std::move(prefix), std::move(period)});
}

Term Term::g(const Signature& sig, TermStream stream) {
    for (auto* part : {&stream.prefix, &stream.period})
        for (TermCtx& c : *part) c = canonical_context(sig, c.op, c.hole, std::move(c.sides));
    TermNode node;
    node.kind = TermKind::g;
    node.stream = lasso::canonicalize(std::move(stream));
    return intern(std::move(node));
}

TermKind Term::kind() const { return node_->kind; }

const TermElem& Term::elem() const {
    if (node_->kind != TermKind::f) throw Error(ErrorKind::invalid_argument, "term is not an F-node");
    return node_->elem;
}

const TermStream& Term::stream() const {
    if (node_->kind != TermKind::g) throw Error(ErrorKind::invalid_argument, "term is not a G-node");
    return node_->stream;
}

Rank Term::rank() const { return node_->rank; }
std::uint64_t Term::size() const { return node_->size; }
std::size_t Term::hash() const { return node_->hash; }

std::strong_ordering operator<=>(const Term& a, const Term& b) { return term_compare(a, b); }

std::strong_ordering term_compare(const Term& a, const Term& b) {
    if (a.id() == b.id()) return std::strong_ordering::equal;
    if (a.kind() != b.kind())
        return a.kind() == TermKind::f ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_f()) return a.elem() <=> b.elem();
    return a.stream() <=> b.stream();
}

std::size_t interned_term_count() {
    InternTable& tab = table();
    std::lock_guard lock(tab.mutex);
    return tab.entries.size();
}

std::vector<Term> subterms(const Term& t) {
    if (t.is_f()) return base(t.elem());
    std::vector<Term> out;
    for (const auto* part : {&t.stream().prefix, &t.stream().period})
        for (const TermCtx& c : *part) out.insert(out.end(), c.sides.begin(), c.sides.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Term unary_omega(const Signature& sig, OpIndex op) {
    if (sig.arity(op) != 1) {
        throw Error(ErrorKind::invalid_argument,
                    "operation '" + sig.name(op) + "' is not unary");
    }
    return Term::g(sig, {}, {TermCtx{op, 0, {}}});
}

Term unfold_step(const Signature& sig, const Term& g) {
    const TermStream& s = g.stream();
    Term rest = Term::g(sig, lasso::tail(s));
    return Term::f(sig, plug(sig, lasso::head(s), std::move(rest)));
}

std::vector<Term> fold_candidates(const Signature& sig, const Term& f) {
    std::vector<Term> out;
    for (const auto& [ctx, child] : decompositions(sig, f.elem()))
        if (child.is_g()) out.push_back(Term::g(sig, lasso::prepend(ctx, child.stream())));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

void collect_positions(const Term& t, Position& cur, std::vector<Position>& out) {
    out.push_back(cur);
    if (t.is_f()) {
        const auto& tuple = t.elem().tuple;
        for (std::uint32_t i = 0; i < tuple.size(); ++i) {
            cur.push_back({PathStep::Part::child, i, 0});
            collect_positions(tuple[i], cur, out);
            cur.pop_back();
        }
        return;
    }
    auto walk = [&](const std::vector<TermCtx>& part, PathStep::Part tag) {
        for (std::uint32_t i = 0; i < part.size(); ++i) {
            for (std::uint32_t j = 0; j < part[i].sides.size(); ++j) {
                cur.push_back({tag, i, j});
                collect_positions(part[i].sides[j], cur, out);
                cur.pop_back();
            }
        }
    };
    walk(t.stream().prefix, PathStep::Part::prefix);
    walk(t.stream().period, PathStep::Part::period);
}

const Term& child_at(const Term& t, const PathStep& step) {
    auto bad = [] { return Error(ErrorKind::index_out_of_range, "position does not exist in term"); };
    if (step.part == PathStep::Part::child) {
        if (!t.is_f() || step.index >= t.elem().tuple.size()) throw bad();
        return t.elem().tuple[step.index];
    }
    if (!t.is_g()) throw bad();
    const auto& part = step.part == PathStep::Part::prefix ? t.stream().prefix : t.stream().period;
    if (step.index >= part.size() || step.side >= part[step.index].sides.size()) throw bad();
    return part[step.index].sides[step.side];
}

} // namespace

std::vector<Position> positions(const Term& t) {
    std::vector<Position> out;
    Position cur;
    collect_positions(t, cur, out);
    return out;
}

Term subterm_at(const Term& t, const Position& pos) {
    Term cur = t;
    for (const PathStep& step : pos) cur = child_at(cur, step);
    return cur;
}

namespace {

Term replace_from(const Signature& sig, const Term& t, const Position& pos, std::size_t i,
                  const Term& replacement) {
    if (i == pos.size()) return replacement;
    const PathStep& step = pos[i];
    Term child = replace_from(sig, child_at(t, step), pos, i + 1, replacement);
    if (step.part == PathStep::Part::child) {
        std::vector<Term> tuple = t.elem().tuple;
        tuple[step.index] = std::move(child);
        return Term::f(sig, t.elem().op, std::move(tuple));
    }
    TermStream s = t.stream();
    auto& part = step.part == PathStep::Part::prefix ? s.prefix : s.period;
    part[step.index].sides[step.side] = std::move(child);
    return Term::g(sig, std::move(s));
}

} // namespace

Term replace_at(const Signature& sig, const Term& t, const Position& pos, const Term& replacement) {
    return replace_from(sig, t, pos, 0, replacement);
}

} // namespace thincoalg
