#include "thincoalg/tree_encoding.hpp"

#include <algorithm>
#include <map>

#include "thincoalg/normal_form.hpp"
#include "thincoalg/semantics.hpp"
#include "thincoalg/thinness.hpp"

namespace thincoalg {

bool WordTree::is_prefix_closed() const {
    for (const Word& w : words) {
        if (w.size() > depth) return false;
        if (!w.empty() && !words.count(Word(w.begin(), w.end() - 1))) return false;
    }
    return words.empty() || words.count(Word{});
}

std::string format_word(const Word& w) {
    if (w.empty()) return "ε";
    const bool short_letters = std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x < 10; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!short_letters && i > 0) out += '.';
        out += std::to_string(w[i]);
    }
    return out;
}

bool assert_polynomial(const Signature& sig) { return sig.is_polynomial(); }

namespace {

void require_polynomial(const Signature& sig) {
    if (!sig.is_polynomial())
        throw Error(ErrorKind::not_polynomial, "tree encodings need a polynomial signature");
}

class Encoder {
public:
    // Words of length ≤ depth.
    const std::set<Word>& run(const Term& t, std::size_t depth) {
        auto key = std::make_pair(t, depth);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::set<Word> out{Word{}};
        if (depth > 0) {
            if (t.is_f()) {
                const auto& tuple = t.elem().tuple;
                for (std::uint32_t k = 0; k < tuple.size(); ++k) graft(out, Word{k}, run(tuple[k], depth - 1));
            } else {
                Word spine;
                for (std::size_t n = 0; n <= depth; ++n) {
                    const TermCtx& ctx = lasso::at(t.stream(), n);
                    const std::size_t left = depth - n;
                    out.insert(spine);
                    if (left > 0) {
                        for (std::uint32_t k = 0; k < ctx.arity(); ++k) {
                            if (k == ctx.hole) continue;
                            Word at = spine;
                            at.push_back(k);
                            graft(out, at, run(*ctx.slot(k), left - 1));
                        }
                    }
                    spine.push_back(ctx.hole);
                }
            }
        }
        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

private:
    static void graft(std::set<Word>& out, const Word& at, const std::set<Word>& sub) {
        for (const Word& w : sub) {
            Word x = at;
            x.insert(x.end(), w.begin(), w.end());
            out.insert(std::move(x));
        }
    }

    std::map<std::pair<Term, std::size_t>, std::set<Word>> memo_;
};

} // namespace

WordTree enc(const Signature& sig, const Term& t, std::size_t depth) {
    require_polynomial(sig);
    Encoder e;
    return {depth, e.run(t, depth)};
}

WordTree dom_tree(const PointedCoalgebra& pc, std::size_t depth) {
    require_polynomial(pc.coalg.signature());
    WordTree out{depth, {}};
    std::vector<std::pair<Word, StateId>> level{{Word{}, pc.root}};
    for (std::size_t d = 0; !level.empty(); ++d) {
        std::vector<std::pair<Word, StateId>> next;
        for (auto& [w, s] : level) {
            if (d < depth) {
                const auto& tuple = pc.coalg.transition(s).tuple;
                for (std::uint32_t k = 0; k < tuple.size(); ++k) {
                    Word x = w;
                    x.push_back(k);
                    next.emplace_back(std::move(x), tuple[k]);
                }
            }
            out.words.insert(std::move(w));
        }
        level = std::move(next);
    }
    return out;
}

WordTree dom_tree(const SignaturePtr& sig, const Term& t, std::size_t depth) {
    require_polynomial(*sig);
    return dom_tree(unfold(sig, t).pc, depth);
}

std::uint32_t cb_rank(const PointedCoalgebra& pc) {
    ThinVerdict verdict = is_thin(pc);
    if (!verdict.thin) throw NotThinError(std::move(verdict));
    const Digraph g = pc.coalg.graph();
    const StateId roots[] = {pc.root};
    const SccResult scc = strongly_connected_components(g, roots);
    std::vector<std::uint32_t> value(pc.coalg.size(), 0);
    for (std::uint32_t comp = 0; comp < scc.components.size(); ++comp) {
        const auto& members = scc.components[comp];
        const bool loop = scc.nontrivial(g, comp);
        std::uint32_t best = 0;
        for (StateId v : members)
            for (StateId w : g.out(v))
                if (scc.component_of[w] != comp) best = std::max(best, value[w]);
        for (StateId v : members) value[v] = loop ? best + 1 : best;
    }
    return value[pc.root];
}

} // namespace thincoalg
