#include "thincoalg/semantics.hpp"

#include "thincoalg/thinness.hpp"

namespace thincoalg {

UnfoldResult unfold(SignaturePtr sig, std::span<const Term> roots) {
    if (roots.empty()) throw Error(ErrorKind::invalid_argument, "unfold needs at least one term");
    const Signature& s = *sig;
    std::vector<Term> terms;
    std::unordered_map<Term, StateId> index;
    auto state_of = [&](const Term& t) {
        auto [it, inserted] = index.try_emplace(t, static_cast<StateId>(terms.size()));
        if (inserted) terms.push_back(t);
        return it->second;
    };
    for (const Term& r : roots) state_of(r);

    std::vector<Transition> trans;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const Term t = terms[i];
        if (t.is_f()) {
            trans.push_back(map_elem(s, t.elem(), state_of));
        } else {
            const TermStream& stream = t.stream();
            StateContext head = map_ctx(s, lasso::head(stream), state_of);
            const StateId rest = state_of(Term::g(s, lasso::tail(stream)));
            trans.push_back(plug(s, head, rest));
        }
    }
    Coalgebra c(std::move(sig), std::move(trans));
    return {PointedCoalgebra(std::move(c), 0), std::move(terms), std::move(index)};
}

UnfoldResult unfold(SignaturePtr sig, const Term& t) {
    return unfold(std::move(sig), std::span<const Term>(&t, 1));
}

bool beh_equal_terms(const SignaturePtr& sig, const Term& a, const Term& b) {
    const Term both[] = {a, b};
    UnfoldResult u = unfold(sig, both);
    const std::vector<std::uint32_t> blocks = behavioural_partition(u.pc.coalg);
    return blocks[u.state_of.at(a)] == blocks[u.state_of.at(b)];
}

bool check_constructible_thin(const SignaturePtr& sig, const Term& t) {
    return is_thin(unfold(sig, t).pc).thin;
}

} // namespace thincoalg
