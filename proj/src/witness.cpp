#include "qaut/witness.hpp"

#include <stdexcept>
#include <string>

namespace qaut {

namespace {

std::string law_text(const char* what, int a, int s1, int b, int s2) {
    return std::string(what) + ": O_" + std::to_string(a) + "^" + std::to_string(s1) + " ∩ O_" +
           std::to_string(b) + "^" + std::to_string(s2);
}

}  // namespace

std::optional<std::pair<int, int>> find_nosym2_witness(const OrbitalStructure& orb) {
    for (int s1 = 1; s1 <= orb.r; ++s1)
        for (int s2 = 1; s2 <= orb.r; ++s2)
            if (orb.fiber_intersection(0, s1, 1, s2).size() == 1) return std::make_pair(s1, s2);
    return std::nullopt;
}

SwapWitness extend_witness(const OrbitalStructure& orb, std::pair<int, int> singleton) {
    if (orb.coset_reps.empty())
        throw std::invalid_argument("extend_witness: needs a circulant orbital structure");
    auto base = orb.fiber_intersection(0, singleton.first, 1, singleton.second);
    if (base.size() != 1)
        throw std::invalid_argument("extend_witness: given pair is not a singleton intersection");
    SwapWitness w;
    w.records.push_back(WitnessRecord{});  // s = 0 identity record
    for (int s = 1; s <= orb.r; ++s) {
        const int ys = static_cast<int>(orb.coset_reps[s - 1]);
        bool found = false;
        for (int t1 = 1; t1 <= orb.r && !found; ++t1)
            for (int t2 = 1; t2 <= orb.r && !found; ++t2) {
                auto inter = orb.fiber_intersection(0, t1, ys, t2);
                if (inter.size() == 1) {
                    WitnessRecord rec;
                    rec.s = s;
                    rec.j = ys;
                    rec.k = inter[0];
                    rec.t = {t1, t2, s, t2, t1};
                    w.records.push_back(rec);
                    found = true;
                }
            }
        if (!found)
            throw std::logic_error(
                "extend_witness: no singleton intersection at coset base " + std::to_string(ys) +
                " although one exists at base 1; this contradicts the singleton transport "
                "law for circulant p-graphs; refusing to continue");
    }
    validate_witness(orb, w);
    return w;
}

std::optional<SwapWitness> find_nosymG_witness(const OrbitalStructure& orb) {
    const int n = orb.n, r = orb.r;
    SwapWitness w;
    w.records.push_back(WitnessRecord{});
    for (int s = 1; s <= r; ++s) {
        bool found = false;
        WitnessRecord rec;
        for (int j : orb.fiber(0, s)) {
            for (int k = 0; k < n && !found; ++k) {
                // law 1: O_0^{t1} ∩ O_j^{t2} = {k}, lexicographic (t1,t2)
                int t1 = -1, t2 = -1;
                for (int a = 0; a <= r && t1 < 0; ++a) {
                    if (orb.label(k, 0) != a) continue;  // k must sit in O_0^a
                    for (int b = 0; b <= r; ++b)
                        if (orb.fiber_intersection(0, a, j, b) == std::vector<int>{k}) {
                            t1 = a;
                            t2 = b;
                            break;
                        }
                }
                if (t1 < 0) continue;
                // law 2: O_0^s ∩ O_k^{t4} = {j}
                int t4 = -1;
                for (int b = 0; b <= r; ++b)
                    if (orb.fiber_intersection(0, s, k, b) == std::vector<int>{j}) {
                        t4 = b;
                        break;
                    }
                if (t4 < 0) continue;
                // law 3: O_k^{t5} ∩ O_j^{t3} = {0}, lexicographic (t3,t5)
                int t3 = -1, t5 = -1;
                for (int a = 0; a <= r && t3 < 0; ++a)
                    for (int b = 0; b <= r; ++b)
                        if (orb.fiber_intersection(k, b, j, a) == std::vector<int>{0}) {
                            t3 = a;
                            t5 = b;
                            break;
                        }
                if (t3 < 0) continue;
                rec.s = s;
                rec.j = j;
                rec.k = k;
                rec.t = {t1, t2, t3, t4, t5};
                found = true;
            }
            if (found) break;
        }
        if (!found) return std::nullopt;
        w.records.push_back(rec);
    }
    validate_witness(orb, w);
    return w;
}

void validate_witness(const OrbitalStructure& orb, const SwapWitness& w) {
    if (static_cast<int>(w.records.size()) != orb.r + 1)
        throw std::logic_error("witness: expected one record per orbital label");
    for (int s = 1; s <= orb.r; ++s) {
        const auto& rec = w.records[s];
        if (rec.s != s) throw std::logic_error("witness: record order is off");
        const auto [t1, t2, t3, t4, t5] = rec.t;
        if (orb.label(rec.j, 0) != s)
            throw std::logic_error("witness: j_s is not in O_0^s at s=" + std::to_string(s));
        if (orb.fiber_intersection(0, t1, rec.j, t2) != std::vector<int>{rec.k})
            throw std::logic_error(law_text("witness law 1 fails", 0, t1, rec.j, t2) +
                                   " != {" + std::to_string(rec.k) + "}");
        if (orb.fiber_intersection(0, s, rec.k, t4) != std::vector<int>{rec.j})
            throw std::logic_error(law_text("witness law 2 fails", 0, s, rec.k, t4) +
                                   " != {" + std::to_string(rec.j) + "}");
        if (orb.fiber_intersection(rec.k, t5, rec.j, t3) != std::vector<int>{0})
            throw std::logic_error(law_text("witness law 3 fails", rec.k, t5, rec.j, t3) +
                                   " != {0}");
    }
}

namespace {

/// f_s and g_s for one witness record. `regrouped` fuses the middle filter
/// (M*∘M)∘(T_{t1}⊗T_{t2}) and splits h_s into (M∘(id⊗T_{t4}))⊗(M∘(T_{t5}⊗id))
/// (equal morphisms by bifunctoriality), so evaluation stays O(k^2) per basis
/// pair instead of O(k⁴). The literal shape is kept for the equality oracle.
Morphism record_term(const std::shared_ptr<const OrbitalStructure>& orb,
                     const WitnessRecord& rec, bool regrouped) {
    const int n = orb->n;
    const Morphism id = Morphism::identity(n);
    const Morphism m = Morphism::multiplication(n);
    const Morphism ms = Morphism::comultiplication(n);
    auto T = [&](int s) { return s == 0 ? id : Morphism::orbital(orb, s); };
    const auto [t1, t2, t3, t4, t5] = rec.t;

    Morphism f;
    if (regrouped) {
        Morphism mid = compose(compose(ms, m), tensor(T(t1), T(t2)));
        Morphism h = tensor(compose(m, tensor(id, T(t4))), compose(m, tensor(T(t5), id)));
        f = compose(h, compose(tensor_chain({T(rec.s), mid, T(t3)}), tensor(ms, ms)));
    } else {
        Morphism h = compose(tensor(m, m), tensor_chain({id, T(t4), T(t5), id}));
        f = compose(h,
                    compose(tensor_chain({id, compose(ms, m), id}),
                            compose(tensor_chain({T(rec.s), T(t1), T(t2), T(t3)}), tensor(ms, ms))));
    }
    Morphism g = compose(tensor(id, m), compose(tensor_chain({id, T(rec.s), id}), tensor(ms, id)));
    return compose(f, g);
}

Morphism build_swap_impl(const std::shared_ptr<const OrbitalStructure>& orb, const SwapWitness& w,
                         bool regrouped) {
    validate_witness(*orb, w);
    Morphism total;
    bool first = true;
    for (const auto& rec : w.records) {
        Morphism fg = record_term(orb, rec, regrouped);
        total = first ? fg : add(total, fg);
        first = false;
    }
    return total;
}

}  // namespace

Morphism build_swap_candidate(std::shared_ptr<const OrbitalStructure> orb, const SwapWitness& w) {
    return build_swap_impl(orb, w, true);
}

Morphism build_swap_candidate_literal(std::shared_ptr<const OrbitalStructure> orb,
                                      const SwapWitness& w) {
    return build_swap_impl(orb, w, false);
}

namespace {

SwapVerification verify_swap_impl(const Morphism& f, int n, bool full, bool parallel) {
    if (f.source_power() != 2 || f.target_power() != 2)
        throw std::invalid_argument("verify_swap: morphism is not (C^n)^⊗2 -> (C^n)^⊗2");
    std::vector<std::pair<int, int>> pairs;
    if (full) {
        pairs.reserve(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) pairs.emplace_back(i, j);
    } else {
        for (int i = 0; i < n && i < 8; ++i)
            for (int j = 0; j < n; ++j) pairs.emplace_back(i, j);
        for (int i = 8; i < n; ++i) pairs.emplace_back(i, i);
    }
    std::vector<char> good(pairs.size(), 0);
    const std::int64_t count = static_cast<std::int64_t>(pairs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
    for (std::int64_t idx = 0; idx < count; ++idx) {
        auto [i, j] = pairs[idx];
        SparseVec image = f.apply_basis({i, j});
        good[idx] = image == SparseVec::basis(n, {j, i}) ? 1 : 0;
    }
    SwapVerification v;
    v.full = full;
    v.pairs_checked = count;
    for (std::int64_t idx = 0; idx < count; ++idx)
        if (!good[idx]) v.failures.push_back(pairs[idx]);
    v.ok = v.failures.empty();
    return v;
}

}  // namespace

SwapVerification verify_swap(const Morphism& f, int n, bool full, bool parallel) {
    return verify_swap_impl(f, n, full, parallel);
}

SwapVerification verify_swap_serial(const Morphism& f, int n, bool full) {
    return verify_swap_impl(f, n, full, false);
}

}  // namespace qaut
