#include "qaut/morphism.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qaut {

std::uint64_t SparseVec::pack(std::span<const int> tuple, int n) {
    std::uint64_t key = 0;
    for (std::size_t i = tuple.size(); i-- > 0;)
        key = key * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(tuple[i]);
    return key;
}

std::vector<int> SparseVec::unpack(std::uint64_t key, int arity, int n) {
    std::vector<int> tuple(arity);
    for (int i = 0; i < arity; ++i) {
        tuple[i] = static_cast<int>(key % n);
        key /= n;
    }
    return tuple;
}

SparseVec SparseVec::basis(int n, std::span<const int> tuple) {
    SparseVec v;
    v.n = n;
    v.arity = static_cast<int>(tuple.size());
    v.terms.emplace_back(pack(tuple, n), Rat(1));
    return v;
}

SparseVec SparseVec::basis(int n, std::initializer_list<int> tuple) {
    return basis(n, std::span<const int>(tuple.begin(), tuple.size()));
}

const Rat* SparseVec::coefficient(std::uint64_t key) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), key,
                               [](const auto& t, std::uint64_t k) { return t.first < k; });
    if (it == terms.end() || it->first != key) return nullptr;
    return &it->second;
}

SparseVec& SparseVec::operator+=(const SparseVec& o) {
    if (o.terms.empty()) return *this;
    if (n != o.n || arity != o.arity)
        throw std::invalid_argument("sparse vector sum: arity mismatch");
    std::vector<std::pair<std::uint64_t, Rat>> merged;
    merged.reserve(terms.size() + o.terms.size());
    std::size_t a = 0, b = 0;
    while (a < terms.size() || b < o.terms.size()) {
        if (b == o.terms.size() || (a < terms.size() && terms[a].first < o.terms[b].first)) {
            merged.push_back(std::move(terms[a++]));
        } else if (a == terms.size() || o.terms[b].first < terms[a].first) {
            merged.push_back(o.terms[b++]);
        } else {
            Rat c = terms[a].second + o.terms[b].second;
            if (c != 0) merged.emplace_back(terms[a].first, std::move(c));
            ++a, ++b;
        }
    }
    terms = std::move(merged);
    return *this;
}

SparseVec SparseVec::operator*(const Rat& c) const {
    SparseVec out;
    out.n = n;
    out.arity = arity;
    if (c == 0) return out;
    out.terms.reserve(terms.size());
    for (const auto& [k, v] : terms) out.terms.emplace_back(k, v * c);
    return out;
}

std::string SparseVec::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c << "*";
        auto tuple = unpack(key, arity, n);
        if (arity == 1) {
            os << "e" << tuple[0];
        } else {
            os << "e(";
            for (int i = 0; i < arity; ++i) os << (i ? "," : "") << tuple[i];
            os << ")";
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

struct Morphism::Node {
    enum class Kind { Unit, Counit, Mult, Comult, Swap, Id, Orbital, Compose, Tensor, Sum, Scale };
    Kind kind;
    int n = 0;
    int in = 0, out = 0;
    std::shared_ptr<const OrbitalStructure> orb;  // Orbital
    int s = 0;                                    // Orbital
    bool transposed = false;                      // Orbital
    std::shared_ptr<const Node> a, b;             // children
    Rat scalar;                                   // Scale
};

namespace {

using Node = Morphism::Node;
using Kind = Node::Kind;

std::shared_ptr<const Node> make_leaf(Kind k, int n, int in, int out) {
    auto nd = std::make_shared<Node>();
    nd->kind = k;
    nd->n = n;
    nd->in = in;
    nd->out = out;
    return nd;
}

std::uint64_t upow(int n, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= static_cast<std::uint64_t>(n);
    return r;
}

/// The transposed fiber {i : (j,i) in O^s}; equals the fiber for self-paired
/// orbitals, otherwise scanned from the pair labels.
std::vector<int> transposed_fiber(const OrbitalStructure& orb, int j, int s) {
    if (orb.self_paired[s]) return orb.fiber(j, s);
    std::vector<int> out;
    for (int i = 0; i < orb.n; ++i)
        if (orb.label(j, i) == s) out.push_back(i);
    return out;
}

void eval(const Node& nd, const SparseVec& v, SparseVec& out);

SparseVec eval_vec(const Node& nd, const SparseVec& v) {
    SparseVec out;
    out.n = nd.n;
    out.arity = nd.out;
    eval(nd, v, out);
    return out;
}

/// Accumulate coefficient*basis(key) into a map-backed builder.
struct Builder {
    std::map<std::uint64_t, Rat> acc;
    void add(std::uint64_t key, const Rat& c) {
        auto [it, inserted] = acc.emplace(key, c);
        if (!inserted) it->second += c;
    }
    SparseVec finish(int n, int arity) {
        SparseVec out;
        out.n = n;
        out.arity = arity;
        out.terms.reserve(acc.size());
        for (auto& [k, c] : acc)
            if (c != 0) out.terms.emplace_back(k, std::move(c));
        return out;
    }
};

void eval(const Node& nd, const SparseVec& v, SparseVec& out) {
    if (v.arity != nd.in) throw std::invalid_argument("morphism apply: arity mismatch");
    const int n = nd.n;
    switch (nd.kind) {
        case Kind::Id:
            out = v;
            return;
        case Kind::Unit: {  // 0 -> 1
            Rat total(0);
            for (const auto& [k, c] : v.terms) total += c;
            Builder b;
            if (total != 0)
                for (int i = 0; i < n; ++i) b.add(static_cast<std::uint64_t>(i), total);
            out = b.finish(n, 1);
            return;
        }
        case Kind::Counit: {  // 1 -> 0
            Rat total(0);
            for (const auto& [k, c] : v.terms) total += c;
            Builder b;
            if (total != 0) b.add(0, total);
            out = b.finish(n, 0);
            return;
        }
        case Kind::Mult: {  // e_i⊗e_j -> δ_ij e_i
            Builder b;
            for (const auto& [key, c] : v.terms) {
                std::uint64_t i = key % n, j = key / n;
                if (i == j) b.add(i, c);
            }
            out = b.finish(n, 1);
            return;
        }
        case Kind::Comult: {  // e_i -> e_i⊗e_i
            Builder b;
            for (const auto& [key, c] : v.terms) b.add(key + key * n, c);
            out = b.finish(n, 2);
            return;
        }
        case Kind::Swap: {
            Builder b;
            for (const auto& [key, c] : v.terms) {
                std::uint64_t i = key % n, j = key / n;
                b.add(j + i * n, c);
            }
            out = b.finish(n, 2);
            return;
        }
        case Kind::Orbital: {
            Builder b;
            for (const auto& [key, c] : v.terms) {
                const auto fiber = nd.transposed
                                       ? transposed_fiber(*nd.orb, static_cast<int>(key), nd.s)
                                       : nd.orb->fiber(static_cast<int>(key), nd.s);
                for (int i : fiber) b.add(static_cast<std::uint64_t>(i), c);
            }
            out = b.finish(n, 1);
            return;
        }
        case Kind::Compose: {
            SparseVec mid = eval_vec(*nd.b, v);
            eval(*nd.a, mid, out);
            return;
        }
        case Kind::Tensor: {
            const std::uint64_t split = upow(n, nd.b->in);
            const std::uint64_t shift = upow(n, nd.b->out);
            std::map<std::uint64_t, SparseVec> memo_left, memo_right;
            Builder b;
            for (const auto& [key, c] : v.terms) {
                const std::uint64_t kl = key % split, kr = key / split;
                auto itl = memo_left.find(kl);
                if (itl == memo_left.end()) {
                    SparseVec bv;
                    bv.n = n;
                    bv.arity = nd.b->in;
                    bv.terms.emplace_back(kl, Rat(1));
                    itl = memo_left.emplace(kl, eval_vec(*nd.b, bv)).first;
                }
                auto itr = memo_right.find(kr);
                if (itr == memo_right.end()) {
                    SparseVec bv;
                    bv.n = n;
                    bv.arity = nd.a->in;
                    bv.terms.emplace_back(kr, Rat(1));
                    itr = memo_right.emplace(kr, eval_vec(*nd.a, bv)).first;
                }
                for (const auto& [okl, cl] : itl->second.terms)
                    for (const auto& [okr, cr] : itr->second.terms)
                        b.add(okl + okr * shift, c * cl * cr);
            }
            out = b.finish(n, nd.out);
            return;
        }
        case Kind::Sum: {
            out = eval_vec(*nd.a, v);
            out += eval_vec(*nd.b, v);
            return;
        }
        case Kind::Scale: {
            out = eval_vec(*nd.a, v) * nd.scalar;
            return;
        }
    }
    throw std::logic_error("morphism eval: unknown node kind");
}

std::shared_ptr<const Node> adjoint_node(const std::shared_ptr<const Node>& nd) {
    auto flip = [&](Kind k, int in, int out) {
        auto m = make_leaf(k, nd->n, in, out);
        return m;
    };
    switch (nd->kind) {
        case Kind::Unit: return flip(Kind::Counit, 1, 0);
        case Kind::Counit: return flip(Kind::Unit, 0, 1);
        case Kind::Mult: return flip(Kind::Comult, 1, 2);
        case Kind::Comult: return flip(Kind::Mult, 2, 1);
        case Kind::Swap: return nd;
        case Kind::Id: return nd;
        case Kind::Orbital: {
            auto m = std::make_shared<Node>(*nd);
            m->transposed = !nd->transposed;
            return m;
        }
        case Kind::Compose: {
            auto m = std::make_shared<Node>();
            m->kind = Kind::Compose;
            m->n = nd->n;
            m->a = adjoint_node(nd->b);
            m->b = adjoint_node(nd->a);
            m->in = nd->out;
            m->out = nd->in;
            return m;
        }
        case Kind::Tensor:
        case Kind::Sum: {
            auto m = std::make_shared<Node>();
            m->kind = nd->kind;
            m->n = nd->n;
            m->a = adjoint_node(nd->a);
            m->b = adjoint_node(nd->b);
            m->in = nd->out;
            m->out = nd->in;
            return m;
        }
        case Kind::Scale: {
            auto m = std::make_shared<Node>();
            m->kind = Kind::Scale;
            m->n = nd->n;
            m->scalar = nd->scalar;
            m->a = adjoint_node(nd->a);
            m->in = nd->out;
            m->out = nd->in;
            return m;
        }
    }
    throw std::logic_error("adjoint: unknown node kind");
}

}  // namespace

int Morphism::source_power() const { return node_ ? node_->in : 0; }
int Morphism::target_power() const { return node_ ? node_->out : 0; }
int Morphism::dim() const { return node_ ? node_->n : 0; }

SparseVec Morphism::apply(const SparseVec& v) const {
    if (!node_) throw std::logic_error("apply: empty morphism");
    if (v.n != node_->n) throw std::invalid_argument("apply: base dimension mismatch");
    return eval_vec(*node_, v);
}

SparseVec Morphism::apply_basis(std::span<const int> tuple) const {
    return apply(SparseVec::basis(dim(), tuple));
}

SparseVec Morphism::apply_basis(std::initializer_list<int> tuple) const {
    return apply(SparseVec::basis(dim(), tuple));
}

RationalMatrix Morphism::to_dense() const {
    const int n = dim();
    const std::uint64_t cols = upow(n, source_power());
    const std::uint64_t rows = upow(n, target_power());
    RationalMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    for (std::uint64_t col = 0; col < cols; ++col) {
        SparseVec bv;
        bv.n = n;
        bv.arity = source_power();
        bv.terms.emplace_back(col, Rat(1));
        for (const auto& [key, c] : apply(bv).terms)
            m.at(static_cast<int>(key), static_cast<int>(col)) = c;
    }
    return m;
}

Morphism Morphism::identity(int n, int power) {
    auto nd = make_leaf(Kind::Id, n, power, power);
    return Morphism(nd);
}
Morphism Morphism::unit(int n) { return Morphism(make_leaf(Kind::Unit, n, 0, 1)); }
Morphism Morphism::counit(int n) { return Morphism(make_leaf(Kind::Counit, n, 1, 0)); }
Morphism Morphism::multiplication(int n) { return Morphism(make_leaf(Kind::Mult, n, 2, 1)); }
Morphism Morphism::comultiplication(int n) { return Morphism(make_leaf(Kind::Comult, n, 1, 2)); }
Morphism Morphism::swap(int n) { return Morphism(make_leaf(Kind::Swap, n, 2, 2)); }

Morphism Morphism::triple_diagonal(int n) {
    return compose(multiplication(n), tensor(identity(n), multiplication(n)));
}

Morphism Morphism::orbital(std::shared_ptr<const OrbitalStructure> orb, int s) {
    if (!orb) throw std::invalid_argument("orbital morphism: null structure");
    if (s < 0 || s > orb->r) throw std::invalid_argument("orbital morphism: label out of range");
    auto nd = std::make_shared<Node>();
    nd->kind = Kind::Orbital;
    nd->n = orb->n;
    nd->in = nd->out = 1;
    nd->orb = std::move(orb);
    nd->s = s;
    return Morphism(nd);
}

Morphism compose(const Morphism& f, const Morphism& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("compose: base dimension mismatch");
    if (f.source_power() != g.target_power())
        throw std::invalid_argument("compose: f expects tensor power " +
                                    std::to_string(f.source_power()) + ", g produces " +
                                    std::to_string(g.target_power()));
    auto nd = std::make_shared<Node>();
    nd->kind = Kind::Compose;
    nd->n = f.dim();
    nd->a = f.node_;
    nd->b = g.node_;
    nd->in = g.source_power();
    nd->out = f.target_power();
    return Morphism(nd);
}

Morphism tensor(const Morphism& f, const Morphism& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("tensor: base dimension mismatch");
    auto nd = std::make_shared<Node>();
    nd->kind = Kind::Tensor;
    nd->n = f.dim();
    nd->a = g.node_;  // right factor: high tuple positions
    nd->b = f.node_;  // left factor: low tuple positions
    nd->in = f.source_power() + g.source_power();
    nd->out = f.target_power() + g.target_power();
    return Morphism(nd);
}

Morphism add(const Morphism& f, const Morphism& g) {
    if (f.dim() != g.dim() || f.source_power() != g.source_power() ||
        f.target_power() != g.target_power())
        throw std::invalid_argument("add: shape mismatch");
    auto nd = std::make_shared<Node>();
    nd->kind = Kind::Sum;
    nd->n = f.dim();
    nd->a = f.node_;
    nd->b = g.node_;
    nd->in = f.source_power();
    nd->out = f.target_power();
    return Morphism(nd);
}

Morphism sub(const Morphism& f, const Morphism& g) { return add(f, scale(Rat(-1), g)); }

Morphism scale(const Rat& c, const Morphism& f) {
    auto nd = std::make_shared<Node>();
    nd->kind = Node::Kind::Scale;
    nd->n = f.dim();
    nd->a = f.node_;
    nd->scalar = c;
    nd->in = f.source_power();
    nd->out = f.target_power();
    return Morphism(nd);
}

Morphism adjoint(const Morphism& f) {
    if (!f.node_) throw std::logic_error("adjoint: empty morphism");
    return Morphism(adjoint_node(f.node_));
}

Morphism tensor_chain(std::initializer_list<Morphism> factors) {
    if (factors.size() == 0) throw std::invalid_argument("tensor_chain: no factors");
    auto it = factors.begin();
    Morphism acc = *it++;
    for (; it != factors.end(); ++it) acc = tensor(acc, *it);
    return acc;
}

}  // namespace qaut
