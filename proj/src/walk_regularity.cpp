#include "gwalk/walk_regularity.hpp"

#include <algorithm>

namespace gwalk {

std::optional<SrgParams> srg_recognize(const Graph& g) {
    const int n = g.n();
    auto preds = basic_predicates(g);
    if (!preds.regular) return std::nullopt;
    int k = *preds.regular;
    if (k == 0 || preds.complete) return std::nullopt; // neither complete nor edgeless

    long lambda = -1, mu = -1;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            long common = 0;
            for (int z = 0; z < n; ++z)
                if (g.adjacent(x, z) && g.adjacent(y, z)) ++common;
            if (g.adjacent(x, y)) {
                if (lambda == -1) lambda = common;
                if (lambda != common) return std::nullopt;
            } else {
                if (mu == -1) mu = common;
                if (mu != common) return std::nullopt;
            }
        }
    // A regular non-complete graph with edges has both pair classes nonempty.
    if (lambda == -1 || mu == -1) return std::nullopt;
    SrgParams p{n, k, lambda, mu};
    return p.valid() ? std::optional<SrgParams>(p) : std::nullopt;
}

std::pair<ExactScalar, ExactScalar> srg_eigenvalues(const SrgParams& p) {
    if (!p.valid()) throw std::domain_error("invalid strongly regular parameters");
    // theta_pm = ((lambda-mu) +- sqrt((lambda-mu)^2 + 4(k-mu))) / 2; the
    // discriminant is positive for valid parameters (theta+ > theta-), and
    // theta+ theta- = mu - k, theta+ + theta- = lambda - mu.
    Int disc = Int(p.lambda - p.mu) * Int(p.lambda - p.mu) + 4 * Int(p.k - p.mu);
    if (disc < 0) throw std::domain_error("parameters give complex eigenvalues");
    Rat half_diff = make_rat(p.lambda - p.mu, 2);
    auto [sq, d] = extract_square_part(disc == 0 ? Int(1) : disc);
    if (disc == 0) return {ExactScalar(half_diff), ExactScalar(half_diff)};
    if (d == 1) {
        Rat half_sq = make_rat(sq, Int(2));
        return {ExactScalar(half_diff + half_sq), ExactScalar(half_diff - half_sq)};
    }
    Rat half_sq = make_rat(sq, Int(2));
    long dl = d.get_si();
    return {ExactScalar::quadratic(half_diff, half_sq, dl),
            ExactScalar::quadratic(half_diff, -half_sq, dl)};
}

bool srg_half_case(const SrgParams& p) {
    Int disc = Int(p.lambda - p.mu) * Int(p.lambda - p.mu) + 4 * Int(p.k - p.mu);
    if (disc < 0) throw std::domain_error("parameters give complex eigenvalues");
    Int root = sqrt(disc);
    bool irrational = (root * root != disc);
    if (irrational) {
        // Conference form (4mu+1, 2mu, mu-1, mu) is forced.
        SrgParams conference{4 * p.mu + 1, 2 * p.mu, p.mu - 1, p.mu};
        if (!(p == conference))
            throw std::logic_error("half case with parameters outside the conference form");
    }
    return irrational;
}

std::optional<SrgFamily> srg_periodicity_class(const SrgParams& p) {
    if (p.n == 2 * p.k && p.lambda == 0 && p.mu == p.k) return SrgFamily::Kmm;
    if (p.mu == p.k && 2 * p.lambda == p.k && p.n == 3 * p.lambda) return SrgFamily::Kmmm;
    if (p == SrgParams{5, 2, 0, 1}) return SrgFamily::C5;
    return std::nullopt;
}

const char* srg_family_name(SrgFamily f) {
    switch (f) {
        case SrgFamily::Kmm: return "K_mm";
        case SrgFamily::Kmmm: return "K_mmm";
        case SrgFamily::C5: return "C5";
    }
    return "?";
}

std::optional<std::array<Rat, 3>> is_strongly_l_walk_regular(const Graph& g, long ell) {
    if (ell < 2) throw std::domain_error("strong walk-regularity needs ell >= 2");
    const int n = g.n();
    IntMat a = g.adjacency_matrix();
    IntMat w = IntMat::identity(n);
    for (long i = 0; i < ell; ++i) w = w * a;

    // Sample one entry of each relation class.
    std::optional<std::pair<int, int>> adj, nonadj;
    for (int x = 0; x < n && !(adj && nonadj); ++x)
        for (int y = x + 1; y < n; ++y) {
            if (g.adjacent(x, y) && !adj) adj = {x, y};
            if (!g.adjacent(x, y) && !nonadj) nonadj = {x, y};
        }

    Rat ca(0), cb(0), cc(0);
    if (!adj && !nonadj) {
        // Single vertex: A = 0 and A^ell = 0.
        ca = cb = cc = 0;
    } else if (!nonadj) {
        // Complete graph: J = I + A, so fold the J term away (c = 0).
        // Solve a + b*(entry pattern): diagonal a = w_xx, off-diagonal b = w_xy.
        ca = Rat(w(0, 0));
        cb = Rat(w(adj->first, adj->second));
    } else if (!adj) {
        // Edgeless: A^ell = 0.
        ca = cb = cc = 0;
    } else {
        cc = Rat(w(nonadj->first, nonadj->second));
        cb = Rat(w(adj->first, adj->second)) - cc;
        ca = Rat(w(0, 0)) - cc;
    }

    // Verify a*I + b*A + c*J = A^ell on every entry.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Rat expect = cc;
            if (x == y) expect += ca;
            if (g.adjacent(x, y)) expect += cb;
            if (expect != Rat(w(x, y))) return std::nullopt;
        }
    return std::array<Rat, 3>{ca, cb, cc};
}

bool swr_eigenvalue_criterion(const ExactScalar& t1, const ExactScalar& t2,
                              const ExactScalar& t3, long ell) {
    if (t1 == t2 || t2 == t3 || t1 == t3)
        throw std::domain_error("eigenvalues must be pairwise distinct");
    ExactScalar lhs = (t2 - t3) * pow(t1, ell) + (t3 - t1) * pow(t2, ell) +
                      (t1 - t2) * pow(t3, ell);
    return lhs.is_zero();
}

const char* swr_tag_name(SwrTag t) {
    switch (t) {
        case SwrTag::Empty: return "empty";
        case SwrTag::DisjointComplete: return "disjoint-complete";
        case SwrTag::StronglyRegular: return "strongly-regular";
        case SwrTag::DisjointCompleteBipartite: return "disjoint-complete-bipartite+isolated";
        case SwrTag::Genuine: return "genuine";
        case SwrTag::NotSwr: return "not-swr";
    }
    return "?";
}

int distinct_eigenvalue_count(const Graph& g) {
    try {
        return exact_spectrum(g.adjacency_matrix()).distinct_count();
    } catch (const IrreducibleCubicOrHigher&) {
        // Degree of the minimal polynomial via a Krylov chain on I, A, A^2, ...
        // Exact rational elimination over the n^2-dimensional matrix space.
        const int n = g.n();
        IntMat a = g.adjacency_matrix();
        IntMat power = IntMat::identity(n);
        std::vector<std::vector<Rat>> basis; // reduced rows with pivot bookkeeping
        std::vector<int> pivots;
        int rank = 0;
        for (int deg = 0; deg <= n; ++deg) {
            std::vector<Rat> vec(static_cast<size_t>(n) * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) vec[static_cast<size_t>(i) * n + j] = Rat(power(i, j));
            // Reduce against the current basis.
            for (size_t b = 0; b < basis.size(); ++b) {
                const Rat& lead = vec[pivots[b]];
                if (lead == 0) continue;
                Rat factor = lead; // basis rows are normalized to pivot 1
                for (size_t i = 0; i < vec.size(); ++i) vec[i] -= factor * basis[b][i];
            }
            int pivot = -1;
            for (size_t i = 0; i < vec.size(); ++i)
                if (vec[i] != 0) {
                    pivot = static_cast<int>(i);
                    break;
                }
            if (pivot < 0) return rank; // first dependence: minpoly degree = rank
            Rat lead = vec[pivot];
            for (size_t i = 0; i < vec.size(); ++i) vec[i] /= lead;
            basis.push_back(std::move(vec));
            pivots.push_back(pivot);
            ++rank;
            power = power * a;
        }
        return rank;
    }
}

namespace {

bool all_components_complete_same_order(const Graph& g,
                                        const std::vector<std::vector<int>>& comps) {
    size_t order = comps.front().size();
    for (const auto& comp : comps) {
        if (comp.size() != order) return false;
        for (size_t i = 0; i < comp.size(); ++i)
            for (size_t j = i + 1; j < comp.size(); ++j)
                if (!g.adjacent(comp[i], comp[j])) return false;
    }
    return true;
}

bool component_is_complete_bipartite(const Graph& g, const std::vector<int>& comp) {
    if (comp.size() == 1) return true; // isolated vertex
    // 2-color within the component, then demand all cross pairs adjacent.
    std::vector<int> color(g.n(), -1);
    std::vector<int> stack{comp[0]};
    color[comp[0]] = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : comp)
            if (g.adjacent(u, v)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
    }
    for (size_t i = 0; i < comp.size(); ++i)
        for (size_t j = i + 1; j < comp.size(); ++j) {
            bool cross = color[comp[i]] != color[comp[j]];
            if (cross != g.adjacent(comp[i], comp[j])) return false;
        }
    return true;
}

} // namespace

SwrClass classify_swr(const Graph& g, long ell_max) {
    SwrClass out;
    if (g.edge_count() == 0) {
        out.tag = SwrTag::Empty;
        return out;
    }
    auto comps = components(g);
    if (all_components_complete_same_order(g, comps)) {
        out.tag = SwrTag::DisjointComplete;
        return out;
    }
    if (auto p = srg_recognize(g)) {
        out.tag = SwrTag::StronglyRegular;
        out.srg = p;
        return out;
    }
    auto preds = basic_predicates(g);
    if (preds.connected && preds.regular && distinct_eigenvalue_count(g) == 4) {
        for (long ell = 3; ell <= ell_max; ell += 2)
            if (is_strongly_l_walk_regular(g, ell)) {
                out.tag = SwrTag::Genuine;
                out.witness_ell = ell;
                return out;
            }
    }
    bool bip = true;
    for (const auto& comp : comps)
        if (!component_is_complete_bipartite(g, comp)) {
            bip = false;
            break;
        }
    if (bip) {
        for (long ell = 2; ell <= ell_max; ++ell)
            if (is_strongly_l_walk_regular(g, ell)) {
                out.tag = SwrTag::DisjointCompleteBipartite;
                out.witness_ell = ell;
                return out;
            }
    }
    out.tag = SwrTag::NotSwr;
    return out;
}

} // namespace gwalk
