#include "aode/algebraic.hpp"

#include <algorithm>
#include <tuple>

#include "aode/bivariate.hpp"
#include "aode/resultant.hpp"

namespace aode {

namespace {

using Matrix = std::vector<std::vector<Elem>>;

// Kernel basis of M restricted to the columns `cols`, from the reduced row echelon form.
std::vector<std::vector<Elem>> kernel(Matrix M, const std::vector<std::size_t>& cols) {
    const std::size_t nc = cols.size();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < nc && row < M.size(); ++c) {
        std::size_t pr = row;
        while (pr < M.size() && M[pr][cols[c]].is_zero()) ++pr;
        if (pr == M.size()) continue;
        std::swap(M[pr], M[row]);
        Elem inv = M[row][cols[c]].inverse();
        for (auto k : cols) M[row][k] *= inv;
        for (std::size_t r = 0; r < M.size(); ++r) {
            if (r == row || M[r][cols[c]].is_zero()) continue;
            Elem f = M[r][cols[c]];
            for (auto k : cols) M[r][k] -= f * M[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    std::vector<std::vector<Elem>> basis;
    for (std::size_t f = 0; f < nc; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
        std::vector<Elem> v(nc);
        v[f] = Elem(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -M[r][cols[f]];
        basis.push_back(std::move(v));
    }
    return basis;
}

BiPoly normalized(const BiPoly& A) { return primitive_form(primitive_form(A)); }

// G(x + c0, y) with the x^(d-1) coefficient removed when it is a constant
// multiple of the x^d coefficient (d = deg_x G); otherwise G itself.
BiPoly canonical_shift(const BiPoly& G) {
    const int d = G.degree(0);
    if (d < 1) return G;
    UniPoly L = G.coeff_in(0, d), M = G.coeff_in(0, d - 1);
    if (M.is_zero()) return G;
    if (M.degree() != L.degree()) return G;
    Elem mu = M.lead() / L.lead();
    if (!(M == L * mu)) return G;
    return normalized(G.translate(0, -mu / Elem(d)));
}

int tower_degree(const Field& K) { return static_cast<int>(K.degree()); }

}  // namespace

std::optional<BiPoly> reconstruct_candidate(const Series& ybar, int dx, int dy, const Rational& nu) {
    const Rational B = Rational(2 * dx * dy) - nu * (dy - 1);
    std::vector<Series> cols;
    std::vector<std::pair<int, int>> idx;  // (deg_x, deg_y) of each column
    Series yp = Series::constant(Elem(1));
    std::optional<Rational> E;
    for (int j = 0; j <= dy; ++j) {
        for (int i = 0; i <= dx; ++i) {
            Series c = Series::monomial(Elem(1), i) * yp;
            E = min_known(E, c.known());
            cols.push_back(std::move(c));
            idx.emplace_back(i, j);
        }
        if (j < dy) yp = yp * ybar;
    }
    if (!E) E = B + 1;
    if (*E <= B)
        throw Error("insufficient truncation for reconstruction: the solution must be known beyond order " +
                    to_string(B));
    const long n = ybar.ramification();
    std::map<long, std::vector<Elem>> rows;
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [k, v] : cols[c].terms_on(n)) {
            if (Rational(k, n) >= *E) continue;
            auto& r = rows[k];
            if (r.empty()) r.resize(cols.size());
            r[c] = v;
        }
    Matrix M;
    for (auto& [k, r] : rows) M.push_back(std::move(r));
    if (M.empty()) M.emplace_back(cols.size());
    for (int ey = 1; ey <= dy; ++ey)
        for (int ex = 0; ex <= dx; ++ex) {
            std::vector<std::size_t> sel;
            for (std::size_t c = 0; c < idx.size(); ++c)
                if (idx[c].first <= ex && idx[c].second <= ey) sel.push_back(c);
            auto basis = kernel(M, sel);
            if (basis.empty()) continue;
            auto weight = [](const std::vector<Elem>& v) {
                return std::count_if(v.begin(), v.end(), [](const Elem& e) { return !e.is_zero(); });
            };
            auto best = std::min_element(basis.begin(), basis.end(),
                                         [&](const auto& a, const auto& b) { return weight(a) < weight(b); });
            BiPoly A("x", "y");
            for (std::size_t s = 0; s < sel.size(); ++s) A.add_term(idx[sel[s]].first, idx[sel[s]].second, (*best)[s]);
            if (A.degree(1) < 1) continue;
            return normalized(A);
        }
    return std::nullopt;
}

BiPoly diff_pseudo_remainder(const BiPoly& F, const BiPoly& A) {
    if (A.degree(1) < 1) throw Error("the candidate does not depend on y");
    BiPoly Ax = A.partial(0), Ay = A.partial(1);
    const int dp = std::max(F.degree(1), 0);
    const int dy = std::max(F.degree(0), 0);
    BiPoly one = BiPoly::constant(A, Elem(1));
    std::vector<BiPoly> yp{one}, np{one}, ap{one};
    BiPoly Y = BiPoly::var(A, 1);
    for (int i = 1; i <= dy; ++i) yp.push_back(yp.back() * Y);
    for (int j = 1; j <= dp; ++j) {
        np.push_back(np.back() * (-Ax));
        ap.push_back(ap.back() * Ay);
    }
    BiPoly H(A.vars()[0], A.vars()[1]);
    for (const auto& [e, c] : F.terms()) H = H + yp[e.first] * np[e.second] * ap[dp - e.second] * c;
    return pseudo_remainder(H, A, A.vars()[1]);
}

BiPoly shift_family(const BiPoly& G, const std::string& c) {
    auto [K, sym] = G.field().adjoin_symbol(c);
    return G.translate(0, sym);
}

SolutionTruncation choose_seed(const BiPoly& F) {
    auto score = [](const SolutionTruncation& s) {
        bool ideal = s.guarantee && s.n == 1 && s.field.is_rational();
        return std::make_tuple(!ideal, tower_degree(s.field), s.n);
    };
    const Rational order(std::max<long>(truncation_bound(F), 2));
    SolveOptions o;
    o.generic = o.constants = o.infinity = false;
    std::vector<SolutionTruncation> cand;
    for (auto& s : puiseux_solve(F, order, o).at_zero)
        if (s.guarantee && !s.free_parameter) cand.push_back(std::move(s));
    auto best = [&] {
        return std::min_element(cand.begin(), cand.end(),
                                [&](const auto& a, const auto& b) { return score(a) < score(b); });
    };
    if (!cand.empty() && !std::get<0>(score(*best()))) return *best();
    SolveOptions r;
    r.constants = r.finite = r.infinity = false;
    for (long y0 : {0L, 1L, -1L, 2L, -2L, 3L, -3L}) {
        r.iv = Elem(y0);
        for (auto& s : puiseux_solve(F, order, r).at_zero) cand.push_back(std::move(s));
        if (!cand.empty() && !std::get<0>(score(*best()))) break;
    }
    if (cand.empty()) throw Error("no Puiseux solution available to seed the reconstruction");
    return *best();
}

std::optional<MinimalPolynomialResult> algebraic_solution_component(const BiPoly& F) {
    if (F.degree(0) < 1 || F.degree(1) < 1) throw Error("the component must depend on y and y'");
    MinimalPolynomialResult res;
    res.component = F;
    res.dx = F.degree(1);
    res.dy = F.degree(0) + F.degree(1);
    res.seed = choose_seed(F);
    const Series& s = res.seed.series;
    Rational nu = s.is_zero() ? Rational(0) : *s.order();
    res.nu = nu < 0 ? nu : Rational(0);
    Rational N0 = Rational(2 * res.dx * res.dy) - 2 * res.nu * (res.dy - 1);
    Series ybar = prolong_truncation(F, s, N0, Point::zero, res.seed.guarantee);
    auto A = reconstruct_candidate(ybar, res.dx, res.dy, res.nu);
    if (!A) return std::nullopt;
    if (!diff_pseudo_remainder(F, *A).is_zero()) return std::nullopt;
    A = canonical_shift(*A);
    if (!diff_pseudo_remainder(F, *A).is_zero()) throw Error("internal: shifted minimal polynomial fails certification");
    if (A->degree(0) != res.dx || A->degree(1) > res.dy)
        throw Error("internal: certified minimal polynomial violates the degree bounds");
    res.G = *A;
    res.family = shift_family(res.G);
    return res;
}

std::vector<MinimalPolynomialResult> algebraic_solution(const BiPoly& F0, bool irreducible) {
    BiPoly F = squarefree_normalize(F0).F;
    std::vector<BiPoly> comps{F};
    if (!irreducible) {
        auto c = bivariate_components(F);
        if (c.status == Components::Status::factored) comps = c.factors;
    }
    std::vector<MinimalPolynomialResult> out;
    for (const auto& G : comps) {
        if (G.degree(0) < 1 || G.degree(1) < 1) continue;
        if (auto r = algebraic_solution_component(G)) out.push_back(std::move(*r));
    }
    return out;
}

}  // namespace aode
