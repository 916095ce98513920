#include "algknot/knotdiag.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "algknot/bipoly.hpp"
#include "algknot/errors.hpp"
#include "algknot/writhe.hpp"

namespace algknot {

// --- Laurent polynomials --------------------------------------------------------

LaurentPoly LaurentPoly::term(long long coeff, int twice_exp) {
    LaurentPoly p;
    p.add(coeff, twice_exp);
    return p;
}

void LaurentPoly::add(long long coeff, int twice_exp) {
    if (coeff == 0) return;
    auto it = c_.find(twice_exp);
    if (it == c_.end())
        c_[twice_exp] = coeff;
    else {
        it->second += coeff;
        if (it->second == 0) c_.erase(it);
    }
}

void LaurentPoly::strip() {
    for (auto it = c_.begin(); it != c_.end();)
        it = (it->second == 0) ? c_.erase(it) : std::next(it);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (auto& [e, v] : c_) out.c_[e] = -v;
    return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (auto& [e, v] : b.c_) out.add(v, e);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (auto& [e1, v1] : a.c_)
        for (auto& [e2, v2] : b.c_) out.add(v1 * v2, e1 + e2);
    return out;
}

LaurentPoly LaurentPoly::inverted() const {
    LaurentPoly out;
    for (auto& [e, v] : c_) out.c_[-e] = v;
    return out;
}

LaurentPoly LaurentPoly::unit_normalized() const {
    if (c_.empty()) return *this;
    int lo = c_.begin()->first;
    long long lead = c_.begin()->second;
    LaurentPoly out;
    for (auto& [e, v] : c_) out.c_[e - lo] = (lead < 0) ? -v : v;
    return out;
}

bool LaurentPoly::equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
    return a.unit_normalized() == b.unit_normalized();
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        long long v = it->second;
        int te = it->first;
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        first = false;
        long long mag = v < 0 ? -v : v;
        if (mag != 1 || te == 0) os << mag;
        if (te != 0) {
            os << var << "^";
            if (te % 2 == 0)
                os << (te / 2);
            else
                os << "(" << te << "/2)";
        }
    }
    return os.str();
}

// --- diagram core ----------------------------------------------------------------

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

}  // namespace

int Diagram::writhe() const {
    int w = 0;
    for (int s : sign_) w += s;
    return w;
}

Diagram Diagram::unlink(int k) {
    Diagram d;
    d.unknot_components_ = k;
    d.components_ = k;
    return d;
}

void Diagram::recount() {
    // edge ids must appear exactly once among in-slots and once among out-slots
    size_t maxid = 0;
    for (auto& s : slots_)
        for (int e : s) maxid = std::max(maxid, static_cast<size_t>(e) + 1);
    edge_count_ = maxid;
    std::vector<int> in_seen(maxid, 0), out_seen(maxid, 0);
    std::vector<std::pair<int, int>> in_pos(maxid, {-1, -1});
    for (size_t c = 0; c < slots_.size(); ++c) {
        in_seen[static_cast<size_t>(slots_[c][kUnderIn])]++;
        in_seen[static_cast<size_t>(slots_[c][kOverIn])]++;
        out_seen[static_cast<size_t>(slots_[c][kUnderOut])]++;
        out_seen[static_cast<size_t>(slots_[c][kOverOut])]++;
        in_pos[static_cast<size_t>(slots_[c][kUnderIn])] = {static_cast<int>(c), kUnderIn};
        in_pos[static_cast<size_t>(slots_[c][kOverIn])] = {static_cast<int>(c), kOverIn};
    }
    for (size_t e = 0; e < maxid; ++e)
        if (in_seen[e] != 1 || out_seen[e] != 1)
            throw Error("diagram edges must enter and leave exactly once");
    // components: follow successor edges
    std::vector<int> seen(maxid, 0);
    components_ = unknot_components_;
    for (size_t e0 = 0; e0 < maxid; ++e0) {
        if (seen[e0]) continue;
        ++components_;
        size_t e = e0;
        while (!seen[e]) {
            seen[e] = 1;
            auto [c, slot] = in_pos[e];
            int out = (slot == kUnderIn) ? slots_[static_cast<size_t>(c)][kUnderOut]
                                         : slots_[static_cast<size_t>(c)][kOverOut];
            e = static_cast<size_t>(out);
        }
    }
}

Diagram Diagram::from_slots(std::vector<int> signs, std::vector<std::array<int, 4>> slots,
                            int unknot_components) {
    if (signs.size() != slots.size()) throw Error("diagram: signs and slots size mismatch");
    // compact edge ids
    std::map<int, int> remap;
    for (auto& s : slots)
        for (int& e : s) {
            auto it = remap.find(e);
            if (it == remap.end()) it = remap.emplace(e, static_cast<int>(remap.size())).first;
            e = it->second;
        }
    Diagram d;
    d.sign_ = std::move(signs);
    d.slots_ = std::move(slots);
    d.unknot_components_ = unknot_components;
    d.recount();
    return d;
}

std::array<int, 4> Diagram::cyclic_slots(int c) const {
    if (sign_[static_cast<size_t>(c)] > 0) return {kUnderIn, kOverIn, kUnderOut, kOverOut};
    return {kUnderIn, kOverOut, kUnderOut, kOverIn};
}

std::vector<std::array<int, 4>> Diagram::pd_code() const {
    std::vector<std::array<int, 4>> out;
    for (int c = 0; c < crossings(); ++c) {
        auto cyc = cyclic_slots(c);
        std::array<int, 4> tup;
        for (int k = 0; k < 4; ++k)
            tup[static_cast<size_t>(k)] = edge_at(c, cyc[static_cast<size_t>(k)]);
        out.push_back(tup);
    }
    return out;
}

std::string Diagram::pd_string() const {
    std::ostringstream os;
    os << "PD[";
    auto code = pd_code();
    for (size_t i = 0; i < code.size(); ++i) {
        if (i) os << ", ";
        os << "X[" << code[i][0] << "," << code[i][1] << "," << code[i][2] << "," << code[i][3]
           << "]";
    }
    os << "]";
    return os.str();
}

std::vector<std::vector<Diagram::Dart>> Diagram::faces() const {
    // dart = (crossing, cyclic position); each edge joins two darts
    std::vector<std::array<std::pair<int, int>, 2>> ends(edge_count_,
                                                         {std::make_pair(-1, -1), std::make_pair(-1, -1)});
    for (int c = 0; c < crossings(); ++c) {
        auto cyc = cyclic_slots(c);
        for (int k = 0; k < 4; ++k) {
            int e = edge_at(c, cyc[static_cast<size_t>(k)]);
            auto& slot_pair = ends[static_cast<size_t>(e)];
            if (slot_pair[0].first < 0)
                slot_pair[0] = {c, k};
            else
                slot_pair[1] = {c, k};
        }
    }
    std::vector<std::vector<Dart>> out;
    std::vector<std::vector<bool>> used(static_cast<size_t>(crossings()),
                                        std::vector<bool>(4, false));
    for (int c0 = 0; c0 < crossings(); ++c0)
        for (int k0 = 0; k0 < 4; ++k0) {
            if (used[static_cast<size_t>(c0)][static_cast<size_t>(k0)]) continue;
            std::vector<Dart> face;
            int c = c0, k = k0;
            while (!used[static_cast<size_t>(c)][static_cast<size_t>(k)]) {
                used[static_cast<size_t>(c)][static_cast<size_t>(k)] = true;
                face.push_back(Dart{c, k});
                int e = edge_at(c, cyclic_slots(c)[static_cast<size_t>(k)]);
                auto& pr = ends[static_cast<size_t>(e)];
                auto mate = (pr[0] == std::make_pair(c, k)) ? pr[1] : pr[0];
                c = mate.first;
                k = (mate.second + 1) % 4;
            }
            out.push_back(std::move(face));
        }
    return out;
}

// --- Kauffman bracket / Jones -----------------------------------------------------

namespace {

// calibrated by the right-handed trefoil: in cyclic slot order, the
// A-smoothing pairs (cyc1, cyc2) and (cyc3, cyc0); the bracket variable
// is A = t^{1/4} under the sign conventions used here
constexpr bool kAdjacentPairsAreA = false;

std::map<int, long long> delta_power(int k) {
    // (-A^2 - A^-2)^k in A-exponents
    std::map<int, long long> acc{{0, 1}};
    for (int i = 0; i < k; ++i) {
        std::map<int, long long> next;
        for (auto& [e, v] : acc) {
            next[e + 2] -= v;
            next[e - 2] -= v;
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

LaurentPoly jones(const Diagram& d, int max_crossings) {
    const int n = d.crossings();
    if (n > max_crossings)
        throw TooManyCrossings("diagram has " + std::to_string(n) + " crossings, budget " +
                               std::to_string(max_crossings));
    std::map<int, long long> bracket;  // A-exponent -> coefficient
    if (n == 0) {
        bracket = delta_power(std::max(0, d.components() - 1));
    } else {
        std::vector<std::map<int, long long>> dpow;
        for (int k = 0; k <= 2 * n + 2 + d.unknot_components(); ++k) dpow.push_back(delta_power(k));
        const size_t ne = static_cast<size_t>(d.edges());
        for (std::uint32_t state = 0; state < (1u << n); ++state) {
            Dsu dsu(ne);
            int loops = static_cast<int>(ne);
            for (int c = 0; c < n; ++c) {
                auto cyc = d.cyclic_slots(c);
                bool a_smooth = ((state >> c) & 1u) == 0;
                bool adjacent = kAdjacentPairsAreA ? a_smooth : !a_smooth;
                int p1a, p1b, p2a, p2b;
                if (adjacent) {
                    p1a = cyc[0]; p1b = cyc[1]; p2a = cyc[2]; p2b = cyc[3];
                } else {
                    p1a = cyc[1]; p1b = cyc[2]; p2a = cyc[3]; p2b = cyc[0];
                }
                if (dsu.unite(d.edge_at(c, p1a), d.edge_at(c, p1b))) --loops;
                if (dsu.unite(d.edge_at(c, p2a), d.edge_at(c, p2b))) --loops;
            }
            int acount = n - __builtin_popcount(state);
            int aexp = acount - (n - acount);
            for (auto& [e, v] : dpow[static_cast<size_t>(loops - 1 + d.unknot_components())])
                bracket[aexp + e] += v;
        }
    }
    // V = (-A)^(-3w) <D>, then A = t^(-1/4)
    int w = d.writhe();
    LaurentPoly out;
    for (auto& [e, v] : bracket) {
        if (v == 0) continue;
        int aexp = e - 3 * w;
        long long coeff = (w % 2 == 0) ? v : -v;
        if (aexp % 2 != 0) throw Error("jones: odd A-exponent survived");
        out.add(coeff, aexp / 2);  // t-exponent aexp/4, stored doubled
    }
    return out;
}

// --- Alexander ---------------------------------------------------------------------

LaurentPoly alexander(const Diagram& d) {
    if (d.components() != 1) throw MultiComponent("alexander requires a knot diagram");
    const int n = d.crossings();
    if (n == 0) return LaurentPoly::one();
    // successor map and under-break arc labelling
    std::vector<std::pair<int, int>> in_pos(static_cast<size_t>(d.edges()), {-1, -1});
    for (int c = 0; c < n; ++c) {
        in_pos[static_cast<size_t>(d.edge_at(c, Diagram::kUnderIn))] = {c, Diagram::kUnderIn};
        in_pos[static_cast<size_t>(d.edge_at(c, Diagram::kOverIn))] = {c, Diagram::kOverIn};
    }
    // start just after an under-pass
    int start_edge = d.edge_at(0, Diagram::kUnderOut);
    std::vector<int> arc(static_cast<size_t>(d.edges()), -1);
    int arcs = 0;
    int e = start_edge;
    int cur = arcs++;
    do {
        arc[static_cast<size_t>(e)] = cur;
        auto [c, slot] = in_pos[static_cast<size_t>(e)];
        if (slot == Diagram::kUnderIn) {
            e = d.edge_at(c, Diagram::kUnderOut);
            if (e != start_edge) cur = arcs++;
        } else {
            e = d.edge_at(c, Diagram::kOverOut);
        }
    } while (e != start_edge);
    if (arcs != n) throw Error("alexander: arc count mismatch");
    if (n == 1) return LaurentPoly::one();

    // crossing relations: positive  (1-t) over + t in - out
    //                     negative  (1-t) over - in + t out
    UniPoly one_minus_t(std::vector<Rat>{Rat(1), Rat(-1)});
    UniPoly tpoly = UniPoly::variable();
    UniPoly minus_one = UniPoly::constant(Rat(-1));
    std::vector<std::vector<UniPoly>> m(static_cast<size_t>(n - 1),
                                        std::vector<UniPoly>(static_cast<size_t>(n - 1)));
    for (int c = 0; c < n; ++c) {
        if (c == n - 1) continue;  // drop one relation
        int over = arc[static_cast<size_t>(d.edge_at(c, Diagram::kOverIn))];
        int uin = arc[static_cast<size_t>(d.edge_at(c, Diagram::kUnderIn))];
        int uout = arc[static_cast<size_t>(d.edge_at(c, Diagram::kUnderOut))];
        auto put = [&](int a, const UniPoly& val) {
            if (a == n - 1) return;  // drop one generator
            m[static_cast<size_t>(c)][static_cast<size_t>(a)] += val;
        };
        put(over, one_minus_t);
        if (d.sign(c) > 0) {
            put(uin, tpoly);
            put(uout, minus_one);
        } else {
            put(uin, minus_one);
            put(uout, tpoly);
        }
    }
    UniPoly det = poly_matrix_det(std::move(m));
    if (det.is_zero()) throw Error("alexander: vanishing determinant");
    LaurentPoly out;
    for (int k = 0; k <= det.degree(); ++k) {
        Rat c = det.coeff(k);
        if (c.is_zero()) continue;
        if (!c.is_integer()) throw Error("alexander: non-integer coefficient");
        out.add(static_cast<long long>(c.num().get_si()), 2 * k);
    }
    return out.unit_normalized();
}

// --- torus references ----------------------------------------------------------------

Diagram torus_reference(int p, int q) {
    if (p < q || q < 0) throw InvalidParameters("torus_reference requires p >= q >= 0");
    if (q == 0) return Diagram::unlink(0);
    if (q == 1) return Diagram::unlink(1);
    const int ncross = p * (q - 1);
    std::vector<int> signs(static_cast<size_t>(ncross), 1);
    std::vector<std::array<int, 4>> slots(static_cast<size_t>(ncross));
    int next_edge = q;  // 0..q-1 are the initial strand edges
    std::vector<int> cur(static_cast<size_t>(q));
    std::iota(cur.begin(), cur.end(), 0);
    int cidx = 0;
    for (int rep = 0; rep < p; ++rep) {
        for (int i = 0; i + 1 < q; ++i) {
            int a = cur[static_cast<size_t>(i)];      // left strand: goes over
            int b = cur[static_cast<size_t>(i + 1)];  // right strand: goes under
            int over_out = next_edge++;
            int under_out = next_edge++;
            slots[static_cast<size_t>(cidx)] = {/*under-in*/ b, /*over-in*/ a,
                                                /*under-out*/ under_out, /*over-out*/ over_out};
            cur[static_cast<size_t>(i)] = under_out;
            cur[static_cast<size_t>(i + 1)] = over_out;
            ++cidx;
        }
    }
    // closure: identify cur[k] with the initial edge k
    Dsu alias(static_cast<size_t>(next_edge));
    for (int k = 0; k < q; ++k) alias.unite(cur[static_cast<size_t>(k)], k);
    std::vector<int> compact(static_cast<size_t>(next_edge), -1);
    int nid = 0;
    for (auto& s : slots)
        for (int& eid : s) {
            int root = alias.find(eid);
            if (compact[static_cast<size_t>(root)] < 0) compact[static_cast<size_t>(root)] = nid++;
            eid = compact[static_cast<size_t>(root)];
        }
    return Diagram::from_slots(std::move(signs), std::move(slots));
}

LaurentPoly torus_alexander_closed_form(int p, int q) {
    // (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))
    auto cyc = [](int n) {
        std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
        c[0] = Rat(-1);
        c[static_cast<size_t>(n)] = Rat(1);
        return UniPoly(std::move(c));
    };
    UniPoly num = cyc(p * q) * cyc(1);
    UniPoly den = cyc(p) * cyc(q);
    UniPoly quot = UniPoly::div_exact(num, den);
    LaurentPoly out;
    for (int k = 0; k <= quot.degree(); ++k) {
        Rat c = quot.coeff(k);
        if (!c.is_zero()) out.add(static_cast<long long>(c.num().get_si()), 2 * k);
    }
    return out.unit_normalized();
}

// --- projective diagrams ---------------------------------------------------------------

std::string ProjDiagram::gauss_code() const {
    std::ostringstream os;
    for (size_t i = 0; i < visits.size(); ++i) {
        if (i) os << " ";
        os << (visits[i].over ? "O" : "U") << visits[i].crossing + 1
           << (signs[static_cast<size_t>(visits[i].crossing)] > 0 ? "+" : "-");
    }
    return os.str();
}

ProjDiagram build_diagram(const DoublePointAnalysis& a) {
    if (!a.proj) throw Error("analysis carries no projection");
    const PlaneProjection& P = *a.proj;
    ProjDiagram out;
    out.center = P.center();
    out.curve_degree = P.curve().degree();
    out.solitary_count = a.solitary_count();

    struct Visit {
        RealAlg param;
        int crossing;
        bool over;
    };
    std::vector<Visit> visits;
    int cid = 0;
    std::vector<RealAlg> xs;
    std::vector<std::array<RealAlg, 2>> params;  // per crossing, (under, over)
    for (const auto& dp : a.points) {
        if (!dp.is_crossing()) continue;
        visits.push_back(Visit{*dp.param_under, cid, false});
        visits.push_back(Visit{*dp.param_over, cid, true});
        out.signs.push_back(dp.sign);
        xs.push_back(*dp.x);
        params.push_back({*dp.param_under, *dp.param_over});
        ++cid;
    }
    std::sort(visits.begin(), visits.end(),
              [](Visit& u, Visit& v) { return RealAlg::compare(u.param, v.param) < 0; });
    for (const auto& v : visits) out.visits.push_back(ProjVisit{v.crossing, v.over});

    if (cid > 0) {
        // antipodal pairing: sign of <gamma2(s), gamma2(t)> at each crossing
        BiPoly dot;
        for (size_t i = 0; i < 3; ++i) dot += st_product(P.coords()[i], P.coords()[i]);
        BiPoly sym = shear_x(symmetrize_st(dot), a.sys.lambda);
        UniPoly val = eval_y_fraction_cleared(sym, a.sys.u, a.sys.v, a.sys.G);
        int udeg = sym.deg_y();
        for (int c = 0; c < cid; ++c) {
            int s = xs[static_cast<size_t>(c)].sign_of(val);
            if (udeg % 2 != 0) s *= xs[static_cast<size_t>(c)].sign_of(a.sys.u);
            if (s == 0) throw Error("antipodal pairing degenerate");
            out.antipodal.push_back(s);
        }
        // fiber height data on the coordinate sphere: P4 = <Gamma(z), p> and
        // the norm N(z) = |Gamma(z)|^2 order the lifted points along the arc
        const SpaceCurve& K = P.curve();
        UniPoly p4, nrm;
        for (int i = 0; i < 4; ++i) {
            p4 += K.coord(i).scaled(P.center().x[static_cast<size_t>(i)]);
            nrm += K.coord(i) * K.coord(i);
        }
        if (p4.is_zero()) throw Error("curve lies in the viewpoint's polar plane");
        UniPoly q = p4 * p4;
        BiPoly d2 = st_product(q, nrm) - st_product(nrm, q);  // Q(s)N(t) - N(s)Q(t)
        BiPoly w2 = shear_x(antisymmetric_cofactor_st(d2), a.sys.lambda);
        UniPoly w2val = eval_y_fraction_cleared(w2, a.sys.u, a.sys.v, a.sys.G);
        int w2udeg = w2.deg_y();
        for (int c = 0; c < cid; ++c) {
            RealAlg pu = params[static_cast<size_t>(c)][0];
            RealAlg po = params[static_cast<size_t>(c)][1];
            bool under_first = RealAlg::compare(pu, po) < 0;
            RealAlg first = under_first ? pu : po;
            RealAlg second = under_first ? po : pu;
            int hf = first.sign_of(p4);
            int hsnd = second.sign_of(p4);
            if (hf == 0 && hsnd == 0) throw Error("both lift heights vanish");
            out.lift_h_signs.push_back({hf, hsnd});
            int w2s = xs[static_cast<size_t>(c)].sign_of(w2val);
            if (w2udeg % 2 != 0) w2s *= xs[static_cast<size_t>(c)].sign_of(a.sys.u);
            // D2(first, second) = (first - second) * W2 and first < second
            out.lift_d2.push_back(-w2s);
        }
    }
    return out;
}

ProjDiagram build_diagram(const SpaceCurve& K, const ProjPoint3& p) {
    PlaneProjection proj = PlaneProjection::project(K, p);
    return build_diagram(double_points(proj));
}

Diagram lift_double_cover(const ProjDiagram& d) {
    const int N = d.crossing_count();
    const int two_n = 2 * N;
    const bool knot = (d.curve_degree % 2 != 0);  // one component iff odd degree
    if (N == 0) return Diagram::unlink(knot ? 1 : 2);

    // visit index positions of each crossing
    std::vector<std::array<int, 2>> pos(static_cast<size_t>(N), {-1, -1});
    for (int i = 0; i < two_n; ++i) {
        auto& pr = pos[static_cast<size_t>(d.visits[static_cast<size_t>(i)].crossing)];
        (pr[0] < 0 ? pr[0] : pr[1]) = i;
    }

    // lifted strand(s): copy 0 and copy 1 of the visit sequence; for odd
    // degree they concatenate into one cycle, for even degree each closes.
    // edge entering lifted visit (copy, i) has id copy * 2n + i.
    auto in_edge = [&](int copy, int i) { return copy * two_n + i; };
    auto out_edge = [&](int copy, int i) {
        int j = i + 1;
        if (j < two_n) return copy * two_n + j;
        if (knot) return in_edge(1 - copy, 0);  // wrap into the other sheet
        return in_edge(copy, 0);
    };

    std::vector<int> signs;
    std::vector<std::array<int, 4>> slots;
    for (int c = 0; c < N; ++c) {
        int i = pos[static_cast<size_t>(c)][0], j = pos[static_cast<size_t>(c)][1];
        for (int copy = 0; copy < 2; ++copy) {
            // pair (copy at i) with (copy' at j); over = nearer the viewpoint
            // lift along the fiber arc, decided by the exact height data (the
            // two lifted crossings of one projective crossing are antipodal
            // and get opposite resolutions)
            int copy_j = (d.antipodal[static_cast<size_t>(c)] > 0) ? copy : 1 - copy;
            int sa = (copy == 0) ? 1 : -1;
            int sb = (copy_j == 0) ? 1 : -1;
            int asign = sa * d.lift_h_signs[static_cast<size_t>(c)][0];
            int bsign = sb * d.lift_h_signs[static_cast<size_t>(c)][1];
            bool over_here;  // the visit at position i runs over
            if (asign != bsign)
                over_here = asign > bsign;
            else
                over_here = (asign * d.lift_d2[static_cast<size_t>(c)]) > 0;
            std::array<int, 4> s{};
            int ei_in = in_edge(copy, i), ei_out = out_edge(copy, i);
            int ej_in = in_edge(copy_j, j), ej_out = out_edge(copy_j, j);
            if (over_here) {
                s[Diagram::kOverIn] = ei_in;
                s[Diagram::kOverOut] = ei_out;
                s[Diagram::kUnderIn] = ej_in;
                s[Diagram::kUnderOut] = ej_out;
            } else {
                s[Diagram::kUnderIn] = ei_in;
                s[Diagram::kUnderOut] = ei_out;
                s[Diagram::kOverIn] = ej_in;
                s[Diagram::kOverOut] = ej_out;
            }
            signs.push_back(d.signs[static_cast<size_t>(c)]);
            slots.push_back(s);
        }
    }
    return Diagram::from_slots(std::move(signs), std::move(slots));
}

// --- identification ----------------------------------------------------------------------

TorusIdentification identify_torus(const SpaceCurve& K, std::uint64_t seed, int jones_budget) {
    const int dgr = K.degree();
    const int nd = max_writhe(dgr);
    TorusIdentification out;
    out.p = dgr;
    out.q = dgr - 2;
    {
        WritheReport rep = encomplexed_writhe(K, random_center(K, seed + 3, 0), 16);
        if (rep.w != nd && rep.w != -nd)
            throw NotMW("writhe " + std::to_string(rep.w) + " is not maximal");
        out.mirrored = (rep.w == -nd);
    }
    // a census-clean center: all real-branch crossings
    std::optional<ProjDiagram> pd;
    for (int attempt = 0; attempt < 64 && !pd; ++attempt) {
        try {
            ProjPoint3 c = random_center(K, seed + 101 * (attempt + 1), attempt);
            PlaneProjection proj = PlaneProjection::project(K, c);
            auto a = double_points(proj);
            if (a.solitary_count() != 0 || a.imaginary_count() != 0) continue;
            if (a.crossing_count() != nd) continue;
            pd = build_diagram(a);
            out.center_used = c;
        } catch (const Error&) {
            continue;
        }
    }
    if (!pd) throw SearchFailed("no all-real-crossing center found");

    Diagram lift = lift_double_cover(*pd);
    out.lift_crossings = lift.crossings();
    out.lift_components = lift.components();
    Diagram ref = torus_reference(out.p, out.q);
    if (lift.components() != ref.components())
        throw Error("lift component count differs from the torus reference");

    bool jones_ok = true;
    if (lift.crossings() <= jones_budget && ref.crossings() <= jones_budget) {
        out.jones_lift = jones(lift, jones_budget);
        out.jones_reference = jones(ref, jones_budget);
        if (out.mirrored) out.jones_reference = out.jones_reference.inverted();
        out.jones_checked = true;
        jones_ok = (out.jones_lift == out.jones_reference);
    }
    bool alex_ok = true;
    if (lift.components() == 1) {
        out.alexander_lift = alexander(lift);
        out.alexander_reference = alexander(ref);
        out.alexander_closed = torus_alexander_closed_form(out.p, out.q);
        out.alexander_checked = true;
        // Alexander is mirror-invariant up to units
        alex_ok = LaurentPoly::equal_up_to_units(out.alexander_lift, out.alexander_reference) &&
                  LaurentPoly::equal_up_to_units(out.alexander_lift, out.alexander_closed);
    }
    if (!out.jones_checked && !out.alexander_checked)
        throw TooManyCrossings("no invariant within budget");
    out.consistent = jones_ok && alex_ok;
    out.note = "matching invariants certify consistency with the torus link, not an isotopy proof";
    return out;
}

// --- Reidemeister moves --------------------------------------------------------------------

namespace {

struct EdgeEnds {
    // for each edge: (crossing, slot) where it leaves and where it enters
    std::vector<std::pair<int, int>> from, to;
};

EdgeEnds edge_ends(const Diagram& d) {
    EdgeEnds ee;
    ee.from.assign(static_cast<size_t>(d.edges()), {-1, -1});
    ee.to.assign(static_cast<size_t>(d.edges()), {-1, -1});
    for (int c = 0; c < d.crossings(); ++c) {
        ee.to[static_cast<size_t>(d.edge_at(c, Diagram::kUnderIn))] = {c, Diagram::kUnderIn};
        ee.to[static_cast<size_t>(d.edge_at(c, Diagram::kOverIn))] = {c, Diagram::kOverIn};
        ee.from[static_cast<size_t>(d.edge_at(c, Diagram::kUnderOut))] = {c, Diagram::kUnderOut};
        ee.from[static_cast<size_t>(d.edge_at(c, Diagram::kOverOut))] = {c, Diagram::kOverOut};
    }
    return ee;
}

std::vector<std::array<int, 4>> slots_copy(const Diagram& d) {
    std::vector<std::array<int, 4>> s;
    for (int c = 0; c < d.crossings(); ++c)
        s.push_back({d.edge_at(c, 0), d.edge_at(c, 1), d.edge_at(c, 2), d.edge_at(c, 3)});
    return s;
}

std::vector<int> signs_copy(const Diagram& d) {
    std::vector<int> s;
    for (int c = 0; c < d.crossings(); ++c) s.push_back(d.sign(c));
    return s;
}

}  // namespace

Diagram Diagram::r1_add(int edge, bool positive_kink, Rng& rng) const {
    (void)rng;
    auto signs = signs_copy(*this);
    auto slots = slots_copy(*this);
    auto ee = edge_ends(*this);
    int e1 = static_cast<int>(edge_count_);      // after the kink
    int loop = e1 + 1;                           // the kink loop
    // edge -> new crossing (entering twice), leaving as e1 to the old target
    auto [tc, tslot] = ee.to[static_cast<size_t>(edge)];
    std::array<int, 4> kink{};
    if (positive_kink) {
        kink[kUnderIn] = edge;
        kink[kUnderOut] = loop;
        kink[kOverIn] = loop;
        kink[kOverOut] = e1;
    } else {
        kink[kOverIn] = edge;
        kink[kOverOut] = loop;
        kink[kUnderIn] = loop;
        kink[kUnderOut] = e1;
    }
    signs.push_back(positive_kink ? 1 : -1);
    slots.push_back(kink);
    if (tc >= 0) slots[static_cast<size_t>(tc)][static_cast<size_t>(tslot)] = e1;
    if (tc < 0) throw Error("r1_add: dangling edge");
    return from_slots(std::move(signs), std::move(slots), unknot_components_);
}

Diagram Diagram::r2_add(int edge_over, int edge_under) const {
    if (edge_over == edge_under) throw Error("r2_add needs two distinct edges");
    auto ee = edge_ends(*this);
    auto [oc, oslot] = ee.to[static_cast<size_t>(edge_over)];
    auto [uc, uslot] = ee.to[static_cast<size_t>(edge_under)];
    if (oc < 0 || uc < 0) throw Error("r2_add: dangling edge");
    // the sign split and the order in which the under strand passes the two
    // new crossings depend on the local embedding; the planar Euler count
    // picks out the consistent variant
    for (int variant = 0; variant < 4; ++variant) {
        int first_sign = (variant & 1) ? -1 : 1;
        bool under_reversed = (variant & 2) != 0;
        auto signs = signs_copy(*this);
        auto slots = slots_copy(*this);
        int base = static_cast<int>(edge_count_);
        int o1 = base, o2 = base + 1, u1 = base + 2, u2 = base + 3;
        std::array<int, 4> c1{}, c2{};
        c1[kOverIn] = edge_over;
        c1[kOverOut] = o1;
        c2[kOverIn] = o1;
        c2[kOverOut] = o2;
        if (!under_reversed) {
            c1[kUnderIn] = edge_under;
            c1[kUnderOut] = u1;
            c2[kUnderIn] = u1;
            c2[kUnderOut] = u2;
        } else {
            c2[kUnderIn] = edge_under;
            c2[kUnderOut] = u1;
            c1[kUnderIn] = u1;
            c1[kUnderOut] = u2;
        }
        signs.push_back(first_sign);
        signs.push_back(-first_sign);
        slots.push_back(c1);
        slots.push_back(c2);
        slots[static_cast<size_t>(oc)][static_cast<size_t>(oslot)] = o2;
        slots[static_cast<size_t>(uc)][static_cast<size_t>(uslot)] = u2;
        Diagram cand = from_slots(std::move(signs), std::move(slots), unknot_components_);
        // planar Euler count F = E - V + 1 + C over the crossing graph
        Dsu comp(static_cast<size_t>(cand.crossings()));
        {
            std::vector<int> owner(static_cast<size_t>(cand.edges()), -1);
            for (int c = 0; c < cand.crossings(); ++c)
                for (int slot = 0; slot < 4; ++slot) {
                    int e = cand.edge_at(c, slot);
                    if (owner[static_cast<size_t>(e)] < 0)
                        owner[static_cast<size_t>(e)] = c;
                    else
                        comp.unite(owner[static_cast<size_t>(e)], c);
                }
        }
        int C = 0;
        for (int c = 0; c < cand.crossings(); ++c) C += (comp.find(c) == c);
        if (static_cast<int>(cand.faces().size()) == cand.edges() - cand.crossings() + 1 + C)
            return cand;
    }
    throw Error("r2_add: no planar sign assignment");
}

std::optional<Diagram> Diagram::r1_remove() const {
    auto ee = edge_ends(*this);
    for (int c = 0; c < crossings(); ++c) {
        // kink: the loop edge runs from one slot of c back into c
        int lo = edge_at(c, kUnderOut);
        if (edge_at(c, kOverIn) == lo) {
            // edge path: x -> under-in(c), over-out(c) -> y; collapse
            int in_e = edge_at(c, kUnderIn);
            int out_e = edge_at(c, kOverOut);
            if (in_e == out_e) continue;  // one-crossing unknot handled below
            auto signs = signs_copy(*this);
            auto slots = slots_copy(*this);
            signs.erase(signs.begin() + c);
            slots.erase(slots.begin() + c);
            // redirect: whatever consumed out_e now consumes in_e
            for (auto& s : slots)
                for (int& eid : s)
                    if (eid == out_e) eid = in_e;
            // compact edge ids
            return from_slots(std::move(signs), std::move(slots), unknot_components_);
        }
        int lo2 = edge_at(c, kOverOut);
        if (edge_at(c, kUnderIn) == lo2) {
            int in_e = edge_at(c, kOverIn);
            int out_e = edge_at(c, kUnderOut);
            if (in_e == out_e) continue;
            auto signs = signs_copy(*this);
            auto slots = slots_copy(*this);
            signs.erase(signs.begin() + c);
            slots.erase(slots.begin() + c);
            for (auto& s : slots)
                for (int& eid : s)
                    if (eid == out_e) eid = in_e;
            return from_slots(std::move(signs), std::move(slots), unknot_components_);
        }
    }
    (void)ee;
    return std::nullopt;
}

std::optional<Diagram> Diagram::r2_remove() const {
    // bigon: two crossings sharing two parallel strands with cancelling signs
    for (int c1 = 0; c1 < crossings(); ++c1)
        for (int c2 = 0; c2 < crossings(); ++c2) {
            if (c1 == c2) continue;
            // strand A runs over both, strand B under both
            int o_mid = edge_at(c1, kOverOut);
            int u_mid = edge_at(c1, kUnderOut);
            if (edge_at(c2, kOverIn) != o_mid || edge_at(c2, kUnderIn) != u_mid) continue;
            if (sign(c1) == sign(c2)) continue;
            int o_in = edge_at(c1, kOverIn), o_out = edge_at(c2, kOverOut);
            int u_in = edge_at(c1, kUnderIn), u_out = edge_at(c2, kUnderOut);
            if (o_in == o_mid || u_in == u_mid || o_out == o_mid || u_out == u_mid) continue;
            if (o_in == o_out || u_in == u_out) continue;  // tiny components: skip
            auto signs = signs_copy(*this);
            auto slots = slots_copy(*this);
            std::vector<int> keep;
            for (int c = 0; c < crossings(); ++c)
                if (c != c1 && c != c2) keep.push_back(c);
            std::vector<int> nsigns;
            std::vector<std::array<int, 4>> nslots;
            for (int c : keep) {
                nsigns.push_back(signs[static_cast<size_t>(c)]);
                nslots.push_back(slots[static_cast<size_t>(c)]);
            }
            for (auto& s : nslots)
                for (int& eid : s) {
                    if (eid == o_out) eid = o_in;
                    if (eid == u_out) eid = u_in;
                }
            return from_slots(std::move(nsigns), std::move(nslots), unknot_components_);
        }
    return std::nullopt;
}

Diagram Diagram::random_moves(Rng& rng, int count, int max_crossings) const {
    Diagram d = *this;
    for (int i = 0; i < count; ++i) {
        int choice = static_cast<int>(rng.below(4));
        if (choice == 0 && d.crossings() + 1 <= max_crossings && d.edges() > 0) {
            int e = static_cast<int>(rng.below(static_cast<std::uint64_t>(d.edges())));
            d = d.r1_add(e, rng.coin(), rng);
        } else if (choice == 1 && d.crossings() + 2 <= max_crossings && d.edges() > 1) {
            // any two distinct edges sharing a face
            auto fcs = d.faces();
            bool done = false;
            for (size_t tries = 0; tries < fcs.size() && !done; ++tries) {
                const auto& f = fcs[rng.below(fcs.size())];
                if (f.size() < 2) continue;
                auto edge_of = [&](const Dart& dt) {
                    return d.edge_at(dt.crossing,
                                     d.cyclic_slots(dt.crossing)[static_cast<size_t>(dt.cyc_pos)]);
                };
                int a = edge_of(f[rng.below(f.size())]);
                int b = edge_of(f[rng.below(f.size())]);
                if (a == b) continue;
                d = d.r2_add(a, b);
                done = true;
            }
        } else if (choice == 2) {
            if (auto r = d.r1_remove()) d = *r;
        } else {
            if (auto r = d.r2_remove()) d = *r;
        }
    }
    return d;
}

}  // namespace algknot
