#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gcross/morphism.hpp"
#include "gcross/spec.hpp"

namespace gcross {

using nlohmann::json;

// ---------------------------------------------------------------- groups

bool GroupTable::finish() {
    const int n = order();
    identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g) ok = mul[e][g] == g && mul[g][e] == g;
        if (ok) identity = e;
    }
    if (identity < 0) return false;
    inv.assign(n, -1);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (mul[g][h] == identity && mul[h][g] == identity) inv[g] = h;
    for (int g = 0; g < n; ++g)
        if (inv[g] < 0) return false;
    return true;
}

GroupTable GroupTable::trivial() { return cyclic(1); }

GroupTable GroupTable::cyclic(int n) {
    GroupTable G;
    for (int i = 0; i < n; ++i) G.elements.push_back(i == 0 ? "e" : "g" + std::to_string(i));
    G.mul.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G.mul[i][j] = (i + j) % n;
    G.finish();
    return G;
}

bool GroupTable::is_subgroup(const std::vector<int>& h) const {
    std::set<int> H(h.begin(), h.end());
    if (!H.count(identity)) return false;
    for (int a : H) {
        if (a < 0 || a >= order() || !H.count(inv[a])) return false;
        for (int b : H)
            if (!H.count(mul[a][b])) return false;
    }
    return true;
}

// ---------------------------------------------------------------- spec helpers

int Spec::find_label(const std::string& nm) const {
    for (int i = 0; i < rank(); ++i)
        if (labels[i].name == nm) return i;
    return -1;
}

int Spec::word_grade(const Word& w) const {
    int g = group.identity;
    for (int x : w) g = group(g, grade(x));
    return g;
}

Word Spec::act_word(int g, const Word& w) const {
    Word o(w.size());
    for (size_t i = 0; i < w.size(); ++i) o[i] = act(g, w[i]);
    return o;
}

Word Spec::dual_word(const Word& w) const {
    Word o(w.rbegin(), w.rend());
    for (int& x : o) x = dual(x);
    return o;
}

int Spec::hom3(int a, int b, int c, int d) const {
    int n = 0;
    for (int e = 0; e < rank(); ++e) n += N[a][b][e] * N[e][c][d];
    return n;
}

const FBlock* Spec::fblock(int a, int b, int c, int d) const {
    auto it = F.find({a, b, c, d});
    return it == F.end() ? nullptr : &it->second;
}

Mat Spec::Rblock(int a, int b, int c) const {
    auto it = R.find({a, b, c});
    if (it != R.end()) return it->second;
    return Mat::Zero(N[a][b][c], N[act(grade(a), b)][a][c]);
}

Mat Spec::Ublock(int g, int a, int b, int c) const {
    auto it = U.find({g, a, b, c});
    if (it != U.end()) return it->second;
    return Mat::Zero(N[a][b][c], N[act(g, a)][act(g, b)][act(g, c)]);
}

double Spec::global_dim() const {
    double s = 0.0;
    for (const auto& l : labels) s += l.qdim * l.qdim;
    return s;
}

void Spec::allocate_blocks() {
    const int n = rank();
    F.clear();
    R.clear();
    U.clear();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    FBlock fb;
                    for (int e = 0; e < n; ++e)
                        for (int al = 0; al < N[a][b][e]; ++al)
                            for (int be = 0; be < N[e][c][d]; ++be) {
                                fb.row_ix[{e, al, be}] = static_cast<int>(fb.rows.size());
                                fb.rows.push_back({e, al, be});
                            }
                    for (int f = 0; f < n; ++f)
                        for (int mu = 0; mu < N[b][c][f]; ++mu)
                            for (int nu = 0; nu < N[a][f][d]; ++nu) {
                                fb.col_ix[{f, mu, nu}] = static_cast<int>(fb.cols.size());
                                fb.cols.push_back({f, mu, nu});
                            }
                    if (fb.rows.empty() && fb.cols.empty()) continue;
                    fb.M = Mat::Zero(fb.rows.size(), fb.cols.size());
                    F.emplace(std::array<int, 4>{a, b, c, d}, std::move(fb));
                }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (!N[a][b][c]) continue;
                if (braided) R[{a, b, c}] = Mat::Zero(N[a][b][c], N[act(grade(a), b)][a][c]);
                for (int g = 0; g < group.order(); ++g)
                    U[{g, a, b, c}] = Mat::Zero(N[a][b][c], N[act(g, a)][act(g, b)][act(g, c)]);
            }
}

static void finalize_inverses(Spec& s) {
    for (auto& [k, fb] : s.F) {
        if (fb.M.rows() != fb.M.cols() || fb.M.rows() == 0) {
            fb.Minv = Mat::Zero(fb.M.cols(), fb.M.rows());
            continue;
        }
        fb.Minv = fb.M.fullPivLu().inverse();
    }
}

void Spec::finalize_blocks() { finalize_inverses(*this); }

std::map<int, std::vector<int>> decompose_homogeneous(const Spec& s, const std::vector<Word>& summands) {
    std::map<int, std::vector<int>> out;
    for (size_t i = 0; i < summands.size(); ++i) out[s.word_grade(summands[i])].push_back(static_cast<int>(i));
    return out;
}

// ---------------------------------------------------------------- loading

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw SpecError(where + ": " + what); }

int get_index(const json& v, int bound, const std::string& where) {
    if (!v.is_number_integer()) fail(where, "expected an integer");
    int i = v.get<int>();
    if (i < 0 || i >= bound) fail(where, "index " + std::to_string(i) + " out of range [0," + std::to_string(bound) + ")");
    return i;
}

cplx get_complex(const json& re, const json& im, const std::string& where) {
    if (!re.is_number() || !im.is_number()) fail(where, "expected numeric [re, im]");
    return {re.get<double>(), im.get<double>()};
}

const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing key '") + key + "'");
    return j.at(key);
}

}  // namespace

Spec parse_spec(const std::string& text, const std::string& name) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecError(name + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    Spec s;
    s.name = j.value("name", name);

    const json& g = need(j, "group", "group");
    for (const auto& e : need(g, "elements", "group")) s.group.elements.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    const int ng = s.group.order();
    if (ng == 0) fail("group.elements", "empty group");
    const json& mul = need(g, "mul", "group");
    if (!mul.is_array() || static_cast<int>(mul.size()) != ng) fail("group.mul", "table must be |G| x |G|");
    s.group.mul.assign(ng, std::vector<int>(ng));
    for (int a = 0; a < ng; ++a) {
        if (!mul[a].is_array() || static_cast<int>(mul[a].size()) != ng) fail("group.mul[" + std::to_string(a) + "]", "row length");
        for (int b = 0; b < ng; ++b) s.group.mul[a][b] = get_index(mul[a][b], ng, "group.mul");
    }
    if (!s.group.finish()) fail("group", "no two-sided identity or missing inverses");

    const json& labs = need(j, "labels", "labels");
    if (!labs.is_array() || labs.empty()) fail("labels", "expected a non-empty array");
    const int n = static_cast<int>(labs.size());
    for (int i = 0; i < n; ++i) {
        std::string w = "labels[" + std::to_string(i) + "]";
        const json& l = labs[i];
        SimpleLabel L;
        L.name = l.value("name", std::to_string(i));
        L.dual = get_index(need(l, "dual", w), n, w + ".dual");
        L.grade = get_index(need(l, "grade", w), ng, w + ".grade");
        const json& qd = need(l, "qdim", w);
        if (!qd.is_number()) fail(w + ".qdim", "expected a number");
        L.qdim = qd.get<double>();
        if (l.contains("pivotal")) {
            const json& p = l["pivotal"];
            if (!p.is_array() || p.size() != 2) fail(w + ".pivotal", "expected [re, im]");
            L.pivotal = get_complex(p[0], p[1], w + ".pivotal");
        }
        s.labels.push_back(L);
    }
    s.unit = -1;
    for (int i = 0; i < n; ++i)
        if (s.labels[i].grade == s.group.identity && s.labels[i].dual == i && s.labels[i].qdim == 1.0) {
            s.unit = i;
            break;
        }
    if (s.unit < 0) fail("labels", "no unit label (identity grade, self-dual, qdim 1)");

    s.perm.assign(ng, std::vector<int>(n));
    const json* act = j.contains("action") ? &j["action"] : nullptr;
    if (act && act->contains("perm")) {
        const json& p = (*act)["perm"];
        if (!p.is_array() || static_cast<int>(p.size()) != ng) fail("action.perm", "expected |G| rows");
        for (int a = 0; a < ng; ++a) {
            if (!p[a].is_array() || static_cast<int>(p[a].size()) != n) fail("action.perm", "row length must equal rank");
            for (int x = 0; x < n; ++x) s.perm[a][x] = get_index(p[a][x], n, "action.perm");
        }
    } else {
        for (int a = 0; a < ng; ++a)
            for (int x = 0; x < n; ++x) s.perm[a][x] = x;
    }

    const json& fus = need(j, "fusion", "fusion");
    s.N.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
    std::set<std::array<int, 3>> seenN;
    for (const auto& e : need(fus, "N", "fusion")) {
        if (!e.is_array() || e.size() != 4) fail("fusion.N", "entries are [a,b,c,mult]");
        int a = get_index(e[0], n, "fusion.N"), b = get_index(e[1], n, "fusion.N"), c = get_index(e[2], n, "fusion.N");
        if (!e[3].is_number_integer() || e[3].get<int>() < 0) fail("fusion.N", "multiplicity must be a nonnegative integer");
        if (!seenN.insert({a, b, c}).second) fail("fusion.N", "duplicate entry");
        s.N[a][b][c] = e[3].get<int>();
    }
    if (j.contains("flags")) {
        s.unitary = j["flags"].value("unitary", false);
        s.braided = j["flags"].value("braided", true);
        s.tol = j["flags"].value("tol", 1e-9);
    }
    s.allocate_blocks();

    std::set<std::vector<int>> seen;
    if (fus.contains("F"))
        for (const auto& e : fus["F"]) {
            if (!e.is_array() || e.size() != 12) fail("fusion.F", "entries are [a,b,c,d,e,f,alpha,beta,mu,nu,re,im]");
            std::vector<int> k;
            for (int i = 0; i < 6; ++i) k.push_back(get_index(e[i], n, "fusion.F"));
            for (int i = 6; i < 10; ++i) {
                if (!e[i].is_number_integer()) fail("fusion.F", "multiplicity index must be an integer");
                k.push_back(e[i].get<int>());
            }
            if (!seen.insert(k).second) fail("fusion.F", "duplicate entry");
            auto it = s.F.find({k[0], k[1], k[2], k[3]});
            if (it == s.F.end()) fail("fusion.F", "entry for an empty hom space");
            auto r = it->second.row_ix.find({k[4], k[6], k[7]});
            auto c = it->second.col_ix.find({k[5], k[8], k[9]});
            if (r == it->second.row_ix.end() || c == it->second.col_ix.end())
                fail("fusion.F", "intermediate channel not allowed by N");
            it->second.M(r->second, c->second) = get_complex(e[10], e[11], "fusion.F");
        }
    seen.clear();
    if (fus.contains("R"))
        for (const auto& e : fus["R"]) {
            if (!e.is_array() || e.size() != 7) fail("fusion.R", "entries are [a,b,c,alpha,beta,re,im]");
            int a = get_index(e[0], n, "fusion.R"), b = get_index(e[1], n, "fusion.R"), c = get_index(e[2], n, "fusion.R");
            if (!seen.insert({a, b, c, e[3].get<int>(), e[4].get<int>()}).second) fail("fusion.R", "duplicate entry");
            auto it = s.R.find({a, b, c});
            if (it == s.R.end()) fail("fusion.R", "entry for an empty hom space");
            int al = e[3].get<int>(), be = e[4].get<int>();
            if (al < 0 || al >= it->second.rows() || be < 0 || be >= it->second.cols()) fail("fusion.R", "multiplicity index out of range");
            it->second(al, be) = get_complex(e[5], e[6], "fusion.R");
        }
    seen.clear();
    if (act && act->contains("U"))
        for (const auto& e : (*act)["U"]) {
            if (!e.is_array() || e.size() != 8) fail("action.U", "entries are [g,a,b,c,alpha,beta,re,im]");
            int gg = get_index(e[0], ng, "action.U");
            int a = get_index(e[1], n, "action.U"), b = get_index(e[2], n, "action.U"), c = get_index(e[3], n, "action.U");
            if (!seen.insert({gg, a, b, c, e[4].get<int>(), e[5].get<int>()}).second) fail("action.U", "duplicate entry");
            auto it = s.U.find({gg, a, b, c});
            if (it == s.U.end()) fail("action.U", "entry for an empty hom space");
            int al = e[4].get<int>(), be = e[5].get<int>();
            if (al < 0 || al >= it->second.rows() || be < 0 || be >= it->second.cols()) fail("action.U", "multiplicity index out of range");
            it->second(al, be) = get_complex(e[6], e[7], "action.U");
        }
    finalize_inverses(s);
    return s;
}

Spec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str(), path);
}

std::string spec_to_json(const Spec& s) {
    json j;
    j["name"] = s.name;
    if (!s.provenance.empty()) j["provenance"] = s.provenance;
    j["group"]["elements"] = s.group.elements;
    j["group"]["mul"] = s.group.mul;
    json labs = json::array();
    for (const auto& l : s.labels)
        labs.push_back({{"name", l.name}, {"dual", l.dual}, {"grade", l.grade}, {"qdim", l.qdim}, {"pivotal", {l.pivotal.real(), l.pivotal.imag()}}});
    j["labels"] = labs;
    json N = json::array(), F = json::array(), R = json::array(), U = json::array();
    const int n = s.rank();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (s.N[a][b][c]) N.push_back({a, b, c, s.N[a][b][c]});
    for (const auto& [k, fb] : s.F)
        for (size_t r = 0; r < fb.rows.size(); ++r)
            for (size_t c = 0; c < fb.cols.size(); ++c) {
                cplx v = fb.M(r, c);
                if (std::abs(v) < 1e-15) continue;
                F.push_back({k[0], k[1], k[2], k[3], fb.rows[r][0], fb.cols[c][0], fb.rows[r][1], fb.rows[r][2],
                             fb.cols[c][1], fb.cols[c][2], v.real(), v.imag()});
            }
    for (const auto& [k, m] : s.R)
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                if (std::abs(m(r, c)) >= 1e-15) R.push_back({k[0], k[1], k[2], r, c, m(r, c).real(), m(r, c).imag()});
    for (const auto& [k, m] : s.U)
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                if (std::abs(m(r, c)) >= 1e-15) U.push_back({k[0], k[1], k[2], k[3], r, c, m(r, c).real(), m(r, c).imag()});
    j["fusion"] = {{"N", N}, {"F", F}, {"R", R}};
    j["action"] = {{"perm", s.perm}, {"U", U}};
    j["flags"] = {{"unitary", s.unitary}, {"braided", s.braided}, {"tol", s.tol}};
    return j.dump(1);
}

// ---------------------------------------------------------------- validation

namespace {

cplx Fval(const Spec& s, int a, int b, int c, int d, int e, int al, int be, int f, int mu, int nu) {
    const FBlock* fb = s.fblock(a, b, c, d);
    if (!fb) return 0.0;
    auto r = fb->row_ix.find({e, al, be});
    auto k = fb->col_ix.find({f, mu, nu});
    if (r == fb->row_ix.end() || k == fb->col_ix.end()) return 0.0;
    return fb->M(r->second, k->second);
}

double maxabs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

double pentagon_residual(const Spec& s) {
    const int n = s.rank();
    double res = 0.0;
    auto& N = s.N;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    for (int e = 0; e < n; ++e) {
                        // left-combed (f,al; g,be; e,ga) against right-combed (h,mu; k,rho; e,sg)
                        for (int f = 0; f < n; ++f)
                            for (int al = 0; al < N[a][b][f]; ++al)
                                for (int g = 0; g < n; ++g)
                                    for (int be = 0; be < N[f][c][g]; ++be)
                                        for (int ga = 0; ga < N[g][d][e]; ++ga)
                                            for (int h = 0; h < n; ++h)
                                                for (int mu = 0; mu < N[c][d][h]; ++mu)
                                                    for (int k = 0; k < n; ++k)
                                                        for (int rho = 0; rho < N[b][h][k]; ++rho)
                                                            for (int sg = 0; sg < N[a][k][e]; ++sg) {
                                                                cplx A = 0.0;
                                                                for (int nu = 0; nu < N[f][h][e]; ++nu)
                                                                    A += Fval(s, f, c, d, e, g, be, ga, h, mu, nu) *
                                                                         Fval(s, a, b, h, e, f, al, nu, k, rho, sg);
                                                                cplx B = 0.0;
                                                                for (int jj = 0; jj < n; ++jj)
                                                                    for (int de = 0; de < N[b][c][jj]; ++de)
                                                                        for (int ep = 0; ep < N[a][jj][g]; ++ep)
                                                                            for (int ph = 0; ph < N[jj][d][k]; ++ph)
                                                                                B += Fval(s, a, b, c, g, f, al, be, jj, de, ep) *
                                                                                     Fval(s, a, jj, d, e, g, ep, ga, k, ph, sg) *
                                                                                     Fval(s, b, c, d, k, jj, de, ph, h, mu, rho);
                                                                res = std::max(res, std::abs(A - B));
                                                            }
                    }
    return res;
}

double unit_leg_residual(const Spec& s) {
    const int n = s.rank(), u = s.unit;
    double res = 0.0;
    for (const auto& [k, fb] : s.F) {
        auto [a, b, c, d] = k;
        if (a != u && b != u && c != u) continue;
        Mat E = Mat::Zero(fb.M.rows(), fb.M.cols());
        for (size_t r = 0; r < fb.rows.size(); ++r)
            for (size_t q = 0; q < fb.cols.size(); ++q) {
                auto [e, al, be] = fb.rows[r];
                auto [f, mu, nu] = fb.cols[q];
                bool one = false;
                if (b == u) one = (e == a && f == c && al == 0 && mu == 0 && be == nu);
                else if (a == u) one = (e == b && f == d && al == 0 && nu == 0 && be == mu);
                else one = (e == d && f == b && be == 0 && mu == 0 && al == nu);
                if (one) E(r, q) = 1.0;
            }
        res = std::max(res, maxabs(fb.M - E));
    }
    for (int x = 0; x < n; ++x) {
        if (s.braided) {
            res = std::max(res, maxabs(s.Rblock(u, x, x) - Mat::Identity(1, 1)));
            res = std::max(res, maxabs(s.Rblock(x, u, x) - Mat::Identity(1, 1)));
        }
        for (int g = 0; g < s.group.order(); ++g) {
            res = std::max(res, maxabs(s.Ublock(g, u, x, x) - Mat::Identity(1, 1)));
            res = std::max(res, maxabs(s.Ublock(g, x, u, x) - Mat::Identity(1, 1)));
        }
    }
    return res;
}

}  // namespace

Report validate_spec(const Spec& s) {
    Report rep;
    const double tol = s.tol;
    const int n = s.rank(), ng = s.group.order();
    const GroupTable& G = s.group;
    auto& N = s.N;

    {
        int bad = 0;
        for (int a = 0; a < ng; ++a)
            for (int b = 0; b < ng; ++b)
                for (int c = 0; c < ng; ++c) bad += G(G(a, b), c) != G(a, G(b, c));
        for (int a = 0; a < ng; ++a) bad += G(a, G.inv[a]) != G.identity || G(G.inv[a], a) != G.identity;
        rep.add("group_axioms", bad, 0.5);
    }
    {
        int bad = 0;
        for (int x = 0; x < n; ++x) {
            bad += s.dual(s.dual(x)) != x;
            bad += s.grade(s.dual(x)) != G.inv[s.grade(x)];
        }
        rep.add("duality_involution", bad, 0.5);
        int units = 0;
        for (int x = 0; x < n; ++x) units += s.grade(x) == G.identity && s.dual(x) == x && s.qdim(x) == 1.0 && N[x][x][x] == 1 && [&] {
            for (int y = 0; y < n; ++y)
                for (int c = 0; c < n; ++c)
                    if (N[x][y][c] != (y == c) || N[y][x][c] != (y == c)) return false;
            return true;
        }();
        rep.flag("unit_label", units == 1, std::to_string(units) + " unit candidates");
    }
    {
        int bad = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    if (N[a][b][c] && G(s.grade(a), s.grade(b)) != s.grade(c)) ++bad;
                    if (N[a][b][c] != N[s.dual(b)][s.dual(a)][s.dual(c)]) ++bad;
                }
        for (int a = 0; a < n; ++a) bad += N[a][s.dual(a)][s.unit] != 1;
        rep.add("grading_and_fusion_rules", bad, 0.5);
        int bad2 = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d) {
                        int r = 0;
                        for (int f = 0; f < n; ++f) r += N[b][c][f] * N[a][f][d];
                        bad2 += r != s.hom3(a, b, c, d);
                    }
        rep.add("fusion_associativity", bad2, 0.5);
    }
    {
        double r = 0.0;
        for (int x = 0; x < n; ++x) {
            r = std::max(r, std::abs(s.qdim(x) - s.qdim(s.dual(x))));
            if (!(s.qdim(x) > 0.0)) r = std::max(r, 1.0);
        }
        rep.add("sphericality_qdim", r, tol);
    }
    const bool struct_ok = rep.ok();
    if (!struct_ok) {
        rep.flag("structural_prerequisites", false, "skipping numerical checks");
        return rep;
    }
    {
        double r = 0.0;
        for (int a = 0; a < ng; ++a)
            for (int x = 0; x < n; ++x) {
                if (a == G.identity && s.act(a, x) != x) r = 1.0;
                for (int b = 0; b < ng; ++b)
                    if (s.act(a, s.act(b, x)) != s.act(G(a, b), x)) r = 1.0;
                int gx = s.act(a, x);
                if (s.grade(gx) != G(G(a, s.grade(x)), G.inv[a])) r = 1.0;
                if (s.dual(gx) != s.act(a, s.dual(x))) r = 1.0;
                r = std::max(r, std::abs(s.qdim(gx) - s.qdim(x)));
                r = std::max(r, std::abs(s.pivotal(gx) - s.pivotal(x)));
            }
        for (int a = 0; a < ng && r < 1.0; ++a)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        if (N[x][y][z] != N[s.act(a, x)][s.act(a, y)][s.act(a, z)]) r = 1.0;
        rep.add("action_permutation", r, tol);
    }
    if (!rep.ok()) {
        rep.flag("structural_prerequisites", false, "skipping numerical checks");
        return rep;
    }

    rep.add("unit_legs", unit_leg_residual(s), tol);
    {
        double r = 0.0;
        for (const auto& [k, fb] : s.F) {
            if (fb.M.rows() == 0) continue;
            r = std::max(r, maxabs(fb.M * fb.Minv - Mat::Identity(fb.M.rows(), fb.M.rows())));
        }
        rep.add("f_invertible", r, tol);
    }
    rep.add("pentagon", pentagon_residual(s), tol);
    {
        double r = 0.0;
        for (int x = 0; x < n; ++x) {
            r = std::max(r, std::abs(std::abs(s.pivotal(x)) - 1.0));
            r = std::max(r, std::abs(s.pivotal(x) * s.pivotal(s.dual(x)) - 1.0));
        }
        rep.add("pivotal_units", r, tol);
    }
    if (!rep.ok()) return rep;  // the diagrammatic checks need a consistent associator

    {
        double r = 0.0;
        for (int x = 0; x < n; ++x) {
            Obj X = Obj::simple(x), Xd = Obj::simple(s.dual(x));
            Morphism z1 = compose(tensor(identity(s, X), ev(s, X)), tensor(coev(s, X), identity(s, X)));
            Morphism z2 = compose(tensor(ev(s, X), identity(s, Xd)), tensor(identity(s, Xd), coev(s, X)));
            Morphism z3 = compose(tensor(ev_r(s, X), identity(s, X)), tensor(identity(s, X), coev_r(s, X)));
            Morphism z4 = compose(tensor(identity(s, Xd), ev_r(s, X)), tensor(coev_r(s, X), identity(s, Xd)));
            r = std::max({r, maxabs(z1.M - Mat::Identity(1, 1)), maxabs(z2.M - Mat::Identity(1, 1)),
                          maxabs(z3.M - Mat::Identity(1, 1)), maxabs(z4.M - Mat::Identity(1, 1))});
        }
        rep.add("rigidity_zigzag", r, tol);
    }
    {
        // Left/right traces of vertex projectors equal the dimension of the channel.
        double r = 0.0;
        for (int x = 0; x < n; ++x) {
            Morphism id = identity(s, Obj::simple(x));
            r = std::max({r, std::abs(trace_left(id) - s.qdim(x)), std::abs(trace_right(id) - s.qdim(x))});
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int m = 0; m < N[a][b][c]; ++m) {
                        Morphism p = compose(splitting(s, a, b, c, m), fusion(s, a, b, c, m));
                        r = std::max({r, std::abs(trace_left(p) - s.qdim(c)), std::abs(trace_right(p) - s.qdim(c))});
                    }
        rep.add("pivotal_spherical_traces", r, tol);
    }
    {
        double rc = 0.0, rF = 0.0, rR = 0.0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    if (!N[a][b][c]) continue;
                    rc = std::max(rc, maxabs(s.Ublock(G.identity, a, b, c) - Mat::Identity(N[a][b][c], N[a][b][c])));
                    for (int g = 0; g < ng; ++g)
                        for (int h = 0; h < ng; ++h) {
                            Mat lhs = s.Ublock(h, a, b, c) * s.Ublock(g, s.act(h, a), s.act(h, b), s.act(h, c));
                            rc = std::max(rc, maxabs(lhs - s.Ublock(G(g, h), a, b, c)));
                        }
                    if (s.braided)
                        for (int g = 0; g < ng; ++g) {
                            int ab = s.act(s.grade(a), b);
                            Mat lhs = s.Rblock(a, b, c) * s.Ublock(g, ab, a, c);
                            Mat rhs = s.Ublock(g, a, b, c) * s.Rblock(s.act(g, a), s.act(g, b), s.act(g, c));
                            rR = std::max(rR, maxabs(lhs - rhs));
                        }
                }
        for (int g = 0; g < ng; ++g)
            for (const auto& [k, fb] : s.F) {
                auto [a, b, c, d] = k;
                const FBlock* fg = s.fblock(s.act(g, a), s.act(g, b), s.act(g, c), s.act(g, d));
                if (!fg) {
                    rF = 1.0;
                    continue;
                }
                Mat VL = Mat::Zero(fb.rows.size(), fg->rows.size()), VR = Mat::Zero(fb.cols.size(), fg->cols.size());
                for (size_t r = 0; r < fb.rows.size(); ++r) {
                    auto [e, al, be] = fb.rows[r];
                    Mat U1 = s.Ublock(g, a, b, e), U2 = s.Ublock(g, e, c, d);
                    for (int al2 = 0; al2 < U1.cols(); ++al2)
                        for (int be2 = 0; be2 < U2.cols(); ++be2)
                            VL(r, fg->row_ix.at({s.act(g, e), al2, be2})) = U1(al, al2) * U2(be, be2);
                }
                for (size_t q = 0; q < fb.cols.size(); ++q) {
                    auto [f, mu, nu] = fb.cols[q];
                    Mat U1 = s.Ublock(g, b, c, f), U2 = s.Ublock(g, a, f, d);
                    for (int mu2 = 0; mu2 < U1.cols(); ++mu2)
                        for (int nu2 = 0; nu2 < U2.cols(); ++nu2)
                            VR(q, fg->col_ix.at({s.act(g, f), mu2, nu2})) = U1(mu, mu2) * U2(nu, nu2);
                }
                rF = std::max(rF, maxabs(fb.M * VR - VL * fg->M));
            }
        rep.add("action_U_cocycle", rc, tol);
        rep.add("action_F_intertwining", rF, tol);
        if (s.braided) rep.add("action_R_intertwining", rR, tol);
    }
    if (s.braided) {
        double rinv = 0.0;
        for (const auto& [k, m] : s.R) {
            if (m.rows() != m.cols()) {
                rinv = 1.0;
                continue;
            }
            Eigen::JacobiSVD<Mat> svd(m);
            double smin = svd.singularValues().minCoeff();
            if (smin < tol) rinv = std::max(rinv, 1.0 - smin);
        }
        rep.add("r_invertible", rinv, tol);
        double h1 = 0.0, h2 = 0.0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int f = 0; f < n; ++f)
                        for (int m = 0; m < N[b][c][f]; ++m) {
                            // b_{a, bc} o (id_a (x) psi^{bc}_f) = (^a psi^{bc}_f (x) id_a) o b_{a, f}
                            Obj A = Obj::simple(a);
                            Morphism psi = splitting(s, b, c, f, m);
                            Morphism lhs = compose(braid(s, A, Obj::word({b, c})), tensor(identity(s, A), psi));
                            Morphism rhs = compose(tensor(act(s.grade(a), psi), identity(s, A)), braid(s, A, Obj::simple(f)));
                            h2 = std::max(h2, dist(lhs, rhs));
                        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int f = 0; f < n; ++f)
                    for (int m = 0; m < N[a][b][f]; ++m)
                        for (int c = 0; c < n; ++c) {
                            // b_{ab, c} o (psi^{ab}_f (x) id_c) = (id_{^f c} (x) psi^{ab}_f) o b_{f, c}
                            Obj Cc = Obj::simple(c);
                            Morphism psi = splitting(s, a, b, f, m);
                            Morphism lhs = compose(braid(s, Obj::word({a, b}), Cc), tensor(psi, identity(s, Cc)));
                            Morphism rhs = compose(tensor(identity(s, Obj::simple(s.act(s.grade(f), c))), psi),
                                                   braid(s, Obj::simple(f), Cc));
                            h1 = std::max(h1, dist(lhs, rhs));
                        }
        rep.add("hexagon_first_argument", h1, tol);
        rep.add("hexagon_second_argument", h2, tol);
    }
    if (s.unitary) {
        double r = 0.0;
        auto unit_res = [](const Mat& m) {
            if (m.size() == 0) return 0.0;
            if (m.rows() != m.cols()) return 1.0;
            return maxabs(m * m.adjoint() - Mat::Identity(m.rows(), m.rows()));
        };
        for (const auto& [k, fb] : s.F) r = std::max(r, unit_res(fb.M));
        for (const auto& [k, m] : s.R) r = std::max(r, unit_res(m));
        for (const auto& [k, m] : s.U) r = std::max(r, unit_res(m));
        rep.add("unitarity", r, tol);
    }
    rep.add("global_dim_positive", s.global_dim() > 0.0 ? 0.0 : 1.0, 0.5);
    return rep;
}

}  // namespace gcross
