#include "qsk/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "qsk/arith.hpp"

namespace qsk {

void SpacePresentation::finalize() {
    if (finalized_)
        throw error("presentation already finalized");
    // ids must be stable under declaration order, so sort canonically first
    std::vector<std::size_t> perm(gens.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        const auto& ga = gens[a];
        const auto& gb = gens[b];
        if (ga.dim != gb.dim)
            return ga.dim < gb.dim;
        if (ga.family != gb.family)
            return ga.family < gb.family;
        return ga.index < gb.index;
    });
    std::vector<SpaceGen> sorted;
    sorted.reserve(gens.size());
    std::vector<int> old2new(gens.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        old2new[perm[i]] = (int)i;
        sorted.push_back(gens[perm[i]]);
    }
    auto remap_mono = [&](const BaseMono& m) {
        BaseMono r;
        for (auto& [g, e] : m)
            r.emplace_back(old2new[g], e);
        std::sort(r.begin(), r.end());
        return r;
    };
    std::map<std::pair<int, int>, BaseElt> sq2;
    for (auto& [key, elt] : sq_table) {
        BaseElt e2;
        for (auto& m : elt)
            e2.push_back(remap_mono(m));
        std::sort(e2.begin(), e2.end());
        sq2[{key.first, old2new[key.second]}] = std::move(e2);
    }
    sq_table = std::move(sq2);
    std::map<int, BaseTensor> cp2;
    for (auto& [g, tens] : coprod_cross) {
        BaseTensor t2;
        for (auto& tt : tens)
            t2.push_back({remap_mono(tt.a), remap_mono(tt.b)});
        std::sort(t2.begin(), t2.end());
        cp2[old2new[g]] = std::move(t2);
    }
    coprod_cross = std::move(cp2);
    gens = std::move(sorted);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto key = std::make_pair(gens[i].family, gens[i].index);
        if (by_name_.count(key))
            throw error("duplicate generator " + gen_name((int)i) + " in " + name);
        by_name_[key] = (int)i;
    }
    finalized_ = true;
}

int SpacePresentation::gen_id(const std::string& family, const std::vector<int>& index) const {
    auto it = by_name_.find({family, index});
    return it == by_name_.end() ? -1 : it->second;
}

std::string SpacePresentation::gen_name(int id) const {
    const auto& g = gens.at(id);
    std::string s = g.family + "(";
    for (std::size_t i = 0; i < g.index.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(g.index[i]);
    }
    return s + ")";
}

int SpacePresentation::height_of_gen(int id) const {
    const auto& g = gens.at(id);
    switch (g.rel) {
    case Rel::Ext:
        return 2;
    case Rel::Trunc:
        return g.height;
    case Rel::Poly:
    default:
        return 0;
    }
}

long long base_dim(const SpacePresentation& sp, const BaseMono& m) {
    long long d = 0;
    for (auto& [g, e] : m)
        d += (long long)sp.gen(g).dim * e;
    return d;
}

int base_height(const SpacePresentation& sp, const BaseMono& m) {
    int h = 0;
    for (auto& [g, e] : m) {
        int hg = sp.height_of_gen(g);
        if (hg && (h == 0 || hg < h))
            h = hg;
    }
    return h;
}

std::string base_mono_name(const SpacePresentation& sp, const BaseMono& m) {
    if (m.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (int e = 0; e < m[i].second; ++e) {
            if (!s.empty())
                s += "*";
            s += sp.gen_name(m[i].first);
        }
    }
    return s;
}

BaseElt base_add(BaseElt a, const BaseElt& b) {
    BaseElt out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j]))
            out.push_back(std::move(a[i++]));
        else if (i == a.size() || b[j] < a[i])
            out.push_back(b[j++]);
        else {
            ++i;
            ++j;
        } // mod 2 cancellation
    }
    return out;
}

namespace {

// zero (empty optional semantics: empty mono list) when the discipline kills it
bool mono_mul(const SpacePresentation& sp, const BaseMono& a, const BaseMono& b, BaseMono& out) {
    out.clear();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
            out.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first)
            out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    for (auto& [g, e] : out) {
        int h = sp.height_of_gen(g);
        if (h && e >= h)
            return false;
    }
    return true;
}

} // namespace

BaseElt base_mul(const SpacePresentation& sp, const BaseElt& a, const BaseElt& b) {
    BaseElt out;
    BaseMono prod;
    for (auto& ma : a)
        for (auto& mb : b)
            if (mono_mul(sp, ma, mb, prod))
                out = base_add(std::move(out), {prod});
    return out;
}

BaseElt base_pow(const SpacePresentation& sp, const BaseElt& a, int e) {
    BaseElt r = {BaseMono{}};
    for (int i = 0; i < e; ++i)
        r = base_mul(sp, r, a);
    return r;
}

std::vector<BaseMono> base_basis(const SpacePresentation& sp, int dim) {
    if (dim > sp.maxdim)
        throw domain_error(sp.name + ": basis requested above declared maxdim " + std::to_string(sp.maxdim));
    std::vector<BaseMono> out;
    BaseMono cur;
    // generators are sorted by dim, so scan from one side
    std::function<void(int, int)> rec = [&](int from, int remaining) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t g = from; g < sp.gens.size(); ++g) {
            int d = sp.gens[g].dim;
            if (d > remaining)
                break;
            int h = sp.height_of_gen((int)g);
            int emax = remaining / d;
            if (h)
                emax = std::min(emax, h - 1);
            for (int e = 1; e <= emax; ++e) {
                cur.emplace_back((int)g, e);
                rec((int)g + 1, remaining - e * d);
                cur.pop_back();
            }
        }
    };
    rec(0, dim);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

BaseTensor tensor_add(BaseTensor a, const BaseTensor& b) {
    BaseTensor out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j]))
            out.push_back(std::move(a[i++]));
        else if (i == a.size() || b[j] < a[i])
            out.push_back(b[j++]);
        else {
            ++i;
            ++j;
        }
    }
    return out;
}

BaseTensor tensor_mul(const SpacePresentation& sp, const BaseTensor& x, const BaseTensor& y) {
    BaseTensor out;
    BaseMono pa, pb;
    for (auto& tx : x)
        for (auto& ty : y)
            if (mono_mul(sp, tx.a, ty.a, pa) && mono_mul(sp, tx.b, ty.b, pb))
                out = tensor_add(std::move(out), {TensorTerm{pa, pb}});
    return out;
}

} // namespace

BaseTensor base_coprod(const SpacePresentation& sp, const BaseMono& m) {
    BaseTensor r = {TensorTerm{{}, {}}}; // 1 (x) 1
    for (auto& [g, e] : m) {
        BaseTensor psi_g = {TensorTerm{{{g, 1}}, {}}, TensorTerm{{}, {{g, 1}}}};
        auto it = sp.coprod_cross.find(g);
        if (it != sp.coprod_cross.end())
            psi_g = tensor_add(std::move(psi_g), it->second);
        for (int k = 0; k < e; ++k)
            r = tensor_mul(sp, r, psi_g);
    }
    return r;
}

BaseElt base_sq_act(const SpacePresentation& sp, int r, const BaseElt& e) {
    if (r < 0)
        throw domain_error("Sq_* with negative index");
    if (r == 0)
        return e;
    // Cartan over the factors of each monomial, one generator power at a time
    std::function<BaseElt(int, const BaseMono&)> act_mono = [&](int rr, const BaseMono& m) -> BaseElt {
        if (rr == 0)
            return {m};
        if (m.empty())
            return {};
        if (base_dim(sp, m) < rr)
            return {};
        // split off one copy of the first generator
        int g = m[0].first;
        BaseMono rest = m;
        if (rest[0].second > 1)
            --rest[0].second;
        else
            rest.erase(rest.begin());
        const auto& gen = sp.gen(g);
        BaseElt out;
        for (int i = 0; i <= rr; ++i) {
            // Sq^i_* g
            BaseElt part;
            if (i == 0)
                part = {BaseMono{{g, 1}}};
            else if (i > gen.dim)
                continue;
            else {
                if (gen.dim > sp.maxdim)
                    throw domain_error(sp.name + ": Steenrod action above declared bound");
                auto it = sp.sq_table.find({i, g});
                if (it == sp.sq_table.end())
                    continue; // zero below the bound
                part = it->second;
            }
            BaseElt tail = act_mono(rr - i, rest);
            out = base_add(std::move(out), base_mul(sp, part, tail));
        }
        return out;
    };
    BaseElt out;
    for (auto& m : e)
        out = base_add(std::move(out), act_mono(r, m));
    return out;
}

BaseElt base_square_root(const SpacePresentation& sp, const BaseElt& e) {
    BaseElt out;
    for (auto& m : e) {
        long long d = base_dim(sp, m);
        if (d % 2)
            continue;
        out = base_add(std::move(out), base_sq_act(sp, (int)(d / 2), {m}));
    }
    return out;
}

/* ------------------------------- file io ------------------------------- */

namespace {

void strip(std::string& s) {
    auto is_sp = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && is_sp(s.back()))
        s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && is_sp(s[i]))
        ++i;
    s.erase(0, i);
}

// "family(i,j,...)" -> (family, {i,j,...})
std::pair<std::string, std::vector<int>> parse_gen_name(const std::string& tok) {
    auto lp = tok.find('(');
    if (lp == std::string::npos || tok.back() != ')')
        throw error("bad generator name: " + tok);
    std::string fam = tok.substr(0, lp);
    std::vector<int> idx;
    std::string inner = tok.substr(lp + 1, tok.size() - lp - 2);
    std::stringstream ss(inner);
    std::string piece;
    while (std::getline(ss, piece, ','))
        idx.push_back(std::stoi(piece));
    return {fam, idx};
}

} // namespace

BaseElt parse_base_expr(const SpacePresentation& sp, const std::string& text) {
    // base grammar: sum of products of generator names; "1" and "0" literal
    BaseElt out;
    std::stringstream terms(text);
    std::string term;
    while (std::getline(terms, term, '+')) {
        strip(term);
        if (term.empty())
            throw error("empty term in base expression: " + text);
        if (term == "0")
            continue;
        BaseElt prod = {BaseMono{}};
        std::stringstream facs(term);
        std::string fac;
        while (std::getline(facs, fac, '*')) {
            strip(fac);
            if (fac == "1")
                continue;
            int pow = 1;
            auto caret = fac.find('^');
            if (caret != std::string::npos) {
                pow = std::stoi(fac.substr(caret + 1));
                fac = fac.substr(0, caret);
                strip(fac);
            }
            auto [family, idx] = parse_gen_name(fac);
            int g = sp.gen_id(family, idx);
            if (g < 0)
                throw error("unknown generator " + fac + " in " + sp.name);
            BaseElt ge = {BaseMono{{g, 1}}};
            for (int k = 0; k < pow; ++k)
                prod = base_mul(sp, prod, ge);
        }
        out = base_add(std::move(out), prod);
    }
    return out;
}

std::string base_elt_to_string(const SpacePresentation& sp, const BaseElt& e) {
    if (e.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i)
            s += " + ";
        if (e[i].empty()) {
            s += "1";
            continue;
        }
        std::string t;
        for (auto& [g, ex] : e[i]) {
            if (!t.empty())
                t += "*";
            t += sp.gen_name(g);
            if (ex > 1)
                t += "^" + std::to_string(ex);
        }
        s += t;
    }
    return s;
}

std::string base_tensor_to_string(const SpacePresentation& sp, const BaseTensor& t) {
    if (t.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i)
            s += " + ";
        s += base_elt_to_string(sp, {t[i].a}) + " (x) " + base_elt_to_string(sp, {t[i].b});
    }
    return s;
}

SpacePresentation load_space(std::istream& in, const std::string& what) {
    SpacePresentation sp;
    std::string line;
    int lineno = 0;
    struct Pending {
        int kind; // 0 = sq, 1 = coprod
        int r;
        std::string gen, rhs;
        int lineno;
    };
    std::vector<Pending> pending;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        strip(line);
        if (line.empty())
            continue;
        std::stringstream ss(line);
        std::string kw;
        ss >> kw;
        if (kw == "space") {
            ss >> sp.name;
        } else if (kw == "bottom") {
            ss >> sp.bottom;
        } else if (kw == "maxdim") {
            ss >> sp.maxdim;
        } else if (kw == "gen") {
            std::string nm, dimtok, reltok, prim;
            ss >> nm >> dimtok >> reltok;
            ss >> prim;
            SpaceGen g;
            std::tie(g.family, g.index) = parse_gen_name(nm);
            if (dimtok.rfind("dim=", 0) != 0 || reltok.rfind("rel=", 0) != 0)
                throw error(what + ":" + std::to_string(lineno) + ": bad gen line");
            g.dim = std::stoi(dimtok.substr(4));
            std::string rel = reltok.substr(4);
            if (rel == "poly")
                g.rel = Rel::Poly;
            else if (rel == "ext")
                g.rel = Rel::Ext;
            else if (rel.rfind("trunc:", 0) == 0) {
                g.rel = Rel::Trunc;
                g.height = std::stoi(rel.substr(6));
            } else
                throw error(what + ":" + std::to_string(lineno) + ": bad rel " + rel);
            g.primitive = (prim == "primitive");
            sp.gens.push_back(std::move(g));
        } else if (kw == "sq") {
            Pending p;
            p.kind = 0;
            p.lineno = lineno;
            ss >> p.r >> p.gen;
            std::string eq;
            ss >> eq;
            if (eq != "=")
                throw error(what + ":" + std::to_string(lineno) + ": expected '='");
            std::getline(ss, p.rhs);
            pending.push_back(std::move(p));
        } else if (kw == "coprod") {
            Pending p;
            p.kind = 1;
            p.lineno = lineno;
            ss >> p.gen;
            std::string eq;
            ss >> eq;
            if (eq != "=")
                throw error(what + ":" + std::to_string(lineno) + ": expected '='");
            std::getline(ss, p.rhs);
            pending.push_back(std::move(p));
        } else {
            throw error(what + ":" + std::to_string(lineno) + ": unknown keyword " + kw);
        }
    }
    sp.finalize();
    for (auto& p : pending) {
        auto [family, idx] = parse_gen_name(p.gen);
        int g = sp.gen_id(family, idx);
        if (g < 0)
            throw error(what + ":" + std::to_string(p.lineno) + ": unknown generator " + p.gen);
        if (p.kind == 0) {
            BaseElt rhs = parse_base_expr(sp, p.rhs);
            if (!rhs.empty())
                sp.sq_table[{p.r, g}] = std::move(rhs);
        } else {
            // tensor expression: sum of "lhs (x) rhs"
            BaseTensor cross;
            std::string rhs = p.rhs;
            std::size_t pos = 0;
            // split on '+' at top level; each piece "a (x) b"
            std::vector<std::string> pieces;
            std::string cur;
            for (std::size_t i = 0; i < rhs.size(); ++i) {
                if (rhs[i] == '+' ) {
                    pieces.push_back(cur);
                    cur.clear();
                } else
                    cur += rhs[i];
            }
            pieces.push_back(cur);
            (void)pos;
            for (auto& piece : pieces) {
                auto mid = piece.find("(x)");
                if (mid == std::string::npos)
                    throw error(what + ":" + std::to_string(p.lineno) + ": tensor term without (x)");
                std::string lhs_s = piece.substr(0, mid), rhs_s = piece.substr(mid + 3);
                BaseElt le = parse_base_expr(sp, lhs_s), re = parse_base_expr(sp, rhs_s);
                for (auto& lm : le)
                    for (auto& rm : re)
                        cross.push_back({lm, rm});
            }
            std::sort(cross.begin(), cross.end());
            sp.coprod_cross[g] = std::move(cross);
            // generator is no longer primitive
        }
    }
    // fix primitive flags against explicit coproducts
    for (auto& [g, t] : sp.coprod_cross)
        if (!t.empty())
            sp.gens[g].primitive = false;
    return sp;
}

SpacePresentation load_space_file(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw error("cannot open " + path);
    return load_space(f, path);
}

void save_space(std::ostream& out, const SpacePresentation& sp) {
    out << "space " << sp.name << "\n";
    out << "bottom " << sp.bottom << "\n";
    out << "maxdim " << sp.maxdim << "\n";
    for (std::size_t g = 0; g < sp.gens.size(); ++g) {
        const auto& gen = sp.gens[g];
        out << "gen " << sp.gen_name((int)g) << " dim=" << gen.dim << " rel=";
        switch (gen.rel) {
        case Rel::Poly:
            out << "poly";
            break;
        case Rel::Ext:
            out << "ext";
            break;
        case Rel::Trunc:
            out << "trunc:" << gen.height;
            break;
        }
        if (gen.primitive)
            out << " primitive";
        out << "\n";
    }
    for (auto& [key, elt] : sp.sq_table)
        out << "sq " << key.first << " " << sp.gen_name(key.second) << " = " << base_elt_to_string(sp, elt) << "\n";
    for (auto& [g, t] : sp.coprod_cross)
        out << "coprod " << sp.gen_name(g) << " = " << base_tensor_to_string(sp, t) << "\n";
}

} // namespace qsk
