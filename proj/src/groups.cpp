#include "qcy/groups.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qcy/errors.hpp"

namespace qcy {

CycMat CycMat::identity(int dim) {
    CycMat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = Cyc24::integer(1);
    return m;
}

CycMat operator*(const CycMat& x, const CycMat& y) {
    if (x.n != y.n) throw std::invalid_argument("matrix dimension mismatch");
    CycMat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (int j = 0; j < x.n; ++j) {
                if (y.at(k, j).is_zero()) continue;
                r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        }
    return r;
}

Cyc24 CycMat::trace() const {
    Cyc24 t;
    for (int i = 0; i < n; ++i) t += at(i, i);
    return t;
}

Cyc24 CycMat::det() const {
    if (n == 1) return at(0, 0);
    Cyc24 acc;
    std::vector<int> cols(static_cast<size_t>(n) - 1);
    for (int k = 0; k < n; ++k) {
        if (at(0, k).is_zero()) continue;
        CycMat minor(n - 1);
        for (int i = 1; i < n; ++i) {
            int jj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                minor.at(i - 1, jj++) = at(i, j);
            }
        }
        Cyc24 term = at(0, k) * minor.det();
        if (k % 2) term = -term;
        acc += term;
    }
    return acc;
}

GroupElement element_mul(const GroupElement& x, const GroupElement& y) {
    GroupElement r;
    r.blocks.reserve(x.blocks.size());
    for (size_t b = 0; b < x.blocks.size(); ++b) r.blocks.push_back(x.blocks[b] * y.blocks[b]);
    return r;
}

namespace {

GroupElement identity_like(const GroupElement& g) {
    GroupElement e;
    for (const auto& b : g.blocks) e.blocks.push_back(CycMat::identity(b.n));
    return e;
}

}  // namespace

MatrixGroup group_closure(const std::vector<GroupElement>& generators, size_t cap) {
    if (generators.empty()) throw std::invalid_argument("no generators");
    MatrixGroup G;
    std::map<GroupElement, int> index;
    GroupElement e = identity_like(generators.front());
    G.elements.push_back(e);
    index.emplace(e, 0);
    std::deque<int> work{0};
    while (!work.empty()) {
        int i = work.front();
        work.pop_front();
        for (const auto& g : generators) {
            GroupElement next = element_mul(G.elements[static_cast<size_t>(i)], g);
            if (index.count(next)) continue;
            if (G.elements.size() >= cap) throw closure_cap_exceeded(cap);
            index.emplace(next, static_cast<int>(G.elements.size()));
            G.elements.push_back(std::move(next));
            work.push_back(static_cast<int>(G.elements.size()) - 1);
        }
    }
    const int n = static_cast<int>(G.elements.size());
    // inverses by powering (every element has finite order)
    G.inverse_of.assign(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        GroupElement prev = G.elements[static_cast<size_t>(i)];
        GroupElement cur = prev;
        while (!(cur == G.elements[0])) {
            prev = cur;
            cur = element_mul(cur, G.elements[static_cast<size_t>(i)]);
        }
        // g^k = e, prev = g^{k-1}
        G.inverse_of[static_cast<size_t>(i)] = index.at(prev);
    }
    // conjugacy classes: orbits under conjugation by the generators (these
    // generate the whole conjugation action)
    std::vector<std::pair<int, int>> gen_pairs;  // (gen index, inverse index)
    for (const auto& g : generators) {
        int gi = index.at(g);
        gen_pairs.emplace_back(gi, G.inverse_of[static_cast<size_t>(gi)]);
    }
    G.class_index.assign(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        if (G.class_index[static_cast<size_t>(i)] >= 0) continue;
        int cls = static_cast<int>(G.classes.size());
        G.classes.emplace_back();
        std::deque<int> orbit{i};
        G.class_index[static_cast<size_t>(i)] = cls;
        while (!orbit.empty()) {
            int x = orbit.front();
            orbit.pop_front();
            G.classes[static_cast<size_t>(cls)].push_back(x);
            for (const auto& [gi, gj] : gen_pairs) {
                GroupElement conj = element_mul(
                    element_mul(G.elements[static_cast<size_t>(gi)], G.elements[static_cast<size_t>(x)]),
                    G.elements[static_cast<size_t>(gj)]);
                int idx = index.at(conj);
                if (G.class_index[static_cast<size_t>(idx)] < 0) {
                    G.class_index[static_cast<size_t>(idx)] = cls;
                    orbit.push_back(idx);
                }
            }
        }
        std::sort(G.classes[static_cast<size_t>(cls)].begin(),
                  G.classes[static_cast<size_t>(cls)].end());
    }
    return G;
}

MatrixGroup group_closure(const std::vector<CycMat>& generators, size_t cap) {
    std::vector<GroupElement> gens;
    for (const auto& m : generators) gens.push_back(GroupElement{{m}});
    return group_closure(gens, cap);
}

// ---- group data files -------------------------------------------------------

namespace {

Rat parse_rational_token(const std::string& tok, size_t line_no) {
    auto slash = tok.find('/');
    if (slash == std::string::npos) throw parse_error("expected p/q rational in group file", line_no);
    try {
        Int num(tok.substr(0, slash));
        Int den(tok.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator", line_no);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw parse_error("bad rational '" + tok + "'", line_no);
    }
}

Cyc24 parse_scalar_tokens(const std::vector<std::string>& toks, size_t line_no) {
    if (toks.size() != 8) throw parse_error("scalar needs 8 rationals", line_no);
    Cyc24 v;
    for (size_t k = 0; k < 8; ++k) v.c[k] = parse_rational_token(toks[k], line_no);
    return v;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

}  // namespace

const RepData& GroupData::action(const std::string& action_name) const {
    for (const auto& r : actions)
        if (r.name == action_name) return r;
    for (const auto& r : irreps)
        if (r.name == action_name) return r;
    throw std::invalid_argument("group '" + name + "' has no action '" + action_name + "'");
}

GroupData parse_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open group file " + path);
    GroupData gd;
    auto slash = path.find_last_of('/');
    gd.dir = slash == std::string::npos ? "." : path.substr(0, slash);

    RepData* current = nullptr;
    int current_gen = -1;
    int rows_read = 0;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "group") {
            if (toks.size() != 2) throw parse_error("group needs a name", line_no);
            gd.name = toks[1];
        } else if (kw == "generators") {
            gd.generators.assign(toks.begin() + 1, toks.end());
            if (gd.generators.empty()) throw parse_error("no generators listed", line_no);
        } else if (kw == "irrep" || kw == "action") {
            RepData rep;
            rep.irrep = kw == "irrep";
            if (toks.size() < 4 || toks[2] != "dim")
                throw parse_error("expected '" + kw + " <name> dim <d>'", line_no);
            rep.name = toks[1];
            rep.dim = std::stoi(toks[3]);
            if (rep.dim < 1 || rep.dim > 8) throw parse_error("unsupported dimension", line_no);
            size_t p = 4;
            if (p < toks.size()) {
                if (toks[p] != "hdet") throw parse_error("expected 'hdet'", line_no);
                ++p;
                if (p >= toks.size()) throw parse_error("hdet mode missing", line_no);
                if (toks[p] == "det")
                    rep.hdet_mode = RepData::HdetMode::Det;
                else if (toks[p] == "trivial")
                    rep.hdet_mode = RepData::HdetMode::Trivial;
                else if (toks[p] == "superpotential") {
                    rep.hdet_mode = RepData::HdetMode::Superpotential;
                    if (p + 1 >= toks.size()) throw parse_error("superpotential file missing", line_no);
                    rep.superpotential_file = toks[p + 1];
                } else
                    throw parse_error("unknown hdet mode '" + toks[p] + "'", line_no);
            }
            rep.images.assign(gd.generators.size(), CycMat(rep.dim));
            const bool is_irrep = rep.irrep;
            (is_irrep ? gd.irreps : gd.actions).push_back(std::move(rep));
            current = is_irrep ? &gd.irreps.back() : &gd.actions.back();
            current_gen = -1;
            rows_read = 0;
        } else if (kw == "gen") {
            if (!current) throw parse_error("'gen' outside a representation", line_no);
            if (toks.size() != 2) throw parse_error("gen needs a name", line_no);
            current_gen = -1;
            for (size_t k = 0; k < gd.generators.size(); ++k)
                if (gd.generators[k] == toks[1]) current_gen = static_cast<int>(k);
            if (current_gen < 0) throw parse_error("unknown generator '" + toks[1] + "'", line_no);
            rows_read = 0;
        } else if (kw == "row") {
            if (!current || current_gen < 0) throw parse_error("'row' outside a generator block", line_no);
            if (rows_read >= current->dim) throw parse_error("too many rows", line_no);
            // entries separated by '|'
            std::vector<std::vector<std::string>> entries(1);
            for (size_t k = 1; k < toks.size(); ++k) {
                if (toks[k] == "|")
                    entries.emplace_back();
                else
                    entries.back().push_back(toks[k]);
            }
            if (static_cast<int>(entries.size()) != current->dim)
                throw parse_error("row needs " + std::to_string(current->dim) + " entries", line_no);
            for (int c = 0; c < current->dim; ++c)
                current->images[static_cast<size_t>(current_gen)].at(rows_read, c) =
                    parse_scalar_tokens(entries[static_cast<size_t>(c)], line_no);
            ++rows_read;
        } else {
            throw parse_error("unknown keyword '" + kw + "' in group file", line_no);
        }
    }
    if (gd.name.empty()) throw parse_error("group file has no 'group' line", 0);
    return gd;
}

}  // namespace qcy
