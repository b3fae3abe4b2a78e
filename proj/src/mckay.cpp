#include "qcy/mckay.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qcy/errors.hpp"

namespace qcy {

ClassFn character_of_block(const MatrixGroup& g, size_t block) {
    ClassFn chi(g.classes.size());
    for (size_t c = 0; c < g.classes.size(); ++c) {
        chi[c] = g.elements[static_cast<size_t>(g.classes[c][0])].blocks[block].trace();
        for (int idx : g.classes[c])
            if (g.elements[static_cast<size_t>(idx)].blocks[block].trace() != chi[c])
                throw std::logic_error("trace not constant on a conjugacy class");
    }
    return chi;
}

Cyc24 character_inner_product(const MatrixGroup& g, const ClassFn& chi, const ClassFn& psi) {
    Cyc24 acc;
    for (size_t c = 0; c < g.classes.size(); ++c) {
        Cyc24 term = chi[c] * psi[c].conj();
        acc += Cyc24::integer(static_cast<long long>(g.classes[c].size())) * term;
    }
    return acc * Cyc24::rational(Rat(1, static_cast<long>(g.order())));
}

Mat4 McKayMatrix::as_mat4() const {
    if (entries.size() != 4) throw std::logic_error("McKay matrix is not 4x4");
    Mat4 m = zero4();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = static_cast<long long>(entries[i][j]);
    return m;
}

McKayMatrix mckay_matrix(const MatrixGroup& g, const std::vector<ClassFn>& irrep_chars,
                         const std::vector<Int>& irrep_dims, const ClassFn& v_char,
                         const Int& v_dim) {
    const size_t m = irrep_chars.size();
    McKayMatrix result;
    result.entries.assign(m, std::vector<Int>(m, Int(0)));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            Cyc24 acc;
            for (size_t c = 0; c < g.classes.size(); ++c) {
                Cyc24 term = v_char[c] * irrep_chars[j][c] * irrep_chars[i][c].conj();
                acc += Cyc24::integer(static_cast<long long>(g.classes[c].size())) * term;
            }
            acc *= Cyc24::rational(Rat(1, static_cast<long>(g.order())));
            if (!acc.is_integer())
                throw non_integer_entry("McKay entry (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") is not a rational integer");
            Int e = acc.integer_value();
            if (e < 0)
                throw non_integer_entry("McKay entry (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") is negative");
            result.entries[i][j] = e;
        }
    result.completeness_defect.assign(m, Int(0));
    for (size_t j = 0; j < m; ++j) {
        Int sum = 0;
        for (size_t i = 0; i < m; ++i) sum += result.entries[i][j] * irrep_dims[i];
        result.completeness_defect[j] = sum - v_dim * irrep_dims[j];
    }
    return result;
}

Mat4 winding_permutation(const std::vector<ClassFn>& irrep_chars, const ClassFn& hdet) {
    if (irrep_chars.size() != 4) throw std::invalid_argument("expected 4 irreducibles");
    Perm4 perm{};
    for (size_t i = 0; i < 4; ++i) {
        ClassFn target(irrep_chars[i].size());
        for (size_t c = 0; c < target.size(); ++c) target[c] = irrep_chars[i][c] * hdet[c].conj();
        int found = -1;
        for (size_t j = 0; j < 4; ++j)
            if (irrep_chars[j] == target) {
                if (found >= 0) throw no_matching_character("ambiguous character match");
                found = static_cast<int>(j);
            }
        if (found < 0)
            throw no_matching_character("chi_" + std::to_string(i) +
                                        " * conj(hdet) is not among the supplied characters");
        perm[i] = found;
    }
    return matrix_of_perm(perm);
}

Cyc24 hdet_of_linear_action(const CycMat& g) { return g.det(); }

namespace {

Cyc24 parse_coefficient(const std::string& tok, size_t line_no) {
    if (tok == "i") return Cyc24::i();
    if (tok == "-i") return -Cyc24::i();
    if (tok.find(',') != std::string::npos) {
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : tok) {
            if (ch == ',') {
                parts.push_back(cur);
                cur.clear();
            } else
                cur.push_back(ch);
        }
        parts.push_back(cur);
        if (parts.size() != 8) throw parse_error("coefficient tuple needs 8 rationals", line_no);
        Cyc24 v;
        for (size_t k = 0; k < 8; ++k) {
            auto slash = parts[k].find('/');
            Int num(parts[k].substr(0, slash == std::string::npos ? parts[k].size() : slash));
            Int den = slash == std::string::npos ? Int(1) : Int(parts[k].substr(slash + 1));
            v.c[k] = Rat(num, den);
        }
        return v;
    }
    try {
        return Cyc24::rational(Rat(Int(tok)));
    } catch (const std::runtime_error&) {
        throw parse_error("bad superpotential coefficient '" + tok + "'", line_no);
    }
}

}  // namespace

Superpotential parse_superpotential(const std::string& text) {
    Superpotential w;
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string coeff_tok, word;
        if (!(ls >> coeff_tok)) continue;
        if (!(ls >> word)) throw parse_error("superpotential line needs a word", line_no);
        std::string extra;
        if (ls >> extra) throw parse_error("trailing tokens after word", line_no);
        for (char ch : word)
            if (ch != 'x' && ch != 'y')
                throw parse_error("words use letters x and y only", line_no);
        if (w.length == 0)
            w.length = static_cast<int>(word.size());
        else if (w.length != static_cast<int>(word.size()))
            throw parse_error("words must all have the same length", line_no);
        Cyc24 coeff = parse_coefficient(coeff_tok, line_no);
        auto it = w.terms.find(word);
        if (it == w.terms.end())
            w.terms.emplace(word, coeff);
        else
            it->second += coeff;
    }
    for (auto it = w.terms.begin(); it != w.terms.end();)
        it = it->second.is_zero() ? w.terms.erase(it) : std::next(it);
    if (w.terms.empty()) throw std::invalid_argument("superpotential is zero");
    return w;
}

Superpotential load_superpotential_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open superpotential file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_superpotential(buf.str());
}

Cyc24 hdet_of_superpotential_action(const Superpotential& w, const CycMat& g) {
    if (g.n != 2) throw std::invalid_argument("superpotential actions use 2x2 matrices");
    // g(word): substitute each letter by its image and expand; words are
    // short (length <= 4), so the 2^length expansion is direct.
    std::map<std::string, Cyc24> image;
    for (const auto& [word, coeff] : w.terms) {
        std::map<std::string, Cyc24> acc{{"", coeff}};
        for (char letter : word) {
            int row = letter == 'x' ? 0 : 1;
            std::map<std::string, Cyc24> next;
            for (const auto& [prefix, pc] : acc) {
                for (int col = 0; col < 2; ++col) {
                    const Cyc24& gij = g.at(row, col);
                    if (gij.is_zero()) continue;
                    next[prefix + (col == 0 ? 'x' : 'y')] += pc * gij;
                }
            }
            acc = std::move(next);
        }
        for (const auto& [word2, pc] : acc) image[word2] += pc;
    }
    for (auto it = image.begin(); it != image.end();)
        it = it->second.is_zero() ? image.erase(it) : std::next(it);
    // ratio on the first supported word of w, then verify proportionality
    const auto& [w0, c0] = *w.terms.begin();
    auto it = image.find(w0);
    Cyc24 ratio = it == image.end() ? Cyc24() : it->second * c0.inverse();
    std::map<std::string, Cyc24> scaled;
    for (const auto& [word, coeff] : w.terms) {
        Cyc24 v = ratio * coeff;
        if (!v.is_zero()) scaled[word] = v;
    }
    if (scaled != image) throw not_eigenvector("g(w) is not a scalar multiple of w");
    return ratio;
}

McKayConstruction mckay_construction(const GroupData& gd, const std::string& action_name) {
    const RepData& act = gd.action(action_name);
    const size_t m = gd.irreps.size();
    std::vector<GroupElement> gens;
    for (size_t k = 0; k < gd.generators.size(); ++k) {
        GroupElement e;
        for (const auto& rep : gd.irreps) e.blocks.push_back(rep.images[k]);
        e.blocks.push_back(act.images[k]);
        gens.push_back(std::move(e));
    }
    McKayConstruction out;
    out.group = group_closure(gens);
    for (size_t b = 0; b < m; ++b) {
        out.irrep_chars.push_back(character_of_block(out.group, b));
        out.irrep_dims.emplace_back(gd.irreps[b].dim);
    }
    // supplied irreducibles must be irreducible and pairwise distinct
    for (size_t i = 0; i < m; ++i) {
        Cyc24 norm = character_inner_product(out.group, out.irrep_chars[i], out.irrep_chars[i]);
        if (!(norm == Cyc24::integer(1)))
            throw std::invalid_argument("'" + gd.irreps[i].name + "' is not irreducible");
        for (size_t j = 0; j < i; ++j)
            if (out.irrep_chars[i] == out.irrep_chars[j])
                throw std::invalid_argument("duplicate irreducible characters supplied");
    }
    ClassFn v_char = character_of_block(out.group, m);
    out.mckay = mckay_matrix(out.group, out.irrep_chars, out.irrep_dims, v_char, Int(act.dim));
    out.M = out.mckay.as_mat4();

    out.hdet.resize(out.group.classes.size());
    switch (act.hdet_mode) {
        case RepData::HdetMode::Det:
            for (size_t c = 0; c < out.group.classes.size(); ++c)
                out.hdet[c] =
                    out.group.elements[static_cast<size_t>(out.group.classes[c][0])].blocks[m].det();
            break;
        case RepData::HdetMode::Trivial:
            for (auto& v : out.hdet) v = Cyc24::integer(1);
            break;
        case RepData::HdetMode::Superpotential: {
            Superpotential w = load_superpotential_file(gd.dir + "/" + act.superpotential_file);
            for (size_t c = 0; c < out.group.classes.size(); ++c)
                out.hdet[c] = hdet_of_superpotential_action(
                    w, out.group.elements[static_cast<size_t>(out.group.classes[c][0])].blocks[m]);
            break;
        }
        default:
            throw std::invalid_argument("action '" + action_name + "' declares no hdet mode");
    }
    out.P = winding_permutation(out.irrep_chars, out.hdet);
    return out;
}

}  // namespace qcy
