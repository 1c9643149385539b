#include "milnor/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace milnor::io {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<int> parse_letter_list(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> letters;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("braid word: bad token '" + tok + "'");
        }
        if (used != tok.size())
            throw std::invalid_argument("braid word: bad token '" + tok + "'");
        letters.push_back(v);
    }
    return letters;
}

ordered_json parse_json(const std::string& text, const char* what) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw std::invalid_argument(std::string(what) + ": malformed JSON");
    return j;
}

ordered_json arc_to_json(const arc& a) {
    ordered_json j;
    j["base"] = {a.base.k, a.base.l};
    j["conjugator"] = a.conjugator.letters;
    return j;
}

arc arc_from_json(int m, const ordered_json& j, handedness hand,
                  const char* what) {
    if (!j.is_object() || !j.contains("base") || !j["base"].is_array() ||
        j["base"].size() != 2 || !j["base"][0].is_number_integer() ||
        !j["base"][1].is_number_integer())
        throw std::invalid_argument(std::string(what) +
                                    ": need \"base\":[k,l]");
    std::vector<int> letters;
    if (j.contains("conjugator")) {
        if (!j["conjugator"].is_array())
            throw std::invalid_argument(std::string(what) +
                                        ": \"conjugator\" must be an array");
        for (const auto& v : j["conjugator"]) {
            if (!v.is_number_integer())
                throw std::invalid_argument(
                    std::string(what) + ": conjugator entries must be ints");
            letters.push_back(v.get<int>());
        }
    }
    segment_chord base =
        make_chord(m, j["base"][0].get<int>(), j["base"][1].get<int>());
    return make_arc(m, base, braid_word(m + 1, std::move(letters)), hand);
}

const char* symplectic_name(symplectic_kind k) {
    return k == symplectic_kind::standard_cotangent ? "standard_cotangent"
                                                    : "exotic_structure";
}

const char* diffeo_name(diffeo_kind k) {
    return k == diffeo_kind::standard_cotangent ? "standard_cotangent"
                                                : "distinguished_by_pairing";
}

}  // namespace

braid_word parse_braid_word(int strands, const std::string& text) {
    return braid_word(strands, parse_letter_list(text));
}

std::string braid_word_text(const braid_word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w.letters[i]);
    }
    return out;
}

arc parse_arc_text(int m, const std::string& text, handedness hand) {
    std::size_t bpos = text.find("base=");
    if (bpos == std::string::npos)
        throw std::invalid_argument("arc: expected 'base=k,l'");
    std::istringstream in(text.substr(bpos + 5));
    int k = 0, l = 0;
    char comma = 0;
    if (!(in >> k >> comma >> l) || comma != ',')
        throw std::invalid_argument("arc: expected 'base=k,l'");
    std::string word;
    std::size_t cpos = text.find("conj=", bpos);
    if (cpos != std::string::npos) {
        std::size_t open = text.find('"', cpos);
        std::size_t close =
            open == std::string::npos ? open : text.find('"', open + 1);
        if (close == std::string::npos)
            throw std::invalid_argument("arc: expected conj=\"word\"");
        word = text.substr(open + 1, close - open - 1);
    }
    return make_arc(m, make_chord(m, k, l), parse_braid_word(m + 1, word),
                    hand);
}

std::string arc_text(const arc& a) {
    return "base=" + std::to_string(a.base.k) + "," +
           std::to_string(a.base.l) + "; conj=\"" +
           braid_word_text(a.conjugator) + "\"";
}

arc parse_arc_json(int m, const std::string& text, handedness hand) {
    return arc_from_json(m, parse_json(text, "arc"), hand, "arc");
}

std::string arc_json(const arc& a) { return arc_to_json(a).dump(); }

std::string class_json(const homology_class& c) {
    return ordered_json(c.a).dump();
}

quiver_rep parse_rep_json(const std::string& text) {
    ordered_json j = parse_json(text, "quiver rep");
    if (!j.is_object() || !j.contains("dims") || !j["dims"].is_array())
        throw std::invalid_argument("quiver rep: need \"dims\":[...]");
    std::vector<int> dims;
    for (const auto& v : j["dims"]) {
        if (!v.is_number_integer())
            throw std::invalid_argument("quiver rep: dims must be integers");
        dims.push_back(v.get<int>());
    }
    const int m = static_cast<int>(dims.size());
    if (!j.contains("maps") || !j["maps"].is_array())
        throw std::invalid_argument("quiver rep: need \"maps\":[...]");
    if (static_cast<int>(j["maps"].size()) != std::max(m - 1, 0))
        throw std::invalid_argument("quiver rep: need m-1 maps");
    std::vector<gf2::matrix> maps;
    for (int i = 0; i + 1 < m; ++i) {
        const auto& jm = j["maps"][i];
        if (!jm.is_array())
            throw std::invalid_argument("quiver rep: map " +
                                        std::to_string(i + 1) +
                                        " must be an array of rows");
        if (dims[i] > 64 || dims[i + 1] > 64)
            throw std::invalid_argument(
                "quiver rep: dimensions above 64 are not supported");
        gf2::matrix M(dims[i + 1], dims[i]);
        if (static_cast<int>(jm.size()) != dims[i + 1])
            throw std::invalid_argument("quiver rep: map " +
                                        std::to_string(i + 1) +
                                        " has wrong row count");
        for (int r = 0; r < dims[i + 1]; ++r) {
            if (!jm[r].is_array() ||
                static_cast<int>(jm[r].size()) != dims[i])
                throw std::invalid_argument("quiver rep: map " +
                                            std::to_string(i + 1) + " row " +
                                            std::to_string(r) +
                                            " has wrong length");
            for (int c = 0; c < dims[i]; ++c) {
                if (!jm[r][c].is_number_integer() ||
                    (jm[r][c].get<int>() != 0 && jm[r][c].get<int>() != 1))
                    throw std::invalid_argument(
                        "quiver rep: entries must be 0 or 1");
                M.set(r, c, jm[r][c].get<int>() == 1);
            }
        }
        maps.push_back(std::move(M));
    }
    return make_rep(m, std::move(dims), std::move(maps));
}

std::string rep_json(const quiver_rep& R) {
    ordered_json j;
    j["dims"] = R.dims;
    j["maps"] = ordered_json::array();
    for (const auto& M : R.maps) {
        ordered_json rows = ordered_json::array();
        for (int r = 0; r < M.rows; ++r) {
            ordered_json row = ordered_json::array();
            for (int c = 0; c < M.cols; ++c) row.push_back(M.get(r, c) ? 1 : 0);
            rows.push_back(std::move(row));
        }
        j["maps"].push_back(std::move(rows));
    }
    return j.dump();
}

std::string barcode_json(const barcode& bc) {
    ordered_json j = ordered_json::array();
    for (const auto& b : bc) {
        ordered_json jb;
        jb["k"] = b.iv.k;
        jb["l"] = b.iv.l;
        jb["shift"] = b.iv.shift;
        jb["mult"] = b.mult;
        j.push_back(std::move(jb));
    }
    return j.dump();
}

std::string tuple_json(const vanishing_tuple& T) {
    ordered_json j;
    j["arcs"] = ordered_json::array();
    for (const auto& a : T.arcs) j["arcs"].push_back(arc_to_json(a));
    return j.dump();
}

std::string tuple_text(const vanishing_tuple& T) {
    std::string out;
    for (std::size_t i = 0; i < T.arcs.size(); ++i) {
        if (i) out += ' ';
        const arc& a = T.arcs[i];
        out += "(" + std::to_string(a.base.k) + "," +
               std::to_string(a.base.l) + ")";
        if (!a.conjugator.letters.empty())
            out += "~\"" + braid_word_text(a.conjugator) + "\"";
    }
    return out;
}

std::string report_json(const classification_report& r) {
    ordered_json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["arc"] = arc_to_json(r.input);
    j["half_twist_nf"] = r.half_twist_nf;
    if (r.matched_segment)
        j["matched_segment"] = {r.matched_segment->k, r.matched_segment->l};
    else
        j["matched_segment"] = nullptr;
    j["symplectic"] = symplectic_name(r.symplectic);
    j["diffeo"] = diffeo_name(r.diffeo.kind);
    if (r.h_class)
        j["homology_class"] = r.h_class->a;
    else
        j["homology_class"] = nullptr;
    if (r.self_int)
        j["self_intersection"] = *r.self_int;
    else
        j["self_intersection"] = nullptr;
    return j.dump();
}

std::string report_text(const classification_report& r) {
    std::ostringstream os;
    os << "m: " << r.m << "\n";
    os << "n: " << r.n << "\n";
    os << "arc: " << arc_text(r.input) << "\n";
    os << "half-twist nf: " << r.half_twist_nf << "\n";
    if (r.matched_segment)
        os << "matched segment: (" << r.matched_segment->k << ","
           << r.matched_segment->l << ")\n";
    else
        os << "matched segment: none\n";
    os << "symplectic: " << symplectic_name(r.symplectic);
    if (r.matched_segment)
        os << " (" << r.matched_segment->k << "," << r.matched_segment->l
           << ")";
    os << "\n";
    os << "diffeo: " << diffeo_name(r.diffeo.kind) << "\n";
    if (r.h_class) {
        os << "homology class: [";
        for (std::size_t i = 0; i < r.h_class->a.size(); ++i) {
            if (i) os << ", ";
            os << r.h_class->a[i];
        }
        os << "]\n";
    }
    if (r.self_int) os << "self-intersection: " << *r.self_int << "\n";
    return os.str();
}

}  // namespace milnor::io
