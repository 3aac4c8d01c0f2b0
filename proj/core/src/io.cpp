#include "ncopuc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "ncopuc/error.hpp"

namespace ncopuc::io {

namespace {

void dump_into(const Json& j, std::string& out) {
    switch (j.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) {
                    out += ',';
                }
                first = false;
                out += Json(it.key()).dump();
                out += ':';
                dump_into(it.value(), out);
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i > 0) {
                    out += ',';
                }
                dump_into(j[i], out);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float:
            out += format_real(j.get<double>());
            break;
        default:
            out += j.dump();
    }
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

int read_int(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) {
        throw FormatError(std::string("field \"") + key + "\" must be an integer");
    }
    return v.get<int>();
}

Real read_number(const Json& j, const char* key, bool required = true) {
    if (!required && (!j.is_object() || !j.contains(key))) {
        return 0;
    }
    const Json& v = field(j, key);
    if (!v.is_number()) {
        throw FormatError(std::string("field \"") + key + "\" must be a number");
    }
    return static_cast<Real>(v.get<double>());
}

Json scalar_entry(const Word& w, Complex c) {
    return Json{{"word", to_json(w)},
                {"re", static_cast<double>(c.real())},
                {"im", static_cast<double>(c.imag())}};
}

// Reads a list of {"word","re","im"} entries into a map keyed by shortlex index.
std::map<ShortlexIndex, Complex> read_entries(const Json& list, int d, const char* what) {
    if (!list.is_array()) {
        throw FormatError(std::string(what) + " must be an array");
    }
    std::map<ShortlexIndex, Complex> out;
    for (const Json& e : list) {
        const Word w = word_from_json(field(e, "word"), d);
        const Complex c(read_number(e, "re"), read_number(e, "im", false));
        if (!out.emplace(shortlex_index(w), c).second) {
            throw FormatError(std::string(what) + " lists word " + w.str() + " twice");
        }
    }
    return out;
}

bool read_fill_zero(const Json& j) {
    if (j.is_object() && j.contains("fill_zero")) {
        if (!j.at("fill_zero").is_boolean()) {
            throw FormatError("\"fill_zero\" must be a boolean");
        }
        return j.at("fill_zero").get<bool>();
    }
    return false;
}

}  // namespace

std::string format_real(Real x) {
    const auto v = static_cast<double>(x);
    if (!std::isfinite(v)) {
        return "null";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string dump(const Json& j) {
    std::string out;
    dump_into(j, out);
    return out;
}

Json to_json(const Word& w) {
    Json a = Json::array();
    for (auto l : w.letters()) {
        a.push_back(static_cast<int>(l));
    }
    return a;
}

Word word_from_json(const Json& j, int alphabet) {
    if (!j.is_array()) {
        throw FormatError("a word must be a JSON array of letters");
    }
    std::vector<Word::Letter> letters;
    for (const Json& l : j) {
        if (!l.is_number_integer()) {
            throw FormatError("word letters must be integers");
        }
        const int v = l.get<int>();
        if (v < 1 || v > alphabet) {
            throw FormatError("letter " + std::to_string(v) + " outside alphabet {1.." + std::to_string(alphabet) +
                              "}");
        }
        letters.push_back(static_cast<Word::Letter>(v));
    }
    return Word(alphabet, std::move(letters));
}

Json to_json(const MomentFamily& m) {
    Json list = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.values()[i].has_value()) {
            list.push_back(scalar_entry(word_at(i, m.alphabet()), *m.values()[i]));
        }
    }
    return Json{{"d", m.alphabet()}, {"horizon", to_json(m.horizon())}, {"moments", list}};
}

MomentFamily moments_from_json(const Json& j, bool fill_zero) {
    const int d = read_int(j, "d");
    if (d < 1 || d > 255) {
        throw FormatError("\"d\" must lie in [1, 255]");
    }
    const Word horizon = word_from_json(field(j, "horizon"), d);
    fill_zero = fill_zero || read_fill_zero(j);
    const auto entries = read_entries(field(j, "moments"), d, "moments");

    std::vector<std::optional<Complex>> values(shortlex_index(horizon) + 1);
    for (const auto& [i, c] : entries) {
        if (i >= values.size()) {
            throw FormatError("moment word " + word_at(i, d).str() + " lies beyond horizon " + horizon.str());
        }
        values[i] = c;
    }
    if (values[0].has_value() && std::abs(*values[0] - Complex(1)) > Real(1e-12)) {
        throw FormatError("moment of the empty word must be 1");
    }
    values[0] = Complex(1);
    if (fill_zero) {
        for (auto& v : values) {
            if (!v) {
                v = Complex(0);
            }
        }
    }
    return MomentFamily(horizon, std::move(values));
}

Json to_json(const VerblunskyFamily& g) {
    Json list = Json::array();
    for (std::size_t i = 1; i < g.size(); ++i) {
        list.push_back(scalar_entry(word_at(i, g.alphabet()), g.gamma(i)));
    }
    return Json{{"d", g.alphabet()}, {"horizon", to_json(g.horizon())}, {"gamma", list}};
}

VerblunskyFamily gamma_from_json(const Json& j, std::optional<Word> horizon, bool fill_zero) {
    const int d = read_int(j, "d");
    if (d < 1 || d > 255) {
        throw FormatError("\"d\" must lie in [1, 255]");
    }
    fill_zero = fill_zero || read_fill_zero(j);
    auto entries = read_entries(field(j, "gamma"), d, "gamma");
    if (horizon && horizon->alphabet() != d) {
        throw FormatError("requested horizon has the wrong alphabet");
    }
    if (!horizon) {
        if (j.contains("horizon")) {
            horizon = word_from_json(j.at("horizon"), d);
        } else {
            horizon = word_at(entries.empty() ? 0 : entries.rbegin()->first, d);
        }
    }
    std::vector<Complex> values(shortlex_index(*horizon) + 1, Complex(0));
    if (auto it = entries.find(0); it != entries.end()) {
        if (it->second != Complex(0)) {
            throw FormatError("gamma of the empty word must be 0");
        }
        entries.erase(it);
    }
    std::vector<bool> seen(values.size(), false);
    seen[0] = true;
    for (const auto& [i, c] : entries) {
        if (i >= values.size()) {
            continue;  // beyond the requested horizon
        }
        values[i] = c;
        seen[i] = true;
    }
    if (!fill_zero) {
        for (std::size_t i = 0; i < seen.size(); ++i) {
            if (!seen[i]) {
                throw FormatError("gamma file has no entry for word " + word_at(i, d).str() +
                                  " (set \"fill_zero\" to default missing words to 0)");
            }
        }
    }
    try {
        return VerblunskyFamily(*horizon, std::move(values));
    } catch (const DomainError& e) {
        throw FormatError(e.what());
    }
}

Json to_json(const NcPolynomial& p) {
    Json list = Json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.coeff(i) != Complex(0)) {
            list.push_back(scalar_entry(word_at(i, p.alphabet()), p.coeff(i)));
        }
    }
    return Json{{"d", p.alphabet()}, {"coeffs", list}};
}

NcPolynomial polynomial_from_json(const Json& j) {
    const int d = read_int(j, "d");
    if (d < 1 || d > 255) {
        throw FormatError("\"d\" must lie in [1, 255]");
    }
    const auto entries = read_entries(field(j, "coeffs"), d, "coeffs");
    if (entries.empty()) {
        return NcPolynomial(d);
    }
    std::vector<Complex> c(entries.rbegin()->first + 1, Complex(0));
    for (const auto& [i, v] : entries) {
        c[i] = v;
    }
    return NcPolynomial(d, std::move(c));
}

Json to_json(const MatrixTuple& z) {
    Json comps = Json::array();
    for (const auto& m : z.components()) {
        Json rows = Json::array();
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            Json row = Json::array();
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                row.push_back(Json::array({static_cast<double>(m(r, c).real()), static_cast<double>(m(r, c).imag())}));
            }
            rows.push_back(row);
        }
        comps.push_back(rows);
    }
    return Json{{"k", z.level()}, {"d", z.alphabet()}, {"components", comps}};
}

MatrixTuple tuple_from_json(const Json& j) {
    const int k = read_int(j, "k");
    const int d = read_int(j, "d");
    if (k < 1 || d < 1 || d > 255) {
        throw FormatError("tuple needs k >= 1 and d in [1, 255]");
    }
    const Json& comps = field(j, "components");
    if (!comps.is_array() || comps.size() != static_cast<std::size_t>(d)) {
        throw FormatError("\"components\" must list d matrices");
    }
    std::vector<CMatrix> out;
    for (const Json& m : comps) {
        if (!m.is_array() || m.size() != static_cast<std::size_t>(k)) {
            throw FormatError("each component must have k rows");
        }
        CMatrix mat(k, k);
        for (int r = 0; r < k; ++r) {
            const Json& row = m[static_cast<std::size_t>(r)];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(k)) {
                throw FormatError("each row must have k entries");
            }
            for (int c = 0; c < k; ++c) {
                const Json& e = row[static_cast<std::size_t>(c)];
                if (e.is_number()) {
                    mat(r, c) = Complex(static_cast<Real>(e.get<double>()), 0);
                } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
                    mat(r, c) = Complex(static_cast<Real>(e[0].get<double>()), static_cast<Real>(e[1].get<double>()));
                } else {
                    throw FormatError("matrix entries must be numbers or [re, im] pairs");
                }
            }
        }
        out.push_back(std::move(mat));
    }
    return MatrixTuple(std::move(out));
}

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw FormatError("cannot write " + path);
    }
    out << text;
}

}  // namespace ncopuc::io
