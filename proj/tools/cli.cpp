#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include <ncopuc/christoffel.hpp>
#include <ncopuc/error.hpp>
#include <ncopuc/io.hpp>
#include <ncopuc/moments.hpp>
#include <ncopuc/opuc.hpp>
#include <ncopuc/orthopoly.hpp>
#include <ncopuc/szego.hpp>
#include <ncopuc/verblunsky.hpp>
#include <ncopuc/zeros.hpp>

namespace ncopuc::cli {

namespace {

using io::Json;

struct Outcome {
    std::string text;
    int code = kOk;
};

MomentFamily load_moments(const RunConfig& c) {
    if (c.moments_path.empty()) {
        throw FormatError("--moments is required");
    }
    return io::moments_from_json(io::parse(io::read_file(c.moments_path)), c.fill_zero);
}

Word top_for(const RunConfig& c, const MomentFamily& m) {
    if (!c.max_len) {
        return m.horizon();
    }
    if (*c.max_len < 0) {
        throw FormatError("--max-len must be non-negative");
    }
    return sigma_n(*c.max_len, m.alphabet());
}

int length_of_top(const Word& w) {
    int n = 0;
    while (!(sigma_n(n + 1, w.alphabet()) > w)) {
        ++n;
    }
    return n;
}

std::string csv_line(std::initializer_list<std::string> cells) {
    std::string s;
    bool first = true;
    for (const auto& c : cells) {
        if (!first) {
            s += ',';
        }
        first = false;
        s += c;
    }
    return s + "\n";
}

Json matrix_json(const CMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(Json::array({static_cast<double>(m(r, c).real()), static_cast<double>(m(r, c).imag())}));
        }
        rows.push_back(row);
    }
    return rows;
}

Outcome kernel_check(const RunConfig& c) {
    const MomentFamily m = load_moments(c);
    const Word top = top_for(c, m);
    const NontrivialCheck nt = check_nontrivial(m, top, kDefaultPivotTolerance);
    const KernelBlock block = kernel_block(m, top);
    const AxiomResidual ax = multi_toeplitz_residual(block.matrix, m.alphabet());
    const Real logdet = log_determinant_D(m, top);

    Outcome o;
    if (c.format == "csv") {
        o.text = csv_line({"top", "nontrivial", "min_pivot", "log_det", "translation", "structural_zero", "diagonal"}) +
                 csv_line({top.str(), nt.nontrivial ? "true" : "false", io::format_real(nt.min_pivot),
                           io::format_real(logdet), io::format_real(ax.translation),
                           io::format_real(ax.structural_zero), io::format_real(ax.diagonal)});
    } else {
        Json j{{"top", io::to_json(top)},
               {"nontrivial", nt.nontrivial},
               {"min_pivot", static_cast<double>(nt.min_pivot)},
               {"log_det", nt.nontrivial ? Json(static_cast<double>(logdet)) : Json(nullptr)},
               {"axioms",
                {{"translation", static_cast<double>(ax.translation)},
                 {"structural_zero", static_cast<double>(ax.structural_zero)},
                 {"diagonal", static_cast<double>(ax.diagonal)},
                 {"checked", ax.checked}}}};
        o.text = io::dump(j) + "\n";
    }
    if (!nt.nontrivial || ax.max() > c.tol) {
        o.code = kPropertyViolation;
    }
    return o;
}

Outcome verblunsky_extract(const RunConfig& c, std::ostream& err) {
    const MomentFamily m = load_moments(c);
    const Word top = top_for(c, m);
    const Extraction ex = extract_detailed(m, top);
    for (const Word& w : ex.near_trivial) {
        err << "warning: |gamma| within 1e-10 of 1 at word " << w.str() << "\n";
    }
    Outcome o;
    if (c.format == "csv") {
        o.text = csv_line({"word", "re", "im", "abs"});
        for (std::size_t i = 0; i < ex.gamma.size(); ++i) {
            const Complex g = ex.gamma.gamma(i);
            o.text += csv_line({io::dump(io::to_json(word_at(i, m.alphabet()))), io::format_real(g.real()),
                                io::format_real(g.imag()), io::format_real(std::abs(g))});
        }
    } else {
        o.text = io::dump(io::to_json(ex.gamma)) + "\n";
    }
    return o;
}

Outcome favard_synth(const RunConfig& c) {
    if (c.gamma_path.empty()) {
        throw FormatError("--gamma is required");
    }
    const Json j = io::parse(io::read_file(c.gamma_path));
    std::optional<Word> horizon;
    if (c.max_len) {
        if (*c.max_len < 0) {
            throw FormatError("--max-len must be non-negative");
        }
        horizon = sigma_n(*c.max_len, j.value("d", 1));
    }
    const VerblunskyFamily g = io::gamma_from_json(j, horizon, c.fill_zero);
    const MomentFamily m = moments_from_polys(synthesize(g, g.horizon()));
    Outcome o;
    if (c.format == "csv") {
        o.text = csv_line({"word", "re", "im"});
        for (std::size_t i = 0; i < m.size(); ++i) {
            const Complex v = m.moment(i);
            o.text += csv_line({io::dump(io::to_json(word_at(i, m.alphabet()))), io::format_real(v.real()),
                                io::format_real(v.imag())});
        }
    } else {
        o.text = io::dump(io::to_json(m)) + "\n";
    }
    return o;
}

Outcome szego(const RunConfig& c) {
    const MomentFamily m = load_moments(c);
    const int N = c.N ? *c.N : length_of_top(m.horizon());
    const SzegoTable t = szego_table(m, N);
    Outcome o;
    bool violated = t.truncated;
    const auto f = [](Real x) { return io::format_real(x); };
    if (c.format == "csv") {
        o.text = csv_line({"n", "item_i", "item_ii", "item_iii", "item_iv", "item_v", "item_vi", "item_vii",
                           "item_viii", "item_ix", "res_first", "res_second"});
    }
    Json rows = Json::array();
    for (const SzegoRow& r : t.rows) {
        violated = violated || r.res_first > c.tol || r.res_second > c.tol;
        if (c.format == "csv") {
            o.text += csv_line({std::to_string(r.n), f(r.item_i), f(r.item_ii), f(r.item_iii), f(r.item_iv),
                                f(r.item_v), f(r.item_vi), f(r.item_vii), f(r.item_viii), f(r.item_ix),
                                f(r.res_first), f(r.res_second)});
        } else {
            rows.push_back(Json{{"n", r.n},
                                {"item_i", static_cast<double>(r.item_i)},
                                {"item_ii", static_cast<double>(r.item_ii)},
                                {"item_iii", static_cast<double>(r.item_iii)},
                                {"item_iv", static_cast<double>(r.item_iv)},
                                {"item_v", static_cast<double>(r.item_v)},
                                {"item_vi", static_cast<double>(r.item_vi)},
                                {"item_vii", static_cast<double>(r.item_vii)},
                                {"item_viii", static_cast<double>(r.item_viii)},
                                {"item_ix", static_cast<double>(r.item_ix)},
                                {"res_first", static_cast<double>(r.res_first)},
                                {"res_second", static_cast<double>(r.res_second)}});
        }
    }
    if (c.format != "csv") {
        Json j{{"rows", rows}, {"truncated", t.truncated}};
        if (t.truncated) {
            j["note"] = t.note;
        }
        o.text = io::dump(j) + "\n";
    }
    o.code = violated ? kPropertyViolation : kOk;
    return o;
}

Outcome christoffel(const RunConfig& c) {
    const MomentFamily m = load_moments(c);
    if (c.point_path.empty()) {
        throw FormatError("--point is required");
    }
    const MatrixTuple a = io::tuple_from_json(io::parse(io::read_file(c.point_path)));
    const Word top = top_for(c, m);
    const OrthonormalFamily f = gram_schmidt(m, top);
    const ChristoffelResult r = christoffel_function(f, a, c.tol, c.N ? *c.N : -1);
    Outcome o;
    if (c.format == "csv") {
        o.text = csv_line({"n", "norm", "min_eig"});
        for (std::size_t n = 0; n < r.trace.size(); ++n) {
            o.text += csv_line({std::to_string(n), io::format_real(linalg::spectral_norm(r.trace[n])),
                                io::format_real(linalg::hermitian_eigenvalues(r.trace[n])(0))});
        }
    } else {
        Json trace = Json::array();
        for (const auto& l : r.trace) {
            trace.push_back(matrix_json(l));
        }
        o.text = io::dump(Json{{"value", matrix_json(r.value)},
                               {"converged", r.converged},
                               {"outcome", to_string(r.outcome)},
                               {"trace", trace}}) +
                 "\n";
    }
    return o;
}

RecurrencePair sweep_measure(const RunConfig& c, int n_max) {
    if (!c.gamma_path.empty()) {
        const Json j = io::parse(io::read_file(c.gamma_path));
        const VerblunskyFamily g = io::gamma_from_json(j, sigma_n(n_max, j.value("d", 1)), c.fill_zero);
        return synthesize(g, g.horizon());
    }
    const MomentFamily m = load_moments(c);
    return recurrence_from_moments(m, sigma_n(n_max, m.alphabet()));
}

Outcome zeros_sweep(const RunConfig& c) {
    const int n_max = c.N ? *c.N : 3;
    if (n_max < 1 || c.samples < 1 || c.max_level < 1) {
        throw FormatError("zeros sweep needs --N >= 1, --samples >= 1 and --k >= 1");
    }
    const RecurrencePair pair = sweep_measure(c, n_max);
    const int d = pair.alphabet();
    Outcome o;
    bool violated = false;
    std::uint64_t index = 0;
    const std::pair<SampleKind, Real> kinds[] = {
        {SampleKind::Interior, 0.9L}, {SampleKind::Boundary, 1.0L}, {SampleKind::Exterior, 1.5L}};
    for (const auto& [kind, param] : kinds) {
        for (int k = 1; k <= c.max_level; ++k) {
            for (int n = 1; n <= n_max; ++n) {
                for (int s = 0; s < c.samples; ++s) {
                    const MatrixTuple z = sample_tuple(kind, param, k, d, c.seed ^ index++);
                    const FormResult mf = reverse_form(pair, n, z);
                    const FormResult sf = level_form(pair, n, z);
                    const Real gap =
                        linalg::spectral_norm(mf.matrix - sf.matrix) / linalg::spectral_norm(mf.matrix);
                    const char* name = kind == SampleKind::Interior   ? "interior"
                                       : kind == SampleKind::Boundary ? "boundary"
                                                                      : "exterior";
                    switch (kind) {
                        case SampleKind::Interior:
                            violated = violated || !(mf.min_eig > 0);
                            break;
                        case SampleKind::Exterior:
                            violated = violated || !(sf.min_eig > 0);
                            break;
                        case SampleKind::Boundary:
                            violated = violated || gap > c.tol || !(mf.min_eig > 0);
                            break;
                    }
                    o.text += io::dump(Json{{"kind", name},
                                            {"k", k},
                                            {"d", d},
                                            {"n", n},
                                            {"min_eig_M", static_cast<double>(mf.min_eig)},
                                            {"min_eig_S", static_cast<double>(sf.min_eig)},
                                            {"boundary_gap", static_cast<double>(gap)}}) +
                              "\n";
                }
            }
        }
    }
    o.code = violated ? kPropertyViolation : kOk;
    return o;
}

Outcome oracle_compare(const RunConfig& c) {
    opuc::Density w;
    if (c.density == "bernstein") {
        if (!(std::abs(c.a) < 1)) {
            throw FormatError("--a must lie in (-1, 1)");
        }
        w = opuc::bernstein_szego(Complex(c.a));
    } else if (c.density == "fejer") {
        w = opuc::fejer();
    } else {
        throw FormatError("unknown density '" + c.density + "' (bernstein, fejer)");
    }
    if (c.n < 1) {
        throw FormatError("--n must be positive");
    }
    const opuc::CircleMomentSeq seq = opuc::quadrature_moments(w, c.n, c.nodes);
    const std::vector<Complex> lev = opuc::levinson_verblunsky(seq);
    const VerblunskyFamily nc = extract(opuc::to_moment_family(seq), sigma_n(c.n, 1));

    Real dev = 0;
    Json rows = Json::array();
    for (int j = 0; j < c.n; ++j) {
        const Complex a = lev[static_cast<std::size_t>(j)];
        const Complex b = nc.gamma(static_cast<ShortlexIndex>(j + 1));
        dev = std::max(dev, std::abs(a - b));
        rows.push_back(Json{{"n", j + 1},
                            {"levinson", {static_cast<double>(a.real()), static_cast<double>(a.imag())}},
                            {"nc", {static_cast<double>(b.real()), static_cast<double>(b.imag())}}});
    }
    Outcome o;
    if (c.format == "csv") {
        o.text = csv_line({"n", "levinson_re", "levinson_im", "nc_re", "nc_im"});
        for (int j = 0; j < c.n; ++j) {
            const Complex a = lev[static_cast<std::size_t>(j)];
            const Complex b = nc.gamma(static_cast<ShortlexIndex>(j + 1));
            o.text += csv_line({std::to_string(j + 1), io::format_real(a.real()), io::format_real(a.imag()),
                                io::format_real(b.real()), io::format_real(b.imag())});
        }
    } else {
        o.text = io::dump(Json{{"density", c.density},
                               {"n", c.n},
                               {"nodes", c.nodes},
                               {"max_deviation", static_cast<double>(dev)},
                               {"gamma", rows}}) +
                 "\n";
    }
    o.code = dev <= c.tol ? kOk : kPropertyViolation;
    return o;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!(config.tol > 0)) {
        err << "error: --tol must be positive\n";
        return kInputError;
    }
    if (config.format != "json" && config.format != "csv") {
        err << "error: --format must be csv or json\n";
        return kInputError;
    }
    const std::map<std::string, std::function<Outcome()>> commands = {
        {"kernel check", [&] { return kernel_check(config); }},
        {"verblunsky extract", [&] { return verblunsky_extract(config, err); }},
        {"favard synth", [&] { return favard_synth(config); }},
        {"szego table", [&] { return szego(config); }},
        {"christoffel eval", [&] { return christoffel(config); }},
        {"zeros sweep", [&] { return zeros_sweep(config); }},
        {"oracle compare", [&] { return oracle_compare(config); }},
    };
    const auto it = commands.find(config.command);
    if (it == commands.end()) {
        err << "error: unknown command '" << config.command << "'\n";
        return kInputError;
    }
    try {
        const Outcome o = it->second();
        if (config.out_path.empty()) {
            out << o.text;
        } else {
            io::write_file(config.out_path, o.text);
        }
        if (o.code == kPropertyViolation) {
            err << "property violation reported by '" << config.command << "'\n";
        }
        return o.code;
    } catch (const PositivityError& e) {
        err << "property violation: " << e.what() << "\n";
        return kPropertyViolation;
    } catch (const NumericalDegeneracy& e) {
        err << "property violation: " << e.what() << "\n";
        return kPropertyViolation;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const io::Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace ncopuc::cli
