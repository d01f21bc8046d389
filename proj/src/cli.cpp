#include "lkd/cli.hpp"

#include <array>
#include <sstream>

#include "json.hpp"
#include "lkd/duality.hpp"
#include "lkd/random.hpp"

namespace lkd {

namespace {

using nlohmann::json;

const std::array<const char*, 6> kCommands{"check-axioms", "koszul-lemmas", "roundtrip", "cohomology", "kappa", "intersect"};

[[noreturn]] void bad(const std::string& field, const std::string& why) { throw ConfigError(field + ": " + why); }

const json& member(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) bad(where + "." + key, "missing");
    return j.at(key);
}

long as_long(const json& j, const std::string& where) {
    if (!j.is_number_integer()) bad(where, "expected an integer");
    return j.get<long>();
}

std::size_t as_size(const json& j, const std::string& where) {
    long v = as_long(j, where);
    if (v < 0) bad(where, "expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

FieldSpec parse_field(const json& j) {
    try {
        if (j.is_string()) {
            std::string s = j.get<std::string>();
            if (s == "Q") return FieldSpec::rationals();
            if (s.size() > 1 && s[0] == 'F' && s.find_first_not_of("0123456789", 1) == std::string::npos)
                return FieldSpec::prime(std::stoull(s.substr(1)));
            bad("field", "expected \"Q\", \"F<p>\" or {\"Fp\": p}, got \"" + s + "\"");
        }
        if (j.is_object() && j.contains("Fp")) {
            long p = as_long(j.at("Fp"), "field.Fp");
            if (p < 2 || !is_prime_number(static_cast<std::uint64_t>(p))) bad("field.Fp", std::to_string(p) + " is not prime");
            return FieldSpec::prime(static_cast<std::uint64_t>(p));
        }
    } catch (const std::invalid_argument& e) {
        bad("field", e.what());
    } catch (const std::out_of_range&) {
        bad("field", "prime out of range");
    }
    bad("field", "expected \"Q\", \"F<p>\" or {\"Fp\": p}");
}

Scalar parse_scalar(const FieldSpec& f, const json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return Scalar::parse(f, std::to_string(j.get<long>()));
        if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    } catch (const std::logic_error& e) {
        bad(where, e.what());
    }
    bad(where, "expected an integer or an \"a/b\" string");
}

Matrix parse_rows(const FieldSpec& f, const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array of rows");
    if (j.size() != rows) bad(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j[r];
        std::string rw = where + "[" + std::to_string(r) + "]";
        if (!row.is_array()) bad(rw, "expected an array");
        if (row.size() != cols) bad(rw, "expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, parse_scalar(f, row[c], rw + "[" + std::to_string(c) + "]"));
    }
    return m;
}

Matrix parse_basis(const FieldSpec& f, const json& j, std::size_t cols, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array of rows");
    return parse_rows(f, j, j.size(), cols, where);
}

std::pair<long, long> parse_range(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) bad(where, "expected [min, max]");
    long lo = as_long(j[0], where + "[0]");
    long hi = as_long(j[1], where + "[1]");
    if (lo > hi) bad(where, "min exceeds max");
    return {lo, hi};
}

std::vector<long> parse_longs(std::string_view text, const char* what) {
    std::vector<long> out;
    std::stringstream ss{std::string(text)};
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            bad(what, "malformed integer '" + part + "'");
        }
    }
    return out;
}

// Report assembled by the commands and rendered at the end.
struct Report {
    struct Line {
        std::string name;
        CheckReport r;
    };
    std::vector<std::pair<std::string, CohomologyTable>> tables;
    std::vector<Line> checks;
    std::vector<std::string> notes;

    void check(std::string name, CheckReport r) { checks.push_back({std::move(name), std::move(r)}); }
    bool ok() const {
        for (const auto& l : checks)
            if (!l.r.ok) return false;
        return true;
    }
};

CheckReport expect_table(const std::string& what, const CohomologyTable& got, const std::map<BiDegree, std::size_t>& want) {
    CheckReport r;
    for (BiDegree x : got.window.cells()) {
        ++r.checks;
        auto it = want.find(x);
        std::size_t w = it == want.end() ? 0 : it->second;
        if (got.at(x) != w) r.fail(what, x, "H has dim " + std::to_string(got.at(x)) + ", expected " + std::to_string(w));
    }
    return r;
}

CheckReport compare_tables(const std::string& what, const CohomologyTable& got, const CohomologyTable& want) {
    return expect_table(what, got, want.cells);
}

Window grown(const Window& w, long di, long dj) { return {w.imin - di, w.imax + di, w.jmin - dj, w.jmax + dj}; }

DgModule named_object(const KoszulDuality& k, const std::string& name) {
    if (name == "T") return k.T().module();
    if (name == "R") return k.R().module();
    if (name == "S") return k.S().module();
    if (name == "K1") return k.K1();
    if (name == "K2") return k.K2();
    if (name == "O_T") return unit_module(k.data().field, k.T().signature());
    if (name == "O_S") return unit_module(k.data().field, k.S().signature());
    bad("object", "unknown object '" + name + "' (expected T, R, S, K1, K2, O_T or O_S)");
}

void cmd_check_axioms(const RunConfig& c, Report& rep) {
    KoszulDuality k(two_term_of(c));
    for (const char* name : {"T", "R", "S", "K1", "K2"}) rep.check(std::string("axioms[") + name + "]", check_dg_axioms(named_object(k, name), c.window));
    rep.check("parts[K1]", check_differential_parts(k.K1(), c.window));
    rep.check("parts[K2]", check_differential_parts(k.K2(), c.window));
}

void cmd_koszul_lemmas(const RunConfig& c, Report& rep) {
    for (std::size_t r = 0; r <= c.max_rank; ++r) {
        for (int v = 1; v <= 4; ++v) {
            KoszulComplex kc = koszul_classical(c.field, r, v);
            std::string name = "koszul" + std::to_string(v) + "[rank " + std::to_string(r) + "]";
            CheckReport rr = check_dg_axioms(kc.module, c.window);
            rr.merge(expect_table(name, cohomology_table(kc.module, c.window), {{{0, 0}, 1}}));
            rr.merge(is_quasi_iso(kc.augmentation, c.window));
            rep.check(name, rr);
        }
    }
    KoszulDuality k(two_term_of(c));
    for (const DgModule& m : {k.K1(), k.K2()}) {
        CheckReport rr = check_differential_parts(m, c.window);
        rr.merge(expect_table(m.name(), cohomology_table(m, c.window), {{{0, 0}, 1}}));
        ChainMap e = k.augmentation(m);
        rr.merge(check_chain_map(e, c.window, true));
        rr.merge(is_quasi_iso(e, c.window));
        rep.check("augmentation[" + m.name() + "]", rr);
    }
}

void cmd_roundtrip(const RunConfig& c, Report& rep) {
    KoszulDuality k(two_term_of(c));
    Rng rng(c.seed);
    for (std::size_t n = 0; n < c.count; ++n) {
        DgModule p = random_quotient_module(k.S(), rng).renamed("P" + std::to_string(n));
        DgModule q = random_quotient_module(k.T(), rng).renamed("Q" + std::to_string(n));
        rep.notes.push_back(p.name() + " dims " + hilbert_series(dimension_table(p, *p.region().bounding_window())));
        rep.notes.push_back(q.name() + " dims " + hilbert_series(dimension_table(q, *q.region().bounding_window())));
        ChainMap phi = k.phi(p);
        ChainMap psi = k.psi(p);
        CheckReport r = check_chain_map(phi, c.window, true);
        r.merge(check_chain_map(psi, c.window));
        r.merge(check_maps_equal(ChainMap::compose(phi, psi), ChainMap::identity(p), c.window));
        r.merge(is_quasi_iso(phi, c.window));
        rep.check("roundtrip[" + p.name() + "]", r);
        ChainMap phi2 = k.phi_mirror(q);
        ChainMap psi2 = k.psi_mirror(q);
        CheckReport r2 = check_chain_map(phi2, c.window, true);
        r2.merge(check_chain_map(psi2, c.window));
        r2.merge(check_maps_equal(ChainMap::compose(phi2, psi2), ChainMap::identity(q), c.window));
        r2.merge(is_quasi_iso(phi2, c.window));
        rep.check("mirror-roundtrip[" + q.name() + "]", r2);
    }
}

void cmd_cohomology(const RunConfig& c, Report& rep) {
    KoszulDuality k(two_term_of(c));
    std::string name = c.object.empty() ? "T" : c.object;
    CohomologyTable t = cohomology_table(named_object(k, name), c.window);
    rep.notes.push_back("hilbert " + name + " = " + hilbert_series(t));
    rep.tables.emplace_back(name, t);
}

void cmd_kappa(const RunConfig& c, Report& rep) {
    KoszulDuality k(two_term_of(c));
    std::string name = c.object.empty() ? "O_T" : c.object;
    if (name != "T" && name != "O_T") bad("object", "kappa takes a module over T: T or O_T");
    DgModule n = named_object(k, name);
    CohomologyTable base = cohomology_table(k.kappa(n), grown(c.window, 6, 3));
    CohomologyTable t = cohomology_table(k.kappa(n), c.window);
    rep.notes.push_back("hilbert kappa(" + name + ") = " + hilbert_series(t));
    rep.tables.emplace_back("kappa(" + name + ")", t);
    CheckReport law;
    std::size_t literal_matches = 0;
    for (long a = -3; a <= 3; ++a) {
        for (long b = -3; b <= 3; ++b) {
            CohomologyTable lhs = cohomology_table(k.kappa(shift(n, a, b)), c.window);
            BiDegree s = kappa_shift(a, b);
            std::string what = "degree-law[" + std::to_string(a) + "," + std::to_string(b) + "]";
            law.merge(compare_tables(what, lhs, shift_table(base, s.i, s.j, c.window)));
            if (lhs == shift_table(base, -a + b, b, c.window)) ++literal_matches;
        }
    }
    rep.check("degree-law", law);
    rep.notes.push_back("reindexing by [-a+b]<b> instead matches " + std::to_string(literal_matches) + " of 49 shifts");
}

void cmd_intersect(const RunConfig& c, Report& rep) {
    const auto* p = std::get_if<SubspaceProblem>(&c.problem);
    if (p == nullptr) bad("problem.type", "intersect needs a \"subspaces\" problem");
    for (Side s : {Side::Primal, Side::Dual}) {
        std::string name = s == Side::Primal ? "primal" : "dual";
        CohomologyTable t = derived_intersection_table(*p, s, c.window);
        rep.tables.emplace_back(name, t);
        rep.check("oracle[" + name + "]", compare_tables("oracle[" + name + "]", t, tor_oracle(*p, s, c.window)));
    }
}

std::string render_text(const RunConfig& c, const Report& rep) {
    std::ostringstream os;
    os << "# command " << c.command << "\n# field " << c.field.name() << "\n# window " << c.window.str() << "\n";
    for (const auto& [name, t] : rep.tables) os << "# table " << name << "\n" << t.tsv();
    for (const auto& n : rep.notes) os << "# " << n << "\n";
    for (const auto& l : rep.checks) os << (l.r.ok ? "PASS " : "FAIL ") << l.name << ": " << l.r.summary() << "\n";
    os << (rep.ok() ? "PASS" : "FAIL") << " " << c.command << "\n";
    return os.str();
}

std::string render_json(const RunConfig& c, const Report& rep) {
    nlohmann::ordered_json j;
    j["command"] = c.command;
    j["field"] = c.field.name();
    j["window"] = {{"i", {c.window.imin, c.window.imax}}, {"j", {c.window.jmin, c.window.jmax}}};
    j["tables"] = nlohmann::ordered_json::array();
    for (const auto& [name, t] : rep.tables) {
        auto cells = nlohmann::ordered_json::array();
        for (const auto& [x, n] : t.cells) cells.push_back({{"i", x.i}, {"j", x.j}, {"dim", n}});
        j["tables"].push_back({{"name", name}, {"cells", cells}});
    }
    j["notes"] = rep.notes;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& l : rep.checks) {
        nlohmann::ordered_json e{{"name", l.name}, {"status", l.r.ok ? "PASS" : "FAIL"}, {"checks", l.r.checks}};
        if (!l.r.ok) {
            e["identity"] = l.r.identity;
            e["cell"] = {l.r.cell.i, l.r.cell.j};
            e["detail"] = l.r.detail;
        }
        j["checks"].push_back(e);
    }
    j["status"] = rep.ok() ? "PASS" : "FAIL";
    return j.dump() + "\n";
}

}  // namespace

RunConfig parse_config(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) bad("config", "expected a JSON object");
    RunConfig c;
    c.field = parse_field(member(j, "field", "config"));
    const json& p = member(j, "problem", "config");
    const json& type = member(p, "type", "problem");
    if (type == "subspaces") {
        SubspaceProblem sp{c.field, as_size(member(p, "E_dim", "problem"), "problem.E_dim"), {}, {}};
        sp.F1 = parse_basis(c.field, member(p, "F1", "problem"), sp.E_dim, "problem.F1");
        sp.F2 = parse_basis(c.field, member(p, "F2", "problem"), sp.E_dim, "problem.F2");
        if (sp.F1.rows() > sp.E_dim) bad("problem.F1", "more rows than E_dim");
        if (sp.F2.rows() > sp.E_dim) bad("problem.F2", "more rows than E_dim");
        try {
            sp.validate();
        } catch (const std::invalid_argument& e) {
            bad("problem", e.what());
        }
        c.problem = sp;
    } else if (type == "map") {
        TwoTermData d{c.field, as_size(member(p, "V_dim", "problem"), "problem.V_dim"),
                      as_size(member(p, "W_dim", "problem"), "problem.W_dim"), {}};
        if (p.contains("f")) {
            d.f = parse_rows(c.field, p.at("f"), d.W_dim, d.V_dim, "problem.f");
        } else if (d.V_dim == 0 || d.W_dim == 0) {
            d.f = Matrix(c.field, d.W_dim, d.V_dim);
        } else {
            bad("problem.f", "missing");
        }
        c.problem = d;
    } else {
        bad("problem.type", "expected \"subspaces\" or \"map\"");
    }
    if (j.contains("window")) {
        const json& w = j.at("window");
        auto [imin, imax] = parse_range(member(w, "i", "window"), "window.i");
        auto [jmin, jmax] = parse_range(member(w, "j", "window"), "window.j");
        c.window = {imin, imax, jmin, jmax};
    }
    if (j.contains("command")) {
        if (!j.at("command").is_string()) bad("command", "expected a string");
        c.command = j.at("command").get<std::string>();
    }
    if (j.contains("seed")) c.seed = static_cast<std::uint64_t>(as_size(j.at("seed"), "seed"));
    if (j.contains("object")) {
        if (!j.at("object").is_string()) bad("object", "expected a string");
        c.object = j.at("object").get<std::string>();
    }
    if (j.contains("count")) c.count = as_size(j.at("count"), "count");
    if (j.contains("max_rank")) c.max_rank = as_size(j.at("max_rank"), "max_rank");
    return c;
}

Window parse_window(std::string_view text) {
    std::vector<long> v = parse_longs(text, "--window");
    if (v.size() != 4) bad("--window", "expected imin,imax,jmin,jmax");
    if (v[0] > v[1] || v[2] > v[3]) bad("--window", "min exceeds max");
    return {v[0], v[1], v[2], v[3]};
}

Window parse_cell(std::string_view text) {
    std::vector<long> v = parse_longs(text, "--cell");
    if (v.size() != 2) bad("--cell", "expected i,j");
    return {v[0], v[0], v[1], v[1]};
}

void validate(const RunConfig& c) {
    if (c.command.empty()) bad("command", "missing (set it in the config or with --command)");
    bool known = false;
    for (const char* k : kCommands) known = known || c.command == k;
    if (!known) bad("command", "unknown command '" + c.command + "'");
    if (c.window.imin > c.window.imax || c.window.jmin > c.window.jmax) bad("window", "min exceeds max");
}

TwoTermData two_term_of(const RunConfig& c) {
    if (const auto* p = std::get_if<SubspaceProblem>(&c.problem)) return build_X(*p);
    return std::get<TwoTermData>(c.problem);
}

int run(const RunConfig& c, std::ostream& out) {
    validate(c);
    Report rep;
    if (c.command == "check-axioms") cmd_check_axioms(c, rep);
    if (c.command == "koszul-lemmas") cmd_koszul_lemmas(c, rep);
    if (c.command == "roundtrip") cmd_roundtrip(c, rep);
    if (c.command == "cohomology") cmd_cohomology(c, rep);
    if (c.command == "kappa") cmd_kappa(c, rep);
    if (c.command == "intersect") cmd_intersect(c, rep);
    out << (c.format == OutputFormat::Json ? render_json(c, rep) : render_text(c, rep));
    return rep.ok() ? 0 : 1;
}

}  // namespace lkd
