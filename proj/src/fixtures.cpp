#include "zhualg/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "zhualg/errors.hpp"

namespace zhualg {

namespace {

using nlohmann::json;

long get_long(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw FixtureSchemaError(std::string(what) + " must be an integer");
    return j.get<long>();
}

Rational get_rational(const json& j, const char* what) {
    try {
        if (j.is_number_integer()) return Rational(j.get<long>());
        if (j.is_string()) return Rational::from_string(j.get<std::string>());
    } catch (const InputError& e) {
        throw FixtureSchemaError(std::string(what) + ": " + e.what());
    }
    throw FixtureSchemaError(std::string(what) +
                             " must be an integer or a \"num/den\" string");
}

// Matrix entry: rational, [k, scale] for scale*zeta^k, or a list of such
// pairs that are summed.
Cyclotomic get_entry(const json& j, unsigned conductor, const char* what) {
    if (j.is_number_integer() || j.is_string())
        return Cyclotomic(get_rational(j, what));
    if (j.is_array()) {
        if (j.size() == 2 && !j[0].is_array()) {
            const long k = get_long(j[0], what);
            return Cyclotomic::zeta(conductor, k) * Cyclotomic(get_rational(j[1], what));
        }
        Cyclotomic acc;
        for (const auto& term : j) {
            if (!term.is_array() || term.size() != 2)
                throw FixtureSchemaError(std::string(what) +
                                         ": expected [power, scale] pairs");
            const long k = get_long(term[0], what);
            acc = acc + Cyclotomic::zeta(conductor, k) *
                            Cyclotomic(get_rational(term[1], what));
        }
        return acc;
    }
    throw FixtureSchemaError(std::string(what) + " has an unsupported entry type");
}

Matrix<Cyclotomic> get_matrix(const json& j, long dim, unsigned conductor,
                              const char* what) {
    if (!j.is_array() || static_cast<long>(j.size()) != dim)
        throw FixtureSchemaError(std::string(what) + " must be a " +
                                 std::to_string(dim) + "x" + std::to_string(dim) +
                                 " array");
    Matrix<Cyclotomic> m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    for (long r = 0; r < dim; ++r) {
        const json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<long>(row.size()) != dim)
            throw FixtureSchemaError(std::string(what) + ": ragged matrix row");
        for (long c = 0; c < dim; ++c)
            m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                get_entry(row[static_cast<std::size_t>(c)], conductor, what);
    }
    return m;
}

std::vector<std::vector<long>> get_table(const json& j, long rows, long cols,
                                         long value_limit, const char* what) {
    if (!j.is_array() || static_cast<long>(j.size()) != rows)
        throw FixtureSchemaError(std::string(what) + " must have " +
                                 std::to_string(rows) + " rows");
    std::vector<std::vector<long>> t(static_cast<std::size_t>(rows));
    for (long r = 0; r < rows; ++r) {
        const json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<long>(row.size()) != cols)
            throw FixtureSchemaError(std::string(what) + ": ragged row");
        for (long c = 0; c < cols; ++c) {
            const long v = get_long(row[static_cast<std::size_t>(c)], what);
            if (v < 0 || v >= value_limit)
                throw FixtureSchemaError(std::string(what) + ": entry " +
                                         std::to_string(v) + " out of range");
            t[static_cast<std::size_t>(r)].push_back(v);
        }
    }
    return t;
}

}  // namespace

Fixture parse_fixture(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw FixtureSchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw FixtureSchemaError("fixture root must be an object");
    if (!j.contains("group") || !j["group"].is_object())
        throw FixtureSchemaError("missing \"group\" object");
    if (!j.contains("points") || !j["points"].is_array())
        throw FixtureSchemaError("missing \"points\" array");
    if (!j.contains("action"))
        throw FixtureSchemaError("missing \"action\" table");

    Fixture f;
    const json& jg = j["group"];
    if (!jg.contains("order") || !jg.contains("table"))
        throw FixtureSchemaError("group needs \"order\" and \"table\"");
    f.group.order = get_long(jg["order"], "group.order");
    if (f.group.order <= 0) throw FixtureSchemaError("group.order must be positive");
    f.group.table = get_table(jg["table"], f.group.order, f.group.order,
                              f.group.order, "group.table");

    const json& jp = j["points"];
    if (jp.empty()) throw FixtureSchemaError("points array must be nonempty");
    for (const auto& pt : jp) {
        if (!pt.is_object() || !pt.contains("g") || !pt.contains("m"))
            throw FixtureSchemaError("each point needs \"g\" and \"m\"");
        ActionPoint p;
        p.g = get_long(pt["g"], "point.g");
        if (p.g < 0 || p.g >= f.group.order)
            throw FixtureSchemaError("point.g out of range");
        if (!pt["m"].is_string())
            throw FixtureSchemaError("point.m must be a string label");
        p.m = pt["m"].get<std::string>();
        f.points.points.push_back(std::move(p));
    }
    const long np = static_cast<long>(f.points.points.size());
    f.points.action = get_table(j["action"], np, f.group.order, np, "action");

    unsigned conductor = 1;
    if (j.contains("cocycle")) {
        const json& jc = j["cocycle"];
        if (!jc.is_object() || !jc.contains("conductor") || !jc.contains("values"))
            throw FixtureSchemaError("cocycle needs \"conductor\" and \"values\"");
        const long n = get_long(jc["conductor"], "cocycle.conductor");
        if (n <= 0) throw FixtureSchemaError("cocycle.conductor must be positive");
        conductor = static_cast<unsigned>(n);
        f.cocycle = CocycleTable(np, f.group.order, conductor);
        if (!jc["values"].is_array())
            throw FixtureSchemaError("cocycle.values must be an array");
        for (const auto& v : jc["values"]) {
            if (!v.is_array() || v.size() != 5)
                throw FixtureSchemaError(
                    "cocycle value must be [point, a, b, power, scale]");
            const long p = get_long(v[0], "cocycle point");
            const long a = get_long(v[1], "cocycle a");
            const long b = get_long(v[2], "cocycle b");
            const long k = get_long(v[3], "cocycle power");
            if (p < 0 || p >= np || a < 0 || a >= f.group.order || b < 0 ||
                b >= f.group.order)
                throw FixtureSchemaError("cocycle value index out of range");
            f.cocycle.set(p, a, b,
                          Cyclotomic::zeta(conductor, k) *
                              Cyclotomic(get_rational(v[4], "cocycle scale")));
        }
    } else {
        f.cocycle = CocycleTable::trivial(np, f.group.order);
    }

    if (j.contains("modules")) {
        if (!j["modules"].is_array())
            throw FixtureSchemaError("modules must be an array");
        for (const auto& jm : j["modules"]) {
            if (!jm.is_object() || !jm.contains("point") || !jm.contains("dim") ||
                !jm.contains("action"))
                throw FixtureSchemaError("module needs \"point\", \"dim\", \"action\"");
            FixtureModule fm;
            fm.point = get_long(jm["point"], "module.point");
            if (fm.point < 0 || fm.point >= np)
                throw FixtureSchemaError("module.point out of range");
            fm.dim = get_long(jm["dim"], "module.dim");
            if (fm.dim <= 0) throw FixtureSchemaError("module.dim must be positive");
            if (!jm["action"].is_object())
                throw FixtureSchemaError(
                    "module.action must map element indices to matrices");
            for (const auto& [key, val] : jm["action"].items()) {
                long h = 0;
                try {
                    std::size_t used = 0;
                    h = std::stol(key, &used);
                    if (used != key.size()) throw std::invalid_argument(key);
                } catch (const std::exception&) {
                    throw FixtureSchemaError("module.action key \"" + key +
                                             "\" is not an element index");
                }
                if (h < 0 || h >= f.group.order)
                    throw FixtureSchemaError("module.action element out of range");
                fm.action.emplace(h, get_matrix(val, fm.dim, conductor,
                                                "module.action matrix"));
            }
            f.modules.push_back(std::move(fm));
        }
    }
    return f;
}

Fixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open fixture file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fixture(buf.str());
}

AlgebraMod module_from_fixture(const TwistedDouble& td, const FixtureModule& fm) {
    const TwistedDouble::SubIdealData sub = td.sub_and_ideals(fm.point);
    AlgebraMod mod;
    mod.algebra = sub.S_p;
    mod.dim_w = fm.dim;
    for (long h : sub.stabilizer) {
        const auto it = fm.action.find(h);
        if (it == fm.action.end())
            throw FixtureSchemaError("module is missing a matrix for stabilizer element " +
                                     std::to_string(h));
        mod.action.push_back(it->second);
    }
    if (fm.action.size() != sub.stabilizer.size())
        throw FixtureSchemaError("module supplies matrices outside the stabilizer");
    return mod;
}

}  // namespace zhualg
