#include "shtk/json_io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "shtk/error.hpp"

namespace shtk {

namespace {

[[noreturn]] void malformed(const std::string& path, const std::string& what)
{
    throw Error("malformed-json", (path.empty() ? std::string("<root>") : path) + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object()) {
        malformed(path, "expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        malformed(path, "missing field '" + key + "'");
    }
    return *it;
}

std::string join(const std::string& path, const std::string& key)
{
    return path.empty() ? key : path + "." + key;
}

std::string index_path(const std::string& path, std::size_t i)
{
    return path + "[" + std::to_string(i) + "]";
}

Json integer_to_json(const Integer& n)
{
    if (n.fits_slong_p()) {
        return Json(static_cast<std::int64_t>(n.get_si()));
    }
    return Json(n.get_str());
}

Integer integer_from_json(const Json& j, const std::string& path)
{
    if (j.is_number_integer()) {
        return Integer(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        Integer n;
        if (n.set_str(j.get<std::string>(), 10) != 0) {
            malformed(path, "not a decimal integer");
        }
        return n;
    }
    malformed(path, "expected an integer");
}

std::int64_t int_from_json(const Json& j, const std::string& path)
{
    if (!j.is_number_integer()) {
        malformed(path, "expected an integer");
    }
    return j.get<std::int64_t>();
}

std::size_t index_from_json(const Json& j, const std::string& path)
{
    const std::int64_t v = int_from_json(j, path);
    if (v < 0) {
        malformed(path, "expected a nonnegative index");
    }
    return static_cast<std::size_t>(v);
}

int degree_key(const std::string& key, const std::string& path)
{
    try {
        std::size_t used = 0;
        const int k = std::stoi(key, &used);
        if (used != key.size()) {
            malformed(path, "degree key '" + key + "' is not an integer");
        }
        return k;
    } catch (const std::logic_error&) {
        malformed(path, "degree key '" + key + "' is not an integer");
    }
}

Json matrix_to_json(const Matrix& m, GroupKind kind)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(to_json(m(i, j), kind));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, const std::string& path, std::size_t rows, std::size_t cols)
{
    if (!j.is_array()) {
        malformed(path, "expected an array of rows");
    }
    if (j.size() != rows && !(rows == 0 || cols == 0)) {
        throw Error("dimension-mismatch", path + ": " + std::to_string(j.size()) + " rows, expected " +
                                              std::to_string(rows));
    }
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& row = j[i];
        const std::string rp = index_path(path, i);
        if (!row.is_array()) {
            malformed(rp, "expected a row array");
        }
        if (row.size() != cols) {
            throw Error("dimension-mismatch", rp + ": " + std::to_string(row.size()) + " entries, expected " +
                                                  std::to_string(cols));
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            m(i, c) = ring_element_from_json(row[c], index_path(rp, c));
        }
    }
    return m;
}

std::map<int, std::vector<std::string>> bases_from_json(const Json& j, const std::string& path)
{
    if (!j.is_object()) {
        malformed(path, "expected an object of degree -> labels");
    }
    std::map<int, std::vector<std::string>> bases;
    for (const auto& [key, labels] : j.items()) {
        const std::string p = join(path, key);
        const int k = degree_key(key, p);
        if (!labels.is_array()) {
            malformed(p, "expected an array of labels");
        }
        auto& out = bases[k];
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (!labels[i].is_string()) {
                malformed(index_path(p, i), "labels must be strings");
            }
            out.push_back(labels[i].get<std::string>());
        }
    }
    return bases;
}

Json bases_to_json(const std::map<int, std::vector<std::string>>& bases)
{
    Json out = Json::object();
    for (const auto& [k, b] : bases) {
        out[std::to_string(k)] = b;
    }
    return out;
}

}  // namespace

Json to_json(const GroupSpec& spec)
{
    Json j;
    j["kind"] = to_string(spec.kind);
    switch (spec.kind) {
        case GroupKind::FiniteTable: j["table"] = spec.table; break;
        case GroupKind::Cyclic: j["order"] = spec.order; break;
        case GroupKind::FreeAbelian:
        case GroupKind::Free: j["rank"] = spec.rank; break;
    }
    return j;
}

GroupSpec group_spec_from_json(const Json& j, const std::string& path)
{
    const Json& kind = field(j, "kind", path);
    if (!kind.is_string()) {
        malformed(join(path, "kind"), "expected a string");
    }
    const std::string k = kind.get<std::string>();
    if (k == "cyclic") {
        return GroupSpec::cyclic(int_from_json(field(j, "order", path), join(path, "order")));
    }
    if (k == "free-abelian") {
        return GroupSpec::free_abelian(static_cast<int>(int_from_json(field(j, "rank", path), join(path, "rank"))));
    }
    if (k == "free") {
        return GroupSpec::free(static_cast<int>(int_from_json(field(j, "rank", path), join(path, "rank"))));
    }
    if (k == "finite-table") {
        const Json& t = field(j, "table", path);
        std::vector<std::vector<int>> table;
        if (!t.is_array()) {
            malformed(join(path, "table"), "expected an array of rows");
        }
        for (std::size_t i = 0; i < t.size(); ++i) {
            const std::string rp = index_path(join(path, "table"), i);
            if (!t[i].is_array()) {
                malformed(rp, "expected a row");
            }
            std::vector<int> row;
            for (std::size_t c = 0; c < t[i].size(); ++c) {
                row.push_back(static_cast<int>(int_from_json(t[i][c], index_path(rp, c))));
            }
            table.push_back(std::move(row));
        }
        return GroupSpec::finite_table(std::move(table));
    }
    malformed(join(path, "kind"), "unknown group kind '" + k + "'");
}

Json to_json(const GroupElement& g, GroupKind kind)
{
    switch (kind) {
        case GroupKind::FiniteTable:
        case GroupKind::Cyclic:
            return Json(g.word.at(0));
        case GroupKind::FreeAbelian:
            return Json(g.word);
        case GroupKind::Free:
            return Json(format_free_word(g.word));
    }
    return Json();
}

GroupElement group_element_from_json(const Json& j, const std::string& path)
{
    if (j.is_number_integer()) {
        return GroupElement{{j.get<std::int64_t>()}};
    }
    if (j.is_array()) {
        GroupElement g;
        for (std::size_t i = 0; i < j.size(); ++i) {
            g.word.push_back(int_from_json(j[i], index_path(path, i)));
        }
        return g;
    }
    if (j.is_string()) {
        try {
            return GroupElement{parse_free_word(j.get<std::string>())};
        } catch (const Error& e) {
            malformed(path, e.what());
        }
    }
    malformed(path, "expected a group word (integer, array or string)");
}

Json to_json(const RingElement& a, GroupKind kind)
{
    Json out = Json::array();
    for (const auto& [g, c] : a.terms()) {
        out.push_back(Json::array({integer_to_json(c), to_json(g, kind)}));
    }
    return out;
}

RingElement ring_element_from_json(const Json& j, const std::string& path)
{
    if (!j.is_array()) {
        malformed(path, "expected a list of [coefficient, word] pairs");
    }
    std::vector<RingElement::Term> terms;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = index_path(path, i);
        if (!j[i].is_array() || j[i].size() != 2) {
            malformed(p, "expected a [coefficient, word] pair");
        }
        terms.emplace_back(group_element_from_json(j[i][1], index_path(p, 1)),
                           integer_from_json(j[i][0], index_path(p, 0)));
    }
    return RingElement::from_terms(std::move(terms));
}

Json to_json(const BasedComplex& c)
{
    Json j;
    j["group"] = to_json(c.ring().spec());
    j["degrees"] = bases_to_json(c.bases);
    Json diffs = Json::object();
    for (const auto& [k, m] : c.diffs) {
        diffs[std::to_string(k)] = matrix_to_json(m, c.ring().kind());
    }
    j["differentials"] = diffs;
    return j;
}

BasedComplex complex_from_json(const Json& j, const std::string& path)
{
    const GroupSpec spec = group_spec_from_json(field(j, "group", path), join(path, "group"));
    BasedComplex c(Group::make(spec));
    c.bases = bases_from_json(field(j, "degrees", path), join(path, "degrees"));
    std::erase_if(c.bases, [](const auto& kv) { return kv.second.empty(); });
    if (j.contains("differentials")) {
        const Json& d = j["differentials"];
        const std::string dp = join(path, "differentials");
        if (!d.is_object()) {
            malformed(dp, "expected an object of degree -> matrix");
        }
        for (const auto& [key, m] : d.items()) {
            const std::string p = join(dp, key);
            const int k = degree_key(key, p);
            Matrix mat = matrix_from_json(m, p, c.rank(k + 1), c.rank(k));
            if (!mat.empty()) {
                c.diffs[k] = std::move(mat);
            }
        }
    }
    c.normalize();
    return c;
}

Json to_json(const ZComplex& c)
{
    Json j;
    j["degrees"] = bases_to_json(c.bases);
    Json diffs = Json::object();
    for (const auto& [k, m] : c.diffs) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < m.rows; ++i) {
            Json row = Json::array();
            for (std::size_t c2 = 0; c2 < m.cols; ++c2) {
                row.push_back(integer_to_json(m(i, c2)));
            }
            rows.push_back(std::move(row));
        }
        diffs[std::to_string(k)] = rows;
    }
    j["differentials"] = diffs;
    return j;
}

ZComplex zcomplex_from_json(const Json& j, const std::string& path)
{
    ZComplex c;
    c.bases = bases_from_json(field(j, "degrees", path), join(path, "degrees"));
    std::erase_if(c.bases, [](const auto& kv) { return kv.second.empty(); });
    if (j.contains("differentials")) {
        const std::string dp = join(path, "differentials");
        for (const auto& [key, m] : j["differentials"].items()) {
            const std::string p = join(dp, key);
            const int k = degree_key(key, p);
            const std::size_t rows = c.rank(k + 1);
            const std::size_t cols = c.rank(k);
            if (rows == 0 || cols == 0) {
                continue;
            }
            if (!m.is_array() || m.size() != rows) {
                throw Error("dimension-mismatch", p + ": expected " + std::to_string(rows) + " rows");
            }
            IntMatrix mat(rows, cols);
            for (std::size_t i = 0; i < rows; ++i) {
                if (!m[i].is_array() || m[i].size() != cols) {
                    throw Error("dimension-mismatch", index_path(p, i) + ": expected " + std::to_string(cols) +
                                                          " entries");
                }
                for (std::size_t c2 = 0; c2 < cols; ++c2) {
                    mat(i, c2) = integer_from_json(m[i][c2], index_path(index_path(p, i), c2));
                }
            }
            c.diffs[k] = std::move(mat);
        }
    }
    c.normalize();
    return c;
}

Json to_json(const ChainMap& f)
{
    Json j;
    j["source"] = to_json(f.source);
    j["target"] = to_json(f.target);
    Json mats = Json::object();
    for (const auto& [k, m] : f.matrices) {
        mats[std::to_string(k)] = matrix_to_json(m, f.ring().kind());
    }
    j["matrices"] = mats;
    return j;
}

ChainMap chain_map_from_json(const Json& j, const std::string& path)
{
    ChainMap f{complex_from_json(field(j, "source", path), join(path, "source")),
               complex_from_json(field(j, "target", path), join(path, "target")),
               {}};
    if (j.contains("matrices")) {
        const std::string mp = join(path, "matrices");
        for (const auto& [key, m] : j["matrices"].items()) {
            const std::string p = join(mp, key);
            const int k = degree_key(key, p);
            Matrix mat = matrix_from_json(m, p, f.target.rank(k), f.source.rank(k));
            if (!mat.empty()) {
                f.matrices[k] = std::move(mat);
            }
        }
    }
    f.normalize();
    return f;
}

Json to_json(const Levels& levels)
{
    Json j = Json::object();
    for (const auto& [l, p] : levels) {
        j[l] = p;
    }
    return j;
}

Levels levels_from_json(const Json& j, const std::string& path)
{
    if (!j.is_object()) {
        malformed(path, "expected an object of label -> level");
    }
    Levels out;
    for (const auto& [l, p] : j.items()) {
        out[l] = static_cast<int>(int_from_json(p, join(path, l)));
    }
    return out;
}

FilteredChainMap filtered_map_from_json(const Json& j)
{
    FilteredChainMap f{chain_map_from_json(j), {}, {}};
    f.source_levels = levels_from_json(field(field(j, "source", ""), "levels", "source"), "source.levels");
    f.target_levels = levels_from_json(field(field(j, "target", ""), "levels", "target"), "target.levels");
    return f;
}

Json to_json(const FilteredChainMap& f)
{
    Json j = to_json(f.map);
    j["source"]["levels"] = to_json(f.source_levels);
    j["target"]["levels"] = to_json(f.target_levels);
    return j;
}

Json to_json(const Move& m, GroupKind kind)
{
    Json j;
    j["op"] = m.name();
    j["degree"] = m.degree();
    if (const auto* s = std::get_if<Stabilize>(&m.op)) {
        j["count"] = s->count;
    } else if (const auto* d = std::get_if<Destabilize>(&m.op)) {
        Json pairs = Json::array();
        for (const auto& [a, b] : d->pairs) {
            pairs.push_back(Json::array({a, b}));
        }
        j["pairs"] = pairs;
    } else if (const auto* a = std::get_if<AddSlide>(&m.op)) {
        j["i"] = a->i;
        j["j"] = a->j;
        j["lambda"] = to_json(a->lambda, kind);
    } else if (const auto* u = std::get_if<ScaleUnit>(&m.op)) {
        j["i"] = u->i;
        j["sign"] = u->sign;
        j["g"] = to_json(u->g, kind);
    }
    return j;
}

Move move_from_json(const Json& j, const std::string& path)
{
    const Json& op = field(j, "op", path);
    if (!op.is_string()) {
        malformed(join(path, "op"), "expected a string");
    }
    const std::string name = op.get<std::string>();
    const int k = static_cast<int>(int_from_json(field(j, "degree", path), join(path, "degree")));
    if (name == "Stabilize") {
        return Stabilize{k, index_from_json(field(j, "count", path), join(path, "count"))};
    }
    if (name == "Destabilize") {
        Destabilize d{k, {}};
        const Json& pairs = field(j, "pairs", path);
        if (!pairs.is_array()) {
            malformed(join(path, "pairs"), "expected an array");
        }
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const std::string p = index_path(join(path, "pairs"), i);
            if (!pairs[i].is_array() || pairs[i].size() != 2) {
                malformed(p, "expected an [i, j] pair");
            }
            d.pairs.emplace_back(index_from_json(pairs[i][0], p), index_from_json(pairs[i][1], p));
        }
        return d;
    }
    if (name == "AddSlide") {
        return AddSlide{k, index_from_json(field(j, "i", path), join(path, "i")),
                        index_from_json(field(j, "j", path), join(path, "j")),
                        ring_element_from_json(field(j, "lambda", path), join(path, "lambda"))};
    }
    if (name == "ScaleUnit") {
        return ScaleUnit{k, index_from_json(field(j, "i", path), join(path, "i")),
                         static_cast<int>(int_from_json(field(j, "sign", path), join(path, "sign"))),
                         group_element_from_json(field(j, "g", path), join(path, "g"))};
    }
    malformed(join(path, "op"), "unknown move '" + name + "'");
}

Json to_json(const Certificate& cert, GroupKind kind)
{
    Json j;
    j["initial_hash"] = cert.initial_hash;
    Json moves = Json::array();
    for (const auto& m : cert.moves) {
        moves.push_back(to_json(m, kind));
    }
    j["moves"] = moves;
    return j;
}

Certificate certificate_from_json(const Json& j, const std::string& path)
{
    Certificate cert;
    const Json& h = field(j, "initial_hash", path);
    if (!h.is_string()) {
        malformed(join(path, "initial_hash"), "expected a string");
    }
    cert.initial_hash = h.get<std::string>();
    const Json& moves = field(j, "moves", path);
    if (!moves.is_array()) {
        malformed(join(path, "moves"), "expected an array");
    }
    for (std::size_t i = 0; i < moves.size(); ++i) {
        cert.moves.push_back(move_from_json(moves[i], index_path(join(path, "moves"), i)));
    }
    return cert;
}

std::string canonical(const Json& j)
{
    return j.dump();
}

std::string complex_hash(const BasedComplex& c)
{
    const std::string text = canonical(to_json(c));
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) {
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return os.str();
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error("io-error", "cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error("malformed-json", path + ": " + e.what());
    }
}

}  // namespace shtk
