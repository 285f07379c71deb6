#include "nsymkit/json_io.hpp"

#include <limits>

#include "nsymkit/errors.hpp"

namespace nsymkit {

namespace {

std::vector<int> int_array(const Json& j, const char* what) {
    if (!j.is_array()) throw DomainError(std::string(what) + ": expected an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw DomainError(std::string(what) + ": expected integers");
        const auto v = x.get<std::int64_t>();
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
            throw DomainError(std::string(what) + ": integer out of range");
        }
        out.push_back(static_cast<int>(v));
    }
    return out;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Json to_json(const Composition& alpha) { return Json(alpha.parts()); }

Json to_json(const Word& w) { return Json(w.indices()); }

Json to_json(const SkewShape& s) {
    Json boxes = Json::array();
    for (const auto& b : s.boxes()) boxes.push_back(Json::array({b.row, b.col}));
    Json out = Json::object();
    out["outer"] = to_json(s.outer());
    out["inner"] = to_json(s.inner());
    out["boxes"] = std::move(boxes);
    return out;
}

Json to_json(const Filling& f) {
    Json entries = Json::array();
    for (const auto& [cell, v] : f.entries()) entries.push_back(Json::array({cell.row, cell.col, v}));
    Json out = Json::object();
    out["shape"] = to_json(f.shape());
    out["entries"] = std::move(entries);
    return out;
}

Json coefficient_to_json(const Integer& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
        return Json(static_cast<std::int64_t>(c));
    }
    return Json(c.str());
}

Json to_json(const Element& e) {
    Json terms = Json::array();
    for (const auto& [alpha, c] : e.terms()) {
        Json t = Json::object();
        t["comp"] = to_json(alpha);
        t["coeff"] = coefficient_to_json(c);
        terms.push_back(std::move(t));
    }
    Json out = Json::object();
    out["basis"] = std::string(basis_name(e.basis()));
    out["terms"] = std::move(terms);
    return out;
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const PartitionCoefficients& coeffs) {
    Json terms = Json::array();
    for (const auto& [p, c] : coeffs) {
        Json t = Json::object();
        t["comp"] = to_json(p);
        t["coeff"] = coefficient_to_json(c);
        terms.push_back(std::move(t));
    }
    return terms;
}

Composition composition_from_json(const Json& j) { return Composition(int_array(j, "composition")); }

Word word_from_json(const Json& j) { return Word(int_array(j, "word")); }

SkewShape skew_shape_from_json(const Json& j) {
    Composition outer = composition_from_json(field(j, "outer"));
    Composition inner = composition_from_json(field(j, "inner"));
    const Json& boxes_json = field(j, "boxes");
    if (!boxes_json.is_array()) throw DomainError("boxes: expected an array");
    std::set<Cell> boxes;
    for (const auto& b : boxes_json) {
        const auto rc = int_array(b, "box");
        if (rc.size() != 2) throw DomainError("box: expected [row, column]");
        boxes.insert({rc[0], rc[1]});
    }
    SkewShape parsed(outer, inner, std::move(boxes));
    if (!(skew(outer, inner) == parsed)) throw DomainError("boxes do not match outer // inner");
    return parsed;
}

Filling filling_from_json(const Json& j) {
    SkewShape shape = skew_shape_from_json(field(j, "shape"));
    const Json& entries_json = field(j, "entries");
    if (!entries_json.is_array()) throw DomainError("entries: expected an array");
    std::map<Cell, int> entries;
    for (const auto& e : entries_json) {
        const auto rcv = int_array(e, "entry");
        if (rcv.size() != 3) throw DomainError("entry: expected [row, column, value]");
        if (!entries.emplace(Cell{rcv[0], rcv[1]}, rcv[2]).second) throw DomainError("duplicate entry");
    }
    return Filling(std::move(shape), std::move(entries));
}

Integer coefficient_from_json(const Json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
        return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
            throw DomainError("coefficient string is not a decimal integer");
        }
        return Integer(s);
    }
    throw DomainError("coefficient must be an integer");
}

Element element_from_json(const Json& j) {
    const Json& basis = field(j, "basis");
    if (!basis.is_string()) throw DomainError("basis must be a string");
    Element out(parse_basis(basis.get<std::string>()));
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw DomainError("terms: expected an array");
    for (const auto& t : terms) out.add(composition_from_json(field(t, "comp")), coefficient_from_json(field(t, "coeff")));
    return out;
}

Partition partition_from_json(const Json& j) { return Partition(int_array(j, "partition")); }

Element parse_element(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
    return element_from_json(j);
}

}  // namespace nsymkit
