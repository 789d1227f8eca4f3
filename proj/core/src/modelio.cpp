#include "intlab/modelio.hpp"

#include "intlab/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace intlab {

namespace {

using nlohmann::json;

DomainValue parse_value(const json& j, const SemType& type, const std::string& where) {
    switch (type.kind()) {
        case SemType::Kind::Entity:
            if (!j.is_string()) throw ModelError(where + ": entity value must be a label string");
            return DomainValue::ent(j.get<std::string>());
        case SemType::Kind::Truth: {
            if (j.is_boolean()) return DomainValue::tru(j.get<bool>() ? 1 : 0);
            if (j.is_number_integer()) {
                const long long b = j.get<long long>();
                if (b == 0 || b == 1) return DomainValue::tru(static_cast<int>(b));
            }
            throw ModelError(where + ": truth value must be 0, 1, or a boolean");
        }
        case SemType::Kind::Idx:
            if (!j.is_string()) throw ModelError(where + ": index value must be a label string");
            return DomainValue::idx(type.sort(), j.get<std::string>());
        case SemType::Kind::Func: {
            if (!j.is_object()) {
                throw ModelError(where + ": function value must be an object keyed by arguments");
            }
            const SemType arg_type = type.arg();
            const SemType res_type = type.result();
            std::vector<FuncEntry> entries;
            for (const auto& [key, val] : j.items()) {
                DomainValue argv = DomainValue::tru(0);
                switch (arg_type.kind()) {
                    case SemType::Kind::Entity: argv = DomainValue::ent(key); break;
                    case SemType::Kind::Idx: argv = DomainValue::idx(arg_type.sort(), key); break;
                    case SemType::Kind::Truth:
                        if (key != "0" && key != "1") {
                            throw ModelError(where + ": truth argument key must be \"0\" or \"1\"");
                        }
                        argv = DomainValue::tru(key == "1" ? 1 : 0);
                        break;
                    case SemType::Kind::Func:
                        throw ModelError(where +
                                         ": function-typed arguments are not supported in model "
                                         "files (build such constants programmatically)");
                }
                entries.push_back(
                    FuncEntry{std::move(argv), parse_value(val, res_type, where + "/" + key)});
            }
            return DomainValue::func(arg_type, res_type, std::move(entries));
        }
    }
    throw ModelError(where + ": unreachable");
}

void fill_intension(const json& j, const SemType& type, const IntensionalModel& model,
                    std::size_t sort_index, std::vector<std::string>& prefix, Intension& out,
                    const std::string& where) {
    if (sort_index == model.sorts.size()) {
        out.table.emplace(prefix, parse_value(j, type, where));
        return;
    }
    if (!j.is_object()) {
        // Rigid shorthand: one extension for the whole remaining subspace.
        const FiniteFrame& frame = model.finite_frame(model.sorts[sort_index]);
        for (const auto& w : frame.worlds()) {
            prefix.push_back(w);
            fill_intension(j, type, model, sort_index + 1, prefix, out, where);
            prefix.pop_back();
        }
        return;
    }
    for (const auto& [key, val] : j.items()) {
        prefix.push_back(key);
        fill_intension(val, type, model, sort_index + 1, prefix, out,
                       where + "/" + key);
        prefix.pop_back();
    }
}

}  // namespace

IntensionalModel parse_model_text(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ModelError(std::string("model file is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ModelError("model file must be a JSON object");

    IntensionalModel model;

    if (root.contains("sorts")) {
        if (!root["sorts"].is_array()) throw ModelError("'sorts' must be an array");
        for (const auto& js : root["sorts"]) {
            if (!js.is_object() || !js.contains("id") || !js.contains("indices")) {
                throw ModelError("each sort needs 'id' and 'indices'");
            }
            const SortId sort(js["id"].get<std::string>());
            std::vector<std::string> worlds;
            for (const auto& w : js["indices"]) worlds.push_back(w.get<std::string>());
            std::vector<std::pair<std::string, std::string>> edges;
            if (js.contains("edges")) {
                for (const auto& e : js["edges"]) {
                    if (!e.is_array() || e.size() != 2) {
                        throw ModelError("sort '" + sort.label() +
                                         "': each edge must be a [from,to] pair");
                    }
                    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
                }
            }
            model.sorts.push_back(sort);
            model.frames.emplace(sort, FiniteFrame::from_edges(sort, std::move(worlds), edges));
        }
    }

    if (root.contains("entities")) {
        if (!root["entities"].is_array()) throw ModelError("'entities' must be an array");
        for (const auto& e : root["entities"]) model.entities.push_back(e.get<std::string>());
    }

    if (root.contains("constants")) {
        if (!root["constants"].is_array()) throw ModelError("'constants' must be an array");
        for (const auto& jc : root["constants"]) {
            if (!jc.is_object() || !jc.contains("name") || !jc.contains("type") ||
                !jc.contains("intension")) {
                throw ModelError("each constant needs 'name', 'type' and 'intension'");
            }
            Constant c{jc["name"].get<std::string>(), SemType::truth(), {}};
            const std::string where = "constant '" + c.name + "'";
            SemType declared = SemType::truth();
            try {
                declared = parse_type(jc["type"].get<std::string>());
            } catch (const SyntaxError& e) {
                throw ModelError(where + ": " + e.what());
            }
            // "<s,TYPE>" marks the intension explicitly; strip the compound
            // index prefix to get the extensional type.
            if (declared.is_func() && declared.arg().is_idx() &&
                declared.arg().sort().label() == "s") {
                c.type = declared.result();
            } else {
                c.type = declared;
            }
            const auto mentions_s = [&](const SemType& t, auto&& self) -> bool {
                switch (t.kind()) {
                    case SemType::Kind::Entity:
                    case SemType::Kind::Truth: return false;
                    case SemType::Kind::Idx: return t.sort().label() == "s";
                    case SemType::Kind::Func:
                        return self(t.arg(), self) || self(t.result(), self);
                }
                return false;
            };
            if (mentions_s(c.type, mentions_s)) {
                throw ModelError(where +
                                 ": 's' denotes the compound index and may appear only as the "
                                 "outer intension prefix <s,...>");
            }

            std::vector<std::string> prefix;
            fill_intension(jc["intension"], c.type, model, 0, prefix, c.intension, where);
            if (!model.constants.emplace(c.name, std::move(c)).second) {
                throw ModelError(where + " declared twice");
            }
        }
    }

    model.validate();
    return model;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ModelError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

IntensionalModel load_model(const std::string& path) {
    return parse_model_text(read_file(path));
}

std::string content_hash_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace intlab
