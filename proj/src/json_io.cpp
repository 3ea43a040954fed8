#include "efflab/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace efflab {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& text, size_t byte, const std::string& what) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    throw ParseError(what, line, col);
}

}  // namespace

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail(text, e.byte > 0 ? e.byte - 1 : 0, e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io-error", "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

json to_json(const EffectTable& t) {
    json j;
    j["schema"] = kEffectTableSchema;
    j["elements"] = t.names;
    j["zero"] = t.names[t.zero];
    j["one"] = t.names[t.one];
    json ovee = json::array();
    for (int x = 0; x < t.size(); ++x)
        for (int y = 0; y < t.size(); ++y) {
            json row = json::array({t.names[x], t.names[y]});
            if (t.summable(x, y))
                row.push_back(t.names[t.sum(x, y)]);
            else
                row.push_back(nullptr);
            ovee.push_back(row);
        }
    j["ovee"] = ovee;
    json orth = json::object();
    for (int x = 0; x < t.size(); ++x) orth[t.names[x]] = t.names[t.orth[x]];
    j["orthosupplement"] = orth;
    if (t.product) {
        json prod = json::array();
        for (int x = 0; x < t.size(); ++x)
            for (int y = 0; y < t.size(); ++y)
                prod.push_back(json::array({t.names[x], t.names[y], t.names[t.prod(x, y)]}));
        j["product"] = prod;
    }
    return j;
}

EffectTable effect_table_from_json(const json& j) {
    try {
        EffectTable t;
        t.names = j.at("elements").get<std::vector<std::string>>();
        std::map<std::string, int> idx;
        for (int i = 0; i < int(t.names.size()); ++i) {
            if (idx.count(t.names[i]))
                throw Error("malformed-table", "duplicate element name " + t.names[i]);
            idx[t.names[i]] = i;
        }
        auto look = [&](const json& v) {
            const std::string s = v.get<std::string>();
            auto it = idx.find(s);
            if (it == idx.end()) throw Error("malformed-table", "unknown element " + s);
            return it->second;
        };
        t.zero = look(j.at("zero"));
        t.one = look(j.at("one"));
        const int n = t.size();
        t.ovee.assign(n, std::vector<int>(n, -1));
        for (const auto& row : j.at("ovee")) {
            if (!row.is_array() || row.size() != 3)
                throw Error("malformed-table", "ovee entries must be [x,y,z|null]");
            const int x = look(row[0]), y = look(row[1]);
            t.ovee[x][y] = row[2].is_null() ? -1 : look(row[2]);
        }
        t.orth.assign(n, -1);
        for (const auto& [k, v] : j.at("orthosupplement").items()) {
            auto it = idx.find(k);
            if (it == idx.end()) throw Error("malformed-table", "unknown element " + k);
            t.orth[it->second] = look(v);
        }
        for (int v : t.orth)
            if (v < 0) throw Error("malformed-table", "non-total orthosupplement");
        if (j.contains("product")) {
            std::vector<std::vector<int>> prod(n, std::vector<int>(n, -1));
            for (const auto& row : j.at("product")) {
                if (!row.is_array() || row.size() != 3)
                    throw Error("malformed-table", "product entries must be [x,y,z]");
                prod[look(row[0])][look(row[1])] = look(row[2]);
            }
            for (const auto& r : prod)
                for (int v : r)
                    if (v < 0) throw Error("malformed-table", "product not total");
            t.product = std::move(prod);
        }
        t.validate_shape();
        return t;
    } catch (const json::exception& e) {
        throw Error("malformed-table", std::string("bad effect table json: ") + e.what());
    }
}

json to_json(const SelfAdjoint& a) {
    json j;
    j["schema"] = kSelfAdjointSchema;
    j["dims"] = a.sig.dims;
    json blocks = json::array();
    for (const auto& b : a.blocks) {
        json rows = json::array();
        for (int r = 0; r < b.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < b.cols(); ++c)
                row.push_back(json::array({b(r, c).real(), b(r, c).imag()}));
            rows.push_back(row);
        }
        blocks.push_back(rows);
    }
    j["blocks"] = blocks;
    return j;
}

namespace {

CMat cmat_from_json(const json& rows, int nr, int nc) {
    CMat m(nr, nc);
    if (int(rows.size()) != nr) throw Error("malformed-matrix", "row count mismatch");
    for (int r = 0; r < nr; ++r) {
        const auto& row = rows[r];
        if (int(row.size()) != nc) throw Error("malformed-matrix", "column count mismatch");
        for (int c = 0; c < nc; ++c) {
            const auto& e = row[c];
            if (!e.is_array() || e.size() != 2)
                throw Error("malformed-matrix", "entries must be [re,im]");
            m(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

}  // namespace

SelfAdjoint self_adjoint_from_json(const json& j) {
    try {
        const BlockSignature sig{j.at("dims").get<std::vector<int>>()};
        const auto& blocks = j.at("blocks");
        if (int(blocks.size()) != sig.blocks())
            throw Error("malformed-matrix", "block count mismatch");
        std::vector<CMat> mats;
        for (int b = 0; b < sig.blocks(); ++b)
            mats.push_back(cmat_from_json(blocks[b], sig.dims[b], sig.dims[b]));
        return SelfAdjoint::make(sig, std::move(mats));
    } catch (const json::exception& e) {
        throw Error("malformed-matrix", std::string("bad self-adjoint json: ") + e.what());
    }
}

json to_json(const ChannelMap& f) {
    json j;
    j["schema"] = kChannelSchema;
    j["source"] = f.source.dims;
    j["target"] = f.target.dims;
    json kraus = json::array();
    for (const auto& t : f.kraus) {
        json rows = json::array();
        for (int r = 0; r < t.k.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < t.k.cols(); ++c)
                row.push_back(json::array({t.k(r, c).real(), t.k(r, c).imag()}));
            rows.push_back(row);
        }
        kraus.push_back(json{{"sb", t.src_block}, {"tb", t.tgt_block}, {"matrix", rows}});
    }
    j["kraus"] = kraus;
    return j;
}

ChannelMap channel_from_json(const json& j) {
    try {
        const BlockSignature src{j.at("source").get<std::vector<int>>()};
        const BlockSignature tgt{j.at("target").get<std::vector<int>>()};
        std::vector<KrausTerm> terms;
        for (const auto& k : j.at("kraus")) {
            KrausTerm t;
            t.src_block = k.at("sb").get<int>();
            t.tgt_block = k.at("tb").get<int>();
            if (t.src_block < 0 || t.src_block >= src.blocks() || t.tgt_block < 0 ||
                t.tgt_block >= tgt.blocks())
                throw Error("malformed-channel", "kraus block index out of range");
            t.k = cmat_from_json(k.at("matrix"), tgt.dims[t.tgt_block], src.dims[t.src_block]);
            terms.push_back(std::move(t));
        }
        return ChannelMap::make(src, tgt, std::move(terms));
    } catch (const json::exception& e) {
        throw Error("malformed-channel", std::string("bad channel json: ") + e.what());
    }
}

json to_json(const PureMap& f) {
    json j = to_json(f.channel());
    j["pure"] = true;
    return j;
}

PureMap pure_from_json(const json& j) {
    const ChannelMap c = channel_from_json(j);
    return PureMap::make(c.source, c.target, c.kraus);
}

json to_json(const LawReport& r) {
    json j;
    j["schema"] = kLawReportSchema;
    j["law"] = r.law;
    j["instance"] = r.instance;
    j["pass"] = r.pass;
    j["residual"] = r.residual;
    if (r.counterexample)
        j["counterexample"] = *r.counterexample;
    else
        j["counterexample"] = nullptr;
    return j;
}

}  // namespace efflab
