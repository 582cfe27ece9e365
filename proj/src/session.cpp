#include "lazcad/session.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lazcad/parse.hpp"

namespace lazcad {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kFormat = "lazcad-session";
constexpr int kVersion = 1;

Json real_to_json(const RealAlg& v) {
    if (v.is_rational()) return Json{{"rat", rat_to_string(v.rational())}};
    Json poly = Json::array();
    for (const auto& c : v.defining().coeffs()) poly.push_back(c.get_str());
    return Json{{"alg", Json{{"poly", poly},
                             {"lo", rat_to_string(v.lo())},
                             {"hi", rat_to_string(v.hi())}}}};
}

Rat parse_rat(const std::string& text) {
    auto r = rat_from_string(text);
    if (!r) throw SessionError("bad rational literal: " + text);
    return *r;
}

RealAlg real_from_json(const Json& j) {
    if (j.contains("rat")) return RealAlg::from_rational(parse_rat(j.at("rat")));
    if (!j.contains("alg")) throw SessionError("bad number record");
    const Json& a = j.at("alg");
    std::vector<Int> coeffs;
    for (const auto& c : a.at("poly")) coeffs.emplace_back(c.get<std::string>());
    return RealAlg::from_root(UPoly(std::move(coeffs)), parse_rat(a.at("lo")),
                              parse_rat(a.at("hi")));
}

Json cell_to_json(const Cell& c) {
    Json j;
    j["id"] = c.id;
    j["index"] = c.index;
    j["source"] = c.source;
    j["flag"] = c.flag == CellFlag::New ? "new" : "old";
    Json sample = Json::array();
    for (const auto& v : c.sample) sample.push_back(real_to_json(v));
    j["sample"] = sample;
    if (c.bound.is_section) {
        j["bound"] = Json{{"kind", "section"}, {"value", real_to_json(c.bound.value)}};
    } else {
        Json b{{"kind", "sector"}};
        b["lo"] = c.bound.lo_inf ? Json("-inf") : real_to_json(c.bound.lo);
        b["hi"] = c.bound.hi_inf ? Json("inf") : real_to_json(c.bound.hi);
        j["bound"] = b;
    }
    return j;
}

Cell cell_from_json(const Json& j, std::size_t level) {
    Cell c;
    c.id = j.at("id").get<std::uint64_t>();
    c.index = j.at("index").get<std::vector<int>>();
    c.source = j.at("source").get<std::uint64_t>();
    std::string flag = j.at("flag").get<std::string>();
    if (flag != "new" && flag != "old") throw SessionError("bad cell flag");
    c.flag = flag == "new" ? CellFlag::New : CellFlag::Old;
    c.level = level;
    for (const auto& v : j.at("sample")) c.sample.push_back(real_from_json(v));
    if (c.sample.size() != level) throw SessionError("cell sample arity mismatch");
    const Json& b = j.at("bound");
    std::string kind = b.at("kind").get<std::string>();
    if (kind == "section") {
        c.bound = CellBound::section(real_from_json(b.at("value")));
    } else if (kind == "sector") {
        c.bound.is_section = false;
        if (b.at("lo") != Json("-inf")) {
            c.bound.lo_inf = false;
            c.bound.lo = real_from_json(b.at("lo"));
        }
        if (b.at("hi") != Json("inf")) {
            c.bound.hi_inf = false;
            c.bound.hi = real_from_json(b.at("hi"));
        }
    } else {
        throw SessionError("bad bound kind");
    }
    return c;
}

}  // namespace

void save_session(const SessionState& s, const std::string& path) {
    Json j;
    j["format"] = kFormat;
    j["version"] = kVersion;
    j["mode"] = s.mode == CadMode::Full ? "full" : "open";
    j["vars"] = s.order->names();
    Json inputs = Json::array();
    for (const auto& p : s.inputs) inputs.push_back(p.to_string());
    j["inputs"] = inputs;
    Json table = Json::array();
    for (const auto& lvl : s.table.levels) {
        Json level = Json::array();
        for (const auto& p : lvl) level.push_back(p.to_string());
        table.push_back(level);
    }
    j["table"] = table;
    Json roots = Json::array();
    for (const auto& r : s.tree.level1_roots) roots.push_back(real_to_json(r));
    j["roots"] = roots;
    Json tree = Json::array();
    for (const auto& lvl : s.tree.levels) {
        Json level = Json::array();
        for (const auto& c : lvl) level.push_back(cell_to_json(c));
        tree.push_back(level);
    }
    j["tree"] = tree;

    std::string text = j.dump(1);
    int fd = ::open(path.c_str(), O_CREAT | O_WRONLY | O_TRUNC, 0644);
    if (fd < 0) throw SessionError("cannot open session file for writing: " + path);
    ::flock(fd, LOCK_EX);
    std::size_t off = 0;
    while (off < text.size()) {
        ssize_t w = ::write(fd, text.data() + off, text.size() - off);
        if (w <= 0) {
            ::flock(fd, LOCK_UN);
            ::close(fd);
            throw SessionError("short write to session file: " + path);
        }
        off += static_cast<std::size_t>(w);
    }
    ::flock(fd, LOCK_UN);
    ::close(fd);
}

SessionState load_session(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SessionError("cannot open session file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SessionError(std::string("session is not valid JSON: ") + e.what());
    }
    try {
        if (j.at("format") != Json(kFormat)) throw SessionError("not a lazcad session file");
        if (j.at("version").get<int>() != kVersion) throw SessionError("unsupported session version");
        SessionState s;
        s.order = make_order(j.at("vars").get<std::vector<std::string>>());
        std::string mode = j.at("mode").get<std::string>();
        if (mode != "open" && mode != "full") throw SessionError("bad mode");
        s.mode = mode == "full" ? CadMode::Full : CadMode::Open;
        std::size_t n = s.order->size();
        for (const auto& t : j.at("inputs")) s.inputs.insert(parse_poly(t.get<std::string>(), s.order));
        s.table.order = s.order;
        for (const auto& lvl : j.at("table")) {
            PolySet set;
            for (const auto& t : lvl) set.insert(parse_poly(t.get<std::string>(), s.order));
            s.table.levels.push_back(std::move(set));
        }
        if (s.table.levels.size() != n) throw SessionError("projection table level count mismatch");
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& p : s.table.level(i))
                for (std::size_t v = n - i; v < n; ++v)
                    if (p.degree(v) > 0) throw SessionError("table member above its level");
        s.tree.order = s.order;
        s.tree.mode = s.mode;
        for (const auto& r : j.at("roots")) s.tree.level1_roots.push_back(real_from_json(r));
        std::size_t level = 0;
        for (const auto& lvl : j.at("tree")) {
            ++level;
            std::vector<Cell> cells;
            for (const auto& cj : lvl) cells.push_back(cell_from_json(cj, level));
            s.tree.levels.push_back(std::move(cells));
        }
        if (s.tree.depth() != n) throw SessionError("tree depth mismatch");
        s.tree.note_ids();
        // Structural consistency: sources resolve and stacks sort cleanly.
        combine(s.tree);
        // Inputs are reflected in the table's top level.
        for (const auto& p : s.inputs) {
            std::size_t top = n - 1;
            if (p.degree(top) == 0) continue;
            MultiPoly prim = content_primitive(p, top).primitive;
            MultiPoly sf = square_free_part(prim, top);
            if (!s.table.level(0).contains(canonicalize(sf)))
                throw SessionError("table does not reflect the session inputs");
        }
        return s;
    } catch (const SessionError&) {
        throw;
    } catch (const std::exception& e) {
        throw SessionError(std::string("malformed session: ") + e.what());
    }
}

}  // namespace lazcad
