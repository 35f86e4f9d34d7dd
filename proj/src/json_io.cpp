#include "folia/json_io.hpp"

namespace folia {

Json json_of(const AlgReal& a) {
    Json j = Json::object();
    Json defining = Json::array();
    if (a.is_exact()) {
        defining.push_back(rat_to_string(-a.value()));
        defining.push_back("1");
    } else {
        for (const auto& c : a.defining().c) defining.push_back(rat_to_string(c));
    }
    j["defining"] = std::move(defining);
    j["interval"] = Json::array({rat_to_string(a.lo()), rat_to_string(a.hi())});
    j["approx"] = to_float(a, 12);
    return j;
}

std::string sign_text(Sign s) {
    switch (s) {
        case Sign::Pos: return "+";
        case Sign::Neg: return "-";
        case Sign::Zero: return "0";
    }
    throw InternalError("unknown sign");
}

std::string token_kind_name(StripToken::Kind kind) {
    switch (kind) {
        case StripToken::Kind::LeftInfinite: return "left_infinite";
        case StripToken::Kind::RightInfinite: return "right_infinite";
        case StripToken::Kind::BoundedDistinct: return "bounded_distinct";
        case StripToken::Kind::BoundedEqual: return "bounded_equal";
    }
    throw InternalError("unknown token kind");
}

std::string separatrix_label(const SeparatrixId& id) {
    if (id.kind == SeparatrixId::Kind::Vertical) return "v" + std::to_string(id.index);
    std::string suffix;
    switch (id.attach) {
        case SeparatrixId::Attach::Left: suffix = "a"; break;
        case SeparatrixId::Attach::Right: suffix = "b"; break;
        case SeparatrixId::Attach::Both: suffix = "ab"; break;
    }
    return "s" + std::to_string(id.index) + suffix;
}

namespace {

Json bound_json(const LevelBound& b) {
    if (b.kind != LevelBound::Kind::Finite) return nullptr;
    return json_of(*b.value);
}

}  // namespace

Json json_of(const Configuration& c) {
    Json j = Json::object();
    Json roots = Json::array();
    for (const auto& z : c.roots) roots.push_back(json_of(z));
    j["roots"] = std::move(roots);
    Json bif = Json::array();
    for (const auto& v : c.bifurcation) bif.push_back(json_of(v));
    j["bifurcation"] = std::move(bif);
    Json tokens = Json::array();
    for (const auto& t : c.tokens) {
        Json tj = Json::object();
        tj["kind"] = token_kind_name(t.kind);
        Json signs = Json::array();
        for (Sign s : t.signs) signs.push_back(sign_text(s));
        tj["signs"] = std::move(signs);
        tokens.push_back(std::move(tj));
    }
    j["tokens"] = std::move(tokens);
    Json regions = Json::array();
    for (const auto& reg : c.regions) {
        Json rj = Json::object();
        rj["strip"] = reg.strip;
        rj["interval"] = Json::array({bound_json(reg.lower), bound_json(reg.upper)});
        Json boundary = Json::array();
        for (const auto& id : reg.boundary) boundary.push_back(separatrix_label(id));
        rj["boundary"] = std::move(boundary);
        regions.push_back(std::move(rj));
    }
    j["regions"] = std::move(regions);
    j["submersion"] = "ok";
    return j;
}

namespace {

Json part_json(const VerdictPart& p) {
    Json j = Json::object();
    j["value"] = p.value;
    if (p.witness_transformation) {
        Json w = Json::object();
        w["transformation"] = transformation_name(*p.witness_transformation);
        if (p.witness_sigma) {
            Json sigma = Json::array();
            for (const auto& [from, to] : p.witness_sigma->pairs)
                sigma.push_back(Json::array({to_float(from, 12), to_float(to, 12)}));
            w["sigma"] = std::move(sigma);
        }
        j["witness"] = std::move(w);
    }
    if (p.obstruction) j["obstruction"] = obstruction_code(*p.obstruction);
    return j;
}

}  // namespace

Json json_of(const EquivalenceVerdict& v) {
    Json j = Json::object();
    j["foliation_o"] = part_json(v.foliation_o);
    j["foliation_top"] = part_json(v.foliation_top);
    j["function_o"] = part_json(v.function_o);
    j["function_top"] = part_json(v.function_top);
    return j;
}

namespace {

Json triple_json(const TripleReport& t) {
    Json j = Json::object();
    j["triple"] = Json::array({t.leaves[0], t.leaves[1], t.leaves[2]});
    j["relation_p"] = t.relation_left;
    j["relation_q"] = t.relation_right;
    return j;
}

}  // namespace

Json json_of(const CorrespondenceReport& r) {
    Json j = Json::object();
    j["checked"] = r.checked;
    Json v = Json::array();
    for (const auto& t : r.violations) v.push_back(triple_json(t));
    j["violations"] = std::move(v);
    Json inc = Json::array();
    for (const auto& t : r.inconclusive) inc.push_back(triple_json(t));
    j["inconclusive"] = std::move(inc);
    return j;
}

}  // namespace folia
