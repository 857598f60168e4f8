#include "tangle/coordinate.hpp"

#include "tangle/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace tangle {

std::strong_ordering DehnCoordinate::operator<=>(const DehnCoordinate& o) const {
    for (int i = 0; i < 3; ++i) {
        if (auto c = p[i] <=> o.p[i]; c != 0) return c;
        if (auto c = q[i] <=> o.q[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

bool DehnCoordinate::shape_ok() const {
    for (int i = 0; i < 3; ++i) {
        if (p[i] < 0) return false;
        if (p[i] == 0 && q[i] != 0) return false;
    }
    return (p[0] + p[1] + p[2]) % 2 == 0;
}

void DehnCoordinate::require_valid() const {
    for (int i = 0; i < 3; ++i) {
        if (p[i] < 0)
            throw InvariantError("p" + std::to_string(i + 1) + " is negative in " + compact());
        if (p[i] == 0 && q[i] != 0)
            throw InvariantError("q" + std::to_string(i + 1) + " must vanish when p" +
                                 std::to_string(i + 1) + " = 0 in " + compact());
    }
    if ((p[0] + p[1] + p[2]) % 2 != 0)
        throw ParityError("total window weight of " + compact() + " is odd");
}

std::string DehnCoordinate::compact() const {
    std::ostringstream out;
    for (int i = 0; i < 3; ++i) {
        if (i) out << ',';
        out << p[i] << ',' << q[i];
    }
    return out.str();
}

std::string DehnCoordinate::json() const {
    nlohmann::json j;
    j["p"] = p;
    j["q"] = q;
    return j.dump();
}

namespace {

DehnCoordinate from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad coordinate JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("p") || !j.contains("q"))
        throw ParseError("coordinate JSON needs \"p\" and \"q\" arrays");
    const auto& jp = j["p"];
    const auto& jq = j["q"];
    if (!jp.is_array() || !jq.is_array() || jp.size() != 3 || jq.size() != 3)
        throw ParseError("\"p\" and \"q\" must be arrays of three integers");
    DehnCoordinate c;
    for (int i = 0; i < 3; ++i) {
        if (!jp[i].is_number_integer() || !jq[i].is_number_integer())
            throw ParseError("coordinate entries must be integers");
        c.p[i] = jp[i].get<int>();
        c.q[i] = jq[i].get<int>();
    }
    return c;
}

} // namespace

DehnCoordinate parse_coordinate(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty coordinate");
    if (text[first] == '{') return from_json_text(text);

    std::array<int, 6> v{};
    std::istringstream in(text);
    for (int i = 0; i < 6; ++i) {
        if (!(in >> v[i]))
            throw ParseError("expected six comma-separated integers, got \"" + text + "\"");
        if (i < 5) {
            char sep = 0;
            if (!(in >> sep) || sep != ',')
                throw ParseError("expected ',' between coordinate entries in \"" + text + "\"");
        }
    }
    char trailing = 0;
    if (in >> trailing)
        throw ParseError("trailing characters after coordinate in \"" + text + "\"");
    return DehnCoordinate(v[0], v[1], v[2], v[3], v[4], v[5]);
}

std::size_t CoordinateHash::operator()(const DehnCoordinate& c) const {
    std::size_t h = 0;
    auto mix = [&h](int v) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (int i = 0; i < 3; ++i) {
        mix(c.p[i]);
        mix(c.q[i]);
    }
    return h;
}

} // namespace tangle
