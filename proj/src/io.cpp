#include "isr1/io.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "isr1/errors.hpp"

namespace isr1 {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string strip(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

Int parse_int(const std::string& raw) {
    const std::string s = strip(raw);
    if (s.empty()) throw ParseError("empty integer field");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError("sign without digits: '" + raw + "'");
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw ParseError("bad integer '" + raw + "'");
        }
    }
    return Int(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

ordered_json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return ordered_json(v.convert_to<long long>());
    return ordered_json(v.str());
}

Int int_from_json(const ordered_json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw ParseError("expected integer or decimal string in JSON matrix");
}

ordered_json mat_to_json(const Mat2& m) {
    return ordered_json::array(
        {ordered_json::array({int_to_json(m.a11), int_to_json(m.a12)}),
         ordered_json::array({int_to_json(m.a21), int_to_json(m.a22)})});
}

ordered_json modmat_to_json(const ModMat& m) {
    return ordered_json::array({ordered_json::array({m.e[0], m.e[1]}),
                                ordered_json::array({m.e[2], m.e[3]})});
}

}  // namespace

Mat2 parse_mat2(const std::string& text) {
    const auto rows = split(text, ';');
    if (rows.size() != 2) {
        throw ParseError("expected 'a11,a12;a21,a22', got '" + text + "'");
    }
    const auto r1 = split(rows[0], ',');
    const auto r2 = split(rows[1], ',');
    if (r1.size() != 2 || r2.size() != 2) {
        throw ParseError("each row needs exactly two entries: '" + text + "'");
    }
    return {parse_int(r1[0]), parse_int(r1[1]), parse_int(r2[0]), parse_int(r2[1])};
}

std::string format_mat2(const Mat2& m) {
    std::ostringstream os;
    os << m.a11 << "," << m.a12 << ";" << m.a21 << "," << m.a22;
    return os.str();
}

std::string decision_to_json(const Decision& d, int indent) {
    ordered_json j;
    j["input"] = mat_to_json(d.input);
    j["status"] = to_string(d.status);
    j["det"] = int_to_json(d.det_value);
    j["content"] = int_to_json(d.content_value);
    if (d.witness) {
        j["witness_E"] = mat_to_json(d.witness->E);
        j["unitizer_Y"] = mat_to_json(d.witness->Y);
        j["sign"] = d.witness->sign;
    } else if (d.trivial_unitizer) {
        j["witness_E"] = mat_to_json(*d.trivial_unitizer);
        j["unitizer_Y"] = mat_to_json(adjugate(*d.trivial_unitizer));
        j["sign"] = nullptr;
    } else {
        j["witness_E"] = nullptr;
        j["unitizer_Y"] = nullptr;
        j["sign"] = nullptr;
    }
    j["reason"] = d.reason ? ordered_json(to_string(*d.reason)) : ordered_json(nullptr);
    if (d.terminal_pair) {
        j["terminal_pair"] = ordered_json::array(
            {int_to_json(d.terminal_pair->first), int_to_json(d.terminal_pair->second)});
    } else {
        j["terminal_pair"] = nullptr;
    }
    return j.dump(indent);
}

Mat2 mat2_from_json(const std::string& json_array) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_array);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON matrix: ") + e.what());
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2) {
        throw ParseError("JSON matrix must be [[a11,a12],[a21,a22]]");
    }
    return {int_from_json(j[0][0]), int_from_json(j[0][1]), int_from_json(j[1][0]),
            int_from_json(j[1][1])};
}

std::string report_to_json(const OracleReport& r, int indent) {
    ordered_json j;
    j["n"] = r.n;
    j["mode"] = r.mode;
    if (r.mode == "full") {
        ordered_json counts;
        counts["matrices"] = modmat_count(r.n);
        counts["units"] = r.counts.units;
        counts["idempotents"] = r.counts.idempotents;
        counts["clean"] = r.counts.clean;
        counts["strongly_clean"] = r.counts.strongly_clean;
        counts["left_isr1_c1"] = r.counts.left_isr1_c1;
        counts["right_isr1_c1"] = r.counts.right_isr1_c1;
        counts["left_isr1_c2"] = r.counts.left_isr1_c2;
        counts["right_isr1_c2"] = r.counts.right_isr1_c2;
        counts["sr1"] = r.counts.sr1;
        j["counts"] = counts;
    } else {
        j["convention"] = to_string(r.convention);
    }
    ordered_json claims = ordered_json::array();
    ordered_json violations = ordered_json::array();
    for (const ClaimResult& c : r.claims) {
        ordered_json cj;
        cj["id"] = c.id;
        cj["holds"] = c.holds;
        cj["informational"] = c.informational;
        cj["detail"] = c.detail;
        claims.push_back(cj);
        if (!c.holds && !c.informational) violations.push_back(c.id);
    }
    j["claims"] = claims;
    j["violations"] = violations;
    if (r.mode == "targeted") {
        ordered_json rows = ordered_json::array();
        for (const TargetedRow& row : r.rows) {
            ordered_json rj;
            rj["matrix"] = modmat_to_json(row.matrix);
            rj["clean"] = row.clean;
            rj["strongly_clean"] = row.strongly_clean;
            rj["left_isr1"] = row.left_isr1;
            rj["failing_x"] =
                row.failing_x ? modmat_to_json(*row.failing_x) : ordered_json(nullptr);
            rows.push_back(rj);
        }
        j["targets"] = rows;
    }
    return j.dump(indent);
}

std::string decision_to_text(const Decision& d) {
    std::ostringstream os;
    os << "input:     " << d.input << "\n";
    os << "status:    " << to_string(d.status) << "\n";
    os << "det:       " << d.det_value << "\n";
    os << "content:   " << d.content_value << "\n";
    if (d.witness) {
        os << "witness E: " << d.witness->E << "\n";
        os << "unitizer Y: " << d.witness->Y << "\n";
        os << "sign:      " << (d.witness->sign > 0 ? "+1" : "-1") << "\n";
    } else if (d.trivial_unitizer) {
        os << "unitizer:  " << *d.trivial_unitizer << " (trivial)\n";
    }
    if (d.reason) {
        os << "reason:    " << to_string(*d.reason) << "\n";
    }
    if (d.terminal_pair) {
        os << "terminal:  (" << d.terminal_pair->first << ", " << d.terminal_pair->second
           << ")\n";
    }
    return os.str();
}

std::string report_to_text(const OracleReport& r) {
    std::ostringstream os;
    os << "oracle over Z/" << r.n << ", mode " << r.mode << "\n";
    if (r.mode == "full") {
        os << "  matrices:        " << modmat_count(r.n) << "\n";
        os << "  units:           " << r.counts.units << "\n";
        os << "  idempotents:     " << r.counts.idempotents << "\n";
        os << "  clean:           " << r.counts.clean << "\n";
        os << "  strongly clean:  " << r.counts.strongly_clean << "\n";
        os << "  left isr1 (c1):  " << r.counts.left_isr1_c1 << "\n";
        os << "  right isr1 (c1): " << r.counts.right_isr1_c1 << "\n";
        os << "  left isr1 (c2):  " << r.counts.left_isr1_c2 << "\n";
        os << "  right isr1 (c2): " << r.counts.right_isr1_c2 << "\n";
        os << "  sr1:             " << r.counts.sr1 << "\n";
    }
    for (const ClaimResult& c : r.claims) {
        os << "  claim " << c.id << ": " << (c.holds ? "holds" : "FAILS")
           << (c.informational && !c.holds ? " (informational)" : "") << "; " << c.detail
           << "\n";
    }
    for (const TargetedRow& row : r.rows) {
        os << "  matrix [[" << row.matrix.e[0] << "," << row.matrix.e[1] << "],["
           << row.matrix.e[2] << "," << row.matrix.e[3] << "]]: clean="
           << (row.clean ? "true" : "false")
           << " strongly_clean=" << (row.strongly_clean ? "true" : "false")
           << " left_isr1=" << (row.left_isr1 ? "true" : "false");
        if (row.failing_x) {
            os << " failing_X=[[" << row.failing_x->e[0] << "," << row.failing_x->e[1] << "],["
               << row.failing_x->e[2] << "," << row.failing_x->e[3] << "]]";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace isr1
