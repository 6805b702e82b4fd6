#include "chs/spec.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace chs {

using nlohmann::json;

std::size_t ChsSpec::hexagon_count() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += static_cast<std::size_t>(r.k - r.h + 1);
    return n;
}

ChsSpec ChsSpec::truncated(std::size_t count, int cap) const {
    std::vector<Row> out(rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(std::min(count, rows_.size())));
    for (auto& r : out) r.k = std::min(r.k, cap);
    // Rows that fall below their h form a suffix: min(k_s, cap) < h_s forces
    // cap < h_s <= h_t for every later t.
    while (!out.empty() && out.back().k < out.back().h) out.pop_back();
    return ChsSpec(std::move(out));
}

ChsSpec ChsSpec::prefix(std::size_t count) const {
    return ChsSpec(std::vector<Row>(rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(std::min(count, rows_.size()))));
}

int TurningChsSpec::offset() const {
    return upper_.h(upper_.size()) - lower_.h(lower_.size());
}

std::size_t TurningChsSpec::hexagon_count() const {
    const Row& turn = upper_.row(upper_.size());
    return upper_.hexagon_count() + lower_.hexagon_count() - static_cast<std::size_t>(turn.k - turn.h + 1);
}

ChsSpec validate_monotonic(std::span<const Row> rows) {
    if (rows.empty()) throw SpecError("a CHS needs at least one row");
    for (std::size_t j = 0; j < rows.size(); ++j) {
        const std::size_t idx = j + 1;
        if (rows[j].h < 1)
            throw SpecError("row " + std::to_string(idx) + ": h must be at least 1", idx);
        if (rows[j].k < rows[j].h)
            throw SpecError("row " + std::to_string(idx) + ": k < h", idx);
        if (j > 0 && rows[j].k < rows[j - 1].k)
            throw SpecError("row " + std::to_string(idx) + ": k decreases", idx);
        if (j > 0 && rows[j].h < rows[j - 1].h)
            throw SpecError("row " + std::to_string(idx) + ": h decreases", idx);
    }
    return ChsSpec(std::vector<Row>(rows.begin(), rows.end()));
}

TurningChsSpec validate_turning(std::span<const Row> upper, std::span<const Row> lower) {
    ChsSpec up, low;
    try {
        up = validate_monotonic(upper);
    } catch (const SpecError& e) {
        throw SpecError(std::string("upper half: ") + e.what(), e.row());
    }
    try {
        low = validate_monotonic(lower);
    } catch (const SpecError& e) {
        throw SpecError(std::string("lower half: ") + e.what(), e.row());
    }
    if (low.size() == 1)
        throw SpecError("lower half has one row: the system is monotonic, "
                        "fold it into a single rows spec");
    if (up.size() == 1)
        throw SpecError("upper half has one row: the system is monotonic, "
                        "fold it into a single rows spec");
    const Row& a = up.row(up.size());
    const Row& b = low.row(low.size());
    if (a.k - a.h != b.k - b.h)
        throw SpecError("turning rows differ in length: k_m-h_m=" + std::to_string(a.k - a.h) +
                        " but k'_m'-h'_m'=" + std::to_string(b.k - b.h));
    return TurningChsSpec(std::move(up), std::move(low));
}

namespace {

std::vector<Row> zip_rows(const std::vector<int>& ks, const std::vector<int>& hs) {
    if (ks.size() != hs.size()) throw SpecError("k and h sequences differ in length");
    std::vector<Row> rows;
    for (std::size_t i = 0; i < ks.size(); ++i) rows.push_back({ks[i], hs[i]});
    return rows;
}

std::string join(const ChsSpec& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s.rows()[i].k;
    os << ';';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s.rows()[i].h;
    return os.str();
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item.empty()) throw SpecError("empty entry in \"" + text + "\"");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw SpecError("not an integer: \"" + item + "\"");
        }
        if (used != item.size()) throw SpecError("not an integer: \"" + item + "\"");
        out.push_back(v);
    }
    return out;
}

std::vector<Row> parse_half(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos) throw SpecError("expected \"k1,..,km;h1,..,hm\", got \"" + text + "\"");
    return zip_rows(parse_ints(text.substr(0, semi)), parse_ints(text.substr(semi + 1)));
}

std::vector<Row> rows_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
        throw SpecError("expected an object with a \"rows\" array");
    std::vector<Row> rows;
    for (const auto& r : j["rows"]) {
        if (!r.is_object() || !r.contains("k") || !r.contains("h") || !r["k"].is_number_integer() ||
            !r["h"].is_number_integer())
            throw SpecError("each row needs integer \"k\" and \"h\"");
        rows.push_back({r["k"].get<int>(), r["h"].get<int>()});
    }
    return rows;
}

json rows_to_json(const ChsSpec& s) {
    json rows = json::array();
    for (const auto& r : s.rows()) rows.push_back({{"k", r.k}, {"h", r.h}});
    return json{{"rows", rows}};
}

}  // namespace

ChsSpec make_monotonic(std::vector<int> ks, std::vector<int> hs) {
    auto rows = zip_rows(ks, hs);
    return validate_monotonic(rows);
}

TurningChsSpec make_turning(std::vector<int> ks, std::vector<int> hs, std::vector<int> lower_ks,
                            std::vector<int> lower_hs) {
    auto up = zip_rows(ks, hs);
    auto low = zip_rows(lower_ks, lower_hs);
    return validate_turning(up, low);
}

std::size_t hexagon_count(const AnySpec& spec) {
    return std::visit([](const auto& s) { return s.hexagon_count(); }, spec);
}

std::string to_string(const ChsSpec& spec) { return "CHS(" + join(spec) + ")"; }

std::string to_string(const TurningChsSpec& spec) {
    return "CHS(" + join(spec.upper()) + "|" + join(spec.lower()) + ")";
}

std::string to_string(const AnySpec& spec) {
    return std::visit([](const auto& s) { return to_string(s); }, spec);
}

AnySpec parse_notation(const std::string& text) {
    std::string body = text;
    body.erase(std::remove_if(body.begin(), body.end(), [](unsigned char c) { return std::isspace(c); }),
               body.end());
    if (body.rfind("CHS(", 0) == 0 && body.size() > 5 && body.back() == ')') body = body.substr(4, body.size() - 5);
    auto bar = body.find('|');
    if (bar == std::string::npos) return validate_monotonic(parse_half(body));
    return validate_turning(parse_half(body.substr(0, bar)), parse_half(body.substr(bar + 1)));
}

AnySpec parse_spec_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("upper") && j.contains("lower"))
        return validate_turning(rows_from_json(j["upper"]), rows_from_json(j["lower"]));
    return validate_monotonic(rows_from_json(j));
}

std::string to_json(const AnySpec& spec) {
    if (const auto* m = std::get_if<ChsSpec>(&spec)) return rows_to_json(*m).dump();
    const auto& t = std::get<TurningChsSpec>(spec);
    return json{{"upper", rows_to_json(t.upper())}, {"lower", rows_to_json(t.lower())}}.dump();
}

AnySpec load_spec(const std::string& source) {
    auto first = source.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw SpecError("empty spec");
    if (source[first] == '{') return parse_spec_json(source);
    if (std::isdigit(static_cast<unsigned char>(source[first])) || source.compare(first, 4, "CHS(") == 0)
        return parse_notation(source);
    std::ifstream in(source);
    if (!in) throw SpecError("cannot open spec file \"" + source + "\"");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_spec_json(buf.str());
}

ChsSpec linear_chain(int k) {
    if (k < 1) throw SpecError("linear chain needs k >= 1");
    return make_monotonic({k}, {1});
}

ChsSpec parallelogram(int k, int m) {
    if (k < 0 || m < 0) throw SpecError("parallelogram needs k, m >= 0");
    if (k == 0 || m == 0) return {};
    return make_monotonic(std::vector<int>(static_cast<std::size_t>(m), k), std::vector<int>(static_cast<std::size_t>(m), 1));
}

ChsSpec truncated_parallelogram(std::span<const int> ks) {
    std::vector<int> k(ks.begin(), ks.end());
    return make_monotonic(k, std::vector<int>(k.size(), 1));
}

ChsSpec zigzag(int n) {
    if (n < 0) throw SpecError("zigzag needs n >= 0");
    if (n == 0) return {};
    if (n == 1) return make_monotonic({1}, {1});
    std::vector<int> ks, hs;
    if (n % 2 == 0) {
        // CHS(1,2,..,k,k;1,1,2,..,k) with n = 2k
        const int k = n / 2;
        for (int s = 1; s <= k; ++s) ks.push_back(s);
        ks.push_back(k);
        hs.push_back(1);
        for (int s = 1; s <= k; ++s) hs.push_back(s);
    } else {
        // CHS(2,3,..,k,k;1,2,..,k) with n = 2k-1
        const int k = (n + 1) / 2;
        for (int s = 2; s <= k; ++s) ks.push_back(s);
        ks.push_back(k);
        for (int s = 1; s <= k; ++s) hs.push_back(s);
    }
    return make_monotonic(ks, hs);
}

namespace {

void extend_rows(std::vector<Row>& rows, std::size_t target, int max_k, std::vector<std::vector<Row>>& out) {
    if (rows.size() == target) {
        out.push_back(rows);
        return;
    }
    const Row floor = rows.empty() ? Row{1, 1} : rows.back();
    for (int k = floor.k; k <= max_k; ++k)
        for (int h = floor.h; h <= k; ++h) {
            rows.push_back({k, h});
            extend_rows(rows, target, max_k, out);
            rows.pop_back();
        }
}

std::vector<std::vector<Row>> row_lists(std::size_t m, int max_k) {
    std::vector<std::vector<Row>> out;
    std::vector<Row> rows;
    extend_rows(rows, m, max_k, out);
    return out;
}

}  // namespace

std::vector<ChsSpec> all_monotonic_specs(std::size_t max_rows, int max_k) {
    std::vector<ChsSpec> out;
    for (std::size_t m = 1; m <= max_rows; ++m)
        for (const auto& rows : row_lists(m, max_k)) out.push_back(validate_monotonic(rows));
    return out;
}

std::vector<TurningChsSpec> all_turning_specs(std::size_t max_rows, int max_k) {
    std::vector<TurningChsSpec> out;
    for (std::size_t m = 2; m <= max_rows; ++m)
        for (std::size_t mp = 2; mp <= max_rows; ++mp) {
            const auto lowers = row_lists(mp, max_k);
            for (const auto& up : row_lists(m, max_k))
                for (const auto& low : lowers)
                    if (up.back().k - up.back().h == low.back().k - low.back().h)
                        out.push_back(validate_turning(up, low));
        }
    return out;
}

}  // namespace chs
