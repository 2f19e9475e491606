#include "kepler/jordan.hpp"

#include <cmath>
#include <sstream>

#include "kepler/errors.hpp"

namespace kepler {

JordanType::JordanType(int r_, double a_, double b_) : r(r_), a(a_), b(b_) {
    if (r < 1) throw domain_error("JordanType: rank must be >= 1");
    if (!(a > 0.0)) throw domain_error("JordanType: multiplicity a must be > 0");
    if (b < 0.0) throw domain_error("JordanType: multiplicity b must be >= 0");
    if (!(dim() > 0.0)) throw domain_error("JordanType: dimension must be positive");
    if (genus() < 2.0) throw domain_error("JordanType: genus must be >= 2");
}

namespace {
bool near_int(double x) { return std::fabs(x - std::round(x)) < 1e-12; }
} // namespace

bool JordanType::classified() const {
    if (!near_int(b)) return false;
    long long bi = llround(b);
    if (r == 1) return true; // rank-one ball C^{1+b}, a immaterial
    if (!near_int(a)) return false;
    long long ai = llround(a);
    if (r == 2) {
        // spin factor IV_{a+2} covers every (2, a, 0); sym:2 = IV_3, full:2,2 = IV_4
        if (bi == 0 && ai >= 1) return true;
        if (ai == 2 && bi >= 0) return true;          // full 2 x (2+b)
        if (ai == 4 && (bi == 0 || bi == 2)) return true; // asym 4 or 5
        if (ai == 6 && bi == 4) return true;          // exceptional, dim 16
        return false;
    }
    switch (ai) {
        case 1: return bi == 0;                       // symmetric matrices
        case 2: return bi >= 0;                       // full r x (r+b)
        case 4: return bi == 0 || bi == 2;            // antisymmetric matrices
        case 8: return r == 3 && bi == 0;             // exceptional, dim 27
        default: return false;
    }
}

KeplerRank derive_invariants(const JordanType& jt, int ell) {
    if (ell < 1 || ell > jt.r)
        throw domain_error("derive_invariants: need 1 <= ell <= r");
    KeplerRank k;
    k.ell = ell;
    k.dprime_ell = ell * (1.0 + 0.5 * jt.a * (ell - 1));
    k.dsecond_ell = ell * (jt.a * (jt.r - ell) + jt.b);
    k.d_ell = k.dprime_ell + k.dsecond_ell;
    return k;
}

const std::vector<NamedType>& classified_table() {
    static const std::vector<NamedType> table = [] {
        std::vector<NamedType> t;
        for (int d = 1; d <= 16; ++d)
            t.push_back({"ball:" + std::to_string(d), JordanType(1, 2.0, d - 1.0)});
        for (int r = 2; r <= 5; ++r)
            t.push_back({"sym:" + std::to_string(r), JordanType(r, 1.0, 0.0)});
        for (int r = 2; r <= 4; ++r)
            for (int s = r; r * s <= 16; ++s)
                t.push_back({"full:" + std::to_string(r) + "," + std::to_string(s),
                             JordanType(r, 2.0, double(s - r))});
        for (int n = 4; n <= 6; ++n)
            t.push_back({"asym:" + std::to_string(n),
                         JordanType(n / 2, 4.0, 2.0 * (n % 2))});
        for (int d = 3; d <= 16; ++d)
            t.push_back({"spin:" + std::to_string(d), JordanType(2, d - 2.0, 0.0)});
        t.push_back({"exc:16", JordanType(2, 6.0, 4.0)});
        t.push_back({"exc:27", JordanType(3, 8.0, 0.0)});
        return t;
    }();
    return table;
}

std::optional<JordanType> parse_type_name(const std::string& name) {
    auto colon = name.find(':');
    if (colon == std::string::npos) return std::nullopt;
    const std::string family = name.substr(0, colon);
    const std::string args = name.substr(colon + 1);
    auto to_int = [](const std::string& s, int& out) {
        try {
            size_t pos = 0;
            out = std::stoi(s, &pos);
            return pos == s.size() && out > 0;
        } catch (...) { return false; }
    };
    int x = 0, y = 0;
    if (family == "sym") {
        if (!to_int(args, x) || x < 1) return std::nullopt;
        return JordanType(x, 1.0, 0.0);
    }
    if (family == "full") {
        auto comma = args.find(',');
        if (comma == std::string::npos) return std::nullopt;
        if (!to_int(args.substr(0, comma), x) || !to_int(args.substr(comma + 1), y))
            return std::nullopt;
        if (x < 1 || y < x) return std::nullopt;
        return JordanType(x, 2.0, double(y - x));
    }
    if (family == "asym") {
        if (!to_int(args, x) || x < 3) return std::nullopt;
        return JordanType(x / 2, 4.0, 2.0 * (x % 2));
    }
    if (family == "spin") {
        if (!to_int(args, x) || x < 3) return std::nullopt;
        return JordanType(2, x - 2.0, 0.0);
    }
    if (family == "ball") {
        if (!to_int(args, x) || x < 1) return std::nullopt;
        return JordanType(1, 2.0, double(x - 1));
    }
    if (family == "exc") {
        if (args == "16") return JordanType(2, 6.0, 4.0);
        if (args == "27") return JordanType(3, 8.0, 0.0);
        return std::nullopt;
    }
    return std::nullopt;
}

std::string classified_table_json() {
    std::ostringstream os;
    os << "[\n";
    const auto& t = classified_table();
    for (size_t i = 0; i < t.size(); ++i) {
        os << "  {\"name\": \"" << t[i].name << "\", \"r\": " << t[i].jt.r
           << ", \"a\": " << t[i].jt.a << ", \"b\": " << t[i].jt.b << "}";
        if (i + 1 < t.size()) os << ",";
        os << "\n";
    }
    os << "]\n";
    return os.str();
}

} // namespace kepler
