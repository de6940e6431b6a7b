#include "wreath/io.hpp"

#include <cctype>

namespace wreath {

namespace {

Json parse_json_text(const std::string& s, const char* what) {
    try {
        return Json::parse(s);
    } catch (const Json::parse_error&) {
        throw Error(std::string("cannot parse ") + what + ": " + s);
    }
}

class ScalarParser {
public:
    explicit ScalarParser(const std::string& s) : s_(s) {}

    Scalar parse() {
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) fail();
        return v;
    }

private:
    Scalar expr() {
        Scalar v = term();
        while (true) {
            skip();
            if (eat('+')) {
                v += term();
            } else if (eat('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    Scalar term() {
        Scalar v = unary();
        while (true) {
            skip();
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                Scalar d = unary();
                if (d.is_zero()) throw Error("parse_scalar: division by zero in " + s_);
                v /= d;
            } else {
                return v;
            }
        }
    }

    Scalar unary() {
        skip();
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        skip();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            long e = integer();
            return base.pow(static_cast<int>(neg ? -e : e));
        }
        return base;
    }

    Scalar atom() {
        skip();
        if (eat('(')) {
            Scalar v = expr();
            skip();
            if (!eat(')')) fail();
            return v;
        }
        if (eat('q')) return Scalar::q();
        if (eat('t')) return Scalar::t();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return Scalar(Rational(integer()));
        fail();
    }

    long integer() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_ || pos_ - start > 15) fail();
        return std::stol(s_.substr(start, pos_ - start));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail() { throw Error("parse_scalar: cannot parse '" + s_ + "'"); }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Json to_json(const BiPoly& p) {
    Json a = Json::array();
    for (const auto& term : p.terms()) a.push_back(Json::array({term.q, term.t, to_string(term.c)}));
    return a;
}

Json to_json(const Scalar& s) {
    return Json{{"num", to_json(s.num())}, {"den", to_json(s.den())}, {"text", s.to_string()}};
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const MultiPartition& m) {
    Json a = Json::array();
    for (int i = 0; i < m.r(); ++i) a.push_back(to_json(m[i]));
    return a;
}

Json to_json(const std::vector<int>& v) { return Json(v); }

Json to_json(const SymFunc& f) {
    Json terms = Json::array();
    for (const auto& [idx, c] : f.terms()) terms.push_back(Json{{"index", to_json(idx)}, {"coeff", to_json(c)}});
    return Json{{"basis", f.basis() == Basis::schur ? "schur" : "powersum"}, {"r", f.r()}, {"terms", terms}};
}

Json to_json(const VarAssignment& x) {
    Json cols = Json::array();
    for (const auto& col : x.values) {
        Json c = Json::array();
        for (const auto& v : col) c.push_back(v.to_string());
        cols.push_back(c);
    }
    return Json{{"r", x.r()}, {"x", cols}};
}

BiPoly bipoly_from_json(const Json& j) {
    std::vector<BiPoly::Term> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw Error("BiPoly JSON: terms are [q_exp, t_exp, \"c\"]");
        terms.push_back({t[0].get<int>(), t[1].get<int>(), parse_rational(t[2].get<std::string>())});
    }
    return BiPoly::from_terms(std::move(terms));
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    return Scalar(bipoly_from_json(j.at("num")), bipoly_from_json(j.at("den")));
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw Error("partition JSON must be an array");
    return Partition(j.get<std::vector<int>>());
}

MultiPartition multipartition_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw Error("multipartition JSON must be a nonempty array of partitions");
    std::vector<Partition> parts;
    for (const auto& p : j) parts.push_back(partition_from_json(p));
    return MultiPartition(std::move(parts));
}

std::vector<int> ints_from_json(const Json& j) {
    if (!j.is_array()) throw Error("integer vector JSON must be an array");
    return j.get<std::vector<int>>();
}

SymFunc symfunc_from_json(const Json& j) {
    const std::string b = j.at("basis").get<std::string>();
    if (b != "schur" && b != "powersum") throw Error("SymFunc JSON: unknown basis " + b);
    SymFunc f(j.at("r").get<int>(), b == "schur" ? Basis::schur : Basis::powersum);
    for (const auto& term : j.at("terms")) {
        f.add_term(multipartition_from_json(term.at("index")), scalar_from_json(term.at("coeff")));
    }
    return f;
}

VarAssignment assignment_from_json(const Json& j) {
    VarAssignment x;
    for (const auto& col : j.at("x")) {
        std::vector<Scalar> v;
        for (const auto& e : col) v.push_back(scalar_from_json(e));
        x.values.push_back(std::move(v));
    }
    if (j.contains("r") && j.at("r").get<int>() != x.r()) throw Error("assignment JSON: r does not match the value lists");
    return x;
}

Partition parse_partition(const std::string& s) {
    try {
        return partition_from_json(parse_json_text(s, "partition"));
    } catch (const Json::exception&) {
        throw Error("cannot parse partition: " + s);
    }
}

MultiPartition parse_multipartition(const std::string& s) {
    try {
        return multipartition_from_json(parse_json_text(s, "multipartition"));
    } catch (const Json::exception&) {
        throw Error("cannot parse multipartition: " + s);
    }
}

std::vector<int> parse_ints(const std::string& s) {
    try {
        return ints_from_json(parse_json_text(s, "integer vector"));
    } catch (const Json::exception&) {
        throw Error("cannot parse integer vector: " + s);
    }
}

Scalar parse_scalar(const std::string& s) { return ScalarParser(s).parse(); }

}  // namespace wreath
