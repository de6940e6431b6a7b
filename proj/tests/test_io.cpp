#include "doctest.h"

#include "wreath/io.hpp"

using namespace wreath;

TEST_CASE("scalar expressions") {
    const Scalar q = Scalar::q(), t = Scalar::t();
    CHECK(parse_scalar("q") == q);
    CHECK(parse_scalar("3/4") == Scalar(Rational(3, 4)));
    CHECK(parse_scalar("-(q/t^2)*(1-t^2)/(1-q^2)") == -(q / t.pow(2)) * (1 - t.pow(2)) / (1 - q.pow(2)));
    CHECK(parse_scalar("2*q*t - (t+1)^2") == Scalar(2) * q * t - (t + 1) * (t + 1));
    CHECK_THROWS_AS(parse_scalar("q +"), Error);
    CHECK_THROWS_AS(parse_scalar("1/(q-q)"), Error);
}

TEST_CASE("text forms of partitions and vectors") {
    CHECK(parse_partition("[4,3,2,2]") == Partition{4, 3, 2, 2});
    CHECK(parse_partition("[]") == Partition{});
    CHECK(parse_multipartition("[[1],[],[2]]") == MultiPartition({{1}, {}, {2}}));
    CHECK(parse_ints("[1,-1,0]") == std::vector<int>{1, -1, 0});
    CHECK_THROWS_AS(parse_partition("[2,3]"), Error);
    CHECK_THROWS_AS(parse_partition("[1,"), Error);
    CHECK_THROWS_AS(parse_ints("{}"), Error);
}

TEST_CASE("json round trips") {
    const Scalar s = (Scalar::q() * Scalar::t() - Rational(1, 3)) / (1 - Scalar::q().pow(2));
    CHECK(scalar_from_json(to_json(s)) == s);
    CHECK(to_json(s)["text"].get<std::string>() == s.to_string());
    CHECK(scalar_from_json(Json("q^2-1")) == Scalar::q().pow(2) - 1);

    const MultiPartition m({{2, 1}, {}, {1}});
    CHECK(multipartition_from_json(to_json(m)) == m);
    CHECK(to_json(m).dump() == "[[2,1],[],[1]]");

    const SymFunc f = SymFunc::schur(m) * Scalar::t() + SymFunc::schur(MultiPartition({{1}, {1}, {1, 1}}));
    CHECK(symfunc_from_json(to_json(f)) == f);

    VarAssignment x;
    x.values = {{Scalar(2), Scalar::q()}, {Scalar(Rational(1, 5))}};
    const VarAssignment y = assignment_from_json(to_json(x));
    CHECK(y.values == x.values);
}
