/*
   Copyright 2026 The nodal-ci Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <doctest.h>

#include <map>

#include "nodal/field.hpp"

using nodal::FieldError;
using nodal::FiniteField;
using nodal::RationalField;

TEST_CASE("prime field arithmetic agrees with integer arithmetic mod p") {
    const auto f = FiniteField::prime(101);
    for (long long a = 0; a < 101; a += 7)
        for (long long b = 0; b < 101; b += 5) {
            CHECK(f.add(a, b) == (a + b) % 101);
            CHECK(f.sub(a, b) == ((a - b) % 101 + 101) % 101);
            CHECK(f.mul(a, b) == (a * b) % 101);
        }
    for (FiniteField::Elem a = 1; a < 101; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.from_integer(-1) == 100);
    const mpz_class big("-1000000000000000000000");
    const mpz_class r = ((big % 101) + 101) % 101;
    CHECK(f.from_integer(big) == r.get_ui());
}

TEST_CASE("rational reduction rejects denominators divisible by p") {
    const auto f = FiniteField::prime(7);
    CHECK(f.from_rational(mpq_class(1, 2)) == 4);
    CHECK(f.from_rational(mpq_class(-3, 4)) == f.div(f.from_integer(-3), 4));
    CHECK_THROWS_AS(f.from_rational(mpq_class(1, 14)), FieldError);
    CHECK_THROWS_AS(f.inv(0), FieldError);
}

TEST_CASE("field specs") {
    CHECK(FiniteField::parse("fp:5").order() == 5);
    CHECK(FiniteField::parse("fp:5^2").name() == "fp:5^2");
    CHECK(FiniteField::parse("fp:3^4").order() == 81);
    CHECK(FiniteField::parse("fp:7^1").name() == "fp:7");
    CHECK_THROWS_AS(FiniteField::parse("fp:4"), FieldError);
    CHECK_THROWS_AS(FiniteField::parse("fp:2"), FieldError);
    CHECK_THROWS_AS(FiniteField::parse("gf:5"), FieldError);
    CHECK_THROWS_AS(FiniteField::parse("fp:5^x"), FieldError);
    CHECK_THROWS_AS(FiniteField::parse("fp:"), FieldError);
}

TEST_CASE("F_25 satisfies the field axioms exhaustively") {
    const auto f = FiniteField::extension(5, 2);
    REQUIRE(f.order() == 25);
    const auto m = f.modulus();
    REQUIRE(m.size() == 3);
    CHECK(m.back() == 1);
    for (FiniteField::Elem a = 0; a < 25; ++a) {
        CHECK(f.add(a, f.neg(a)) == 0);
        CHECK(f.pow(a, 25) == a);
        if (a) CHECK(f.mul(a, f.inv(a)) == 1);
        for (FiniteField::Elem b = 0; b < 25; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            for (FiniteField::Elem c = 0; c < 25; c += 6) {
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                CHECK(f.add(a, f.add(b, c)) == f.add(f.add(a, b), c));
            }
        }
    }
}

TEST_CASE("digits of extension elements add coefficientwise") {
    const auto f = FiniteField::extension(3, 3);
    for (FiniteField::Elem a = 0; a < 27; ++a)
        for (FiniteField::Elem b = 0; b < 27; ++b) {
            const auto da = f.digits(a), db = f.digits(b), ds = f.digits(f.add(a, b));
            for (int i = 0; i < 3; ++i) CHECK(ds[i] == (da[i] + db[i]) % 3);
        }
    CHECK(f.from_digits({1, 2, 0}) == 7);
    CHECK_THROWS_AS(f.from_digits({3}), FieldError);
}

TEST_CASE("minimal degrees count the subfields") {
    const auto f = FiniteField::extension(5, 4);
    std::map<int, int> counts;
    for (FiniteField::Elem a = 0; a < f.order(); ++a) ++counts[f.minimal_degree(a)];
    CHECK(counts[1] == 5);
    CHECK(counts[2] == 25 - 5);
    CHECK(counts[4] == 625 - 25);
}

TEST_CASE("prime subfield embeds as the digit-0 elements") {
    const auto f = FiniteField::extension(7, 2);
    for (long long a = 0; a < 7; ++a)
        for (long long b = 0; b < 7; ++b) CHECK(f.mul(a, b) == (a * b) % 7);
    CHECK(f.from_integer(-1) == 6);
}

TEST_CASE("rational field") {
    const RationalField q;
    CHECK(q.div(q.from_integer(3), q.from_integer(6)) == mpq_class(1, 2));
    CHECK(q.pow(mpq_class(2, 3), 3) == mpq_class(8, 27));
    CHECK_THROWS_AS(q.inv(0), FieldError);
    CHECK(q.name() == "q");
}
