#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ifix/lieorders.hpp"

using namespace ifix;

TEST_CASE("classical orders at small q") {
  CHECK(group_order("SL2").value_int(8) == 504);
  CHECK(group_order("SL2").value_int(9) == 720);
  CHECK(group_order("SL3").value_int(2) == 168);
  CHECK(group_order("SU3").value_int(3) == 6048);
  CHECK(group_order("SU4").value_int(2) == 25920);
  CHECK(group_order("Sp6").value_int(2) == 1451520);
  CHECK(group_order("SO8+").value_int(2) == 174182400);
  CHECK(group_order("SO8-").value_int(2) == 197406720);
  CHECK(group_order("GL3").value_int(4) == 181440);
  // B and C series share one order polynomial
  CHECK(group_order("SO9").expand() == group_order("Sp8").expand());
  CHECK(group_order("SO5").expand() == group_order("Sp4").expand());
}

TEST_CASE("exceptional orders at small q") {
  CHECK(group_order("G2").value_int(2) == 12096);
  CHECK(group_order("G2").value_int(3) == 4245696);
  CHECK(group_order("3D4").value_int(2) == 211341312);
  CHECK(group_order("2B2").value_int(8) == 29120);
  CHECK(group_order("2G2").value_int(27) == Int("10073444472"));
  CHECK(group_order("2F4").value_int(2) == 35942400);
  CHECK(group_order("F4").value_int(2) == Int("3311126603366400"));
}

TEST_CASE("order degrees match dimensions") {
  struct Row {
    const char* name;
    int deg;
  };
  for (auto [name, deg] : std::vector<Row>{{"G2", 14},
                                           {"F4", 52},
                                           {"E6", 78},
                                           {"2E6", 78},
                                           {"E7", 133},
                                           {"E8", 248},
                                           {"3D4", 28},
                                           {"2B2", 5},
                                           {"2G2", 7},
                                           {"2F4", 26},
                                           {"SL8", 63},
                                           {"SU8", 63},
                                           {"Sp12", 78},
                                           {"SO13", 78},
                                           {"SO12+", 66}}) {
    CAPTURE(name);
    CHECK(group_order(name).degree() == deg);
  }
}

TEST_CASE("sign aliases") {
  CHECK(group_order("SL6-").expand() == group_order("SU6").expand());
  CHECK(group_order("SL6+").expand() == group_order("SL6").expand());
  CHECK(group_order("E6-").expand() == group_order("2E6").expand());
  CHECK(group_order("Omega12+").expand() == group_order("SO12+").expand());
  CHECK(has_group_order("SL9"));
  CHECK(!has_group_order("SL10"));
  CHECK(!has_group_order("XYZ"));
}

TEST_CASE("centre orders") {
  CHECK(center_order("SL4", 5) == 4);
  CHECK(center_order("SL3", 4) == 3);
  CHECK(center_order("SL4", 4) == 1);
  CHECK(center_order("SU4", 3) == 4);
  CHECK(center_order("Sp6", 7) == 2);
  CHECK(center_order("Sp6", 2) == 1);
  CHECK(center_order("E7", 5) == 2);
  CHECK(center_order("E6", 4) == 3);
  CHECK(center_order("2E6", 2) == 3);
  CHECK(center_order("SO8+", 3) == 4);
  CHECK(center_order("G2", 5) == 1);
}

TEST_CASE("parse order expressions") {
  FactoredOrder f = parse_order_expr("q^57*E7");
  CHECK(f.degree() == 190);
  CHECK(f.qpow == 120);

  FactoredOrder g = parse_order_expr("2*(q-1)*E6-");
  CHECK(g.value_int(3) == 2 * 2 * group_order("2E6").value_int(3));

  FactoredOrder h = parse_order_expr("SL2*Sp6");
  CHECK(h.value_int(3) ==
        group_order("SL2").value_int(3) * group_order("Sp6").value_int(3));

  FactoredOrder c = parse_order_expr("SL2(q^3)");
  CHECK(c.degree() == 9);
  CHECK(c.value_int(2) == 504);

  FactoredOrder s = parse_order_expr("(q^2+q+1)^2*SL2(3)");
  CHECK(s.value_int(2) == 49 * 24);

  CHECK_THROWS(parse_order_expr("PSL2"));
  CHECK_THROWS(parse_order_expr("NoSuchGroup"));
  CHECK_THROWS(parse_order_expr("(q-r2q+1)"));
}

TEST_CASE("numeric expressions") {
  CHECK(eval_group_expr("PSL2(9)", 2) == 360);
  CHECK(eval_group_expr("L2(8)", 8) == 504);
  CHECK(eval_group_expr("U3(3)", 3) == 6048);
  CHECK(eval_group_expr("Sz(8)", 8) == 29120);
  CHECK(eval_group_expr("PSL2", 9) == 360);
  CHECK(eval_group_expr("PSL3(q^3)", 2) == 16482816);
  CHECK(eval_group_expr("3^3*8", 5) == 216);
  CHECK(eval_group_expr("(q^2+q+1)^2*SL2(3)", 2) == 1176);
  CHECK(eval_group_expr("(q-r2q+1):4", 8) == 20);
  CHECK(eval_group_expr("(q-r2q+1):4", 32) == 100);
  CHECK(eval_group_expr("(q+r3q+1):6", 27) == 222);
  CHECK(eval_group_expr("GL3/(q-1)", 4) == eval_group_expr("PGL3", 4));
  CHECK(eval_group_expr("PGU3", 3) == eval_group_expr("GU3/(q+1)", 3));
  CHECK(eval_group_expr("POmega8+", 3) == Int("4952179814400"));
  CHECK_THROWS(eval_group_expr("SL2/7", 4));
  CHECK_THROWS(eval_group_expr("(q-r2q+1)", 27));
}

TEST_CASE("involution class sizes from centralizer records") {
  auto mk = [](const char* fam, char parity, const char* label,
               const char* cent, unsigned mod = 0, unsigned res = 0) {
    InvolutionClassRecord r;
    r.family = fam;
    r.parity = parity;
    r.label = label;
    r.centralizer = parse_order_expr(cent);
    r.q_mod = mod;
    r.q_res = res;
    return r;
  };

  // the two odd F4 classes; the larger one matches the closed product
  QPoly f4_t1 = class_size(mk("F4", 'o', "t1", "SL2*Sp6"));
  CHECK(f4_t1 == parse_order_expr("q^14*(q^4+q^2+1)*(q^4+1)*(q^6+1)").expand());
  QPoly f4_t4 = class_size(mk("F4", 'o', "t4", "SO9"));
  CHECK(f4_t4.degree() == 16);
  CHECK(f4_t1.eval(Int(3)) > f4_t4.eval(Int(3)));

  // the largest even F4 class
  QPoly f4_a1a1 = class_size(mk("F4", 'e', "A1~A1", "q^18*SL2^2"));
  CHECK(f4_a1a1 ==
        parse_order_expr("q^4*(q^4+q^2+1)*(q^8-1)*(q^12-1)").expand());

  // unique odd classes coincide with the closed-form involution counts
  CHECK(class_size(mk("3D4", 'o', "t2", "SL2*SL2(q^3)")) ==
        i2_closed_form("3D4:odd"));
  CHECK(class_size(mk("G2", 'o', "t1", "SL2^2")) == i2_closed_form("G2:odd"));
  CHECK(class_size(mk("2G2", 'o', "t1", "SL2")) == i2_closed_form("2G2"));
  CHECK(class_size(mk("2B2", 'e', "(A1~)2", "q^2")) == i2_closed_form("2B2"));

  // scalar-2 centralizers give half-integral polynomials with integer values
  QPoly e7_t4 = class_size(mk("E7", 'o', "t4", "2*SL8", 4, 1));
  CHECK(!e7_t4.is_integral());
  CHECK(e7_t4.eval(Int(5)).get_den() == 1);
  CHECK(e7_t4.eval(Int(13)).get_den() == 1);

  // non-divisor centralizer rejected
  CHECK_THROWS(class_size(mk("G2", 'o', "bad", "(q^2+q+3)")));
}

TEST_CASE("long root class sizes in even characteristic") {
  CHECK(long_root_class_size('S', 4, 0, Int(2)) == 15);
  CHECK(long_root_class_size('L', 2, 1, Int(4)) == 15);
  CHECK(long_root_class_size('O', 8, 1, Int(2)) == 1575);
  CHECK(long_root_class_size('L', 4, -1, Int(2)) == 45);
  CHECK(long_root_class_size('L', 6, 1, Int(2)) ==
        (Int(31) * 63) / 1);  // (q^5-1)(q^6-1)/(q-1) at 2
  CHECK_THROWS(long_root_class_size('S', 4, 0, Int(3)));
  CHECK_THROWS(long_root_class_size('O', 6, 1, Int(2)));
  CHECK_THROWS(long_root_class_size('X', 4, 1, Int(2)));
  CHECK_THROWS(long_root_class_size('O', 8, 0, Int(2)));
}

TEST_CASE("closed form involution counts") {
  CHECK(i2_closed_form("2B2").eval_int(Int(8)) == 455);
  CHECK(i2_closed_form("2G2").eval_int(Int(3)) == 63);
  CHECK(i2_closed_form("2G2").eval_int(Int(27)) == 512487);
  CHECK(i2_closed_form("G2:odd").eval_int(Int(3)) == 7371);
  CHECK(i2_closed_form("3D4:odd").eval_int(Int(3)) == Int("43584723"));
  CHECK(i2_closed_form("PGL3+:even").eval_int(Int(2)) == 21);
  CHECK(i2_closed_form("PGL3-:even").eval_int(Int(2)) == 9);
  CHECK(i2_closed_form("PGL3+:odd").eval_int(Int(3)) == 117);
  CHECK(i2_closed_form("PGL3-:odd").eval_int(Int(3)) == 63);
  CHECK_THROWS(i2_closed_form("F4"));
}

TEST_CASE("central product centralizer bound") {
  // q^3(q-e) and 2(q^2+eq+1) at q=3, e=+1 combine to 2q^3(q^3-1)
  CHECK(central_product_centralizer_bound(Int(1), {Int(54), Int(26)}) == 1404);
  CHECK(central_product_centralizer_bound(Int(3), {Int(10)}) == 4);
  CHECK(central_product_centralizer_bound(Int(3), {Int(9)}) == 3);
  CHECK(central_product_centralizer_bound(Int(1), {Int(7)}) == 7);
  CHECK_THROWS(central_product_centralizer_bound(Int(0), {Int(7)}));
  CHECK_THROWS(central_product_centralizer_bound(Int(1), {Int(0)}));
}
