#pragma once

// Generated by tools/gen_catalog.py from the same source as data/catalog.txt.

namespace f2::detail {

inline constexpr const char* kCatalogText = R"CATALOG(
# Groups of order 1..31, one isomorphism type per line.
# Format: order|name|degree|gen;gen;...  (cycle notation, 1-based points)
# Generated by tools/gen_catalog.py; do not edit by hand.
1|Z1|1|
2|Z2|2|(1,2)
3|Z3|3|(1,2,3)
4|Z4|4|(1,2,3,4)
4|Z2xZ2|4|(1,2);(3,4)
5|Z5|5|(1,2,3,4,5)
6|Z6|6|(1,2,3,4,5,6)
6|S3|3|(1,2,3);(1,2)
7|Z7|7|(1,2,3,4,5,6,7)
8|Z8|8|(1,2,3,4,5,6,7,8)
8|Z4xZ2|6|(1,2,3,4);(5,6)
8|Z2xZ2xZ2|6|(1,2);(3,4);(5,6)
8|D8|4|(1,2,3,4);(2,4)
8|Q8|8|(1,2,3,4)(5,6,7,8);(1,5,3,7)(2,8,4,6)
9|Z9|9|(1,2,3,4,5,6,7,8,9)
9|Z3xZ3|6|(1,2,3);(4,5,6)
10|Z10|10|(1,2,3,4,5,6,7,8,9,10)
10|D10|5|(1,2,3,4,5);(2,5)(3,4)
11|Z11|11|(1,2,3,4,5,6,7,8,9,10,11)
12|Z12|12|(1,2,3,4,5,6,7,8,9,10,11,12)
12|Z6xZ2|8|(1,2,3,4,5,6);(7,8)
12|D12|6|(1,2,3,4,5,6);(2,6)(3,5)
12|A4|4|(1,2,3);(1,2)(3,4)
12|Dic12|12|(1,2,3,4,5,6)(7,8,9,10,11,12);(1,7,4,10)(2,12,5,9)(3,11,6,8)
13|Z13|13|(1,2,3,4,5,6,7,8,9,10,11,12,13)
14|Z14|14|(1,2,3,4,5,6,7,8,9,10,11,12,13,14)
14|D14|7|(1,2,3,4,5,6,7);(2,7)(3,6)(4,5)
15|Z15|15|(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15)
16|Z16|16|(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16)
16|Z4xZ4|8|(1,2,3,4);(5,6,7,8)
16|Z4xZ2:Z2|16|(1,3,5,7)(2,4,6,8)(9,11,13,15)(10,12,14,16);(1,4,5,8)(2,3,6,7)(9,12,13,16)(10,11,14,15);(1,11,6,16)(2,12,5,15)(3,14,8,9)(4,13,7,10)
16|Z4:Z4|16|(1,2,3,4)(5,6,7,8)(9,10,11,12)(13,14,15,16);(1,5,9,13)(2,8,10,16)(3,7,11,15)(4,6,12,14)
16|Z8xZ2|10|(1,2,3,4,5,6,7,8);(9,10)
16|M16|16|(1,2,3,4,5,6,7,8)(9,10,11,12,13,14,15,16);(1,10,7,16,5,14,3,12)(2,15,8,13,6,11,4,9)
16|D16|8|(1,2,3,4,5,6,7,8);(2,8)(3,7)(4,6)
16|SD16|16|(1,2,3,4,5,6,7,8)(9,10,11,12,13,14,15,16);(1,10,5,14)(2,13,6,9)(3,16,7,12)(4,11,8,15)
16|Q16|16|(1,2,3,4,5,6,7,8)(9,10,11,12,13,14,15,16);(1,9,5,13)(2,16,6,12)(3,15,7,11)(4,14,8,10)
16|Z4xZ2xZ2|8|(1,2,3,4);(5,6);(7,8)
16|D8xZ2|6|(1,2,3,4);(2,4);(5,6)
16|Q8xZ2|10|(1,2,3,4)(5,6,7,8);(1,5,3,7)(2,8,4,6);(9,10)
16|D8oZ4|16|(1,3,5,7)(2,4,6,8)(9,11,13,15)(10,12,14,16);(1,4,5,8)(2,3,6,7)(9,12,13,16)(10,11,14,15);(1,10,5,14)(2,13,6,9)(3,12,7,16)(4,15,8,11)
16|Z2xZ2xZ2xZ2|8|(1,2);(3,4);(5,6);(7,8)
17|Z17|17|(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17)
18|Z18|18|(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18)
18|Z6xZ3|9|(1,2,3,4,5,6);(7,8,9)
18|D18|9|(1,2,3,4,5,6,7,8,9);(2,9)(3,8)(4,7)(5,6)
18|S3xZ3|6|(1,2,3);(1,2);(4,5,6)
18|Z3xZ3:Z2|9|(1,4,7)(2,5,8)(3,6,9);(1,2,3)(4,5,6)(7,8,9);(2,3)(4,7)(5,9)(6,8)
19|Z19|19|(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19)
20|Z20|20|(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20)
20|Z10xZ2|12|(1,2,3,4,5,6,7,8,9,10);(11,12)
20|D20|10|(1,2,3,4,5,6,7,8,9,10);(2,10)(3,9)(4,8)(5,7)
20|Dic20|20|(1,2,3,4,5,6,7,8,9,10)(11,12,13,14,15,16,17,18,19,20);(1,11,6,16)(2,20,7,15)(3,19,8,14)(4,18,9,13)(5,17,10,12)
20|F20|5|(1,2,3,4,5);(2,3,5,4)
21|Z21|21|(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21)
21|Z7:Z3|7|(1,2,3,4,5,6,7);(2,3,5)(4,7,6)
22|Z22|22|(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22)
22|D22|11|(1,2,3,4,5,6,7,8,9,10,11);(2,11)(3,10)(4,9)(5,8)(6,7)
23|Z23|23|(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)
24|Z3:Z8|24|(1,8,15,19,2,9,13,20,3,7,14,21)(4,11,18,22,5,12,16,23,6,10,17,24);(1,4,7,10,13,16,19,22)(2,6,8,12,14,18,20,24)(3,5,9,11,15,17,21,23)
24|Z24|24|(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24)
24|SL(2,3)|8|(1,4,7)(2,8,5);(1,6,2,3)(4,7,8,5)
24|Dic24|24|(1,2,3,4,5,6,7,8,9,10,11,12)(13,14,15,16,17,18,19,20,21,22,23,24);(1,13,7,19)(2,24,8,18)(3,23,9,17)(4,22,10,16)(5,21,11,15)(6,20,12,14)
24|Z4xS3|7|(1,2,3,4);(5,6,7);(5,6)
24|D24|12|(1,2,3,4,5,6,7,8,9,10,11,12);(2,12)(3,11)(4,10)(5,9)(6,8)
24|Dic12xZ2|14|(1,2,3,4,5,6)(7,8,9,10,11,12);(1,7,4,10)(2,12,5,9)(3,11,6,8);(13,14)
24|Z3:D8|24|(1,5,3,4,2,6)(7,20,9,19,8,21)(10,23,12,22,11,24)(13,17,15,16,14,18);(1,14,3,13,2,15)(4,17,6,16,5,18)(7,11,9,10,8,12)(19,23,21,22,20,24);(1,10,16,19)(2,12,17,21)(3,11,18,20)(4,7,13,22)(5,9,14,24)(6,8,15,23)
24|Z12xZ2|14|(1,2,3,4,5,6,7,8,9,10,11,12);(13,14)
24|D8xZ3|7|(1,2,3,4);(2,4);(5,6,7)
24|Q8xZ3|11|(1,2,3,4)(5,6,7,8);(1,5,3,7)(2,8,4,6);(9,10,11)
24|S4|4|(1,2,3,4);(1,2)
24|A4xZ2|6|(1,2,3);(1,2)(3,4);(5,6)
24|S3xZ2xZ2|7|(1,2,3);(1,2);(4,5);(6,7)
24|Z6xZ2xZ2|10|(1,2,3,4,5,6);(7,8);(9,10)
25|Z25|25|(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25)
25|Z5xZ5|10|(1,2,3,4,5);(6,7,8,9,10)
26|Z26|26|(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26)
26|D26|13|(1,2,3,4,5,6,7,8,9,10,11,12,13);(2,13)(3,12)(4,11)(5,10)(6,9)(7,8)
27|Z27|27|(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27)
27|Z9xZ3|12|(1,2,3,4,5,6,7,8,9);(10,11,12)
27|Z3xZ3xZ3|9|(1,2,3);(4,5,6);(7,8,9)
27|Heis27|9|(1,4,7)(2,5,8)(3,6,9);(1,2,3)(4,5,6)(7,8,9);(2,5,8)(3,9,6)
27|M27|27|(1,2,3,4,5,6,7,8,9)(10,11,12,13,14,15,16,17,18)(19,20,21,22,23,24,25,26,27);(1,11,27,4,14,21,7,17,24)(2,18,22,5,12,25,8,15,19)(3,16,26,6,10,20,9,13,23)
28|Z28|28|(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28)
28|Z14xZ2|16|(1,2,3,4,5,6,7,8,9,10,11,12,13,14);(15,16)
28|D28|14|(1,2,3,4,5,6,7,8,9,10,11,12,13,14);(2,14)(3,13)(4,12)(5,11)(6,10)(7,9)
28|Dic28|28|(1,2,3,4,5,6,7,8,9,10,11,12,13,14)(15,16,17,18,19,20,21,22,23,24,25,26,27,28);(1,15,8,22)(2,28,9,21)(3,27,10,20)(4,26,11,19)(5,25,12,18)(6,24,13,17)(7,23,14,16)
29|Z29|29|(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29)
30|Z30|30|(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30)
30|D30|15|(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15);(2,15)(3,14)(4,13)(5,12)(6,11)(7,10)(8,9)
30|S3xZ5|8|(1,2,3);(1,2);(4,5,6,7,8)
30|D10xZ3|8|(1,2,3,4,5);(2,5)(3,4);(6,7,8)
31|Z31|31|(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31)
)CATALOG";

}  // namespace f2::detail
