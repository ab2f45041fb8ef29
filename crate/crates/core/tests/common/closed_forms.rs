//! Published closed forms for the first deformation of the hump and bilinear
//! surfaces, in Mathematica-style notation with implicit multiplication.

pub const HUMP_E: &str = "\
    1 + 256 (1 - 2 u)^2 (-1 + v)^2 v^2 (1 + 2 t ((-1 + v) v + 1536 u^3 (-1 + v) v (3 + 8 (-1 + \
    v) v) - 768 u^4 (-1 + v) v (3 + 8 (-1 + v) v) + 2 u (-1 + 256 (-1 + v) v (1 + 3 (-1 + v) v)) \
    + 2 u^2 (1 - 128 (-1 + v) v (11 + 30 (-1 + v) v))))^2";

pub const HUMP_F: &str = "\
    256 (-1+u) u (-1+2 u) (-1+v) v (-1+2 v) (-1+2 t (-2 (-1+u) u+v-256 (-1+u) u (-2+3 u) (-1+3 \
    u) v+(-1+256 (-1+u) u (8+33 (-1+u) u)) v^2-3072 (1-2 u)^2 (-1+u) u v^3 + 1536 (1-2 u)^2 \
    (-1+u) u v^4)) (-1+2 t (-2 (-1+v) v-3072 u^3 (1-2 v)^2 (-1+v) v + 1536 u^4 (1-2 v)^2 (-1+v) \
    v+u (1-256 (-1+v) v (-2+3 v) (-1+3 v))+u^2 (-1+256 (-1+v) v (8+33 (-1+v) v))))";

pub const HUMP_G: &str = "\
    1+256 (-1+u)^2 u^2 (1-2 v)^2 (1+2 t ((-1+u) u-2 v+512 (-1+u) u (1+3 (-1+u) u) v +2 (1-128 \
    (-1+u) u (11+30 (-1+u) u)) v^2 +1536 (-1+u) u (3+8 (-1+u) u) v^3-768 (-1+u) u (3+8 (-1+u) u) \
    v^4))^2";

pub const HUMP_E2: &str = "\
    -32 (-1+v) v (-1+2 t (-1+6 u-6 u^2-15 (17+256 (-1+u) u (1+3 (-1+u) u)) v +3 (341+256 (-1+u) \
    u (19+55 (-1+u) u)) v^2-1536 (1-2 u)^2 (1+10 (-1+u) u) v^3 +768 (1-2 u)^2 (1+10 (-1+u) u) \
    v^4))";

pub const HUMP_F2: &str = "\
    -16 (-1+2 u) (-1+2 v) (-1+4 t (-(-1+u) u+v-256 (-1+u) u (-2+3 u) (-1+3 u) v + (-1+256 (-1+u) \
    u (11+45 (-1+u) u)) v^2-4608 (1-2 u)^2 (-1+u) u v^3 +2304 (1-2 u)^2 (-1+u) u v^4))";

pub const HUMP_G2: &str = "\
    -32 (-1+u) u (-1+2 t (-1-6 (-1+v) v-1536 u^3 (1-2 v)^2 (1+10 (-1+v) v) + 768 u^4 (1-2 v)^2 \
    (1+10 (-1+v) v)-15 u (17+256 (-1+v) v (1+3 (-1+v) v)) +3 u^2 (341+256 (-1+v) v (19+55 (-1+v) \
    v))))";

pub const HUMP_H1: &str = "\
    -32 (-1+v) v (-1+2 t (-1+6 u-6 u^2-15 (17+256 (-1+u) u (1+3 (-1+u) u)) v+3 (341 + 256 (-1+u) \
    u (19+55 (-1+u) u)) v^2-1536 (1-2 u)^2 (1+10 (-1+u) u) v^3+768 (1-2 u)^2 (1+10 (-1+u) u) \
    v^4)) (1+256 (-1+u)^2 u^2 (1-2 v)^2 (1+2 t ((-1+u) u-2 v+512 (-1+u) u (1+3 (-1+u) u) v +2 \
    (1-128 (-1+u) u (11+30 (-1+u) u)) v^2+1536 (-1+u) u (3+8 (-1+u) u) v^3-768 (-1+u) u (3+8 \
    (-1+u) u) v^4))^2)+8192 (1-2 u)^2 (-1+u) u (1-2 v)^2 (-1+v) v (-1+2 t (-2 (-1+u) u+v -256 \
    (-1+u) u (-2+3 u) (-1+3 u) v+(-1+256 (-1+u) u (8+33 (-1+u) u)) v^2-3072 (1-2 u)^2 (-1+u) u \
    v^3+1536 (1-2 u)^2 (-1+u) u v^4)) (-1+4 t (-(-1+u) u+v-256 (-1+u) u (-2+3 u) (-1+3 u) v \
    +(-1+256 (-1+u) u (11+45 (-1+u) u)) v^2-4608 (1-2 u)^2 (-1+u) u v^3+2304 (1-2 u)^2 (-1+u) u \
    v^4)) (-1+2 t (-2 (-1+v) v-3072 u^3 (1-2 v)^2 (-1+v) v+1536 u^4 (1-2 v)^2 (-1+v) v+u (1-256 \
    (-1+v) v (-2+3 v) (-1+3 v))+u^2 (-1+256 (-1+v) v (8+33 (-1+v) v))))-32 (-1+u) u (-1+2 t \
    (-1-6 (-1+v) v-1536 u^3 (1-2 v)^2 (1+10 (-1+v) v)+768 u^4 (1-2 v)^2 (1+10 (-1+v) v)-15 u (17 \
    +256 (-1+v) v (1+3 (-1+v) v))+3 u^2 (341+256 (-1+v) v (19+55 (-1+v) v)))) (1+256 (1-2 u)^2 \
    (-1+v)^2 v^2 (1+2 t ((-1+v) v+1536 u^3 (-1+v) v (3+8 (-1+v) v)-768 u^4 (-1+v) v (3+8 (-1+v) \
    v) +2 u (-1+256 (-1+v) v (1+3 (-1+v) v))+2 u^2 (1-128 (-1+v) v (11+30 (-1+v) v))))^2)";

pub const HUMP_P0: &str = "\
    -32 (-(-1+u) u+v-256 (-1+u) u (1+3 (-1+u) u) v+(-1+256 (-1+u) u (4+11 (-1+u) u)) v^2 -512 \
    (-1+u) u (3+8 (-1+u) u) v^3+256 (-1+u) u (3+8 (-1+u) u) v^4)";

pub const HUMP_P1: &str = "\
    64 (-786432 u^7 (-1+v)^2 v^2 (21+4 (-1+v) v (31+48 (-1+v) v))+196608 u^8 (-1+v)^2 v^2 (21+4 \
    (-1+v) v (31+48 (-1+v) v))-(-1+v) v (-1+3 (-1+v) v (85+256 (-1+v) v)) + u (-1+4 (-1+v) v \
    (-3+64 (-1+v) v (19+54 (-1+v) v)))-768 u^5 (-3+2 (-1+v) v (-27+2 (-1+v) v (7835+256 (-1+v) v \
    (184+285 (-1+v) v))))+256 u^6 (-3+2 (-1+v) v (-27+2 (-1+v) v (26651+768 (-1+v) v (206+319 \
    (-1+v) v))))+2 u^2 (-127+2 (-1+v) v (-1213+64 (-1+v) v (1405+2 (-1+v) v (4891+8064 (-1+v) \
    v))))-2 u^3 (-639+512 (-1+v) v (-23+(-1+v) v (3171+2 (-1+v) v (10139+15936 (-1+v) v))))+u^4 \
    (-2559+256 (-1+v) v (-181+4 (-1+v) v (11765+(-1+v) v (72347+112320 (-1+v) v)))))";

pub const HUMP_P2: &str = "\
    -32768 (-1+u) u (-1+v) v ((-1+v)^2 v^2 (6+19 (-1+v) v)-11796480 u^9 (-1+v)^2 v^2 (14+(-1+v) \
    v (119+32 (-1+v) v (11+12 (-1+v) v)))+2359296 u^(10) (-1+v)^2 v^2 (14+(-1+v) v (119+32 \
    (-1+v) v (11+12 (-1+v) v)))+u (-1+v) v (-9+2 (-1+v) v (2029+2 (-1+v) v (7093+12672 (-1+v) \
    v)))-6144 u^7 (-1+v) v (-33+16 (-1+v) v (4453+6 (-1+v) v (6383+128 (-1+v) v (149+164 (-1+v) \
    v))))+1536 u^8 (-1+v) v (-33+16 (-1+v) v (14533+6 (-1+v) v (20663+128 (-1+v) v (479+524 \
    (-1+v) v))))-u^3 (31+8 (-1+v) v (-4561+8 (-1+v) v (143089+32 (-1+v) v (43313+48 (-1+v) v \
    (2981+3528 (-1+v) v)))))+u^2 (6+(-1+v) v (-4049+2 (-1+v) v (367651+2 (-1+v) v (1912651+384 \
    (-1+v) v (17455+21504 (-1+v) v)))))-3 u^5 (19+4 (-1+v) v (-23989+256 (-1+v) v (53227+12 \
    (-1+v) v (39553+4 (-1+v) v (30469 + 34384 (-1+v) v)))))+u^6 (19+4 (-1+v) v (-83125+256 \
    (-1+v) v (326171+12 (-1+v) v (237065+12 (-1+v) v (59735+66416 (-1+v) v)))))+u^4 (63+2 (-1+v) \
    v (-69931+16 (-1+v) v (1582433+32 (-1+v) v (456095+24 (-1+v) v (60259+69408 (-1+v) v))))))";

pub const HUMP_P3: &str = "\
    65536 (-1+u) u (-1+v) v (-(-1+v)^3 v^3 (3+10 (-1+v) v)-25367150592 u^(13) (1-2 v)^2 (-1+v)^3 \
    v^3 (3+8 (-1+v) v) (2+(-1+v) v (9+16 (-1+v) v))+3623878656 u^(14) (1-2 v)^2 (-1+v)^3 v^3 \
    (3+8 (-1+v) v) (2+(-1+v) v (9+16 (-1+v) v))-u (-1+v)^2 v^2 (-6+(-1+v) v (2793 +8 (-1+v) v \
    (2525+4704 (-1+v) v)))+2359296 u^(12) (-1+v)^2 v^2 (-21+(-1+v) v (203161 +64 (-1+v) v \
    (35519+(-1+v) v (155053+768 (-1+v) v (421+355 (-1+v) v)))))-14155776 u^(11) (-1+v)^2 v^2 \
    (-21+(-1+v) v (63385+64 (-1+v) v (11131+(-1+v) v (48765+128 (-1+v) v (797+674 (-1+v) \
    v)))))-u^2 (-1+v) v (6+(-1+v) v (-5090+(-1+v) v (999971+8 (-1+v) v (1355491+96 (-1+v) v \
    (51427+64512 (-1+v) v)))))-768 u^9 (-1+v) v (245+4 (-1+v) v (-386905+8 (-1+v) v \
    (38922251+256 (-1+v) v (1740737+24 (-1+v) v (322558+(-1+v) v (683777 +584928 (-1+v) \
    v))))))+768 u^(10) (-1+v) v (49+4 (-1+v) v (-254789+8 (-1+v) v (45198319+256 (-1+v) v \
    (1999045+24 (-1+v) v (367093+(-1+v) v (772045+655968 (-1+v) v))))))+u^3 (3-(-1+v) v (2781+4 \
    (-1+v) v (-248143+2 (-1+v) v (14160189+128 (-1+v) v (1627565+6 (-1+v) v (1477367 +384 (-1+v) \
    v (9583+9216 (-1+v) v)))))))-8 u^7 (-5+4 (-1+v) v (14285+128 (-1+v) v (-179703+4 (-1+v) v \
    (15643685+32 (-1+v) v (5816093+48 (-1+v) v (556153+36 (-1+v) v (33637+29392 (-1+v) \
    v)))))))+u^4 (-19+(-1+v) v (28573+4 (-1+v) v (-3466831+(-1+v) v (508303293+128 (-1+v) v \
    (53765501+18 (-1+v) v (15240289+512 (-1+v) v (70459+65280 (-1+v) v)))))))+2 u^8 (-5+4 (-1+v) \
    v (49565+64 (-1+v) v (-2244879+64 (-1+v) v (17885581+4 (-1+v) v (52018853+48 (-1+v) v \
    (4883029+72 (-1+v) v (145395+125528 (-1+v) v)))))))+u^5 (49-(-1+v) v (126811+4 (-1+v) v \
    (-21499593+256 (-1+v) v (15874307+8 (-1+v) v (25388918+3 (-1+v) v (41251309+288 (-1+v) v \
    (327257+295936 (-1+v) v)))))))+u^6 (-63+(-1+v) v (312153+4 (-1+v) v (-78350147+256 (-1+v) v \
    (76888369+8 (-1+v) v (117926386+3 (-1+v) v (185099599 +288 (-1+v) v (1428851+1267712 (-1+v) \
    v))))))))";

pub const BIL_E: &str = "\
    1+(1-2 v)^2 (1-4 t (1-6 u+6 u^2 ) (-1+v) v )^2";

pub const BIL_F: &str = "\
    (1-2 u) (1-2 v) (4 t (v^2-v) (6 u^2-6 u+1 ) -1 ) (4 t (u^2-u) (6 v^2-6 v+1 )-1 )";

pub const BIL_G: &str = "\
    (1-2 u)^2 (1-4 t (u-1) u (6 v^2-6 v+1 ) )^2+1";

pub const BIL_E2: &str = "\
    -24 t (-1+2 u) v (1-3 v+2 v^2 )";

pub const BIL_F2: &str = "\
    -2 (-1+2 t (1-6 u+6 u^2 ) (1-6 v+6 v^2 ) )";

pub const BIL_G2: &str = "\
    -24 t u (1-3 u+2 u^2 ) (-1+2 v)";

pub const BIL_H1: &str = "\
    4 (-6 t u (1-3 u+2 u^2) (-1+2 v) (1+(1-2 v)^2 (1-4 t (1-6 u+6 u^2) (-1+v) v)^2)+ (-1+2 u) \
    (-1+2 v) (-1+4 t (1-6 u+6 u^2) (-1+v) v) (-1+4 t (-1+u) u (1-6 v+6 v^2)) (-1+2 t (1-6 u +6 \
    u^2) (1-6 v+6 v^2))-6 t (-1+2 u) v (1-3 v+2 v^2) (1+(1-2 u)^2 (1-4 t (-1+u) u (1-6 v+6 \
    v^2))^2))";

pub const BIL_P0: &str = "\
    16 (1-2 u)^2 (1-2 v)^2";

pub const BIL_P1: &str = "\
    -64 (1-2 u)^2 (1-2 v)^2 (1-2 v+2 v^2+u (-2+36 v-36 v^2 )+u^2 (2-36 v+36 v^2 ) )";

pub const BIL_P2: &str = "\
    64 (1-2 u)^2 (1-2 v)^2 (1-8 v+36 v^2-56 v^3+28 v^4-8 u (1-17 v+65 v^2-96 v^3+48 v^4) -8 u^3 \
    (7-96 v+636 v^2-1080 v^3+540 v^4)+4 u^4 (7-96 v+636 v^2-1080 v^3+540 v^4)+4 u^2 (9-130 v+766 \
    v^2-1272 v^3+636 v^4))";

pub const BIL_P3: &str = "\
    -512 (1-2 u)^2 (1-2 v)^2 (v (-1+9 v-28 v^2+44 v^3-36 v^4+12 v^5)+u (-1+20 v-174 v^2 +692 \
    v^3-1306 v^4+1152 v^5-384 v^6)-36 u^5 (1-32 v+278 v^2-1212 v^3+2406 v^4 -2160 v^5 +720 \
    v^6)+12 u^6 (1-32 v+278 v^2-1212 v^3+2406 v^4-2160 v^5+720 v^6)+u^2 (9-174 v +1432 v^2-5852 \
    v^3+11266 v^4-10008 v^5+3336 v^6)-4 u^3 (7-173 v+1463 v^2 -6216 v^3+12198 v^4-10908 v^5+3636 \
    v^6)+2 u^4 (22-653 v+5633 v^2-24396 v^3+ 48288 v^4-43308 v^5+14436 v^6))";
