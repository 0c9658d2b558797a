//! Weighted Dynkin diagrams of the nilpotent orbits of the exceptional
//! algebras, keyed by Bala–Carter label and ordered by orbit dimension.
//! The trailing comment on each row is the orbit dimension.

use crate::rootcore::{Family, SimpleType};

type Row = (&'static str, &'static [u8]);

const G2: &[Row] = &[
    ("0", &[0, 0]),        // 0
    ("A_1", &[1, 0]),      // 6
    ("Ã_1", &[0, 1]),      // 8
    ("G_2(a_1)", &[2, 0]), // 10
    ("G_2", &[2, 2]),      // 12
];

const F4: &[Row] = &[
    ("0", &[0, 0, 0, 0]),        // 0
    ("A_1", &[1, 0, 0, 0]),      // 16
    ("Ã_1", &[0, 0, 0, 1]),      // 22
    ("A_1+Ã_1", &[0, 1, 0, 0]),  // 28
    ("A_2", &[2, 0, 0, 0]),      // 30
    ("Ã_2", &[0, 0, 0, 2]),      // 30
    ("A_2+Ã_1", &[0, 0, 1, 0]),  // 34
    ("B_2", &[2, 0, 0, 1]),      // 36
    ("Ã_2+A_1", &[0, 1, 0, 1]),  // 36
    ("C_3(a_1)", &[1, 0, 1, 0]), // 38
    ("F_4(a_3)", &[0, 2, 0, 0]), // 40
    ("B_3", &[2, 2, 0, 0]),      // 42
    ("C_3", &[1, 0, 1, 2]),      // 42
    ("F_4(a_2)", &[0, 2, 0, 2]), // 44
    ("F_4(a_1)", &[2, 2, 0, 2]), // 46
    ("F_4", &[2, 2, 2, 2]),      // 48
];

const E6: &[Row] = &[
    ("0", &[0, 0, 0, 0, 0, 0]),        // 0
    ("A_1", &[0, 0, 0, 0, 0, 1]),      // 22
    ("2A_1", &[1, 0, 0, 0, 1, 0]),     // 32
    ("3A_1", &[0, 0, 1, 0, 0, 0]),     // 40
    ("A_2", &[0, 0, 0, 0, 0, 2]),      // 42
    ("A_2+A_1", &[1, 0, 0, 0, 1, 1]),  // 46
    ("2A_2", &[2, 0, 0, 0, 2, 0]),     // 48
    ("A_2+2A_1", &[0, 1, 0, 1, 0, 0]), // 50
    ("A_3", &[1, 0, 0, 0, 1, 2]),      // 52
    ("2A_2+A_1", &[1, 0, 1, 0, 1, 0]), // 54
    ("A_3+A_1", &[0, 1, 0, 1, 0, 1]),  // 56
    ("D_4(a_1)", &[0, 0, 2, 0, 0, 0]), // 58
    ("A_4", &[2, 0, 0, 0, 2, 2]),      // 60
    ("D_4", &[0, 0, 2, 0, 0, 2]),      // 60
    ("A_4+A_1", &[1, 1, 0, 1, 1, 1]),  // 62
    ("A_5", &[2, 1, 0, 1, 2, 1]),      // 64
    ("D_5(a_1)", &[1, 1, 0, 1, 1, 2]), // 64
    ("E_6(a_3)", &[2, 0, 2, 0, 2, 0]), // 66
    ("D_5", &[2, 0, 2, 0, 2, 2]),      // 68
    ("E_6(a_1)", &[2, 2, 0, 2, 2, 2]), // 70
    ("E_6", &[2, 2, 2, 2, 2, 2]),      // 72
];

const E7: &[Row] = &[
    ("0", &[0, 0, 0, 0, 0, 0, 0]),            // 0
    ("A_1", &[0, 0, 0, 0, 0, 1, 0]),          // 34
    ("2A_1", &[0, 1, 0, 0, 0, 0, 0]),         // 52
    ("(3A_1)''", &[2, 0, 0, 0, 0, 0, 0]),     // 54
    ("(3A_1)'", &[0, 0, 0, 0, 1, 0, 0]),      // 64
    ("A_2", &[0, 0, 0, 0, 0, 2, 0]),          // 66
    ("4A_1", &[1, 0, 0, 0, 0, 0, 1]),         // 70
    ("A_2+A_1", &[0, 1, 0, 0, 0, 1, 0]),      // 76
    ("A_2+2A_1", &[0, 0, 0, 1, 0, 0, 0]),     // 82
    ("2A_2", &[0, 2, 0, 0, 0, 0, 0]),         // 84
    ("A_2+3A_1", &[0, 0, 0, 0, 0, 0, 2]),     // 84
    ("A_3", &[0, 1, 0, 0, 0, 2, 0]),          // 84
    ("(A_3+A_1)''", &[2, 0, 0, 0, 0, 2, 0]),  // 86
    ("2A_2+A_1", &[0, 1, 0, 0, 1, 0, 0]),     // 90
    ("(A_3+A_1)'", &[0, 0, 0, 1, 0, 1, 0]),   // 92
    ("A_3+2A_1", &[1, 0, 1, 0, 0, 1, 0]),     // 94
    ("D_4(a_1)", &[0, 0, 0, 0, 2, 0, 0]),     // 94
    ("D_4", &[0, 0, 0, 0, 2, 2, 0]),          // 96
    ("D_4(a_1)+A_1", &[1, 0, 0, 0, 1, 0, 1]), // 96
    ("A_3+A_2", &[0, 1, 0, 1, 0, 0, 0]),      // 98
    ("A_3+A_2+A_1", &[0, 0, 2, 0, 0, 0, 0]),  // 100
    ("A_4", &[0, 2, 0, 0, 0, 2, 0]),          // 100
    ("(A_5)''", &[2, 2, 0, 0, 0, 2, 0]),      // 102
    ("D_4+A_1", &[1, 0, 0, 0, 1, 2, 1]),      // 102
    ("A_4+A_1", &[0, 1, 0, 1, 0, 1, 0]),      // 104
    ("A_4+A_2", &[0, 0, 0, 2, 0, 0, 0]),      // 106
    ("D_5(a_1)", &[0, 1, 0, 1, 0, 2, 0]),     // 106
    ("(A_5)'", &[0, 2, 0, 1, 0, 1, 0]),       // 108
    ("A_5+A_1", &[2, 1, 0, 1, 0, 1, 0]),      // 108
    ("D_5(a_1)+A_1", &[0, 0, 2, 0, 0, 2, 0]), // 108
    ("D_6(a_2)", &[2, 0, 1, 0, 1, 0, 1]),     // 110
    ("E_6(a_3)", &[0, 2, 0, 0, 2, 0, 0]),     // 110
    ("D_5", &[0, 2, 0, 0, 2, 2, 0]),          // 112
    ("E_7(a_5)", &[2, 0, 0, 2, 0, 0, 0]),     // 112
    ("A_6", &[0, 2, 0, 2, 0, 0, 0]),          // 114
    ("D_5+A_1", &[0, 1, 1, 0, 1, 2, 1]),      // 114
    ("D_6(a_1)", &[2, 0, 1, 0, 1, 2, 1]),     // 114
    ("E_7(a_4)", &[2, 0, 0, 2, 0, 2, 0]),     // 116
    ("D_6", &[2, 2, 1, 0, 1, 2, 1]),          // 118
    ("E_6(a_1)", &[0, 2, 0, 2, 0, 2, 0]),     // 118
    ("E_6", &[0, 2, 0, 2, 2, 2, 0]),          // 120
    ("E_7(a_3)", &[2, 2, 0, 2, 0, 2, 0]),     // 120
    ("E_7(a_2)", &[2, 0, 2, 0, 2, 2, 2]),     // 122
    ("E_7(a_1)", &[2, 2, 2, 0, 2, 2, 2]),     // 124
    ("E_7", &[2, 2, 2, 2, 2, 2, 2]),          // 126
];

const E8: &[Row] = &[
    ("0", &[0, 0, 0, 0, 0, 0, 0, 0]),            // 0
    ("A_1", &[1, 0, 0, 0, 0, 0, 0, 0]),          // 58
    ("2A_1", &[0, 0, 0, 0, 0, 0, 1, 0]),         // 92
    ("3A_1", &[0, 1, 0, 0, 0, 0, 0, 0]),         // 112
    ("A_2", &[2, 0, 0, 0, 0, 0, 0, 0]),          // 114
    ("4A_1", &[0, 0, 0, 0, 0, 0, 0, 1]),         // 128
    ("A_2+A_1", &[1, 0, 0, 0, 0, 0, 1, 0]),      // 136
    ("A_2+2A_1", &[0, 0, 1, 0, 0, 0, 0, 0]),     // 146
    ("A_3", &[2, 0, 0, 0, 0, 0, 1, 0]),          // 148
    ("A_2+3A_1", &[0, 0, 0, 0, 0, 1, 0, 0]),     // 154
    ("2A_2", &[0, 0, 0, 0, 0, 0, 2, 0]),         // 156
    ("2A_2+A_1", &[0, 1, 0, 0, 0, 0, 1, 0]),     // 162
    ("A_3+A_1", &[1, 0, 1, 0, 0, 0, 0, 0]),      // 164
    ("D_4(a_1)", &[0, 2, 0, 0, 0, 0, 0, 0]),     // 166
    ("2A_2+2A_1", &[0, 0, 0, 1, 0, 0, 0, 0]),    // 168
    ("D_4", &[2, 2, 0, 0, 0, 0, 0, 0]),          // 168
    ("A_3+2A_1", &[1, 0, 0, 0, 0, 1, 0, 0]),     // 172
    ("D_4(a_1)+A_1", &[0, 1, 0, 0, 0, 0, 0, 1]), // 176
    ("A_3+A_2", &[0, 0, 1, 0, 0, 0, 1, 0]),      // 178
    ("A_4", &[2, 0, 0, 0, 0, 0, 2, 0]),          // 180
    ("A_3+A_2+A_1", &[0, 0, 0, 0, 1, 0, 0, 0]),  // 182
    ("D_4(a_1)+A_2", &[0, 0, 0, 0, 0, 0, 0, 2]), // 184
    ("D_4+A_1", &[2, 1, 0, 0, 0, 0, 0, 1]),      // 184
    ("2A_3", &[0, 0, 0, 1, 0, 0, 1, 0]),         // 188
    ("A_4+A_1", &[1, 0, 1, 0, 0, 0, 1, 0]),      // 188
    ("D_5(a_1)", &[2, 0, 1, 0, 0, 0, 1, 0]),     // 190
    ("A_4+2A_1", &[1, 0, 0, 0, 1, 0, 0, 0]),     // 192
    ("A_4+A_2", &[0, 0, 2, 0, 0, 0, 0, 0]),      // 194
    ("A_4+A_2+A_1", &[0, 0, 1, 0, 0, 1, 0, 0]),  // 196
    ("A_5", &[1, 0, 1, 0, 0, 0, 2, 0]),          // 196
    ("D_5(a_1)+A_1", &[2, 0, 0, 0, 1, 0, 0, 0]), // 196
    ("D_4+A_2", &[2, 0, 0, 0, 0, 0, 0, 2]),      // 198
    ("E_6(a_3)", &[0, 2, 0, 0, 0, 0, 2, 0]),     // 198
    ("A_4+A_3", &[0, 1, 0, 0, 1, 0, 0, 0]),      // 200
    ("D_5", &[2, 2, 0, 0, 0, 0, 2, 0]),          // 200
    ("A_5+A_1", &[1, 0, 0, 0, 1, 0, 1, 0]),      // 202
    ("D_5(a_1)+A_2", &[1, 0, 1, 0, 0, 1, 0, 0]), // 202
    ("D_6(a_2)", &[0, 1, 0, 0, 0, 1, 0, 1]),     // 204
    ("E_6(a_3)+A_1", &[0, 1, 0, 1, 0, 0, 1, 0]), // 204
    ("E_7(a_5)", &[0, 0, 1, 0, 1, 0, 0, 0]),     // 206
    ("D_5+A_1", &[2, 1, 0, 1, 0, 0, 1, 0]),      // 208
    ("E_8(a_7)", &[0, 0, 0, 2, 0, 0, 0, 0]),     // 208
    ("A_6", &[0, 0, 2, 0, 0, 0, 2, 0]),          // 210
    ("D_6(a_1)", &[2, 1, 0, 0, 0, 1, 0, 1]),     // 210
    ("A_6+A_1", &[0, 0, 1, 0, 1, 0, 1, 0]),      // 212
    ("E_7(a_4)", &[2, 0, 1, 0, 1, 0, 0, 0]),     // 212
    ("D_5+A_2", &[2, 0, 0, 2, 0, 0, 0, 0]),      // 214
    ("E_6(a_1)", &[2, 0, 2, 0, 0, 0, 2, 0]),     // 214
    ("D_6", &[2, 1, 0, 0, 0, 1, 2, 1]),          // 216
    ("D_7(a_2)", &[1, 0, 1, 0, 1, 0, 1, 0]),     // 216
    ("E_6", &[2, 2, 2, 0, 0, 0, 2, 0]),          // 216
    ("A_7", &[0, 1, 1, 0, 1, 0, 1, 0]),          // 218
    ("E_6(a_1)+A_1", &[2, 0, 1, 0, 1, 0, 1, 0]), // 218
    ("E_7(a_3)", &[2, 0, 1, 0, 1, 0, 2, 0]),     // 220
    ("E_8(b_6)", &[2, 0, 0, 0, 2, 0, 0, 0]),     // 220
    ("D_7(a_1)", &[2, 0, 0, 2, 0, 0, 2, 0]),     // 222
    ("E_6+A_1", &[2, 2, 1, 0, 1, 0, 1, 0]),      // 222
    ("E_7(a_2)", &[2, 2, 0, 1, 0, 1, 0, 1]),     // 224
    ("E_8(a_6)", &[0, 2, 0, 0, 2, 0, 0, 0]),     // 224
    ("D_7", &[1, 0, 1, 1, 0, 1, 2, 1]),          // 226
    ("E_8(b_5)", &[2, 2, 0, 0, 2, 0, 0, 0]),     // 226
    ("E_7(a_1)", &[2, 2, 0, 1, 0, 1, 2, 1]),     // 228
    ("E_8(a_5)", &[0, 2, 0, 0, 2, 0, 2, 0]),     // 228
    ("E_8(b_4)", &[2, 2, 0, 0, 2, 0, 2, 0]),     // 230
    ("E_7", &[2, 2, 2, 1, 0, 1, 2, 1]),          // 232
    ("E_8(a_4)", &[2, 0, 2, 0, 2, 0, 2, 0]),     // 232
    ("E_8(a_3)", &[2, 2, 2, 0, 2, 0, 2, 0]),     // 234
    ("E_8(a_2)", &[2, 2, 0, 2, 0, 2, 2, 2]),     // 236
    ("E_8(a_1)", &[2, 2, 2, 2, 0, 2, 2, 2]),     // 238
    ("E_8", &[2, 2, 2, 2, 2, 2, 2, 2]),          // 240
];

pub(super) fn rows(t: SimpleType) -> Option<&'static [Row]> {
    match (t.family(), t.rank()) {
        (Family::G, 2) => Some(G2),
        (Family::F, 4) => Some(F4),
        (Family::E, 6) => Some(E6),
        (Family::E, 7) => Some(E7),
        (Family::E, 8) => Some(E8),
        _ => None,
    }
}
