//! Frozen coefficient tables for the genus-two invariants.
//!
//! Each entry is (coefficient, exponents) for a monomial in the coefficients
//! c0..c6 of the binary sextic c6 x^6 + ... + c1 x + c0; exponent k applies
//! to c_k. A quintic is the sextic with c6 = 0, i.e. a root at infinity.
//!
//! Igusa invariants of y^2 = f(x):
//!   J2 = A'/8
//!   J4 = (4 J2^2 - B')/96
//!   J6 = (8 J2^3 - 160 J2 J4 - C')/576
//!   J8 = (J2 J6 - J4^2)/4
//!   J10 = D'/4096
//!
//! Liu's invariants, homogeneous of degree 2i in the J's:
//!   I2 = J2
//!   I4 = J2^2 - 24 J4
//!   I12 = -8 J4^3 + 9 J2 J4 J6 - 27 J6^2 - J2^2 J8
//!
//! Erratum in Liu's Prop. 4.3.1(d): the term a0^-20 A2^6 J2^-5 should read
//! a0^-20 A5^6 J2^-5, as in the genus2reduction code. That expression belongs
//! to the reduction-type refinement and is not used here.

/// Igusa-Clebsch A' (degree 2).
pub const A_PRIME: &[(i64, [u8; 7])] = &[
    (-240, [1, 0, 0, 0, 0, 0, 1]),
    (40, [0, 1, 0, 0, 0, 1, 0]),
    (-16, [0, 0, 1, 0, 1, 0, 0]),
    (6, [0, 0, 0, 2, 0, 0, 0]),
];

/// Igusa-Clebsch B' (degree 4).
pub const B_PRIME: &[(i64, [u8; 7])] = &[
    (1620, [2, 0, 0, 0, 0, 0, 2]),
    (-540, [1, 1, 0, 0, 0, 1, 1]),
    (-504, [1, 0, 1, 0, 1, 0, 1]),
    (300, [1, 0, 1, 0, 0, 2, 0]),
    (324, [1, 0, 0, 2, 0, 0, 1]),
    (-180, [1, 0, 0, 1, 1, 1, 0]),
    (48, [1, 0, 0, 0, 3, 0, 0]),
    (300, [0, 2, 0, 0, 1, 0, 1]),
    (-80, [0, 2, 0, 0, 0, 2, 0]),
    (-180, [0, 1, 1, 1, 0, 0, 1]),
    (4, [0, 1, 1, 0, 1, 1, 0]),
    (36, [0, 1, 0, 2, 0, 1, 0]),
    (-12, [0, 1, 0, 1, 2, 0, 0]),
    (48, [0, 0, 3, 0, 0, 0, 1]),
    (-12, [0, 0, 2, 1, 0, 1, 0]),
    (4, [0, 0, 2, 0, 2, 0, 0]),
];

/// Igusa-Clebsch C' (degree 6).
pub const C_PRIME: &[(i64, [u8; 7])] = &[
    (-119880, [3, 0, 0, 0, 0, 0, 3]),
    (59940, [2, 1, 0, 0, 0, 1, 2]),
    (20664, [2, 0, 1, 0, 1, 0, 2]),
    (-18600, [2, 0, 1, 0, 0, 2, 1]),
    (-10044, [2, 0, 0, 2, 0, 0, 2]),
    (3060, [2, 0, 0, 1, 1, 1, 1]),
    (2250, [2, 0, 0, 1, 0, 3, 0]),
    (-96, [2, 0, 0, 0, 3, 0, 1]),
    (-900, [2, 0, 0, 0, 2, 2, 0]),
    (-18600, [1, 2, 0, 0, 1, 0, 2]),
    (-2240, [1, 2, 0, 0, 0, 2, 1]),
    (3060, [1, 1, 1, 1, 0, 0, 2]),
    (3472, [1, 1, 1, 0, 1, 1, 1]),
    (1600, [1, 1, 1, 0, 0, 3, 0]),
    (1818, [1, 1, 0, 2, 0, 1, 1]),
    (-876, [1, 1, 0, 1, 2, 0, 1]),
    (-1860, [1, 1, 0, 1, 1, 2, 0]),
    (616, [1, 1, 0, 0, 3, 1, 0]),
    (-96, [1, 0, 3, 0, 0, 0, 2]),
    (-876, [1, 0, 2, 1, 0, 1, 1]),
    (424, [1, 0, 2, 0, 2, 0, 1]),
    (-640, [1, 0, 2, 0, 1, 2, 0]),
    (-468, [1, 0, 1, 2, 1, 0, 1]),
    (330, [1, 0, 1, 2, 0, 2, 0]),
    (492, [1, 0, 1, 1, 2, 1, 0]),
    (-160, [1, 0, 1, 0, 4, 0, 0]),
    (162, [1, 0, 0, 4, 0, 0, 1]),
    (-198, [1, 0, 0, 3, 1, 1, 0]),
    (60, [1, 0, 0, 2, 3, 0, 0]),
    (2250, [0, 3, 0, 1, 0, 0, 2]),
    (1600, [0, 3, 0, 0, 1, 1, 1]),
    (-320, [0, 3, 0, 0, 0, 3, 0]),
    (-900, [0, 2, 2, 0, 0, 0, 2]),
    (-1860, [0, 2, 1, 1, 0, 1, 1]),
    (-640, [0, 2, 1, 0, 2, 0, 1]),
    (64, [0, 2, 1, 0, 1, 2, 0]),
    (330, [0, 2, 0, 2, 1, 0, 1]),
    (176, [0, 2, 0, 2, 0, 2, 0]),
    (26, [0, 2, 0, 1, 2, 1, 0]),
    (-36, [0, 2, 0, 0, 4, 0, 0]),
    (616, [0, 1, 3, 0, 0, 1, 1]),
    (492, [0, 1, 2, 1, 1, 0, 1]),
    (26, [0, 1, 2, 1, 0, 2, 0]),
    (28, [0, 1, 2, 0, 2, 1, 0]),
    (-198, [0, 1, 1, 3, 0, 0, 1]),
    (-238, [0, 1, 1, 2, 1, 1, 0]),
    (76, [0, 1, 1, 1, 3, 0, 0]),
    (72, [0, 1, 0, 4, 0, 1, 0]),
    (-24, [0, 1, 0, 3, 2, 0, 0]),
    (-160, [0, 0, 4, 0, 1, 0, 1]),
    (-36, [0, 0, 4, 0, 0, 2, 0]),
    (60, [0, 0, 3, 2, 0, 0, 1]),
    (76, [0, 0, 3, 1, 1, 1, 0]),
    (-24, [0, 0, 3, 0, 3, 0, 0]),
    (-24, [0, 0, 2, 3, 0, 1, 0]),
    (8, [0, 0, 2, 2, 2, 0, 0]),
];

/// Binary sextic discriminant D' (degree 10).
pub const D_PRIME: &[(i64, [u8; 7])] = &[
    (-46656, [5, 0, 0, 0, 0, 0, 5]),
    (38880, [4, 1, 0, 0, 0, 1, 4]),
    (62208, [4, 0, 1, 0, 1, 0, 4]),
    (-32400, [4, 0, 1, 0, 0, 2, 3]),
    (34992, [4, 0, 0, 2, 0, 0, 4]),
    (-77760, [4, 0, 0, 1, 1, 1, 3]),
    (27000, [4, 0, 0, 1, 0, 3, 2]),
    (-13824, [4, 0, 0, 0, 3, 0, 3]),
    (43200, [4, 0, 0, 0, 2, 2, 2]),
    (-22500, [4, 0, 0, 0, 1, 4, 1]),
    (3125, [4, 0, 0, 0, 0, 6, 0]),
    (-32400, [3, 2, 0, 0, 1, 0, 4]),
    (540, [3, 2, 0, 0, 0, 2, 3]),
    (-77760, [3, 1, 1, 1, 0, 0, 4]),
    (31968, [3, 1, 1, 0, 1, 1, 3]),
    (-1800, [3, 1, 1, 0, 0, 3, 2]),
    (15552, [3, 1, 0, 2, 0, 1, 3]),
    (46656, [3, 1, 0, 1, 2, 0, 3]),
    (-31320, [3, 1, 0, 1, 1, 2, 2]),
    (2250, [3, 1, 0, 1, 0, 4, 1]),
    (-21888, [3, 1, 0, 0, 3, 1, 2]),
    (15600, [3, 1, 0, 0, 2, 3, 1]),
    (-2500, [3, 1, 0, 0, 1, 5, 0]),
    (-13824, [3, 0, 3, 0, 0, 0, 4]),
    (46656, [3, 0, 2, 1, 0, 1, 3]),
    (-17280, [3, 0, 2, 0, 2, 0, 3]),
    (-6480, [3, 0, 2, 0, 1, 2, 2]),
    (1500, [3, 0, 2, 0, 0, 4, 1]),
    (3888, [3, 0, 1, 2, 1, 0, 3]),
    (-27540, [3, 0, 1, 2, 0, 2, 2]),
    (-3456, [3, 0, 1, 1, 2, 1, 2]),
    (19800, [3, 0, 1, 1, 1, 3, 1]),
    (-3750, [3, 0, 1, 1, 0, 5, 0]),
    (9216, [3, 0, 1, 0, 4, 0, 2]),
    (-10560, [3, 0, 1, 0, 3, 2, 1]),
    (2000, [3, 0, 1, 0, 2, 4, 0]),
    (-8748, [3, 0, 0, 4, 0, 0, 3]),
    (21384, [3, 0, 0, 3, 1, 1, 2]),
    (-1350, [3, 0, 0, 3, 0, 3, 1]),
    (-8640, [3, 0, 0, 2, 3, 0, 2]),
    (-9720, [3, 0, 0, 2, 2, 2, 1]),
    (2250, [3, 0, 0, 2, 1, 4, 0]),
    (6912, [3, 0, 0, 1, 4, 1, 1]),
    (-1600, [3, 0, 0, 1, 3, 3, 0]),
    (-1024, [3, 0, 0, 0, 6, 0, 1]),
    (256, [3, 0, 0, 0, 5, 2, 0]),
    (27000, [2, 3, 0, 1, 0, 0, 4]),
    (-1800, [2, 3, 0, 0, 1, 1, 3]),
    (410, [2, 3, 0, 0, 0, 3, 2]),
    (43200, [2, 2, 2, 0, 0, 0, 4]),
    (-31320, [2, 2, 1, 1, 0, 1, 3]),
    (-6480, [2, 2, 1, 0, 2, 0, 3]),
    (8748, [2, 2, 1, 0, 1, 2, 2]),
    (-1700, [2, 2, 1, 0, 0, 4, 1]),
    (-27540, [2, 2, 0, 2, 1, 0, 3]),
    (15417, [2, 2, 0, 2, 0, 2, 2]),
    (16632, [2, 2, 0, 1, 2, 1, 2]),
    (-12330, [2, 2, 0, 1, 1, 3, 1]),
    (2000, [2, 2, 0, 1, 0, 5, 0]),
    (-192, [2, 2, 0, 0, 4, 0, 2]),
    (248, [2, 2, 0, 0, 3, 2, 1]),
    (-50, [2, 2, 0, 0, 2, 4, 0]),
    (-21888, [2, 1, 3, 0, 0, 1, 3]),
    (-3456, [2, 1, 2, 1, 1, 0, 3]),
    (16632, [2, 1, 2, 1, 0, 2, 2]),
    (15264, [2, 1, 2, 0, 2, 1, 2]),
    (-13040, [2, 1, 2, 0, 1, 3, 1]),
    (2250, [2, 1, 2, 0, 0, 5, 0]),
    (21384, [2, 1, 1, 3, 0, 0, 3]),
    (-22896, [2, 1, 1, 2, 1, 1, 2]),
    (1980, [2, 1, 1, 2, 0, 3, 1]),
    (-5760, [2, 1, 1, 1, 3, 0, 2]),
    (10152, [2, 1, 1, 1, 2, 2, 1]),
    (-2050, [2, 1, 1, 1, 1, 4, 0]),
    (-640, [2, 1, 1, 0, 4, 1, 1]),
    (160, [2, 1, 1, 0, 3, 3, 0]),
    (-6318, [2, 1, 0, 4, 0, 1, 2]),
    (5832, [2, 1, 0, 3, 2, 0, 2]),
    (3942, [2, 1, 0, 3, 1, 2, 1]),
    (-900, [2, 1, 0, 3, 0, 4, 0]),
    (-4464, [2, 1, 0, 2, 3, 1, 1]),
    (1020, [2, 1, 0, 2, 2, 3, 0]),
    (768, [2, 1, 0, 1, 5, 0, 1]),
    (-192, [2, 1, 0, 1, 4, 2, 0]),
    (9216, [2, 0, 4, 0, 1, 0, 3]),
    (-192, [2, 0, 4, 0, 0, 2, 2]),
    (-8640, [2, 0, 3, 2, 0, 0, 3]),
    (-5760, [2, 0, 3, 1, 1, 1, 2]),
    (-120, [2, 0, 3, 1, 0, 3, 1]),
    (-4352, [2, 0, 3, 0, 3, 0, 2]),
    (4816, [2, 0, 3, 0, 2, 2, 1]),
    (-900, [2, 0, 3, 0, 1, 4, 0]),
    (5832, [2, 0, 2, 3, 0, 1, 2]),
    (8208, [2, 0, 2, 2, 2, 0, 2]),
    (-4536, [2, 0, 2, 2, 1, 2, 1]),
    (825, [2, 0, 2, 2, 0, 4, 0]),
    (-2496, [2, 0, 2, 1, 3, 1, 1]),
    (560, [2, 0, 2, 1, 2, 3, 0]),
    (512, [2, 0, 2, 0, 5, 0, 1]),
    (-128, [2, 0, 2, 0, 4, 2, 0]),
    (-4860, [2, 0, 1, 4, 1, 0, 2]),
    (162, [2, 0, 1, 4, 0, 2, 1]),
    (2808, [2, 0, 1, 3, 2, 1, 1]),
    (-630, [2, 0, 1, 3, 1, 3, 0]),
    (-576, [2, 0, 1, 2, 4, 0, 1]),
    (144, [2, 0, 1, 2, 3, 2, 0]),
    (729, [2, 0, 0, 6, 0, 0, 2]),
    (-486, [2, 0, 0, 5, 1, 1, 1]),
    (108, [2, 0, 0, 5, 0, 3, 0]),
    (108, [2, 0, 0, 4, 3, 0, 1]),
    (-27, [2, 0, 0, 4, 2, 2, 0]),
    (-22500, [1, 4, 1, 0, 0, 0, 4]),
    (2250, [1, 4, 0, 1, 0, 1, 3]),
    (1500, [1, 4, 0, 0, 2, 0, 3]),
    (-1700, [1, 4, 0, 0, 1, 2, 2]),
    (320, [1, 4, 0, 0, 0, 4, 1]),
    (15600, [1, 3, 2, 0, 0, 1, 3]),
    (19800, [1, 3, 1, 1, 1, 0, 3]),
    (-12330, [1, 3, 1, 1, 0, 2, 2]),
    (-13040, [1, 3, 1, 0, 2, 1, 2]),
    (9768, [1, 3, 1, 0, 1, 3, 1]),
    (-1600, [1, 3, 1, 0, 0, 5, 0]),
    (-1350, [1, 3, 0, 3, 0, 0, 3]),
    (1980, [1, 3, 0, 2, 1, 1, 2]),
    (-208, [1, 3, 0, 2, 0, 3, 1]),
    (-120, [1, 3, 0, 1, 3, 0, 2]),
    (-682, [1, 3, 0, 1, 2, 2, 1]),
    (160, [1, 3, 0, 1, 1, 4, 0]),
    (144, [1, 3, 0, 0, 4, 1, 1]),
    (-36, [1, 3, 0, 0, 3, 3, 0]),
    (-10560, [1, 2, 3, 0, 1, 0, 3]),
    (248, [1, 2, 3, 0, 0, 2, 2]),
    (-9720, [1, 2, 2, 2, 0, 0, 3]),
    (10152, [1, 2, 2, 1, 1, 1, 2]),
    (-682, [1, 2, 2, 1, 0, 3, 1]),
    (4816, [1, 2, 2, 0, 3, 0, 2]),
    (-5428, [1, 2, 2, 0, 2, 2, 1]),
    (1020, [1, 2, 2, 0, 1, 4, 0]),
    (3942, [1, 2, 1, 3, 0, 1, 2]),
    (-4536, [1, 2, 1, 2, 2, 0, 2]),
    (-2412, [1, 2, 1, 2, 1, 2, 1]),
    (560, [1, 2, 1, 2, 0, 4, 0]),
    (3272, [1, 2, 1, 1, 3, 1, 1]),
    (-746, [1, 2, 1, 1, 2, 3, 0]),
    (-576, [1, 2, 1, 0, 5, 0, 1]),
    (144, [1, 2, 1, 0, 4, 2, 0]),
    (162, [1, 2, 0, 4, 1, 0, 2]),
    (-108, [1, 2, 0, 3, 2, 1, 1]),
    (24, [1, 2, 0, 3, 1, 3, 0]),
    (24, [1, 2, 0, 2, 4, 0, 1]),
    (-6, [1, 2, 0, 2, 3, 2, 0]),
    (6912, [1, 1, 4, 1, 0, 0, 3]),
    (-640, [1, 1, 4, 0, 1, 1, 2]),
    (144, [1, 1, 4, 0, 0, 3, 1]),
    (-4464, [1, 1, 3, 2, 0, 1, 2]),
    (-2496, [1, 1, 3, 1, 2, 0, 2]),
    (3272, [1, 1, 3, 1, 1, 2, 1]),
    (-630, [1, 1, 3, 1, 0, 4, 0]),
    (-96, [1, 1, 3, 0, 3, 1, 1]),
    (24, [1, 1, 3, 0, 2, 3, 0]),
    (2808, [1, 1, 2, 3, 1, 0, 2]),
    (-108, [1, 1, 2, 3, 0, 2, 1]),
    (-1584, [1, 1, 2, 2, 2, 1, 1]),
    (356, [1, 1, 2, 2, 1, 3, 0]),
    (320, [1, 1, 2, 1, 4, 0, 1]),
    (-80, [1, 1, 2, 1, 3, 2, 0]),
    (-486, [1, 1, 1, 5, 0, 0, 2]),
    (324, [1, 1, 1, 4, 1, 1, 1]),
    (-72, [1, 1, 1, 4, 0, 3, 0]),
    (-72, [1, 1, 1, 3, 3, 0, 1]),
    (18, [1, 1, 1, 3, 2, 2, 0]),
    (-1024, [1, 0, 6, 0, 0, 0, 3]),
    (768, [1, 0, 5, 1, 0, 1, 2]),
    (512, [1, 0, 5, 0, 2, 0, 2]),
    (-576, [1, 0, 5, 0, 1, 2, 1]),
    (108, [1, 0, 5, 0, 0, 4, 0]),
    (-576, [1, 0, 4, 2, 1, 0, 2]),
    (24, [1, 0, 4, 2, 0, 2, 1]),
    (320, [1, 0, 4, 1, 2, 1, 1]),
    (-72, [1, 0, 4, 1, 1, 3, 0]),
    (-64, [1, 0, 4, 0, 4, 0, 1]),
    (16, [1, 0, 4, 0, 3, 2, 0]),
    (108, [1, 0, 3, 4, 0, 0, 2]),
    (-72, [1, 0, 3, 3, 1, 1, 1]),
    (16, [1, 0, 3, 3, 0, 3, 0]),
    (16, [1, 0, 3, 2, 3, 0, 1]),
    (-4, [1, 0, 3, 2, 2, 2, 0]),
    (3125, [0, 6, 0, 0, 0, 0, 4]),
    (-2500, [0, 5, 1, 0, 0, 1, 3]),
    (-3750, [0, 5, 0, 1, 1, 0, 3]),
    (2000, [0, 5, 0, 1, 0, 2, 2]),
    (2250, [0, 5, 0, 0, 2, 1, 2]),
    (-1600, [0, 5, 0, 0, 1, 3, 1]),
    (256, [0, 5, 0, 0, 0, 5, 0]),
    (2000, [0, 4, 2, 0, 1, 0, 3]),
    (-50, [0, 4, 2, 0, 0, 2, 2]),
    (2250, [0, 4, 1, 2, 0, 0, 3]),
    (-2050, [0, 4, 1, 1, 1, 1, 2]),
    (160, [0, 4, 1, 1, 0, 3, 1]),
    (-900, [0, 4, 1, 0, 3, 0, 2]),
    (1020, [0, 4, 1, 0, 2, 2, 1]),
    (-192, [0, 4, 1, 0, 1, 4, 0]),
    (-900, [0, 4, 0, 3, 0, 1, 2]),
    (825, [0, 4, 0, 2, 2, 0, 2]),
    (560, [0, 4, 0, 2, 1, 2, 1]),
    (-128, [0, 4, 0, 2, 0, 4, 0]),
    (-630, [0, 4, 0, 1, 3, 1, 1]),
    (144, [0, 4, 0, 1, 2, 3, 0]),
    (108, [0, 4, 0, 0, 5, 0, 1]),
    (-27, [0, 4, 0, 0, 4, 2, 0]),
    (-1600, [0, 3, 3, 1, 0, 0, 3]),
    (160, [0, 3, 3, 0, 1, 1, 2]),
    (-36, [0, 3, 3, 0, 0, 3, 1]),
    (1020, [0, 3, 2, 2, 0, 1, 2]),
    (560, [0, 3, 2, 1, 2, 0, 2]),
    (-746, [0, 3, 2, 1, 1, 2, 1]),
    (144, [0, 3, 2, 1, 0, 4, 0]),
    (24, [0, 3, 2, 0, 3, 1, 1]),
    (-6, [0, 3, 2, 0, 2, 3, 0]),
    (-630, [0, 3, 1, 3, 1, 0, 2]),
    (24, [0, 3, 1, 3, 0, 2, 1]),
    (356, [0, 3, 1, 2, 2, 1, 1]),
    (-80, [0, 3, 1, 2, 1, 3, 0]),
    (-72, [0, 3, 1, 1, 4, 0, 1]),
    (18, [0, 3, 1, 1, 3, 2, 0]),
    (108, [0, 3, 0, 5, 0, 0, 2]),
    (-72, [0, 3, 0, 4, 1, 1, 1]),
    (16, [0, 3, 0, 4, 0, 3, 0]),
    (16, [0, 3, 0, 3, 3, 0, 1]),
    (-4, [0, 3, 0, 3, 2, 2, 0]),
    (256, [0, 2, 5, 0, 0, 0, 3]),
    (-192, [0, 2, 4, 1, 0, 1, 2]),
    (-128, [0, 2, 4, 0, 2, 0, 2]),
    (144, [0, 2, 4, 0, 1, 2, 1]),
    (-27, [0, 2, 4, 0, 0, 4, 0]),
    (144, [0, 2, 3, 2, 1, 0, 2]),
    (-6, [0, 2, 3, 2, 0, 2, 1]),
    (-80, [0, 2, 3, 1, 2, 1, 1]),
    (18, [0, 2, 3, 1, 1, 3, 0]),
    (16, [0, 2, 3, 0, 4, 0, 1]),
    (-4, [0, 2, 3, 0, 3, 2, 0]),
    (-27, [0, 2, 2, 4, 0, 0, 2]),
    (18, [0, 2, 2, 3, 1, 1, 1]),
    (-4, [0, 2, 2, 3, 0, 3, 0]),
    (-4, [0, 2, 2, 2, 3, 0, 1]),
    (1, [0, 2, 2, 2, 2, 2, 0]),
];
